//! Polynomials in the genus variable `y` with exact rational coefficients.
//!
//! These carry chi_y-genera and the limit values `(-y)^n`. The coefficient
//! vector is indexed by degree and never has a trailing zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{format_rational, rat, Rational};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct YPolynomial {
    coeffs: Vec<Rational>,
}

impl YPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        YPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        YPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        YPolynomial::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        YPolynomial::new(vec![c])
    }

    /// The variable `y` itself.
    pub fn y() -> Self {
        YPolynomial::new(vec![rat(0), rat(1)])
    }

    /// `(-y)^n`, the contribution of an `n`-dimensional cell.
    pub fn neg_y_pow(n: u32) -> Self {
        let mut coeffs = vec![rat(0); n as usize + 1];
        coeffs[n as usize] = if n % 2 == 0 { rat(1) } else { rat(-1) };
        YPolynomial::new(coeffs)
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        YPolynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree in `y`; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, degree: usize) -> Rational {
        self.coeffs.get(degree).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn evaluate(&self, y0: &Rational) -> Rational {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * y0 + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return YPolynomial::zero();
        }
        YPolynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Formal derivative with respect to `y`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        YPolynomial::new(coeffs)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = YPolynomial::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `y = -t^2`, producing the coefficient vector of the
    /// resulting polynomial in `t` (index = degree in `t`).
    pub fn substitute_minus_t_squared(&self) -> Vec<Rational> {
        let mut out = vec![rat(0); 2 * self.coeffs.len().max(1) - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
            out[2 * i] = c * sign;
        }
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }
}

impl Add for &YPolynomial {
    type Output = YPolynomial;
    fn add(self, rhs: &YPolynomial) -> YPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coefficient(i) + rhs.coefficient(i));
        }
        YPolynomial::new(coeffs)
    }
}

impl Sub for &YPolynomial {
    type Output = YPolynomial;
    fn sub(self, rhs: &YPolynomial) -> YPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coefficient(i) - rhs.coefficient(i));
        }
        YPolynomial::new(coeffs)
    }
}

impl Mul for &YPolynomial {
    type Output = YPolynomial;
    fn mul(self, rhs: &YPolynomial) -> YPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return YPolynomial::zero();
        }
        let mut coeffs = vec![rat(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        YPolynomial::new(coeffs)
    }
}

impl Neg for &YPolynomial {
    type Output = YPolynomial;
    fn neg(self) -> YPolynomial {
        YPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Renders a dense coefficient vector as `c0 + c1*v + c2*v^2 + ...`,
/// omitting zero terms and unit coefficients.
pub(crate) fn format_poly(coeffs: &[Rational], var: &str) -> String {
    if coeffs.iter().all(Zero::is_zero) {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c < &rat(0);
        let abs = if negative { -c } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let show_coeff = i == 0 || !abs.is_one();
        if show_coeff {
            out.push_str(&format_rational(&abs));
        }
        if i >= 1 {
            if show_coeff {
                out.push('*');
            }
            out.push_str(var);
            if i >= 2 {
                out.push_str(&format!("^{i}"));
            }
        }
    }
    out
}

impl fmt::Display for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(&self.coeffs, "y"))
    }
}
