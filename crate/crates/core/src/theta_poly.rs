//! Polynomials in the equivariant variable `theta` whose coefficients are
//! polynomials in `y`.
//!
//! `theta` stands for the exponentiated equivariant parameter; every
//! fixed-point contribution is a ratio of these. Division here is only ever
//! needed by monic divisors with constant-in-`y` coefficients (powers of
//! `theta` and cyclotomic polynomials), so that is all we implement.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{format_rational, rat, Rational};
use crate::ypoly::YPolynomial;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ThetaPolynomial {
    coeffs: Vec<YPolynomial>,
}

impl ThetaPolynomial {
    pub fn new(mut coeffs: Vec<YPolynomial>) -> Self {
        while coeffs.last().is_some_and(YPolynomial::is_zero) {
            coeffs.pop();
        }
        ThetaPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        ThetaPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ThetaPolynomial::constant(YPolynomial::one())
    }

    pub fn constant(c: YPolynomial) -> Self {
        ThetaPolynomial::new(vec![c])
    }

    /// `theta^k`.
    pub fn theta_pow(k: usize) -> Self {
        let mut coeffs = vec![YPolynomial::zero(); k + 1];
        coeffs[k] = YPolynomial::one();
        ThetaPolynomial::new(coeffs)
    }

    /// Lifts a polynomial in `theta` with rational coefficients.
    pub fn from_rational_coeffs(coeffs: &[Rational]) -> Self {
        ThetaPolynomial::new(
            coeffs
                .iter()
                .map(|c| YPolynomial::constant(c.clone()))
                .collect(),
        )
    }

    /// `theta^w + y` for `w >= 1`, the positive-weight numerator factor.
    pub fn theta_pow_plus_y(w: usize) -> Self {
        let mut coeffs = vec![YPolynomial::zero(); w + 1];
        coeffs[0] = YPolynomial::y();
        coeffs[w] = YPolynomial::one();
        ThetaPolynomial::new(coeffs)
    }

    /// `1 + y*theta^w` for `w >= 1`, the normalized negative-weight factor.
    pub fn one_plus_y_theta_pow(w: usize) -> Self {
        let mut coeffs = vec![YPolynomial::zero(); w + 1];
        coeffs[0] = YPolynomial::one();
        coeffs[w] = YPolynomial::y();
        ThetaPolynomial::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `theta`; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Order of vanishing at `theta = 0`; 0 for the zero polynomial.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[YPolynomial] {
        &self.coeffs
    }

    pub fn coefficient(&self, degree: usize) -> YPolynomial {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    pub fn leading_coefficient(&self) -> YPolynomial {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Largest degree in `y` over all coefficients.
    pub fn y_degree(&self) -> usize {
        self.coeffs.iter().map(YPolynomial::degree).max().unwrap_or(0)
    }

    pub fn is_y_constant(&self) -> bool {
        self.coeffs.iter().all(YPolynomial::is_constant)
    }

    /// Drops the first `k` coefficients, i.e. exact division by `theta^k`.
    /// Callers must ensure `valuation() >= k`.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.is_zero() || self.valuation() >= k);
        ThetaPolynomial::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Multiplication by `theta^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return ThetaPolynomial::zero();
        }
        let mut coeffs = vec![YPolynomial::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ThetaPolynomial::new(coeffs)
    }

    pub fn scale_y(&self, s: &YPolynomial) -> Self {
        if s.is_zero() {
            return ThetaPolynomial::zero();
        }
        ThetaPolynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Coefficientwise derivative in `y`.
    pub fn derivative_y(&self) -> Self {
        ThetaPolynomial::new(self.coeffs.iter().map(YPolynomial::derivative).collect())
    }

    /// Evaluates every coefficient at `y = y0`.
    pub fn substitute_y(&self, y0: &Rational) -> Self {
        ThetaPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| YPolynomial::constant(c.evaluate(y0)))
                .collect(),
        )
    }

    /// Evaluates at `theta = t0`, leaving a polynomial in `y`.
    pub fn evaluate_theta(&self, t0: &Rational) -> YPolynomial {
        let mut acc = YPolynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(t0) + c;
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = ThetaPolynomial::one();
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

    /// Multiplies by a polynomial in `theta` with rational coefficients.
    pub fn mul_rational_poly(&self, other: &[Rational]) -> Self {
        if self.is_zero() || other.iter().all(Zero::is_zero) {
            return ThetaPolynomial::zero();
        }
        let mut coeffs = vec![YPolynomial::zero(); self.coeffs.len() + other.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &a.scale(b);
            }
        }
        ThetaPolynomial::new(coeffs)
    }

    /// Exact division by a monic polynomial in `theta` with rational
    /// coefficients. Returns `None` when the remainder is nonzero.
    pub fn div_exact_monic(&self, divisor: &[Rational]) -> Option<ThetaPolynomial> {
        assert!(
            divisor.last().is_some_and(One::is_one),
            "divisor must be monic"
        );
        let d = divisor.len() - 1;
        if self.is_zero() {
            return Some(ThetaPolynomial::zero());
        }
        if self.coeffs.len() <= d {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![YPolynomial::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = std::mem::take(&mut rem[i]);
            if !q.is_zero() {
                for (j, b) in divisor.iter().enumerate().take(d) {
                    if !b.is_zero() {
                        rem[i - d + j] = &rem[i - d + j] - &q.scale(b);
                    }
                }
            }
            quot[i - d] = q;
        }
        if rem.iter().take(d).all(YPolynomial::is_zero) {
            Some(ThetaPolynomial::new(quot))
        } else {
            None
        }
    }
}

impl Add for &ThetaPolynomial {
    type Output = ThetaPolynomial;
    fn add(self, rhs: &ThetaPolynomial) -> ThetaPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coefficient(i) + &rhs.coefficient(i));
        }
        ThetaPolynomial::new(coeffs)
    }
}

impl Sub for &ThetaPolynomial {
    type Output = ThetaPolynomial;
    fn sub(self, rhs: &ThetaPolynomial) -> ThetaPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coefficient(i) - &rhs.coefficient(i));
        }
        ThetaPolynomial::new(coeffs)
    }
}

impl Mul for &ThetaPolynomial {
    type Output = ThetaPolynomial;
    fn mul(self, rhs: &ThetaPolynomial) -> ThetaPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ThetaPolynomial::zero();
        }
        let mut coeffs = vec![YPolynomial::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        ThetaPolynomial::new(coeffs)
    }
}

impl Neg for &ThetaPolynomial {
    type Output = ThetaPolynomial;
    fn neg(self) -> ThetaPolynomial {
        ThetaPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for ThetaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest theta-degree first, mirroring how the factors are
        // usually written.
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign_negative, abs) = single_term_sign(c);
            if first {
                if sign_negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign_negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let body = render_coefficient(&abs, i);
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

/// Splits a leading sign off a coefficient when every nonzero term is
/// negative; mixed-sign coefficients keep their signs inside.
fn single_term_sign(c: &YPolynomial) -> (bool, YPolynomial) {
    let negative = !c.is_zero()
        && c.coefficients()
            .iter()
            .filter(|r| !r.is_zero())
            .all(|r| r < &rat(0));
    if negative {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

fn render_coefficient(c: &YPolynomial, theta_deg: usize) -> String {
    let theta = match theta_deg {
        0 => String::new(),
        1 => "theta".to_string(),
        d => format!("theta^{d}"),
    };
    if theta.is_empty() {
        return format!("{c}");
    }
    if c.is_one() {
        return theta;
    }
    let monomial = c.coefficients().iter().filter(|r| !r.is_zero()).count() == 1;
    if monomial {
        format!("{c}*{theta}")
    } else {
        format!("({c})*{theta}")
    }
}

pub(crate) use crate::ypoly::format_poly;

/// Renders a rational-coefficient polynomial in `theta` (used for
/// denominator factors).
pub(crate) fn format_theta_rational(coeffs: &[Rational]) -> String {
    format_poly(coeffs, "theta")
}

#[allow(dead_code)]
fn format_rational_hook(r: &Rational) -> String {
    format_rational(r)
}
