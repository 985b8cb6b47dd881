//! Localized classes: rational functions in `theta` with `y`-polynomial
//! coefficients, kept in structured form.
//!
//! A value is `theta^e * N(theta, y) / prod_k Phi_k(theta)^{a_k}` where the
//! `Phi_k` are cyclotomic polynomials. Constructors take denominators as
//! products of `theta^w - 1` (the shape the Euler-class factors arrive in)
//! and split them into cyclotomics; that splitting is what makes pole-order
//! bookkeeping at roots of unity a map lookup. Canonical form means the
//! numerator is nonzero-constant-or-higher at `theta = 0` and shares no
//! cyclotomic factor with the denominator, so structural equality is value
//! equality. Everything is immutable and exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::cyclotomic::{cyclotomic_coeffs, divisors, mul_rational};
use crate::errors::AlgebraError;
use crate::rational::{rat, Rational};
use crate::theta_poly::{format_theta_rational, ThetaPolynomial};
use crate::ypoly::YPolynomial;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalizedClass {
    numerator: ThetaPolynomial,
    theta_shift: i64,
    /// Cyclotomic index -> multiplicity.
    denominator: BTreeMap<u32, u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LimitDirection {
    ToZero,
    ToInfinity,
}

impl fmt::Display for LimitDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitDirection::ToZero => write!(f, "theta -> 0"),
            LimitDirection::ToInfinity => write!(f, "theta -> infinity"),
        }
    }
}

impl LocalizedClass {
    pub fn zero() -> Self {
        LocalizedClass {
            numerator: ThetaPolynomial::zero(),
            theta_shift: 0,
            denominator: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LocalizedClass::constant(YPolynomial::one())
    }

    pub fn constant(c: YPolynomial) -> Self {
        LocalizedClass {
            numerator: ThetaPolynomial::constant(c),
            theta_shift: 0,
            denominator: BTreeMap::new(),
        }
        .canonicalized()
    }

    /// Builds `theta^shift * numerator / prod (theta^w - 1)^m` from the
    /// weight-factored denominator and reduces to canonical form.
    pub fn from_parts(
        numerator: ThetaPolynomial,
        theta_shift: i64,
        denominator_factors: &[(u32, u32)],
    ) -> Self {
        let mut denominator = BTreeMap::new();
        for &(w, mult) in denominator_factors {
            assert!(w >= 1, "denominator factors require positive weights");
            if mult == 0 {
                continue;
            }
            for d in divisors(w as u64) {
                *denominator.entry(d as u32).or_insert(0) += mult;
            }
        }
        LocalizedClass {
            numerator,
            theta_shift,
            denominator,
        }
        .canonicalized()
    }

    /// The single-weight factor `(theta^w + y) / (theta^w - 1)`. Negative
    /// weights are normalized through
    /// `(theta^-m + y)/(theta^-m - 1) = -(1 + y*theta^m)/(theta^m - 1)`.
    pub fn weight_factor(w: i64) -> Self {
        assert!(w != 0, "weight 0 has no Euler factor");
        if w > 0 {
            LocalizedClass::from_parts(
                ThetaPolynomial::theta_pow_plus_y(w as usize),
                0,
                &[(w as u32, 1)],
            )
        } else {
            let m = (-w) as usize;
            LocalizedClass::from_parts(
                -&ThetaPolynomial::one_plus_y_theta_pow(m),
                0,
                &[(m as u32, 1)],
            )
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn numerator(&self) -> &ThetaPolynomial {
        &self.numerator
    }

    pub fn theta_shift(&self) -> i64 {
        self.theta_shift
    }

    /// Denominator as cyclotomic multiplicities; this is the reduced
    /// bookkeeping the pole analysis reads.
    pub fn cyclotomic_multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.denominator
    }

    /// Regroups the cyclotomic denominator into `(theta^w - 1)^m` factors.
    /// `None` when cancellation has left a product of cyclotomics that no
    /// such regrouping represents.
    pub fn denominator_weight_factors(&self) -> Option<Vec<(u32, u32)>> {
        let mut rem = self.denominator.clone();
        let mut out = Vec::new();
        while let Some((&k, &mult)) = rem.iter().next_back() {
            for d in divisors(k as u64) {
                let d = d as u32;
                let have = rem.get(&d).copied().unwrap_or(0);
                if have < mult {
                    return None;
                }
                if have == mult {
                    rem.remove(&d);
                } else {
                    rem.insert(d, have - mult);
                }
            }
            out.push((k, mult));
        }
        out.reverse();
        Some(out)
    }

    /// The reduction step: pulls powers of `theta` out of the numerator into
    /// the global shift and cancels every cyclotomic factor shared between
    /// numerator and denominator. Idempotent; all public constructors and
    /// arithmetic already return canonical values.
    pub fn canonicalize(&self) -> Self {
        self.clone().canonicalized()
    }

    fn canonicalized(mut self) -> Self {
        if self.numerator.is_zero() {
            return LocalizedClass::zero();
        }
        let v = self.numerator.valuation();
        if v > 0 {
            self.theta_shift += v as i64;
            self.numerator = self.numerator.shift_down(v);
        }
        let keys: Vec<u32> = self.denominator.keys().copied().collect();
        for k in keys {
            let phi = cyclotomic_coeffs(k);
            while self.denominator.get(&k).copied().unwrap_or(0) > 0 {
                match self.numerator.div_exact_monic(&phi) {
                    Some(q) => {
                        self.numerator = q;
                        let m = self.denominator.get_mut(&k).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.denominator.remove(&k);
                        }
                    }
                    None => break,
                }
            }
        }
        self
    }

    /// Exact sum over a least common structured denominator.
    pub fn sum<'a, I>(items: I) -> Self
    where
        I: IntoIterator<Item = &'a LocalizedClass>,
    {
        let terms: Vec<&LocalizedClass> = items.into_iter().filter(|c| !c.is_zero()).collect();
        if terms.is_empty() {
            return LocalizedClass::zero();
        }
        if terms.len() == 1 {
            return terms[0].clone();
        }
        let mut common: BTreeMap<u32, u32> = BTreeMap::new();
        for t in &terms {
            for (&k, &m) in &t.denominator {
                let e = common.entry(k).or_insert(0);
                *e = (*e).max(m);
            }
        }
        let min_shift = terms.iter().map(|t| t.theta_shift).min().unwrap();
        let mut numerator = ThetaPolynomial::zero();
        for t in &terms {
            let mut cofactor = vec![rat(1)];
            for (&k, &m) in &common {
                let deficit = m - t.denominator.get(&k).copied().unwrap_or(0);
                let phi = cyclotomic_coeffs(k);
                for _ in 0..deficit {
                    cofactor = mul_rational(&cofactor, &phi);
                }
            }
            let lifted = t
                .numerator
                .mul_rational_poly(&cofactor)
                .shift_up((t.theta_shift - min_shift) as usize);
            numerator = &numerator + &lifted;
        }
        LocalizedClass {
            numerator,
            theta_shift: min_shift,
            denominator: common,
        }
        .canonicalized()
    }

    /// Multiplies every `y`-coefficient by a polynomial in `y` (used to put
    /// the `chi_y(F)` factor onto an Euler-class product).
    pub fn scale_y(&self, s: &YPolynomial) -> Self {
        LocalizedClass {
            numerator: self.numerator.scale_y(s),
            theta_shift: self.theta_shift,
            denominator: self.denominator.clone(),
        }
        .canonicalized()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = LocalizedClass::one();
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

    /// Partial derivative in `y`. The denominator carries no `y`, so only
    /// the numerator is differentiated.
    pub fn derivative_y(&self) -> Self {
        LocalizedClass {
            numerator: self.numerator.derivative_y(),
            theta_shift: self.theta_shift,
            denominator: self.denominator.clone(),
        }
        .canonicalized()
    }

    /// Evaluates every `y`-coefficient at `y = y0`.
    pub fn substitute_y(&self, y0: &Rational) -> Self {
        LocalizedClass {
            numerator: self.numerator.substitute_y(y0),
            theta_shift: self.theta_shift,
            denominator: self.denominator.clone(),
        }
        .canonicalized()
    }

    /// Exact evaluation at `theta = t0`, a polynomial in `y`.
    pub fn evaluate_theta(&self, t0: &Rational) -> Result<YPolynomial, AlgebraError> {
        if self.is_zero() {
            return Ok(YPolynomial::zero());
        }
        if t0.is_zero() {
            if self.theta_shift < 0 {
                return Err(AlgebraError::ZeroTheta);
            }
            return Ok(self.value_at_zero());
        }
        let mut den = rat(1);
        for (&k, &m) in &self.denominator {
            let v = eval_rational_poly(&cyclotomic_coeffs(k), t0);
            if v.is_zero() {
                return Err(AlgebraError::PoleAtTheta {
                    theta: t0.clone(),
                    cyclotomic_index: k,
                });
            }
            den *= pow_rational(&v, m as i64);
        }
        let scale = pow_rational(t0, self.theta_shift) / den;
        Ok(self.numerator.evaluate_theta(t0).scale(&scale))
    }

    /// Exact limit at `theta -> 0` or `theta -> infinity`. Exists exactly
    /// when the valuation (resp. degree) condition holds; a failure reports
    /// divergence rather than guessing.
    pub fn limit_theta(&self, direction: LimitDirection) -> Result<YPolynomial, AlgebraError> {
        if self.is_zero() {
            return Ok(YPolynomial::zero());
        }
        match direction {
            LimitDirection::ToZero => {
                if self.theta_shift < 0 {
                    return Err(AlgebraError::DivergesAtLimit { direction });
                }
                if self.theta_shift > 0 {
                    return Ok(YPolynomial::zero());
                }
                Ok(self.value_at_zero())
            }
            LimitDirection::ToInfinity => {
                let num_deg = self.numerator.degree() as i64 + self.theta_shift;
                let den_deg: i64 = self
                    .denominator
                    .iter()
                    .map(|(&k, &m)| (cyclotomic_coeffs(k).len() as i64 - 1) * m as i64)
                    .sum();
                if num_deg > den_deg {
                    return Err(AlgebraError::DivergesAtLimit { direction });
                }
                if num_deg < den_deg {
                    return Ok(YPolynomial::zero());
                }
                // Every denominator factor is monic.
                Ok(self.numerator.leading_coefficient())
            }
        }
    }

    fn value_at_zero(&self) -> YPolynomial {
        debug_assert!(self.theta_shift >= 0);
        if self.theta_shift > 0 {
            return YPolynomial::zero();
        }
        let mut den = rat(1);
        for (&k, &m) in &self.denominator {
            let c0 = cyclotomic_coeffs(k)[0].clone();
            den *= pow_rational(&c0, m as i64);
        }
        self.numerator.coefficient(0).scale(&(rat(1) / den))
    }

    /// Taylor coefficients at `theta = 0` through degree `truncation`.
    /// Requires a `y`-free class (substitute first) that is regular at 0.
    pub fn expand_series(&self, truncation: usize) -> Result<PowerSeries, AlgebraError> {
        if !self.numerator.is_y_constant() {
            return Err(AlgebraError::YDependent);
        }
        if self.is_zero() {
            return Ok(PowerSeries::new(vec![rat(0); truncation + 1]));
        }
        if self.theta_shift < 0 {
            return Err(AlgebraError::PoleAtZero);
        }
        let mut den = vec![rat(1)];
        for (&k, &m) in &self.denominator {
            let phi = cyclotomic_coeffs(k);
            for _ in 0..m {
                den = mul_rational(&den, &phi);
                den.truncate(truncation + 1);
            }
        }
        let inv = invert_series(&den, truncation);
        let num: Vec<Rational> = (0..=truncation.min(self.numerator.degree()))
            .map(|i| self.numerator.coefficient(i).coefficient(0))
            .collect();
        let mut prod = mul_rational(&num, &inv);
        prod.truncate(truncation + 1);
        prod.resize(truncation + 1, rat(0));
        let shift = self.theta_shift as usize;
        let mut coeffs = vec![rat(0); truncation + 1];
        for (i, c) in prod.into_iter().enumerate() {
            if i + shift <= truncation {
                coeffs[i + shift] = c;
            }
        }
        Ok(PowerSeries::new(coeffs))
    }

    /// The constant value when the class is free of `theta`, else `None`.
    /// Values are kept canonical, so this is a shape test.
    pub fn as_theta_constant(&self) -> Option<YPolynomial> {
        if self.is_zero() {
            return Some(YPolynomial::zero());
        }
        if self.denominator.is_empty() && self.theta_shift == 0 && self.numerator.degree() == 0 {
            Some(self.numerator.coefficient(0))
        } else {
            None
        }
    }
}

impl Add for &LocalizedClass {
    type Output = LocalizedClass;
    fn add(self, rhs: &LocalizedClass) -> LocalizedClass {
        LocalizedClass::sum([self, rhs])
    }
}

impl Sub for &LocalizedClass {
    type Output = LocalizedClass;
    fn sub(self, rhs: &LocalizedClass) -> LocalizedClass {
        self + &(-rhs)
    }
}

impl Mul for &LocalizedClass {
    type Output = LocalizedClass;
    fn mul(self, rhs: &LocalizedClass) -> LocalizedClass {
        if self.is_zero() || rhs.is_zero() {
            return LocalizedClass::zero();
        }
        let mut denominator = self.denominator.clone();
        for (&k, &m) in &rhs.denominator {
            *denominator.entry(k).or_insert(0) += m;
        }
        LocalizedClass {
            numerator: &self.numerator * &rhs.numerator,
            theta_shift: self.theta_shift + rhs.theta_shift,
            denominator,
        }
        .canonicalized()
    }
}

impl Neg for &LocalizedClass {
    type Output = LocalizedClass;
    fn neg(self) -> LocalizedClass {
        LocalizedClass {
            numerator: -&self.numerator,
            theta_shift: self.theta_shift,
            denominator: self.denominator.clone(),
        }
    }
}

impl fmt::Display for LocalizedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut prefix = String::new();
        match self.theta_shift {
            0 => {}
            1 => prefix.push_str("theta * "),
            e => prefix.push_str(&format!("theta^{e} * ")),
        }
        let plain = self.denominator.is_empty() && self.theta_shift == 0;
        let num = if plain {
            format!("{}", self.numerator)
        } else {
            format!("({})", self.numerator)
        };
        write!(f, "{prefix}{num}")?;
        if self.denominator.is_empty() {
            return Ok(());
        }
        write!(f, " / ")?;
        match self.denominator_weight_factors() {
            Some(factors) => {
                for (i, (w, m)) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    let base = if *w == 1 {
                        "(theta - 1)".to_string()
                    } else {
                        format!("(theta^{w} - 1)")
                    };
                    if *m == 1 {
                        write!(f, "{base}")?;
                    } else {
                        write!(f, "{base}^{m}")?;
                    }
                }
            }
            None => {
                for (i, (&k, &m)) in self.denominator.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    let base = format!("({})", format_theta_rational(&cyclotomic_coeffs(k)));
                    if m == 1 {
                        write!(f, "{base}")?;
                    } else {
                        write!(f, "{base}^{m}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Truncated power series in `theta` with exact rational coefficients.
/// The truncation order is explicit: coefficients run over degrees
/// `0..=truncation_order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least degree 0");
        PowerSeries { coeffs }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// Sum of the truncated series at a point.
    pub fn partial_sum_at(&self, t0: &Rational) -> Rational {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * t0 + c;
        }
        acc
    }
}

fn eval_rational_poly(coeffs: &[Rational], t0: &Rational) -> Rational {
    let mut acc = rat(0);
    for c in coeffs.iter().rev() {
        acc = acc * t0 + c;
    }
    acc
}

fn pow_rational(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return rat(1);
    }
    let mut acc = rat(1);
    let mut b = base.clone();
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Coefficients of `1/d` as a power series through `truncation`, for `d`
/// with nonzero constant term.
fn invert_series(d: &[Rational], truncation: usize) -> Vec<Rational> {
    let d0 = d[0].clone();
    assert!(!d0.is_zero(), "series inversion needs a unit constant term");
    let mut inv = Vec::with_capacity(truncation + 1);
    inv.push(rat(1) / &d0);
    for n in 1..=truncation {
        let mut acc = rat(0);
        for j in 1..=n.min(d.len() - 1) {
            acc += &d[j] * &inv[n - j];
        }
        inv.push(-acc / &d0);
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn geometric_pole(w: usize) -> LocalizedClass {
        // 1 / (theta^w - 1)
        LocalizedClass::from_parts(ThetaPolynomial::one(), 0, &[(w as u32, 1)])
    }

    #[test]
    fn visible_common_factor_cancels() {
        // (theta - 1)(theta + y) / (theta - 1) -> theta + y
        let num = &ThetaPolynomial::from_rational_coeffs(&[rat(-1), rat(1)])
            * &ThetaPolynomial::theta_pow_plus_y(1);
        let c = LocalizedClass::from_parts(num, 0, &[(1, 1)]);
        assert!(c.cyclotomic_multiplicities().is_empty());
        assert_eq!(c.numerator(), &ThetaPolynomial::theta_pow_plus_y(1));
    }

    #[test]
    fn delta_of_opposite_weights_is_already_reduced() {
        // -(theta + y)(1 + y*theta) / (theta - 1)^2 stays put: the numerator
        // evaluates to (1 + y)^2 at theta = 1.
        let w1 = LocalizedClass::weight_factor(1);
        let wm1 = LocalizedClass::weight_factor(-1);
        let delta = &w1 * &wm1;
        assert_eq!(delta.cyclotomic_multiplicities().get(&1), Some(&2));
        assert_eq!(delta.theta_shift(), 0);
        assert_eq!(delta.numerator().degree(), 2);
        assert_eq!(delta, delta.canonicalize());
    }

    #[test]
    fn projective_line_sum_collapses_to_constant() {
        // ((theta + y) - (1 + y*theta)) / (theta - 1) -> 1 - y
        let diff = &ThetaPolynomial::theta_pow_plus_y(1) - &ThetaPolynomial::one_plus_y_theta_pow(1);
        let c = LocalizedClass::from_parts(diff, 0, &[(1, 1)]);
        assert_eq!(
            c.as_theta_constant(),
            Some(YPolynomial::from_integers(&[1, -1]))
        );
    }

    #[test]
    fn add_of_projective_line_contributions() {
        let p0 = LocalizedClass::weight_factor(1);
        let pinf = LocalizedClass::weight_factor(-1);
        let total = &p0 + &pinf;
        assert_eq!(
            total.as_theta_constant(),
            Some(YPolynomial::from_integers(&[1, -1]))
        );
    }

    #[test]
    fn add_cancels_with_negation() {
        let x = LocalizedClass::weight_factor(3);
        let sum = &x + &(-&x);
        assert!(sum.is_zero());
        assert_eq!(sum, LocalizedClass::zero());
    }

    #[test]
    fn product_merges_weight_factors() {
        let a = LocalizedClass::weight_factor(1);
        let b = LocalizedClass::weight_factor(4);
        let prod = &a * &b;
        let direct = LocalizedClass::from_parts(
            &ThetaPolynomial::theta_pow_plus_y(1) * &ThetaPolynomial::theta_pow_plus_y(4),
            0,
            &[(1, 1), (4, 1)],
        );
        assert_eq!(prod, direct);
        assert_eq!(
            prod.denominator_weight_factors(),
            Some(vec![(1, 1), (4, 1)])
        );
    }

    #[test]
    fn derivative_of_linear_numerator() {
        // d/dy (theta + y)/(theta - 1) = 1/(theta - 1)
        let c = LocalizedClass::weight_factor(1).derivative_y();
        assert_eq!(c, geometric_pole(1));
    }

    #[test]
    fn derivative_then_substitute_gives_log_derivative_sum() {
        // d/dy Delta({1,4}) at y = -1 equals 1/(theta-1) + 1/(theta^4-1)
        let delta = &LocalizedClass::weight_factor(1) * &LocalizedClass::weight_factor(4);
        let lhs = delta.derivative_y().substitute_y(&rat(-1));
        let rhs = &geometric_pole(1) + &geometric_pole(4);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_y_examples() {
        // (theta + y)/(theta - 1) at y = 0 -> theta/(theta - 1)
        let c = LocalizedClass::weight_factor(1).substitute_y(&rat(0));
        assert_eq!(c.theta_shift(), 1);
        assert_eq!(c.numerator(), &ThetaPolynomial::one());
        assert_eq!(c.cyclotomic_multiplicities().get(&1), Some(&1));

        // Delta({1, -1}) at y = 0 -> -theta/(theta - 1)^2
        let delta = &LocalizedClass::weight_factor(1) * &LocalizedClass::weight_factor(-1);
        let at0 = delta.substitute_y(&rat(0));
        assert_eq!(at0.theta_shift(), 1);
        assert_eq!(
            at0.numerator(),
            &ThetaPolynomial::constant(YPolynomial::from_integers(&[-1]))
        );
        assert_eq!(at0.cyclotomic_multiplicities().get(&1), Some(&2));

        // Delta at y = -1 is the constant 1 for any weight multiset.
        let big = &delta * &LocalizedClass::weight_factor(6);
        assert_eq!(
            big.substitute_y(&rat(-1)).as_theta_constant(),
            Some(YPolynomial::one())
        );
    }

    #[test]
    fn evaluate_theta_values_and_poles() {
        let c = LocalizedClass::weight_factor(1);
        assert_eq!(
            c.evaluate_theta(&rat(2)).unwrap(),
            YPolynomial::from_integers(&[2, 1])
        );
        match c.evaluate_theta(&rat(1)) {
            Err(AlgebraError::PoleAtTheta { .. }) => {}
            other => panic!("expected pole at theta = 1, got {other:?}"),
        }
    }

    #[test]
    fn evaluate_theta_delta_one_four_at_half() {
        // ((1/2 + y)(1/16 + y)) / ((1/2 - 1)(1/16 - 1)) = 32/15 y^2 + 6/5 y + 1/15
        let delta = &LocalizedClass::weight_factor(1) * &LocalizedClass::weight_factor(4);
        let v = delta.evaluate_theta(&ratio(1, 2)).unwrap();
        assert_eq!(
            v,
            YPolynomial::new(vec![ratio(1, 15), ratio(6, 5), ratio(32, 15)])
        );
        // Cross-check through an independent route: evaluate numerator and
        // denominator separately at y in {0, 1, 2}.
        for y0 in [rat(0), rat(1), rat(2)] {
            let expected = (ratio(1, 2) + &y0) * (ratio(1, 16) + &y0)
                / ((ratio(1, 2) - rat(1)) * (ratio(1, 16) - rat(1)));
            assert_eq!(v.evaluate(&y0), expected);
        }
    }

    #[test]
    fn limits_of_weight_factors() {
        let plus = LocalizedClass::weight_factor(1);
        assert_eq!(
            plus.limit_theta(LimitDirection::ToZero).unwrap(),
            YPolynomial::from_integers(&[0, -1])
        );
        assert_eq!(
            plus.limit_theta(LimitDirection::ToInfinity).unwrap(),
            YPolynomial::one()
        );
        let minus = LocalizedClass::weight_factor(-1);
        assert_eq!(
            minus.limit_theta(LimitDirection::ToZero).unwrap(),
            YPolynomial::one()
        );
        assert_eq!(
            minus.limit_theta(LimitDirection::ToInfinity).unwrap(),
            YPolynomial::from_integers(&[0, -1])
        );
    }

    #[test]
    fn limit_of_constant_class() {
        let c = LocalizedClass::constant(YPolynomial::from_integers(&[1, -1]));
        for dir in [LimitDirection::ToZero, LimitDirection::ToInfinity] {
            assert_eq!(
                c.limit_theta(dir).unwrap(),
                YPolynomial::from_integers(&[1, -1])
            );
        }
    }

    #[test]
    fn diverging_limit_is_reported() {
        // theta^2 / (theta - 1) diverges at infinity.
        let c = LocalizedClass::from_parts(ThetaPolynomial::theta_pow(2), 0, &[(1, 1)]);
        assert!(matches!(
            c.limit_theta(LimitDirection::ToInfinity),
            Err(AlgebraError::DivergesAtLimit { .. })
        ));
        // 1 / theta diverges at zero.
        let d = LocalizedClass::from_parts(ThetaPolynomial::one(), -1, &[]);
        assert!(matches!(
            d.limit_theta(LimitDirection::ToZero),
            Err(AlgebraError::DivergesAtLimit { .. })
        ));
    }

    #[test]
    fn series_of_geometric_poles() {
        // 1/(theta - 1) = -1 - theta - theta^2 - ...
        let s = geometric_pole(1).expand_series(3).unwrap();
        assert_eq!(s.coefficients(), vec![rat(-1); 4]);

        // 1/(theta-1) + 1/(theta^4-1)
        let c = &geometric_pole(1) + &geometric_pole(4);
        let s = c.expand_series(4).unwrap();
        assert_eq!(
            s.coefficients(),
            vec![rat(-2), rat(-1), rat(-1), rat(-1), rat(-2)]
        );

        // theta/(1 - theta) = theta + theta^2 + ...
        let c = LocalizedClass::from_parts(
            -&ThetaPolynomial::theta_pow(1),
            0,
            &[(1, 1)],
        );
        let s = c.expand_series(2).unwrap();
        assert_eq!(s.coefficients(), vec![rat(0), rat(1), rat(1)]);
    }

    #[test]
    fn series_rejects_y_dependence_and_poles_at_zero() {
        assert!(matches!(
            LocalizedClass::weight_factor(1).expand_series(2),
            Err(AlgebraError::YDependent)
        ));
        let d = LocalizedClass::from_parts(ThetaPolynomial::one(), -2, &[]);
        assert!(matches!(d.expand_series(2), Err(AlgebraError::PoleAtZero)));
    }

    #[test]
    fn theta_constant_detection() {
        let c = LocalizedClass::constant(YPolynomial::from_integers(&[1, -1]));
        assert_eq!(
            c.as_theta_constant(),
            Some(YPolynomial::from_integers(&[1, -1]))
        );
        assert_eq!(LocalizedClass::weight_factor(1).as_theta_constant(), None);
        // Reduction happens at construction: ((1-y)(theta-1))/(theta-1).
        let num = ThetaPolynomial::from_rational_coeffs(&[rat(-1), rat(1)])
            .scale_y(&YPolynomial::from_integers(&[1, -1]));
        let c = LocalizedClass::from_parts(num, 0, &[(1, 1)]);
        assert_eq!(
            c.as_theta_constant(),
            Some(YPolynomial::from_integers(&[1, -1]))
        );
    }

    #[test]
    fn display_factored_form() {
        assert_eq!(
            LocalizedClass::weight_factor(1).to_string(),
            "(theta + y) / (theta - 1)"
        );
        let delta = &LocalizedClass::weight_factor(1) * &LocalizedClass::weight_factor(-1);
        assert_eq!(
            delta.to_string(),
            "(-y*theta^2 - (1 + y^2)*theta - y) / (theta - 1)^2"
        );
        assert_eq!(LocalizedClass::zero().to_string(), "0");
    }

    #[test]
    fn evaluation_commutes_with_sum() {
        let a = LocalizedClass::weight_factor(2);
        let b = LocalizedClass::weight_factor(-3);
        let t0 = ratio(1, 2);
        let lhs = (&a + &b).evaluate_theta(&t0).unwrap();
        let rhs = &a.evaluate_theta(&t0).unwrap() + &b.evaluate_theta(&t0).unwrap();
        assert_eq!(lhs, rhs);
    }
}
