//! Cyclotomic polynomials and the Moebius function.
//!
//! Denominator factors `theta^w - 1` split as the product of `Phi_d` over
//! the divisors `d` of `w`; pole orders at roots of unity are read off that
//! splitting. `Phi_k` is computed by exact division of `theta^k - 1` by the
//! proper-divisor cyclotomics and memoized behind a read-mostly lock.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use crate::rational::{rat, Rational};
use crate::theta_poly::ThetaPolynomial;

/// Moebius function: 0 on non-squarefree input, otherwise `(-1)^k` for `k`
/// distinct prime factors.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut m = n;
    let mut primes = 0;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if m > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<Rational>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<Rational>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficient vector of `Phi_k` over the rationals (index = theta-degree).
pub fn cyclotomic_coeffs(k: u32) -> Arc<Vec<Rational>> {
    assert!(k >= 1, "cyclotomic index must be positive");
    if let Some(hit) = cyclotomic_cache().read().unwrap().get(&k) {
        return hit.clone();
    }
    let computed = Arc::new(compute_cyclotomic(k));
    let mut cache = cyclotomic_cache().write().unwrap();
    cache.entry(k).or_insert(computed).clone()
}

fn compute_cyclotomic(k: u32) -> Vec<Rational> {
    // theta^k - 1
    let mut poly = vec![rat(0); k as usize + 1];
    poly[0] = rat(-1);
    poly[k as usize] = rat(1);
    for d in divisors(k as u64) {
        if d == k as u64 {
            continue;
        }
        let phi_d = cyclotomic_coeffs(d as u32);
        poly = div_exact_rational(&poly, &phi_d)
            .expect("theta^k - 1 is divisible by every proper-divisor cyclotomic");
    }
    poly
}

/// The k-th cyclotomic polynomial as a theta-polynomial (y-degree 0).
pub fn cyclotomic(k: u32) -> ThetaPolynomial {
    ThetaPolynomial::from_rational_coeffs(&cyclotomic_coeffs(k))
}

/// Exact division of rational-coefficient theta-polynomials by a monic
/// divisor; `None` when the remainder is nonzero.
pub(crate) fn div_exact_rational(num: &[Rational], divisor: &[Rational]) -> Option<Vec<Rational>> {
    let dl = poly_len(divisor);
    let nl = poly_len(num);
    assert!(dl > 0 && divisor[dl - 1] == rat(1), "divisor must be monic");
    if nl == 0 {
        return Some(Vec::new());
    }
    if nl < dl {
        return None;
    }
    let mut rem: Vec<Rational> = num[..nl].to_vec();
    let mut quot = vec![rat(0); nl - dl + 1];
    for i in (dl - 1..nl).rev() {
        let q = std::mem::replace(&mut rem[i], rat(0));
        if !q.is_zero() {
            for (j, b) in divisor.iter().enumerate().take(dl - 1) {
                if !b.is_zero() {
                    rem[i - (dl - 1) + j] -= &q * b;
                }
            }
        }
        quot[i - (dl - 1)] = q;
    }
    if rem.iter().take(dl - 1).all(Zero::is_zero) {
        Some(quot)
    } else {
        None
    }
}

/// Schoolbook product of rational-coefficient theta-polynomials.
pub(crate) fn mul_rational(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (al, bl) = (poly_len(a), poly_len(b));
    if al == 0 || bl == 0 {
        return Vec::new();
    }
    let mut out = vec![rat(0); al + bl - 1];
    for (i, x) in a.iter().enumerate().take(al) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(bl) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_len(p: &[Rational]) -> usize {
    p.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1)
}
