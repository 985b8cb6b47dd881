//! The inverse problem: recovering a weight multiset from its localized
//! class.
//!
//! For a multiset `{w -> n_w}` write
//! `Delta = prod_w ((theta^w + y)/(theta^w - 1))^{n_w}`. Two readings of
//! `Delta` pin the multiplicities down:
//!
//! * the pole order of `Delta|_{y=0}` at a primitive k-th root of unity is
//!   `sum_{w>0, k|w} (n_{-w} + n_w)`;
//! * the coefficient of `theta^k` (k > 0) in the series of
//!   `(d/dy Delta)|_{y=-1}` is `sum_{w>0, w|k} (n_{-w} - n_w)`.
//!
//! A descending divisor recursion inverts the first, Moebius inversion the
//! second, and the two solve for `n_w` and `n_{-w}`. Every recovered result
//! is verified by rebuilding `Delta`; any inconsistency is an error, never a
//! silent wrong answer.

use std::collections::BTreeMap;

use crate::cyclotomic::{divisors, mobius};
use crate::errors::RecoveryError;
use crate::localized::LocalizedClass;
use crate::rational::{format_rational, rat, to_integer, Rational};
use crate::weights::WeightMultiset;
use crate::ypoly::YPolynomial;

/// Pole orders of `Delta|_{y=0}` at primitive roots of unity:
/// `orders[k]` is the order at a primitive k-th root (absent = regular).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PoleProfile {
    pub orders: BTreeMap<u32, u32>,
}

impl PoleProfile {
    pub fn w_max(&self) -> u32 {
        self.orders.keys().next_back().copied().unwrap_or(0)
    }

    pub fn order(&self, k: u32) -> u32 {
        self.orders.get(&k).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }
}

/// Series coefficients `B_1..B_{w_max}` of `(d/dy Delta)|_{y=-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesProfile {
    pub coeffs: Vec<Rational>,
}

impl SeriesProfile {
    /// `B_k` for `1 <= k <= w_max`.
    pub fn coefficient(&self, k: u32) -> &Rational {
        &self.coeffs[k as usize - 1]
    }
}

/// `Delta` of a weight multiset: the product of single-weight factors.
/// The empty multiset gives the constant 1.
pub fn delta_from_weights(ws: &WeightMultiset) -> LocalizedClass {
    let mut product = LocalizedClass::one();
    for (&w, &m) in ws.entries() {
        product = &product * &LocalizedClass::weight_factor(w).pow(m);
    }
    product
}

/// Reads the pole orders of `d|_{y=0}` at roots of unity. After the `y = 0`
/// substitution the class is reduced, so the surviving cyclotomic
/// multiplicities are exactly the pole orders.
pub fn pole_profile(d: &LocalizedClass) -> PoleProfile {
    let at_zero = d.substitute_y(&rat(0));
    PoleProfile {
        orders: at_zero.cyclotomic_multiplicities().clone(),
    }
}

/// Expands `(d/dy d)|_{y=-1}` at `theta = 0` and returns coefficients
/// `B_1..B_{w_max}`.
pub fn series_profile(d: &LocalizedClass, w_max: u32) -> Result<SeriesProfile, RecoveryError> {
    assert!(w_max >= 1);
    let derived = d.derivative_y().substitute_y(&rat(-1));
    let series = derived.expand_series(w_max as usize)?;
    Ok(SeriesProfile {
        coeffs: series.coefficients()[1..].to_vec(),
    })
}

/// Recovers the weight multiset of a genuine `Delta` class.
///
/// Stages: pole profile, series profile, the descending recursion
/// `s_k = A_k - sum_{j >= 2} s_{jk}` for `n_k + n_{-k}`, Moebius inversion
/// `d_k = sum_{e|k} mu(k/e) B_e` for `n_{-k} - n_k`, then the solve and a
/// final round-trip verification.
pub fn recover_weights(d: &LocalizedClass) -> Result<WeightMultiset, RecoveryError> {
    let profile = pole_profile(d);
    if profile.is_empty() {
        let ws = WeightMultiset::empty();
        return verify_round_trip(d, ws);
    }
    let w_max = profile.w_max();
    let series = series_profile(d, w_max)?;

    // s_k = n_k + n_{-k}, from pole orders by descending divisor recursion.
    let mut s = vec![0i64; w_max as usize + 1];
    for k in (1..=w_max).rev() {
        let mut acc = profile.order(k) as i64;
        let mut multiple = 2 * k;
        while multiple <= w_max {
            acc -= s[multiple as usize];
            multiple += k;
        }
        if acc < 0 {
            return Err(RecoveryError::InconsistentDelta {
                stage: "pole-recursion",
                detail: format!("n_{k} + n_-{k} computed as {acc} < 0"),
            });
        }
        s[k as usize] = acc;
    }

    // d_k = n_{-k} - n_k, by Moebius inversion of the series coefficients.
    let mut diff = vec![0i64; w_max as usize + 1];
    for k in 1..=w_max {
        let mut acc = rat(0);
        for e in divisors(k as u64) {
            let mu = mobius((k as u64) / e);
            if mu != 0 {
                acc += series.coefficient(e as u32) * rat(mu);
            }
        }
        let value = to_integer(&acc).ok_or_else(|| RecoveryError::InconsistentDelta {
            stage: "moebius-inversion",
            detail: format!(
                "n_-{k} - n_{k} computed as the non-integer {}",
                format_rational(&acc)
            ),
        })?;
        diff[k as usize] = i64::try_from(&value).map_err(|_| RecoveryError::InconsistentDelta {
            stage: "moebius-inversion",
            detail: format!("n_-{k} - n_{k} out of range"),
        })?;
    }

    let mut pairs = Vec::new();
    for k in 1..=w_max as i64 {
        let (s_k, d_k) = (s[k as usize], diff[k as usize]);
        if (s_k - d_k) % 2 != 0 || s_k - d_k < 0 || s_k + d_k < 0 {
            return Err(RecoveryError::InconsistentDelta {
                stage: "solve",
                detail: format!("s_{k} = {s_k}, d_{k} = {d_k} do not split into multiplicities"),
            });
        }
        let n_pos = (s_k - d_k) / 2;
        let n_neg = (s_k + d_k) / 2;
        if n_pos > 0 {
            pairs.push((k, n_pos as u32));
        }
        if n_neg > 0 {
            pairs.push((-k, n_neg as u32));
        }
    }
    verify_round_trip(d, WeightMultiset::from_pairs(&pairs))
}

fn verify_round_trip(
    d: &LocalizedClass,
    ws: WeightMultiset,
) -> Result<WeightMultiset, RecoveryError> {
    let rebuilt = delta_from_weights(&ws);
    if &rebuilt == d {
        Ok(ws)
    } else {
        Err(RecoveryError::InconsistentDelta {
            stage: "round-trip",
            detail: format!("recovered {ws} rebuilds to {rebuilt}, input was {d}"),
        })
    }
}

/// The image `Delta -> prod_{w>0, k|w} (-y)^{n_w}` a linear extension would
/// have to take on a single weight multiset.
pub fn k_image(ws: &WeightMultiset, k: u32) -> YPolynomial {
    YPolynomial::neg_y_pow(ws.subgroup_restrict(k).n_plus())
}

/// Result of checking the non-linearity witness: a vanishing integer
/// combination of `Delta` classes whose component-wise `k = 2` images do
/// not vanish.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KontrReport {
    pub combination_is_zero: bool,
    pub k2_image: YPolynomial,
    pub k2_image_is_nonzero: bool,
}

impl KontrReport {
    pub fn passed(&self) -> bool {
        self.combination_is_zero && self.k2_image_is_nonzero
    }
}

/// Checks the relation
/// `Delta(1,4) - Delta(1,3) + Delta(2,2) + Delta(3,4) - 2 Delta(2,4) = 0`
/// and that the same combination of `k = 2` images is `-1 - 2y - y^2`,
/// proving the image map has no linear extension.
pub fn kontr_relation_check() -> KontrReport {
    let terms: [(i64, [i64; 2]); 5] = [
        (1, [1, 4]),
        (-1, [1, 3]),
        (1, [2, 2]),
        (1, [3, 4]),
        (-2, [2, 4]),
    ];
    let mut combination = LocalizedClass::zero();
    let mut image = YPolynomial::zero();
    for (coefficient, weights) in terms {
        let ws = WeightMultiset::from_weights(&[weights[0], weights[1]]);
        let scaled = delta_from_weights(&ws)
            .scale_y(&YPolynomial::constant(rat(coefficient)));
        combination = &combination + &scaled;
        image = &image + &k_image(&ws, 2).scale(&rat(coefficient));
    }
    KontrReport {
        combination_is_zero: combination.is_zero(),
        k2_image: image.clone(),
        k2_image_is_nonzero: !image.is_zero(),
    }
}
