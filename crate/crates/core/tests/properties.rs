//! Property tests for the algebraic identities the engine is built on.

use proptest::prelude::*;
use rand::Rng;

use chiy_core::builders::{product, projective_space, toric_from_fan};
use chiy_core::localization::{
    bb_genus, contribution, euler_characteristic, limits_report, minus_genus,
    poincare_polynomial, subgroup_genus, verify_main_theorem,
};
use chiy_core::model::{GkmPoint, GkmPointSet};
use chiy_core::rational::{rat, ratio, Rational};
use chiy_core::recovery::delta_from_weights;
use chiy_core::sampling::{
    distinct_ints, hirzebruch_fan, random_generic_cocharacter, random_isolated_model,
    random_weight_multiset, rng_from_seed,
};
use chiy_core::{LimitDirection, LocalizedClass, WeightMultiset, YPolynomial};

fn arb_ypoly() -> impl Strategy<Value = YPolynomial> {
    prop::collection::vec(-3i64..=3, 0..3).prop_map(|v| YPolynomial::from_integers(&v))
}

fn arb_weights() -> impl Strategy<Value = WeightMultiset> {
    prop::collection::btree_map(
        (-4i64..=4).prop_filter("nonzero weight", |w| *w != 0),
        1u32..=2,
        0..3,
    )
    .prop_map(|m| {
        let pairs: Vec<(i64, u32)> = m.into_iter().collect();
        WeightMultiset::from_pairs(&pairs)
    })
}

/// Small localized classes: scaled weight-factor products. Enough shape to
/// exercise common denominators, shifts, and cancellation.
fn arb_class() -> impl Strategy<Value = LocalizedClass> {
    (arb_weights(), arb_ypoly(), any::<bool>()).prop_map(|(ws, scale, negate)| {
        let c = delta_from_weights(&ws).scale_y(&scale);
        if negate {
            -&c
        } else {
            c
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes(a in arb_class(), b in arb_class()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_distributes(a in arb_class(), b in arb_class(), c in arb_class()) {
        let lhs = &a * &(&b + &c);
        let rhs = &(&a * &b) + &(&a * &c);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_inverse_cancels(a in arb_class()) {
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn canonical_forms_of_equal_values_are_identical(ws in arb_weights(), p in arb_ypoly()) {
        // Build the same value along two routes: as one product, and as a
        // product of singletons times a scalar.
        let direct = delta_from_weights(&ws).scale_y(&p);
        let mut stepwise = LocalizedClass::constant(p);
        for (&w, &m) in ws.entries() {
            for _ in 0..m {
                stepwise = &stepwise * &LocalizedClass::weight_factor(w);
            }
        }
        prop_assert_eq!(direct, stepwise);
    }

    #[test]
    fn evaluation_commutes_with_addition(a in arb_class(), b in arb_class()) {
        let t0 = ratio(1, 3);
        let lhs = (&a + &b).evaluate_theta(&t0).unwrap();
        let rhs = &a.evaluate_theta(&t0).unwrap() + &b.evaluate_theta(&t0).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_commutes_with_multiplication(a in arb_class(), b in arb_class()) {
        let t0 = rat(2);
        let lhs = (&a * &b).evaluate_theta(&t0).unwrap();
        let rhs = &a.evaluate_theta(&t0).unwrap() * &b.evaluate_theta(&t0).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sign_counts_add_to_total(ws in arb_weights()) {
        prop_assert_eq!(ws.n_plus() + ws.n_minus(), ws.total());
    }

    #[test]
    fn restriction_is_contained_and_monotone(ws in arb_weights(), k in 1u32..5, l in 1u32..4) {
        let r = ws.subgroup_restrict(k);
        prop_assert!(r.is_subset_of(&ws));
        prop_assert_eq!(r.subgroup_restrict(k), r.clone());
        prop_assert!(ws.subgroup_restrict(k * l).is_subset_of(&r));
    }

    #[test]
    fn delta_is_multiplicative(a in arb_weights(), b in arb_weights()) {
        let lhs = delta_from_weights(&a.union(&b));
        let rhs = &delta_from_weights(&a) * &delta_from_weights(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_limits_match_cell_exponents(ws in arb_weights()) {
        let d = delta_from_weights(&ws);
        prop_assert_eq!(
            d.limit_theta(LimitDirection::ToZero).unwrap(),
            YPolynomial::neg_y_pow(ws.n_plus())
        );
        prop_assert_eq!(
            d.limit_theta(LimitDirection::ToInfinity).unwrap(),
            YPolynomial::neg_y_pow(ws.n_minus())
        );
    }
}

#[test]
fn limit_is_the_trend_of_evaluations() {
    // (theta + y)/(theta - 1) evaluated at theta = 2^-m approaches the
    // theta -> 0 limit -y; per-degree distances strictly decrease.
    let c = LocalizedClass::weight_factor(1);
    let limit = c.limit_theta(LimitDirection::ToZero).unwrap();
    let mut previous: Option<Vec<Rational>> = None;
    for m in 1..=4 {
        let t0 = ratio(1, 1 << m);
        let value = c.evaluate_theta(&t0).unwrap();
        let diffs: Vec<Rational> = (0..=1)
            .map(|i| {
                let d = value.coefficient(i) - limit.coefficient(i);
                if d < rat(0) {
                    -d
                } else {
                    d
                }
            })
            .collect();
        if let Some(prev) = &previous {
            for (before, after) in prev.iter().zip(&diffs) {
                assert!(after < before, "distance must strictly decrease");
            }
        }
        previous = Some(diffs);
    }
}

#[test]
fn truncated_series_approximates_evaluation_with_geometric_tail() {
    // For sums of geometric poles sum n_w/(theta^w - 1) the series
    // coefficients are bounded by the total multiplicity, so the tail after
    // degree K at theta0 = 1/10 is at most total * theta0^(K+1)/(1-theta0).
    let mut rng = rng_from_seed(11);
    let theta0 = ratio(1, 10);
    for _ in 0..20 {
        let mut ws = random_weight_multiset(&mut rng, 8, 3);
        if ws.is_empty() {
            ws = WeightMultiset::from_pairs(&[(2, 1)]);
        }
        let c = delta_from_weights(&ws).derivative_y().substitute_y(&rat(-1));
        let exact = c.evaluate_theta(&theta0).unwrap();
        assert!(exact.is_constant());
        let exact = exact.coefficient(0);
        for truncation in [3usize, 6, 9] {
            let series = c.expand_series(truncation).unwrap();
            let approx = series.partial_sum_at(&theta0);
            let mut err = exact.clone() - approx;
            if err < rat(0) {
                err = -err;
            }
            let mut pow = rat(1);
            for _ in 0..=truncation {
                pow *= &theta0;
            }
            let bound = rat(ws.total() as i64) * pow / (rat(1) - &theta0);
            assert!(err <= bound, "tail {err} exceeds geometric bound {bound}");
        }
    }
}

#[test]
fn localization_identity_on_random_models() {
    let mut rng = rng_from_seed(20260810);
    for case in 0..40 {
        let m = random_isolated_model(&mut rng);
        let report = verify_main_theorem(&m);
        assert!(report.all_passed(), "case {case} on {}: {report:?}", m.name);
    }
}

#[test]
fn contribution_sum_is_order_independent() {
    let mut rng = rng_from_seed(4242);
    let m = random_isolated_model(&mut rng);
    let contributions: Vec<LocalizedClass> = m.components.iter().map(contribution).collect();
    let forward = LocalizedClass::sum(&contributions);
    let reversed = LocalizedClass::sum(contributions.iter().rev());
    assert_eq!(forward, reversed);
}

#[test]
fn genus_is_invariant_under_linearization_permutations() {
    let base = [0i64, 2, 5, -3];
    let reference = bb_genus(&projective_space(3, &base).unwrap());
    let permutations = [
        [2i64, 0, 5, -3],
        [5, -3, 0, 2],
        [-3, 5, 2, 0],
    ];
    for a in &permutations {
        let m = projective_space(3, a).unwrap();
        assert_eq!(bb_genus(&m), reference);
        assert!(verify_main_theorem(&m).all_passed());
    }
}

#[test]
fn negating_the_cocharacter_swaps_the_decomposition() {
    let (rays, cones) = hirzebruch_fan();
    let mut rng = rng_from_seed(99);
    for _ in 0..5 {
        let cochar = random_generic_cocharacter(&mut rng, &rays, &cones, 6);
        let flipped: Vec<i64> = cochar.iter().map(|c| -c).collect();
        let m = toric_from_fan(&rays, &cones, &cochar).unwrap();
        let m_flipped = toric_from_fan(&rays, &cones, &flipped).unwrap();
        for (a, b) in m.components.iter().zip(&m_flipped.components) {
            assert_eq!(a.normal_weights.negated(), b.normal_weights);
            assert_eq!(a.n_plus(), b.n_minus());
            assert_eq!(a.n_minus(), b.n_plus());
        }
        // Both decompositions compute the same genus.
        assert_eq!(bb_genus(&m), bb_genus(&m_flipped));
        assert_eq!(bb_genus(&m), minus_genus(&m));
    }
}

#[test]
fn genus_is_independent_of_the_cocharacter() {
    let (rays, cones) = hirzebruch_fan();
    let mut rng = rng_from_seed(7);
    let mut seen = Vec::new();
    for _ in 0..10 {
        let cochar = random_generic_cocharacter(&mut rng, &rays, &cones, 8);
        let m = toric_from_fan(&rays, &cones, &cochar).unwrap();
        seen.push(bb_genus(&m));
    }
    for g in &seen {
        assert_eq!(g, &seen[0]);
    }
}

#[test]
fn poincare_at_one_is_the_euler_characteristic() {
    let mut rng = rng_from_seed(5);
    for _ in 0..10 {
        let m = random_isolated_model(&mut rng);
        let p = poincare_polynomial(&m).unwrap();
        assert_eq!(rat(p.evaluate_at_one() as i64), euler_characteristic(&m));
    }
}

#[test]
fn genus_is_multiplicative_over_products() {
    let mut rng = rng_from_seed(31);
    for _ in 0..8 {
        let a = distinct_ints(&mut rng, 3, -9, 9);
        let b = distinct_ints(&mut rng, 4, -9, 9);
        let m1 = projective_space(2, &a).unwrap();
        let m2 = projective_space(3, &b).unwrap();
        let prod = product(&m1, &m2);
        assert_eq!(bb_genus(&prod), &bb_genus(&m1) * &bb_genus(&m2));
    }
}

#[test]
fn subgroup_genus_at_minus_one_counts_fixed_points() {
    let mut rng = rng_from_seed(13);
    for _ in 0..10 {
        let m = random_isolated_model(&mut rng);
        let expected: Rational = m
            .components
            .iter()
            .map(|c| c.chi_y.evaluate(&rat(-1)))
            .fold(rat(0), |acc, v| acc + v);
        for k in 1..=6 {
            assert_eq!(subgroup_genus(&m, k).evaluate(&rat(-1)), expected);
        }
    }
}

#[test]
fn limits_identity_per_component_on_random_models() {
    let mut rng = rng_from_seed(77);
    for _ in 0..10 {
        let m = random_isolated_model(&mut rng);
        // limits_report verifies each row against (-y)^{n+-} * chi_y(F)
        // symbolically and errors on mismatch.
        let rows = limits_report(&m, false).unwrap();
        assert_eq!(rows.len(), m.components.len());
    }
}

#[test]
fn gkm_reduction_preserves_counts_and_dimension() {
    let mut rng = rng_from_seed(64);
    for _ in 0..10 {
        let n = rng.gen_range(2..=4usize);
        let a = distinct_ints(&mut rng, n + 1, -9, 9);
        let points = (0..=n)
            .map(|i| GkmPoint {
                id: format!("p{i}"),
                multiweights: (0..=n)
                    .filter(|&j| j != i)
                    .map(|j| {
                        let mut v = vec![0i64; n + 1];
                        v[j] = 1;
                        v[i] = -1;
                        v
                    })
                    .collect(),
            })
            .collect();
        let g = GkmPointSet {
            rank: (n + 1) as u32,
            points,
            cocharacter: a.clone(),
        };
        let m = g.reduce().unwrap();
        assert_eq!(m.components.len(), n + 1);
        assert_eq!(m.ambient_dim as usize, n);
        // Pairings reproduce the projective-space builder.
        let direct = projective_space(n as u32, &a).unwrap();
        for (c, d) in m.components.iter().zip(&direct.components) {
            assert_eq!(c.normal_weights, d.normal_weights);
        }
    }
}
