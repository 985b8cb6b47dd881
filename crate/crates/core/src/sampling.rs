//! Seeded generators for randomized verification runs. The seed fully
//! determines every case, so runs are reproducible.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::builders::{grassmannian, product, projective_space, toric_from_fan};
use crate::model::VarietyModel;
use crate::weights::WeightMultiset;

pub fn rng_from_seed(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `count` distinct integers in `[lo, hi]`, in random order.
pub fn distinct_ints(rng: &mut StdRng, count: usize, lo: i64, hi: i64) -> Vec<i64> {
    assert!(hi - lo + 1 >= count as i64, "range too small");
    let mut pool: Vec<i64> = (lo..=hi).collect();
    pool.shuffle(rng);
    pool.truncate(count);
    pool
}

/// A random weight multiset with weights in `[-max_abs, max_abs]` minus
/// zero and multiplicities up to `max_mult`. May be empty.
pub fn random_weight_multiset(rng: &mut StdRng, max_abs: i64, max_mult: u32) -> WeightMultiset {
    let distinct = rng.gen_range(0..=5usize);
    let mut pairs = Vec::new();
    let mut used = std::collections::BTreeSet::new();
    for _ in 0..distinct {
        let mut w = 0;
        while w == 0 || used.contains(&w) {
            w = rng.gen_range(-max_abs..=max_abs);
        }
        used.insert(w);
        pairs.push((w, rng.gen_range(1..=max_mult)));
    }
    WeightMultiset::from_pairs(&pairs)
}

/// The fan of the Hirzebruch surface F_1.
pub fn hirzebruch_fan() -> (Vec<Vec<i64>>, Vec<Vec<usize>>) {
    (
        vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![1, -1]],
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
    )
}

/// A generic cocharacter for the given fan, found by seeded rejection.
pub fn random_generic_cocharacter(
    rng: &mut StdRng,
    rays: &[Vec<i64>],
    max_cones: &[Vec<usize>],
    max_abs: i64,
) -> Vec<i64> {
    let d = rays[0].len();
    loop {
        let candidate: Vec<i64> = (0..d).map(|_| rng.gen_range(-max_abs..=max_abs)).collect();
        if toric_from_fan(rays, max_cones, &candidate).is_ok() {
            return candidate;
        }
    }
}

/// A random isolated model from the builder families (projective spaces up
/// to dimension 6, G(2,4), G(2,5), products, the Hirzebruch surface), with
/// a random linearization. Weight ranges stay moderate so exact arithmetic
/// stays fast even over hundreds of cases.
pub fn random_isolated_model(rng: &mut StdRng) -> VarietyModel {
    match rng.gen_range(0..6u8) {
        0 | 1 => {
            let n = rng.gen_range(1..=6u32);
            let a = distinct_ints(rng, n as usize + 1, -9, 9);
            projective_space(n, &a).expect("distinct linearization")
        }
        2 => {
            let a = distinct_ints(rng, 4, -9, 9);
            grassmannian(2, 4, &a).expect("distinct linearization")
        }
        3 => {
            let a = distinct_ints(rng, 5, -7, 7);
            grassmannian(2, 5, &a).expect("distinct linearization")
        }
        4 => {
            let (rays, cones) = hirzebruch_fan();
            let cochar = random_generic_cocharacter(rng, &rays, &cones, 6);
            toric_from_fan(&rays, &cones, &cochar).expect("generic cocharacter")
        }
        _ => {
            let a = distinct_ints(rng, 2, -9, 9);
            let left = projective_space(1, &a).expect("distinct");
            let right = if rng.gen_bool(0.5) {
                let b = distinct_ints(rng, 2, -9, 9);
                projective_space(1, &b).expect("distinct")
            } else {
                let b = distinct_ints(rng, 3, -9, 9);
                projective_space(2, &b).expect("distinct")
            };
            product(&left, &right)
        }
    }
}
