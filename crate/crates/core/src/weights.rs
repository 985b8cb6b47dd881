//! Tangent/normal weight data of a fixed component: a multiset of nonzero
//! integer weights.

use std::collections::BTreeMap;
use std::fmt;

/// `{w -> n_w}` with `w != 0` and `n_w >= 1`. The total multiplicity is the
/// rank of the bundle; `n_plus`/`n_minus` count the positive and negative
/// parts, which are the cell codimension data of the decomposition.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightMultiset {
    entries: BTreeMap<i64, u32>,
}

impl WeightMultiset {
    pub fn empty() -> Self {
        WeightMultiset::default()
    }

    /// Builds from `(weight, multiplicity)` pairs, merging repeats.
    /// Panics on weight 0 or multiplicity 0; validated input paths reject
    /// those before reaching here.
    pub fn from_pairs(pairs: &[(i64, u32)]) -> Self {
        let mut entries = BTreeMap::new();
        for &(w, m) in pairs {
            assert!(w != 0, "weight 0 is not allowed");
            assert!(m >= 1, "multiplicity must be positive");
            *entries.entry(w).or_insert(0) += m;
        }
        WeightMultiset { entries }
    }

    /// Collects single weights (with repetitions) into a multiset.
    pub fn from_weights(weights: &[i64]) -> Self {
        let pairs: Vec<(i64, u32)> = weights.iter().map(|&w| (w, 1)).collect();
        WeightMultiset::from_pairs(&pairs)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &BTreeMap<i64, u32> {
        &self.entries
    }

    pub fn multiplicity(&self, w: i64) -> u32 {
        self.entries.get(&w).copied().unwrap_or(0)
    }

    /// Rank: total multiplicity.
    pub fn total(&self) -> u32 {
        self.entries.values().sum()
    }

    /// Dimension of the positive part, i.e. of the plus-cell fiber.
    pub fn n_plus(&self) -> u32 {
        self.entries
            .iter()
            .filter(|(&w, _)| w > 0)
            .map(|(_, &m)| m)
            .sum()
    }

    /// Dimension of the negative part.
    pub fn n_minus(&self) -> u32 {
        self.entries
            .iter()
            .filter(|(&w, _)| w < 0)
            .map(|(_, &m)| m)
            .sum()
    }

    /// Restriction to the order-`k` subgroup: keeps exactly the weights
    /// divisible by `k`. `k = 1` is the identity.
    pub fn subgroup_restrict(&self, k: u32) -> Self {
        assert!(k >= 1);
        let entries = self
            .entries
            .iter()
            .filter(|(&w, _)| w % k as i64 == 0)
            .map(|(&w, &m)| (w, m))
            .collect();
        WeightMultiset { entries }
    }

    /// The multiset with every weight negated (the opposite action).
    pub fn negated(&self) -> Self {
        let entries = self.entries.iter().map(|(&w, &m)| (-w, m)).collect();
        WeightMultiset { entries }
    }

    /// Multiset union (disjoint sum of representations).
    pub fn union(&self, other: &WeightMultiset) -> Self {
        let mut entries = self.entries.clone();
        for (&w, &m) in &other.entries {
            *entries.entry(w).or_insert(0) += m;
        }
        WeightMultiset { entries }
    }

    /// Containment as multisets.
    pub fn is_subset_of(&self, other: &WeightMultiset) -> bool {
        self.entries
            .iter()
            .all(|(&w, &m)| other.multiplicity(w) >= m)
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}: {m}")?;
        }
        write!(f, "}}")
    }
}
