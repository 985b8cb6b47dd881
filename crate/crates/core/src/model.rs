//! The fixed-point presentation of a variety with a C*-action, and the
//! reduction of multi-weight torus data to a single C* via a cocharacter.

use std::collections::BTreeSet;
use std::fmt;


use crate::errors::{BuildError, Violation};
use crate::rational::rat;
use crate::weights::WeightMultiset;
use crate::ypoly::YPolynomial;

/// Polynomial in `t` with non-negative integer coefficients: a Poincare
/// polynomial (coefficient of `t^i` = `dim H^i`).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TPolynomial {
    coeffs: Vec<u64>,
}

impl TPolynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        TPolynomial { coeffs }
    }

    pub fn one() -> Self {
        TPolynomial { coeffs: vec![1] }
    }

    pub fn zero() -> Self {
        TPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    /// Multiplication by `t^k`, the degree shift of a rank-`k/2` cell.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return TPolynomial::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        TPolynomial { coeffs }
    }

    pub fn add(&self, other: &TPolynomial) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).copied().unwrap_or(0) + other.coeffs.get(i).copied().unwrap_or(0)
            })
            .collect();
        TPolynomial::new(coeffs)
    }

    pub fn mul(&self, other: &TPolynomial) -> Self {
        if self.is_zero() || other.is_zero() {
            return TPolynomial::zero();
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TPolynomial::new(coeffs)
    }

    /// Value at `t = 1`: the total Betti number.
    pub fn evaluate_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<_> = self.coeffs.iter().map(|&c| rat(c as i64)).collect();
        write!(f, "{}", crate::ypoly::format_poly(&coeffs, "t"))
    }
}

/// A connected component of the fixed-point set: its own invariants plus
/// the weight decomposition of its normal bundle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedComponent {
    pub id: String,
    /// Complex dimension of the component.
    pub dim_f: u32,
    pub chi_y: YPolynomial,
    pub poincare: Option<TPolynomial>,
    pub normal_weights: WeightMultiset,
}

impl FixedComponent {
    /// An isolated fixed point: `chi_y = 1`, Poincare polynomial 1.
    pub fn point(id: impl Into<String>, normal_weights: WeightMultiset) -> Self {
        FixedComponent {
            id: id.into(),
            dim_f: 0,
            chi_y: YPolynomial::one(),
            poincare: Some(TPolynomial::one()),
            normal_weights,
        }
    }

    pub fn n_plus(&self) -> u32 {
        self.normal_weights.n_plus()
    }

    pub fn n_minus(&self) -> u32 {
        self.normal_weights.n_minus()
    }
}

/// A variety presented by its fixed-point data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarietyModel {
    pub name: String,
    /// Complex dimension of the ambient variety.
    pub ambient_dim: u32,
    pub components: Vec<FixedComponent>,
}

impl VarietyModel {
    /// True when every fixed component is a point.
    pub fn is_isolated(&self) -> bool {
        self.components.iter().all(|c| c.dim_f == 0)
    }

    pub fn component(&self, id: &str) -> Option<&FixedComponent> {
        self.components.iter().find(|c| c.id == id)
    }

    /// Checks every model invariant, reporting all violations rather than
    /// stopping at the first.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.components.is_empty() {
            out.push(Violation::NoComponents);
        }
        let mut seen = BTreeSet::new();
        for c in &self.components {
            if !seen.insert(c.id.clone()) {
                out.push(Violation::DuplicateComponentId { id: c.id.clone() });
            }
            let normal_rank = c.normal_weights.total();
            if c.dim_f + normal_rank != self.ambient_dim {
                out.push(Violation::DimensionMismatch {
                    component: c.id.clone(),
                    dim_f: c.dim_f,
                    normal_rank,
                    ambient_dim: self.ambient_dim,
                });
            }
            if !c.chi_y.is_zero() && c.chi_y.degree() > c.dim_f as usize {
                out.push(Violation::ChiDegreeTooLarge {
                    component: c.id.clone(),
                    degree: c.chi_y.degree(),
                    dim_f: c.dim_f,
                });
            }
            if c.dim_f == 0 {
                if !c.chi_y.is_one() {
                    out.push(Violation::PointChiNotOne {
                        component: c.id.clone(),
                    });
                }
                if let Some(p) = &c.poincare {
                    if !p.is_one() {
                        out.push(Violation::PointPoincareNotOne {
                            component: c.id.clone(),
                        });
                    }
                }
            }
            if let Some(p) = &c.poincare {
                if !p.is_zero() && p.degree() > 2 * c.dim_f as usize {
                    out.push(Violation::PoincareDegreeTooLarge {
                        component: c.id.clone(),
                        degree: p.degree(),
                        max: 2 * c.dim_f,
                    });
                }
            }
        }
        out
    }

    /// Validates and wraps violations into a build error.
    pub fn validated(self) -> Result<Self, BuildError> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(self)
        } else {
            Err(BuildError::Validation(violations))
        }
    }
}

/// A fixed point of a rank-`r` torus action with its multi-weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GkmPoint {
    pub id: String,
    pub multiweights: Vec<Vec<i64>>,
}

/// Fixed points of a `T^r`-action together with a cocharacter selecting a
/// one-parameter subgroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GkmPointSet {
    pub rank: u32,
    pub points: Vec<GkmPoint>,
    pub cocharacter: Vec<i64>,
}

impl GkmPointSet {
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.cocharacter.len() != self.rank as usize {
            out.push(Violation::CocharacterRankMismatch {
                len: self.cocharacter.len(),
                rank: self.rank,
            });
        }
        let expected = self.points.first().map(|p| p.multiweights.len());
        for p in &self.points {
            if let Some(expected) = expected {
                if p.multiweights.len() != expected {
                    out.push(Violation::MultiweightCountMismatch {
                        point: p.id.clone(),
                        count: p.multiweights.len(),
                        expected,
                    });
                }
            }
            for mw in &p.multiweights {
                if mw.len() != self.rank as usize {
                    out.push(Violation::MultiweightRankMismatch {
                        point: p.id.clone(),
                        len: mw.len(),
                        rank: self.rank,
                    });
                }
                if mw.iter().all(|&x| x == 0) {
                    out.push(Violation::ZeroMultiweight {
                        point: p.id.clone(),
                    });
                }
            }
        }
        out
    }

    /// Reduces to a single C* by pairing every multiweight with the
    /// cocharacter. Every pairing must be nonzero, otherwise the chosen
    /// one-parameter subgroup has a larger fixed locus and the reduction
    /// would silently change the model.
    pub fn reduce(&self) -> Result<VarietyModel, BuildError> {
        let ambient = self.points.first().map_or(0, |p| p.multiweights.len());
        let mut components = Vec::with_capacity(self.points.len());
        for p in &self.points {
            let mut weights = Vec::with_capacity(p.multiweights.len());
            for mw in &p.multiweights {
                let pairing: i64 = mw
                    .iter()
                    .zip(&self.cocharacter)
                    .map(|(a, b)| a * b)
                    .sum();
                if pairing == 0 {
                    return Err(BuildError::NonGenericCocharacter {
                        point_id: p.id.clone(),
                        multiweight: mw.clone(),
                    });
                }
                weights.push(pairing);
            }
            components.push(FixedComponent::point(
                p.id.clone(),
                WeightMultiset::from_weights(&weights),
            ));
        }
        VarietyModel {
            name: format!("gkm-reduction(rank {})", self.rank),
            ambient_dim: ambient as u32,
            components,
        }
        .validated()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1_model() -> VarietyModel {
        VarietyModel {
            name: "P1".into(),
            ambient_dim: 1,
            components: vec![
                FixedComponent::point("p0", WeightMultiset::from_pairs(&[(1, 1)])),
                FixedComponent::point("pinf", WeightMultiset::from_pairs(&[(-1, 1)])),
            ],
        }
    }

    #[test]
    fn valid_model_has_no_violations() {
        assert!(p1_model().validate().is_empty());
        assert!(p1_model().is_isolated());
    }

    #[test]
    fn dimension_mismatch_reported() {
        let mut m = p1_model();
        m.ambient_dim = 2;
        let vs = m.validate();
        assert_eq!(vs.len(), 2);
        assert!(matches!(vs[0], Violation::DimensionMismatch { .. }));
    }

    #[test]
    fn duplicate_ids_reported() {
        let mut m = p1_model();
        m.components[1].id = "p0".into();
        assert!(m
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::DuplicateComponentId { .. })));
    }

    #[test]
    fn point_invariants_enforced() {
        let mut m = p1_model();
        m.components[0].chi_y = YPolynomial::from_integers(&[2]);
        assert!(m
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::PointChiNotOne { .. })));
    }

    #[test]
    fn gkm_reduction_of_p1() {
        let g = GkmPointSet {
            rank: 1,
            points: vec![
                GkmPoint {
                    id: "0".into(),
                    multiweights: vec![vec![1]],
                },
                GkmPoint {
                    id: "inf".into(),
                    multiweights: vec![vec![-1]],
                },
            ],
            cocharacter: vec![1],
        };
        let m = g.reduce().unwrap();
        assert_eq!(m.components.len(), 2);
        assert_eq!(m.ambient_dim, 1);
        assert_eq!(
            m.components[0].normal_weights,
            WeightMultiset::from_pairs(&[(1, 1)])
        );
        assert_eq!(
            m.components[1].normal_weights,
            WeightMultiset::from_pairs(&[(-1, 1)])
        );
    }

    #[test]
    fn gkm_reduction_of_p2_by_hand() {
        // Multiweights e_j - e_i in Z^3 at each of the three points.
        let e = |i: usize| -> Vec<i64> {
            let mut v = vec![0i64; 3];
            v[i] = 1;
            v
        };
        let diff = |j: usize, i: usize| -> Vec<i64> {
            e(j).iter().zip(e(i)).map(|(a, b)| a - b).collect()
        };
        let points = (0..3)
            .map(|i| GkmPoint {
                id: format!("p{i}"),
                multiweights: (0..3).filter(|&j| j != i).map(|j| diff(j, i)).collect(),
            })
            .collect();
        let g = GkmPointSet {
            rank: 3,
            points,
            cocharacter: vec![0, 1, 2],
        };
        let m = g.reduce().unwrap();
        let expected = [
            WeightMultiset::from_pairs(&[(1, 1), (2, 1)]),
            WeightMultiset::from_pairs(&[(-1, 1), (1, 1)]),
            WeightMultiset::from_pairs(&[(-2, 1), (-1, 1)]),
        ];
        for (c, ws) in m.components.iter().zip(&expected) {
            assert_eq!(&c.normal_weights, ws);
        }

        // A cocharacter pairing some e_j - e_i to zero is rejected.
        let bad = GkmPointSet {
            cocharacter: vec![1, 1, 1],
            ..g
        };
        assert!(matches!(
            bad.reduce(),
            Err(BuildError::NonGenericCocharacter { .. })
        ));
    }

    #[test]
    fn tpoly_arithmetic_and_display() {
        let p = TPolynomial::new(vec![1, 0, 1]); // 1 + t^2
        assert_eq!(p.mul(&p), TPolynomial::new(vec![1, 0, 2, 0, 1]));
        assert_eq!(p.shifted(2), TPolynomial::new(vec![0, 0, 1, 0, 1]));
        assert_eq!(p.to_string(), "1 + t^2");
        assert_eq!(p.evaluate_at_one(), 2);
    }
}
