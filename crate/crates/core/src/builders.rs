//! Constructors for standard variety models: projective spaces,
//! Grassmannians, smooth complete toric varieties from fans, products, and
//! JSON loading.

use crate::errors::BuildError;
use crate::json;
use crate::model::{FixedComponent, GkmPointSet, VarietyModel};
use crate::weights::WeightMultiset;

/// Projective n-space linearized by distinct integers `a_0..a_n`: one fixed
/// point per coordinate axis with tangent weights `a_j - a_i`.
pub fn projective_space(n: u32, a: &[i64]) -> Result<VarietyModel, BuildError> {
    if n < 1 {
        return Err(BuildError::BadRange {
            detail: format!("projective space needs n >= 1, got {n}"),
        });
    }
    if a.len() != n as usize + 1 {
        return Err(BuildError::BadRange {
            detail: format!("expected {} linearization weights, got {}", n + 1, a.len()),
        });
    }
    ensure_distinct(a)?;
    let components = (0..a.len())
        .map(|i| {
            let weights: Vec<i64> = (0..a.len())
                .filter(|&j| j != i)
                .map(|j| a[j] - a[i])
                .collect();
            FixedComponent::point(format!("p{i}"), WeightMultiset::from_weights(&weights))
        })
        .collect();
    VarietyModel {
        name: format!("P{n}"),
        ambient_dim: n,
        components,
    }
    .validated()
}

/// Grassmannian of `k`-planes in `n`-space: fixed points are `k`-subsets
/// `S` of the coordinates, tangent weights `a_j - a_i` for `i` in `S`,
/// `j` outside.
pub fn grassmannian(k: u32, n: u32, a: &[i64]) -> Result<VarietyModel, BuildError> {
    if k < 1 || k >= n {
        return Err(BuildError::BadRange {
            detail: format!("grassmannian needs 1 <= k <= n-1, got k={k}, n={n}"),
        });
    }
    if a.len() != n as usize {
        return Err(BuildError::BadRange {
            detail: format!("expected {n} linearization weights, got {}", a.len()),
        });
    }
    ensure_distinct(a)?;
    let mut components = Vec::new();
    for subset in k_subsets(n as usize, k as usize) {
        let inside: Vec<usize> = subset.clone();
        let weights: Vec<i64> = (0..n as usize)
            .filter(|j| !inside.contains(j))
            .flat_map(|j| inside.iter().map(move |&i| a[j] - a[i]))
            .collect();
        let id = format!(
            "p{}",
            inside
                .iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join("_")
        );
        components.push(FixedComponent::point(
            id,
            WeightMultiset::from_weights(&weights),
        ));
    }
    VarietyModel {
        name: format!("G({k},{n})"),
        ambient_dim: k * (n - k),
        components,
    }
    .validated()
}

/// Smooth complete toric variety from a fan: one fixed point per maximal
/// cone, with tangent weights the pairings of the cocharacter against the
/// dual basis of the cone's ray generators. The sign of the pairing is
/// calibrated so the fan of the projective line with cocharacter (1) gives
/// weight +1 at the cone spanned by +1 (the point whose cell is the affine
/// line).
pub fn toric_from_fan(
    rays: &[Vec<i64>],
    max_cones: &[Vec<usize>],
    cocharacter: &[i64],
) -> Result<VarietyModel, BuildError> {
    let d = rays.first().map(Vec::len).unwrap_or(0);
    if d == 0 {
        return Err(BuildError::BadRange {
            detail: "fan needs at least one ray of positive dimension".into(),
        });
    }
    if rays.iter().any(|r| r.len() != d) {
        return Err(BuildError::BadRange {
            detail: "all rays must have the same dimension".into(),
        });
    }
    if cocharacter.len() != d {
        return Err(BuildError::BadRange {
            detail: format!("cocharacter has length {}, expected {d}", cocharacter.len()),
        });
    }
    if max_cones.len() < d + 1 {
        return Err(BuildError::IncompleteFan {
            detail: format!(
                "a complete {d}-dimensional fan needs at least {} maximal cones, got {}",
                d + 1,
                max_cones.len()
            ),
        });
    }
    for (ci, cone) in max_cones.iter().enumerate() {
        if cone.len() != d {
            return Err(BuildError::BadRange {
                detail: format!("cone {ci} has {} rays, expected {d}", cone.len()),
            });
        }
        let mut sorted = cone.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != d {
            return Err(BuildError::BadRange {
                detail: format!("cone {ci} repeats a ray"),
            });
        }
        if cone.iter().any(|&r| r >= rays.len()) {
            return Err(BuildError::BadRange {
                detail: format!("cone {ci} references a ray out of range"),
            });
        }
    }
    check_facets(max_cones, d)?;

    let mut components = Vec::with_capacity(max_cones.len());
    for (ci, cone) in max_cones.iter().enumerate() {
        // Columns of the matrix are the cone's ray generators.
        let mat: Vec<Vec<i64>> = (0..d)
            .map(|row| cone.iter().map(|&r| rays[r][row]).collect())
            .collect();
        let det = determinant(&mat);
        if det != 1 && det != -1 {
            return Err(BuildError::NonSmoothCone {
                cone_index: ci,
                determinant: det,
            });
        }
        let inverse = integer_inverse(&mat, det);
        let mut weights = Vec::with_capacity(d);
        for dual_row in &inverse {
            let pairing: i64 = dual_row
                .iter()
                .zip(cocharacter)
                .map(|(a, b)| a * b)
                .sum();
            if pairing == 0 {
                return Err(BuildError::NonGenericCocharacter {
                    point_id: format!("c{ci}"),
                    multiweight: dual_row.clone(),
                });
            }
            weights.push(pairing);
        }
        components.push(FixedComponent::point(
            format!("c{ci}"),
            WeightMultiset::from_weights(&weights),
        ));
    }
    VarietyModel {
        name: format!("toric({} cones)", max_cones.len()),
        ambient_dim: d as u32,
        components,
    }
    .validated()
}

/// Product model: components are pairs, genera multiply, normal weights
/// join, dimensions add.
pub fn product(m1: &VarietyModel, m2: &VarietyModel) -> VarietyModel {
    let mut components = Vec::with_capacity(m1.components.len() * m2.components.len());
    for c1 in &m1.components {
        for c2 in &m2.components {
            components.push(FixedComponent {
                id: format!("{}x{}", c1.id, c2.id),
                dim_f: c1.dim_f + c2.dim_f,
                chi_y: &c1.chi_y * &c2.chi_y,
                poincare: match (&c1.poincare, &c2.poincare) {
                    (Some(p1), Some(p2)) => Some(p1.mul(p2)),
                    _ => None,
                },
                normal_weights: c1.normal_weights.union(&c2.normal_weights),
            });
        }
    }
    VarietyModel {
        name: format!("{} x {}", m1.name, m2.name),
        ambient_dim: m1.ambient_dim + m2.ambient_dim,
        components,
    }
}

/// Parses and validates a variety model JSON document.
pub fn load_model(text: &str) -> Result<VarietyModel, BuildError> {
    json::model_from_json(text)
}

/// Parses and validates a GKM fixed-point JSON document.
pub fn load_gkm(text: &str) -> Result<GkmPointSet, BuildError> {
    json::gkm_from_json(text)
}

fn ensure_distinct(a: &[i64]) -> Result<(), BuildError> {
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != a.len() {
        Err(BuildError::DuplicateWeights)
    } else {
        Ok(())
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Combinatorial completeness check: every facet (set of d-1 rays of a
/// maximal cone) must be shared by exactly two maximal cones.
fn check_facets(max_cones: &[Vec<usize>], d: usize) -> Result<(), BuildError> {
    use std::collections::HashMap;
    let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
    for cone in max_cones {
        let mut sorted = cone.clone();
        sorted.sort_unstable();
        for skip in 0..d {
            let facet: Vec<usize> = sorted
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &r)| r)
                .collect();
            *counts.entry(facet).or_insert(0) += 1;
        }
    }
    for (facet, count) in counts {
        if count != 2 {
            return Err(BuildError::IncompleteFan {
                detail: format!("facet {facet:?} belongs to {count} cones, expected 2"),
            });
        }
    }
    Ok(())
}

fn determinant(mat: &[Vec<i64>]) -> i64 {
    let n = mat.len();
    if n == 1 {
        return mat[0][0];
    }
    let mut det: i128 = 0;
    for col in 0..n {
        let minor: Vec<Vec<i64>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        det += sign * mat[0][col] as i128 * determinant(&minor) as i128;
    }
    i64::try_from(det).expect("cone determinant fits in 64 bits")
}

/// Inverse of an integer matrix with determinant +-1, via the adjugate.
fn integer_inverse(mat: &[Vec<i64>], det: i64) -> Vec<Vec<i64>> {
    let n = mat.len();
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if n == 1 {
                inv[0][0] = det;
                continue;
            }
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| mat[r][c])
                        .collect()
                })
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            // adjugate / det, with det = +-1 so division is multiplication
            inv[i][j] = sign * determinant(&minor) * det;
        }
    }
    inv
}
