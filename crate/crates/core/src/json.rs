//! JSON schemas for models, GKM data, fans, and weight multisets.
//!
//! Rationals travel as `"p/q"` strings (or bare integer strings), weights
//! as objects keyed by signed-integer strings in numeric order, polynomials
//! as coefficient arrays lowest degree first. Unknown fields are rejected.
//! Emission is deterministic: re-emitting a parsed document reproduces the
//! bytes.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::errors::{BuildError, Violation};
use crate::model::{FixedComponent, GkmPoint, GkmPointSet, TPolynomial, VarietyModel};
use crate::rational::{format_rational, parse_rational};
use crate::weights::WeightMultiset;
use crate::ypoly::YPolynomial;

/// Raw weight map as it appears in JSON: string keys, any integers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawWeights(pub BTreeMap<i64, u64>);

impl Serialize for RawWeights {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (w, m) in &self.0 {
            map.serialize_entry(&w.to_string(), m)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for RawWeights {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RawWeights;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from integer-string weights to multiplicities")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((key, value)) = access.next_entry::<String, u64>()? {
                    let w: i64 = key.trim().parse().map_err(|_| {
                        serde::de::Error::custom(format!("weight key {key:?} is not an integer"))
                    })?;
                    if out.insert(w, value).is_some() {
                        return Err(serde::de::Error::custom(format!(
                            "duplicate weight key {key:?}"
                        )));
                    }
                }
                Ok(RawWeights(out))
            }
        }
        deserializer.deserialize_map(V)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct ModelJson {
    pub name: String,
    pub ambient_dim: u32,
    pub components: Vec<ComponentJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct ComponentJson {
    pub id: String,
    pub dim_f: u32,
    pub chi_y: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poincare: Option<Vec<u64>>,
    pub normal_weights: RawWeights,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct GkmJson {
    pub rank: u32,
    pub cocharacter: Vec<i64>,
    pub points: Vec<GkmPointJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct GkmPointJson {
    pub id: String,
    pub multiweights: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct FanJson {
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
}

fn classify_json_error(err: serde_json::Error) -> BuildError {
    match err.classify() {
        serde_json::error::Category::Syntax | serde_json::error::Category::Eof => {
            BuildError::Parse(err.to_string())
        }
        _ => BuildError::Schema(err.to_string()),
    }
}

/// Parses and validates a variety model document.
pub fn model_from_json(text: &str) -> Result<VarietyModel, BuildError> {
    let raw: ModelJson = serde_json::from_str(text).map_err(classify_json_error)?;
    let mut violations = Vec::new();
    let mut components = Vec::with_capacity(raw.components.len());
    for rc in &raw.components {
        let mut coeffs = Vec::with_capacity(rc.chi_y.len());
        let mut bad_chi = false;
        for s in &rc.chi_y {
            match parse_rational(s) {
                Some(r) => coeffs.push(r),
                None => {
                    violations.push(Violation::BadRational {
                        component: rc.id.clone(),
                        text: s.clone(),
                    });
                    bad_chi = true;
                }
            }
        }
        let chi_y = if bad_chi {
            YPolynomial::one()
        } else {
            YPolynomial::new(coeffs)
        };
        let mut pairs = Vec::new();
        let mut bad_weights = false;
        for (&w, &m) in &rc.normal_weights.0 {
            if w == 0 {
                violations.push(Violation::ZeroWeight {
                    component: rc.id.clone(),
                });
                bad_weights = true;
            } else if m == 0 {
                violations.push(Violation::ZeroMultiplicity {
                    component: rc.id.clone(),
                    weight: w,
                });
                bad_weights = true;
            } else {
                pairs.push((w, m as u32));
            }
        }
        let normal_weights = if bad_weights {
            WeightMultiset::empty()
        } else {
            WeightMultiset::from_pairs(&pairs)
        };
        components.push(FixedComponent {
            id: rc.id.clone(),
            dim_f: rc.dim_f,
            chi_y,
            poincare: rc.poincare.as_ref().map(|p| TPolynomial::new(p.clone())),
            normal_weights,
        });
    }
    let model = VarietyModel {
        name: raw.name,
        ambient_dim: raw.ambient_dim,
        components,
    };
    if violations.is_empty() {
        model.validated()
    } else {
        // Structural violations trump the derived ones a half-built model
        // would also report.
        Err(BuildError::Validation(violations))
    }
}

pub fn model_to_json(model: &VarietyModel) -> ModelJson {
    ModelJson {
        name: model.name.clone(),
        ambient_dim: model.ambient_dim,
        components: model
            .components
            .iter()
            .map(|c| ComponentJson {
                id: c.id.clone(),
                dim_f: c.dim_f,
                chi_y: c.chi_y.coefficients().iter().map(format_rational).collect(),
                poincare: c.poincare.as_ref().map(|p| p.coefficients().to_vec()),
                normal_weights: RawWeights(
                    c.normal_weights
                        .entries()
                        .iter()
                        .map(|(&w, &m)| (w, m as u64))
                        .collect(),
                ),
            })
            .collect(),
    }
}

/// Deterministic pretty rendering with a trailing newline.
pub fn model_to_json_string(model: &VarietyModel) -> String {
    let mut s = serde_json::to_string_pretty(&model_to_json(model)).expect("model serializes");
    s.push('\n');
    s
}

/// Parses and validates a GKM fixed-point document.
pub fn gkm_from_json(text: &str) -> Result<GkmPointSet, BuildError> {
    let raw: GkmJson = serde_json::from_str(text).map_err(classify_json_error)?;
    let set = GkmPointSet {
        rank: raw.rank,
        cocharacter: raw.cocharacter,
        points: raw
            .points
            .into_iter()
            .map(|p| GkmPoint {
                id: p.id,
                multiweights: p.multiweights,
            })
            .collect(),
    };
    let violations = set.validate();
    if violations.is_empty() {
        Ok(set)
    } else {
        Err(BuildError::Validation(violations))
    }
}

pub fn fan_from_json(text: &str) -> Result<FanJson, BuildError> {
    serde_json::from_str(text).map_err(classify_json_error)
}

/// Parses a bare weight-multiset document (`{"w": n_w, ...}`).
pub fn weights_from_json(text: &str) -> Result<WeightMultiset, BuildError> {
    let raw: RawWeights = serde_json::from_str(text).map_err(classify_json_error)?;
    let mut violations = Vec::new();
    let mut pairs = Vec::new();
    for (&w, &m) in &raw.0 {
        if w == 0 {
            violations.push(Violation::ZeroWeight {
                component: "weights".into(),
            });
        } else if m == 0 {
            violations.push(Violation::ZeroMultiplicity {
                component: "weights".into(),
                weight: w,
            });
        } else {
            pairs.push((w, m as u32));
        }
    }
    if violations.is_empty() {
        Ok(WeightMultiset::from_pairs(&pairs))
    } else {
        Err(BuildError::Validation(violations))
    }
}

pub fn weights_to_json_string(ws: &WeightMultiset) -> String {
    let raw = RawWeights(ws.entries().iter().map(|(&w, &m)| (w, m as u64)).collect());
    let mut s = serde_json::to_string_pretty(&raw).expect("weights serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const P1_JSON: &str = r#"{
  "name": "P1",
  "ambient_dim": 1,
  "components": [
    { "id": "p0", "dim_f": 0, "chi_y": ["1"], "poincare": [1], "normal_weights": {"1": 1} },
    { "id": "p1", "dim_f": 0, "chi_y": ["1"], "poincare": [1], "normal_weights": {"-1": 1} }
  ]
}"#;

    #[test]
    fn loads_p1() {
        let m = model_from_json(P1_JSON).unwrap();
        assert_eq!(m.components.len(), 2);
        assert_eq!(m.ambient_dim, 1);
    }

    #[test]
    fn round_trip_is_byte_stable() {
        let m = model_from_json(P1_JSON).unwrap();
        let emitted = model_to_json_string(&m);
        let reparsed = model_from_json(&emitted).unwrap();
        assert_eq!(m, reparsed);
        assert_eq!(model_to_json_string(&reparsed), emitted);
    }

    #[test]
    fn zero_weight_key_rejected() {
        let bad = P1_JSON.replace("\"1\": 1", "\"0\": 1");
        match model_from_json(&bad) {
            Err(BuildError::Validation(vs)) => {
                assert!(vs.iter().any(|v| matches!(v, Violation::ZeroWeight { .. })));
            }
            other => panic!("expected ZeroWeight validation error, got {other:?}"),
        }
    }

    #[test]
    fn chi_degree_violation_rejected() {
        let bad = P1_JSON.replace(r#""chi_y": ["1"], "poincare": [1], "normal_weights": {"1": 1}"#,
            r#""chi_y": ["1", "1"], "poincare": [1], "normal_weights": {"1": 1}"#);
        assert!(matches!(model_from_json(&bad), Err(BuildError::Validation(_))));
    }

    #[test]
    fn unknown_fields_rejected() {
        let bad = P1_JSON.replace("\"name\"", "\"extra\": 1, \"name\"");
        assert!(matches!(model_from_json(&bad), Err(BuildError::Schema(_))));
    }

    #[test]
    fn syntax_error_is_parse_error() {
        assert!(matches!(
            model_from_json("{ not json"),
            Err(BuildError::Parse(_))
        ));
    }

    #[test]
    fn weights_document_round_trip() {
        let ws = weights_from_json(r#"{"1": 1, "-4": 2}"#).unwrap();
        assert_eq!(ws, WeightMultiset::from_pairs(&[(1, 1), (-4, 2)]));
        let s = weights_to_json_string(&ws);
        assert_eq!(weights_from_json(&s).unwrap(), ws);
    }
}
