//! Error types, one enum per layer.

use thiserror::Error;

use crate::localized::LimitDirection;
use crate::rational::{format_rational, Rational};

/// Failures of the exact-arithmetic kernel.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("pole at theta = {}: cyclotomic factor Phi_{cyclotomic_index} vanishes", format_rational(theta))]
    PoleAtTheta {
        theta: Rational,
        cyclotomic_index: u32,
    },
    #[error("evaluation at theta = 0 with a negative power of theta")]
    ZeroTheta,
    #[error("no limit as {direction}")]
    DivergesAtLimit { direction: LimitDirection },
    #[error("series expansion at theta = 0 of a class with a pole there")]
    PoleAtZero,
    #[error("series expansion requires a y-free class; substitute y first")]
    YDependent,
}

/// Invariant violations of a variety model, reported per component.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("{component}: normal weight 0 (every fixed-direction weight must be nonzero)")]
    ZeroWeight { component: String },
    #[error("{component}: weight {weight} listed with multiplicity 0")]
    ZeroMultiplicity { component: String, weight: i64 },
    #[error("{component}: dim_f {dim_f} + normal rank {normal_rank} != ambient_dim {ambient_dim}")]
    DimensionMismatch {
        component: String,
        dim_f: u32,
        normal_rank: u32,
        ambient_dim: u32,
    },
    #[error("{component}: chi_y degree {degree} exceeds dim_f {dim_f}")]
    ChiDegreeTooLarge {
        component: String,
        degree: usize,
        dim_f: u32,
    },
    #[error("{component}: an isolated point must have chi_y = 1")]
    PointChiNotOne { component: String },
    #[error("{component}: an isolated point must have Poincare polynomial 1")]
    PointPoincareNotOne { component: String },
    #[error("{component}: Poincare degree {degree} exceeds 2 * dim_f = {max}")]
    PoincareDegreeTooLarge {
        component: String,
        degree: usize,
        max: u32,
    },
    #[error("duplicate component id {id}")]
    DuplicateComponentId { id: String },
    #[error("model has no components")]
    NoComponents,
    #[error("{component}: invalid chi_y coefficient {text:?}")]
    BadRational { component: String, text: String },
    #[error("{component}: invalid weight key {text:?}")]
    BadWeightKey { component: String, text: String },
    #[error("{component}: negative Poincare coefficient")]
    NegativePoincareCoefficient { component: String },
    #[error("GKM point {point}: zero multiweight vector")]
    ZeroMultiweight { point: String },
    #[error("GKM point {point}: multiweight of length {len}, expected rank {rank}")]
    MultiweightRankMismatch { point: String, len: usize, rank: u32 },
    #[error("GKM point {point}: {count} multiweights, expected {expected}")]
    MultiweightCountMismatch {
        point: String,
        count: usize,
        expected: usize,
    },
    #[error("cocharacter of length {len}, expected rank {rank}")]
    CocharacterRankMismatch { len: usize, rank: u32 },
}

/// Failures while constructing a model.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("linearization weights must be distinct")]
    DuplicateWeights,
    #[error("bad range: {detail}")]
    BadRange { detail: String },
    #[error("cone {cone_index} is not smooth (ray determinant {determinant}, expected +-1)")]
    NonSmoothCone { cone_index: usize, determinant: i64 },
    #[error("fan is not complete: {detail}")]
    IncompleteFan { detail: String },
    #[error("cocharacter is not generic: point {point_id} has multiweight {multiweight:?} pairing to 0")]
    NonGenericCocharacter {
        point_id: String,
        multiweight: Vec<i64>,
    },
    #[error("JSON parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("model validation failed: {}", format_violations(.0))]
    Validation(Vec<Violation>),
}

fn format_violations(vs: &[Violation]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// Failures of the localization engine.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("component {component} has positive dimension; exact localized summation needs isolated fixed points")]
    NotIsolated { component: String },
    #[error("localized sum is not free of theta (remainder {remainder}); the fixed-point data is not realizable")]
    NonConstantSum { remainder: String },
    #[error("component {component} has no Poincare polynomial")]
    MissingPoincare { component: String },
    #[error("component {component}: limit of the contribution disagrees with (-y)^n * chi_y(F)")]
    LimitTheoremViolation { component: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Failures of the weight-recovery inverse problem.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RecoveryError {
    #[error("input is not the localized class of a weight multiset (stage {stage}): {detail}")]
    InconsistentDelta { stage: &'static str, detail: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
