//! Exact computation of Hirzebruch chi_y-genera of varieties with a
//! C*-action, from fixed-point data.
//!
//! The engine computes the genus two independent ways: summing localized
//! fixed-point contributions (rational functions in the exponentiated
//! equivariant parameter `theta`) and summing cell contributions
//! `chi_y(F) * (-y)^{n+}` from the plus-decomposition. It verifies that the
//! first is constant in `theta` and that its limits at `theta -> 0` and
//! `theta -> infinity` reproduce the cell decomposition, and it solves the
//! inverse problem of reading tangent-weight multiplicities back off a
//! localized class through its pole orders and series coefficients.
//!
//! Everything is exact: arbitrary-precision rationals, no floating point,
//! no tolerances.

pub mod builders;
pub mod cyclotomic;
pub mod errors;
pub mod json;
pub mod localization;
pub mod localized;
pub mod model;
pub mod rational;
pub mod recovery;
pub mod sampling;
pub mod theta_poly;
pub mod weights;
pub mod ypoly;

pub use cyclotomic::{cyclotomic, divisors, mobius};
pub use errors::{AlgebraError, BuildError, EngineError, RecoveryError, Violation};
pub use localized::{LimitDirection, LocalizedClass, PowerSeries};
pub use model::{FixedComponent, GkmPoint, GkmPointSet, TPolynomial, VarietyModel};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use theta_poly::ThetaPolynomial;
pub use weights::WeightMultiset;
pub use ypoly::YPolynomial;
