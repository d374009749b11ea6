//! Exact barycentric geometry kernel for generalized Apollonius circle
//! pencils, with executable checks of the associated lemmas and theorems.
//!
//! All geometry is generic over [`Scalar`]; [`Exact`] (arbitrary precision
//! rationals) decides every predicate with zero tolerance, `f64` uses a
//! relative tolerance.

pub mod bary;
pub mod centers;
pub mod circles;
pub mod constructions;
pub mod cartesian;
pub mod error;
pub mod report;
pub mod scalar;
pub mod theorems;
pub mod vec3;

pub use bary::{HLine, HPoint, TriangleMetric};
pub use cartesian::{CartCircle, CartesianPoint, Cycle, Line2};
pub use error::{GeomError, Result};
pub use report::{CheckReport, SubVerdict, Verdict};
pub use scalar::{Backend, Exact, Scalar};
pub use theorems::{CheckId, InversionCase};

pub type ExactPoint = HPoint<Exact>;
pub type ExactLine = HLine<Exact>;
pub type ExactTriangle = TriangleMetric<Exact>;
pub type FloatPoint = HPoint<f64>;
pub type FloatLine = HLine<f64>;
pub type FloatTriangle = TriangleMetric<f64>;
