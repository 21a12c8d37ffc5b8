//! Exact arithmetic for split composition algebras, the cubic Jordan
//! algebras `J₃(A)`, the Freudenthal triple systems `Z₂(A)` with their
//! symplectic form and quartic invariant, and the Lie algebras `sp₆(A)`
//! acting on them.
//!
//! All computations are over Gaussian rationals and every comparison is an
//! exact equality.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod jordan;
pub mod liealg;
pub mod linalg;
pub mod sample;
pub mod scalar;
pub mod triple;
pub mod verify;

pub use algebra::{AlgebraTag, CompositionElement, TensorElement};
pub use error::{Error, ParseScalarError, Result};
pub use jordan::{JordanDual, JordanElement, JordanRank};
pub use liealg::{LieOperator, PsiImage, Sp6Basis};
pub use linalg::Matrix;
pub use scalar::{Rational, Scalar};
pub use triple::{
    calibrate, CalibrationConstants, Classification, CubicCoefficients, FreudenthalVector, HyperplaneType, OrbitLabel,
    SeveriSection,
};
pub use verify::{Suite, VerificationReport, VerifyOptions};
