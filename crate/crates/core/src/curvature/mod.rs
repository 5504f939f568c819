//! Curvature tensors of diagonal metrics: Christoffel symbols, Riemann,
//! Ricci, scalar, the classical curvature-type tensors, covariant
//! derivatives, and an independent warped-product assembly.

pub mod bundle;
pub mod tensor;
pub mod warped;

pub use bundle::{CurvError, CurvatureBundle, TensorKind};
pub use tensor::{decode, encode, label, SymmetryClass, SymmetryViolation, Tensor};
pub use warped::{warped_curvature, WarpedCurvature, WarpedError};
