//! symcurv: exact curvature calculus for diagonal semi-Riemannian metrics.
//!
//! The crate computes Christoffel symbols, the Riemann, Ricci, Weyl,
//! projective, concircular and conharmonic tensors and their covariant
//! derivatives for diagonal metrics whose entries are rational expressions
//! in the chart coordinates, an undetermined function `xi(t)` and its
//! derivatives, trigonometric factors, and symbolic constants — all over
//! exact rational arithmetic. On top of that sit the Kulkarni-Nomizu
//! product, Tachibana operators `Q(A,T)`, curvature actions `D . T`, and
//! solvers that decide proportionality and linear relations between such
//! tensors, which together verify pseudosymmetry-type identities and
//! classify Ricci structures. A small floating-point oracle cross-checks
//! the symbolic pipeline by finite differences.
//!
//! Conventions used throughout:
//!
//! * `R_hijk = g_hl (d_j Gamma^l_ik - d_k Gamma^l_ij
//!   + Gamma^m_ik Gamma^l_mj - Gamma^m_ij Gamma^l_mk)`
//! * `S_ij = g^hk R_hijk`, `r = g^ij S_ij`
//! * `(A ~ B)_hijk = A_hk B_ij + A_ij B_hk - A_hj B_ik - A_ik B_hj`
//!   (Kulkarni-Nomizu), `G = (1/2) g ~ g`
//! * indices are 1-based in chart order in all user-facing labels.

pub mod chart;
pub mod conditions;
pub mod curvature;
pub mod exec;
pub mod exprparse;
pub mod operators;
pub mod oracle;
pub mod render;
pub mod symkernel;

pub use chart::{Chart, Metric};
pub use curvature::{CurvatureBundle, SymmetryClass, Tensor};
pub use exec::{exec_mode, set_exec_mode, ExecMode};
pub use symkernel::{substitute_xi, DiffExpr, Generator, KernelError, Poly};

/// One-line statement of the sign conventions, embedded in reports so
/// output is interpretable on its own.
pub const CONVENTION: &str = "R_hijk = g_hl(d_j Gamma^l_ik - d_k Gamma^l_ij + Gamma^m_ik Gamma^l_mj - Gamma^m_ij Gamma^l_mk); S_ij = g^hk R_hijk; r = g^ij S_ij; G = (1/2) g~g; indices 1-based in chart order";

/// Report schema version emitted by the command-line tool.
pub const REPORT_VERSION: &str = "1";
