//! Exact symbolic kernel: generators, polynomials, and reduced fractions
//! closed under differentiation.

pub mod expr;
pub mod gcd;
pub mod generator;
pub mod poly;

pub use expr::{substitute_xi, DiffExpr, KernelError};
pub use gcd::{div_exact, poly_gcd};
pub use generator::{sym, Generator};
pub use poly::{Monomial, Poly};
