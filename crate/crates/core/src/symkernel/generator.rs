//! Atomic symbols that monomials are built from.
//!
//! A generator is a chart coordinate, an entry of the derivative tower of
//! the undetermined metric function `xi`, the sine or cosine of a
//! coordinate, or a named symbolic constant. The derived `Ord` gives the
//! global generator order used by the monomial order: coordinates first,
//! then the xi tower by derivative order, then sines, cosines, and
//! constants, alphabetically within each class.

use std::fmt;
use std::sync::Arc;

/// Intern a name as a cheaply cloneable shared string.
pub fn sym(name: &str) -> Arc<str> {
    Arc::from(name)
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    /// A chart coordinate such as `t` or `theta`.
    Coord(Arc<str>),
    /// `Xi(k)` is the k-th derivative of `xi` with respect to the
    /// coordinate named `t`; `Xi(0)` is `xi` itself. Differentiating by
    /// `t` shifts the tower up one step.
    Xi(u32),
    /// Sine of a coordinate.
    Sin(Arc<str>),
    /// Cosine of a coordinate. Canonical polynomials are at most linear
    /// in each cosine: `cos(x)^2` is rewritten to `1 - sin(x)^2` whenever
    /// it appears.
    Cos(Arc<str>),
    /// A named symbolic constant (`C1`, `m`, `alpha`, ...); every
    /// derivation sends it to zero.
    Const(Arc<str>),
}

impl Generator {
    /// True when any derivation annihilates this generator's own symbol
    /// class (constants only; trig factors differentiate into each other).
    pub fn is_const(&self) -> bool {
        matches!(self, Generator::Const(_))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Coord(name) | Generator::Const(name) => write!(f, "{name}"),
            Generator::Xi(order) => {
                write!(f, "xi")?;
                for _ in 0..*order {
                    write!(f, "'")?;
                }
                Ok(())
            }
            Generator::Sin(name) => write!(f, "sin({name})"),
            Generator::Cos(name) => write!(f, "cos({name})"),
        }
    }
}
