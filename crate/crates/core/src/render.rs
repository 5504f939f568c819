//! LaTeX rendering of differential expressions.
//!
//! The text `Display` form of an expression round-trips through the
//! parser; this module instead targets human-readable fractions with
//! dotted xi derivatives and greek coordinate names.

use num::{BigRational, One, Signed};

use crate::symkernel::{DiffExpr, Generator, Monomial, Poly};

fn greek(name: &str) -> String {
    match name {
        "theta" | "phi" | "psi" | "alpha" | "beta" | "gamma" | "lambda" | "mu" | "nu"
        | "rho" | "sigma" | "tau" | "omega" => format!("\\{name}"),
        other => other.to_string(),
    }
}

fn latex_generator(g: &Generator) -> String {
    match g {
        Generator::Coord(name) | Generator::Const(name) => greek(name),
        Generator::Xi(0) => "\\xi".to_string(),
        Generator::Xi(1) => "\\dot{\\xi}".to_string(),
        Generator::Xi(2) => "\\ddot{\\xi}".to_string(),
        Generator::Xi(k) => format!("\\xi^{{({k})}}"),
        Generator::Sin(name) => format!("\\sin {}", greek(name)),
        Generator::Cos(name) => format!("\\cos {}", greek(name)),
    }
}

fn latex_monomial(m: &Monomial) -> String {
    let mut out = String::new();
    for (i, (g, e)) in m.factors().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let base = latex_generator(g);
        if *e == 1 {
            out.push_str(&base);
        } else {
            // Trig powers read better with the exponent on the function.
            match g {
                Generator::Sin(name) => {
                    out.push_str(&format!("\\sin^{{{e}}} {}", greek(name)))
                }
                Generator::Cos(name) => {
                    out.push_str(&format!("\\cos^{{{e}}} {}", greek(name)))
                }
                _ => out.push_str(&format!("{base}^{{{e}}}")),
            }
        }
    }
    out
}

fn latex_rational(q: &BigRational) -> String {
    if q.is_integer() {
        format!("{}", q.numer())
    } else {
        format!("\\tfrac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

fn latex_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (mono, coeff)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let neg = coeff.is_negative();
        let abs = coeff.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_unit() {
            out.push_str(&latex_rational(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&latex_rational(&abs));
                out.push(' ');
            }
            out.push_str(&latex_monomial(mono));
        }
    }
    out
}

/// Render an expression as LaTeX source (no surrounding math delimiters).
pub fn to_latex(e: &DiffExpr) -> String {
    if e.den().is_one() {
        latex_poly(e.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", latex_poly(e.num()), latex_poly(e.den()))
    }
}
