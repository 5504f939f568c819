//! Floating-point oracle: numeric evaluation and finite-difference
//! curvature, used to cross-check the symbolic pipeline.
//!
//! Evaluation needs a point (coordinate values, constant values) and a
//! closed form for `xi(t)` whose derivative tower is computed symbolically
//! on a tiny f64 expression tree. The finite-difference curvature builds
//! Christoffel symbols from central differences of the metric and the
//! curvature from central differences of the Christoffels plus the
//! quadratic terms, in the same sign convention as the symbolic side.

use std::sync::Arc;

use num::ToPrimitive;

use crate::chart::Metric;
use crate::symkernel::{DiffExpr, Generator, Poly};

#[derive(Debug, Clone, thiserror::Error)]
pub enum OracleError {
    #[error("no value for `{0}` at the evaluation point")]
    MissingSymbol(String),
    #[error("denominator `{factor}` is numerically singular at the point (|value| = {value:.3e})")]
    SingularDenominator { factor: String, value: f64 },
    #[error("xi tower of order {needed} requested but the point has no xi form")]
    MissingXi { needed: u32 },
}

/// Closed-form expression tree for `xi(t)` over f64, closed under d/dt.
#[derive(Clone, Debug)]
pub enum XiForm {
    Const(f64),
    /// The coordinate `t`.
    T,
    Add(Arc<XiForm>, Arc<XiForm>),
    Sub(Arc<XiForm>, Arc<XiForm>),
    Mul(Arc<XiForm>, Arc<XiForm>),
    Div(Arc<XiForm>, Arc<XiForm>),
    /// `t^p` for a real exponent (covers roots and negative powers).
    PowT(f64),
    Ln(Arc<XiForm>),
    Sin(Arc<XiForm>),
    Cos(Arc<XiForm>),
}

impl XiForm {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            XiForm::Const(c) => *c,
            XiForm::T => t,
            XiForm::Add(a, b) => a.eval(t) + b.eval(t),
            XiForm::Sub(a, b) => a.eval(t) - b.eval(t),
            XiForm::Mul(a, b) => a.eval(t) * b.eval(t),
            XiForm::Div(a, b) => a.eval(t) / b.eval(t),
            XiForm::PowT(p) => t.powf(*p),
            XiForm::Ln(a) => a.eval(t).ln(),
            XiForm::Sin(a) => a.eval(t).sin(),
            XiForm::Cos(a) => a.eval(t).cos(),
        }
    }

    /// Symbolic d/dt on the tree (exact rules, f64 coefficients).
    pub fn derivative(&self) -> XiForm {
        match self {
            XiForm::Const(_) => XiForm::Const(0.0),
            XiForm::T => XiForm::Const(1.0),
            XiForm::Add(a, b) => XiForm::Add(Arc::new(a.derivative()), Arc::new(b.derivative())),
            XiForm::Sub(a, b) => XiForm::Sub(Arc::new(a.derivative()), Arc::new(b.derivative())),
            XiForm::Mul(a, b) => XiForm::Add(
                Arc::new(XiForm::Mul(Arc::new(a.derivative()), b.clone())),
                Arc::new(XiForm::Mul(a.clone(), Arc::new(b.derivative()))),
            ),
            XiForm::Div(a, b) => {
                // (a/b)' = (a' b - a b') / b^2
                let num = XiForm::Sub(
                    Arc::new(XiForm::Mul(Arc::new(a.derivative()), b.clone())),
                    Arc::new(XiForm::Mul(a.clone(), Arc::new(b.derivative()))),
                );
                XiForm::Div(
                    Arc::new(num),
                    Arc::new(XiForm::Mul(b.clone(), b.clone())),
                )
            }
            XiForm::PowT(p) => {
                if *p == 0.0 {
                    XiForm::Const(0.0)
                } else {
                    XiForm::Mul(Arc::new(XiForm::Const(*p)), Arc::new(XiForm::PowT(p - 1.0)))
                }
            }
            XiForm::Ln(a) => XiForm::Div(Arc::new(a.derivative()), a.clone()),
            XiForm::Sin(a) => XiForm::Mul(Arc::new(XiForm::Cos(a.clone())), Arc::new(a.derivative())),
            XiForm::Cos(a) => XiForm::Mul(
                Arc::new(XiForm::Const(-1.0)),
                Arc::new(XiForm::Mul(Arc::new(XiForm::Sin(a.clone())), Arc::new(a.derivative()))),
            ),
        }
    }

    /// Values of xi and its derivatives at `t`, up to `order` inclusive.
    pub fn tower(&self, t: f64, order: u32) -> Vec<f64> {
        let mut out = Vec::with_capacity(order as usize + 1);
        let mut form = self.clone();
        out.push(form.eval(t));
        for _ in 0..order {
            form = form.derivative();
            out.push(form.eval(t));
        }
        out
    }

    /// Build from an exact kernel expression in `t` and constants (the
    /// polynomial/rational corollary forms).
    pub fn from_diffexpr(e: &DiffExpr, consts: &[(String, f64)]) -> Result<XiForm, OracleError> {
        fn conv_poly(p: &Poly, consts: &[(String, f64)]) -> Result<XiForm, OracleError> {
            let mut acc: Option<XiForm> = None;
            for (mono, coeff) in p.terms() {
                let mut term = XiForm::Const(coeff.to_f64().expect("rational fits in f64"));
                for (g, e) in mono.factors() {
                    let factor = match g {
                        Generator::Coord(name) if name.as_ref() == "t" => XiForm::PowT(*e as f64),
                        Generator::Const(name) => {
                            let v = consts
                                .iter()
                                .find(|(n, _)| n == name.as_ref())
                                .map(|(_, v)| *v)
                                .ok_or_else(|| OracleError::MissingSymbol(name.to_string()))?;
                            XiForm::Const(v.powi(*e as i32))
                        }
                        other => return Err(OracleError::MissingSymbol(other.to_string())),
                    };
                    term = XiForm::Mul(Arc::new(term), Arc::new(factor));
                }
                acc = Some(match acc {
                    None => term,
                    Some(a) => XiForm::Add(Arc::new(a), Arc::new(term)),
                });
            }
            Ok(acc.unwrap_or(XiForm::Const(0.0)))
        }
        let num = conv_poly(e.num(), consts)?;
        if e.den().is_one() {
            Ok(num)
        } else {
            let den = conv_poly(e.den(), consts)?;
            Ok(XiForm::Div(Arc::new(num), Arc::new(den)))
        }
    }
}

/// A concrete evaluation point: coordinate values, constant values, and an
/// optional xi closed form.
#[derive(Clone)]
pub struct EvalPoint {
    pub coords: Vec<(String, f64)>,
    pub consts: Vec<(String, f64)>,
    pub xi: Option<XiForm>,
}

impl EvalPoint {
    pub fn coord(&self, name: &str) -> Option<f64> {
        self.coords
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
    }

    fn with_coord(&self, name: &str, value: f64) -> EvalPoint {
        let mut p = self.clone();
        for (n, v) in p.coords.iter_mut() {
            if n == name {
                *v = value;
                return p;
            }
        }
        p.coords.push((name.to_string(), value));
        p
    }

    fn xi_tower(&self, order: u32) -> Result<Vec<f64>, OracleError> {
        let t = self
            .coord("t")
            .ok_or_else(|| OracleError::MissingSymbol("t".to_string()))?;
        match &self.xi {
            Some(form) => Ok(form.tower(t, order)),
            None => Err(OracleError::MissingXi { needed: order }),
        }
    }
}

fn eval_generator(g: &Generator, p: &EvalPoint, xi: &[f64]) -> Result<f64, OracleError> {
    Ok(match g {
        Generator::Coord(name) => p
            .coord(name)
            .ok_or_else(|| OracleError::MissingSymbol(name.to_string()))?,
        Generator::Xi(k) => xi[*k as usize],
        Generator::Sin(name) => p
            .coord(name)
            .ok_or_else(|| OracleError::MissingSymbol(name.to_string()))?
            .sin(),
        Generator::Cos(name) => p
            .coord(name)
            .ok_or_else(|| OracleError::MissingSymbol(name.to_string()))?
            .cos(),
        Generator::Const(name) => p
            .consts
            .iter()
            .find(|(n, _)| n == name.as_ref())
            .map(|(_, v)| *v)
            .ok_or_else(|| OracleError::MissingSymbol(name.to_string()))?,
    })
}

/// Evaluate a polynomial; also returns the largest absolute monomial value
/// as a conditioning scale.
fn eval_poly(p: &Poly, point: &EvalPoint, xi: &[f64]) -> Result<(f64, f64), OracleError> {
    let mut acc = 0.0f64;
    let mut scale = 0.0f64;
    for (mono, coeff) in p.terms() {
        let mut term = coeff.to_f64().expect("rational fits in f64");
        for (g, e) in mono.factors() {
            term *= eval_generator(g, point, xi)?.powi(*e as i32);
        }
        acc += term;
        scale = scale.max(term.abs());
    }
    Ok((acc, scale))
}

/// Evaluate an expression at a point. Errors if a denominator is
/// numerically singular there (naming the offending factor).
pub fn eval(e: &DiffExpr, point: &EvalPoint) -> Result<f64, OracleError> {
    let order = e.max_xi_order();
    let xi = match order {
        Some(k) => point.xi_tower(k)?,
        None => Vec::new(),
    };
    let (num, _) = eval_poly(e.num(), point, &xi)?;
    if e.den().is_one() {
        return Ok(num);
    }
    let (den, den_scale) = eval_poly(e.den(), point, &xi)?;
    if den.abs() < 1e-12 * den_scale.max(1.0) {
        return Err(OracleError::SingularDenominator {
            factor: e.den().to_string(),
            value: den.abs(),
        });
    }
    Ok(num / den)
}

/// Evaluate with a conditioning scale: `|value|` of the largest monomial
/// in the numerator divided by the denominator value. Zero tests compare
/// against this scale rather than absolute size.
pub fn eval_scaled(e: &DiffExpr, point: &EvalPoint) -> Result<(f64, f64), OracleError> {
    let order = e.max_xi_order();
    let xi = match order {
        Some(k) => point.xi_tower(k)?,
        None => Vec::new(),
    };
    let (num, num_scale) = eval_poly(e.num(), point, &xi)?;
    if e.den().is_one() {
        return Ok((num, num_scale.max(1.0)));
    }
    let (den, den_scale) = eval_poly(e.den(), point, &xi)?;
    if den.abs() < 1e-12 * den_scale.max(1.0) {
        return Err(OracleError::SingularDenominator {
            factor: e.den().to_string(),
            value: den.abs(),
        });
    }
    Ok((num / den, (num_scale / den.abs()).max(1.0)))
}

/// Numeric zero test against the expression's own conditioning scale.
pub fn is_numerically_zero(e: &DiffExpr, point: &EvalPoint, tol: f64) -> Result<bool, OracleError> {
    let (v, scale) = eval_scaled(e, point)?;
    Ok(v.abs() <= tol * scale)
}

/// Finite-difference curvature data at a point.
pub struct FdCurvature {
    pub gamma: Vec<Vec<Vec<f64>>>,
    /// `R[h][i][j][k]` in the crate's sign convention.
    pub riemann: Vec<Vec<Vec<Vec<f64>>>>,
    pub ricci: Vec<Vec<f64>>,
    pub scalar: f64,
}

fn eval_metric_entry(m: &Metric, i: usize, point: &EvalPoint) -> Result<f64, OracleError> {
    eval(m.g(i), point)
}

fn gamma_at(m: &Metric, point: &EvalPoint, h_rel: f64) -> Result<Vec<Vec<Vec<f64>>>, OracleError> {
    let n = m.dim();
    let names: Vec<String> = (0..n).map(|i| m.chart().coord_name(i).to_string()).collect();
    // Central differences of the metric entries.
    let mut dg = vec![vec![0.0; n]; n]; // dg[i][l] = d_l g_ii
    for i in 0..n {
        for l in 0..n {
            let x0 = point.coord(&names[l]).expect("coordinate value");
            let h = h_rel * x0.abs().max(1.0);
            let plus = eval_metric_entry(m, i, &point.with_coord(&names[l], x0 + h))?;
            let minus = eval_metric_entry(m, i, &point.with_coord(&names[l], x0 - h))?;
            dg[i][l] = (plus - minus) / (2.0 * h);
        }
    }
    let mut gval = vec![0.0; n];
    for (i, g) in gval.iter_mut().enumerate() {
        *g = eval_metric_entry(m, i, point)?;
    }
    let mut gamma = vec![vec![vec![0.0; n]; n]; n];
    for h in 0..n {
        for j in 0..n {
            for k in 0..n {
                gamma[h][j][k] = if j == h && k == h {
                    0.5 / gval[h] * dg[h][h]
                } else if j == h {
                    0.5 / gval[h] * dg[h][k]
                } else if k == h {
                    0.5 / gval[h] * dg[h][j]
                } else if j == k {
                    -0.5 / gval[h] * dg[j][h]
                } else {
                    0.0
                };
            }
        }
    }
    Ok(gamma)
}

/// Curvature by nested central differences with relative step `h_rel`.
pub fn fd_curvature(m: &Metric, point: &EvalPoint, h_rel: f64) -> Result<FdCurvature, OracleError> {
    let n = m.dim();
    let names: Vec<String> = (0..n).map(|i| m.chart().coord_name(i).to_string()).collect();
    let gamma = gamma_at(m, point, h_rel)?;
    // dgamma[h][i][j][l] = d_l Gamma^h_ij by central differences of gamma.
    let mut dgamma = vec![vec![vec![vec![0.0; n]; n]; n]; n];
    for l in 0..n {
        let x0 = point.coord(&names[l]).expect("coordinate value");
        let h = h_rel * x0.abs().max(1.0);
        let gp = gamma_at(m, &point.with_coord(&names[l], x0 + h), h_rel)?;
        let gm = gamma_at(m, &point.with_coord(&names[l], x0 - h), h_rel)?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    dgamma[a][b][c][l] = (gp[a][b][c] - gm[a][b][c]) / (2.0 * h);
                }
            }
        }
    }
    let mut gval = vec![0.0; n];
    for (i, g) in gval.iter_mut().enumerate() {
        *g = eval_metric_entry(m, i, point)?;
    }
    let mut riemann = vec![vec![vec![vec![0.0; n]; n]; n]; n];
    for h in 0..n {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = dgamma[h][i][k][j] - dgamma[h][i][j][k];
                    for mm in 0..n {
                        acc += gamma[mm][i][k] * gamma[h][mm][j]
                            - gamma[mm][i][j] * gamma[h][mm][k];
                    }
                    riemann[h][i][j][k] = gval[h] * acc;
                }
            }
        }
    }
    let mut ricci = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0.0;
            for h in 0..n {
                acc += riemann[h][i][j][h] / gval[h];
            }
            ricci[i][j] = acc;
        }
    }
    let mut scalar = 0.0;
    for i in 0..n {
        scalar += ricci[i][i] / gval[i];
    }
    Ok(FdCurvature { gamma, riemann, ricci, scalar })
}
