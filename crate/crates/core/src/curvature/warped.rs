//! Curvature of warped products, assembled from base and fibre data.
//!
//! For a product chart carrying `g = g_base + f * g_fibre` with `f` a
//! function on the base, the curvature splits into pure-base, pure-fibre
//! and mixed blocks driven by the Hessian-type tensor
//! `T_ab = nabla^base_b f_a - (1/(2f)) f_a f_b` (with `f_a = d_a f`),
//! `tr T = g_base^ab T_ab`, and `D1 f = g_base^ab f_a f_b`. This gives an
//! independent route to the same tensors the direct pipeline produces, so
//! the two are cross-checked against each other in tests.

use crate::chart::{Chart, ChartError, Metric};
use crate::symkernel::{DiffExpr, Generator};

use super::bundle::CurvatureBundle;
use super::tensor::{SymmetryClass, Tensor};

pub struct WarpedCurvature {
    /// Product metric `g_base + f * g_fibre` on the concatenated chart.
    pub metric: Metric,
    pub riemann: Tensor,
    pub ricci: Tensor,
    pub scalar: DiffExpr,
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum WarpedError {
    #[error("warping function must live on the base chart, found `{0}`")]
    ForeignSymbol(String),
    #[error("base and fibre charts share the coordinate `{0}`")]
    SharedCoordinate(String),
    #[error(transparent)]
    Chart(#[from] ChartError),
}

/// Build the product metric and its curvature from the block formulas.
pub fn warped_curvature(
    base: &Metric,
    fibre: &Metric,
    f: &DiffExpr,
) -> Result<WarpedCurvature, WarpedError> {
    let p = base.dim();
    let q = fibre.dim();
    let n = p + q;
    for g in f.generators() {
        match &g {
            Generator::Coord(name) | Generator::Sin(name) | Generator::Cos(name) => {
                if base.chart().coord_index(name).is_none() {
                    return Err(WarpedError::ForeignSymbol(g.to_string()));
                }
            }
            Generator::Xi(_) => {
                if !base.chart().has_time() {
                    return Err(WarpedError::ForeignSymbol(g.to_string()));
                }
            }
            Generator::Const(_) => {}
        }
    }
    for c in fibre.chart().coords() {
        if base.chart().coord_index(c).is_some() {
            return Err(WarpedError::SharedCoordinate(c.to_string()));
        }
    }

    // Product chart and metric.
    let coords: Vec<&str> = base
        .chart()
        .coords()
        .iter()
        .chain(fibre.chart().coords().iter())
        .map(|c| c.as_ref())
        .collect();
    let mut signature = base.chart().signature().to_vec();
    signature.extend_from_slice(fibre.chart().signature());
    let mut constants: Vec<&str> = base.chart().constants().iter().map(|c| c.as_ref()).collect();
    for c in fibre.chart().constants() {
        if !constants.contains(&c.as_ref()) {
            constants.push(c.as_ref());
        }
    }
    let chart = Chart::new(coords, signature, constants)?;
    let mut entries: Vec<DiffExpr> = base.entries().to_vec();
    for e in fibre.entries() {
        entries.push(f.mul(e));
    }
    let name = format!("{}x{}", base.name(), fibre.name());
    let metric = Metric::diagonal(&name, chart, entries)?;

    // Base data.
    let base_bundle = CurvatureBundle::new(base.clone());
    let fibre_bundle = CurvatureBundle::new(fibre.clone());
    let f_grad: Vec<DiffExpr> = (0..p)
        .map(|a| f.derivative(base.chart().coord_name(a)))
        .collect();
    let gamma_base = base_bundle.christoffel();
    // T_ab = d_b f_a - Gamma^c_ab f_c - (1/(2f)) f_a f_b
    let half_inv_f = DiffExpr::one().checked_div(&f.mul_int(2)).expect("nonzero warp");
    let t_ab = Tensor::build(p, 2, SymmetryClass::Symmetric2, |idx| {
        let (a, b) = (idx[0], idx[1]);
        let mut acc = f_grad[a].derivative(base.chart().coord_name(b));
        for c in 0..p {
            let g = gamma_base.get(&[c, a, b]);
            if !g.is_zero() && !f_grad[c].is_zero() {
                acc = acc.sub(&g.mul(&f_grad[c]));
            }
        }
        acc.sub(&half_inv_f.mul(&f_grad[a]).mul(&f_grad[b]))
    });
    let mut tr_t = DiffExpr::zero();
    let mut d1_f = DiffExpr::zero();
    for a in 0..p {
        tr_t = tr_t.add(&base.ginv(a).mul(t_ab.get(&[a, a])));
        if !f_grad[a].is_zero() {
            d1_f = d1_f.add(&base.ginv(a).mul(&f_grad[a]).mul(&f_grad[a]));
        }
    }

    let r_base = base_bundle.riemann();
    let r_fibre = fibre_bundle.riemann();
    let g_fibre_kn = fibre_bundle.gtensor();

    // Index classification: 0..p is base, p..n is fibre.
    let is_fibre = |i: usize| i >= p;
    let half = DiffExpr::rational(1, 2);
    let quarter_d1 = d1_f.mul_rational(1, 4);

    let riemann = Tensor::build(n, 4, SymmetryClass::RiemannLike, |idx| {
        let fib_count = idx.iter().filter(|&&i| is_fibre(i)).count();
        match fib_count {
            0 => r_base.get(idx).clone(),
            4 => {
                let fid: Vec<usize> = idx.iter().map(|&i| i - p).collect();
                f.mul(r_fibre.get(&fid))
                    .add(&quarter_d1.mul(g_fibre_kn.get(&fid)))
            }
            2 => {
                // Nonzero only with one fibre index in each antisymmetric
                // pair; canonical pattern (alpha, a, b, beta) has value
                // (1/2) T_ab gt_{alpha beta}.
                let first_pair_fibre = (is_fibre(idx[0]), is_fibre(idx[1]));
                let second_pair_fibre = (is_fibre(idx[2]), is_fibre(idx[3]));
                let (alpha, a, sign1) = match first_pair_fibre {
                    (true, false) => (idx[0] - p, idx[1], 1),
                    (false, true) => (idx[1] - p, idx[0], -1),
                    _ => return DiffExpr::zero(),
                };
                let (beta, b, sign2) = match second_pair_fibre {
                    (true, false) => (idx[2] - p, idx[3], -1),
                    (false, true) => (idx[3] - p, idx[2], 1),
                    _ => return DiffExpr::zero(),
                };
                if alpha != beta {
                    return DiffExpr::zero();
                }
                let v = half
                    .mul(t_ab.get(&[a, b]))
                    .mul(fibre.g(alpha));
                if sign1 * sign2 > 0 {
                    v
                } else {
                    v.neg()
                }
            }
            _ => DiffExpr::zero(),
        }
    });

    let s_base = base_bundle.ricci();
    let s_fibre = fibre_bundle.ricci();
    let q_i = q as i64;
    let fibre_trace_coeff = {
        // (1/2)(tr T + ((q-1)/(2f)) D1 f)based on the fibre block formula.
        let extra = d1_f
            .mul_rational(q_i - 1, 2)
            .checked_div(f)
            .expect("nonzero warp");
        tr_t.add(&extra).mul_rational(1, 2)
    };
    let base_t_coeff = DiffExpr::from_int(q_i).checked_div(&f.mul_int(2)).expect("nonzero warp");
    let ricci = Tensor::build(n, 2, SymmetryClass::Symmetric2, |idx| {
        let (i, j) = (idx[0], idx[1]);
        match (is_fibre(i), is_fibre(j)) {
            (false, false) => s_base
                .get(&[i, j])
                .add(&base_t_coeff.mul(t_ab.get(&[i, j]))),
            (true, true) => {
                let (alpha, beta) = (i - p, j - p);
                let mut acc = s_fibre.get(&[alpha, beta]).clone();
                if alpha == beta {
                    acc = acc.add(&fibre_trace_coeff.mul(fibre.g(alpha)));
                }
                acc
            }
            _ => DiffExpr::zero(),
        }
    });

    let scalar = {
        let r_b = base_bundle.scalar().clone();
        let r_f = fibre_bundle.scalar().clone();
        let mixed = tr_t
            .add(&d1_f.mul_rational(q_i - 1, 4).checked_div(f).expect("nonzero warp"))
            .mul_int(q_i)
            .checked_div(f)
            .expect("nonzero warp");
        r_b.add(&r_f.checked_div(f).expect("nonzero warp")).add(&mixed)
    };

    Ok(WarpedCurvature { metric, riemann, ricci, scalar })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::Chart;
    use crate::exprparse::parse_expr;

    /// ibh4 is the warped product of its (t, z) block with the unit
    /// 2-sphere, warped by f = t^2.
    #[test]
    fn matches_direct_pipeline_on_ibh4() {
        let base_chart = Chart::new(vec!["t", "z"], vec![-1, 1], vec![]).unwrap();
        let base_ctx = base_chart.resolver();
        let base = Metric::diagonal(
            "ibh4base",
            base_chart,
            vec![
                parse_expr("-1/(2*xi/t - 1)", &base_ctx).unwrap(),
                parse_expr("2*xi/t - 1", &base_ctx).unwrap(),
            ],
        )
        .unwrap();
        let fibre_chart = Chart::new(vec!["theta", "phi"], vec![1, 1], vec![]).unwrap();
        let fibre_ctx = fibre_chart.resolver();
        let fibre = Metric::diagonal(
            "s2",
            fibre_chart,
            vec![
                DiffExpr::one(),
                parse_expr("sin(theta)^2", &fibre_ctx).unwrap(),
            ],
        )
        .unwrap();
        let f = parse_expr("t^2", &base_ctx).unwrap();
        let warped = warped_curvature(&base, &fibre, &f).unwrap();

        let direct = CurvatureBundle::new(warped.metric.clone());
        assert_eq!(&warped.riemann, direct.riemann());
        assert_eq!(&warped.ricci, direct.ricci());
        assert_eq!(&warped.scalar, direct.scalar());
    }

    #[test]
    fn flat_times_flat_is_flat() {
        let base_chart = Chart::new(vec!["t", "z"], vec![-1, 1], vec![]).unwrap();
        let base = Metric::diagonal(
            "flat2",
            base_chart,
            vec![DiffExpr::from_int(-1), DiffExpr::one()],
        )
        .unwrap();
        let fibre_chart = Chart::new(vec!["u", "v"], vec![1, 1], vec![]).unwrap();
        let fibre = Metric::diagonal(
            "plane",
            fibre_chart,
            vec![DiffExpr::one(), DiffExpr::one()],
        )
        .unwrap();
        let warped = warped_curvature(&base, &fibre, &DiffExpr::one()).unwrap();
        assert!(warped.riemann.is_zero());
        assert!(warped.ricci.is_zero());
        assert!(warped.scalar.is_zero());
    }

    #[test]
    fn rejects_fibre_symbols_in_warp() {
        let base_chart = Chart::new(vec!["t", "z"], vec![-1, 1], vec![]).unwrap();
        let base = Metric::diagonal(
            "b",
            base_chart,
            vec![DiffExpr::from_int(-1), DiffExpr::one()],
        )
        .unwrap();
        let fibre_chart = Chart::new(vec!["u"], vec![1], vec![]).unwrap();
        let fibre = Metric::diagonal("f", fibre_chart.clone(), vec![DiffExpr::one()]).unwrap();
        let bad_f = DiffExpr::generator(Generator::Coord(crate::symkernel::sym("u")));
        assert!(matches!(
            warped_curvature(&base, &fibre, &bad_f),
            Err(WarpedError::ForeignSymbol(_))
        ));
    }
}
