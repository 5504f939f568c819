//! Structural classification of the Ricci tensor: Einstein and
//! (2-)quasi-Einstein rank tests over a symbolic shift S − αg, plus the
//! Codazzi, cyclic-parallel, parallel, recurrent, and semisymmetric
//! residuals.

use crate::curvature::{SymmetryClass, Tensor, TensorKind};
use crate::symkernel::DiffExpr;

use super::{solve_proportionality, ConditionReport, Suite, SuiteCtx, SuiteError, Verdict};

/// Exact rank of a square matrix over the scalar field by Gaussian
/// elimination with first-nonzero pivoting.
fn matrix_rank(mut m: Vec<Vec<DiffExpr>>) -> usize {
    let n = m.len();
    let mut rank = 0;
    let mut col = 0;
    while rank < n && col < n {
        let pivot = (rank..n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].inverse().expect("nonzero pivot");
        for c in col..n {
            if !m[rank][c].is_zero() {
                m[rank][c] = m[rank][c].mul(&inv);
            }
        }
        for r in (rank + 1)..n {
            let f = m[r][col].clone();
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let upd = m[rank][c].mul(&f);
                m[r][c] = m[r][c].sub(&upd);
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

fn shifted_matrix(s: &Tensor, g: &Tensor, alpha: &DiffExpr) -> Vec<Vec<DiffExpr>> {
    let n = s.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| s.get(&[i, j]).sub(&alpha.mul(g.get(&[i, j]))))
                .collect()
        })
        .collect()
}

/// Minimal rank of S − αg over the candidate shift functions α, with the
/// minimizing α. Candidates are the diagonal ratios S_ii/g_ii and r/n;
/// for a diagonal Ricci tensor this candidate set is exhaustive, because
/// off the ratios every diagonal entry of the shift is nonzero.
fn minimal_shift_rank(
    s: &Tensor,
    g: &Tensor,
    r_over_n: &DiffExpr,
) -> (usize, DiffExpr, bool) {
    let n = s.dim();
    let diagonal = (0..n).all(|i| {
        (0..n).all(|j| i == j || s.get(&[i, j]).is_zero() && g.get(&[i, j]).is_zero())
    });
    let mut candidates: Vec<DiffExpr> = Vec::new();
    for i in 0..n {
        let gi = g.get(&[i, i]);
        if gi.is_zero() {
            continue;
        }
        let ratio = s.get(&[i, i]).checked_div(gi).expect("nondegenerate metric entry");
        if !candidates.contains(&ratio) {
            candidates.push(ratio);
        }
    }
    if !candidates.contains(r_over_n) {
        candidates.push(r_over_n.clone());
    }
    let mut best_rank = usize::MAX;
    let mut best_alpha = DiffExpr::zero();
    for alpha in candidates {
        let rank = if diagonal {
            (0..n)
                .filter(|&i| !s.get(&[i, i]).sub(&alpha.mul(g.get(&[i, i]))).is_zero())
                .count()
        } else {
            matrix_rank(shifted_matrix(s, g, &alpha))
        };
        if rank < best_rank {
            best_rank = rank;
            best_alpha = alpha;
        }
    }
    (best_rank, best_alpha, diagonal)
}

fn residual_report(id: &str, residual: &Tensor, expected: Option<Verdict>) -> ConditionReport {
    let verdict = if residual.is_zero() { Verdict::Holds } else { Verdict::Fails };
    let mut r = ConditionReport::new(id, verdict).with_expected(expected);
    if let Some(i) = residual.first_nonzero() {
        r.note(format!(
            "first nonzero residual component {}",
            crate::curvature::label(&crate::curvature::decode(i, residual.dim(), residual.rank()))
        ));
    }
    r
}

/// Run the Ricci classification battery on a bundle.
pub fn classify_ricci(ctx: &SuiteCtx) -> Result<Suite, SuiteError> {
    let mut suite = Suite::new("ricci.classify");
    let n = ctx.dim();
    let claims_apply = !ctx.has_xi() && matches!(ctx.metric_name(), "ibh4" | "ibh5");
    let expect = |v: Verdict| if claims_apply { Some(v) } else { None };

    let g = ctx.tensor(TensorKind::Metric)?;
    let s = ctx.tensor(TensorKind::Ricci)?;
    let r_over_n = ctx.scalar()?.mul_rational(1, n as i64);

    // Einstein: S = (r/n) g.
    let einstein_residual = s.sub(&g.scale(&r_over_n));
    let einstein = residual_report("ricci.einstein", &einstein_residual, expect(Verdict::Fails));
    let is_einstein = einstein.verdict == Verdict::Holds;
    suite.reports.push(einstein);
    if is_einstein && s.is_zero() {
        suite.notes.push("Ricci flat (S = 0)".to_string());
    }

    // Quasi-Einstein ranks over the shift S - alpha g.
    if is_einstein {
        for id in ["ricci.quasi-einstein", "ricci.2-quasi-einstein"] {
            let mut r = ConditionReport::new(id, Verdict::Degenerate);
            r.note("Einstein metric: S - (r/n) g vanishes, rank conditions are vacuous");
            suite.reports.push(r);
        }
    } else {
        let (rank, alpha, diagonal) = minimal_shift_rank(&s, &g, &r_over_n);
        let note = format!(
            "minimal rank(S - alpha g) = {rank}{}",
            if diagonal { "" } else { " (candidate alphas from diagonal ratios only)" }
        );
        for (id, want) in [("ricci.quasi-einstein", 1), ("ricci.2-quasi-einstein", 2)] {
            let verdict = if rank == want { Verdict::Holds } else { Verdict::Fails };
            let expected = expect(if want == 2 { Verdict::Holds } else { Verdict::Fails });
            let mut r = ConditionReport::new(id, verdict).with_expected(expected);
            if verdict == Verdict::Holds {
                r.coefficients.push(("alpha".to_string(), alpha.clone()));
            }
            r.note(note.clone());
            suite.reports.push(r);
        }
    }

    // Gray classes and parallelism from nabla S (derivative index last).
    let ns = ctx.nabla(TensorKind::Ricci)?;
    let codazzi = Tensor::build(n, 3, SymmetryClass::None, |idx| {
        ns.get(idx).sub(ns.get(&[idx[2], idx[1], idx[0]]))
    });
    suite
        .reports
        .push(residual_report("ricci.codazzi", &codazzi, expect(Verdict::Fails)));
    let cyclic = Tensor::build(n, 3, SymmetryClass::None, |idx| {
        ns.get(idx)
            .add(ns.get(&[idx[1], idx[2], idx[0]]))
            .add(ns.get(&[idx[2], idx[0], idx[1]]))
    });
    suite
        .reports
        .push(residual_report("ricci.cyclic-parallel", &cyclic, expect(Verdict::Fails)));
    suite
        .reports
        .push(residual_report("ricci.parallel", &ns, expect(Verdict::Fails)));

    // Ricci recurrent: nabla S = A (x) S for a 1-form A, solved slice by
    // slice in the derivative index.
    if ns.is_zero() {
        let mut r = ConditionReport::new("ricci.recurrent", Verdict::Holds);
        r.note("parallel Ricci tensor; recurrence 1-form is zero".to_string());
        suite.reports.push(r);
    } else {
        let mut coeffs = Vec::new();
        let mut verdict = Verdict::Holds;
        let mut notes = Vec::new();
        for l in 0..n {
            let slice = Tensor::build(n, 2, SymmetryClass::None, |idx| {
                ns.get(&[idx[0], idx[1], l]).clone()
            });
            let sub = solve_proportionality("slice", "A", &slice, &s);
            match sub.verdict {
                Verdict::Holds => {
                    let a = sub
                        .coefficients
                        .first()
                        .map(|(_, e)| e.clone())
                        .unwrap_or_else(DiffExpr::zero);
                    coeffs.push((format!("A_{}", l + 1), a));
                }
                v => {
                    verdict = v;
                    notes.extend(sub.notes);
                    break;
                }
            }
        }
        let mut r = ConditionReport::new("ricci.recurrent", verdict);
        if verdict == Verdict::Holds {
            r.coefficients = coeffs;
        }
        r.notes = notes;
        suite.reports.push(r);
    }

    // Ricci semisymmetric: R . S = 0.
    let rs = ctx.action(TensorKind::Riemann, TensorKind::Ricci)?;
    suite
        .reports
        .push(residual_report("ricci.semisymmetric", &rs, expect(Verdict::Fails)));

    Ok(suite)
}
