//! Exact linear solvers over the scalar field: proportionality X = L·Y,
//! fully specified relations Σ cᵢTᵢ = 0, and small linear systems
//! Y = Σ cᵢXᵢ with unknown scalar coefficients.
//!
//! All verdicts come from exact zero tests; a relation "holds" only when
//! its residual vanishes identically.

use crate::curvature::{decode, label, Tensor};
use crate::symkernel::DiffExpr;

use super::{ConditionReport, Verdict};

fn component_label(t: &Tensor, flat: usize) -> String {
    label(&decode(flat, t.dim(), t.rank()))
}

/// Solve `x = L·y` for a scalar L by the first nonzero pivot of `y` in
/// index order, then verify the relation on every component.
pub fn solve_proportionality(id: &str, coeff: &str, x: &Tensor, y: &Tensor) -> ConditionReport {
    solve_proportionality_ordered(id, coeff, x, y, 0..x.len())
}

/// Same as [`solve_proportionality`] but with an explicit pivot search
/// order; the verdict and coefficient are pivot-independent.
pub fn solve_proportionality_ordered(
    id: &str,
    coeff: &str,
    x: &Tensor,
    y: &Tensor,
    order: impl IntoIterator<Item = usize>,
) -> ConditionReport {
    assert_eq!(x.dim(), y.dim(), "proportionality requires equal dimensions");
    assert_eq!(x.rank(), y.rank(), "proportionality requires equal ranks");
    let pivot = order.into_iter().find(|&i| !y.get_flat(i).is_zero());
    let Some(pivot) = pivot else {
        // y = 0: the relation constrains nothing; it holds iff x = 0.
        return match x.first_nonzero() {
            None => {
                let mut r = ConditionReport::new(id, Verdict::Holds);
                r.coefficients.push((coeff.to_string(), DiffExpr::zero()));
                r.note("right-hand side vanishes identically; coefficient unconstrained");
                r
            }
            Some(i) => {
                let mut r = ConditionReport::new(id, Verdict::Degenerate);
                r.note(format!(
                    "right-hand side vanishes identically but left-hand side is nonzero \
                     (first at component {})",
                    component_label(x, i)
                ));
                r
            }
        };
    };
    let l = x
        .get_flat(pivot)
        .checked_div(y.get_flat(pivot))
        .expect("pivot is nonzero");
    let mismatch = (0..x.len()).find(|&i| {
        let yi = y.get_flat(i);
        let xi = x.get_flat(i);
        if yi.is_zero() {
            !xi.is_zero()
        } else {
            xi != &l.mul(yi)
        }
    });
    match mismatch {
        None => {
            let mut r = ConditionReport::new(id, Verdict::Holds);
            r.coefficients.push((coeff.to_string(), l));
            r
        }
        Some(i) => {
            let mut r = ConditionReport::new(id, Verdict::Fails);
            r.coefficients.push((coeff.to_string(), l));
            r.note(format!(
                "residual nonzero; first mismatch at component {} (pivot {})",
                component_label(x, i),
                component_label(y, pivot)
            ));
            r
        }
    }
}

/// Verify a fully specified relation `sum c_i T_i = 0` exactly.
pub fn verify_relation(id: &str, terms: &[(DiffExpr, &Tensor)]) -> ConditionReport {
    assert!(terms.len() >= 2, "a relation needs at least two terms");
    let first = terms[0].1;
    for (_, t) in terms {
        assert_eq!(t.dim(), first.dim(), "relation terms must share dimension");
        assert_eq!(t.rank(), first.rank(), "relation terms must share rank");
    }
    for i in 0..first.len() {
        let mut acc = DiffExpr::zero();
        for (c, t) in terms {
            if c.is_zero() {
                continue;
            }
            let e = t.get_flat(i);
            if e.is_zero() {
                continue;
            }
            acc = acc.add(&c.mul(e));
        }
        if !acc.is_zero() {
            let mut r = ConditionReport::new(id, Verdict::Fails);
            r.note(format!(
                "residual nonzero; first at component {}",
                component_label(first, i)
            ));
            return r;
        }
    }
    ConditionReport::new(id, Verdict::Holds)
}

/// Solve `target = sum c_j columns_j` for unknown scalars by incremental
/// Gauss–Jordan elimination over the component equations, then verify the
/// full tensor relation with the solved coefficients.
///
/// When the columns are linearly dependent over the whole index range,
/// `degenerate_on_rank_deficit` selects between reporting `Degenerate`
/// (the decomposition-style conditions, which require an invertible
/// subsystem) and setting the undetermined coefficients to zero (the
/// clause-style conditions, where a dependent column is simply absorbed).
pub fn solve_system(
    id: &str,
    names: &[&str],
    target: &Tensor,
    columns: &[&Tensor],
    degenerate_on_rank_deficit: bool,
) -> ConditionReport {
    assert_eq!(names.len(), columns.len());
    let m = columns.len();
    for c in columns {
        assert_eq!(c.dim(), target.dim(), "system columns must match target dimension");
        assert_eq!(c.rank(), target.rank(), "system columns must match target rank");
    }
    // Echelon rows: (coefficient row, rhs, pivot column), pivot entry 1.
    let mut rows: Vec<(Vec<DiffExpr>, DiffExpr, usize)> = Vec::new();
    for i in 0..target.len() {
        if rows.len() == m {
            break;
        }
        let mut row: Vec<DiffExpr> = columns.iter().map(|c| c.get_flat(i).clone()).collect();
        let mut rhs = target.get_flat(i).clone();
        if row.iter().all(|e| e.is_zero()) && rhs.is_zero() {
            continue;
        }
        for (prow, prhs, p) in &rows {
            let f = row[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (a, b) in row.iter_mut().zip(prow) {
                if !b.is_zero() {
                    *a = a.sub(&f.mul(b));
                }
            }
            rhs = rhs.sub(&f.mul(prhs));
        }
        let Some(p) = row.iter().position(|e| !e.is_zero()) else {
            if !rhs.is_zero() {
                let mut r = ConditionReport::new(id, Verdict::Fails);
                r.note(format!(
                    "no exact solution: component {} is independent of every column",
                    component_label(target, i)
                ));
                return r;
            }
            continue;
        };
        let inv = row[p].inverse().expect("pivot is nonzero");
        for a in row.iter_mut() {
            if !a.is_zero() {
                *a = a.mul(&inv);
            }
        }
        rhs = rhs.mul(&inv);
        // Gauss–Jordan: clear the new pivot column from the stored rows.
        for (prow, prhs, _) in rows.iter_mut() {
            let f = prow[p].clone();
            if f.is_zero() {
                continue;
            }
            for (a, b) in prow.iter_mut().zip(&row) {
                if !b.is_zero() {
                    *a = a.sub(&f.mul(b));
                }
            }
            *prhs = prhs.sub(&f.mul(&rhs));
        }
        rows.push((row, rhs, p));
    }
    let mut notes = Vec::new();
    if rows.len() < m {
        if degenerate_on_rank_deficit {
            let mut r = ConditionReport::new(id, Verdict::Degenerate);
            r.note(format!(
                "columns are linearly dependent over all components (rank {} of {})",
                rows.len(),
                m
            ));
            return r;
        }
        let free: Vec<&str> = (0..m)
            .filter(|j| rows.iter().all(|(_, _, p)| p != j))
            .map(|j| names[j])
            .collect();
        notes.push(format!(
            "dependent columns; coefficient(s) set to zero: {}",
            free.join(", ")
        ));
    }
    let mut solution = vec![DiffExpr::zero(); m];
    for (_, rhs, p) in &rows {
        solution[*p] = rhs.clone();
    }
    // Full residual check with the solved coefficients.
    for i in 0..target.len() {
        let mut acc = target.get_flat(i).clone();
        for (c, col) in solution.iter().zip(columns) {
            if c.is_zero() {
                continue;
            }
            let e = col.get_flat(i);
            if !e.is_zero() {
                acc = acc.sub(&c.mul(e));
            }
        }
        if !acc.is_zero() {
            let mut r = ConditionReport::new(id, Verdict::Fails);
            r.coefficients = names
                .iter()
                .map(|n| n.to_string())
                .zip(solution.clone())
                .collect();
            r.note(format!(
                "solved coefficients do not close the relation; first residual at {}",
                component_label(target, i)
            ));
            return r;
        }
    }
    let mut r = ConditionReport::new(id, Verdict::Holds);
    r.coefficients = names.iter().map(|n| n.to_string()).zip(solution).collect();
    r.notes = notes;
    r
}
