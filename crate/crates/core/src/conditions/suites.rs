//! The named condition suites: pointwise pseudosymmetry relations with
//! their closed-form coefficients, inter-action equalities, Roter
//! decomposition, the universal Tachibana/action identities, the excluded
//! structures, and the special-xi substitution checks.
//!
//! Suites and individual conditions are addressed by stable string IDs
//! ("thm4.2", "thm4.2.x", "sec2.identities", "neg.RC.QSC", ...). Every
//! relation is verified as an exact tensor identity over the symbolic
//! kernel; the log-trigonometric xi forms that the kernel cannot
//! represent are cross-checked numerically on a fixed point grid and
//! reported as numeric-verified.

use std::sync::Arc;

use crate::chart::Metric;
use crate::curvature::{decode, label, Tensor, TensorKind};
use crate::exprparse::{parse_expr, parse_xi_form};
use crate::oracle::{self, EvalPoint, XiForm};
use crate::symkernel::DiffExpr;

use super::{
    classify_ricci, solve_proportionality, solve_system, verify_relation, ConditionReport, Suite,
    SuiteCtx, SuiteError, Verdict,
};

use TensorKind::{
    Concircular as Wt, Conharmonic as Kt, Gtensor as GGt, Metric as Gt, Projective as Pt,
    Ricci as St, Riemann as Rt, Weyl as Ct,
};

/// The tensors ranged over by `Z` in the pointwise theorems.
const ZLIST: [(TensorKind, &str); 6] = [
    (Rt, "R"),
    (St, "S"),
    (Ct, "C"),
    (Wt, "W"),
    (Kt, "K"),
    (Pt, "P"),
];

// Closed-form coefficients of the 4-dimensional relations.
const L1: &str = "(xi - t*xi')/t^3";
const L2: &str = "(6*xi - 4*t*xi' + t^2*xi'')/(6*t^3)";
const L3: &str = "(2*xi + t^2*xi'')/(2*t^3)";
const L5: &str = "-(2*xi' + t*xi'')/(6*t^2)";
const L6: &str = "-(2*xi' + t*xi'')/(3*t^2)";
const L7: &str = "(3*xi + t*xi' + 2*t^2*xi'')/(3*t^3)";
const L8: &str = "(6*xi^2 - 4*t*xi*xi' - 2*t^2*xi'^2 + 4*t^2*xi*xi'')/(t^3*(6*xi - 4*t*xi' + t^2*xi''))";
const L9: &str = "-3*t*(6*xi'*(xi - t*xi') + t*(t*xi' + 3*xi)*xi'')";
const L10: &str = "6*(-t^2*xi'^2 + 2*t*xi*(t*xi'' - xi') + 3*xi^2)";
const L11: &str = "t^2*(-t^2*xi''^2 + 2*xi'^2 + 2*t*xi'*xi'') + 6*t*xi*(t*xi'' - 4*xi') + 18*xi^2";
const L12: &str = "(-2*xi + 4*t*xi' + t^2*xi'')/(2*t^3)";
const L13: &str = "(3*xi^2 - 2*t*xi*xi' - t^2*xi'^2 + 2*t^2*xi*xi'')/(3*t^6)";
const L14: &str = "(3*xi - 5*t*xi' - t^2*xi'')/(3*t^3)";
const L15: &str = "(4*t^2*xi' + 4*t^3*xi'*xi'' + t^4*xi''^2)/(3*t^6)";
const L15_SQUARED_FIRST_TERM: &str = "(4*t^2*xi'^2 + 4*t^3*xi'*xi'' + t^4*xi''^2)/(3*t^6)";
const L16: &str = "(2*xi - 4*t*xi' - t^2*xi'')/(2*t^3)";
const PHI4: &str = "-(6*t*xi - 4*t^2*xi' + t^3*xi'')/((t*xi'' - 2*xi')^2)";
const MU4: &str = "-(6*xi*xi' - 6*t*xi'^2 + 3*t*xi*xi'' + t^2*xi*xi'')/(t*(t*xi'' - 2*xi')^2)";
const MU4_XIPRIME: &str = "-(6*xi*xi' - 6*t*xi'^2 + 3*t*xi*xi'' + t^2*xi'*xi'')/(t*(t*xi'' - 2*xi')^2)";
const ETA4: &str =
    "-2*(4*xi*xi'^2 - 4*t*xi'^3 + 2*t*xi*xi'*xi'' + t^2*xi*xi''^2)/(t^3*(t*xi'' - 2*xi')^2)";

// Closed-form coefficients of the 5-dimensional relations.
const N1: &str = "(2*xi - t*xi')/t^4";
const N2: &str = "(12*xi - 6*t*xi' + t^2*xi'')/(6*t^4)";
const N3: &str = "(20*xi - 8*t*xi' + t^2*xi'')/(10*t^4)";
const N4: &str = "(6*xi - 2*t*xi' + t^2*xi'')/(3*t^4)";
const N5: &str = "-(2*xi' + t*xi'')/(10*t^3)";
const N6: &str = "-(2*xi' + t*xi'')/(6*t^3)";
const N7: &str = "(4*xi + t^2*xi'')/(2*t^4)";
const N8: &str = "3*(8*xi^2 - 4*t*xi*xi' - t^2*xi'^2 + 2*t^2*xi*xi'')/(t^4*(12*xi - 6*t*xi' + t^2*xi''))";
const N9: &str = "-(3*xi'*(4*xi - 3*t*xi') + t*xi''*(4*xi + t*xi'))/(2*t^7)";
const N10: &str =
    "(-80*xi^2 + 64*t*xi*xi' - 2*t^2*xi'^2 - 4*t^2*xi''*(2*xi + t*xi') + t^4*xi''^2)/(20*t^8)";
const N11: &str = "(-6*xi + 6*t*xi' + t^2*xi'')/(3*t^4)";
const N12: &str = "(20*xi - 16*t*xi' - 3*t^2*xi'')/(10*t^4)";
const N13: &str = "(6*xi'^2 + 5*t*xi'*xi'' + t^2*xi''^2)/(6*t^6)";
const N14: &str = "(240*xi^2 - 216*t*xi*xi' + 48*t^2*xi'^2 + 32*t^2*xi*xi'' - 14*t^3*xi'*xi'' + t^4*xi''^2)/(60*t^8)";
const PHI5: &str = "-t^2*(12*xi + t*(t*xi'' - 6*xi'))/((3*xi' - t*xi'')^2)";
const MU5: &str = "-(3*xi'*(4*xi - 3*t*xi') + t*(4*xi + t*xi')*xi'')/(t*(3*xi' - t*xi'')^2)";
const ETA5: &str =
    "-2*(-6*t*xi'^3 + xi*(9*xi'^2 + 2*t*xi'*xi'' + t^2*xi''^2))/(t^4*(3*xi' - t*xi'')^2)";

/// Parse a closed-form coefficient in the context chart and apply the
/// context substitution.
fn coeff(ctx: &SuiteCtx, src: &str) -> Result<DiffExpr, SuiteError> {
    let chart = ctx.bundle().metric().chart();
    let raw = parse_expr(src, &chart.resolver()).map_err(|e| {
        SuiteError::Unsupported(format!(
            "coefficient `{src}` is not definable in the chart of `{}`: {e}",
            ctx.metric_name()
        ))
    })?;
    Ok(ctx.subst(&raw)?)
}

fn require_time(ctx: &SuiteCtx) -> Result<(), SuiteError> {
    if ctx.bundle().metric().chart().has_time() {
        Ok(())
    } else {
        Err(SuiteError::Unsupported(format!(
            "suite needs a chart with time coordinate `t`; metric `{}` has none",
            ctx.metric_name()
        )))
    }
}

/// Expected verdict for a claim stated on a specific builtin metric;
/// suspended under a xi substitution or on any other metric.
fn home_expect(ctx: &SuiteCtx, home: &str, v: Verdict) -> Option<Verdict> {
    (!ctx.has_xi() && ctx.metric_name() == home).then_some(v)
}

/// Push the report from `f`, downgrading a failed substitution (for
/// example a coefficient denominator that vanishes under the context xi)
/// to a degenerate verdict instead of aborting the suite.
fn clause(
    suite: &mut Suite,
    id: &str,
    f: impl FnOnce() -> Result<ConditionReport, SuiteError>,
) -> Result<(), SuiteError> {
    match f() {
        Ok(rep) => suite.reports.push(rep),
        Err(SuiteError::Substitution(e)) => {
            let mut rep = ConditionReport::new(id, Verdict::Degenerate);
            rep.note(format!("undefined after substitution: {e}"));
            suite.reports.push(rep);
        }
        Err(other) => return Err(other),
    }
    Ok(())
}

/// One fully specified coefficient set for a linear relation Σ cᵢTᵢ = 0.
struct Candidate {
    coeffs: Vec<(String, DiffExpr)>,
    terms: Vec<(DiffExpr, Arc<Tensor>)>,
    note: Option<String>,
}

impl Candidate {
    fn new(coeffs: Vec<(String, DiffExpr)>, terms: Vec<(DiffExpr, Arc<Tensor>)>) -> Candidate {
        Candidate { coeffs, terms, note: None }
    }

    fn with_note(mut self, note: impl Into<String>) -> Candidate {
        self.note = Some(note.into());
        self
    }
}

/// Verify a relation against one or more candidate coefficient sets; the
/// first set that makes the residual vanish wins. When none does, the
/// report for the first set is returned.
fn relation_item(id: &str, expected: Option<Verdict>, candidates: Vec<Candidate>) -> ConditionReport {
    let mut first: Option<ConditionReport> = None;
    for cand in &candidates {
        let terms: Vec<(DiffExpr, &Tensor)> =
            cand.terms.iter().map(|(c, t)| (c.clone(), &**t)).collect();
        let mut rep = verify_relation(id, &terms).with_expected(expected);
        rep.coefficients = cand.coeffs.clone();
        if rep.verdict == Verdict::Holds {
            if let Some(n) = &cand.note {
                rep.note(n.clone());
            }
            return rep;
        }
        if first.is_none() {
            first = Some(rep);
        }
    }
    first.expect("relation_item needs at least one candidate")
}

/// Equality of two tensors as a two-term relation.
fn eq_item(id: &str, expected: Option<Verdict>, lhs: Arc<Tensor>, rhs: Arc<Tensor>) -> ConditionReport {
    relation_item(
        id,
        expected,
        vec![Candidate::new(
            Vec::new(),
            vec![(DiffExpr::one(), lhs), (DiffExpr::one().neg(), rhs)],
        )],
    )
}

/// Holds iff the tensor vanishes identically.
fn zero_item(id: &str, t: &Tensor, expected: Option<Verdict>) -> ConditionReport {
    match t.first_nonzero() {
        None => ConditionReport::new(id, Verdict::Holds).with_expected(expected),
        Some(i) => {
            let mut rep = ConditionReport::new(id, Verdict::Fails).with_expected(expected);
            rep.note(format!(
                "nonzero component {}",
                label(&decode(i, t.dim(), t.rank()))
            ));
            rep
        }
    }
}

/// Holds iff the tensor does *not* vanish identically.
fn nonzero_item(id: &str, t: &Tensor, expected: Option<Verdict>) -> ConditionReport {
    match t.first_nonzero() {
        Some(i) => {
            let mut rep = ConditionReport::new(id, Verdict::Holds).with_expected(expected);
            rep.residual_zero = false;
            rep.note(format!(
                "nonzero as required; witness component {}",
                label(&decode(i, t.dim(), t.rank()))
            ));
            rep
        }
        None => {
            let mut rep = ConditionReport::new(id, Verdict::Fails).with_expected(expected);
            rep.residual_zero = true;
            rep.note("tensor vanishes identically");
            rep
        }
    }
}

// ---------------------------------------------------------------------------
// Pointwise theorems: D·Z = L Q(g,Z) families (4- and 5-dimensional).
// ---------------------------------------------------------------------------

fn thm_pointwise(ctx: &SuiteCtx, which: &str) -> Result<Suite, SuiteError> {
    require_time(ctx)?;
    let (home, lead, srcs, qs_frac) = match which {
        "thm4.1" => ("ibh4", ["L1", "L2", "L2", "L3"], [L1, L2, L2, L3], 3),
        "thm4.3" => ("ibh5", ["N1", "N2", "N3", "N4"], [N1, N2, N3, N4], 4),
        _ => unreachable!("thm_pointwise only handles the proportionality theorems"),
    };
    let mut suite = Suite::new(which);
    let expected = home_expect(ctx, home, Verdict::Holds);
    let actors = [Rt, Ct, Wt, Kt];
    let romans = ["i", "ii", "iii", "iv"];
    for k in 0..4 {
        for (z, zn) in ZLIST {
            let id = format!("{which}.{}.{zn}", romans[k]);
            clause(&mut suite, &id, || {
                let l = coeff(ctx, srcs[k])?;
                let lhs = ctx.action(actors[k], z)?;
                let rhs = ctx.tachibana(Gt, z)?;
                Ok(relation_item(
                    &id,
                    expected,
                    vec![Candidate::new(
                        vec![(lead[k].to_string(), l.clone())],
                        vec![(DiffExpr::one(), lhs), (l.neg(), rhs)],
                    )],
                ))
            })?;
        }
    }
    let id = format!("{which}.v");
    clause(&mut suite, &id, || {
        let l = coeff(ctx, srcs[0])?;
        let lhs = ctx.action(Pt, St)?;
        let rhs = ctx.tachibana(Gt, St)?;
        Ok(relation_item(
            &id,
            expected,
            vec![Candidate::new(
                vec![(lead[0].to_string(), l.clone())],
                vec![(DiffExpr::one(), lhs), (l.neg(), rhs)],
            )],
        ))
    })?;
    for (z, zn) in ZLIST {
        let id = format!("{which}.vi.{zn}");
        clause(&mut suite, &id, || {
            let l = coeff(ctx, srcs[0])?;
            let frac = DiffExpr::rational(-1, qs_frac);
            let pz = ctx.action(Pt, z)?;
            let qgz = ctx.tachibana(Gt, z)?;
            let qsz = ctx.tachibana(St, z)?;
            Ok(relation_item(
                &id,
                expected,
                vec![Candidate::new(
                    vec![(lead[0].to_string(), l.clone()), ("c".to_string(), frac.clone())],
                    vec![(DiffExpr::one(), pz), (l.neg(), qgz), (frac.neg(), qsz)],
                )],
            ))
        })?;
    }
    Ok(suite)
}

// ---------------------------------------------------------------------------
// Roter decomposition R = (phi/2) S∧S + mu g∧S + eta G.
// ---------------------------------------------------------------------------

fn roter_solve(ctx: &SuiteCtx, id: &str) -> Result<ConditionReport, SuiteError> {
    let r = ctx.tensor(Rt)?;
    let ss_half = Arc::new(ctx.wedge(St, St)?.scale(&DiffExpr::rational(1, 2)));
    let gs = ctx.wedge(Gt, St)?;
    let gg = ctx.tensor(GGt)?;
    Ok(solve_system(id, &["phi", "mu", "eta"], &r, &[&ss_half, &gs, &gg], true))
}

/// Extract a named coefficient from a solved report.
fn solved_coeff(rep: &ConditionReport, name: &str) -> Option<DiffExpr> {
    rep.coefficients
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, e)| e.clone())
}

/// Roter item that also checks the solved coefficients against stated
/// closed forms (several candidate spellings allowed per coefficient).
fn roter_compare_item(
    ctx: &SuiteCtx,
    id: &str,
    home: &str,
    forms: &[(&str, &[&str])],
) -> Result<ConditionReport, SuiteError> {
    let expected = home_expect(ctx, home, Verdict::Holds);
    let mut rep = roter_solve(ctx, id)?.with_expected(expected);
    if rep.verdict != Verdict::Holds {
        return Ok(rep);
    }
    for (name, candidates) in forms {
        let solved = solved_coeff(&rep, name).expect("solved coefficient present");
        let mut matched = None;
        for (i, src) in candidates.iter().enumerate() {
            if coeff(ctx, src)? == solved {
                matched = Some(i);
                break;
            }
        }
        match matched {
            Some(0) => {}
            Some(i) => rep.note(format!("{name} matches the closed form {}", candidates[i])),
            None => {
                rep.verdict = Verdict::Fails;
                rep.residual_zero = true;
                rep.note(format!(
                    "decomposition exists but {name} differs from the stated closed form"
                ));
            }
        }
    }
    if rep.verdict == Verdict::Holds {
        rep.note("solved coefficients match the stated closed forms");
    }
    Ok(rep)
}

/// The standalone Roter suite: solve the decomposition on the context
/// metric, whatever it is.
fn roter_suite(ctx: &SuiteCtx) -> Result<Suite, SuiteError> {
    let mut suite = Suite::new("roter");
    let expected = match ctx.metric_name() {
        "ibh4" | "ibh5" if !ctx.has_xi() => Some(Verdict::Holds),
        _ => None,
    };
    clause(&mut suite, "roter", || {
        Ok(roter_solve(ctx, "roter")?.with_expected(expected))
    })?;
    Ok(suite)
}

/// Consistency identity tying the R·R-vs-Q(S,R) coefficient to the Roter
/// coefficients: L = L_lead + mu/phi = (n-2)(mu^2 - phi eta)/phi.
fn roter_consistency_item(
    ctx: &SuiteCtx,
    id: &str,
    home: &str,
    lead_src: &str,
    l8_src: &str,
) -> Result<ConditionReport, SuiteError> {
    let expected = home_expect(ctx, home, Verdict::Holds);
    let solved = roter_solve(ctx, id)?;
    if solved.verdict != Verdict::Holds {
        let mut rep = ConditionReport::new(id, Verdict::Degenerate).with_expected(expected);
        rep.note("no Roter decomposition to test against");
        return Ok(rep);
    }
    let phi = solved_coeff(&solved, "phi").expect("phi solved");
    let mu = solved_coeff(&solved, "mu").expect("mu solved");
    let eta = solved_coeff(&solved, "eta").expect("eta solved");
    let lead = coeff(ctx, lead_src)?;
    let l8 = coeff(ctx, l8_src)?;
    let n = ctx.dim() as i64;
    let phi_inv = phi.inverse()?;
    let first = lead.add(&mu.mul(&phi_inv));
    let second = mu
        .mul(&mu)
        .sub(&phi.mul(&eta))
        .mul(&phi_inv)
        .mul_rational(n - 2, 1);
    let ok = first == l8 && second == l8;
    let mut rep = ConditionReport::new(
        id,
        if ok { Verdict::Holds } else { Verdict::Fails },
    )
    .with_expected(expected);
    rep.coefficients = vec![("phi".into(), phi), ("mu".into(), mu), ("eta".into(), eta)];
    if ok {
        rep.note("both consistency expressions reduce to the stated coefficient exactly");
    } else if first != l8 {
        rep.note("lead + mu/phi differs from the stated coefficient");
    } else {
        rep.note("(n-2)(mu^2 - phi*eta)/phi differs from the stated coefficient");
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// The 19-clause 4-dimensional relation family.
// ---------------------------------------------------------------------------

fn thm42(ctx: &SuiteCtx) -> Result<Suite, SuiteError> {
    require_time(ctx)?;
    let mut suite = Suite::new("thm4.2");
    let holds = home_expect(ctx, "ibh4", Verdict::Holds);
    let one = DiffExpr::one;

    let equalities: [(&str, (TensorKind, TensorKind), (TensorKind, TensorKind)); 9] = [
        ("thm4.2.i.CK-WK", (Ct, Kt), (Wt, Kt)),
        ("thm4.2.i.CK-WC", (Ct, Kt), (Wt, Ct)),
        ("thm4.2.i.CC-WC", (Ct, Ct), (Wt, Ct)),
        ("thm4.2.ii.WK-WC", (Wt, Kt), (Wt, Ct)),
        ("thm4.2.ii.CK-CC", (Ct, Kt), (Ct, Ct)),
        ("thm4.2.iii", (Wt, Kt), (Ct, Ct)),
        ("thm4.2.iv", (Ct, Wt), (Wt, Rt)),
        ("thm4.2.v.RS-PS", (Rt, St), (Pt, St)),
        ("thm4.2.v.CS-WS", (Ct, St), (Wt, St)),
    ];
    for (id, (d1, t1), (d2, t2)) in equalities {
        clause(&mut suite, id, || {
            Ok(eq_item(id, holds, ctx.action(d1, t1)?, ctx.action(d2, t2)?))
        })?;
    }

    clause(&mut suite, "thm4.2.vi", || {
        let l1 = coeff(ctx, L1)?;
        let l3 = coeff(ctx, L3)?;
        Ok(relation_item(
            "thm4.2.vi",
            holds,
            vec![Candidate::new(
                vec![("L1".into(), l1.clone()), ("L3".into(), l3.clone())],
                vec![(l3, ctx.action(Rt, Kt)?), (l1.neg(), ctx.action(Kt, Ct)?)],
            )],
        ))
    })?;

    // Difference relations with a single stated coefficient.
    let diffs: [(&str, &str, &str, (TensorKind, TensorKind), (TensorKind, TensorKind), TensorKind); 2] = [
        ("thm4.2.vii", "L5", L5, (Rt, Wt), (Wt, Rt), Rt),
        ("thm4.2.viii", "L6", L6, (Ct, Kt), (Kt, Ct), Ct),
    ];
    for (id, name, src, lhs, rhs, q) in diffs {
        clause(&mut suite, id, || {
            let l = coeff(ctx, src)?;
            Ok(relation_item(
                id,
                holds,
                vec![Candidate::new(
                    vec![(name.into(), l.clone())],
                    vec![
                        (one(), ctx.action(lhs.0, lhs.1)?),
                        (one().neg(), ctx.action(rhs.0, rhs.1)?),
                        (l.neg(), ctx.tachibana(Gt, q)?),
                    ],
                )],
            ))
        })?;
    }

    // D·T - Q(S,T) = L Q(g,C) relations.
    let shifted: [(&str, &str, &str, (TensorKind, TensorKind), TensorKind); 2] = [
        ("thm4.2.ix", "L7", L7, (Ct, Rt), Ct),
        ("thm4.2.x", "L8", L8, (Rt, Rt), Rt),
    ];
    for (id, name, src, lhs, qs) in shifted {
        clause(&mut suite, id, || {
            let l = coeff(ctx, src)?;
            Ok(relation_item(
                id,
                holds,
                vec![Candidate::new(
                    vec![(name.into(), l.clone())],
                    vec![
                        (one(), ctx.action(lhs.0, lhs.1)?),
                        (one().neg(), ctx.tachibana(St, qs)?),
                        (l.neg(), ctx.tachibana(Gt, Ct)?),
                    ],
                )],
            ))
        })?;
    }

    clause(&mut suite, "thm4.2.xi", || {
        let l1 = coeff(ctx, L1)?;
        let l6 = coeff(ctx, L6)?;
        let l9 = coeff(ctx, L9)?;
        let l10 = coeff(ctx, L10)?;
        let l11 = coeff(ctx, L11)?;
        Ok(relation_item(
            "thm4.2.xi",
            holds,
            vec![Candidate::new(
                vec![
                    ("L6*L9".into(), l6.mul(&l9)),
                    ("L1*L10".into(), l1.mul(&l10)),
                    ("L1*L11".into(), l1.mul(&l11)),
                ],
                vec![
                    (l6.mul(&l9), ctx.action(Rt, Wt)?),
                    (l1.mul(&l10), ctx.tachibana(St, Wt)?),
                    (l1.mul(&l11).neg(), ctx.tachibana(St, Rt)?),
                ],
            )],
        ))
    })?;

    clause(&mut suite, "thm4.2.xii", || {
        let l3 = coeff(ctx, L3)?;
        let l12 = coeff(ctx, L12)?;
        Ok(relation_item(
            "thm4.2.xii",
            holds,
            vec![Candidate::new(
                vec![("L3".into(), l3.clone()), ("L12".into(), l12.clone())],
                vec![
                    (l3.clone(), ctx.action(Rt, Kt)?),
                    (l12, ctx.action(Kt, Rt)?),
                    (l3, ctx.tachibana(St, Kt)?),
                ],
            )],
        ))
    })?;

    clause(&mut suite, "thm4.2.xiii", || {
        let l1 = coeff(ctx, L1)?;
        let l2 = coeff(ctx, L2)?;
        let l3 = coeff(ctx, L3)?;
        let l13 = coeff(ctx, L13)?;
        Ok(relation_item(
            "thm4.2.xiii",
            holds,
            vec![Candidate::new(
                vec![
                    ("L3*L13".into(), l3.mul(&l13)),
                    ("L1^2*L2".into(), l1.mul(&l1).mul(&l2)),
                    ("L1*L2*L3".into(), l1.mul(&l2).mul(&l3)),
                ],
                vec![
                    (l3.mul(&l13), ctx.action(Rt, Kt)?),
                    (l1.mul(&l1).mul(&l2).neg(), ctx.action(Kt, Rt)?),
                    (l1.mul(&l2).mul(&l3), ctx.tachibana(St, Rt)?),
                ],
            )],
        ))
    })?;

    clause(&mut suite, "thm4.2.xiv", || {
        let l2 = coeff(ctx, L2)?;
        let l7 = coeff(ctx, L7)?;
        Ok(relation_item(
            "thm4.2.xiv",
            holds,
            vec![Candidate::new(
                vec![("L2".into(), l2.clone()), ("L7".into(), l7.clone())],
                vec![
                    (l2.clone(), ctx.action(Ct, Wt)?),
                    (l7.neg(), ctx.action(Wt, Ct)?),
                    (l2.neg(), ctx.tachibana(St, Ct)?),
                ],
            )],
        ))
    })?;

    clause(&mut suite, "thm4.2.xv", || {
        let l2 = coeff(ctx, L2)?;
        let l11 = coeff(ctx, L11)?;
        let l14 = coeff(ctx, L14)?;
        let scale = coeff(ctx, "1/(18*t^6)")?;
        Ok(relation_item(
            "thm4.2.xv",
            holds,
            vec![Candidate::new(
                vec![
                    ("L2*L14".into(), l2.mul(&l14)),
                    ("L11/(18*t^6)".into(), l11.mul(&scale)),
                    ("L2^2".into(), l2.mul(&l2)),
                ],
                vec![
                    (l2.mul(&l14), ctx.action(Ct, Wt)?),
                    (l11.mul(&scale).neg(), ctx.action(Wt, Ct)?),
                    (l2.mul(&l2).neg(), ctx.tachibana(St, Wt)?),
                ],
            )],
        ))
    })?;

    clause(&mut suite, "thm4.2.xvi", || {
        let l2 = coeff(ctx, L2)?;
        let l16 = coeff(ctx, L16)?;
        let ck = ctx.action(Ct, Kt)?;
        let qsk = ctx.tachibana(St, Kt)?;
        let qsc = ctx.tachibana(St, Ct)?;
        let mut candidates = Vec::new();
        for (src, note) in [
            (L15, None),
            (
                L15_SQUARED_FIRST_TERM,
                Some("L15 taken as (2*t*xi' + t^2*xi'')^2/(3*t^6)"),
            ),
        ] {
            let l15 = coeff(ctx, src)?;
            let mut cand = Candidate::new(
                vec![
                    ("L15".into(), l15.clone()),
                    ("L2^2".into(), l2.mul(&l2)),
                    ("L2*L16".into(), l2.mul(&l16)),
                ],
                vec![
                    (l15, ck.clone()),
                    (l2.mul(&l2), qsk.clone()),
                    (l2.mul(&l16).neg(), qsc.clone()),
                ],
            );
            if let Some(n) = note {
                cand = cand.with_note(n);
            }
            candidates.push(cand);
        }
        Ok(relation_item("thm4.2.xvi", holds, candidates))
    })?;

    clause(&mut suite, "thm4.2.xvii", || {
        let l2 = coeff(ctx, L2)?;
        let l3 = coeff(ctx, L3)?;
        let l11 = coeff(ctx, L11)?;
        let l14 = coeff(ctx, L14)?;
        let wk = ctx.action(Wt, Kt)?;
        let kw = ctx.action(Kt, Wt)?;
        let qsw = ctx.tachibana(St, Wt)?;
        let big = coeff(ctx, "18*t^6")?;
        let small = coeff(ctx, "1/(18*t^6)")?;
        let mut candidates = Vec::new();
        for (lead, note) in [
            (l3.mul(&l11).mul(&big), None),
            (
                l3.mul(&l11).mul(&small),
                Some("leading coefficient taken as L3*L11/(18*t^6)"),
            ),
        ] {
            let mut cand = Candidate::new(
                vec![
                    ("lead".into(), lead.clone()),
                    ("L2^2*L14".into(), l2.mul(&l2).mul(&l14)),
                    ("L2^2*L3".into(), l2.mul(&l2).mul(&l3)),
                ],
                vec![
                    (lead, wk.clone()),
                    (l2.mul(&l2).mul(&l14).neg(), kw.clone()),
                    (l2.mul(&l2).mul(&l3), qsw.clone()),
                ],
            );
            if let Some(n) = note {
                cand = cand.with_note(n);
            }
            candidates.push(cand);
        }
        Ok(relation_item("thm4.2.xvii", holds, candidates))
    })?;

    clause(&mut suite, "thm4.2.xviii", || {
        let l1 = coeff(ctx, L1)?;
        let l2 = coeff(ctx, L2)?;
        let l3 = coeff(ctx, L3)?;
        let l12 = coeff(ctx, L12)?;
        Ok(relation_item(
            "thm4.2.xviii",
            holds,
            vec![Candidate::new(
                vec![
                    ("L1*L3".into(), l1.mul(&l3)),
                    ("L2*L12".into(), l2.mul(&l12)),
                    ("L2*L3".into(), l2.mul(&l3)),
                ],
                vec![
                    (l1.mul(&l3), ctx.action(Wt, Kt)?),
                    (l2.mul(&l12), ctx.action(Kt, Wt)?),
                    (l2.mul(&l3), ctx.tachibana(St, Kt)?),
                ],
            )],
        ))
    })?;

    clause(&mut suite, "thm4.2.xix", || {
        roter_compare_item(
            ctx,
            "thm4.2.xix",
            "ibh4",
            &[
                ("phi", &[PHI4]),
                ("mu", &[MU4, MU4_XIPRIME]),
                ("eta", &[ETA4]),
            ],
        )
    })?;

    clause(&mut suite, "thm4.2.consistency", || {
        roter_consistency_item(ctx, "thm4.2.consistency", "ibh4", L1, L8)
    })?;

    Ok(suite)
}

// ---------------------------------------------------------------------------
// The 14-clause 5-dimensional relation family plus the non-zero list.
// ---------------------------------------------------------------------------

fn thm44(ctx: &SuiteCtx) -> Result<Suite, SuiteError> {
    require_time(ctx)?;
    let mut suite = Suite::new("thm4.4");
    let holds = home_expect(ctx, "ibh5", Verdict::Holds);
    let one = DiffExpr::one;

    clause(&mut suite, "thm4.4.i", || {
        Ok(eq_item("thm4.4.i", holds, ctx.action(Rt, St)?, ctx.action(Pt, St)?))
    })?;

    let diffs: [(&str, &str, &str, (TensorKind, TensorKind), (TensorKind, TensorKind), TensorKind); 2] = [
        ("thm4.4.ii", "N5", N5, (Rt, Wt), (Wt, Rt), Rt),
        ("thm4.4.iii", "N6", N6, (Ct, Kt), (Kt, Ct), Ct),
    ];
    for (id, name, src, lhs, rhs, q) in diffs {
        clause(&mut suite, id, || {
            let n = coeff(ctx, src)?;
            Ok(relation_item(
                id,
                holds,
                vec![Candidate::new(
                    vec![(name.into(), n.clone())],
                    vec![
                        (one(), ctx.action(lhs.0, lhs.1)?),
                        (one().neg(), ctx.action(rhs.0, rhs.1)?),
                        (n.neg(), ctx.tachibana(Gt, q)?),
                    ],
                )],
            ))
        })?;
    }

    let shifted: [(&str, &str, &str, (TensorKind, TensorKind), TensorKind); 2] = [
        ("thm4.4.iv", "N7", N7, (Ct, Rt), Ct),
        ("thm4.4.v", "N8", N8, (Rt, Rt), Rt),
    ];
    for (id, name, src, lhs, qs) in shifted {
        clause(&mut suite, id, || {
            let n = coeff(ctx, src)?;
            Ok(relation_item(
                id,
                holds,
                vec![Candidate::new(
                    vec![(name.into(), n.clone())],
                    vec![
                        (one(), ctx.action(lhs.0, lhs.1)?),
                        (one().neg(), ctx.tachibana(St, qs)?),
                        (n.neg(), ctx.tachibana(Gt, Ct)?),
                    ],
                )],
            ))
        })?;
    }

    clause(&mut suite, "thm4.4.vi", || {
        let n1 = coeff(ctx, N1)?;
        let n2 = coeff(ctx, N2)?;
        let n5 = coeff(ctx, N5)?;
        let n8 = coeff(ctx, N8)?;
        let n9 = coeff(ctx, N9)?;
        let n10 = coeff(ctx, N10)?;
        let rw = ctx.action(Rt, Wt)?;
        let qsr = ctx.tachibana(St, Rt)?;
        let qsw = ctx.tachibana(St, Wt)?;
        let mut candidates = vec![Candidate::new(
            vec![
                ("N5*N9".into(), n5.mul(&n9)),
                ("N1*N10".into(), n1.mul(&n10)),
                ("N1*N8".into(), n1.mul(&n8)),
            ],
            vec![
                (n5.mul(&n9), rw.clone()),
                (n1.mul(&n10), qsr.clone()),
                (n1.mul(&n8), qsw.clone()),
            ],
        )];
        candidates.push(
            Candidate::new(
                vec![
                    ("N5*N9".into(), n5.mul(&n9)),
                    ("N1*N10".into(), n1.mul(&n10)),
                    ("N1*N2*N8".into(), n1.mul(&n2).mul(&n8)),
                ],
                vec![
                    (n5.mul(&n9), rw),
                    (n1.mul(&n10), qsr),
                    (n1.mul(&n2).mul(&n8), qsw),
                ],
            )
            .with_note("Q(S,W) coefficient taken as N1*N2*N8"),
        );
        Ok(relation_item("thm4.4.vi", holds, candidates))
    })?;

    clause(&mut suite, "thm4.4.vii", || {
        let n4 = coeff(ctx, N4)?;
        let n11 = coeff(ctx, N11)?;
        Ok(relation_item(
            "thm4.4.vii",
            holds,
            vec![Candidate::new(
                vec![("N4".into(), n4.clone()), ("N11".into(), n11.clone())],
                vec![
                    (n4.clone(), ctx.action(Rt, Kt)?),
                    (n11, ctx.action(Kt, Rt)?),
                    (n4, ctx.tachibana(St, Kt)?),
                ],
            )],
        ))
    })?;

    clause(&mut suite, "thm4.4.viii", || {
        let n1 = coeff(ctx, N1)?;
        let n2 = coeff(ctx, N2)?;
        let n4 = coeff(ctx, N4)?;
        let n8 = coeff(ctx, N8)?;
        let rk = ctx.action(Rt, Kt)?;
        let kr = ctx.action(Kt, Rt)?;
        let qsr = ctx.tachibana(St, Rt)?;
        let mut candidates = vec![Candidate::new(
            vec![
                ("N4*N8".into(), n4.mul(&n8)),
                ("N1^2*N2".into(), n1.mul(&n1).mul(&n2)),
                ("N1*N2*N4".into(), n1.mul(&n2).mul(&n4)),
            ],
            vec![
                (n4.mul(&n8), rk.clone()),
                (n1.mul(&n1).mul(&n2).neg(), kr.clone()),
                (n1.mul(&n2).mul(&n4), qsr.clone()),
            ],
        )];
        candidates.push(
            Candidate::new(
                vec![
                    ("N2*N4*N8".into(), n2.mul(&n4).mul(&n8)),
                    ("N1^2*N2".into(), n1.mul(&n1).mul(&n2)),
                    ("N1*N2*N4".into(), n1.mul(&n2).mul(&n4)),
                ],
                vec![
                    (n2.mul(&n4).mul(&n8), rk),
                    (n1.mul(&n1).mul(&n2).neg(), kr),
                    (n1.mul(&n2).mul(&n4), qsr),
                ],
            )
            .with_note("leading coefficient taken as N2*N4*N8"),
        );
        Ok(relation_item("thm4.4.viii", holds, candidates))
    })?;

    clause(&mut suite, "thm4.4.ix", || {
        let n3 = coeff(ctx, N3)?;
        let n7 = coeff(ctx, N7)?;
        Ok(relation_item(
            "thm4.4.ix",
            holds,
            vec![Candidate::new(
                vec![("N3".into(), n3.clone()), ("N7".into(), n7.clone())],
                vec![
                    (n3.clone(), ctx.action(Ct, Wt)?),
                    (n7.neg(), ctx.action(Wt, Ct)?),
                    (n3.neg(), ctx.tachibana(St, Ct)?),
                ],
            )],
        ))
    })?;

    clause(&mut suite, "thm4.4.x", || {
        let n2 = coeff(ctx, N2)?;
        let n3 = coeff(ctx, N3)?;
        let n10 = coeff(ctx, N10)?;
        let n12 = coeff(ctx, N12)?;
        Ok(relation_item(
            "thm4.4.x",
            holds,
            vec![Candidate::new(
                vec![
                    ("N3*N12".into(), n3.mul(&n12)),
                    ("N10".into(), n10.clone()),
                    ("N3*N2".into(), n3.mul(&n2)),
                ],
                vec![
                    (n3.mul(&n12), ctx.action(Ct, Wt)?),
                    (n10, ctx.action(Wt, Ct)?),
                    (n3.mul(&n2).neg(), ctx.tachibana(St, Wt)?),
                ],
            )],
        ))
    })?;

    clause(&mut suite, "thm4.4.xi", || {
        let n2 = coeff(ctx, N2)?;
        let n11 = coeff(ctx, N11)?;
        let n13 = coeff(ctx, N13)?;
        Ok(relation_item(
            "thm4.4.xi",
            holds,
            vec![Candidate::new(
                vec![
                    ("N13".into(), n13.clone()),
                    ("N2*N11".into(), n2.mul(&n11)),
                    ("N2^2".into(), n2.mul(&n2)),
                ],
                vec![
                    (n13, ctx.action(Ct, Kt)?),
                    (n2.mul(&n11), ctx.tachibana(St, Ct)?),
                    (n2.mul(&n2), ctx.tachibana(St, Kt)?),
                ],
            )],
        ))
    })?;

    clause(&mut suite, "thm4.4.xii", || {
        let n4 = coeff(ctx, N4)?;
        let n10 = coeff(ctx, N10)?;
        let n12 = coeff(ctx, N12)?;
        let n14 = coeff(ctx, N14)?;
        Ok(relation_item(
            "thm4.4.xii",
            holds,
            vec![Candidate::new(
                vec![
                    ("N4*N10".into(), n4.mul(&n10)),
                    ("N12*N14".into(), n12.mul(&n14)),
                    ("N4*N14".into(), n4.mul(&n14)),
                ],
                vec![
                    (n4.mul(&n10), ctx.action(Wt, Kt)?),
                    (n12.mul(&n14), ctx.action(Kt, Wt)?),
                    (n4.mul(&n14).neg(), ctx.tachibana(St, Wt)?),
                ],
            )],
        ))
    })?;

    clause(&mut suite, "thm4.4.xiii", || {
        let n1 = coeff(ctx, N1)?;
        let n3 = coeff(ctx, N3)?;
        let n4 = coeff(ctx, N4)?;
        let n11 = coeff(ctx, N11)?;
        Ok(relation_item(
            "thm4.4.xiii",
            holds,
            vec![Candidate::new(
                vec![
                    ("N1*N4".into(), n1.mul(&n4)),
                    ("N3*N11".into(), n3.mul(&n11)),
                    ("N3*N4".into(), n3.mul(&n4)),
                ],
                vec![
                    (n1.mul(&n4), ctx.action(Wt, Kt)?),
                    (n3.mul(&n11), ctx.action(Kt, Wt)?),
                    (n3.mul(&n4), ctx.tachibana(St, Kt)?),
                ],
            )],
        ))
    })?;

    clause(&mut suite, "thm4.4.xiv", || {
        roter_compare_item(
            ctx,
            "thm4.4.xiv",
            "ibh5",
            &[("phi", &[PHI5]), ("mu", &[MU5]), ("eta", &[ETA5])],
        )
    })?;

    clause(&mut suite, "thm4.4.consistency", || {
        roter_consistency_item(ctx, "thm4.4.consistency", "ibh5", N1, N8)
    })?;

    // The six differences that do not vanish in dimension 5.
    let nonzero_expected = home_expect(ctx, "ibh5", Verdict::Holds);
    let pairs: [(&str, (TensorKind, TensorKind), (TensorKind, TensorKind)); 6] = [
        ("thm4.4.nonzero.i", (Ct, Kt), (Wt, Kt)),
        ("thm4.4.nonzero.ii", (Ct, Kt), (Wt, Ct)),
        ("thm4.4.nonzero.iii", (Ct, Ct), (Wt, Ct)),
        ("thm4.4.nonzero.iv", (Ct, Wt), (Wt, Rt)),
        ("thm4.4.nonzero.v", (Ct, St), (Wt, St)),
        ("thm4.4.nonzero.vi", (Rt, Kt), (Kt, Ct)),
    ];
    for (id, a, b) in pairs {
        clause(&mut suite, id, || {
            let diff = ctx.action(a.0, a.1)?.sub(&*ctx.action(b.0, b.1)?);
            Ok(nonzero_item(id, &diff, nonzero_expected))
        })?;
    }

    Ok(suite)
}

// ---------------------------------------------------------------------------
// Universal identities between actions and Tachibana tensors.
// ---------------------------------------------------------------------------

fn sec2_identities(ctx: &SuiteCtx) -> Result<Suite, SuiteError> {
    if ctx.dim() < 4 {
        return Err(SuiteError::Unsupported(
            "the identity suite needs dimension at least 4".into(),
        ));
    }
    let mut suite = Suite::new("sec2.identities");
    let expected = if ctx.has_xi() { None } else { Some(Verdict::Holds) };

    clause(&mut suite, "sec2.QgG", || {
        Ok(zero_item("sec2.QgG", &*ctx.tachibana(Gt, GGt)?, expected))
    })?;
    clause(&mut suite, "sec2.QgR-QgW", || {
        Ok(eq_item("sec2.QgR-QgW", expected, ctx.tachibana(Gt, Rt)?, ctx.tachibana(Gt, Wt)?))
    })?;
    clause(&mut suite, "sec2.QgC-QgK", || {
        Ok(eq_item("sec2.QgC-QgK", expected, ctx.tachibana(Gt, Ct)?, ctx.tachibana(Gt, Kt)?))
    })?;

    let equalities: [(&str, (TensorKind, TensorKind), (TensorKind, TensorKind)); 8] = [
        ("sec2.RW-RR", (Rt, Wt), (Rt, Rt)),
        ("sec2.RC-RK", (Rt, Ct), (Rt, Kt)),
        ("sec2.CR-CW", (Ct, Rt), (Ct, Wt)),
        ("sec2.CC-CK", (Ct, Ct), (Ct, Kt)),
        ("sec2.WR-WW", (Wt, Rt), (Wt, Wt)),
        ("sec2.WC-WK", (Wt, Ct), (Wt, Kt)),
        ("sec2.KR-KW", (Kt, Rt), (Kt, Wt)),
        ("sec2.KC-KK", (Kt, Ct), (Kt, Kt)),
    ];
    for (id, a, b) in equalities {
        clause(&mut suite, id, || {
            Ok(eq_item(id, expected, ctx.action(a.0, a.1)?, ctx.action(b.0, b.1)?))
        })?;
    }

    // K·T = C·T - r/((n-1)(n-2)) Q(g,T) for T = S, R and the rank-4 case.
    let n = ctx.dim() as i64;
    let corrections: [(&str, TensorKind, TensorKind, TensorKind, TensorKind); 3] = [
        ("sec2.KS-CS", Kt, St, Ct, St),
        ("sec2.KR-CR", Kt, Rt, Ct, Rt),
        ("sec2.KK-CC", Kt, Kt, Ct, Ct),
    ];
    for (id, d1, t1, d2, t2) in corrections {
        clause(&mut suite, id, || {
            let kappa = ctx.scalar()?.mul_rational(1, (n - 1) * (n - 2));
            let q = ctx.tachibana(Gt, t1)?;
            Ok(relation_item(
                id,
                expected,
                vec![Candidate::new(
                    vec![("r/((n-1)(n-2))".into(), kappa.clone())],
                    vec![
                        (DiffExpr::one(), ctx.action(d1, t1)?),
                        (DiffExpr::one().neg(), ctx.action(d2, t2)?),
                        (kappa, q),
                    ],
                )],
            ))
        })?;
    }

    // P is antisymmetric only in its first index pair, so the operator family
    // it generates is not skew-adjoint; it differs from the curvature family
    // by the S-wedge family, giving P.T = R.T - (1/(n-1)) Q(S,T) for every T.
    // The two traditional equalities below therefore fail away from Einstein
    // metrics.  Each report records the exact discrepancy, and the
    // decomposition items after them verify the relation that does hold.
    let p_expected = match ctx.metric_name() {
        "ibh4" | "ibh5" if !ctx.has_xi() => Some(Verdict::Fails),
        _ => None,
    };
    let stated: [(&str, TensorKind, &str, TensorKind, &str); 2] = [
        ("sec2.PR-PW", Rt, "R", Wt, "W"),
        ("sec2.PC-PK", Ct, "C", Kt, "K"),
    ];
    for (id, t1, n1, t2, n2) in stated {
        clause(&mut suite, id, || {
            let lhs = ctx.action(Pt, t1)?;
            let rhs = ctx.action(Pt, t2)?;
            let mut item = eq_item(id, p_expected, lhs.clone(), rhs.clone());
            if item.verdict == Verdict::Fails {
                let correction = ctx.tachibana(St, t1)?.sub(&*ctx.tachibana(St, t2)?);
                let exact = lhs
                    .sub(&rhs)
                    .add(&correction.scale(&DiffExpr::rational(1, n - 1)))
                    .is_zero();
                if exact {
                    item.note(format!(
                        "difference equals -(1/(n-1)) Q(S, {n1} - {n2}) exactly; the stated \
                         equality would force Q(S,G) = 0, i.e. an Einstein metric"
                    ));
                }
            }
            Ok(item)
        })?;
    }

    let mut decomp: Vec<(TensorKind, &str)> = ZLIST.to_vec();
    decomp.push((GGt, "G"));
    for (z, zn) in decomp {
        let id = format!("sec2.P-decomp.{zn}");
        clause(&mut suite, &id, || {
            let coeff = DiffExpr::rational(1, n - 1);
            Ok(relation_item(
                &id,
                expected,
                vec![Candidate::new(
                    vec![("1/(n-1)".into(), coeff.clone())],
                    vec![
                        (DiffExpr::one(), ctx.action(Pt, z)?),
                        (DiffExpr::one().neg(), ctx.action(Rt, z)?),
                        (coeff, ctx.tachibana(St, z)?),
                    ],
                )],
            ))
        })?;
    }

    Ok(suite)
}

// ---------------------------------------------------------------------------
// Excluded structures: every proportionality that must fail.
// ---------------------------------------------------------------------------

fn negative_suite(ctx: &SuiteCtx) -> Result<Suite, SuiteError> {
    let mut suite = Suite::new("negative.suite");
    let fails = match ctx.metric_name() {
        "ibh4" | "ibh5" if !ctx.has_xi() => Some(Verdict::Fails),
        _ => None,
    };
    suite.notes.push(
        "structures defined through arbitrary 1-forms (weak symmetry, Chaki pseudosymmetry, \
         generalized recurrency) are checked only via their refutable proportionality \
         consequences"
            .into(),
    );

    clause(&mut suite, "neg.ricci-semisym", || {
        Ok(zero_item("neg.ricci-semisym", &*ctx.action(Rt, St)?, fails))
    })?;

    let actors: [(TensorKind, &str); 5] = [(Rt, "R"), (Ct, "C"), (Wt, "W"), (Kt, "K"), (Pt, "P")];
    for (d, dn) in actors {
        for (z, zn) in actors {
            let id = format!("neg.{dn}{zn}.QS{zn}");
            clause(&mut suite, &id, || {
                let lhs = ctx.action(d, z)?;
                let rhs = ctx.tachibana(St, z)?;
                Ok(solve_proportionality(&id, "L", &lhs, &rhs).with_expected(fails))
            })?;
        }
    }
    for (z, zn) in actors {
        let id = format!("neg.P{zn}.Qg{zn}");
        clause(&mut suite, &id, || {
            let lhs = ctx.action(Pt, z)?;
            let rhs = ctx.tachibana(Gt, z)?;
            Ok(solve_proportionality(&id, "L", &lhs, &rhs).with_expected(fails))
        })?;
    }

    // Generalized Einstein conditions on the commutator R·C - C·R.
    let targets: [(&str, TensorKind, TensorKind); 4] = [
        ("neg.genein.QgR", Gt, Rt),
        ("neg.genein.QgC", Gt, Ct),
        ("neg.genein.QSR", St, Rt),
        ("neg.genein.QSC", St, Ct),
    ];
    for (id, a, t) in targets {
        clause(&mut suite, id, || {
            let lhs = ctx.action(Rt, Ct)?.sub(&*ctx.action(Ct, Rt)?);
            let rhs = ctx.tachibana(a, t)?;
            Ok(solve_proportionality(id, "L", &lhs, &rhs).with_expected(fails))
        })?;
    }

    Ok(suite)
}

// ---------------------------------------------------------------------------
// Special-xi substitutions, exact and numeric.
// ---------------------------------------------------------------------------

/// `t^power * (3 cos(freq ln t) + 2 sin(freq ln t))` — a generic member of
/// the two-parameter log-trigonometric family with that exponent pair.
fn trig_xi(power: f64, freq: f64) -> XiForm {
    let arg = XiForm::Mul(
        Arc::new(XiForm::Const(freq)),
        Arc::new(XiForm::Ln(Arc::new(XiForm::T))),
    );
    let blend = XiForm::Add(
        Arc::new(XiForm::Mul(
            Arc::new(XiForm::Const(3.0)),
            Arc::new(XiForm::Cos(Arc::new(arg.clone()))),
        )),
        Arc::new(XiForm::Mul(
            Arc::new(XiForm::Const(2.0)),
            Arc::new(XiForm::Sin(Arc::new(arg))),
        )),
    );
    XiForm::Mul(Arc::new(XiForm::PowT(power)), Arc::new(blend))
}

/// Deterministic sample grid over the chart, away from coordinate
/// degeneracies (t near 1, angles away from 0 and pi).
fn grid_point(metric: &Metric, k: usize, xi: &XiForm) -> EvalPoint {
    let f = k as f64;
    let coords = (0..metric.dim())
        .map(|i| {
            let name = metric.chart().coord_name(i);
            let value = match name {
                "t" => 0.85 + 0.05 * f,
                "z" => 0.25 + 0.2 * f,
                "theta" => 0.6 + 0.17 * f,
                "phi" => 0.45 + 0.13 * f,
                "psi" => 0.35 + 0.11 * f,
                _ => 0.5 + 0.1 * f,
            };
            (name.to_string(), value)
        })
        .collect();
    EvalPoint { coords, consts: Vec::new(), xi: Some(xi.clone()) }
}

/// Check that every component of a symbolic tensor vanishes numerically
/// under a transcendental xi form, over a 10-point grid.
fn numeric_zero_item(
    id: &str,
    tensor: &Tensor,
    metric: &Metric,
    xi: XiForm,
    expected: Option<Verdict>,
) -> ConditionReport {
    let nonzero: Vec<usize> = (0..tensor.len())
        .filter(|&i| !tensor.get_flat(i).is_zero())
        .collect();
    let mut evals = 0usize;
    for k in 0..10 {
        let point = grid_point(metric, k, &xi);
        for &i in &nonzero {
            match oracle::is_numerically_zero(tensor.get_flat(i), &point, 1e-8) {
                Ok(true) => evals += 1,
                Ok(false) => {
                    let mut rep = ConditionReport::new(id, Verdict::Fails).with_expected(expected);
                    rep.note(format!(
                        "component {} is nonzero at grid point {k}",
                        label(&decode(i, tensor.dim(), tensor.rank()))
                    ));
                    return rep;
                }
                Err(e) => {
                    let mut rep =
                        ConditionReport::new(id, Verdict::Degenerate).with_expected(expected);
                    rep.note(format!("numeric evaluation failed at grid point {k}: {e}"));
                    return rep;
                }
            }
        }
    }
    let mut rep = ConditionReport::new(id, Verdict::Holds).with_expected(expected);
    rep.note(format!(
        "numeric-verified: {evals} component evaluations over 10 points, relative tolerance 1e-8"
    ));
    rep
}

fn corollaries(ctx: &SuiteCtx) -> Result<Suite, SuiteError> {
    let mut suite = Suite::new("corollaries");
    if ctx.has_xi() {
        suite
            .notes
            .push("context xi ignored; each substitution item installs its own closed form".into());
    }
    match ctx.metric_name() {
        "ibh4" => cor_ibh4(ctx, &mut suite)?,
        "ibh5" => cor_ibh5(ctx, &mut suite)?,
        other => suite.notes.push(format!(
            "no substitution corollaries are defined for metric `{other}`"
        )),
    }
    Ok(suite)
}

/// Zero checks for a family D·Z over the whole Z list under one xi form.
fn cor_zero_family(
    suite: &mut Suite,
    sub: &SuiteCtx,
    prefix: &str,
    d: TensorKind,
    dn: &str,
) -> Result<(), SuiteError> {
    for (z, zn) in ZLIST {
        let id = format!("{prefix}.{dn}{zn}");
        clause(suite, &id, || {
            Ok(zero_item(&id, &*sub.action(d, z)?, Some(Verdict::Holds)))
        })?;
    }
    Ok(())
}

fn cor_ibh4(ctx: &SuiteCtx, suite: &mut Suite) -> Result<(), SuiteError> {
    let bundle = ctx.bundle();
    let plain = SuiteCtx::new(bundle);

    // xi = C1 t: every R·Z and P·S vanish; R·K vs K·C recorded as computed.
    let a = SuiteCtx::with_xi(bundle, parse_xi_form("C1*t").expect("closed form parses"));
    cor_zero_family(suite, &a, "cor4.1.a", Rt, "R")?;
    clause(suite, "cor4.1.a.PS", || {
        Ok(zero_item("cor4.1.a.PS", &*a.action(Pt, St)?, Some(Verdict::Holds)))
    })?;
    // With xi = C1 t the metric is semisymmetric, so R·K = 0, but K·C =
    // L3 Q(g,C) survives with L3 = C1/t^2; equating the two would require
    // Q(g,C) = 0, which this substitution does not grant.  The traditional
    // claim is therefore recorded with a failing verdict.
    clause(suite, "cor4.2.a", || {
        let lhs = a.action(Rt, Kt)?;
        let rhs = a.action(Kt, Ct)?;
        let mut rep = eq_item("cor4.2.a", Some(Verdict::Fails), lhs.clone(), rhs);
        if rep.verdict == Verdict::Fails && lhs.is_zero() {
            rep.note(
                "R·K vanishes under this substitution while K·C = L3 Q(g,C) does not; \
                 the stated equality would force Q(g,C) = 0",
            );
        }
        Ok(rep)
    })?;

    // xi = C1 t^2 + C2 t^3: C·Z and W·Z vanish.
    let b = SuiteCtx::with_xi(
        bundle,
        parse_xi_form("C1*t^2 + C2*t^3").expect("closed form parses"),
    );
    cor_zero_family(suite, &b, "cor4.1.b", Ct, "C")?;
    cor_zero_family(suite, &b, "cor4.1.b", Wt, "W")?;

    // xi = sqrt(t)(C2 cos((sqrt7/2) ln t) + C1 sin(...)): K·Z = 0, numeric.
    let xi_c = trig_xi(0.5, 7f64.sqrt() / 2.0);
    for (z, zn) in ZLIST {
        let id = format!("cor4.1.c.K{zn}");
        clause(suite, &id, || {
            let kz = plain.action(Kt, z)?;
            Ok(numeric_zero_item(&id, &kz, bundle.metric(), xi_c.clone(), Some(Verdict::Holds)))
        })?;
    }

    // xi = -C1/t + C2: R·W = W·R and C·K = K·C.
    let c = SuiteCtx::with_xi(
        bundle,
        parse_xi_form("-C1/t + C2").expect("closed form parses"),
    );
    clause(suite, "cor4.2.b.RW-WR", || {
        Ok(eq_item("cor4.2.b.RW-WR", Some(Verdict::Holds), c.action(Rt, Wt)?, c.action(Wt, Rt)?))
    })?;
    clause(suite, "cor4.2.b.CK-KC", || {
        Ok(eq_item("cor4.2.b.CK-KC", Some(Verdict::Holds), c.action(Ct, Kt)?, c.action(Kt, Ct)?))
    })?;

    // xi = t^(1/4)(...sqrt23/4 ln t...): C·R = Q(S,C), numeric.
    clause(suite, "cor4.2.c", || {
        let residual = plain.action(Ct, Rt)?.sub(&*plain.tachibana(St, Ct)?);
        Ok(numeric_zero_item(
            "cor4.2.c",
            &residual,
            bundle.metric(),
            trig_xi(0.25, 23f64.sqrt() / 4.0),
            Some(Verdict::Holds),
        ))
    })?;

    // xi = C1 t (t - C2)^2: R·R = Q(S,R), exact.
    let d = SuiteCtx::with_xi(
        bundle,
        parse_xi_form("C1*t*(t - C2)^2").expect("closed form parses"),
    );
    clause(suite, "cor4.2.d", || {
        let residual = d.action(Rt, Rt)?.sub(&*d.tachibana(St, Rt)?);
        let mut rep = zero_item("cor4.2.d", &residual, Some(Verdict::Holds));
        rep.note("exact substitution with the two-parameter family xi = C1*t*(t - C2)^2");
        Ok(rep)
    })?;

    Ok(())
}

fn cor_ibh5(ctx: &SuiteCtx, suite: &mut Suite) -> Result<(), SuiteError> {
    let bundle = ctx.bundle();
    let plain = SuiteCtx::new(bundle);

    // xi = C1 t^2: every R·Z and P·S vanish.
    let a = SuiteCtx::with_xi(bundle, parse_xi_form("C1*t^2").expect("closed form parses"));
    cor_zero_family(suite, &a, "cor4.3.a", Rt, "R")?;
    clause(suite, "cor4.3.a.PS", || {
        Ok(zero_item("cor4.3.a.PS", &*a.action(Pt, St)?, Some(Verdict::Holds)))
    })?;

    // xi = C1 t^3 + C2 t^4: C·Z vanishes.
    let b = SuiteCtx::with_xi(
        bundle,
        parse_xi_form("C1*t^3 + C2*t^4").expect("closed form parses"),
    );
    cor_zero_family(suite, &b, "cor4.3.b", Ct, "C")?;

    // xi = C1 t^5 + C2 t^4: W·Z vanishes.
    let c = SuiteCtx::with_xi(
        bundle,
        parse_xi_form("C1*t^5 + C2*t^4").expect("closed form parses"),
    );
    cor_zero_family(suite, &c, "cor4.3.c", Wt, "W")?;

    // xi = t^(3/2)(...sqrt15/2 ln t...): K·Z = 0, numeric.
    let xi_d = trig_xi(1.5, 15f64.sqrt() / 2.0);
    for (z, zn) in ZLIST {
        let id = format!("cor4.3.d.K{zn}");
        clause(suite, &id, || {
            let kz = plain.action(Kt, z)?;
            Ok(numeric_zero_item(&id, &kz, bundle.metric(), xi_d.clone(), Some(Verdict::Holds)))
        })?;
    }

    // xi = -C1/t + C2: R·W = W·R and C·K = K·C.
    let e = SuiteCtx::with_xi(
        bundle,
        parse_xi_form("-C1/t + C2").expect("closed form parses"),
    );
    clause(suite, "cor4.4.a.RW-WR", || {
        Ok(eq_item("cor4.4.a.RW-WR", Some(Verdict::Holds), e.action(Rt, Wt)?, e.action(Wt, Rt)?))
    })?;
    clause(suite, "cor4.4.a.CK-KC", || {
        Ok(eq_item("cor4.4.a.CK-KC", Some(Verdict::Holds), e.action(Ct, Kt)?, e.action(Kt, Ct)?))
    })?;

    // xi = sqrt(t)(...sqrt15/2 ln t...): C·R = Q(S,C), numeric.
    clause(suite, "cor4.4.b", || {
        let residual = plain.action(Ct, Rt)?.sub(&*plain.tachibana(St, Ct)?);
        Ok(numeric_zero_item(
            "cor4.4.b",
            &residual,
            bundle.metric(),
            trig_xi(0.5, 15f64.sqrt() / 2.0),
            Some(Verdict::Holds),
        ))
    })?;

    // xi = C1 t^2 (t - C2)^2: R·R = Q(S,R), exact.
    let f = SuiteCtx::with_xi(
        bundle,
        parse_xi_form("C1*t^2*(t - C2)^2").expect("closed form parses"),
    );
    clause(suite, "cor4.4.c", || {
        let residual = f.action(Rt, Rt)?.sub(&*f.tachibana(St, Rt)?);
        let mut rep = zero_item("cor4.4.c", &residual, Some(Verdict::Holds));
        rep.note("exact substitution with the two-parameter family xi = C1*t^2*(t - C2)^2");
        Ok(rep)
    })?;

    Ok(())
}

// ---------------------------------------------------------------------------
// Registry.
// ---------------------------------------------------------------------------

/// All addressable suite names.
pub fn suite_ids() -> Vec<&'static str> {
    vec![
        "all",
        "thm4.1",
        "thm4.2",
        "thm4.3",
        "thm4.4",
        "corollaries",
        "sec2.identities",
        "roter",
        "ricci.classify",
        "negative.suite",
    ]
}

fn run_all(ctx: &SuiteCtx) -> Result<Suite, SuiteError> {
    let list: Vec<&str> = match ctx.metric_name() {
        "ibh4" => vec![
            "thm4.1",
            "thm4.2",
            "sec2.identities",
            "roter",
            "ricci.classify",
            "negative.suite",
            "corollaries",
        ],
        "ibh5" => vec![
            "thm4.3",
            "thm4.4",
            "sec2.identities",
            "roter",
            "ricci.classify",
            "negative.suite",
            "corollaries",
        ],
        _ => {
            let mut v = vec!["roter", "ricci.classify"];
            if ctx.dim() >= 4 {
                v.insert(0, "sec2.identities");
            }
            v
        }
    };
    let mut suite = Suite::new("all");
    for sid in list {
        let sub = run_suite(sid, ctx)?;
        suite.reports.extend(sub.reports);
        suite
            .notes
            .extend(sub.notes.into_iter().map(|n| format!("{sid}: {n}")));
    }
    Ok(suite)
}

/// Run a whole suite and keep only the conditions under the given id
/// (exact match or dot-separated prefix).
fn run_filtered(id: &str, ctx: &SuiteCtx) -> Result<Suite, SuiteError> {
    let parent = if id.starts_with("thm4.1.") {
        "thm4.1"
    } else if id.starts_with("thm4.2.") {
        "thm4.2"
    } else if id.starts_with("thm4.3.") {
        "thm4.3"
    } else if id.starts_with("thm4.4.") {
        "thm4.4"
    } else if id.starts_with("cor4.") {
        "corollaries"
    } else if id.starts_with("sec2.") {
        "sec2.identities"
    } else if id.starts_with("ricci.") {
        "ricci.classify"
    } else if id.starts_with("neg.") {
        "negative.suite"
    } else {
        return Err(SuiteError::UnknownSuite(id.to_string()));
    };
    let full = run_suite(parent, ctx)?;
    let reports: Vec<ConditionReport> = full
        .reports
        .into_iter()
        .filter(|r| {
            r.id == id
                || (r.id.starts_with(id) && r.id.as_bytes().get(id.len()) == Some(&b'.'))
        })
        .collect();
    if reports.is_empty() {
        return Err(SuiteError::UnknownSuite(id.to_string()));
    }
    Ok(Suite { id: id.to_string(), reports, notes: full.notes })
}

/// Run a suite or a single condition by its stable id.
pub fn run_suite(id: &str, ctx: &SuiteCtx) -> Result<Suite, SuiteError> {
    match id {
        "all" => run_all(ctx),
        "thm4.1" | "thm4.3" => thm_pointwise(ctx, id),
        "thm4.2" => thm42(ctx),
        "thm4.4" => thm44(ctx),
        "corollaries" => corollaries(ctx),
        "sec2.identities" => sec2_identities(ctx),
        "roter" => roter_suite(ctx),
        "ricci.classify" => classify_ricci(ctx),
        "negative.suite" => negative_suite(ctx),
        other => run_filtered(other, ctx),
    }
}
