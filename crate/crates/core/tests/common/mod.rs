//! Shared harness for the component-table tests.
//!
//! A `Row` names a tensor family, a closed-form component value, and the
//! list of index strings carrying that value up to an integer factor.  The
//! helpers here decode 1-based index strings, evaluate a family name to the
//! corresponding tensor on a bundle, assert every member of a row exactly,
//! and sweep a whole tensor to confirm that nothing nonzero hides outside
//! the symmetry orbits of the listed entries.

// Each test binary compiles this module independently and uses a subset.
#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use symcurv::conditions::SuiteCtx;
use symcurv::curvature::{decode, label, Tensor, TensorKind};
use symcurv::exprparse::parse_expr;
use symcurv::DiffExpr;

/// One table row: every `(index, factor)` member satisfies
/// `component == factor * expr`.
pub struct Row {
    pub family: &'static str,
    pub members: &'static [(&'static str, i64)],
    pub expr: &'static str,
}

/// A component whose traditionally quoted closed form contains a misprint.
/// The main tables carry the corrected value; these records keep the quoted
/// variant and assert the computation genuinely disagrees with it.
pub struct Fix {
    pub family: &'static str,
    pub index: &'static str,
    pub quoted: &'static str,
    pub why: &'static str,
}

/// A reproducible random diagonal polynomial metric on four coordinates
/// with signature (-,+,+,+): each entry is a positive integer constant
/// plus one or two positive monomials of degree at most four, so entries
/// are nonzero polynomials and the symbolic pipeline never divides by a
/// vanishing denominator.
pub fn random_diag_metric(seed: u64) -> symcurv::Metric {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let coords = ["t", "z", "u", "v"];
    let mut entries = Vec::new();
    for slot in 0..4usize {
        let mut src = format!("{}", rng.gen_range(1..=4));
        for _ in 0..rng.gen_range(1..=2) {
            src.push_str(&format!(
                " + {}*{}^{}",
                rng.gen_range(1..=3),
                coords[rng.gen_range(0..4)],
                rng.gen_range(1..=2),
            ));
            if rng.gen_bool(0.4) {
                src.push_str(&format!(
                    "*{}^{}",
                    coords[rng.gen_range(0..4)],
                    rng.gen_range(1..=2),
                ));
            }
        }
        if slot == 0 {
            src = format!("-({src})");
        }
        entries.push(src);
    }
    let chart = symcurv::Chart::new(coords.to_vec(), vec![-1, 1, 1, 1], vec![]).unwrap();
    let resolver = chart.resolver();
    let parsed: Vec<DiffExpr> = entries
        .iter()
        .map(|src| parse_expr(src, &resolver).unwrap())
        .collect();
    symcurv::Metric::diagonal(&format!("rand{seed}"), chart, parsed).unwrap()
}

/// Decode a 1-based digit string like "122313" into 0-based indices.
pub fn idx(s: &str) -> Vec<usize> {
    s.bytes()
        .map(|b| {
            assert!(b.is_ascii_digit() && b != b'0', "bad index digit in {s}");
            (b - b'1') as usize
        })
        .collect()
}

fn kind(c: &str) -> TensorKind {
    match c {
        "g" => TensorKind::Metric,
        "G" => TensorKind::Gtensor,
        "R" => TensorKind::Riemann,
        "S" => TensorKind::Ricci,
        "C" => TensorKind::Weyl,
        "W" => TensorKind::Concircular,
        "K" => TensorKind::Conharmonic,
        "P" => TensorKind::Projective,
        other => panic!("unknown tensor letter {other}"),
    }
}

/// Evaluate a family name to its tensor: plain letters, "Gamma", the
/// covariant derivatives "dR"/"dS", actions "X.Y", and Tachibana tensors
/// "Q(A,T)".
pub fn family_tensor(ctx: &SuiteCtx, family: &str) -> Arc<Tensor> {
    if family == "Gamma" {
        return Arc::new(ctx.bundle().christoffel().clone());
    }
    if family == "dR" {
        return ctx.nabla(TensorKind::Riemann).unwrap();
    }
    if family == "dS" {
        return ctx.nabla(TensorKind::Ricci).unwrap();
    }
    if let Some(inner) = family.strip_prefix("Q(").and_then(|s| s.strip_suffix(')')) {
        let (a, t) = inner.split_once(',').expect("Q(A,T) family");
        return ctx.tachibana(kind(a), kind(t)).unwrap();
    }
    if let Some((d, t)) = family.split_once('.') {
        return ctx.action(kind(d), kind(t)).unwrap();
    }
    ctx.tensor(kind(family)).unwrap()
}

/// Parse a closed form in the bundle's chart.
pub fn parse(ctx: &SuiteCtx, src: &str) -> DiffExpr {
    parse_expr(src, &ctx.bundle().metric().chart().resolver())
        .unwrap_or_else(|e| panic!("parse {src}: {e}"))
}

/// Assert every member of every row exactly.
pub fn assert_rows(ctx: &SuiteCtx, rows: &[Row]) {
    for row in rows {
        let tensor = family_tensor(ctx, row.family);
        let value = parse(ctx, row.expr);
        for &(index, factor) in row.members {
            let expected = value.mul(&DiffExpr::rational(factor, 1));
            let got = tensor.get(&idx(index));
            assert!(
                *got == expected,
                "{} at {index}: computed {got}, table gives {factor} * ({})",
                row.family,
                row.expr,
            );
        }
    }
}

/// Assert the computation disagrees with each quoted misprint (the corrected
/// value is already enforced by the main tables).
pub fn assert_fixes(ctx: &SuiteCtx, fixes: &[Fix]) {
    for fix in fixes {
        let tensor = family_tensor(ctx, fix.family);
        let quoted = parse(ctx, fix.quoted);
        let got = tensor.get(&idx(fix.index));
        assert!(
            *got != quoted,
            "{} at {}: quoted form {} matches after all ({})",
            fix.family,
            fix.index,
            fix.quoted,
            fix.why,
        );
    }
}

/// Index-symmetry family used to close listed entries into full orbits.
#[derive(Clone, Copy)]
pub enum Orbit {
    /// Christoffel symbols: symmetric in the two lower indices.
    LowerPair,
    /// Symmetric rank-2 tensors.
    Sym2,
    /// Generalized curvature tensors: pair swap and intra-pair antisymmetry.
    RiemannLike,
    /// Covariant derivative of a symmetric rank-2 tensor: last index fixed.
    Sym2Deriv,
    /// Covariant derivative of a curvature tensor: last index fixed.
    RiemannDeriv,
}

fn expand(index: &[usize], orbit: Orbit) -> Vec<Vec<usize>> {
    let riemann = |h: usize, i: usize, j: usize, k: usize| {
        vec![
            vec![h, i, j, k],
            vec![i, h, j, k],
            vec![h, i, k, j],
            vec![i, h, k, j],
            vec![j, k, h, i],
            vec![k, j, h, i],
            vec![j, k, i, h],
            vec![k, j, i, h],
        ]
    };
    match orbit {
        Orbit::LowerPair => vec![
            vec![index[0], index[1], index[2]],
            vec![index[0], index[2], index[1]],
        ],
        Orbit::Sym2 => vec![vec![index[0], index[1]], vec![index[1], index[0]]],
        Orbit::RiemannLike => riemann(index[0], index[1], index[2], index[3]),
        Orbit::Sym2Deriv => vec![
            vec![index[0], index[1], index[2]],
            vec![index[1], index[0], index[2]],
        ],
        Orbit::RiemannDeriv => riemann(index[0], index[1], index[2], index[3])
            .into_iter()
            .map(|mut v| {
                v.push(index[4]);
                v
            })
            .collect(),
    }
}

/// Sweep every component of `tensor` and fail on any nonzero entry whose
/// index lies outside the orbits of the listed members.
pub fn assert_no_extras(tensor: &Tensor, rows: &[Row], orbit: Orbit, family: &str) {
    let mut allowed: HashSet<Vec<usize>> = HashSet::new();
    for row in rows {
        for &(index, _) in row.members {
            for variant in expand(&idx(index), orbit) {
                allowed.insert(variant);
            }
        }
    }
    for flat in 0..tensor.len() {
        if tensor.get_flat(flat).is_zero() {
            continue;
        }
        let index = decode(flat, tensor.dim(), tensor.rank());
        assert!(
            allowed.contains(&index),
            "{family} has an unlisted nonzero component at {}: {}",
            label(&index),
            tensor.get_flat(flat),
        );
    }
}
