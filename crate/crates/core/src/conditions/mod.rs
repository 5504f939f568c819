//! Curvature-condition verification: proportionality and linear-relation
//! solvers, structural Ricci classification, and the named condition
//! suites for the built-in metrics.
//!
//! Suites are addressed by stable string IDs: `thm4.1` … `thm4.4` (whole
//! groups or single clauses like `thm4.2.x`), `corollaries`,
//! `sec2.identities`, `roter`, `ricci.classify`, `negative.suite`, and
//! `all`. Every clause produces a [`ConditionReport`] with a verdict,
//! any solved scalar coefficients, and notes; when the source states an
//! expected outcome for the metric at hand, the report records whether
//! the computed verdict matches it.

mod classify;
mod solve;
mod suites;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::curvature::{CurvatureBundle, Tensor, TensorKind};
use crate::operators::kulkarni_nomizu;
use crate::symkernel::{substitute_xi, DiffExpr, KernelError};

pub use classify::classify_ricci;
pub use solve::{
    solve_proportionality, solve_proportionality_ordered, solve_system, verify_relation,
};
pub use suites::{run_suite, suite_ids};

/// Outcome of one condition check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The relation holds exactly (zero residual).
    Holds,
    /// The relation fails (nonzero residual or no exact solution).
    Fails,
    /// The relation is vacuous or the solving system is rank-deficient.
    Degenerate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Degenerate => "degenerate",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of verifying or solving one curvature condition.
#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub id: String,
    pub verdict: Verdict,
    /// Solved scalar coefficients, in declaration order.
    pub coefficients: Vec<(String, DiffExpr)>,
    /// True iff the residual tensor is exactly zero.
    pub residual_zero: bool,
    /// The verdict the source asserts for this metric, when it states one.
    pub expected: Option<Verdict>,
    pub notes: Vec<String>,
}

impl ConditionReport {
    pub fn new(id: impl Into<String>, verdict: Verdict) -> Self {
        ConditionReport {
            id: id.into(),
            verdict,
            coefficients: Vec::new(),
            residual_zero: verdict == Verdict::Holds,
            expected: None,
            notes: Vec::new(),
        }
    }

    /// Whether the computed verdict agrees with the stated claim (vacuously
    /// true when no claim applies).
    pub fn claim_ok(&self) -> bool {
        self.expected.map_or(true, |e| e == self.verdict)
    }

    pub fn with_expected(mut self, expected: Option<Verdict>) -> Self {
        self.expected = expected;
        self
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }
}

/// A group of condition reports produced by one suite run.
#[derive(Clone, Debug)]
pub struct Suite {
    pub id: String,
    pub reports: Vec<ConditionReport>,
    pub notes: Vec<String>,
}

impl Suite {
    fn new(id: impl Into<String>) -> Self {
        Suite { id: id.into(), reports: Vec::new(), notes: Vec::new() }
    }

    /// True iff every report's verdict matches its stated claim.
    pub fn all_claims_ok(&self) -> bool {
        self.reports.iter().all(|r| r.claim_ok())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite or condition id `{0}`")]
    UnknownSuite(String),
    #[error("xi substitution failed: {0}")]
    Substitution(#[from] KernelError),
    #[error(transparent)]
    Curvature(#[from] crate::curvature::CurvError),
    #[error("{0}")]
    Unsupported(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum CacheKey {
    Kind(TensorKind),
    Nabla(TensorKind),
    Action(TensorKind, TensorKind),
    Tachibana(TensorKind, TensorKind),
    Wedge(TensorKind, TensorKind),
}

/// Evaluation context for suites: a curvature bundle plus an optional
/// closed form substituted for xi in every tensor and coefficient.
pub struct SuiteCtx<'a> {
    bundle: &'a CurvatureBundle,
    xi: Option<DiffExpr>,
    cache: Mutex<HashMap<CacheKey, Arc<Tensor>>>,
}

impl<'a> SuiteCtx<'a> {
    pub fn new(bundle: &'a CurvatureBundle) -> Self {
        SuiteCtx { bundle, xi: None, cache: Mutex::new(HashMap::new()) }
    }

    /// Substitute the given closed form for xi in everything the suite
    /// evaluates. Claims stated for the generic metric are suspended.
    pub fn with_xi(bundle: &'a CurvatureBundle, xi: DiffExpr) -> Self {
        SuiteCtx { bundle, xi: Some(xi), cache: Mutex::new(HashMap::new()) }
    }

    pub fn bundle(&self) -> &CurvatureBundle {
        self.bundle
    }

    pub fn metric_name(&self) -> &str {
        self.bundle.metric().name()
    }

    pub fn dim(&self) -> usize {
        self.bundle.metric().dim()
    }

    pub fn has_xi(&self) -> bool {
        self.xi.is_some()
    }

    /// Apply the context substitution to a scalar.
    pub fn subst(&self, e: &DiffExpr) -> Result<DiffExpr, KernelError> {
        match &self.xi {
            None => Ok(e.clone()),
            Some(form) => substitute_xi(e, form),
        }
    }

    fn subst_tensor(&self, t: &Tensor) -> Result<Tensor, KernelError> {
        match &self.xi {
            None => Ok(t.clone()),
            Some(form) => t.try_map(|e| substitute_xi(e, form)),
        }
    }

    fn cached(
        &self,
        key: CacheKey,
        build: impl FnOnce() -> Result<Arc<Tensor>, crate::curvature::CurvError>,
    ) -> Result<Arc<Tensor>, SuiteError> {
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let raw = build()?;
        let value = match &self.xi {
            None => raw,
            Some(_) => Arc::new(self.subst_tensor(&raw)?),
        };
        self.cache.lock().unwrap().insert(key, value.clone());
        Ok(value)
    }

    /// A named curvature tensor, with the context substitution applied.
    pub fn tensor(&self, kind: TensorKind) -> Result<Arc<Tensor>, SuiteError> {
        self.cached(CacheKey::Kind(kind), || {
            self.bundle.tensor(kind).map(|t| Arc::new(t.clone()))
        })
    }

    /// The covariant derivative of a named bundle tensor, derivative index
    /// last. Riemann and Ricci reuse the bundle's memoized derivatives.
    pub fn nabla(&self, kind: TensorKind) -> Result<Arc<Tensor>, SuiteError> {
        self.cached(CacheKey::Nabla(kind), || {
            Ok(match kind {
                TensorKind::Riemann => Arc::new(self.bundle.nabla_riemann().clone()),
                TensorKind::Ricci => Arc::new(self.bundle.nabla_ricci().clone()),
                other => Arc::new(self.bundle.covariant_derivative(self.bundle.tensor(other)?)),
            })
        })
    }

    /// The action D·T for named bundle tensors.
    pub fn action(&self, d: TensorKind, t: TensorKind) -> Result<Arc<Tensor>, SuiteError> {
        self.cached(CacheKey::Action(d, t), || self.bundle.action(d, t))
    }

    /// The Tachibana tensor Q(A,T) for named bundle tensors.
    pub fn tachibana(&self, a: TensorKind, t: TensorKind) -> Result<Arc<Tensor>, SuiteError> {
        self.cached(CacheKey::Tachibana(a, t), || self.bundle.tachibana(a, t))
    }

    /// The Kulkarni–Nomizu product of two rank-2 bundle tensors.
    pub fn wedge(&self, a: TensorKind, b: TensorKind) -> Result<Arc<Tensor>, SuiteError> {
        self.cached(CacheKey::Wedge(a, b), || {
            let ta = self.bundle.tensor(a)?;
            let tb = self.bundle.tensor(b)?;
            Ok(Arc::new(kulkarni_nomizu(ta, tb)))
        })
    }

    /// Scalar curvature with the context substitution applied.
    pub fn scalar(&self) -> Result<DiffExpr, KernelError> {
        self.subst(self.bundle.scalar())
    }
}
