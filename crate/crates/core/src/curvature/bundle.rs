//! Memoized curvature pipeline for a diagonal metric.
//!
//! Everything is computed lazily and cached: Christoffel symbols, the
//! (0,4) Riemann tensor, Ricci, the scalar, the Kulkarni-Nomizu square
//! `G = (1/2) g~g`, the Weyl, projective, concircular and conharmonic
//! tensors, and the covariant derivatives of Riemann and Ricci. Sign
//! conventions are stated in the crate docs; all index labels are 1-based
//! in chart order, storage is 0-based.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::chart::Metric;
use crate::symkernel::DiffExpr;

use super::tensor::{SymmetryClass, Tensor};

/// Names for the cached tensors a bundle can hand out, also used as cache
/// keys for operator results.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TensorKind {
    Metric,
    Riemann,
    Ricci,
    Gtensor,
    Weyl,
    Projective,
    Concircular,
    Conharmonic,
}

impl TensorKind {
    pub fn short_name(self) -> &'static str {
        match self {
            TensorKind::Metric => "g",
            TensorKind::Riemann => "R",
            TensorKind::Ricci => "S",
            TensorKind::Gtensor => "G",
            TensorKind::Weyl => "C",
            TensorKind::Projective => "P",
            TensorKind::Concircular => "W",
            TensorKind::Conharmonic => "K",
        }
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum CurvError {
    #[error("{tensor} needs dimension at least {min}, metric `{metric}` has {got}")]
    Dimension {
        tensor: &'static str,
        min: usize,
        got: usize,
        metric: String,
    },
    #[error("unknown coordinate `{0}`")]
    UnknownCoordinate(String),
}

pub struct CurvatureBundle {
    metric: Metric,
    gamma: OnceLock<Tensor>,
    riemann: OnceLock<Tensor>,
    ricci: OnceLock<Tensor>,
    scalar: OnceLock<DiffExpr>,
    metric2: OnceLock<Tensor>,
    gtensor: OnceLock<Tensor>,
    weyl: OnceLock<Tensor>,
    projective: OnceLock<Tensor>,
    concircular: OnceLock<Tensor>,
    conharmonic: OnceLock<Tensor>,
    nabla_riemann: OnceLock<Tensor>,
    nabla_ricci: OnceLock<Tensor>,
    ginv_vec: OnceLock<Vec<DiffExpr>>,
    action_cache: Mutex<HashMap<(TensorKind, TensorKind), Arc<Tensor>>>,
    tachibana_cache: Mutex<HashMap<(TensorKind, TensorKind), Arc<Tensor>>>,
}

impl CurvatureBundle {
    pub fn new(metric: Metric) -> CurvatureBundle {
        CurvatureBundle {
            metric,
            gamma: OnceLock::new(),
            riemann: OnceLock::new(),
            ricci: OnceLock::new(),
            scalar: OnceLock::new(),
            metric2: OnceLock::new(),
            gtensor: OnceLock::new(),
            weyl: OnceLock::new(),
            projective: OnceLock::new(),
            concircular: OnceLock::new(),
            conharmonic: OnceLock::new(),
            nabla_riemann: OnceLock::new(),
            nabla_ricci: OnceLock::new(),
            ginv_vec: OnceLock::new(),
            action_cache: Mutex::new(HashMap::new()),
            tachibana_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    fn coord(&self, i: usize) -> &str {
        self.metric.chart().coord_name(i)
    }

    /// Partial derivative of an expression by the i-th coordinate.
    pub fn d(&self, e: &DiffExpr, i: usize) -> DiffExpr {
        e.derivative(self.coord(i))
    }

    /// The metric as a rank-2 tensor.
    pub fn metric_tensor(&self) -> &Tensor {
        self.metric2.get_or_init(|| {
            let n = self.dim();
            Tensor::build(n, 2, SymmetryClass::Symmetric2, |idx| {
                if idx[0] == idx[1] {
                    self.metric.g(idx[0]).clone()
                } else {
                    DiffExpr::zero()
                }
            })
        })
    }

    /// Christoffel symbols of the second kind, stored as [h, j, k] for
    /// `Gamma^h_jk`. For a diagonal metric only three patterns survive.
    pub fn christoffel(&self) -> &Tensor {
        self.gamma.get_or_init(|| {
            let n = self.dim();
            let half = DiffExpr::rational(1, 2);
            Tensor::build(n, 3, SymmetryClass::None, |idx| {
                let (h, j, k) = (idx[0], idx[1], idx[2]);
                let ghh_inv = self.metric.ginv(h);
                if j == h && k == h {
                    // (1/2) g^hh d_h g_hh
                    half.mul(ghh_inv).mul(&self.d(self.metric.g(h), h))
                } else if j == h {
                    // (1/2) g^hh d_k g_hh
                    half.mul(ghh_inv).mul(&self.d(self.metric.g(h), k))
                } else if k == h {
                    half.mul(ghh_inv).mul(&self.d(self.metric.g(h), j))
                } else if j == k {
                    // -(1/2) g^hh d_h g_jj
                    half.neg().mul(ghh_inv).mul(&self.d(self.metric.g(j), h))
                } else {
                    DiffExpr::zero()
                }
            })
        })
    }

    /// Covariant (0,4) curvature tensor in the crate's sign convention:
    /// `R_hijk = g_hl (d_j Gamma^l_ik - d_k Gamma^l_ij
    ///           + Gamma^m_ik Gamma^l_mj - Gamma^m_ij Gamma^l_mk)`.
    pub fn riemann(&self) -> &Tensor {
        self.riemann.get_or_init(|| {
            let n = self.dim();
            let gamma = self.christoffel().clone();
            // d_l Gamma^h_ij, indexed [h, i, j, l].
            let dgamma = Tensor::build(n, 4, SymmetryClass::None, |idx| {
                self.d(gamma.get(&idx[..3]), idx[3])
            });
            Tensor::build(n, 4, SymmetryClass::RiemannLike, |idx| {
                let (h, i, j, k) = (idx[0], idx[1], idx[2], idx[3]);
                // Diagonal metric: the lowering index l equals h.
                let mut acc = dgamma
                    .get(&[h, i, k, j])
                    .sub(dgamma.get(&[h, i, j, k]));
                for m in 0..n {
                    let g_ik_m = gamma.get(&[m, i, k]);
                    if !g_ik_m.is_zero() {
                        let g_mj = gamma.get(&[h, m, j]);
                        if !g_mj.is_zero() {
                            acc = acc.add(&g_ik_m.mul(g_mj));
                        }
                    }
                    let g_ij_m = gamma.get(&[m, i, j]);
                    if !g_ij_m.is_zero() {
                        let g_mk = gamma.get(&[h, m, k]);
                        if !g_mk.is_zero() {
                            acc = acc.sub(&g_ij_m.mul(g_mk));
                        }
                    }
                }
                acc.mul(self.metric.g(h))
            })
        })
    }

    /// Ricci tensor `S_ij = g^hk R_hijk`.
    pub fn ricci(&self) -> &Tensor {
        self.ricci.get_or_init(|| {
            let n = self.dim();
            let riem = self.riemann();
            Tensor::build(n, 2, SymmetryClass::Symmetric2, |idx| {
                let (i, j) = (idx[0], idx[1]);
                let mut acc = DiffExpr::zero();
                for h in 0..n {
                    let r = riem.get(&[h, i, j, h]);
                    if !r.is_zero() {
                        acc = acc.add(&self.metric.ginv(h).mul(r));
                    }
                }
                acc
            })
        })
    }

    /// Scalar curvature `r = g^ij S_ij`.
    pub fn scalar(&self) -> &DiffExpr {
        self.scalar.get_or_init(|| {
            let n = self.dim();
            let ricci = self.ricci();
            let mut acc = DiffExpr::zero();
            for i in 0..n {
                let s = ricci.get(&[i, i]);
                if !s.is_zero() {
                    acc = acc.add(&self.metric.ginv(i).mul(s));
                }
            }
            acc
        })
    }

    /// `G = (1/2) g~g`, i.e. `G_hijk = g_hk g_ij - g_hj g_ik`.
    pub fn gtensor(&self) -> &Tensor {
        self.gtensor.get_or_init(|| {
            let n = self.dim();
            Tensor::build(n, 4, SymmetryClass::RiemannLike, |idx| {
                let (h, i, j, k) = (idx[0], idx[1], idx[2], idx[3]);
                let mut acc = DiffExpr::zero();
                if h == k && i == j {
                    acc = acc.add(&self.metric.g(h).mul(self.metric.g(i)));
                }
                if h == j && i == k {
                    acc = acc.sub(&self.metric.g(h).mul(self.metric.g(i)));
                }
                acc
            })
        })
    }

    fn dimension_guard(
        &self,
        tensor: &'static str,
        min: usize,
    ) -> Result<(), CurvError> {
        if self.dim() < min {
            return Err(CurvError::Dimension {
                tensor,
                min,
                got: self.dim(),
                metric: self.metric.name().to_string(),
            });
        }
        Ok(())
    }

    /// Weyl conformal curvature tensor
    /// `C = R - (1/(n-2)) g~S + (r/((n-1)(n-2))) G`.
    pub fn weyl(&self) -> Result<&Tensor, CurvError> {
        self.dimension_guard("the Weyl tensor", 4)?;
        Ok(self.weyl.get_or_init(|| {
            let n = self.dim() as i64;
            let gs = crate::operators::kulkarni_nomizu(self.metric_tensor(), self.ricci());
            let c = Tensor::lin_comb(&[
                (DiffExpr::one(), self.riemann()),
                (DiffExpr::rational(-1, n - 2), &gs),
                (
                    self.scalar()
                        .mul_rational(1, (n - 1) * (n - 2)),
                    self.gtensor(),
                ),
            ]);
            c.with_sym(SymmetryClass::RiemannLike)
                .expect("Weyl tensor has curvature symmetries")
        }))
    }

    /// Projective curvature tensor
    /// `P_hijk = R_hijk - (1/(n-1)) (g_hk S_ij - g_ik S_hj)`.
    pub fn projective(&self) -> Result<&Tensor, CurvError> {
        self.dimension_guard("the projective tensor", 3)?;
        Ok(self.projective.get_or_init(|| {
            let n = self.dim();
            let riem = self.riemann();
            let ricci = self.ricci();
            let frac = DiffExpr::rational(1, n as i64 - 1);
            Tensor::build(n, 4, SymmetryClass::None, |idx| {
                let (h, i, j, k) = (idx[0], idx[1], idx[2], idx[3]);
                let mut acc = riem.get(&[h, i, j, k]).clone();
                if h == k {
                    acc = acc.sub(&frac.mul(self.metric.g(h)).mul(ricci.get(&[i, j])));
                }
                if i == k {
                    acc = acc.add(&frac.mul(self.metric.g(i)).mul(ricci.get(&[h, j])));
                }
                acc
            })
        }))
    }

    /// Concircular curvature tensor `W = R - (r/(n(n-1))) G`.
    pub fn concircular(&self) -> Result<&Tensor, CurvError> {
        self.dimension_guard("the concircular tensor", 2)?;
        Ok(self.concircular.get_or_init(|| {
            let n = self.dim() as i64;
            let c = Tensor::lin_comb(&[
                (DiffExpr::one(), self.riemann()),
                (self.scalar().mul_rational(-1, n * (n - 1)), self.gtensor()),
            ]);
            c.with_sym(SymmetryClass::RiemannLike)
                .expect("concircular tensor has curvature symmetries")
        }))
    }

    /// Conharmonic curvature tensor `K = R - (1/(n-2)) g~S`.
    pub fn conharmonic(&self) -> Result<&Tensor, CurvError> {
        self.dimension_guard("the conharmonic tensor", 4)?;
        Ok(self.conharmonic.get_or_init(|| {
            let n = self.dim() as i64;
            let gs = crate::operators::kulkarni_nomizu(self.metric_tensor(), self.ricci());
            let c = Tensor::lin_comb(&[
                (DiffExpr::one(), self.riemann()),
                (DiffExpr::rational(-1, n - 2), &gs),
            ]);
            c.with_sym(SymmetryClass::RiemannLike)
                .expect("conharmonic tensor has curvature symmetries")
        }))
    }

    /// Covariant derivative of a (0,k) tensor; the derivative index is
    /// stored last: `(nabla T)[i_1..i_k, l]`.
    pub fn covariant_derivative(&self, t: &Tensor) -> Tensor {
        let n = self.dim();
        let rank = t.rank();
        let gamma = self.christoffel();
        Tensor::build(n, rank + 1, SymmetryClass::None, |idx| {
            let l = idx[rank];
            let base = &idx[..rank];
            let mut acc = self.d(t.get(base), l);
            let mut slot = base.to_vec();
            for a in 0..rank {
                let orig = slot[a];
                for m in 0..n {
                    let g = gamma.get(&[m, l, orig]);
                    if g.is_zero() {
                        continue;
                    }
                    slot[a] = m;
                    let tv = t.get(&slot);
                    if !tv.is_zero() {
                        acc = acc.sub(&g.mul(tv));
                    }
                }
                slot[a] = orig;
            }
            acc
        })
    }

    /// `nabla R`, a (0,5) tensor with the derivative index last.
    pub fn nabla_riemann(&self) -> &Tensor {
        self.nabla_riemann
            .get_or_init(|| self.covariant_derivative(self.riemann()))
    }

    /// `nabla S`, a (0,3) tensor with the derivative index last.
    pub fn nabla_ricci(&self) -> &Tensor {
        self.nabla_ricci
            .get_or_init(|| self.covariant_derivative(self.ricci()))
    }

    /// Gradient component `d_l r` by coordinate position.
    pub fn scalar_gradient(&self, l: usize) -> DiffExpr {
        self.d(self.scalar(), l)
    }

    /// Diagonal inverse metric as a slice.
    pub fn ginv(&self) -> &[DiffExpr] {
        self.ginv_vec.get_or_init(|| {
            (0..self.dim()).map(|i| self.metric.ginv(i).clone()).collect()
        })
    }

    /// Look up a named tensor (computing it on demand).
    pub fn tensor(&self, kind: TensorKind) -> Result<&Tensor, CurvError> {
        Ok(match kind {
            TensorKind::Metric => self.metric_tensor(),
            TensorKind::Riemann => self.riemann(),
            TensorKind::Ricci => self.ricci(),
            TensorKind::Gtensor => self.gtensor(),
            TensorKind::Weyl => self.weyl()?,
            TensorKind::Projective => self.projective()?,
            TensorKind::Concircular => self.concircular()?,
            TensorKind::Conharmonic => self.conharmonic()?,
        })
    }

    /// Cached action `D . T` of a rank-4 operator on a named tensor.
    pub fn action(&self, d: TensorKind, t: TensorKind) -> Result<Arc<Tensor>, CurvError> {
        if let Some(hit) = self.action_cache.lock().unwrap().get(&(d, t)) {
            return Ok(hit.clone());
        }
        let dt = self.tensor(d)?;
        assert_eq!(dt.rank(), 4, "action operator must be rank 4");
        let tt = self.tensor(t)?;
        let result = Arc::new(crate::operators::action(self.ginv(), dt, tt));
        self.action_cache
            .lock()
            .unwrap()
            .insert((d, t), result.clone());
        Ok(result)
    }

    /// Cached Tachibana operator `Q(A, T)` for `A` the metric or Ricci.
    pub fn tachibana(&self, a: TensorKind, t: TensorKind) -> Result<Arc<Tensor>, CurvError> {
        if let Some(hit) = self.tachibana_cache.lock().unwrap().get(&(a, t)) {
            return Ok(hit.clone());
        }
        let at = self.tensor(a)?;
        assert_eq!(at.rank(), 2, "Tachibana operator needs a rank-2 tensor");
        let tt = self.tensor(t)?;
        let result = Arc::new(crate::operators::tachibana(at, tt));
        self.tachibana_cache
            .lock()
            .unwrap()
            .insert((a, t), result.clone());
        Ok(result)
    }
}
