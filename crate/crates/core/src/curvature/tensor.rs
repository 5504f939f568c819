//! Dense covariant tensors with declared symmetry classes.
//!
//! Components are stored flat in row-major order over 0-based indices.
//! Builders fill every component (in parallel when enabled) and then
//! verify the declared symmetry class, so a wrong formula fails loudly at
//! construction instead of corrupting later algebra.

use crate::exec::map_range;
use crate::symkernel::DiffExpr;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymmetryClass {
    /// No constraints.
    None,
    /// Rank 2, T[i,j] = T[j,i].
    Symmetric2,
    /// Rank 4: antisymmetric in (1,2) and (3,4), symmetric under pair
    /// interchange, and satisfying the first Bianchi identity.
    RiemannLike,
    /// Rank 4: like `RiemannLike` but without the Bianchi sum.
    GeneralizedCurvature,
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("symmetry violation in {class:?} tensor at component [{index}]: {detail}")]
pub struct SymmetryViolation {
    pub class: SymmetryClass,
    pub index: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    rank: usize,
    sym: SymmetryClass,
    data: Vec<DiffExpr>,
}

fn checked_pow(dim: usize, rank: usize) -> usize {
    dim.checked_pow(rank as u32).expect("tensor size overflow")
}

/// Decode a flat offset into indices (most significant first).
pub fn decode(mut flat: usize, dim: usize, rank: usize) -> Vec<usize> {
    let mut idx = vec![0usize; rank];
    for slot in (0..rank).rev() {
        idx[slot] = flat % dim;
        flat /= dim;
    }
    idx
}

/// Encode indices into a flat offset.
pub fn encode(idx: &[usize], dim: usize) -> usize {
    let mut flat = 0usize;
    for &i in idx {
        debug_assert!(i < dim);
        flat = flat * dim + i;
    }
    flat
}

/// Human-readable 1-based index label like `1213`.
pub fn label(idx: &[usize]) -> String {
    idx.iter().map(|i| (i + 1).to_string()).collect()
}

impl Tensor {
    /// Fill all components from `f` and verify the symmetry class.
    pub fn build<F>(dim: usize, rank: usize, sym: SymmetryClass, f: F) -> Tensor
    where
        F: Fn(&[usize]) -> DiffExpr + Sync,
    {
        let len = checked_pow(dim, rank);
        let data = map_range(len, |flat| f(&decode(flat, dim, rank)));
        let t = Tensor { dim, rank, sym, data };
        if let Err(v) = t.verify_symmetries() {
            panic!("tensor construction: {v}");
        }
        t
    }

    pub fn from_components(
        dim: usize,
        rank: usize,
        sym: SymmetryClass,
        data: Vec<DiffExpr>,
    ) -> Result<Tensor, SymmetryViolation> {
        assert_eq!(data.len(), checked_pow(dim, rank));
        let t = Tensor { dim, rank, sym, data };
        t.verify_symmetries()?;
        Ok(t)
    }

    pub fn zero(dim: usize, rank: usize) -> Tensor {
        Tensor {
            dim,
            rank,
            sym: SymmetryClass::None,
            data: vec![DiffExpr::zero(); checked_pow(dim, rank)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn sym(&self) -> SymmetryClass {
        self.sym
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, idx: &[usize]) -> &DiffExpr {
        debug_assert_eq!(idx.len(), self.rank);
        &self.data[encode(idx, self.dim)]
    }

    pub fn get_flat(&self, flat: usize) -> &DiffExpr {
        &self.data[flat]
    }

    pub fn components(&self) -> &[DiffExpr] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// First flat index holding a nonzero component.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.data.iter().position(|e| !e.is_zero())
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.zip(other, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> Tensor {
        self.map(|e| e.neg())
    }

    pub fn scale(&self, c: &DiffExpr) -> Tensor {
        if c.is_zero() {
            let mut t = Tensor::zero(self.dim, self.rank);
            t.sym = self.sym;
            return t;
        }
        self.map(|e| e.mul(c))
    }

    /// Componentwise map preserving shape; the declared class is kept (all
    /// class constraints are linear/multiplicative-stable for the maps we
    /// use: scaling, negation, substitution).
    pub fn map<F>(&self, f: F) -> Tensor
    where
        F: Fn(&DiffExpr) -> DiffExpr + Sync,
    {
        let data = map_range(self.data.len(), |i| f(&self.data[i]));
        Tensor { dim: self.dim, rank: self.rank, sym: self.sym, data }
    }

    /// Fallible componentwise map; stops at the first error.
    pub fn try_map<F, E>(&self, f: F) -> Result<Tensor, E>
    where
        F: Fn(&DiffExpr) -> Result<DiffExpr, E>,
    {
        let mut data = Vec::with_capacity(self.data.len());
        for e in &self.data {
            data.push(f(e)?);
        }
        Ok(Tensor { dim: self.dim, rank: self.rank, sym: self.sym, data })
    }

    fn zip<F>(&self, other: &Tensor, f: F) -> Tensor
    where
        F: Fn(&DiffExpr, &DiffExpr) -> DiffExpr + Sync,
    {
        assert_eq!(self.dim, other.dim);
        assert_eq!(self.rank, other.rank);
        let sym = if self.sym == other.sym { self.sym } else { SymmetryClass::None };
        let data = map_range(self.data.len(), |i| f(&self.data[i], &other.data[i]));
        Tensor { dim: self.dim, rank: self.rank, sym, data }
    }

    /// Linear combination `sum c_i T_i`; tensors must share shape.
    pub fn lin_comb(terms: &[(DiffExpr, &Tensor)]) -> Tensor {
        let (c0, t0) = terms.first().expect("nonempty combination");
        let mut acc = t0.scale(c0);
        for (c, t) in &terms[1..] {
            acc = acc.add(&t.scale(c));
        }
        acc
    }

    /// Re-tag the symmetry class, verifying it holds.
    pub fn with_sym(mut self, sym: SymmetryClass) -> Result<Tensor, SymmetryViolation> {
        self.sym = sym;
        self.verify_symmetries()?;
        Ok(self)
    }

    pub fn verify_symmetries(&self) -> Result<(), SymmetryViolation> {
        let fail = |idx: &[usize], detail: String| SymmetryViolation {
            class: self.sym,
            index: label(idx),
            detail,
        };
        match self.sym {
            SymmetryClass::None => Ok(()),
            SymmetryClass::Symmetric2 => {
                assert_eq!(self.rank, 2);
                for i in 0..self.dim {
                    for j in (i + 1)..self.dim {
                        if self.get(&[i, j]) != self.get(&[j, i]) {
                            return Err(fail(&[i, j], "T[i,j] != T[j,i]".into()));
                        }
                    }
                }
                Ok(())
            }
            SymmetryClass::RiemannLike | SymmetryClass::GeneralizedCurvature => {
                assert_eq!(self.rank, 4);
                let n = self.dim;
                for h in 0..n {
                    for i in 0..n {
                        for j in 0..n {
                            for k in 0..n {
                                let v = self.get(&[h, i, j, k]);
                                if self.get(&[i, h, j, k]) != &v.neg() {
                                    return Err(fail(
                                        &[h, i, j, k],
                                        "not antisymmetric in the first pair".into(),
                                    ));
                                }
                                if self.get(&[h, i, k, j]) != &v.neg() {
                                    return Err(fail(
                                        &[h, i, j, k],
                                        "not antisymmetric in the second pair".into(),
                                    ));
                                }
                                if self.get(&[j, k, h, i]) != v {
                                    return Err(fail(
                                        &[h, i, j, k],
                                        "not symmetric under pair interchange".into(),
                                    ));
                                }
                                if self.sym == SymmetryClass::RiemannLike {
                                    let cyc = v
                                        .add(self.get(&[h, j, k, i]))
                                        .add(self.get(&[h, k, i, j]));
                                    if !cyc.is_zero() {
                                        return Err(fail(
                                            &[h, i, j, k],
                                            "first Bianchi sum is nonzero".into(),
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }
}
