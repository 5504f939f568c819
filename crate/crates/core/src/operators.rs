//! Algebraic operators on curvature tensors: the Kulkarni-Nomizu product,
//! Tachibana operators `Q(A,T)`, and the action `D . T` of a
//! curvature-type (0,4) tensor on an arbitrary (0,k) tensor.
//!
//! Contractions skip zero factors before multiplying; for diagonal metrics
//! the curvature tensors are sparse enough that this turns the (0,6)
//! actions from hundreds of thousands of products into a few thousand.

use crate::curvature::{SymmetryClass, Tensor};
use crate::symkernel::DiffExpr;

/// Kulkarni-Nomizu product of two symmetric (0,2) tensors:
/// `(A~B)_hijk = A_hk B_ij + A_ij B_hk - A_hj B_ik - A_ik B_hj`.
pub fn kulkarni_nomizu(a: &Tensor, b: &Tensor) -> Tensor {
    assert_eq!(a.rank(), 2, "Kulkarni-Nomizu needs (0,2) factors");
    assert_eq!(b.rank(), 2, "Kulkarni-Nomizu needs (0,2) factors");
    assert_eq!(a.dim(), b.dim());
    let n = a.dim();
    Tensor::build(n, 4, SymmetryClass::GeneralizedCurvature, |idx| {
        let (h, i, j, k) = (idx[0], idx[1], idx[2], idx[3]);
        let mut acc = DiffExpr::zero();
        let mut add_product = |x: &DiffExpr, y: &DiffExpr, negate: bool| {
            if x.is_zero() || y.is_zero() {
                return;
            }
            let p = x.mul(y);
            acc = if negate { acc.sub(&p) } else { acc.add(&p) };
        };
        add_product(a.get(&[h, k]), b.get(&[i, j]), false);
        add_product(a.get(&[i, j]), b.get(&[h, k]), false);
        add_product(a.get(&[h, j]), b.get(&[i, k]), true);
        add_product(a.get(&[i, k]), b.get(&[h, j]), true);
        acc
    })
}

/// Tachibana operator: for a symmetric (0,2) tensor `A` and a (0,k) tensor
/// `T`,
/// `Q(A,T)_{i1..ik u v} = sum_a A_{i_a u} T_{..v@a..} - A_{i_a v} T_{..u@a..}`.
pub fn tachibana(a: &Tensor, t: &Tensor) -> Tensor {
    assert_eq!(a.rank(), 2, "Tachibana operator needs a (0,2) first factor");
    assert_eq!(a.dim(), t.dim());
    let n = t.dim();
    let k = t.rank();
    Tensor::build(n, k + 2, SymmetryClass::None, |idx| {
        let (u, v) = (idx[k], idx[k + 1]);
        let base = &idx[..k];
        let mut acc = DiffExpr::zero();
        let mut slot = base.to_vec();
        for a_pos in 0..k {
            let orig = slot[a_pos];
            let a_u = a.get(&[orig, u]);
            if !a_u.is_zero() {
                slot[a_pos] = v;
                let tv = t.get(&slot);
                if !tv.is_zero() {
                    acc = acc.add(&a_u.mul(tv));
                }
            }
            let a_v = a.get(&[orig, v]);
            if !a_v.is_zero() {
                slot[a_pos] = u;
                let tu = t.get(&slot);
                if !tu.is_zero() {
                    acc = acc.sub(&a_v.mul(tu));
                }
            }
            slot[a_pos] = orig;
        }
        acc
    })
}

/// Action of a curvature-type (0,4) tensor `D` (through its endomorphisms)
/// on a (0,k) tensor:
/// `(D . T)_{i1..ik u v} = -sum_a g^{pq} D_{u v i_a q} T_{..p@a..}`.
/// `ginv` is the diagonal inverse metric.
pub fn action(ginv: &[DiffExpr], d: &Tensor, t: &Tensor) -> Tensor {
    assert_eq!(d.rank(), 4, "action needs a (0,4) operator");
    assert_eq!(d.dim(), t.dim());
    let n = t.dim();
    let k = t.rank();
    Tensor::build(n, k + 2, SymmetryClass::None, |idx| {
        let (u, v) = (idx[k], idx[k + 1]);
        if u == v {
            return DiffExpr::zero();
        }
        let base = &idx[..k];
        let mut acc = DiffExpr::zero();
        let mut slot = base.to_vec();
        for a_pos in 0..k {
            let orig = slot[a_pos];
            for p in 0..n {
                let dv = d.get(&[u, v, orig, p]);
                if dv.is_zero() {
                    continue;
                }
                slot[a_pos] = p;
                let tv = t.get(&slot);
                if !tv.is_zero() {
                    acc = acc.sub(&ginv[p].mul(dv).mul(tv));
                }
            }
            slot[a_pos] = orig;
        }
        acc
    })
}
