//! Polynomial gcd and exact division, used to keep fractions reduced.
//!
//! The workhorse is a primitive subresultant remainder sequence, applied
//! recursively one variable at a time with integer coefficients. Cosine
//! generators need care: squares of cosines are rewritten into sines, so
//! polynomials that still contain a cosine are only cosine-linear and are
//! split as `A + cos(x)*B` before recursing; if both arguments carry the
//! same cosine we settle for the monomial/integer gcd, which is always a
//! valid common divisor. Fraction equality elsewhere never assumes the
//! gcd is maximal, only that division by it is exact.

use num::{BigRational, One};

use super::generator::Generator;
use super::poly::{Monomial, Poly};

/// Exact division in the polynomial ring: returns `q` with `q * b == a`,
/// or `None` when `b` does not divide `a`.
pub fn div_exact(a: &Poly, b: &Poly) -> Option<Poly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(Poly::zero());
    }
    if b.is_one() {
        return Some(a.clone());
    }
    let mut remainder = a.clone();
    let mut quotient = Poly::zero();
    let (lead_b_mono, lead_b_coeff) = {
        let (m, c) = b.leading().expect("nonzero");
        (m.clone(), c.clone())
    };
    while !remainder.is_zero() {
        let (qm, qc) = {
            let (lr_m, lr_c) = remainder.leading().expect("nonzero");
            if !lead_b_mono.divides(lr_m) {
                return None;
            }
            (lead_b_mono.div_into(lr_m), lr_c / &lead_b_coeff)
        };
        let step = b.mul_monomial(&qm, &qc);
        // Trig rewriting inside the product could in principle disturb the
        // leading term; if it no longer cancels, the division is not exact
        // in this representation.
        let cancels = match (step.leading(), remainder.leading()) {
            (Some((sm, sc)), Some((rm, rc))) => sm == rm && sc == rc,
            _ => false,
        };
        if !cancels {
            return None;
        }
        remainder = remainder.sub(&step);
        quotient = quotient.add(&Poly::term(qm, qc));
    }
    Some(quotient)
}

fn divide_out_monomial(p: &Poly, m: &Monomial) -> Poly {
    if m.is_unit() {
        return p.clone();
    }
    let mut out = Poly::zero();
    for (mono, coeff) in p.terms() {
        out = out.add(&Poly::term(m.div_into(mono), coeff.clone()));
    }
    out
}

fn cos_coordinate(p: &Poly) -> Option<Generator> {
    for (mono, _) in p.terms() {
        for (g, _) in mono.factors() {
            if matches!(g, Generator::Cos(_)) {
                return Some(g.clone());
            }
        }
    }
    None
}

/// Split `p = even + cos * odd` for the given cosine generator; `p` is at
/// most linear in it by canonicality.
fn split_cos(p: &Poly, cos: &Generator) -> (Poly, Poly) {
    let mut even = Poly::zero();
    let mut odd = Poly::zero();
    for (mono, coeff) in p.terms() {
        match mono.exponent_of(cos) {
            0 => even = even.add(&Poly::term(mono.clone(), coeff.clone())),
            1 => {
                let stripped = Monomial::generator(cos.clone()).div_into(mono);
                odd = odd.add(&Poly::term(stripped, coeff.clone()));
            }
            _ => unreachable!("canonical polynomials are cosine-linear"),
        }
    }
    (even, odd)
}

/// Univariate view of a polynomial: coefficients (free of the main
/// variable) indexed by the power of the main variable.
struct UPoly {
    coeffs: Vec<Poly>,
}

impl UPoly {
    fn from_poly(p: &Poly, x: &Generator) -> UPoly {
        let deg = p.degree_in(x) as usize;
        let mut coeffs = vec![Poly::zero(); deg + 1];
        for (mono, coeff) in p.terms() {
            let e = mono.exponent_of(x) as usize;
            let rest = Monomial::power(x.clone(), e as u32).div_into(mono);
            coeffs[e] = coeffs[e].add(&Poly::term(rest, coeff.clone()));
        }
        let mut up = UPoly { coeffs };
        up.trim();
        up
    }

    fn to_poly(&self, x: &Generator) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in self.coeffs.iter().enumerate() {
            out = out.add(&c.mul_monomial(&Monomial::power(x.clone(), e as u32), &BigRational::one()));
        }
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    fn lc(&self) -> &Poly {
        self.coeffs.last().expect("nonzero")
    }

    fn mul_coeff(&self, c: &Poly) -> UPoly {
        let mut out = UPoly {
            coeffs: self.coeffs.iter().map(|k| k.mul(c)).collect(),
        };
        out.trim();
        out
    }

    fn div_coeff_exact(&self, c: &Poly) -> UPoly {
        UPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|k| div_exact(k, c).expect("inexact coefficient division in PRS"))
                .collect(),
        }
    }

    fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Poly::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(Poly::zero);
            coeffs.push(a.sub(&b));
        }
        let mut out = UPoly { coeffs };
        out.trim();
        out
    }

    /// Multiply by `x^k`.
    fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly { coeffs: vec![] };
        }
        let mut coeffs = vec![Poly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    fn content(&self) -> Poly {
        let mut acc = Poly::zero();
        for c in &self.coeffs {
            acc = poly_gcd(&acc, c);
            if acc.is_one() {
                break;
            }
        }
        acc
    }
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a` reduced modulo `b`.
fn pseudo_rem(a: &UPoly, b: &UPoly) -> UPoly {
    let lb = b.lc().clone();
    let mut r = UPoly { coeffs: a.coeffs.clone() };
    let mut scalings_left = a.deg() as i64 - b.deg() as i64 + 1;
    while !r.is_zero() && r.deg() >= b.deg() {
        let lr = r.lc().clone();
        let k = r.deg() - b.deg();
        r = r.mul_coeff(&lb).sub(&b.shift(k).mul_coeff(&lr));
        scalings_left -= 1;
    }
    for _ in 0..scalings_left.max(0) {
        r = r.mul_coeff(&lb);
    }
    r
}

/// Subresultant remainder sequence on primitive inputs; returns a gcd of
/// the two up to content.
fn subresultant(mut a: UPoly, mut b: UPoly) -> UPoly {
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = a.deg() - b.deg();
        let r = pseudo_rem(&a, &b);
        if r.is_zero() {
            return b;
        }
        if r.deg() == 0 {
            return UPoly { coeffs: vec![Poly::one()] };
        }
        let beta = g.mul(&h.pow(delta as u32));
        a = b;
        b = r.div_coeff_exact(&beta);
        g = a.lc().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => div_exact(&g.pow(delta as u32), &h.pow(delta as u32 - 1))
                .expect("inexact h update in PRS"),
        };
    }
}

/// Greatest common divisor, normalized to integer coefficients with
/// content 1 and a positive leading coefficient. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.primitive_integer().0;
    }
    if b.is_zero() {
        return a.primitive_integer().0;
    }
    let mono = a.monomial_content().gcd(&b.monomial_content());
    let a1 = divide_out_monomial(a, &a.monomial_content()).primitive_integer().0;
    let b1 = divide_out_monomial(b, &b.monomial_content()).primitive_integer().0;
    // Orient deterministically (positive leading coefficient) so callers
    // see a canonical representative of the gcd class.
    let core = poly_gcd_stripped(&a1, &b1).primitive_integer().0;
    core.mul_monomial(&mono, &BigRational::one())
}

/// gcd of monomial-content-free, integer-primitive polynomials.
fn poly_gcd_stripped(a: &Poly, b: &Poly) -> Poly {
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    if a == b {
        return a.clone();
    }
    // Cosine-linear splits: a cosine-free common divisor of A + cos*B
    // divides both A and B.
    if let Some(cos) = cos_coordinate(a) {
        if b.degree_in(&cos) > 0 {
            return Poly::one();
        }
        let (even, odd) = split_cos(a, &cos);
        return poly_gcd_stripped(&poly_gcd(&even, &odd), b);
    }
    if let Some(cos) = cos_coordinate(b) {
        let (even, odd) = split_cos(b, &cos);
        return poly_gcd_stripped(a, &poly_gcd(&even, &odd));
    }
    let vars_a = a.generators();
    let vars_b = b.generators();
    let common: Vec<Generator> = vars_a.iter().filter(|g| vars_b.contains(g)).cloned().collect();
    if common.is_empty() {
        return Poly::one();
    }
    let x = common
        .iter()
        .min_by_key(|g| a.degree_in(g).max(b.degree_in(g)))
        .expect("nonempty")
        .clone();
    let ua = UPoly::from_poly(a, &x);
    let ub = UPoly::from_poly(b, &x);
    let cont_a = ua.content();
    let cont_b = ub.content();
    let ppa = ua.div_coeff_exact(&cont_a);
    let ppb = ub.div_coeff_exact(&cont_b);
    let raw = subresultant(ppa, ppb);
    let pp = {
        let c = raw.content();
        raw.div_coeff_exact(&c)
    };
    let cont_gcd = poly_gcd(&cont_a, &cont_b);
    pp.to_poly(&x).mul(&cont_gcd).primitive_integer().0
}
