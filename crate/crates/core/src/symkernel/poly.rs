//! Multivariate polynomials over the rationals in the kernel generators.
//!
//! Terms live in a `BTreeMap` keyed by monomial under a graded
//! lexicographic order (total degree first, then earlier generators win),
//! so the leading term is the map's last entry and iteration order is
//! deterministic. `cos(x)^2` never survives: multiplication and every
//! other entry point rewrite it to `1 - sin(x)^2`, which makes equality
//! of canonical forms decide equality modulo the trig ideal.

use num::{BigInt, BigRational, One, Signed, Zero};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::generator::Generator;

/// A power product of generators. Factors are sorted by generator and all
/// exponents are at least one; the empty product is the monomial `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    factors: SmallVec<[(Generator, u32); 4]>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { factors: SmallVec::new() }
    }

    pub fn generator(g: Generator) -> Self {
        Monomial { factors: smallvec::smallvec![(g, 1)] }
    }

    pub fn power(g: Generator, e: u32) -> Self {
        if e == 0 {
            Monomial::unit()
        } else {
            Monomial { factors: smallvec::smallvec![(g, e)] }
        }
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn exponent_of(&self, g: &Generator) -> u32 {
        self.factors
            .iter()
            .find(|(h, _)| h == g)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: SmallVec<[(Generator, u32); 4]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                Ordering::Less => {
                    out.push(self.factors[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.factors[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.factors[i].0.clone(), self.factors[i].1 + other.factors[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.factors[i..].iter().cloned());
        out.extend(other.factors[j..].iter().cloned());
        Monomial { factors: out }
    }

    /// Componentwise minimum of exponents: the gcd of two monomials.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out: SmallVec<[(Generator, u32); 4]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push((
                        self.factors[i].0.clone(),
                        self.factors[i].1.min(other.factors[j].1),
                    ));
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial { factors: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.factors
            .iter()
            .all(|(g, e)| other.exponent_of(g) >= *e)
    }

    /// Quotient of monomials; caller must ensure `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut out: SmallVec<[(Generator, u32); 4]> = SmallVec::new();
        for (g, e) in other.factors.iter() {
            let q = e - self.exponent_of(g);
            if q > 0 {
                out.push((g.clone(), q));
            }
        }
        Monomial { factors: out }
    }

    /// Remove one generator entirely (used when substituting for it).
    fn without(&self, g: &Generator) -> Monomial {
        Monomial {
            factors: self
                .factors
                .iter()
                .filter(|(h, _)| h != g)
                .cloned()
                .collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Lexicographic tie-break: walk generators in increasing order; at
        // the first generator where the exponents differ, the monomial with
        // the larger exponent is the larger monomial.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.factors.get(i), other.factors.get(j)) {
                (None, None) => return Ordering::Equal,
                // Only `other` still has factors on generators we lack, so
                // at the first of them our exponent 0 loses.
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ga, ea)), Some((gb, eb))) => match ga.cmp(gb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial with rational coefficients; zero coefficients never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

fn add_term(map: &mut BTreeMap<Monomial, BigRational>, mono: Monomial, coeff: BigRational) {
    if coeff.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(mono) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Poly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn generator(g: Generator) -> Self {
        Poly::term(Monomial::generator(g), BigRational::one())
    }

    pub fn term(mono: Monomial, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Poly { terms }.trig_reduce()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// The constant value if the polynomial has no generator dependence.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::unit()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Leading term under the monomial order; `None` for the zero poly.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, g: &Generator) -> u32 {
        self.terms.keys().map(|m| m.exponent_of(g)).max().unwrap_or(0)
    }

    /// All generators that occur with positive exponent.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out: Vec<Generator> = Vec::new();
        for mono in self.terms.keys() {
            for (g, _) in mono.factors() {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out.sort();
        out
    }

    pub fn max_xi_order(&self) -> Option<u32> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter())
            .filter_map(|(g, _)| match g {
                Generator::Xi(k) => Some(*k),
                _ => None,
            })
            .max()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in other.terms.iter() {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Poly { terms }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in other.terms.iter() {
            add_term(&mut terms, m.clone(), -c.clone());
        }
        Poly { terms }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut terms = BTreeMap::new();
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in other.terms.iter() {
                add_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Poly { terms }.trig_reduce()
    }

    pub fn mul_scalar(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, coeff: &BigRational) -> Poly {
        if coeff.is_zero() {
            return Poly::zero();
        }
        let raw = Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c * coeff))
                .collect(),
        };
        raw.trig_reduce()
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Rewrite every `cos(x)^k` with `k >= 2` using `cos^2 = 1 - sin^2`
    /// until no squared cosine remains.
    fn trig_reduce(self) -> Poly {
        let needs_work = |m: &Monomial| {
            m.factors()
                .iter()
                .any(|(g, e)| matches!(g, Generator::Cos(_)) && *e >= 2)
        };
        if !self.terms.keys().any(needs_work) {
            return self;
        }
        let mut done: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        let mut queue: Vec<(Monomial, BigRational)> = self.terms.into_iter().collect();
        while let Some((mono, coeff)) = queue.pop() {
            let target = mono
                .factors()
                .iter()
                .find(|(g, e)| matches!(g, Generator::Cos(_)) && *e >= 2)
                .cloned();
            let Some((cos_gen, e)) = target else {
                add_term(&mut done, mono, coeff);
                continue;
            };
            let name = match &cos_gen {
                Generator::Cos(n) => n.clone(),
                _ => unreachable!(),
            };
            let q = e / 2;
            let r = e % 2;
            let base = mono.without(&cos_gen).mul(&Monomial::power(cos_gen.clone(), r));
            // (1 - sin^2)^q expanded binomially.
            let sin = Generator::Sin(name);
            let mut binom = BigInt::one();
            for i in 0..=q {
                if i > 0 {
                    binom = &binom * BigInt::from(q - i + 1) / BigInt::from(i);
                }
                let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                let c = &coeff * BigRational::from_integer(&binom * sign);
                let m = base.mul(&Monomial::power(sin.clone(), 2 * i));
                queue.push((m, c));
            }
        }
        Poly { terms: done }
    }

    /// Formal derivative with respect to the coordinate `coord`. Constants
    /// vanish, `xi` derivatives shift the tower (only for `t`), and trig
    /// generators rotate into each other.
    pub fn derivative(&self, coord: &str) -> Poly {
        let mut out = Poly::zero();
        for (mono, coeff) in self.terms.iter() {
            for (g, e) in mono.factors().iter() {
                let rest = {
                    let lowered = Monomial::power(g.clone(), e - 1);
                    mono.without(g).mul(&lowered)
                };
                let factor_derivative: Option<Poly> = match g {
                    Generator::Coord(name) => {
                        if name.as_ref() == coord {
                            Some(Poly::one())
                        } else {
                            None
                        }
                    }
                    Generator::Xi(k) => {
                        if coord == "t" {
                            Some(Poly::generator(Generator::Xi(k + 1)))
                        } else {
                            None
                        }
                    }
                    Generator::Sin(name) => {
                        if name.as_ref() == coord {
                            Some(Poly::generator(Generator::Cos(name.clone())))
                        } else {
                            None
                        }
                    }
                    Generator::Cos(name) => {
                        if name.as_ref() == coord {
                            Some(Poly::generator(Generator::Sin(name.clone())).neg())
                        } else {
                            None
                        }
                    }
                    Generator::Const(_) => None,
                };
                if let Some(df) = factor_derivative {
                    let scale = BigRational::from_integer(BigInt::from(*e)) * coeff;
                    out = out.add(&df.mul_monomial(&rest, &scale));
                }
            }
        }
        out
    }

    /// Greatest common monomial divisor of all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else {
            return Monomial::unit();
        };
        let mut acc = first.clone();
        for m in iter {
            if acc.is_unit() {
                break;
            }
            acc = acc.gcd(m);
        }
        acc
    }

    /// Write `self = scale * p` with `p` having integer coefficients whose
    /// gcd is 1 and a positive leading coefficient; `scale` is a rational
    /// (negative exactly when the leading coefficient was). Returns
    /// `(p, scale)`. The zero polynomial returns `(0, 1)`.
    pub fn primitive_integer(&self) -> (Poly, BigRational) {
        if self.is_zero() {
            return (Poly::zero(), BigRational::one());
        }
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
        }
        let mut numer_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&denom_lcm / c.denom());
            numer_gcd = num::integer::gcd(numer_gcd, scaled);
        }
        // numer_gcd is positive here (gcd convention); orient by leading term.
        let leading_negative = self
            .leading()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if leading_negative {
            numer_gcd = -numer_gcd;
        }
        let scale = BigRational::new(numer_gcd.clone(), denom_lcm);
        let inv = scale.recip();
        (self.mul_scalar(&inv), scale)
    }

    /// Replace generators by arbitrary polynomial values. Generators not in
    /// the map stay themselves.
    pub fn substitute_poly(&self, map: &dyn Fn(&Generator) -> Option<Poly>) -> Poly {
        let mut out = Poly::zero();
        for (mono, coeff) in self.terms.iter() {
            let mut acc = Poly::constant(coeff.clone());
            for (g, e) in mono.factors().iter() {
                let factor = match map(g) {
                    Some(p) => p.pow(*e),
                    None => Poly::term(Monomial::power(g.clone(), *e), BigRational::one()),
                };
                acc = acc.mul(&factor);
            }
            out = out.add(&acc);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Leading term first.
        for (i, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let neg = coeff.is_negative();
            let abs = coeff.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_unit() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symkernel::generator::sym;

    fn coord(name: &str) -> Poly {
        Poly::generator(Generator::Coord(sym(name)))
    }

    #[test]
    fn grlex_order() {
        let t = Monomial::generator(Generator::Coord(sym("t")));
        let xi = Monomial::generator(Generator::Xi(0));
        let t2 = t.mul(&t);
        // Higher total degree dominates.
        assert!(t2 > xi);
        // Equal degree: the earlier generator (t) wins the tie-break.
        assert!(t > xi);
        let txi = t.mul(&xi);
        assert!(t2 > txi);
        assert!(txi > xi.mul(&xi));
    }

    #[test]
    fn arithmetic_basics() {
        let t = coord("t");
        let sum = t.add(&Poly::one());
        let prod = sum.mul(&sum); // (t+1)^2
        let expanded = t.mul(&t).add(&t.mul_scalar(&BigRational::from_integer(2.into()))).add(&Poly::one());
        assert_eq!(prod, expanded);
        assert!(sum.sub(&sum).is_zero());
    }

    #[test]
    fn cos_square_rewrites() {
        let c = Poly::generator(Generator::Cos(sym("x")));
        let s = Poly::generator(Generator::Sin(sym("x")));
        let c2 = c.mul(&c);
        assert_eq!(c2, Poly::one().sub(&s.mul(&s)));
        // cos^3 = cos - cos*sin^2 stays linear in cos.
        let c3 = c2.mul(&c);
        assert_eq!(c3, c.sub(&c.mul(&s).mul(&s)));
        // sin^2 + cos^2 - 1 is exactly zero.
        let pyth = s.mul(&s).add(&c.mul(&c)).sub(&Poly::one());
        assert!(pyth.is_zero());
    }

    #[test]
    fn derivative_rules() {
        let t = coord("t");
        let xi = Poly::generator(Generator::Xi(0));
        // d/dt (t^2 * xi) = 2 t xi + t^2 xi'
        let p = t.mul(&t).mul(&xi);
        let expected = t
            .mul(&xi)
            .mul_scalar(&BigRational::from_integer(2.into()))
            .add(&t.mul(&t).mul(&Poly::generator(Generator::Xi(1))));
        assert_eq!(p.derivative("t"), expected);
        // Constants die; sin/cos rotate.
        let k = Poly::generator(Generator::Const(sym("C1")));
        assert!(k.derivative("t").is_zero());
        let s = Poly::generator(Generator::Sin(sym("x")));
        assert_eq!(s.derivative("x"), Poly::generator(Generator::Cos(sym("x"))));
        assert_eq!(
            Poly::generator(Generator::Cos(sym("x"))).derivative("x"),
            s.neg()
        );
    }

    #[test]
    fn primitive_integer_normalization() {
        let t = coord("t");
        // -3/2 t + 9/4  ->  scale -3/4, poly 2t - 3
        let p = t
            .mul_scalar(&BigRational::new((-3).into(), 2.into()))
            .add(&Poly::constant(BigRational::new(9.into(), 4.into())));
        let (prim, scale) = p.primitive_integer();
        assert_eq!(scale, BigRational::new((-3).into(), 4.into()));
        assert_eq!(prim, t.mul_scalar(&BigRational::from_integer(2.into())).sub(&Poly::from_int(3)));
        assert_eq!(prim.mul_scalar(&scale), p);
    }

    #[test]
    fn display_is_readable() {
        let t = coord("t");
        let xi = Poly::generator(Generator::Xi(0));
        let p = xi.sub(&t.mul(&Poly::generator(Generator::Xi(1))));
        assert_eq!(p.to_string(), "-t*xi' + xi");
    }
}
