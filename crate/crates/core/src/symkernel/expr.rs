//! Differential expressions: reduced fractions of kernel polynomials.
//!
//! A `DiffExpr` is `num/den` with the pair kept coprime (up to the cosine
//! caveat in the gcd module), the denominator integer-primitive with a
//! positive leading coefficient, and zero stored as `0/1`. Zero testing is
//! therefore just a numerator check, and equality falls back to a
//! cross-multiplication zero test so it never depends on the gcd having
//! found every common factor.

use num::{BigInt, BigRational, One};
use std::collections::BTreeMap;
use std::fmt;

use super::gcd::{div_exact, poly_gcd};
use super::generator::Generator;
use super::poly::Poly;

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum KernelError {
    #[error("division by an expression that is identically zero")]
    DivisionByZero,
    #[error("closed form for xi may only involve t and symbolic constants, found `{0}`")]
    InvalidXiForm(String),
}

#[derive(Clone, Debug)]
pub struct DiffExpr {
    num: Poly,
    den: Poly,
}

impl DiffExpr {
    /// Build the reduced fraction `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<DiffExpr, KernelError> {
        if den.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(DiffExpr::zero());
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                div_exact(&num, &g).expect("gcd divides numerator"),
                div_exact(&den, &g).expect("gcd divides denominator"),
            )
        };
        Ok(Self::normalized(num, den))
    }

    /// Orient an already-coprime pair: integer-primitive denominator with
    /// positive leading coefficient.
    fn normalized(num: Poly, den: Poly) -> DiffExpr {
        if num.is_zero() {
            return DiffExpr::zero();
        }
        let (den_prim, scale) = den.primitive_integer();
        let num_scaled = num.mul_scalar(&scale.recip());
        DiffExpr { num: num_scaled, den: den_prim }
    }

    pub fn zero() -> DiffExpr {
        DiffExpr { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> DiffExpr {
        DiffExpr { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> DiffExpr {
        DiffExpr { num: p, den: Poly::one() }
    }

    pub fn from_int(n: i64) -> DiffExpr {
        DiffExpr::from_poly(Poly::from_int(n))
    }

    pub fn from_rational(q: BigRational) -> DiffExpr {
        DiffExpr::from_poly(Poly::constant(q))
    }

    pub fn rational(p: i64, q: i64) -> DiffExpr {
        assert!(q != 0, "rational literal with zero denominator");
        DiffExpr::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn generator(g: Generator) -> DiffExpr {
        DiffExpr::from_poly(Poly::generator(g))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Constant value if the expression involves no generators.
    pub fn as_constant(&self) -> Option<BigRational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn add(&self, other: &DiffExpr) -> DiffExpr {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            // Shared denominator: one gcd pass against the numerator sum.
            return DiffExpr::new(self.num.add(&other.num), self.den.clone())
                .expect("nonzero denominator");
        }
        let g = poly_gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            return DiffExpr::normalized(num, den);
        }
        let da = div_exact(&self.den, &g).expect("gcd divides");
        let db = div_exact(&other.den, &g).expect("gcd divides");
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        // Any common factor of the new pair divides g.
        let h = poly_gcd(&num, &g);
        if h.is_one() {
            DiffExpr::normalized(num, g.mul(&da).mul(&db))
        } else {
            let num = div_exact(&num, &h).expect("gcd divides");
            let g_red = div_exact(&g, &h).expect("gcd divides");
            DiffExpr::normalized(num, g_red.mul(&da).mul(&db))
        }
    }

    pub fn sub(&self, other: &DiffExpr) -> DiffExpr {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DiffExpr {
        DiffExpr { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &DiffExpr) -> DiffExpr {
        if self.is_zero() || other.is_zero() {
            return DiffExpr::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        // Cross-cancel before multiplying so factors stay small.
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let na = if g1.is_one() { self.num.clone() } else { div_exact(&self.num, &g1).expect("gcd divides") };
        let nb = if g2.is_one() { other.num.clone() } else { div_exact(&other.num, &g2).expect("gcd divides") };
        let da = if g2.is_one() { self.den.clone() } else { div_exact(&self.den, &g2).expect("gcd divides") };
        let db = if g1.is_one() { other.den.clone() } else { div_exact(&other.den, &g1).expect("gcd divides") };
        DiffExpr::normalized(na.mul(&nb), da.mul(&db))
    }

    pub fn mul_int(&self, k: i64) -> DiffExpr {
        self.mul(&DiffExpr::from_int(k))
    }

    pub fn mul_rational(&self, p: i64, q: i64) -> DiffExpr {
        self.mul(&DiffExpr::rational(p, q))
    }

    pub fn inverse(&self) -> Result<DiffExpr, KernelError> {
        if self.is_zero() {
            return Err(KernelError::DivisionByZero);
        }
        Ok(DiffExpr::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &DiffExpr) -> Result<DiffExpr, KernelError> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, e: i32) -> Result<DiffExpr, KernelError> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = DiffExpr::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Total derivative with respect to the coordinate named `coord`.
    /// Symbols that do not depend on the coordinate contribute nothing, so
    /// this is well defined for any name.
    pub fn derivative(&self, coord: &str) -> DiffExpr {
        let dn = self.num.derivative(coord);
        if self.den.is_one() {
            return DiffExpr::from_poly(dn);
        }
        let dd = self.den.derivative(coord);
        let num = dn.mul(&self.den).sub(&self.num.mul(&dd));
        let den = self.den.mul(&self.den);
        DiffExpr::new(num, den).expect("nonzero denominator")
    }

    /// Largest xi-tower order appearing anywhere in the fraction.
    pub fn max_xi_order(&self) -> Option<u32> {
        self.num.max_xi_order().max(self.den.max_xi_order())
    }

    /// All generators appearing in numerator or denominator.
    pub fn generators(&self) -> Vec<Generator> {
        let mut gens = self.num.generators();
        for g in self.den.generators() {
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        gens.sort();
        gens
    }

    /// Replace generators by expressions; generators mapped to `None` stay.
    pub fn substitute(
        &self,
        map: &dyn Fn(&Generator) -> Option<DiffExpr>,
    ) -> Result<DiffExpr, KernelError> {
        let num = subst_poly(&self.num, map);
        let den = subst_poly(&self.den, map);
        num.checked_div(&den)
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a DiffExpr>) -> DiffExpr {
        items
            .into_iter()
            .fold(DiffExpr::zero(), |acc, e| &acc + e)
    }
}

fn subst_poly(p: &Poly, map: &dyn Fn(&Generator) -> Option<DiffExpr>) -> DiffExpr {
    let mut out = DiffExpr::zero();
    for (mono, coeff) in p.terms() {
        let mut plain = Poly::constant(coeff.clone());
        let mut replaced = DiffExpr::one();
        let mut any = false;
        for (g, e) in mono.factors() {
            match map(g) {
                Some(v) => {
                    any = true;
                    replaced = &replaced * &v.pow(*e as i32).expect("nonnegative power");
                }
                None => {
                    plain = plain.mul(&Poly::term(
                        super::poly::Monomial::power(g.clone(), *e),
                        BigRational::one(),
                    ));
                }
            }
        }
        let term = if any {
            &DiffExpr::from_poly(plain) * &replaced
        } else {
            DiffExpr::from_poly(plain)
        };
        out = &out + &term;
    }
    out
}

/// Substitute a closed form for `xi` and its whole derivative tower. The
/// closed form may only involve the coordinate `t` and symbolic constants;
/// higher tower entries are obtained by differentiating it.
pub fn substitute_xi(expr: &DiffExpr, closed_form: &DiffExpr) -> Result<DiffExpr, KernelError> {
    for g in closed_form.generators() {
        match &g {
            Generator::Coord(name) if name.as_ref() == "t" => {}
            Generator::Const(_) => {}
            other => return Err(KernelError::InvalidXiForm(other.to_string())),
        }
    }
    let max_order = match expr.max_xi_order() {
        Some(k) => k,
        None => return Ok(expr.clone()),
    };
    let mut tower: Vec<DiffExpr> = Vec::with_capacity(max_order as usize + 1);
    tower.push(closed_form.clone());
    for k in 1..=max_order {
        let prev = tower[(k - 1) as usize].clone();
        tower.push(prev.derivative("t"));
    }
    expr.substitute(&move |g: &Generator| match g {
        Generator::Xi(k) => Some(tower[*k as usize].clone()),
        _ => None,
    })
}

impl PartialEq for DiffExpr {
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        // Equality of fractions does not depend on either side being fully
        // reduced: cross-multiply and compare in the polynomial ring.
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for DiffExpr {}

impl fmt::Display for DiffExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

// The operator impls use fully qualified trait paths on purpose: importing
// `std::ops::Mul` here would make `a.mul(&b)` resolve to the by-value trait
// method instead of the inherent `fn mul(&self, &DiffExpr)`.
macro_rules! impl_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl std::ops::$trait<&DiffExpr> for &DiffExpr {
            type Output = DiffExpr;
            fn $method(self, rhs: &DiffExpr) -> DiffExpr {
                DiffExpr::$imp(self, rhs)
            }
        }
        impl std::ops::$trait<DiffExpr> for DiffExpr {
            type Output = DiffExpr;
            fn $method(self, rhs: DiffExpr) -> DiffExpr {
                DiffExpr::$imp(&self, &rhs)
            }
        }
    };
}

impl_binop!(Add, add, add);
impl_binop!(Sub, sub, sub);
impl_binop!(Mul, mul, mul);

impl std::ops::Div<&DiffExpr> for &DiffExpr {
    type Output = DiffExpr;
    fn div(self, rhs: &DiffExpr) -> DiffExpr {
        self.checked_div(rhs).expect("division by zero expression")
    }
}

impl std::ops::Div<DiffExpr> for DiffExpr {
    type Output = DiffExpr;
    fn div(self, rhs: DiffExpr) -> DiffExpr {
        (&self).checked_div(&rhs).expect("division by zero expression")
    }
}

impl std::ops::Neg for &DiffExpr {
    type Output = DiffExpr;
    fn neg(self) -> DiffExpr {
        DiffExpr::neg(self)
    }
}

impl std::ops::Neg for DiffExpr {
    type Output = DiffExpr;
    fn neg(self) -> DiffExpr {
        DiffExpr::neg(&self)
    }
}

/// Render a mapping of named expressions deterministically (used by report
/// serialization).
pub fn render_map(items: &[(String, DiffExpr)]) -> BTreeMap<String, String> {
    items
        .iter()
        .map(|(k, v)| (k.clone(), v.to_string()))
        .collect()
}
