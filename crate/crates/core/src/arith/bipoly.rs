use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{fmt_rational, parse_rational, rational_pow, RatFunc, Rational, UniPoly};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in the commuting indeterminates `u`, `v` with
/// rational coefficients. Keys are `(e_u, e_v)`; zero coefficients are never
/// stored, so two polynomials are equal iff their term tables are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(i32, i32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(super::int(c))
    }

    pub fn monomial(c: Rational, eu: i32, ev: i32) -> Self {
        let mut p = Self::zero();
        p.add_term((eu, ev), c);
        p
    }

    /// The monomial `u^eu v^ev` with coefficient one.
    pub fn unit_monomial(eu: i32, ev: i32) -> Self {
        Self::monomial(Rational::one(), eu, ev)
    }

    pub fn u() -> Self {
        Self::unit_monomial(1, 0)
    }

    pub fn v() -> Self {
        Self::unit_monomial(0, 1)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i32, i32), Rational)>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, eu: i32, ev: i32) -> Rational {
        self.terms
            .get(&(eu, ev))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, key: (i32, i32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    /// Multiplies by `u^eu v^ev`.
    pub fn shift(&self, eu: i32, ev: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + eu, b + ev), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exchanges the roles of `u` and `v`.
    pub fn swap_uv(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum of the exponents, `(0, 0)` for the zero polynomial.
    pub fn min_exponents(&self) -> (i32, i32) {
        let eu = self.terms.keys().map(|k| k.0).min().unwrap_or(0);
        let ev = self.terms.keys().map(|k| k.1).min().unwrap_or(0);
        (eu, ev)
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        let (a, b) = self.min_exponents();
        a >= 0 && b >= 0
    }

    /// Substitutes `u = q^a`, `v = q^b`.
    pub fn substitute(&self, a: i32, b: i32) -> UniPoly {
        UniPoly::from_terms(
            self.terms
                .iter()
                .map(|(&(eu, ev), c)| (eu * a + ev * b, c.clone())),
        )
    }

    /// Evaluates at rational points; `None` when a negative power of zero
    /// would be needed.
    pub fn eval(&self, u: &Rational, v: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (&(eu, ev), c) in &self.terms {
            if (eu < 0 && u.is_zero()) || (ev < 0 && v.is_zero()) {
                return None;
            }
            acc += c * rational_pow(u, eu) * rational_pow(v, ev);
        }
        Some(acc)
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                self.$inner(rhs)
            }
        }
        impl $trait<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$inner(&rhs)
            }
        }
        impl $trait<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                (&self).$inner(rhs)
            }
        }
        impl $trait<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> Self {
        iter.fold(BiPoly::zero(), |acc, p| acc + p)
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, var: &str, e: i32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending keys: higher powers of u first
        for (i, (&(eu, ev), c)) in self.terms.iter().rev().enumerate() {
            let neg = super::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let bare = eu == 0 && ev == 0;
            if !abs.is_one() || bare {
                write!(f, "{}", super::display_rational(&abs))?;
                if !bare {
                    write!(f, "*")?;
                }
            }
            fmt_power(f, "u", eu)?;
            if eu != 0 && ev != 0 {
                write!(f, "*")?;
            }
            fmt_power(f, "v", ev)?;
        }
        Ok(())
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<(i32, i32, String)> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| (a, b, fmt_rational(c)))
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<(i32, i32, String)> = Vec::deserialize(d)?;
        let mut p = BiPoly::zero();
        for (a, b, c) in rows {
            let c = parse_rational(&c).map_err(D::Error::custom)?;
            if p.terms.contains_key(&(a, b)) {
                return Err(D::Error::custom(format!("duplicate term ({a}, {b})")));
            }
            p.add_term((a, b), c);
        }
        Ok(p)
    }
}

/// An unreduced fraction of two [`BiPoly`] values.
#[derive(Clone, Debug, Serialize)]
pub struct BiFrac {
    pub num: BiPoly,
    pub den: BiPoly,
}

impl BiFrac {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DegenerateFraction);
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: BiPoly) -> Self {
        Self {
            num: p,
            den: BiPoly::one(),
        }
    }

    /// `a == b` as rational functions, decided by `a.num * b.den == b.num * a.den`.
    pub fn frac_eq(a: &BiFrac, b: &BiFrac) -> Result<bool> {
        if a.den.is_zero() || b.den.is_zero() {
            return Err(Error::DegenerateFraction);
        }
        Ok(&a.num * &b.den == &b.num * &a.den)
    }

    pub fn swap_uv(&self) -> Self {
        Self {
            num: self.num.swap_uv(),
            den: self.den.swap_uv(),
        }
    }

    pub fn mul(&self, other: &BiFrac) -> Self {
        Self {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    /// Substitutes `u = q^a`, `v = q^b` and reduces by the univariate gcd.
    pub fn specialize(&self, a: i32, b: i32) -> Result<RatFunc> {
        let num = self.num.substitute(a, b);
        let den = self.den.substitute(a, b);
        if den.is_zero() {
            return Err(Error::VanishingDenominator(a, b));
        }
        RatFunc::new(num, den)
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Option<Rational> {
        let d = self.den.eval(u, v)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(u, v)? / d)
    }
}

impl fmt::Display for BiFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
