use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{fmt_rational, parse_rational, rational_pow, Rational};
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `q` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: BTreeMap<i32, Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn q() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, Rational)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Dense constructor from integer coefficients of `q^0, q^1, ...`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(e, &c)| (e as i32, super::int(c))),
        )
    }

    pub fn add_term(&mut self, e: i32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i32) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    /// The nonzero term of minimal exponent.
    pub fn lowest_term(&self) -> Result<(Rational, i32)> {
        self.coeffs
            .iter()
            .next()
            .map(|(e, c)| (c.clone(), *e))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn shift(&self, k: i32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `q -> -q`.
    pub fn negate_variable(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (*e, if e % 2 == 0 { c.clone() } else { -c.clone() }))
                .collect(),
        }
    }

    pub fn eval(&self, q: &Rational) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (&e, c) in &self.coeffs {
            if e < 0 && q.is_zero() {
                return None;
            }
            acc += c * rational_pow(q, e);
        }
        Some(acc)
    }

    /// True when every coefficient is a nonnegative integer and no exponent is negative.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(&e, c)| e >= 0 && c.is_integer() && !super::is_negative(c))
    }

    /// Division with remainder; both operands must be genuine polynomials.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let ld = divisor
            .leading_coeff()
            .ok_or(Error::ZeroPolynomial)?
            .clone();
        let dd = divisor.degree().unwrap_or(0);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.coeff(rd) / &ld;
            let t = Self::monomial(c, rd - dd);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok((quot, rem))
    }

    /// Monic gcd over the rationals (zero if both inputs vanish).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor checked nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&UniPoly> for &UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                self.$inner(rhs)
            }
        }
        impl $trait<UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let neg = super::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() || e == 0 {
                write!(f, "{}", super::display_rational(&abs))?;
                if e != 0 {
                    write!(f, "*")?;
                }
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<(i32, String)> = self
            .coeffs
            .iter()
            .map(|(e, c)| (*e, fmt_rational(c)))
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<(i32, String)> = Vec::deserialize(d)?;
        let mut p = UniPoly::zero();
        for (e, c) in rows {
            if p.coeffs.contains_key(&e) {
                return Err(D::Error::custom(format!("duplicate exponent {e}")));
            }
            p.add_term(e, parse_rational(&c).map_err(D::Error::custom)?);
        }
        Ok(p)
    }
}

/// A univariate rational function in lowest terms.
///
/// Normal form: the denominator is monic with nonzero constant term; every
/// power of `q` lives in the (Laurent) numerator. A zero numerator forces the
/// denominator to one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatFunc {
    pub num: UniPoly,
    pub den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DegenerateFraction);
        }
        if num.is_zero() {
            return Ok(Self {
                num,
                den: UniPoly::one(),
            });
        }
        let en = num.min_exp().unwrap_or(0);
        let ed = den.min_exp().unwrap_or(0);
        let n = num.shift(-en);
        let d = den.shift(-ed);
        let g = n.gcd(&d);
        let (n, r1) = n.div_rem(&g)?;
        let (d, r2) = d.div_rem(&g)?;
        debug_assert!(r1.is_zero() && r2.is_zero());
        let lc = d.coeff(d.degree().unwrap_or(0));
        let inv = lc.recip();
        Ok(Self {
            num: n.scale(&inv).shift(en - ed),
            den: d.scale(&inv),
        })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self {
            num: p,
            den: UniPoly::one(),
        }
    }

    /// `Some` when the denominator reduced to a unit, i.e. the value is a
    /// Laurent polynomial.
    pub fn as_poly(&self) -> Option<UniPoly> {
        (self.den == UniPoly::one()).then(|| self.num.clone())
    }

    /// Leading term of the expansion around `q = 0`.
    pub fn lowest_term(&self) -> Result<(Rational, i32)> {
        let (cn, en) = self.num.lowest_term()?;
        let (cd, ed) = self.den.lowest_term()?;
        Ok((cn / cd, en - ed))
    }

    pub fn eval(&self, q: &Rational) -> Option<Rational> {
        let d = self.den.eval(q)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(q)? / d)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::from_poly(UniPoly::zero());
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({}) / ({})", self.num, self.den),
        }
    }
}
