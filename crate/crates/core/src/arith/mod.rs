//! Exact arithmetic: rationals, bivariate Laurent polynomials in `u`, `v`,
//! univariate Laurent polynomials in `q`, fractions, and rational linear
//! algebra.
//!
//! Nothing here ever reduces a bivariate fraction. Equality of [`BiFrac`]
//! values is decided by cross-multiplication, and the only gcd computed is
//! the univariate one used after specialising to powers of `q`.

mod bipoly;
mod linear;
mod unipoly;

pub use bipoly::{BiFrac, BiPoly};
pub use linear::{char_poly, mat_mul, solve_linear};
pub use unipoly::{RatFunc, UniPoly};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n / d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Serialised form used in every JSON payload: always `"num/den"`.
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Short human form: `3`, `-1/2`.
pub fn display_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// `r^e` for a possibly negative exponent; `r` must be nonzero when `e < 0`.
pub(crate) fn rational_pow(r: &Rational, e: i32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= r;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// `serialize_with` helper emitting the `"num/den"` string form.
pub fn ser_rational<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

pub(crate) fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
