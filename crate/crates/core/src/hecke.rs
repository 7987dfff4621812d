//! The generic Iwahori–Hecke algebra of type F4 with parameters `u` (on
//! `T_d`, `T_a`) and `v` (on `T_τ`, `T_τσ`), the representations built from
//! explicit matrices, and their generic degrees.
//!
//! Generators are indexed by the simple reflections under the fixed internal
//! identification `d = s1, a = s2, τ = s3, τσ = s4`.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{int, BiFrac, BiPoly, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::rootsys::{AmbientType, CartanType};
use crate::weylgrp::{Enumeration, GroupElement, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Param {
    U,
    V,
}

impl Param {
    pub fn poly(self) -> BiPoly {
        match self {
            Param::U => BiPoly::u(),
            Param::V => BiPoly::v(),
        }
    }
}

/// Parameter carried by `T_{s1}, ..., T_{s4}`.
pub const F4_PARAMS: [Param; 4] = [Param::U, Param::U, Param::V, Param::V];

/// Square matrix over [`BiPoly`], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<BiPoly>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<BiPoly>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, BiPoly::one())
    }

    pub fn scalar(n: usize, c: BiPoly) -> Self {
        let mut entries = vec![BiPoly::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = c.clone();
        }
        Self { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut entries = vec![BiPoly::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] = &entries[i * n + j] + &(a * b);
                    }
                }
            }
        }
        Self { n, entries }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BiPoly) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn trace(&self) -> BiPoly {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Vec<Vec<Rational>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        self.get(i, j)
                            .eval(u, v)
                            .expect("generator images are polynomial")
                    })
                    .collect()
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct HeckeRep {
    pub name: String,
    pub dim: usize,
    /// Images of `T_d, T_a, T_τ, T_τσ`.
    pub gen_images: Vec<PolyMatrix>,
}

fn m2(rows: [[BiPoly; 2]; 2]) -> PolyMatrix {
    PolyMatrix::from_rows(rows.into_iter().map(|r| r.to_vec()).collect())
}

/// The two-dimensional representation specialising to `2_1`.
pub fn rep_sigma() -> Result<HeckeRep> {
    let (u, v) = (BiPoly::u(), BiPoly::v());
    let (o, z, m) = (BiPoly::one(), BiPoly::zero(), -BiPoly::one());
    let rep = HeckeRep {
        name: "2_1".into(),
        dim: 2,
        gen_images: vec![
            m2([[u.clone(), z.clone()], [z.clone(), u.clone()]]),
            m2([[u.clone(), z.clone()], [z.clone(), u.clone()]]),
            m2([[m.clone(), o.clone()], [z.clone(), v.clone()]]),
            m2([[v.clone(), z.clone()], [v.clone(), m.clone()]]),
        ],
    };
    rep.check_relations()?;
    Ok(rep)
}

/// The two-dimensional representation specialising to `2_3`.
pub fn rep_sigma_prime() -> Result<HeckeRep> {
    let (u, v) = (BiPoly::u(), BiPoly::v());
    let (o, z, m) = (BiPoly::one(), BiPoly::zero(), -BiPoly::one());
    let rep = HeckeRep {
        name: "2_3".into(),
        dim: 2,
        gen_images: vec![
            m2([[u.clone(), z.clone()], [u.clone(), m.clone()]]),
            m2([[m.clone(), o.clone()], [z.clone(), u.clone()]]),
            m2([[v.clone(), z.clone()], [z.clone(), v.clone()]]),
            m2([[v.clone(), z.clone()], [z.clone(), v.clone()]]),
        ],
    };
    rep.check_relations()?;
    Ok(rep)
}

/// Scalar choice on a class of generators of a one-dimensional representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OneDimSign {
    /// The generator acts by its parameter (`u` or `v`).
    Param,
    MinusOne,
}

/// One-dimensional representations; `(Param, Param)` is `ind`.
pub fn rep_onedim(eps_u: OneDimSign, eps_v: OneDimSign) -> HeckeRep {
    let pick = |e: OneDimSign, p: Param| match e {
        OneDimSign::Param => p.poly(),
        OneDimSign::MinusOne => -BiPoly::one(),
    };
    let name = match (eps_u, eps_v) {
        (OneDimSign::Param, OneDimSign::Param) => "1_1",
        (OneDimSign::Param, OneDimSign::MinusOne) => "1_2",
        (OneDimSign::MinusOne, OneDimSign::Param) => "1_3",
        (OneDimSign::MinusOne, OneDimSign::MinusOne) => "1_4",
    };
    HeckeRep {
        name: name.into(),
        dim: 1,
        gen_images: F4_PARAMS
            .iter()
            .map(|&p| {
                let e = if p == Param::U { eps_u } else { eps_v };
                PolyMatrix::scalar(1, pick(e, p))
            })
            .collect(),
    }
}

pub fn rep_ind() -> HeckeRep {
    rep_onedim(OneDimSign::Param, OneDimSign::Param)
}

/// The six representations with explicit matrices.
pub fn all_reps() -> Result<Vec<HeckeRep>> {
    use OneDimSign::*;
    Ok(vec![
        rep_onedim(Param, Param),
        rep_onedim(Param, MinusOne),
        rep_onedim(MinusOne, Param),
        rep_onedim(MinusOne, MinusOne),
        rep_sigma()?,
        rep_sigma_prime()?,
    ])
}

pub fn rep_by_name(name: &str) -> Result<HeckeRep> {
    all_reps()?
        .into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| {
            Error::Parse(format!(
                "no explicit Hecke representation {name:?}; available: 1_1 1_2 1_3 1_4 2_1 2_3"
            ))
        })
}

impl HeckeRep {
    /// Quadratic relations `T² = p·T_1 + (p - 1)·T` and the F4 braid relations.
    pub fn check_relations(&self) -> Result<()> {
        let fail = |relation: String| Error::RelationFailure {
            rep: self.name.clone(),
            relation,
        };
        let id = PolyMatrix::identity(self.dim);
        for (i, (t, p)) in self.gen_images.iter().zip(F4_PARAMS).enumerate() {
            let p = p.poly();
            let rhs = id.scale(&p).add(&t.scale(&(&p - &BiPoly::one())));
            if t.mul(t) != rhs {
                return Err(fail(format!("quadratic relation for T_{}", i + 1)));
            }
        }
        let cox = AmbientType::new(CartanType::F4).coxeter_matrix();
        for i in 0..4 {
            for j in (i + 1)..4 {
                let m = cox[i][j];
                let alt = |a: usize, b: usize| {
                    (0..m).fold(id.clone(), |acc, k| {
                        acc.mul(&self.gen_images[if k % 2 == 0 { a } else { b }])
                    })
                };
                if alt(i, j) != alt(j, i) {
                    return Err(fail(format!(
                        "braid relation of length {m} for T_{}, T_{}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn image_of_word(&self, word: &[usize]) -> Result<PolyMatrix> {
        let mut m = PolyMatrix::identity(self.dim);
        for &i in word {
            if i == 0 || i > 4 {
                return Err(Error::InvalidIndex { index: i, rank: 4 });
            }
            m = m.mul(&self.gen_images[i - 1]);
        }
        Ok(m)
    }

    /// Character value of the specialisation at numeric `(u, v)` on a word.
    pub fn specialized_trace(
        &self,
        u: &Rational,
        v: &Rational,
        word: &[usize],
    ) -> Result<Rational> {
        let gens: Vec<Vec<Vec<Rational>>> = self.gen_images.iter().map(|g| g.eval(u, v)).collect();
        let mut m: Vec<Vec<Rational>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| int((i == j) as i64)).collect())
            .collect();
        for &i in word {
            if i == 0 || i > 4 {
                return Err(Error::InvalidIndex { index: i, rank: 4 });
            }
            m = crate::arith::mat_mul(&m, &gens[i - 1]);
        }
        Ok((0..self.dim).fold(Rational::zero(), |acc, i| acc + &m[i][i]))
    }
}

/// `trace(rep(T_w))`, evaluated along the reduced word carried by `w`.
pub fn char_on(rep: &HeckeRep, w: &GroupElement) -> Result<BiPoly> {
    Ok(rep.image_of_word(w.word()?)?.trace())
}

/// Exponents `(a, b)` with `ind(T_w) = u^a v^b`.
pub fn ind_exponents(word: &[usize]) -> (i32, i32) {
    let a = word
        .iter()
        .filter(|&&i| F4_PARAMS[i - 1] == Param::U)
        .count() as i32;
    (a, word.len() as i32 - a)
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericDegree {
    pub rep: String,
    pub value: BiFrac,
    /// `Σ ind(T_w)⁻¹ χ(T_w) χ(T_{w⁻¹})`.
    pub schur: BiPoly,
    /// `Σ ind(T_w)`.
    pub poincare: BiPoly,
}

/// Per-element traces of a representation over an enumerated W(F4).
pub fn traces(rep: &HeckeRep, en: &Enumeration) -> Result<Vec<BiPoly>> {
    let mut mats: Vec<PolyMatrix> = Vec::with_capacity(en.len());
    for k in 0..en.len() {
        let m = match en.parent(k) {
            None => PolyMatrix::identity(rep.dim),
            Some((p, letter)) => mats[p].mul(&rep.gen_images[letter - 1]),
        };
        mats.push(m);
    }
    Ok(mats.iter().map(PolyMatrix::trace).collect())
}

pub fn poincare(en: &Enumeration) -> BiPoly {
    let mut p = BiPoly::zero();
    for g in en.elements() {
        let (a, b) = ind_exponents(g.word.as_ref().expect("enumerated"));
        p.add_term((a, b), Rational::one());
    }
    p
}

/// `D = dim · Σ ind(T_w) / Σ ind(T_w)⁻¹ χ(T_w) χ(T_{w⁻¹})`.
pub fn generic_degree(
    rep: &HeckeRep,
    group: &WeylGroup,
    en: &Enumeration,
) -> Result<GenericDegree> {
    if group.cartan_type() != CartanType::F4 {
        return Err(Error::UnsupportedType(group.cartan_type().to_string()));
    }
    let tr = traces(rep, en)?;
    let mut schur = BiPoly::zero();
    for (k, g) in en.elements().iter().enumerate() {
        let inv = en.inverse_index(k);
        if tr[k] != tr[inv] {
            return Err(Error::RelationFailure {
                rep: rep.name.clone(),
                relation: format!("trace(T_w) != trace(T_w^-1) for w = {:?}", g.word),
            });
        }
        let (a, b) = ind_exponents(g.word.as_ref().expect("enumerated"));
        schur = schur + (&tr[k] * &tr[inv]).shift(-a, -b);
    }
    if schur.is_zero() {
        return Err(Error::ZeroSchurSum(rep.name.clone()));
    }
    let poincare = poincare(en);
    let value = BiFrac::new(poincare.scale(&int(rep.dim as i64)), schur.clone())?;
    Ok(GenericDegree {
        rep: rep.name.clone(),
        value,
        schur,
        poincare,
    })
}

/// Generic degree of one of the six explicit representations over the
/// shared W(F4) enumeration, computed once per process.
pub fn f4_generic_degree(name: &str) -> Result<GenericDegree> {
    static CACHE: OnceLock<Mutex<BTreeMap<String, GenericDegree>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(gd) = cache.lock().expect("cache").get(name) {
        return Ok(gd.clone());
    }
    let rep = rep_by_name(name)?;
    let g = crate::f4chars::F4Group::get();
    let gd = generic_degree(&rep, &g.group, &g.en)?;
    cache
        .lock()
        .expect("cache")
        .insert(name.to_string(), gd.clone());
    Ok(gd)
}

/// Lowest exponent of the generic degree at `u = v = q`.
pub fn a_invariant(gd: &GenericDegree) -> Result<i32> {
    Ok(gd.value.specialize(1, 1)?.lowest_term()?.1)
}

/// `q -> -q`, then the sign that makes the lowest term positive.
pub fn ennola(p: &UniPoly) -> Result<UniPoly> {
    let r = p.negate_variable();
    let (c, _) = r.lowest_term()?;
    Ok(if crate::arith::is_negative(&c) { -r } else { r })
}

/// The closed form printed for `D_{2_1}`:
/// `v³(v+1)(uv²+1)(u²v²+1)(u³v³+1) / ((u³+1)(u+v)(u²+v))`.
pub fn printed_d21() -> BiFrac {
    let m = BiPoly::unit_monomial;
    let one = BiPoly::one();
    let num = m(0, 3) * (m(0, 1) + &one) * (m(1, 2) + &one) * (m(2, 2) + &one) * (m(3, 3) + &one);
    let den = (m(3, 0) + &one) * (m(1, 0) + m(0, 1)) * (m(2, 0) + m(0, 1));
    BiFrac::new(num, den).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn sigma_traces() {
        let s = rep_sigma().unwrap();
        let two_u = BiPoly::u().scale(&int(2));
        assert_eq!(s.gen_images[0].trace(), two_u);
        assert_eq!(s.gen_images[1].trace(), two_u);
        let vm1 = BiPoly::v() - BiPoly::one();
        assert_eq!(s.gen_images[2].trace(), vm1);
        assert_eq!(s.gen_images[3].trace(), vm1);
    }

    #[test]
    fn sigma_prime_specialises_with_value_two_on_tau() {
        let s = rep_sigma_prime().unwrap();
        let one = int(1);
        assert_eq!(s.specialized_trace(&one, &one, &[3]).unwrap(), int(2));
        assert_eq!(s.specialized_trace(&one, &one, &[1]).unwrap(), int(0));
    }

    #[test]
    fn transcription_errors_are_caught() {
        let mut s = rep_sigma().unwrap();
        s.gen_images[3] = m2([
            [BiPoly::v(), BiPoly::zero()],
            [BiPoly::one(), -BiPoly::one()],
        ]);
        assert!(matches!(
            s.check_relations(),
            Err(Error::RelationFailure { .. })
        ));
    }

    #[test]
    fn one_dimensional_reps() {
        use OneDimSign::*;
        for r in all_reps().unwrap() {
            r.check_relations().unwrap();
        }
        let ind = rep_ind();
        let w = WeylGroup::new(CartanType::F4).unwrap();
        let g = w.from_word(&[1, 3]).unwrap();
        assert_eq!(char_on(&ind, &g).unwrap(), BiPoly::unit_monomial(1, 1));

        let one = int(1);
        let sgn = rep_onedim(MinusOne, MinusOne);
        assert_eq!(
            sgn.specialized_trace(&one, &one, &[1, 2, 3]).unwrap(),
            int(-1)
        );
        let r12 = rep_onedim(Param, MinusOne);
        assert_eq!(r12.specialized_trace(&one, &one, &[1]).unwrap(), int(1));
        assert_eq!(r12.specialized_trace(&one, &one, &[3]).unwrap(), int(-1));
    }

    #[test]
    fn char_on_is_word_independent() {
        let w = WeylGroup::new(CartanType::F4).unwrap();
        let s = rep_sigma().unwrap();
        let a = w.from_word(&[3, 4, 3]).unwrap();
        let b = w.from_word(&[4, 3, 4]).unwrap();
        assert_eq!(a, b);
        assert_eq!(char_on(&s, &a).unwrap(), char_on(&s, &b).unwrap());
        assert_eq!(char_on(&s, &w.identity()).unwrap(), BiPoly::from_int(2));
        let bare = GroupElement {
            perm: a.perm.clone(),
            word: None,
        };
        assert_eq!(char_on(&s, &bare).unwrap_err(), Error::MissingWord);
    }

    #[test]
    fn ind_is_multiplicative() {
        let ind = rep_ind();
        let word = [1, 2, 3, 2, 1, 4];
        let (a, b) = ind_exponents(&word);
        assert_eq!((a, b), (4, 2));
        assert_eq!(
            ind.image_of_word(&word).unwrap().trace(),
            BiPoly::unit_monomial(a, b)
        );
    }

    #[test]
    fn ennola_examples() {
        assert_eq!(
            ennola(&UniPoly::monomial(int(1), 3)).unwrap(),
            UniPoly::monomial(int(1), 3)
        );
        assert_eq!(
            ennola(&UniPoly::from_ints(&[0, 1, 1])).unwrap(),
            UniPoly::from_ints(&[0, 1, -1])
        );
        assert_eq!(
            ennola(&UniPoly::from_ints(&[1, 0, 1])).unwrap(),
            UniPoly::from_ints(&[1, 0, 1])
        );
        assert!(ennola(&UniPoly::zero()).is_err());
    }

    #[test]
    fn printed_form_at_one() {
        assert_eq!(printed_d21().eval(&int(1), &int(1)), Some(int(2)));
        assert_eq!(printed_d21().eval(&int(2), &int(2)), Some(int(1105)));
        assert!(printed_d21().eval(&rat(1, 2), &rat(1, 2)).is_some());
    }
}
