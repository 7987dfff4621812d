//! The 25 irreducible characters of W(F4), built from the reflection
//! representation, the two Hecke representations specialised at `u = v = 1`,
//! and tensor operations.

use std::sync::OnceLock;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{char_poly, int, mat_mul, RatFunc, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::hecke::{rep_onedim, rep_sigma, rep_sigma_prime, OneDimSign};
use crate::labels::{row_by_kondo, CarterLabel, KondoLabel};
use crate::rootsys::CartanType;
use crate::weylgrp::{conjugacy_classes, ClassData, Enumeration, WeylGroup, Word};

/// Values indexed by conjugacy class.
pub type ClassFunction = Vec<i64>;

/// W(F4) with its enumeration and classes, built once.
pub struct F4Group {
    pub group: WeylGroup,
    pub en: Enumeration,
    pub classes: ClassData,
    molien: Vec<RatFunc>,
}

static F4: OnceLock<F4Group> = OnceLock::new();

impl F4Group {
    pub fn get() -> &'static F4Group {
        F4.get_or_init(|| Self::build().expect("W(F4) construction"))
    }

    fn build() -> Result<Self> {
        let group = WeylGroup::new(CartanType::F4)?;
        let en = group.enumerate()?;
        let classes = conjugacy_classes(&group, &en)?;
        let molien = molien_terms(&group, &en, &classes)?;
        Ok(Self {
            group,
            en,
            classes,
            molien,
        })
    }

    pub fn order(&self) -> usize {
        self.en.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of_word(&self, word: &[usize]) -> Result<usize> {
        let g = self.group.from_word(word)?;
        let k = self.en.index_of(&g).expect("enumeration is complete");
        Ok(self.classes.class_of_element(k))
    }

    pub fn identity_class(&self) -> usize {
        self.classes
            .class_of_element(self.en.index_of(&self.group.identity()).unwrap())
    }

    /// Classes of `d` (= s1), `τ` (= s3) and `aτ` (= s2 s3), the three
    /// columns printed next to the labels.
    pub fn table_columns(&self) -> [usize; 3] {
        [
            self.class_of_word(&[1]).unwrap(),
            self.class_of_word(&[3]).unwrap(),
            self.class_of_word(&[2, 3]).unwrap(),
        ]
    }

    pub fn rep(&self, c: usize) -> &Word {
        &self.classes.reps[c]
    }

    fn on_reps(&self, f: impl Fn(&Word) -> Result<i64>) -> Result<ClassFunction> {
        self.classes.reps.iter().map(f).collect()
    }

    /// The image of a class under the diagram flip `s_i ↦ s_{5-i}`.
    pub fn flip_class(&self, c: usize) -> usize {
        let w: Word = self.rep(c).iter().map(|&i| 5 - i).collect();
        self.class_of_word(&w).unwrap()
    }
}

/// `Π(1 - q^{d_i}) / det(1 - q ρ(w))` per class, checked constant on each class.
fn molien_terms(group: &WeylGroup, en: &Enumeration, classes: &ClassData) -> Result<Vec<RatFunc>> {
    let mut top = UniPoly::one();
    for d in CartanType::F4.invariant_degrees() {
        top = &top * &(&UniPoly::one() - &UniPoly::monomial(Rational::one(), d as i32));
    }
    let det_of = |k: usize| -> UniPoly {
        let m = to_rational_matrix(&group.matrix(en.element(k)));
        let cp = char_poly(&m);
        let n = cp.len() - 1;
        UniPoly::from_terms(cp.into_iter().enumerate().map(|(k, c)| ((n - k) as i32, c)))
    };
    let mut out = Vec::with_capacity(classes.len());
    for members in &classes.classes {
        let det = det_of(members[0]);
        if members.iter().any(|&k| det_of(k) != det) {
            return Err(Error::MolienViolated(
                "det(1 - qw) not a class function".into(),
            ));
        }
        out.push(RatFunc::new(top.clone(), det)?);
    }
    Ok(out)
}

fn to_rational_matrix(m: &[Vec<i32>]) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|r| r.iter().map(|&x| int(x as i64)).collect())
        .collect()
}

/// The reflection representation on simple-root coordinates.
#[derive(Clone, Debug)]
pub struct ReflectionRep {
    pub matrices: Vec<Vec<Vec<Rational>>>,
}

impl ReflectionRep {
    pub fn new(g: &F4Group) -> Result<Self> {
        let matrices = (1..=4)
            .map(|i| Ok(to_rational_matrix(&g.group.matrix(&g.group.simple(i)?))))
            .collect::<Result<Vec<_>>>()?;
        let rep = Self { matrices };
        rep.check()?;
        Ok(rep)
    }

    /// Order 2, determinant −1, and `(s_i s_j)^{m_ij} = 1`.
    pub fn check(&self) -> Result<()> {
        let id = identity(4);
        let m = CartanType::F4;
        let cox = crate::rootsys::AmbientType::new(m).coxeter_matrix();
        for (i, a) in self.matrices.iter().enumerate() {
            // det(x - A) at x = 0 is det(A) in even rank
            if char_poly(a)[0] != int(-1) {
                return Err(Error::RecipeBroken(format!("det s{} != -1", i + 1)));
            }
            for (j, b) in self.matrices.iter().enumerate() {
                let ab = mat_mul(a, b);
                let mut p = id.clone();
                for _ in 0..cox[i][j] {
                    p = mat_mul(&p, &ab);
                }
                if p != id {
                    return Err(Error::RecipeBroken(format!(
                        "(s{} s{})^{} != 1",
                        i + 1,
                        j + 1,
                        cox[i][j]
                    )));
                }
            }
        }
        Ok(())
    }
}

fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterRecord {
    pub kondo: KondoLabel,
    pub carter: CarterLabel,
    pub alias: String,
    /// How the character was produced from the ones before it.
    pub construction: String,
    pub values: ClassFunction,
    pub degree: i64,
    pub b_invariant: i32,
    pub a_value: u32,
    pub fake_degree: UniPoly,
}

pub fn inner_product(g: &F4Group, x: &[i64], y: &[i64]) -> Rational {
    let s: i64 = g
        .classes
        .sizes
        .iter()
        .zip(x.iter().zip(y))
        .map(|(&n, (a, b))| n as i64 * a * b)
        .sum();
    Rational::new(s.into(), (g.order() as i64).into())
}

pub fn tensor(x: &[i64], y: &[i64]) -> ClassFunction {
    x.iter().zip(y).map(|(a, b)| a * b).collect()
}

fn sub(x: &[i64], y: &[i64]) -> ClassFunction {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn half_power(g: &F4Group, x: &[i64], sign: i64) -> ClassFunction {
    (0..x.len())
        .map(|c| {
            let t = x[c] * x[c] + sign * x[g.classes.power_map[c]];
            debug_assert!(t % 2 == 0);
            t / 2
        })
        .collect()
}

pub fn sym2(g: &F4Group, x: &[i64]) -> ClassFunction {
    half_power(g, x, 1)
}

pub fn lambda2(g: &F4Group, x: &[i64]) -> ClassFunction {
    half_power(g, x, -1)
}

/// `R_x(q) = Π(1 - q^{d_i}) · |W|⁻¹ Σ_w x(w) / det(1 - q ρ(w))`.
pub fn fake_degree(g: &F4Group, x: &[i64]) -> Result<UniPoly> {
    let mut acc = RatFunc::from_poly(UniPoly::zero());
    for (c, term) in g.molien.iter().enumerate() {
        let w = Rational::new(
            (x[c] * g.classes.sizes[c] as i64).into(),
            (g.order() as i64).into(),
        );
        acc = acc.add(&term.scale(&w))?;
    }
    let p = acc
        .as_poly()
        .ok_or_else(|| Error::MolienViolated(format!("non-polynomial sum {acc}")))?;
    if !p.is_nonnegative_integral() {
        return Err(Error::MolienViolated(format!("coefficients of {p}")));
    }
    Ok(p)
}

fn specialised(g: &F4Group, rep: &crate::hecke::HeckeRep) -> Result<ClassFunction> {
    let one = Rational::one();
    g.on_reps(|w| {
        let t = rep.specialized_trace(&one, &one, w)?;
        if !t.is_integer() {
            return Err(Error::RecipeBroken(format!(
                "{} has non-integral value",
                rep.name
            )));
        }
        Ok(t.to_integer().to_i64().expect("small"))
    })
}

/// The construction recipe: label, how it was built, values.
pub fn construct(g: &F4Group) -> Result<Vec<(KondoLabel, String, ClassFunction)>> {
    let k = KondoLabel::new;
    let mut out: Vec<(KondoLabel, String, ClassFunction)> = Vec::new();
    let get = |out: &[(KondoLabel, String, ClassFunction)], l: KondoLabel| -> ClassFunction {
        out.iter()
            .find(|e| e.0 == l)
            .expect("built earlier")
            .2
            .clone()
    };
    let push = |out: &mut Vec<_>, l: KondoLabel, how: &str, v: ClassFunction| {
        out.push((l, how.to_string(), v));
    };

    let trivial = vec![1; g.num_classes()];
    let sign = g.on_reps(|w| Ok(if w.len() % 2 == 0 { 1 } else { -1 }))?;
    let one2 = g.on_reps(|w| {
        let n = w.iter().filter(|&&i| i >= 3).count();
        Ok(if n % 2 == 0 { 1 } else { -1 })
    })?;
    let hecke12 = specialised(g, &rep_onedim(OneDimSign::Param, OneDimSign::MinusOne))?;
    if hecke12 != one2 {
        return Err(Error::RecipeBroken(
            "1_2 differs from the specialised Hecke character".into(),
        ));
    }
    push(&mut out, k(1, 1), "trivial", trivial);
    push(&mut out, k(1, 2), "-1 on s3, s4", one2.clone());
    push(&mut out, k(1, 3), "1_2 ⊗ sign", tensor(&one2, &sign));
    push(&mut out, k(1, 4), "sign", sign.clone());

    let refl = ReflectionRep::new(g)?;
    let four2 = g.on_reps(|w| {
        let mut m = identity(4);
        for &i in w {
            m = mat_mul(&m, &refl.matrices[i - 1]);
        }
        let t = (0..4).fold(Rational::zero(), |a, i| a + &m[i][i]);
        Ok(t.to_integer().to_i64().expect("small"))
    })?;
    let one3 = get(&out, k(1, 3));
    push(
        &mut out,
        k(4, 2),
        "reflection representation",
        four2.clone(),
    );
    push(&mut out, k(4, 5), "4_2 ⊗ sign", tensor(&four2, &sign));
    push(&mut out, k(4, 3), "4_2 ⊗ 1_2", tensor(&four2, &one2));
    push(&mut out, k(4, 4), "4_2 ⊗ 1_3", tensor(&four2, &one3));

    let two1 = specialised(g, &rep_sigma()?)?;
    let two3 = specialised(g, &rep_sigma_prime()?)?;
    push(&mut out, k(2, 1), "σ at u = v = 1", two1.clone());
    push(&mut out, k(2, 3), "σ′ at u = v = 1", two3.clone());
    push(&mut out, k(2, 2), "2_1 ⊗ sign", tensor(&two1, &sign));
    push(&mut out, k(2, 4), "2_3 ⊗ sign", tensor(&two3, &sign));
    let four1 = tensor(&two1, &two3);
    push(&mut out, k(4, 1), "2_1 ⊗ 2_3", four1.clone());

    let nine1 = sub(&sym2(g, &four2), &get(&out, k(1, 1)));
    push(&mut out, k(9, 1), "Sym²(4_2) - 1_1", nine1.clone());
    push(&mut out, k(9, 4), "9_1 ⊗ sign", tensor(&nine1, &sign));
    push(&mut out, k(9, 2), "9_1 ⊗ 1_2", tensor(&nine1, &one2));
    push(&mut out, k(9, 3), "9_1 ⊗ 1_3", tensor(&nine1, &one3));

    let eight1 = tensor(&four2, &two1);
    let eight3 = tensor(&four2, &two3);
    push(&mut out, k(8, 1), "4_2 ⊗ 2_1", eight1.clone());
    push(&mut out, k(8, 2), "8_1 ⊗ sign", tensor(&eight1, &sign));
    push(&mut out, k(8, 3), "4_2 ⊗ 2_3", eight3.clone());
    push(&mut out, k(8, 4), "8_3 ⊗ sign", tensor(&eight3, &sign));

    let six2 = lambda2(g, &four2);
    let six1 = tensor(&six2, &one2);
    if six1 != tensor(&six2, &one3) {
        return Err(Error::RecipeBroken("6_2 ⊗ 1_2 != 6_2 ⊗ 1_3".into()));
    }
    push(&mut out, k(6, 2), "Λ²(4_2)", six2);
    push(&mut out, k(6, 1), "6_2 ⊗ 1_2", six1.clone());
    push(&mut out, k(16, 1), "4_1 ⊗ 4_2", tensor(&four1, &four2));
    push(&mut out, k(12, 1), "6_1 ⊗ 2_1", tensor(&six1, &two1));

    for (l, _, v) in &out {
        if inner_product(g, v, v) != Rational::one() {
            return Err(Error::RecipeBroken(format!("<{l}, {l}> != 1")));
        }
    }
    for (i, a) in out.iter().enumerate() {
        for b in &out[i + 1..] {
            if a.2 == b.2 {
                return Err(Error::RecipeBroken(format!("{} = {}", a.0, b.0)));
            }
        }
    }
    Ok(out)
}

/// All 25 characters, in the order of the label table.
pub fn build_all() -> Result<Vec<CharacterRecord>> {
    static CACHE: OnceLock<std::result::Result<Vec<CharacterRecord>, Error>> = OnceLock::new();
    CACHE.get_or_init(build_uncached).clone()
}

fn build_uncached() -> Result<Vec<CharacterRecord>> {
    let g = F4Group::get();
    let id = g.identity_class();
    let mut built = construct(g)?;
    let mut out = Vec::with_capacity(25);
    for row in crate::labels::TABLE1 {
        let pos = built
            .iter()
            .position(|e| e.0 == row.kondo)
            .ok_or_else(|| Error::RecipeBroken(format!("{} not constructed", row.kondo)))?;
        let (kondo, construction, values) = built.swap_remove(pos);
        let fake = fake_degree(g, &values)?;
        let b = fake.min_exp().unwrap_or(0);
        let row = row_by_kondo(kondo).expect("label row");
        out.push(CharacterRecord {
            kondo,
            carter: row.carter,
            alias: kondo.alias(),
            construction,
            degree: values[id],
            b_invariant: b,
            a_value: row.a_value,
            fake_degree: fake,
            values,
        });
    }
    Ok(out)
}

pub fn record(k: KondoLabel) -> Result<CharacterRecord> {
    build_all()?
        .into_iter()
        .find(|r| r.kondo == k)
        .ok_or_else(|| Error::Parse(format!("no character {k}")))
}

/// Values on the classes of `d`, `τ`, `aτ`.
pub fn columns(g: &F4Group, values: &[i64]) -> [i64; 3] {
    g.table_columns().map(|c| values[c])
}

/// Row and column orthogonality of the full table.
pub fn check_orthogonality(g: &F4Group, chars: &[CharacterRecord]) -> Result<()> {
    for (i, a) in chars.iter().enumerate() {
        for (j, b) in chars.iter().enumerate() {
            let ip = inner_product(g, &a.values, &b.values);
            let want = if i == j {
                Rational::one()
            } else {
                Rational::zero()
            };
            if ip != want {
                return Err(Error::RecipeBroken(format!(
                    "<{}, {}> = {ip}",
                    a.kondo, b.kondo
                )));
            }
        }
    }
    let n = g.num_classes();
    for c in 0..n {
        for d in 0..n {
            let s: i64 = chars.iter().map(|x| x.values[c] * x.values[d]).sum();
            let want = if c == d {
                (g.order() / g.classes.sizes[c]) as i64
            } else {
                0
            };
            if s != want {
                return Err(Error::RecipeBroken(format!(
                    "column {c} · column {d} = {s}"
                )));
            }
        }
    }
    Ok(())
}

/// `Σ χ(1) R_χ(q) = Π (1 + q + … + q^{d_i - 1})`.
pub fn graded_regular_identity(chars: &[CharacterRecord]) -> bool {
    let lhs = chars.iter().fold(UniPoly::zero(), |acc, c| {
        &acc + &c.fake_degree.scale(&int(c.degree))
    });
    let mut rhs = UniPoly::one();
    for d in CartanType::F4.invariant_degrees() {
        rhs = &rhs * &UniPoly::from_ints(&vec![1; d as usize]);
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labels::TABLE1;

    fn chars() -> Vec<CharacterRecord> {
        build_all().unwrap()
    }

    #[test]
    fn twenty_five_characters_square_sum() {
        let c = chars();
        assert_eq!(c.len(), 25);
        assert_eq!(c.iter().map(|x| x.degree * x.degree).sum::<i64>(), 1152);
    }

    #[test]
    fn orthogonality() {
        check_orthogonality(F4Group::get(), &chars()).unwrap();
    }

    #[test]
    fn table_columns_and_carter_subscripts() {
        let g = F4Group::get();
        for (rec, row) in chars().iter().zip(TABLE1) {
            assert_eq!(rec.kondo, row.kondo);
            assert_eq!(
                columns(g, &rec.values),
                [row.val_da, row.val_tt, row.val_at],
                "{}",
                rec.kondo
            );
            assert_eq!(rec.degree as u32, row.carter.degree);
            assert_eq!(rec.b_invariant as u32, row.carter.b, "{}", rec.kondo);
        }
    }

    #[test]
    fn inner_product_examples() {
        let g = F4Group::get();
        let one = record(KondoLabel::new(1, 1)).unwrap().values;
        let four = record(KondoLabel::new(4, 2)).unwrap().values;
        let nine = record(KondoLabel::new(9, 1)).unwrap().values;
        assert_eq!(inner_product(g, &one, &one), Rational::one());
        assert_eq!(inner_product(g, &four, &nine), Rational::zero());
        assert_eq!(
            inner_product(g, &tensor(&four, &four), &one),
            Rational::one()
        );
        assert_eq!(sym2(g, &one), one);
    }

    #[test]
    fn fake_degree_examples() {
        let g = F4Group::get();
        let r = fake_degree(g, &record(KondoLabel::new(4, 2)).unwrap().values).unwrap();
        assert_eq!(
            r,
            UniPoly::from_terms([1, 5, 7, 11].map(|e| (e, Rational::one())))
        );
        let one = fake_degree(g, &[1; 25]).unwrap();
        assert_eq!(one, UniPoly::one());
        assert_eq!(record(KondoLabel::new(1, 4)).unwrap().b_invariant, 24);
    }

    #[test]
    fn fake_degrees_at_one_and_regular_identity() {
        let c = chars();
        for x in &c {
            assert_eq!(x.fake_degree.eval(&Rational::one()).unwrap(), int(x.degree));
        }
        assert!(graded_regular_identity(&c));
    }

    #[test]
    fn recipe_examples() {
        let g = F4Group::get();
        let [d, t, at] = g.table_columns();
        assert_eq!(record(KondoLabel::new(9, 1)).unwrap().values[d], 3);
        assert_eq!(record(KondoLabel::new(1, 2)).unwrap().values[t], -1);
        assert_eq!(record(KondoLabel::new(16, 1)).unwrap().values[at], 0);
    }

    #[test]
    fn reflection_rep_presentation() {
        let r = ReflectionRep::new(F4Group::get()).unwrap();
        assert_eq!(r.matrices.len(), 4);
    }
}
