mod common;

use common::{q, qi, Q};
use f4label::arith::{BiFrac, BiPoly, UniPoly};
use f4label::f4chars::{build_all, F4Group};
use f4label::hecke::{
    a_invariant, all_reps, f4_generic_degree, printed_d21, rep_by_name, HeckeRep,
};
use f4label::labels::KondoLabel;
use num_traits::{One, Zero};
use proptest::prelude::*;

type M = Vec<Vec<Q>>;

fn mul(a: &M, b: &M) -> M {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Q::zero(), |s, k| s + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

fn ident(n: usize) -> M {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect()
}

fn tr(a: &M) -> Q {
    (0..a.len()).fold(Q::zero(), |s, i| s + &a[i][i])
}

fn numeric_gens(rep: &HeckeRep, u: &Q, v: &Q) -> Vec<M> {
    rep.gen_images.iter().map(|g| g.eval(u, v)).collect()
}

/// Generic degree at a numeric point, from the definition: every element
/// via its reduced word, traces of numeric matrices, no polynomial algebra.
fn numeric_generic_degree(rep: &HeckeRep, u: &Q, v: &Q) -> Q {
    let g = F4Group::get();
    let gens = numeric_gens(rep, u, v);
    let params = [u, u, v, v];
    let mut schur = Q::zero();
    let mut poincare = Q::zero();
    for w in g.en.elements() {
        let word = w.word.as_ref().unwrap();
        let mut m = ident(rep.dim);
        let mut mi = ident(rep.dim);
        let mut ind = Q::one();
        for &i in word {
            m = mul(&m, &gens[i - 1]);
            ind *= params[i - 1];
        }
        for &i in word.iter().rev() {
            mi = mul(&mi, &gens[i - 1]);
        }
        poincare += &ind;
        schur += tr(&m) * tr(&mi) / &ind;
    }
    qi(rep.dim as i64) * poincare / schur
}

fn uni(coeffs: &[(i32, i64)]) -> UniPoly {
    UniPoly::from_terms(coeffs.iter().map(|&(e, c)| (e, qi(c))))
}

#[test]
fn generic_degrees_agree_with_numeric_definition() {
    let points = [(qi(2), qi(3)), (q(1, 2), qi(5)), (qi(3), q(2, 7))];
    for rep in all_reps().unwrap() {
        let gd = f4_generic_degree(&rep.name).unwrap();
        for (u, v) in &points {
            assert_eq!(
                gd.value.eval(u, v).unwrap(),
                numeric_generic_degree(&rep, u, v),
                "{} at ({u}, {v})",
                rep.name
            );
        }
    }
}

#[test]
fn printed_closed_form_and_exchange() {
    let s = f4_generic_degree("2_1").unwrap();
    let sp = f4_generic_degree("2_3").unwrap();
    assert!(BiFrac::frac_eq(&s.value, &printed_d21()).unwrap());
    assert!(BiFrac::frac_eq(&sp.value, &s.value.swap_uv()).unwrap());
    let ind = f4_generic_degree("1_1").unwrap();
    assert!(BiFrac::frac_eq(&ind.value, &BiFrac::from_poly(BiPoly::one())).unwrap());
    let steinberg = f4_generic_degree("1_4").unwrap();
    let st = BiFrac::from_poly(BiPoly::unit_monomial(12, 12));
    assert!(BiFrac::frac_eq(&steinberg.value, &st).unwrap());
}

#[test]
fn a_invariants() {
    for (name, a) in [
        ("1_1", 0),
        ("1_2", 4),
        ("1_3", 4),
        ("1_4", 24),
        ("2_1", 1),
        ("2_3", 1),
    ] {
        assert_eq!(
            a_invariant(&f4_generic_degree(name).unwrap()).unwrap(),
            a,
            "{name}"
        );
    }
}

#[test]
fn equal_parameter_factorisations() {
    // D_σ(q, q) = ½ q (q⁴ + 1)(q⁶ + 1)
    let s = f4_generic_degree("2_1")
        .unwrap()
        .value
        .specialize(1, 1)
        .unwrap();
    let want = (&uni(&[(1, 1)]) * &uni(&[(0, 1), (4, 1)])) * uni(&[(0, 1), (6, 1)]);
    assert_eq!(s.as_poly().unwrap(), want.scale(&q(1, 2)));
    assert_eq!(s.eval(&qi(2)).unwrap(), qi(1105));
    // D_σ′(q, q²) = q (q⁴ + 1)(q⁶ - q³ + 1)
    let s = f4_generic_degree("2_3")
        .unwrap()
        .value
        .specialize(1, 2)
        .unwrap();
    let want = (&uni(&[(1, 1)]) * &uni(&[(0, 1), (4, 1)])) * uni(&[(0, 1), (3, -1), (6, 1)]);
    assert_eq!(s.as_poly().unwrap(), want);
}

#[test]
fn lowest_terms_of_specialisations() {
    let s = f4_generic_degree("2_1").unwrap().value;
    let sp = f4_generic_degree("2_3").unwrap().value;
    assert_eq!(
        s.specialize(1, 2).unwrap().lowest_term().unwrap(),
        (q(1, 2), 3)
    );
    let (c1, e1) = s.specialize(1, 4).unwrap().lowest_term().unwrap();
    let (c2, e2) = sp.specialize(1, 4).unwrap().lowest_term().unwrap();
    assert_eq!(e1 - e2, 8);
    assert_eq!((c1, e1, c2, e2), (qi(1), 9, qi(1), 1));
}

#[test]
fn lowest_terms_seen_numerically() {
    // at q = 10⁻⁴ the ratio D / (c qᵉ) is within 10⁻³ of 1
    let t = q(1, 10_000);
    let tol = q(1, 1000);
    for (name, (a, b), c, e) in [
        ("2_1", (1, 2), q(1, 2), 3),
        ("2_3", (1, 2), qi(1), 1),
        ("2_1", (1, 4), qi(1), 9),
        ("2_3", (1, 4), qi(1), 1),
    ] {
        let rep = rep_by_name(name).unwrap();
        let u = num_traits::pow(t.clone(), a);
        let v = num_traits::pow(t.clone(), b);
        let d = numeric_generic_degree(&rep, &u, &v);
        let ratio = d / (c * num_traits::pow(t.clone(), e));
        let dev = ratio - Q::one();
        assert!(dev < tol && -dev < tol, "{name} at (q^{a}, q^{b})");
    }
}

#[test]
fn traces_of_sigma_on_generators() {
    let s = rep_by_name("2_1").unwrap();
    let u = BiPoly::u();
    let v = BiPoly::v();
    assert_eq!(s.gen_images[0].trace(), &u + &u);
    assert_eq!(s.gen_images[1].trace(), &u + &u);
    assert_eq!(s.gen_images[2].trace(), &v - &BiPoly::one());
    assert_eq!(s.gen_images[3].trace(), &v - &BiPoly::one());
}

#[test]
fn specialisation_to_group_characters() {
    let g = F4Group::get();
    let chars = build_all().unwrap();
    for rep in all_reps().unwrap() {
        let target: KondoLabel = rep.name.parse().unwrap();
        let x = chars.iter().find(|c| c.kondo == target).unwrap();
        for c in 0..g.num_classes() {
            let t = rep.specialized_trace(&qi(1), &qi(1), g.rep(c)).unwrap();
            assert_eq!(t, qi(x.values[c]), "{} on class {c}", rep.name);
        }
    }
}

fn coxeter_f4(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (1, 2) | (3, 4) => 3,
        (2, 3) => 4,
        _ => 2,
    }
}

fn rational() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=6)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hecke_relations_at_numeric_parameters(u in rational(), v in rational()) {
        for rep in all_reps().unwrap() {
            let gens = numeric_gens(&rep, &u, &v);
            let id = ident(rep.dim);
            for (i, t) in gens.iter().enumerate() {
                let p = if i < 2 { &u } else { &v };
                let lhs = mul(t, t);
                for r in 0..rep.dim {
                    for c in 0..rep.dim {
                        let rhs = p * &id[r][c] + (p - Q::one()) * &t[r][c];
                        prop_assert_eq!(&lhs[r][c], &rhs);
                    }
                }
            }
            for i in 1..=4 {
                for j in (i + 1)..=4 {
                    let m = coxeter_f4(i, j);
                    let alt = |a: usize, b: usize| {
                        (0..m).fold(ident(rep.dim), |acc, k| {
                            mul(&acc, &gens[if k % 2 == 0 { a } else { b } - 1])
                        })
                    };
                    prop_assert_eq!(alt(i, j), alt(j, i));
                }
            }
        }
    }

    #[test]
    fn reduced_words_give_equal_operators(word in prop::collection::vec(1usize..=4, 0..24)) {
        let g = F4Group::get();
        let w = g.group.from_word(&word).unwrap();
        prop_assume!(g.group.length(&w) == word.len());
        let red = g.group.reduced_word(&w);
        for rep in all_reps().unwrap() {
            prop_assert_eq!(rep.image_of_word(&word).unwrap(), rep.image_of_word(&red).unwrap());
        }
    }
}
