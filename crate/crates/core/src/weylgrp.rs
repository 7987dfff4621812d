//! Weyl groups acting by permutations on the root list.

use std::collections::{HashMap, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{int, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem};

/// Sequence of 1-based simple indices; `[i1, ..., ik]` denotes `s_i1 ··· s_ik`.
pub type Word = Vec<usize>;

pub const ENUMERATION_BOUND: u64 = 1_000_000;
pub const ORDER_CAP: usize = 100;

/// Image of every root index under a group element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u16>);

impl Perm {
    fn identity(n: usize) -> Self {
        Perm((0..n as u16).collect())
    }

    pub fn image(&self, idx: usize) -> usize {
        self.0[idx] as usize
    }

    /// `(self ∘ other)(r) = self(other(r))`.
    fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&r| self.0[r as usize]).collect())
    }

    fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Perm(inv)
    }
}

#[derive(Clone, Debug)]
pub struct GroupElement {
    pub perm: Perm,
    pub word: Option<Word>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}

impl Eq for GroupElement {}

impl GroupElement {
    pub fn word(&self) -> Result<&Word> {
        self.word.as_ref().ok_or(Error::MissingWord)
    }
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    sys: RootSystem,
    gens: Vec<Perm>,
}

impl WeylGroup {
    pub fn new(t: CartanType) -> Result<Self> {
        Ok(Self::from_system(RootSystem::build(t)?))
    }

    pub fn from_system(sys: RootSystem) -> Self {
        let gens = (0..sys.rank())
            .map(|i0| {
                Perm(
                    (0..sys.roots().len())
                        .map(|r| sys.reflect_root_index(i0, r) as u16)
                        .collect(),
                )
            })
            .collect();
        Self { sys, gens }
    }

    pub fn system(&self) -> &RootSystem {
        &self.sys
    }

    pub fn cartan_type(&self) -> CartanType {
        self.sys.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.sys.rank()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            perm: Perm::identity(self.sys.roots().len()),
            word: Some(vec![]),
        }
    }

    pub fn simple(&self, i: usize) -> Result<GroupElement> {
        self.from_word(&[i])
    }

    pub fn from_word(&self, word: &[usize]) -> Result<GroupElement> {
        let mut perm = Perm::identity(self.sys.roots().len());
        for &i in word {
            self.sys.check_node(i)?;
            perm = perm.compose(&self.gens[i - 1]);
        }
        let reduced = self.length_of(&perm) == word.len();
        Ok(GroupElement {
            perm,
            word: reduced.then(|| word.to_vec()),
        })
    }

    /// `a · b`; the product carries a word only when the concatenation is reduced.
    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let perm = a.perm.compose(&b.perm);
        let word = match (&a.word, &b.word) {
            (Some(x), Some(y)) if self.length_of(&perm) == x.len() + y.len() => {
                Some([x.as_slice(), y.as_slice()].concat())
            }
            _ => None,
        };
        GroupElement { perm, word }
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        GroupElement {
            perm: g.perm.inverse(),
            word: g.word.as_ref().map(|w| w.iter().rev().copied().collect()),
        }
    }

    pub fn length(&self, g: &GroupElement) -> usize {
        self.length_of(&g.perm)
    }

    fn length_of(&self, perm: &Perm) -> usize {
        (0..self.sys.num_positive())
            .filter(|&r| !self.sys.is_positive_index(perm.image(r)))
            .count()
    }

    /// A reduced word read off from right descents.
    pub fn reduced_word(&self, g: &GroupElement) -> Word {
        let mut perm = g.perm.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i0 in 0..self.rank() {
                if !self.sys.is_positive_index(perm.image(i0)) {
                    perm = perm.compose(&self.gens[i0]);
                    word.push(i0 + 1);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    pub fn with_word(&self, g: &GroupElement) -> GroupElement {
        GroupElement {
            perm: g.perm.clone(),
            word: Some(g.word.clone().unwrap_or_else(|| self.reduced_word(g))),
        }
    }

    pub fn image_of_root(&self, g: &GroupElement, idx: usize) -> usize {
        g.perm.image(idx)
    }

    /// `m[i][j]` is the `α_i`-coordinate of `g(α_j)`.
    pub fn matrix(&self, g: &GroupElement) -> Vec<Vec<i32>> {
        let n = self.rank();
        let cols: Vec<&Vec<i32>> = (0..n)
            .map(|j| &self.sys.root(g.perm.image(j)).coords)
            .collect();
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i]).collect())
            .collect()
    }

    pub fn apply_int(&self, g: &GroupElement, v: &[i32]) -> Vec<i32> {
        let m = self.matrix(g);
        m.iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn apply(&self, g: &GroupElement, v: &[Rational]) -> Vec<Rational> {
        let m = self.matrix(g);
        m.iter()
            .map(|row| {
                row.iter().zip(v).fold(Rational::zero(), |acc, (&a, b)| {
                    if a == 0 {
                        acc
                    } else {
                        acc + int(a as i64) * b
                    }
                })
            })
            .collect()
    }

    /// Longest element of the parabolic subgroup on `subset`, by greedy ascent.
    pub fn longest_element(&self, subset: &[usize]) -> Result<GroupElement> {
        for &i in subset {
            self.sys.check_node(i)?;
        }
        let mut perm = Perm::identity(self.sys.roots().len());
        let mut word = Vec::new();
        'outer: loop {
            for &i in subset {
                if self.sys.is_positive_index(perm.image(i - 1)) {
                    perm = perm.compose(&self.gens[i - 1]);
                    word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        Ok(GroupElement {
            perm,
            word: Some(word),
        })
    }

    pub fn element_order(&self, g: &GroupElement) -> Result<usize> {
        let id = Perm::identity(self.sys.roots().len());
        let mut p = g.perm.clone();
        for k in 1..=ORDER_CAP {
            if p == id {
                return Ok(k);
            }
            p = p.compose(&g.perm);
        }
        Err(Error::OrderCapExceeded(ORDER_CAP))
    }

    pub fn is_identity(&self, g: &GroupElement) -> bool {
        g.perm == Perm::identity(self.sys.roots().len())
    }

    /// Breadth-first enumeration; every element carries the lexicographically
    /// least among its shortest words.
    pub fn enumerate(&self) -> Result<Enumeration> {
        let order = self.cartan_type().group_order();
        if order > ENUMERATION_BOUND {
            return Err(Error::SizeBoundExceeded(order));
        }
        let mut elements = vec![self.identity()];
        let mut parent = vec![None];
        let mut index = HashMap::new();
        index.insert(elements[0].perm.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for i0 in 0..self.rank() {
                // only ascents give new elements at the next level
                if !self.sys.is_positive_index(elements[k].perm.image(i0)) {
                    continue;
                }
                let perm = elements[k].perm.compose(&self.gens[i0]);
                if index.contains_key(&perm) {
                    continue;
                }
                let mut word = elements[k].word.clone().unwrap();
                word.push(i0 + 1);
                index.insert(perm.clone(), elements.len());
                parent.push(Some((k, i0 + 1)));
                queue.push_back(elements.len());
                elements.push(GroupElement {
                    perm,
                    word: Some(word),
                });
            }
        }
        if elements.len() as u64 != order {
            return Err(Error::UnsupportedType(format!(
                "{} enumerated {} elements, expected {order}",
                self.cartan_type(),
                elements.len()
            )));
        }
        Ok(Enumeration {
            elements,
            index,
            parent,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    elements: Vec<GroupElement>,
    index: HashMap<Perm, usize>,
    parent: Vec<Option<(usize, usize)>>,
}

impl Enumeration {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &GroupElement {
        &self.elements[k]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(&g.perm).copied()
    }

    /// `(prefix, letter)` with `element(k) = element(prefix) · s_letter`;
    /// `None` for the identity.
    pub fn parent(&self, k: usize) -> Option<(usize, usize)> {
        self.parent[k]
    }

    pub fn inverse_index(&self, k: usize) -> usize {
        self.index[&self.elements[k].perm.inverse()]
    }

    /// `Σ q^ℓ(w)`.
    pub fn poincare_series(&self) -> UniPoly {
        let mut p = UniPoly::zero();
        for g in &self.elements {
            p.add_term(g.word.as_ref().unwrap().len() as i32, int(1));
        }
        p
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassData {
    /// Element indices (into the enumeration) of each class, ascending.
    pub classes: Vec<Vec<usize>>,
    pub reps: Vec<Word>,
    pub sizes: Vec<usize>,
    /// Class of `w²` for `w` in the class.
    pub power_map: Vec<usize>,
    #[serde(skip)]
    pub class_of: Vec<usize>,
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of_element(&self, k: usize) -> usize {
        self.class_of[k]
    }
}

/// Conjugation orbits, ordered by their representatives (shortest, then
/// lexicographically least word).
pub fn conjugacy_classes(group: &WeylGroup, en: &Enumeration) -> Result<ClassData> {
    let n = en.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let gens: Vec<GroupElement> = (1..=group.rank())
        .map(|i| group.simple(i))
        .collect::<Result<_>>()?;
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = vec![start];
        class_of[start] = c;
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            let g = en.element(k);
            for s in &gens {
                let h = group.mul(&group.mul(s, g), s);
                let j = en.index_of(&h).expect("enumeration is closed");
                if class_of[j] == usize::MAX {
                    class_of[j] = c;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }

    let key = |k: usize| {
        let w = en.element(k).word.as_ref().unwrap();
        (w.len(), w.clone())
    };
    let mut order: Vec<usize> = (0..classes.len()).collect();
    let reps_raw: Vec<usize> = classes
        .iter()
        .map(|m| *m.iter().min_by_key(|&&k| key(k)).unwrap())
        .collect();
    order.sort_by_key(|&c| key(reps_raw[c]));
    let mut renumber = vec![0; classes.len()];
    for (new, &old) in order.iter().enumerate() {
        renumber[old] = new;
    }
    let classes: Vec<Vec<usize>> = order.iter().map(|&c| classes[c].clone()).collect();
    let class_of: Vec<usize> = class_of.iter().map(|&c| renumber[c]).collect();
    let reps: Vec<Word> = order
        .iter()
        .map(|&c| en.element(reps_raw[c]).word.clone().unwrap())
        .collect();

    let square_class = |k: usize| -> usize {
        let g = en.element(k);
        let sq = group.mul(g, g);
        class_of[en.index_of(&sq).unwrap()]
    };
    let mut power_map = Vec::with_capacity(classes.len());
    for members in &classes {
        let target = square_class(members[0]);
        if members.iter().any(|&k| square_class(k) != target) {
            return Err(Error::RecipeBroken("power map not a class function".into()));
        }
        power_map.push(target);
    }

    Ok(ClassData {
        sizes: classes.iter().map(Vec::len).collect(),
        classes,
        reps,
        power_map,
        class_of,
    })
}
