//! Crystallographic root systems in simple-root coordinates.
//!
//! Node numbering is Bourbaki's. For F4 the double bond runs from α2 to α3
//! with α1, α2 long. Squared lengths are normalised so that short roots (and
//! all roots of a simply-laced type) have length 1; long roots have length 2
//! in B2 and F4 and 3 in G2.
//!
//! Simple indices in the public API are 1-based, matching the node labels.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{int, rat, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CartanType {
    A1,
    B2,
    G2,
    D4,
    F4,
    E6,
    E7,
    E8,
}

impl CartanType {
    pub const ALL: [CartanType; 8] = [
        CartanType::A1,
        CartanType::B2,
        CartanType::G2,
        CartanType::D4,
        CartanType::F4,
        CartanType::E6,
        CartanType::E7,
        CartanType::E8,
    ];

    pub fn rank(self) -> usize {
        match self {
            CartanType::A1 => 1,
            CartanType::B2 | CartanType::G2 => 2,
            CartanType::D4 | CartanType::F4 => 4,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
            CartanType::E8 => 8,
        }
    }

    /// Squared lengths of the simple roots.
    fn lengths(self) -> Vec<i64> {
        match self {
            CartanType::B2 => vec![2, 1],
            CartanType::G2 => vec![1, 3],
            CartanType::F4 => vec![2, 2, 1, 1],
            t => vec![1; t.rank()],
        }
    }

    /// Dynkin edges, 1-based.
    fn bonds(self) -> Vec<(usize, usize)> {
        let e6 = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
        match self {
            CartanType::A1 => vec![],
            CartanType::B2 | CartanType::G2 => vec![(1, 2)],
            CartanType::D4 => vec![(1, 2), (2, 3), (2, 4)],
            CartanType::F4 => vec![(1, 2), (2, 3), (3, 4)],
            CartanType::E6 => e6,
            CartanType::E7 => [e6, vec![(6, 7)]].concat(),
            CartanType::E8 => [e6, vec![(6, 7), (7, 8)]].concat(),
        }
    }

    pub fn invariant_degrees(self) -> Vec<u32> {
        match self {
            CartanType::A1 => vec![2],
            CartanType::B2 => vec![2, 4],
            CartanType::G2 => vec![2, 6],
            CartanType::D4 => vec![2, 4, 4, 6],
            CartanType::F4 => vec![2, 6, 8, 12],
            CartanType::E6 => vec![2, 5, 6, 8, 9, 12],
            CartanType::E7 => vec![2, 6, 8, 10, 12, 14, 18],
            CartanType::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
        }
    }

    pub fn num_positive_roots(self) -> usize {
        self.invariant_degrees()
            .iter()
            .map(|d| *d as usize - 1)
            .sum()
    }

    pub fn group_order(self) -> u64 {
        self.invariant_degrees().iter().map(|&d| d as u64).product()
    }

    pub fn is_simply_laced(self) -> bool {
        !matches!(self, CartanType::B2 | CartanType::G2 | CartanType::F4)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CartanType::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnsupportedType(s.to_string()))
    }
}

/// The data fixing an ambient type: Cartan matrix with
/// `cartan[i][j] = 2(αi, αj) / (αj, αj)`, and the squared simple-root lengths
/// as symmetrizer (so `cartan[i][j] * symmetrizer[j]` is symmetric).
#[derive(Clone, Debug, Serialize)]
pub struct AmbientType {
    pub name: CartanType,
    pub cartan: Vec<Vec<i32>>,
    pub symmetrizer: Vec<i64>,
    pub node_names: Vec<String>,
    pub invariant_degrees: Vec<u32>,
}

impl AmbientType {
    pub fn new(name: CartanType) -> Self {
        let n = name.rank();
        let gram = gram_matrix(name);
        let cartan = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = int(2) * &gram[i][j] / &gram[j][j];
                        debug_assert!(a.is_integer());
                        a.to_integer().try_into().unwrap()
                    })
                    .collect()
            })
            .collect();
        Self {
            name,
            cartan,
            symmetrizer: name.lengths(),
            node_names: (1..=n).map(node_name).collect(),
            invariant_degrees: name.invariant_degrees(),
        }
    }

    /// Coxeter matrix `m_ij`, the order of `s_i s_j`.
    pub fn coxeter_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.cartan.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            return 1;
                        }
                        match self.cartan[i][j] * self.cartan[j][i] {
                            0 => 2,
                            1 => 3,
                            2 => 4,
                            _ => 6,
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `cartan · diag(symmetrizer)`, which equals `2 (αi, αj)`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        self.cartan
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.symmetrizer)
                    .map(|(&a, &d)| a as i64 * d)
                    .collect()
            })
            .collect()
    }
}

pub fn node_name(i: usize) -> String {
    format!("α{i}")
}

/// Accepts `a3`, `α3`, `alpha3` or a bare `3`.
pub fn parse_node(s: &str) -> Result<usize> {
    let t = s.trim();
    let digits = t
        .strip_prefix("alpha")
        .or_else(|| t.strip_prefix('α'))
        .or_else(|| t.strip_prefix('a'))
        .unwrap_or(t);
    digits
        .parse::<usize>()
        .ok()
        .filter(|&i| i >= 1)
        .ok_or_else(|| Error::Parse(format!("bad node name {s:?}")))
}

fn gram_matrix(name: CartanType) -> Vec<Vec<Rational>> {
    let n = name.rank();
    let lens = name.lengths();
    let mut g = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        g[i][i] = int(lens[i]);
    }
    for (i, j) in name.bonds() {
        let m = lens[i - 1].max(lens[j - 1]);
        g[i - 1][j - 1] = rat(-m, 2);
        g[j - 1][i - 1] = rat(-m, 2);
    }
    g
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthClass {
    Long,
    Short,
    SimplyLaced,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Root {
    pub coords: Vec<i32>,
    #[serde(serialize_with = "crate::arith::ser_rational")]
    pub sq_length: Rational,
}

impl Root {
    pub fn sign(&self) -> Sign {
        if self.coords.iter().any(|&c| c > 0) {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }
}

/// `beta - p·alpha, ..., beta + q·alpha` are all roots, and the string is maximal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootString {
    pub alpha: Vec<i32>,
    pub beta: Vec<i32>,
    pub p: i32,
    pub q: i32,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: AmbientType,
    gram: Vec<Vec<Rational>>,
    roots: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    n_pos: usize,
}

impl RootSystem {
    /// Closes the simple roots under the simple reflections.
    ///
    /// Positive roots come first, ordered by height and then with the
    /// simple roots in node order; the negative of root `i` sits at `i + N`.
    pub fn build(name: CartanType) -> Result<Self> {
        let ty = AmbientType::new(name);
        let gram = gram_matrix(name);
        let n = name.rank();
        let unit = |i: usize| -> Vec<i32> { (0..n).map(|j| (i == j) as i32).collect() };

        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i32>> = (0..n).map(unit).collect();
        for v in &queue {
            seen.insert(v.clone(), ());
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..n {
                let w = reflect_raw(&ty.cartan, i, &v);
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), ());
                    queue.push_back(w);
                }
            }
        }
        let mut pos: Vec<Vec<i32>> = seen
            .into_keys()
            .filter(|v| v.iter().any(|&c| c > 0))
            .collect();
        pos.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = pos.len();
        if n_pos != name.num_positive_roots() {
            return Err(Error::UnsupportedType(format!(
                "{name}: closure produced {n_pos} positive roots"
            )));
        }
        let neg: Vec<Vec<i32>> = pos.iter().map(|v| v.iter().map(|c| -c).collect()).collect();
        let mut sys = Self {
            ty,
            gram,
            roots: Vec::with_capacity(2 * n_pos),
            index: HashMap::new(),
            n_pos,
        };
        for coords in pos.into_iter().chain(neg) {
            let sq_length = sys.norm_int(&coords);
            sys.index.insert(coords.clone(), sys.roots.len());
            sys.roots.push(Root { coords, sq_length });
        }
        Ok(sys)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty.name
    }

    pub fn ambient(&self) -> &AmbientType {
        &self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.cartan.len()
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn index_of(&self, coords: &[i32]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_root(&self, coords: &[i32]) -> bool {
        self.index.contains_key(coords)
    }

    pub fn is_positive_index(&self, idx: usize) -> bool {
        idx < self.n_pos
    }

    pub fn negate_index(&self, idx: usize) -> usize {
        if idx < self.n_pos {
            idx + self.n_pos
        } else {
            idx - self.n_pos
        }
    }

    /// Root index of the simple root `α_i` (1-based `i`).
    pub fn simple_index(&self, i: usize) -> Result<usize> {
        self.check_node(i)?;
        Ok(i - 1)
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::InvalidIndex {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub fn unit(&self, i: usize) -> Vec<i32> {
        (1..=self.rank()).map(|j| (i == j) as i32).collect()
    }

    /// `s_i(v) = v - <v, α_i^∨> α_i`.
    pub fn reflect(&self, i: usize, v: &[i32]) -> Result<Vec<i32>> {
        self.check_node(i)?;
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in rank {}",
                v.len(),
                self.rank()
            )));
        }
        Ok(reflect_raw(&self.ty.cartan, i - 1, v))
    }

    pub(crate) fn reflect_root_index(&self, i0: usize, idx: usize) -> usize {
        let w = reflect_raw(&self.ty.cartan, i0, &self.roots[idx].coords);
        self.index[&w]
    }

    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !self.gram[i][j].is_zero() {
                    acc += xi * yj * &self.gram[i][j];
                }
            }
        }
        acc
    }

    pub fn inner_int(&self, x: &[i32], y: &[i32]) -> Rational {
        self.inner(&to_rational(x), &to_rational(y))
    }

    fn norm_int(&self, x: &[i32]) -> Rational {
        self.inner_int(x, x)
    }

    /// `2 (x, y) / (y, y)`.
    pub fn cartan_integer(&self, x: &[i32], y: &[i32]) -> Rational {
        int(2) * self.inner_int(x, y) / self.norm_int(y)
    }

    pub fn root_string(&self, alpha: &[i32], beta: &[i32]) -> Result<RootString> {
        for r in [alpha, beta] {
            if !self.is_root(r) {
                return Err(Error::NotARoot(r.to_vec()));
            }
        }
        let neg_beta: Vec<i32> = beta.iter().map(|c| -c).collect();
        if alpha == beta || alpha == neg_beta.as_slice() {
            return Err(Error::InvalidConfiguration(
                "root string needs alpha != ±beta".into(),
            ));
        }
        let step =
            |k: i32| -> Vec<i32> { beta.iter().zip(alpha).map(|(b, a)| b + k * a).collect() };
        let mut p = 0;
        while self.is_root(&step(-(p + 1))) {
            p += 1;
        }
        let mut q = 0;
        while self.is_root(&step(q + 1)) {
            q += 1;
        }
        Ok(RootString {
            alpha: alpha.to_vec(),
            beta: beta.to_vec(),
            p,
            q,
        })
    }

    pub fn length_class(&self, coords: &[i32]) -> Result<LengthClass> {
        let idx = self
            .index_of(coords)
            .ok_or_else(|| Error::NotARoot(coords.to_vec()))?;
        if self.ty.name.is_simply_laced() {
            return Ok(LengthClass::SimplyLaced);
        }
        Ok(if self.roots[idx].sq_length > int(1) {
            LengthClass::Long
        } else {
            LengthClass::Short
        })
    }

    /// Positive roots whose support lies in `subset` (1-based nodes).
    pub fn parabolic_positive_roots(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.n_pos)
            .filter(|&r| {
                self.roots[r]
                    .coords
                    .iter()
                    .enumerate()
                    .all(|(j, &c)| c == 0 || subset.contains(&(j + 1)))
            })
            .collect()
    }
}

fn reflect_raw(cartan: &[Vec<i32>], i0: usize, v: &[i32]) -> Vec<i32> {
    let pairing: i32 = v.iter().zip(cartan).map(|(vj, row)| vj * row[i0]).sum();
    let mut w = v.to_vec();
    w[i0] -= pairing;
    w
}

pub fn to_rational(v: &[i32]) -> Vec<Rational> {
    v.iter().map(|&c| int(c as i64)).collect()
}

/// `true` when the squared-length ratio `a / b` (or its inverse) is one of 1, 2, 3.
pub fn is_valid_length_ratio(a: &Rational, b: &Rational) -> bool {
    let r = if a >= b { a / b } else { b / a };
    r.is_positive() && [int(1), int(2), int(3)].contains(&r)
}
