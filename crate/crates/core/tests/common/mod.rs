//! Oracles shared by the integration tests. Nothing here calls into the
//! library's root system or group code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Dynkin data in Bourbaki numbering, with the shortest roots of squared
/// length 1: squared lengths, and the bonds as
/// `(i, j)` pairs (1-based) with the value of `(α_i, α_j)` times two.
pub struct Dynkin {
    pub lengths: Vec<i64>,
    pub bonds: Vec<(usize, usize, i64)>,
    pub highest: Vec<i32>,
    pub degrees: Vec<u32>,
    pub positive_roots: usize,
}

pub fn dynkin(name: &str) -> Dynkin {
    let e_bonds = |n: usize| {
        let mut b = vec![(1, 3, -1), (2, 4, -1), (3, 4, -1)];
        for i in 4..n {
            b.push((i, i + 1, -1));
        }
        b
    };
    match name {
        "A1" => Dynkin {
            lengths: vec![1],
            bonds: vec![],
            highest: vec![1],
            degrees: vec![2],
            positive_roots: 1,
        },
        "B2" => Dynkin {
            lengths: vec![2, 1],
            bonds: vec![(1, 2, -2)],
            highest: vec![1, 2],
            degrees: vec![2, 4],
            positive_roots: 4,
        },
        "G2" => Dynkin {
            lengths: vec![1, 3],
            bonds: vec![(1, 2, -3)],
            highest: vec![3, 2],
            degrees: vec![2, 6],
            positive_roots: 6,
        },
        "D4" => Dynkin {
            lengths: vec![1; 4],
            bonds: vec![(1, 2, -1), (2, 3, -1), (2, 4, -1)],
            highest: vec![1, 2, 1, 1],
            degrees: vec![2, 4, 4, 6],
            positive_roots: 12,
        },
        "F4" => Dynkin {
            lengths: vec![2, 2, 1, 1],
            bonds: vec![(1, 2, -2), (2, 3, -2), (3, 4, -1)],
            highest: vec![2, 3, 4, 2],
            degrees: vec![2, 6, 8, 12],
            positive_roots: 24,
        },
        "E6" => Dynkin {
            lengths: vec![1; 6],
            bonds: e_bonds(6),
            highest: vec![1, 2, 2, 3, 2, 1],
            degrees: vec![2, 5, 6, 8, 9, 12],
            positive_roots: 36,
        },
        "E7" => Dynkin {
            lengths: vec![1; 7],
            bonds: e_bonds(7),
            highest: vec![2, 2, 3, 4, 3, 2, 1],
            degrees: vec![2, 6, 8, 10, 12, 14, 18],
            positive_roots: 63,
        },
        "E8" => Dynkin {
            lengths: vec![1; 8],
            bonds: e_bonds(8),
            highest: vec![2, 3, 4, 6, 5, 4, 3, 2],
            degrees: vec![2, 8, 12, 14, 18, 20, 24, 30],
            positive_roots: 120,
        },
        _ => panic!("no Dynkin data for {name}"),
    }
}

impl Dynkin {
    pub fn rank(&self) -> usize {
        self.lengths.len()
    }

    /// Gram matrix `(α_i, α_j)`.
    pub fn gram(&self) -> Vec<Vec<Q>> {
        let n = self.rank();
        let mut g = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            g[i][i] = qi(self.lengths[i]);
        }
        for &(i, j, twice) in &self.bonds {
            g[i - 1][j - 1] = q(twice, 2);
            g[j - 1][i - 1] = q(twice, 2);
        }
        g
    }

    pub fn norm(&self, x: &[i32]) -> Q {
        let g = self.gram();
        let mut s = Q::zero();
        for i in 0..x.len() {
            for j in 0..x.len() {
                s += &g[i][j] * qi(x[i] as i64 * x[j] as i64);
            }
        }
        s
    }

    /// Positive roots found by searching the box under the highest root for
    /// lattice vectors of root length. In these lattices every vector of a
    /// root length is a root.
    pub fn box_search(&self) -> Vec<Vec<i32>> {
        let g = self.gram();
        let n = self.rank();
        let lens: Vec<Q> = self.lengths.iter().map(|&l| qi(l)).collect();
        let mut out = Vec::new();
        let mut x = vec![0i32; n];
        loop {
            let mut k = 0;
            while k < n && x[k] == self.highest[k] {
                x[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
            x[k] += 1;
            let mut s = Q::zero();
            for i in 0..n {
                for j in 0..n {
                    if x[i] != 0 && x[j] != 0 {
                        s += &g[i][j] * qi(x[i] as i64 * x[j] as i64);
                    }
                }
            }
            if lens.contains(&s) {
                out.push(x.clone());
            }
        }
        out
    }

    /// Simple reflections as rational matrices acting on coordinate columns.
    pub fn reflections(&self) -> Vec<Vec<Vec<Q>>> {
        let g = self.gram();
        let n = self.rank();
        (0..n)
            .map(|i| {
                let mut m = vec![vec![Q::zero(); n]; n];
                for j in 0..n {
                    m[j][j] = Q::one();
                    // s_i(α_j) = α_j - 2(α_j, α_i)/(α_i, α_i) α_i
                    let c = qi(2) * &g[j][i] / &g[i][i];
                    m[i][j] -= c;
                }
                m
            })
            .collect()
    }

    /// The whole group as integer matrices, generated by closure.
    pub fn group_matrices(&self) -> Vec<Vec<Vec<i64>>> {
        let gens: Vec<Vec<Vec<i64>>> = self
            .reflections()
            .iter()
            .map(|m| {
                m.iter()
                    .map(|r| {
                        r.iter()
                            .map(|c| c.to_integer().try_into().unwrap())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let n = self.rank();
        let id: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| (i == j) as i64).collect())
            .collect();
        let mut seen = std::collections::HashSet::new();
        seen.insert(id.clone());
        let mut all = vec![id];
        let mut k = 0;
        while k < all.len() {
            for s in &gens {
                let p = mul_i(&all[k], s);
                if seen.insert(p.clone()) {
                    all.push(p);
                }
            }
            k += 1;
        }
        all
    }
}

pub fn mul_i(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn det_i(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut d = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        d += sign * m[0][j] * det_i(&minor);
    }
    d
}

/// Coefficients of `det(1 - q M)`, lowest degree first, from principal minors.
pub fn det_one_minus_q(m: &[Vec<i64>]) -> Vec<i64> {
    let n = m.len();
    let mut c = vec![0i64; n + 1];
    for mask in 0u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| m[i][j]).collect())
            .collect();
        let k = idx.len();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        c[k] += sign * det_i(&sub);
    }
    c
}

/// Power series inverse of an integer series with constant term 1,
/// truncated to `len` terms.
pub fn series_inverse(p: &[i64], len: usize) -> Vec<i128> {
    assert_eq!(p[0], 1);
    let mut out = vec![0i128; len];
    out[0] = 1;
    for k in 1..len {
        let mut s = 0i128;
        for j in 1..=k.min(p.len() - 1) {
            s += p[j] as i128 * out[k - j];
        }
        out[k] = -s;
    }
    out
}

pub fn trace_i(m: &[Vec<i64>]) -> i64 {
    (0..m.len()).map(|i| m[i][i]).sum()
}

/// Length of the element given by matrix `m`: the number of positive roots
/// it sends to negative ones.
pub fn length_of(m: &[Vec<i64>], positive: &[Vec<i32>]) -> usize {
    positive
        .iter()
        .filter(|r| {
            let img: Vec<i64> = (0..m.len())
                .map(|i| (0..m.len()).map(|j| m[i][j] * r[j] as i64).sum())
                .collect();
            img.iter().all(|&x| x <= 0)
        })
        .count()
}

/// `Π (1 - q^{d_i})` as integer coefficients.
pub fn product_one_minus(degrees: &[u32]) -> Vec<i64> {
    let mut p = vec![1i64];
    for &d in degrees {
        let mut next = vec![0i64; p.len() + d as usize];
        for (i, &c) in p.iter().enumerate() {
            next[i] += c;
            next[i + d as usize] -= c;
        }
        p = next;
    }
    p
}
