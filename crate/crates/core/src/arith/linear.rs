use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Solves `m * x = rhs` by Gaussian elimination over the rationals.
pub fn solve_linear(m: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>> {
    let n = m.len();
    if rhs.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "{}x? matrix with {} right-hand entries",
            n,
            rhs.len()
        )));
    }
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut row = row.clone();
            row.push(r.clone());
            row
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..=n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    Ok(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(Rational::zero(), |acc, l| acc + &a[i][l] * &b[l][j]))
                .collect()
        })
        .collect()
}

/// Coefficients `c_0..c_n` of `det(x I - m)`, lowest degree first
/// (Faddeev–LeVerrier).
pub fn char_poly(m: &[Vec<Rational>]) -> Vec<Rational> {
    let n = m.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let identity: Vec<Vec<Rational>> = (0..n)
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
        .collect();
    let mut mk = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let prod = mat_mul(m, &mk);
        mk = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &prod[i][j] + &coeffs[n - k + 1] * &identity[i][j])
                    .collect()
            })
            .collect();
        let am = mat_mul(m, &mk);
        let trace = (0..n).fold(Rational::zero(), |acc, i| acc + &am[i][i]);
        coeffs[n - k] = -trace / Rational::from_integer((k as i64).into());
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn identity_system() {
        let r = vec![int(3), rat(-1, 2), int(0)];
        let id = mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(solve_linear(&id, &r).unwrap(), r);
    }

    #[test]
    fn diagonal_system() {
        let d = mat(&[&[2, 0], &[0, 3]]);
        assert_eq!(
            solve_linear(&d, &[int(1), int(1)]).unwrap(),
            vec![rat(1, 2), rat(1, 3)]
        );
    }

    #[test]
    fn b2_gram_against_its_own_row() {
        // long^2 = 2, short^2 = 1, (a1, a2) = -1
        let g = mat(&[&[2, -1], &[-1, 1]]);
        for (i, row) in g.iter().enumerate() {
            let x = solve_linear(&g, row).unwrap();
            let unit: Vec<Rational> = (0..2).map(|j| int((i == j) as i64)).collect();
            assert_eq!(x, unit);
        }
    }

    #[test]
    fn singular_system() {
        let s = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            solve_linear(&s, &[int(1), int(0)]).unwrap_err(),
            Error::SingularSystem
        );
    }

    #[test]
    fn pivoting_needed() {
        let m = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            solve_linear(&m, &[int(5), int(7)]).unwrap(),
            vec![int(7), int(5)]
        );
    }

    #[test]
    fn characteristic_polynomial() {
        // rotation by 90 degrees: x^2 + 1
        let r = mat(&[&[0, -1], &[1, 0]]);
        assert_eq!(char_poly(&r), vec![int(1), int(0), int(1)]);
        // diag(2, 3): x^2 - 5x + 6
        let d = mat(&[&[2, 0], &[0, 3]]);
        assert_eq!(char_poly(&d), vec![int(6), int(-5), int(1)]);
    }
}
