//! Exact linear algebra over the rationals (Gaussian elimination).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QMatrix = Vec<Vec<BigRational>>;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn from_int_rows(rows: &[Vec<i64>]) -> QMatrix {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

/// Reduces `a` in place to row echelon form, returning the pivot columns and
/// the sign of the row permutation applied.
fn echelon(a: &mut QMatrix) -> (Vec<usize>, bool) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut flipped = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            flipped = !flipped;
        }
        let pivot = a[r][c].clone();
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &pivot;
            for j in c..cols {
                let t = &f * &a[r][j];
                a[i][j] -= t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (pivots, flipped)
}

pub fn rank(a: &QMatrix) -> usize {
    let mut m = a.clone();
    echelon(&mut m).0.len()
}

pub fn rank_int(a: &[Vec<i64>]) -> usize {
    rank(&from_int_rows(a))
}

/// Determinant of a square matrix.
pub fn det(a: &QMatrix) -> BigRational {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return BigRational::one();
    }
    let mut m = a.clone();
    let (pivots, flipped) = echelon(&mut m);
    if pivots.len() < n {
        return BigRational::zero();
    }
    let mut d = BigRational::one();
    for (i, row) in m.iter().enumerate() {
        d *= &row[i];
    }
    if flipped {
        -d
    } else {
        d
    }
}

/// Solves `a x = b` for square nonsingular `a`; `None` when singular.
pub fn solve(a: &QMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut aug: QMatrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(p, c);
        let pivot = aug[c][c].clone();
        for j in c..=n {
            aug[c][j] = &aug[c][j] / &pivot;
        }
        for i in 0..n {
            if i == c || aug[i][c].is_zero() {
                continue;
            }
            let f = aug[i][c].clone();
            for j in c..=n {
                let t = &f * &aug[c][j];
                aug[i][j] -= t;
            }
        }
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

pub fn transpose<T: Clone>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}
