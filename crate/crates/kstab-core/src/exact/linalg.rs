//! Dense Gaussian elimination over an exact field.

use super::Scalar;

pub type Matrix<T> = Vec<Vec<T>>;

/// Reduced row echelon form; returns the pivot columns.
pub fn rref<T: Scalar>(m: &mut Matrix<T>) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = m[r][j].clone() * f.clone();
                    m[i][j] = m[i][j].clone() - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// One solution of `a x = b` with free variables set to zero.
pub fn solve<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    let n = a.first().map_or(0, |r| r.len());
    let mut aug: Matrix<T> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![T::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][n].clone();
    }
    Some(x)
}

pub fn det<T: Scalar>(m: &Matrix<T>) -> T {
    let n = m.len();
    let mut w = m.clone();
    let mut acc = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !w[i][c].is_zero()) else {
            return T::zero();
        };
        if p != c {
            w.swap(p, c);
            acc = -acc;
        }
        acc = acc * w[c][c].clone();
        for i in c + 1..n {
            if !w[i][c].is_zero() {
                let f = w[i][c].clone() / w[c][c].clone();
                for j in c..n {
                    let t = w[c][j].clone() * f.clone();
                    w[i][j] = w[i][j].clone() - t;
                }
            }
        }
    }
    acc
}

pub fn transpose<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn mat_vec<T: Scalar>(m: &Matrix<T>, x: &[T]) -> Vec<T> {
    m.iter()
        .map(|r| {
            r.iter()
                .zip(x)
                .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

/// Negative definiteness via leading principal minors of `-m`.
pub fn is_negative_definite<T: Scalar>(m: &Matrix<T>) -> bool {
    let n = m.len();
    (1..=n).all(|k| {
        let sub: Matrix<T> = (0..k)
            .map(|i| (0..k).map(|j| -m[i][j].clone()).collect())
            .collect();
        det(&sub) > T::zero()
    })
}
