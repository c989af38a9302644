//! Exact determinants for the matrix-tree computations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant of an integer matrix by fraction-free (Bareiss)
/// elimination with row pivoting.
///
/// Every division performed by the sweep is exact, so all intermediate
/// entries are integers (they are minors of the input matrix). The empty
/// matrix has determinant 1.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev; // exact by the Bareiss identity
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant of a rational matrix by Gaussian elimination, pivoting on
/// the first nonzero entry of each column. The empty matrix has
/// determinant 1.
pub fn det_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(k, p);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &pivot;
            let (upper, lower) = m.split_at_mut(i);
            let (src, dst) = (&upper[k], &mut lower[0]);
            for (d, s) in dst[k + 1..].iter_mut().zip(&src[k + 1..]) {
                *d = &*d - &f * s;
            }
            dst[k] = BigRational::zero();
        }
    }
    det
}
