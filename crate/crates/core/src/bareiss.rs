//! Fraction-free Gaussian elimination for exact integer matrix rank.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rank by one-step Bareiss elimination. The division in each update
/// is exact (Sylvester identity); a debug assertion keeps that honest.
pub fn rank(mut mat: Vec<Vec<BigInt>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut prev = BigInt::one();
    let mut r = 0usize;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot_row) = (r..rows).find(|&i| !mat[i][col].is_zero()) else {
            continue;
        };
        mat.swap(r, pivot_row);
        for i in r + 1..rows {
            if mat[i][col].is_zero() && mat[i][col + 1..].iter().all(|x| x.is_zero()) {
                continue;
            }
            for j in col + 1..cols {
                let num = &mat[r][col] * &mat[i][j] - &mat[i][col] * &mat[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                mat[i][j] = num / &prev;
            }
            mat[i][col] = BigInt::zero();
        }
        prev = mat[r][col].clone();
        r += 1;
    }
    r
}

/// Nullity of a square integer matrix.
pub fn nullity(mat: Vec<Vec<BigInt>>) -> usize {
    let n = mat.len();
    n - rank(mat)
}
