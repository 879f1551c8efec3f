//! Exact rank computation for integer and rational matrices.
//!
//! Integer matrices go through fraction-free (Bareiss) elimination over
//! arbitrary-precision integers, so intermediate growth never overflows and
//! no rounding ever happens. Rational matrices use plain Gaussian
//! elimination over `BigRational`.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank over the rationals of a `rows x cols` integer matrix given in
/// row-major order.
pub(crate) fn integer_rank(rows: usize, cols: usize, entries: &[i64]) -> usize {
    assert_eq!(entries.len(), rows * cols);
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| (0..cols).map(|c| BigInt::from(entries[r * cols + c])).collect())
        .collect();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        // One Bareiss step: every remaining entry becomes
        // (a[r][c] * pivot - a[r][col] * a[rank][c]) / prev, and the division
        // is exact because each intermediate is a minor of the original
        // integer matrix.
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &m[r][c] * &m[rank][col] - &m[r][col] * &m[rank][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of a `rows x cols` rational matrix given in row-major order.
pub(crate) fn rational_rank(rows: usize, cols: usize, entries: &[BigRational]) -> usize {
    assert_eq!(entries.len(), rows * cols);
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| entries[r * cols..(r + 1) * cols].to_vec())
        .collect();
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..cols {
                let sub = &factor * &m[rank][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
        rank += 1;
    }
    rank
}
