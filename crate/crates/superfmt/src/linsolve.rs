//! Exact linear algebra over the rationals: row reduction, rank, nullspace
//! bases and matrix inversion.
//!
//! Systems are small throughout this crate (a few hundred unknowns at most),
//! so plain fraction-free-ish Gaussian elimination with reduced echelon
//! normalization is all that is needed. Everything here is exact; there is no
//! pivot-magnitude heuristic because there is no rounding.

use crate::matrix::Matrix;
use crate::rational::Rational;

/// Reduces `rows` (each of length `cols`) to reduced row echelon form in
/// place and returns the pivot column indices (0-based).
#[allow(clippy::needless_range_loop)] // two rows are borrowed at once
pub fn rref(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = rows[pivot_row][col].recip();
        for c in col..cols {
            rows[pivot_row][c] = &rows[pivot_row][c] * &inv;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    rows[r][c] = &rows[r][c] - &(&factor * &rows[pivot_row][c]);
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of the linear system given by `rows`.
pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work, cols).len()
}

/// A basis of the right nullspace of the `rows x cols` system.
///
/// Each returned vector has length `cols` and its first nonzero coordinate is
/// normalized to 1 (the free variable of that basis vector).
pub fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut work = rows.to_vec();
    let pivots = rref(&mut work, cols);
    let mut basis = Vec::new();
    let mut pivot_iter = pivots.iter().copied().peekable();
    let mut pivot_of_col = vec![None; cols];
    for (r, c) in pivots.iter().copied().enumerate() {
        pivot_of_col[c] = Some(r);
    }
    for free in 0..cols {
        if pivot_iter.peek() == Some(&free) {
            pivot_iter.next();
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for c in 0..cols {
            if let Some(r) = pivot_of_col[c] {
                v[c] = -&work[r][free];
            }
        }
        basis.push(v);
    }
    basis
}

/// Exact inverse; `None` when the matrix is singular.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    let p = m.size();
    let mut rows: Vec<Vec<Rational>> = (1..=p)
        .map(|i| {
            let mut row: Vec<Rational> = (1..=p).map(|j| m.get(i, j).clone()).collect();
            row.extend((1..=p).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    let pivots = rref(&mut rows, 2 * p);
    if pivots.len() < p || pivots[p - 1] != p - 1 {
        return None;
    }
    Some(Matrix::from_fn(p, |i, j| rows[i - 1][p + j - 1].clone()))
}
