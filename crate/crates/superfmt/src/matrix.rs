//! Dense square matrices of exact rationals.
//!
//! Indices are 1-based throughout the public interface, matching the usual
//! mathematical convention for matrix units `E_ij`; storage is row-major and
//! private. Matrices are immutable once built, so they can be shared freely
//! across threads.
//!
//! Besides elementwise constructors there are the three band-style builders
//! used everywhere in this crate:
//!
//! * [`Matrix::unit_entry`]: the matrix unit `E_ij` with `(E_ij)_kl = δ_ik δ_jl`;
//! * [`Matrix::diag_band`]: entries along the `k`-th diagonal, the main
//!   diagonal being the 0-th one;
//! * [`Matrix::adiag`]: entries along the antidiagonal, enumerated from the
//!   bottom-left corner: the `t`-th entry sits at `(p+1-t, t)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A `p x p` matrix of [`Rational`] entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    size: usize,
    entries: Vec<Rational>, // row-major
}

impl Matrix {
    fn idx(&self, row: usize, col: usize) -> usize {
        debug_assert!(row >= 1 && row <= self.size && col >= 1 && col <= self.size);
        (row - 1) * self.size + (col - 1)
    }

    /// The zero matrix of size `p >= 1`.
    pub fn zero(p: usize) -> Self {
        assert!(p >= 1, "matrix size must be positive");
        Matrix {
            size: p,
            entries: vec![Rational::zero(); p * p],
        }
    }

    /// The identity matrix of size `p >= 1`.
    pub fn identity(p: usize) -> Self {
        let mut m = Matrix::zero(p);
        for i in 1..=p {
            let idx = m.idx(i, i);
            m.entries[idx] = Rational::one();
        }
        m
    }

    /// Builds a matrix from a 1-based entry function.
    pub fn from_fn(p: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(p >= 1, "matrix size must be positive");
        let mut entries = Vec::with_capacity(p * p);
        for i in 1..=p {
            for j in 1..=p {
                entries.push(f(i, j));
            }
        }
        Matrix { size: p, entries }
    }

    /// Builds a matrix from rows; every row must have length `p`.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let p = rows.len();
        if p == 0 {
            return Err(Error::WrongEntryCount {
                expected: 1,
                actual: 0,
            });
        }
        let mut entries = Vec::with_capacity(p * p);
        for row in rows {
            if row.len() != p {
                return Err(Error::WrongEntryCount {
                    expected: p,
                    actual: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { size: p, entries })
    }

    /// The matrix unit `E_ij` of size `p`: a single 1 at row `i`, column `j`.
    pub fn unit_entry(i: usize, j: usize, p: usize) -> Result<Self> {
        if i < 1 || i > p || j < 1 || j > p {
            return Err(Error::IndexOutOfRange {
                row: i,
                col: j,
                size: p,
            });
        }
        let mut m = Matrix::zero(p);
        let idx = m.idx(i, j);
        m.entries[idx] = Rational::one();
        Ok(m)
    }

    /// A matrix with the given entries along the `k`-th diagonal
    /// (`-(p-1) <= k <= p-1`), all other entries zero.
    ///
    /// For `k >= 0` the `t`-th entry sits at `(t, t+k)`; for `k < 0` it sits
    /// at `(t-k, t)`. The entry list must have length `p - |k|`.
    pub fn diag_band(k: i64, entries: &[Rational], p: usize) -> Result<Self> {
        let abs_k = k.unsigned_abs() as usize;
        if abs_k >= p {
            return Err(Error::BandOutOfRange { index: k, size: p });
        }
        let expected = p - abs_k;
        if entries.len() != expected {
            return Err(Error::WrongEntryCount {
                expected,
                actual: entries.len(),
            });
        }
        let mut m = Matrix::zero(p);
        for (t, a) in entries.iter().enumerate() {
            let t = t + 1;
            let (row, col) = if k >= 0 {
                (t, t + abs_k)
            } else {
                (t + abs_k, t)
            };
            let idx = m.idx(row, col);
            m.entries[idx] = a.clone();
        }
        Ok(m)
    }

    /// A matrix whose only entries lie on the antidiagonal, enumerated from
    /// the bottom-left corner: the `t`-th entry sits at `(p+1-t, t)`.
    pub fn adiag(entries: &[Rational], p: usize) -> Result<Self> {
        if entries.len() != p {
            return Err(Error::WrongEntryCount {
                expected: p,
                actual: entries.len(),
            });
        }
        let mut m = Matrix::zero(p);
        for (t, a) in entries.iter().enumerate() {
            let t = t + 1;
            let idx = m.idx(p + 1 - t, t);
            m.entries[idx] = a.clone();
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at 1-based `(row, col)`. Panics out of range.
    pub fn get(&self, row: usize, col: usize) -> &Rational {
        assert!(
            row >= 1 && row <= self.size && col >= 1 && col <= self.size,
            "index ({row}, {col}) out of range for size {}",
            self.size
        );
        &self.entries[self.idx(row, col)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.size, |i, j| self.get(j, i).clone())
    }

    /// Reflection about the antidiagonal: entry `(i, j)` moves to
    /// `(p+1-j, p+1-i)`.
    pub fn antitranspose(&self) -> Matrix {
        let p = self.size;
        Matrix::from_fn(p, |i, j| self.get(p + 1 - j, p + 1 - i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            size: self.size,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (1..=self.size).map(|i| self.get(i, i).clone()).sum()
    }

    /// `self^k` by repeated products; `k = 0` gives the identity.
    pub fn pow(&self, k: u64) -> Matrix {
        let mut acc = Matrix::identity(self.size);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The diagonal indices carrying at least one nonzero entry.
    pub fn support_bands(&self) -> Vec<i64> {
        let p = self.size as i64;
        (1 - p..p)
            .filter(|&k| {
                (1..=self.size).any(|i| {
                    let j = i as i64 + k;
                    j >= 1 && j <= p && !self.get(i, j as usize).is_zero()
                })
            })
            .collect()
    }

    /// True when every nonzero entry lies on the `k`-th diagonal.
    pub fn supported_on_band(&self, k: i64) -> bool {
        self.support_bands().iter().all(|&b| b == k)
    }

    fn assert_same_size(&self, other: &Matrix) {
        assert_eq!(
            self.size, other.size,
            "matrix sizes differ: {} vs {}",
            self.size, other.size
        );
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.assert_same_size(rhs);
        Matrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.assert_same_size(rhs);
        Matrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            size: self.size,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    /// Exact matrix product. Panics on a size mismatch.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.assert_same_size(rhs);
        let p = self.size;
        Matrix::from_fn(p, |i, k| {
            (1..=p)
                .filter_map(|j| {
                    let a = self.get(i, j);
                    let b = rhs.get(j, k);
                    if a.is_zero() || b.is_zero() {
                        None
                    } else {
                        Some(a * b)
                    }
                })
                .sum()
        })
    }
}

impl fmt::Display for Matrix {
    /// `p` lines of `p` space-separated rationals, right-aligned for diffing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        let width = strings.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.size {
            for j in 0..self.size {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", strings[i * self.size + j])?;
            }
            if i + 1 < self.size {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})\n{}", self.size, self.size, self)
    }
}

impl FromStr for Matrix {
    type Err = Error;

    /// Parses the text form: `p` lines of `p` whitespace-separated rationals.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<Vec<Rational>> = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|line| line.split_whitespace().map(str::parse).collect())
            .collect::<Result<_>>()?;
        Matrix::from_rows(rows)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    size: usize,
    entries: Vec<Vec<Rational>>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = (1..=self.size)
            .map(|i| (1..=self.size).map(|j| self.get(i, j).clone()).collect())
            .collect();
        MatrixRepr {
            size: self.size,
            entries: rows,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        if repr.entries.len() != repr.size {
            return Err(serde::de::Error::custom(format!(
                "expected {} rows, got {}",
                repr.size,
                repr.entries.len()
            )));
        }
        Matrix::from_rows(repr.entries).map_err(serde::de::Error::custom)
    }
}
