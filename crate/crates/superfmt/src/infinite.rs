//! Windowed truncations of the infinite-dimensional limits `sl∞` and `osp∞`.
//!
//! Rows and columns carry integer labels `i, j ∈ [-N, N]` for a window
//! `N >= 1`, with the diagonal-format grading `deg M_ij = i + j mod 2` (the
//! 0-labeled basis vector is even). Truncation is a hard window: entries that
//! would fall outside are simply absent, so every identity between matrices
//! supported in the interior `[-N+1, N-1]` holds exactly, while generators
//! touching the boundary are truncation artifacts and excluded from
//! verification.
//!
//! `osp∞` is spanned by the elements `E_ij - (-1)^{ceil((i-j)/2)} E_{-j,-i}`;
//! its Chevalley basis (`i >= 0`) is
//!
//! ```text
//! e_i = E_{i,i+1} - E_{-i-1,-i}
//! f_i = E_{i+1,i} + E_{-i,-i-1}
//! h_i = E_{i+1,i+1} + E_{i,i} - E_{-i,-i} - E_{-i-1,-i-1}
//! ```
//!
//! while `sl∞` uses the `sl(n+1|n)` diagonal expressions with the index
//! running over all integers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{Format, GradedMatrix};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// A square matrix with integer row/column labels `-N ..= N`, graded by
/// label parity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WindowedMatrix {
    window: i64,
    inner: GradedMatrix,
}

/// The label-parity format of a window: position with label `l` is even
/// exactly when `l` is.
pub fn window_format(window: i64) -> Format {
    assert!(window >= 1, "window must be >= 1");
    Format::new((-window..=window).map(|l| if l.rem_euclid(2) == 0 { 1 } else { -1 }))
        .expect("valid signs")
}

impl WindowedMatrix {
    /// The zero matrix on the window `[-N, N]`.
    pub fn zero(window: i64) -> Self {
        WindowedMatrix {
            window,
            inner: GradedMatrix::zero(window_format(window)),
        }
    }

    /// Wraps an explicit graded matrix; its size must be `2N+1` and its
    /// format the label-parity format of the window.
    pub fn new(window: i64, inner: GradedMatrix) -> Result<Self> {
        if window < 1 || inner.size() != (2 * window + 1) as usize {
            return Err(Error::SizeMismatch {
                left: inner.size(),
                right: (2 * window.max(1) + 1) as usize,
            });
        }
        if *inner.format() != window_format(window) {
            return Err(Error::FormatMismatch);
        }
        Ok(WindowedMatrix { window, inner })
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    /// The underlying graded matrix (1-based indexing via `ι(i) = i + N + 1`).
    pub fn graded(&self) -> &GradedMatrix {
        &self.inner
    }

    fn pos(&self, label: i64) -> usize {
        (label + self.window + 1) as usize
    }

    /// Entry at integer labels; errors outside the window.
    pub fn entry(&self, i: i64, j: i64) -> Result<&Rational> {
        if i.abs() > self.window || j.abs() > self.window {
            return Err(Error::OutsideWindow {
                i,
                j,
                window: self.window,
            });
        }
        Ok(self.inner.matrix().get(self.pos(i), self.pos(j)))
    }

    /// True when every nonzero entry has both labels within `[-bound, bound]`.
    pub fn supported_within(&self, bound: i64) -> bool {
        let n = self.window;
        for i in -n..=n {
            for j in -n..=n {
                if (i.abs() > bound || j.abs() > bound)
                    && !self.entry(i, j).expect("in window").is_zero()
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn supertrace(&self) -> Rational {
        self.inner.supertrace()
    }

    /// Graded commutator; both operands must share the window.
    pub fn graded_commutator(&self, other: &WindowedMatrix) -> WindowedMatrix {
        assert_eq!(self.window, other.window, "windows differ");
        WindowedMatrix {
            window: self.window,
            inner: self.inner.graded_commutator(&other.inner),
        }
    }
}

impl std::ops::Add for &WindowedMatrix {
    type Output = WindowedMatrix;
    fn add(self, rhs: &WindowedMatrix) -> WindowedMatrix {
        assert_eq!(self.window, rhs.window, "windows differ");
        WindowedMatrix {
            window: self.window,
            inner: &self.inner + &rhs.inner,
        }
    }
}

impl std::ops::Sub for &WindowedMatrix {
    type Output = WindowedMatrix;
    fn sub(self, rhs: &WindowedMatrix) -> WindowedMatrix {
        assert_eq!(self.window, rhs.window, "windows differ");
        WindowedMatrix {
            window: self.window,
            inner: &self.inner - &rhs.inner,
        }
    }
}

impl std::ops::Neg for &WindowedMatrix {
    type Output = WindowedMatrix;
    fn neg(self) -> WindowedMatrix {
        WindowedMatrix {
            window: self.window,
            inner: -&self.inner,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct WindowedEntry {
    row: i64,
    col: i64,
    value: Rational,
}

#[derive(Serialize, Deserialize)]
struct WindowedRepr {
    window: i64,
    entries: Vec<WindowedEntry>,
}

impl Serialize for WindowedMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.window;
        let mut entries = Vec::new();
        for i in -n..=n {
            for j in -n..=n {
                let v = self.entry(i, j).expect("in window");
                if !v.is_zero() {
                    entries.push(WindowedEntry {
                        row: i,
                        col: j,
                        value: v.clone(),
                    });
                }
            }
        }
        WindowedRepr { window: n, entries }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WindowedMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = WindowedRepr::deserialize(d)?;
        if repr.window < 1 {
            return Err(serde::de::Error::custom("window must be >= 1"));
        }
        let n = repr.window;
        let p = (2 * n + 1) as usize;
        let mut mat = vec![vec![Rational::zero(); p]; p];
        for e in &repr.entries {
            if e.row.abs() > n || e.col.abs() > n {
                return Err(serde::de::Error::custom(format!(
                    "entry ({}, {}) outside window [-{n}, {n}]",
                    e.row, e.col
                )));
            }
            mat[(e.row + n) as usize][(e.col + n) as usize] = e.value.clone();
        }
        let matrix = Matrix::from_rows(mat).map_err(serde::de::Error::custom)?;
        let inner =
            GradedMatrix::new(matrix, window_format(n)).map_err(serde::de::Error::custom)?;
        Ok(WindowedMatrix { window: n, inner })
    }
}

fn unit(window: i64, i: i64, j: i64) -> Result<WindowedMatrix> {
    if i.abs() > window || j.abs() > window {
        return Err(Error::OutsideWindow { i, j, window });
    }
    let p = (2 * window + 1) as usize;
    let m = Matrix::unit_entry((i + window + 1) as usize, (j + window + 1) as usize, p)?;
    Ok(WindowedMatrix {
        window,
        inner: GradedMatrix::new(m, window_format(window))?,
    })
}

/// Smallest integer `>= k/2`, for integer `k`.
fn ceil_half(k: i64) -> i64 {
    k.div_euclid(2) + if k.rem_euclid(2) == 0 { 0 } else { 1 }
}

/// The spanning element `E_ij - (-1)^{ceil((i-j)/2)} E_{-j,-i}` of `osp∞`,
/// truncated to the window. Errors when either index pair falls outside.
pub fn osp_inf_element(i: i64, j: i64, window: i64) -> Result<WindowedMatrix> {
    let first = unit(window, i, j)?;
    let second = unit(window, -j, -i)?;
    let sign = if ceil_half(i - j).rem_euclid(2) == 0 {
        Rational::one()
    } else {
        Rational::from(-1)
    };
    Ok(WindowedMatrix {
        window,
        inner: &first.inner - &second.inner.scale(&sign),
    })
}

/// Which infinite-dimensional family a windowed Chevalley triple belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InfiniteKind {
    SlInf,
    OspInf,
}

/// The windowed Chevalley triple `(e_i, f_i, h_i)`.
///
/// `sl∞` accepts any integer `i` with `i, i+1` inside the window; `osp∞`
/// requires `i >= 0` and `i+1 <= N`. Errors when the window is too small.
pub fn inf_chevalley(
    kind: InfiniteKind,
    i: i64,
    window: i64,
) -> Result<(WindowedMatrix, WindowedMatrix, WindowedMatrix)> {
    let fits = |l: i64| l.abs() <= window;
    match kind {
        InfiniteKind::SlInf => {
            if !fits(i) || !fits(i + 1) {
                return Err(Error::WindowTooSmall { index: i, window });
            }
            // (-1)^{i+1} with integer i.
            let s = if i.rem_euclid(2) == 0 {
                Rational::from(-1)
            } else {
                Rational::one()
            };
            let e = unit(window, i, i + 1)?.inner.scale(&s);
            let f = unit(window, i + 1, i)?.inner;
            let h = (&unit(window, i, i)?.inner + &unit(window, i + 1, i + 1)?.inner).scale(&s);
            let wrap = |inner| WindowedMatrix { window, inner };
            Ok((wrap(e), wrap(f), wrap(h)))
        }
        InfiniteKind::OspInf => {
            if i < 0 {
                return Err(Error::GradeOutOfRange { grade: i });
            }
            if !fits(i + 1) {
                return Err(Error::WindowTooSmall { index: i, window });
            }
            let e = &unit(window, i, i + 1)? - &unit(window, -i - 1, -i)?;
            let f = &unit(window, i + 1, i)? + &unit(window, -i, -i - 1)?;
            let h = &(&unit(window, i + 1, i + 1)? + &unit(window, i, i)?)
                + &(-&(&unit(window, -i, -i)? + &unit(window, -i - 1, -i - 1)?));
            Ok((e, f, h))
        }
    }
}
