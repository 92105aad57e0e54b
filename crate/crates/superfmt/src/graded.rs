//! Formats (gradings) and graded matrix operations.
//!
//! A *format* is the sign pattern of the diagonal involution ε: position `i`
//! is even when `signs[i] = +1` and odd when `signs[i] = -1`. The parity of
//! the label is `α(i) = 0` or `1` accordingly, and an entry `M_ij` has degree
//! `α(i) + α(j) mod 2`. Every graded operation (supertrace, supertranspose,
//! homogeneous decomposition, the graded commutator) is driven by the format
//! attached to the matrix.
//!
//! Two supertranspose conventions exist in the literature, differing by a
//! sign on the odd entries. This crate adopts
//! `(M^sT)_ij = (-1)^{α(i)(α(j)+1)} M_ji` as the primary rule
//! ([`GradedMatrix::supertranspose`]) and exposes the dual rule with exponent
//! `α(j)(α(i)+1)` separately ([`GradedMatrix::supertranspose_dual`]); the two
//! are never merged silently. Both satisfy `(M^sT)^sT = Ad_ε M` and
//! `[M,N}^sT = -[M^sT, N^sT}`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// The sign vector of a diagonal involution ε; defines a grading of size `p`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FormatRepr", into = "FormatRepr")]
pub struct Format {
    signs: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
struct FormatRepr {
    signs: Vec<i64>,
}

impl TryFrom<FormatRepr> for Format {
    type Error = Error;
    fn try_from(repr: FormatRepr) -> Result<Self> {
        Format::new(repr.signs)
    }
}

impl From<Format> for FormatRepr {
    fn from(fmt: Format) -> FormatRepr {
        FormatRepr {
            signs: fmt.signs.iter().map(|&s| s as i64).collect(),
        }
    }
}

impl Format {
    /// Builds a format from ±1 signs. Errors on anything else or on an empty
    /// list.
    pub fn new(signs: impl IntoIterator<Item = i64>) -> Result<Self> {
        let signs: Vec<i8> = signs
            .into_iter()
            .map(|s| match s {
                1 => Ok(1i8),
                -1 => Ok(-1i8),
                other => Err(Error::InvalidSign(other)),
            })
            .collect::<Result<_>>()?;
        if signs.is_empty() {
            return Err(Error::WrongEntryCount {
                expected: 1,
                actual: 0,
            });
        }
        Ok(Format { signs })
    }

    /// The block format of `gl(n|m)`: `n` even positions followed by `m` odd
    /// ones.
    pub fn block(n: usize, m: usize) -> Self {
        assert!(n + m >= 1, "empty format");
        let mut signs = vec![1i8; n];
        signs.extend(std::iter::repeat_n(-1i8, m));
        Format { signs }
    }

    /// A strictly alternating format of size `p` whose first sign is
    /// `first` (+1 or -1).
    pub fn alternating(p: usize, first: i64) -> Result<Self> {
        let first = match first {
            1 => 1i8,
            -1 => -1i8,
            other => return Err(Error::InvalidSign(other)),
        };
        if p == 0 {
            return Err(Error::WrongEntryCount {
                expected: 1,
                actual: 0,
            });
        }
        Ok(Format {
            signs: (0..p)
                .map(|i| if i % 2 == 0 { first } else { -first })
                .collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.signs.len()
    }

    /// Sign at 1-based position `i` (+1 or -1).
    pub fn sign(&self, i: usize) -> i64 {
        assert!(i >= 1 && i <= self.signs.len(), "index {i} out of range");
        self.signs[i - 1] as i64
    }

    /// Label parity at 1-based position `i`: 0 for even, 1 for odd.
    pub fn parity(&self, i: usize) -> u8 {
        if self.sign(i) == 1 {
            0
        } else {
            1
        }
    }

    /// Degree of the entry slot `(i, j)`: `α(i) + α(j) mod 2`.
    pub fn entry_parity(&self, i: usize, j: usize) -> u8 {
        (self.parity(i) + self.parity(j)) % 2
    }

    /// The involution ε as a diagonal matrix.
    pub fn involution_matrix(&self) -> Matrix {
        Matrix::from_fn(self.size(), |i, j| {
            if i == j {
                Rational::from(self.sign(i))
            } else {
                Rational::zero()
            }
        })
    }

    /// Number of adjacent sign changes in the sign vector.
    pub fn sign_changes(&self) -> usize {
        self.signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// True when the signs alternate strictly at every step.
    pub fn alternates(&self) -> bool {
        self.sign_changes() == self.size() - 1
    }

    /// Number of even (+1) positions.
    pub fn even_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s == 1).count()
    }

    /// Number of odd (-1) positions.
    pub fn odd_count(&self) -> usize {
        self.size() - self.even_count()
    }

    /// Reads a diagonal ±1 matrix back into a format; errors when the matrix
    /// is not of that shape.
    pub fn from_involution_matrix(m: &Matrix) -> Result<Self> {
        let p = m.size();
        let one = Rational::one();
        let minus_one = -&one;
        let mut signs = Vec::with_capacity(p);
        for i in 1..=p {
            for j in 1..=p {
                let v = m.get(i, j);
                if i == j {
                    if *v == one {
                        signs.push(1i64);
                    } else if *v == minus_one {
                        signs.push(-1i64);
                    } else {
                        return Err(Error::RealizationChange);
                    }
                } else if !v.is_zero() {
                    return Err(Error::RealizationChange);
                }
            }
        }
        Format::new(signs)
    }
}

impl fmt::Display for Format {
    /// Compact sign string, e.g. `+-+-+`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            f.write_str(if s == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Format({self})")
    }
}

impl FromStr for Format {
    type Err = Error;

    /// Parses a sign string such as `+-+-+`.
    fn from_str(s: &str) -> Result<Self> {
        let signs: Vec<i64> = s
            .trim()
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(Error::Parse(format!("invalid sign character {other:?}"))),
            })
            .collect::<Result<_>>()?;
        Format::new(signs)
    }
}

/// A square rational matrix together with the format that grades it.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedMatrix {
    format: Format,
    matrix: Matrix,
}

impl GradedMatrix {
    pub fn new(matrix: Matrix, format: Format) -> Result<Self> {
        if matrix.size() != format.size() {
            return Err(Error::SizeMismatch {
                left: matrix.size(),
                right: format.size(),
            });
        }
        Ok(GradedMatrix { format, matrix })
    }

    pub fn zero(format: Format) -> Self {
        GradedMatrix {
            matrix: Matrix::zero(format.size()),
            format,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn format(&self) -> &Format {
        &self.format
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    fn assert_same_format(&self, other: &GradedMatrix) {
        assert_eq!(
            self.format, other.format,
            "operands carry different formats"
        );
    }

    fn with_matrix(&self, matrix: Matrix) -> GradedMatrix {
        GradedMatrix {
            format: self.format.clone(),
            matrix,
        }
    }

    /// `Ad_ε M = ε M ε^{-1}`: fixes even entries, negates odd ones.
    pub fn ad_eps(&self) -> GradedMatrix {
        let f = &self.format;
        self.with_matrix(Matrix::from_fn(self.size(), |i, j| {
            let v = self.matrix.get(i, j).clone();
            if f.entry_parity(i, j) == 0 {
                v
            } else {
                -v
            }
        }))
    }

    /// Splits into `(even, odd)` homogeneous parts; `even + odd = M`, and
    /// `Ad_ε` fixes the even part while negating the odd one.
    pub fn homogeneous_parts(&self) -> (GradedMatrix, GradedMatrix) {
        (self.part(0), self.part(1))
    }

    /// The part of the matrix with entries of the given degree (0 or 1).
    pub fn part(&self, degree: u8) -> GradedMatrix {
        let f = &self.format;
        self.with_matrix(Matrix::from_fn(self.size(), |i, j| {
            if f.entry_parity(i, j) == degree % 2 {
                self.matrix.get(i, j).clone()
            } else {
                Rational::zero()
            }
        }))
    }

    pub fn is_even(&self) -> bool {
        self.part(1).is_zero()
    }

    pub fn is_odd(&self) -> bool {
        self.part(0).is_zero()
    }

    /// Degree of a homogeneous matrix; `None` when both parts are nonzero.
    /// The zero matrix counts as even.
    pub fn homogeneous_degree(&self) -> Option<u8> {
        match (self.is_even(), self.is_odd()) {
            (true, _) => Some(0),
            (false, true) => Some(1),
            (false, false) => None,
        }
    }

    /// `str M = tr εM = Σ_i signs[i] M_ii`.
    pub fn supertrace(&self) -> Rational {
        (1..=self.size())
            .map(|i| {
                let v = self.matrix.get(i, i);
                if self.format.sign(i) == 1 {
                    v.clone()
                } else {
                    -v
                }
            })
            .sum()
    }

    /// The graded commutator `[M, N} = MN - (-1)^{deg M deg N} NM`, extended
    /// to non-homogeneous arguments by bilinearity over the homogeneous
    /// decomposition.
    ///
    /// Entrywise this reads
    /// `[M, N}_ik = Σ_j (M_ij N_jk - (-1)^{(α_i+α_j)(α_j+α_k)} N_ij M_jk)`,
    /// which is exactly the bilinear extension. Panics when the formats
    /// differ.
    pub fn graded_commutator(&self, other: &GradedMatrix) -> GradedMatrix {
        self.assert_same_format(other);
        let p = self.size();
        let f = &self.format;
        self.with_matrix(Matrix::from_fn(p, |i, k| {
            (1..=p)
                .map(|j| {
                    let mn = {
                        let a = self.matrix.get(i, j);
                        let b = other.matrix.get(j, k);
                        if a.is_zero() || b.is_zero() {
                            Rational::zero()
                        } else {
                            a * b
                        }
                    };
                    let nm = {
                        let a = other.matrix.get(i, j);
                        let b = self.matrix.get(j, k);
                        if a.is_zero() || b.is_zero() {
                            Rational::zero()
                        } else {
                            a * b
                        }
                    };
                    let sign_exp = f.entry_parity(i, j) * f.entry_parity(j, k);
                    if sign_exp.is_multiple_of(2) {
                        mn - nm
                    } else {
                        mn + nm
                    }
                })
                .sum()
        }))
    }

    /// Supertranspose with the primary sign rule
    /// `(M^sT)_ij = (-1)^{α(i)(α(j)+1)} M_ji`.
    pub fn supertranspose(&self) -> GradedMatrix {
        let f = &self.format;
        self.with_matrix(Matrix::from_fn(self.size(), |i, j| {
            let v = self.matrix.get(j, i).clone();
            if (f.parity(i) * (f.parity(j) + 1)).is_multiple_of(2) {
                v
            } else {
                -v
            }
        }))
    }

    /// Supertranspose with the dual sign rule
    /// `(M^*)_ij = (-1)^{α(j)(α(i)+1)} M_ji`; differs from
    /// [`supertranspose`](Self::supertranspose) by a sign on odd entries,
    /// `M^* = Ad_ε M^sT`.
    pub fn supertranspose_dual(&self) -> GradedMatrix {
        let f = &self.format;
        self.with_matrix(Matrix::from_fn(self.size(), |i, j| {
            let v = self.matrix.get(j, i).clone();
            if (f.parity(j) * (f.parity(i) + 1)).is_multiple_of(2) {
                v
            } else {
                -v
            }
        }))
    }

    pub fn scale(&self, c: &Rational) -> GradedMatrix {
        self.with_matrix(self.matrix.scale(c))
    }

    /// Plain product of the underlying matrices, kept in the same format.
    pub fn product(&self, other: &GradedMatrix) -> GradedMatrix {
        self.assert_same_format(other);
        self.with_matrix(&self.matrix * &other.matrix)
    }
}

impl Add for &GradedMatrix {
    type Output = GradedMatrix;
    fn add(self, rhs: &GradedMatrix) -> GradedMatrix {
        self.assert_same_format(rhs);
        self.with_matrix(&self.matrix + &rhs.matrix)
    }
}

impl Sub for &GradedMatrix {
    type Output = GradedMatrix;
    fn sub(self, rhs: &GradedMatrix) -> GradedMatrix {
        self.assert_same_format(rhs);
        self.with_matrix(&self.matrix - &rhs.matrix)
    }
}

impl Neg for &GradedMatrix {
    type Output = GradedMatrix;
    fn neg(self) -> GradedMatrix {
        self.with_matrix(-&self.matrix)
    }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "format {}", self.format)?;
        write!(f, "{}", self.matrix)
    }
}

impl fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedMatrix(format {})\n{}", self.format, self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn unit(i: usize, j: usize, p: usize) -> Matrix {
        Matrix::unit_entry(i, j, p).unwrap()
    }

    fn gm(m: Matrix, fmt: &Format) -> GradedMatrix {
        GradedMatrix::new(m, fmt.clone()).unwrap()
    }

    #[test]
    fn parity_of_standard_formats() {
        // Block gl(3|2).
        let block = Format::block(3, 2);
        assert_eq!(block.to_string(), "+++--");
        assert_eq!(block.parity(4), 1);
        assert_eq!(block.parity(1), 0);

        // Alternating gl(n+1|n) format starts even.
        let diag = Format::alternating(5, 1).unwrap();
        assert_eq!(diag.to_string(), "+-+-+");
        assert_eq!(diag.parity(2), 1);

        // The odd-first alternating format starts odd.
        let odd_first = Format::alternating(3, -1).unwrap();
        assert_eq!(odd_first.parity(1), 1);
        assert_eq!(odd_first.parity(2), 0);
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<crate::rational::Rational>();
        assert_send_sync::<Matrix>();
        assert_send_sync::<Format>();
        assert_send_sync::<GradedMatrix>();
    }

    #[test]
    fn format_parse_and_serde() {
        let f: Format = "+-+-+".parse().unwrap();
        assert_eq!(f, Format::alternating(5, 1).unwrap());
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"signs":[1,-1,1,-1,1]}"#);
        let back: Format = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Format>(r#"{"signs":[1,0]}"#).is_err());
    }

    #[test]
    fn homogeneous_parts_split() {
        // E_12 in the alternating gl(2|1) format is odd.
        let fmt = Format::alternating(3, 1).unwrap();
        let m = gm(unit(1, 2, 3), &fmt);
        let (even, odd) = m.homogeneous_parts();
        assert!(even.is_zero());
        assert_eq!(odd, m);

        // A purely even matrix has vanishing odd part.
        let d = gm(Matrix::identity(3), &fmt);
        let (even, odd) = d.homogeneous_parts();
        assert_eq!(even, d);
        assert!(odd.is_zero());

        // Parts recombine and Ad_eps acts as +1 / -1 on them.
        let mixed = gm(&unit(1, 2, 3) + &unit(1, 3, 3), &fmt);
        let (even, odd) = mixed.homogeneous_parts();
        assert_eq!(&even + &odd, mixed);
        assert_eq!(even.ad_eps(), even);
        assert_eq!(odd.ad_eps(), -&odd);
        // Projections are idempotent.
        assert_eq!(even.part(0), even);
        assert!(even.part(1).is_zero());
    }

    #[test]
    fn supertrace_block_and_diagonal() {
        // Identity in block gl(n|m) has supertrace n - m.
        let id = gm(Matrix::identity(5), &Format::block(3, 2));
        assert_eq!(id.supertrace(), r(1));

        // diag(1,2,3,4,5) in the alternating format: 1 - 2 + 3 - 4 + 5 = 3.
        let entries: Vec<Rational> = (1..=5).map(r).collect();
        let d = gm(
            Matrix::diag_band(0, &entries, 5).unwrap(),
            &Format::alternating(5, 1).unwrap(),
        );
        assert_eq!(d.supertrace(), r(3));
    }

    #[test]
    fn graded_commutator_odd_odd_is_anticommutator() {
        // {J_+, J_-} = H at n = 2 in the alternating format.
        let fmt = Format::alternating(5, 1).unwrap();
        let j_plus = gm(
            Matrix::diag_band(1, &[r(2), r(-1), r(1), r(-2)], 5).unwrap(),
            &fmt,
        );
        let j_minus = gm(
            Matrix::diag_band(-1, &[r(1), r(1), r(1), r(1)], 5).unwrap(),
            &fmt,
        );
        assert!(j_plus.is_odd());
        let h = j_plus.graded_commutator(&j_minus);
        let expect = gm(
            Matrix::diag_band(0, &[r(2), r(1), r(0), r(-1), r(-2)], 5).unwrap(),
            &fmt,
        );
        assert_eq!(h, expect);

        // {J_+, M_1} = 0 at n = 2.
        let m1 = gm(
            Matrix::diag_band(1, &[r(2), r(1), r(1), r(2)], 5).unwrap(),
            &fmt,
        );
        assert!(j_plus.graded_commutator(&m1).is_zero());
    }

    #[test]
    fn graded_commutator_vanishing_cartan_entry() {
        // [h_1, e_1} = 0 for the n = 1 alternating basis: the (1,1) Cartan
        // entry vanishes for an odd simple root.
        let fmt = Format::alternating(3, 1).unwrap();
        let h1 = gm(&unit(1, 1, 3) + &unit(2, 2, 3), &fmt);
        let e1 = gm(unit(1, 2, 3), &fmt);
        assert!(h1.graded_commutator(&e1).is_zero());
    }

    #[test]
    fn supertranspose_block_rule() {
        // Block [[A,B],[C,D]] goes to [[A^T, C^T], [-B^T, D^T]].
        let fmt = Format::block(1, 1);
        let m = gm(
            Matrix::from_rows(vec![vec![r(1), r(2)], vec![r(3), r(4)]]).unwrap(),
            &fmt,
        );
        let st = m.supertranspose();
        let expect = gm(
            Matrix::from_rows(vec![vec![r(1), r(3)], vec![r(-2), r(4)]]).unwrap(),
            &fmt,
        );
        assert_eq!(st, expect);

        // e_1 = E_25 + E_42 in block (3|2) format maps to -E_52 + E_24.
        let fmt = Format::block(3, 2);
        let e1 = gm(&unit(2, 5, 5) + &unit(4, 2, 5), &fmt);
        let expect = gm(&unit(2, 4, 5) - &unit(5, 2, 5), &fmt);
        assert_eq!(e1.supertranspose(), expect);
    }

    #[test]
    fn dual_convention_differs_by_odd_sign() {
        let fmt = Format::alternating(4, 1).unwrap();
        let m = gm(
            Matrix::from_fn(4, |i, j| Rational::from((3 * i + j) as i64)),
            &fmt,
        );
        let st = m.supertranspose();
        let dual = m.supertranspose_dual();
        // The dual rule is Ad_eps applied after the primary rule.
        assert_eq!(dual, st.ad_eps());
        assert_ne!(dual, st);
        // In the alternating even-first format the dual rule matches the
        // index formula (-1)^{i(i+j)} M_ji.
        for i in 1..=4usize {
            for j in 1..=4usize {
                let sign = if (i * (i + j)) % 2 == 0 { 1 } else { -1 };
                let expect = m.matrix().get(j, i) * &r(sign);
                assert_eq!(*dual.matrix().get(i, j), expect, "at ({i},{j})");
            }
        }
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-5i64..=5, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn arb_format(p: usize) -> impl Strategy<Value = Format> {
        proptest::collection::vec(proptest::bool::ANY, p).prop_map(|bits| {
            Format::new(bits.into_iter().map(|b| if b { 1 } else { -1 })).unwrap()
        })
    }

    fn arb_graded(p: usize) -> impl Strategy<Value = (GradedMatrix, GradedMatrix)> {
        (
            arb_format(p),
            proptest::collection::vec(arb_rational(), p * p),
            proptest::collection::vec(arb_rational(), p * p),
        )
            .prop_map(move |(fmt, a, b)| {
                let mut a = a.into_iter();
                let mut b = b.into_iter();
                let ma = Matrix::from_fn(p, |_, _| a.next().unwrap());
                let mb = Matrix::from_fn(p, |_, _| b.next().unwrap());
                (
                    GradedMatrix::new(ma, fmt.clone()).unwrap(),
                    GradedMatrix::new(mb, fmt).unwrap(),
                )
            })
    }

    proptest! {
        #[test]
        fn supertrace_kills_graded_commutators(
            (m, n) in (2usize..=6).prop_flat_map(arb_graded)
        ) {
            prop_assert!(m.graded_commutator(&n).supertrace().is_zero());
        }

        #[test]
        fn double_supertranspose_is_ad_eps(
            (m, _) in (2usize..=6).prop_flat_map(arb_graded)
        ) {
            prop_assert_eq!(m.supertranspose().supertranspose(), m.ad_eps());
            prop_assert_eq!(m.supertranspose_dual().supertranspose_dual(), m.ad_eps());
        }

        #[test]
        fn supertranspose_antihomomorphism_on_homogeneous(
            (m, n) in (2usize..=6).prop_flat_map(arb_graded),
            dm in 0u8..2,
            dn in 0u8..2,
        ) {
            let m = m.part(dm);
            let n = n.part(dn);
            let lhs = m.product(&n).supertranspose();
            let mut rhs = n.supertranspose().product(&m.supertranspose());
            if dm * dn % 2 == 1 {
                rhs = -&rhs;
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn supertranspose_negates_graded_commutator(
            (m, n) in (2usize..=6).prop_flat_map(arb_graded)
        ) {
            let lhs = m.graded_commutator(&n).supertranspose();
            let rhs = -&m.supertranspose().graded_commutator(&n.supertranspose());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn commutator_matches_explicit_bilinear_extension(
            (m, n) in (2usize..=5).prop_flat_map(arb_graded)
        ) {
            // Independent route: decompose into homogeneous parts and combine
            // the four products with explicit signs.
            let p = m.size();
            let mut acc = Matrix::zero(p);
            for dm in 0..2u8 {
                for dn in 0..2u8 {
                    let a = m.part(dm);
                    let b = n.part(dn);
                    let ab = &a.matrix * &b.matrix;
                    let ba = &b.matrix * &a.matrix;
                    let term = if dm * dn % 2 == 0 { &ab - &ba } else { &ab + &ba };
                    acc = &acc + &term;
                }
            }
            let bracket = m.graded_commutator(&n);
            prop_assert_eq!(bracket.matrix(), &acc);
        }

        #[test]
        fn alternating_supertrace_alternates(
            diag in proptest::collection::vec(arb_rational(), 7)
        ) {
            let fmt = Format::alternating(7, 1).unwrap();
            let m = GradedMatrix::new(
                Matrix::diag_band(0, &diag, 7).unwrap(), fmt.clone()).unwrap();
            let expect: Rational = diag.iter().enumerate().map(|(t, a)| {
                if t % 2 == 0 { a.clone() } else { -a }
            }).sum();
            prop_assert_eq!(m.supertrace(), expect);
        }
    }
}
