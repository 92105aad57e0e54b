//! Format-changing transformations.
//!
//! A change of ordered homogeneous basis acts on coordinate vectors as
//! `v' = Fv` and on matrices by the similarity transformation
//! `M' = F M F^{-1}`; the involution transports the same way,
//! `ε' = F ε F^{-1}`. When the transported involution is again diagonal with
//! entries ±1 the transformation relates two matrix *formats*; otherwise it
//! produces a different matrix realization altogether, which
//! [`change_format`] rejects.
//!
//! Two families of built-in changers cover everything needed here:
//!
//! * plain permutations `F_ij = δ_{P(i)j}` ([`FormatChanger::from_permutation`]),
//!   including the order-preserving alternating arrangement of a block format
//!   ([`alternating_perm`]);
//! * the signed permutations `L` relating the block and diagonal realizations
//!   of `osp(2m±1|2m)` ([`osp_l`]). The classical convention writes that
//!   conversion as `M_diag = L^{-1} M_block L`, so the changer returned by
//!   [`osp_l`] uses `L^T = L^{-1}` as its coordinate map; the arrangement
//!   matrix `L` itself is available from [`osp_arrangement`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{Format, GradedMatrix};
use crate::linsolve;
use crate::matrix::Matrix;
use crate::rational::Rational;

/// A bijection of `{1, ..., p}`, stored as the 1-based image list.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PermutationRepr", into = "PermutationRepr")]
pub struct Permutation {
    map: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PermutationRepr {
    perm: Vec<usize>,
}

impl TryFrom<PermutationRepr> for Permutation {
    type Error = Error;
    fn try_from(repr: PermutationRepr) -> Result<Self> {
        Permutation::new(repr.perm)
    }
}

impl From<Permutation> for PermutationRepr {
    fn from(p: Permutation) -> Self {
        PermutationRepr { perm: p.map }
    }
}

impl Permutation {
    /// Builds a permutation from its image list `[P(1), ..., P(p)]`.
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let p = map.len();
        let mut seen = vec![false; p];
        for &image in &map {
            if image < 1 || image > p || seen[image - 1] {
                return Err(Error::NotAPermutation { size: p });
            }
            seen[image - 1] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(p: usize) -> Self {
        Permutation {
            map: (1..=p).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    /// `P(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &image) in self.map.iter().enumerate() {
            inv[image - 1] = i + 1;
        }
        Permutation { map: inv }
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Permutation({:?})", self.map)
    }
}

/// How a format changer's matrix is structured.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChangerKind {
    /// Exactly one ±1 entry per row and column; the inverse is the transpose.
    SignedPermutation,
    /// Any other invertible matrix.
    General,
}

/// An invertible coordinate transformation `v' = Fv` used to move between
/// matrix realizations; matrices transform as `M' = F M F^{-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormatChanger {
    mat: Matrix,
    inv: Matrix,
    kind: ChangerKind,
}

impl FormatChanger {
    /// The permutation matrix `F_ij = δ_{P(i)j}`, so that `(Fv)_i = v_{P(i)}`
    /// and `(F M F^{-1})_ij = M_{P(i)P(j)}`.
    pub fn from_permutation(perm: &Permutation) -> Self {
        let p = perm.size();
        let mat = Matrix::from_fn(p, |i, j| {
            if perm.apply(i) == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let inv = mat.transpose();
        FormatChanger {
            mat,
            inv,
            kind: ChangerKind::SignedPermutation,
        }
    }

    /// Wraps an arbitrary invertible matrix. Errors when singular, and
    /// detects the signed-permutation shape so the transpose shortcut and
    /// exactness guarantees apply.
    pub fn from_matrix(mat: Matrix) -> Result<Self> {
        if is_signed_permutation(&mat) {
            let inv = mat.transpose();
            return Ok(FormatChanger {
                mat,
                inv,
                kind: ChangerKind::SignedPermutation,
            });
        }
        let inv = linsolve::invert(&mat).ok_or(Error::Singular)?;
        Ok(FormatChanger {
            mat,
            inv,
            kind: ChangerKind::General,
        })
    }

    /// The coordinate map `F`.
    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    /// `F^{-1}` (the transpose for signed permutations).
    pub fn inverse_matrix(&self) -> &Matrix {
        &self.inv
    }

    pub fn kind(&self) -> ChangerKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.mat.size()
    }

    /// The changer for the opposite direction.
    pub fn inverted(&self) -> FormatChanger {
        FormatChanger {
            mat: self.inv.clone(),
            inv: self.mat.clone(),
            kind: self.kind,
        }
    }

    /// `F M F^{-1}` on a plain matrix.
    pub fn conjugate(&self, m: &Matrix) -> Matrix {
        &(&self.mat * m) * &self.inv
    }

    /// Transports a format: `ε' = F ε F^{-1}` must again be diagonal ±1,
    /// otherwise this is a change of realization and an error is returned.
    pub fn transport_format(&self, fmt: &Format) -> Result<Format> {
        if fmt.size() != self.size() {
            return Err(Error::SizeMismatch {
                left: fmt.size(),
                right: self.size(),
            });
        }
        Format::from_involution_matrix(&self.conjugate(&fmt.involution_matrix()))
    }
}

fn is_signed_permutation(m: &Matrix) -> bool {
    let p = m.size();
    let one = Rational::one();
    let minus_one = -&one;
    let mut col_used = vec![false; p];
    for i in 1..=p {
        let mut hits = 0;
        for j in 1..=p {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            if *v != one && *v != minus_one {
                return false;
            }
            if col_used[j - 1] {
                return false;
            }
            col_used[j - 1] = true;
            hits += 1;
        }
        if hits != 1 {
            return false;
        }
    }
    true
}

/// Conjugates a graded matrix by a format changer and transports its format;
/// the supertrace is preserved. Errors when the transported involution is
/// not diagonal ±1 or on a size mismatch.
pub fn change_format(m: &GradedMatrix, f: &FormatChanger) -> Result<GradedMatrix> {
    if m.size() != f.size() {
        return Err(Error::SizeMismatch {
            left: m.size(),
            right: f.size(),
        });
    }
    let new_format = f.transport_format(m.format())?;
    GradedMatrix::new(f.conjugate(m.matrix()), new_format)
}

/// True when `f` preserves `fmt`, i.e. is even with respect to it (odd part
/// zero). Built-in changers are always invertible, so evenness is the whole
/// condition.
pub fn preserves_format(f: &FormatChanger, fmt: &Format) -> bool {
    if f.size() != fmt.size() {
        return false;
    }
    let graded = GradedMatrix::new(f.matrix().clone(), fmt.clone()).expect("sizes match");
    graded.is_even()
}

/// The order-preserving alternating arrangement of a block format with
/// `n_even` even and `n_odd` odd basis vectors.
///
/// Supported shapes are `|n_even - n_odd| <= 1`; the interleaving starts with
/// the larger side, and with the even side on a tie. For `gl(n+1|n)` this is
/// the permutation `P(2i+1) = i+1`, `P(2i) = n+i+1`.
pub fn alternating_perm(n_even: usize, n_odd: usize) -> Result<Permutation> {
    let p = n_even + n_odd;
    if p == 0 || n_even.abs_diff(n_odd) > 1 {
        return Err(Error::UnsupportedDimensions { n_even, n_odd });
    }
    let even_first = n_even >= n_odd;
    let mut map = Vec::with_capacity(p);
    let (first_count, second_offset) = if even_first {
        (n_even, n_even)
    } else {
        (n_odd, 0)
    };
    let first_offset = if even_first { 0 } else { n_even };
    let mut a = 0; // index into the side placed at odd positions 1,3,5,...
    let mut b = 0; // index into the other side
    for pos in 1..=p {
        if pos % 2 == 1 {
            a += 1;
            debug_assert!(a <= first_count);
            map.push(first_offset + a);
        } else {
            b += 1;
            map.push(second_offset + b);
        }
    }
    Permutation::new(map)
}

/// Which orthosymplectic family a block/diagonal arrangement refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OspVariant {
    /// `osp(2m-1|2m)`, size `4m-1`.
    Minus,
    /// `osp(2m+1|2m)`, size `4m+1`.
    Plus,
}

/// The signed-permutation arrangement matrix `L` relating the block and
/// diagonal realizations of `osp(2m±1|2m)`: `M_diag = L^{-1} M_block L`,
/// with `L^{-1} = L^T`.
pub fn osp_arrangement(variant: OspVariant, m: usize) -> Result<Matrix> {
    if m < 1 {
        return Err(Error::Unsupported("osp parameter m must be >= 1".into()));
    }
    let mut acc;
    match variant {
        OspVariant::Minus => {
            let p = 4 * m - 1;
            acc = Matrix::zero(p);
            let sign = |odd: bool| if odd { Rational::from(-1) } else { Rational::one() };
            for i in 0..=m - 1 {
                // (-1)^{i+1} E_{2m+i, 2i+1}
                let e = Matrix::unit_entry(2 * m + i, 2 * i + 1, p)?.scale(&sign(i % 2 == 0));
                acc = &acc + &e;
            }
            for i in 1..=m {
                // (-1)^i E_{2m-i, 2i}
                let e = Matrix::unit_entry(2 * m - i, 2 * i, p)?.scale(&sign(i % 2 == 1));
                acc = &acc + &e;
            }
            for i in 1..=m {
                // (-1)^{m+1} E_{4m-i, 2m+2i-1}
                let e = Matrix::unit_entry(4 * m - i, 2 * m + 2 * i - 1, p)?
                    .scale(&sign(m.is_multiple_of(2)));
                acc = &acc + &e;
            }
            for i in 1..m {
                // (-1)^m E_{m-i, 2m+2i}
                let e = Matrix::unit_entry(m - i, 2 * m + 2 * i, p)?.scale(&sign(m % 2 == 1));
                acc = &acc + &e;
            }
        }
        OspVariant::Plus => {
            let p = 4 * m + 1;
            acc = Matrix::zero(p);
            let sign = |odd: bool| if odd { Rational::from(-1) } else { Rational::one() };
            for i in 0..=m {
                // (-1)^i E_{2m+1-i, 2i+1}
                let e = Matrix::unit_entry(2 * m + 1 - i, 2 * i + 1, p)?.scale(&sign(i % 2 == 1));
                acc = &acc + &e;
            }
            for i in 1..=m {
                // (-1)^i E_{2m+1+i, 2i}
                let e = Matrix::unit_entry(2 * m + 1 + i, 2 * i, p)?.scale(&sign(i % 2 == 1));
                acc = &acc + &e;
                // (-1)^{m+1} E_{4m+2-i, 2m+2i}
                let e = Matrix::unit_entry(4 * m + 2 - i, 2 * m + 2 * i, p)?
                    .scale(&sign(m.is_multiple_of(2)));
                acc = &acc + &e;
                // (-1)^m E_{m+1-i, 2m+1+2i}
                let e = Matrix::unit_entry(m + 1 - i, 2 * m + 1 + 2 * i, p)?
                    .scale(&sign(m % 2 == 1));
                acc = &acc + &e;
            }
        }
    }
    Ok(acc)
}

/// The block-to-diagonal format changer for `osp(2m±1|2m)`.
///
/// Its coordinate map is `L^T = L^{-1}`, where `L` is the arrangement matrix
/// of [`osp_arrangement`]; conjugating a block-format element therefore
/// computes `L^{-1} M L`, which carries the block Chevalley basis onto the
/// diagonal one.
pub fn osp_l(variant: OspVariant, m: usize) -> Result<FormatChanger> {
    let arrangement = osp_arrangement(variant, m)?;
    let inv = arrangement.clone();
    Ok(FormatChanger {
        mat: arrangement.transpose(),
        inv,
        kind: ChangerKind::SignedPermutation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn unit(i: usize, j: usize, p: usize) -> Matrix {
        Matrix::unit_entry(i, j, p).unwrap()
    }

    #[test]
    fn perm_matrix_entries() {
        let id = Permutation::identity(3);
        assert_eq!(
            FormatChanger::from_permutation(&id).matrix(),
            &Matrix::identity(3)
        );

        let p = Permutation::new(vec![1, 3, 2]).unwrap();
        let f = FormatChanger::from_permutation(&p);
        let expect = &(&unit(1, 1, 3) + &unit(2, 3, 3)) + &unit(3, 2, 3);
        assert_eq!(f.matrix(), &expect);

        // (Fv)_i = v_{P(i)}: check on a non-involutive permutation.
        let p = Permutation::new(vec![2, 3, 1]).unwrap();
        let f = FormatChanger::from_permutation(&p);
        let v = Matrix::from_rows(vec![
            vec![r(10), r(0), r(0)],
            vec![r(20), r(0), r(0)],
            vec![r(30), r(0), r(0)],
        ])
        .unwrap();
        let fv = f.matrix() * &v;
        for i in 1..=3 {
            assert_eq!(*fv.get(i, 1), r(10 * p.apply(i) as i64));
        }
        // P^{-1} undoes P, and the changer of P^{-1} is the inverse matrix.
        let q = p.inverse();
        for i in 1..=3 {
            assert_eq!(q.apply(p.apply(i)), i);
        }
        assert_eq!(
            FormatChanger::from_permutation(&q).matrix(),
            f.inverse_matrix()
        );
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
    }

    #[test]
    fn permutation_conjugation_relabels_indices() {
        // (F M F^{-1})_ij = M_{P(i)P(j)} and deg transports accordingly.
        let p = Permutation::new(vec![1, 4, 2, 5, 3]).unwrap();
        let f = FormatChanger::from_permutation(&p);
        let m = Matrix::from_fn(5, |i, j| Rational::from((10 * i + j) as i64));
        let m2 = f.conjugate(&m);
        let fmt = Format::block(3, 2);
        let fmt2 = f.transport_format(&fmt).unwrap();
        for i in 1..=5 {
            for j in 1..=5 {
                assert_eq!(m2.get(i, j), m.get(p.apply(i), p.apply(j)));
                assert_eq!(
                    fmt2.entry_parity(i, j),
                    fmt.entry_parity(p.apply(i), p.apply(j)),
                    "degree transport at ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn alternating_perm_block_to_diagonal() {
        // gl(2|1): P = (1, 3, 2).
        let p = alternating_perm(2, 1).unwrap();
        assert_eq!(p.images(), &[1, 3, 2]);

        // gl(3|2): P = (1, 4, 2, 5, 3), and the block involution transports
        // to the strictly alternating one.
        let p = alternating_perm(3, 2).unwrap();
        assert_eq!(p.images(), &[1, 4, 2, 5, 3]);
        let f = FormatChanger::from_permutation(&p);
        let transported = f.transport_format(&Format::block(3, 2)).unwrap();
        assert_eq!(transported, Format::alternating(5, 1).unwrap());

        // gl(2|3) starts with the odd side.
        let p = alternating_perm(2, 3).unwrap();
        let f = FormatChanger::from_permutation(&p);
        let transported = f.transport_format(&Format::block(2, 3)).unwrap();
        assert_eq!(transported, Format::alternating(5, -1).unwrap());

        // gl(2|2): tie starts even.
        let p = alternating_perm(2, 2).unwrap();
        let f = FormatChanger::from_permutation(&p);
        let transported = f.transport_format(&Format::block(2, 2)).unwrap();
        assert_eq!(transported, Format::alternating(4, 1).unwrap());

        assert!(alternating_perm(4, 2).is_err());
    }

    #[test]
    fn change_format_preserves_supertrace() {
        let fmt = Format::block(3, 2);
        let m = GradedMatrix::new(
            Matrix::from_fn(5, |i, j| Rational::new((i * j) as i64, 3)),
            fmt,
        )
        .unwrap();
        let f = FormatChanger::from_permutation(&alternating_perm(3, 2).unwrap());
        let converted = change_format(&m, &f).unwrap();
        assert_eq!(converted.supertrace(), m.supertrace());

        // Round trip restores the original graded matrix exactly.
        let back = change_format(&converted, &f.inverted()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn change_format_rejects_realization_changes() {
        let fmt = Format::block(1, 1);
        let m = GradedMatrix::new(Matrix::identity(2), fmt).unwrap();
        // A shear mixes parities: the transported involution is not diagonal.
        let shear = Matrix::from_rows(vec![vec![r(1), r(1)], vec![r(0), r(1)]]).unwrap();
        let f = FormatChanger::from_matrix(shear).unwrap();
        assert_eq!(f.kind(), ChangerKind::General);
        assert!(matches!(
            change_format(&m, &f),
            Err(Error::RealizationChange)
        ));
    }

    #[test]
    fn osp_arrangement_plus_m1() {
        // L = E_31 - E_23 - E_42 + E_54 - E_15.
        let l = osp_arrangement(OspVariant::Plus, 1).unwrap();
        let expect = &(&(&(&unit(3, 1, 5) - &unit(2, 3, 5)) - &unit(4, 2, 5)) + &unit(5, 4, 5))
            - &unit(1, 5, 5);
        assert_eq!(l, expect);
    }

    #[test]
    fn osp_arrangement_minus_m1() {
        // L = -E_21 - E_12 + E_33.
        let l = osp_arrangement(OspVariant::Minus, 1).unwrap();
        let expect = &(-&(&unit(2, 1, 3) + &unit(1, 2, 3))) + &unit(3, 3, 3);
        assert_eq!(l, expect);
    }

    #[test]
    fn osp_arrangement_is_orthogonal() {
        for m in 1..=4 {
            for variant in [OspVariant::Minus, OspVariant::Plus] {
                let l = osp_arrangement(variant, m).unwrap();
                assert_eq!(
                    &l * &l.transpose(),
                    Matrix::identity(l.size()),
                    "L L^T at {variant:?}, m={m}"
                );
                let changer = osp_l(variant, m).unwrap();
                assert_eq!(changer.kind(), ChangerKind::SignedPermutation);
                assert_eq!(changer.matrix(), &l.transpose());
            }
        }
    }

    #[test]
    fn osp_l_transports_block_involution_to_diagonal() {
        for m in 1..=3 {
            // osp(2m-1|2m): block (2m-1 | 2m) -> alternating starting odd.
            let f = osp_l(OspVariant::Minus, m).unwrap();
            let block = Format::block(2 * m - 1, 2 * m);
            let diag = f.transport_format(&block).unwrap();
            assert_eq!(diag, Format::alternating(4 * m - 1, -1).unwrap());

            // osp(2m+1|2m): block (2m+1 | 2m) -> alternating starting even.
            let f = osp_l(OspVariant::Plus, m).unwrap();
            let block = Format::block(2 * m + 1, 2 * m);
            let diag = f.transport_format(&block).unwrap();
            assert_eq!(diag, Format::alternating(4 * m + 1, 1).unwrap());
        }
    }

    #[test]
    fn preserves_format_checks_evenness() {
        let fmt = Format::alternating(4, 1).unwrap();

        // Invertible diagonal matrices preserve every format.
        let d = Matrix::diag_band(0, &[r(2), r(1), r(-3), r(5)], 4).unwrap();
        let f = FormatChanger::from_matrix(d).unwrap();
        assert!(preserves_format(&f, &fmt));
        assert!(preserves_format(&f, &Format::block(2, 2)));

        // Entries on even diagonals only: still format preserving.
        let band = &Matrix::identity(4) + &Matrix::diag_band(2, &[r(7), r(9)], 4).unwrap();
        let f = FormatChanger::from_matrix(band).unwrap();
        assert!(preserves_format(&f, &fmt));

        // Swapping an even and an odd basis vector mixes parities.
        let swap = Permutation::new(vec![2, 1, 3, 4]).unwrap();
        let f = FormatChanger::from_permutation(&swap);
        assert!(!preserves_format(&f, &fmt));
    }

    #[test]
    fn commutator_transport_covariance() {
        // change_format([M,N}) = [change_format(M), change_format(N)}.
        let fmt = Format::block(2, 2);
        let m = GradedMatrix::new(Matrix::from_fn(4, |i, j| r((i + 2 * j) as i64)), fmt.clone())
            .unwrap();
        let n = GradedMatrix::new(
            Matrix::from_fn(4, |i, j| Rational::new(i as i64 - 3 * j as i64, 2)),
            fmt,
        )
        .unwrap();
        let perm = alternating_perm(2, 2).unwrap();
        let f = FormatChanger::from_permutation(&perm);
        let lhs = change_format(&m.graded_commutator(&n), &f).unwrap();
        let rhs = change_format(&m, &f)
            .unwrap()
            .graded_commutator(&change_format(&n, &f).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn supertranspose_transport() {
        // change_format(M)^{sT in new format} = change_format(M^{sT in old}).
        // Holds exactly for signed permutations, sign flips included.
        let fmt = Format::block(3, 2);
        let m = GradedMatrix::new(
            Matrix::from_fn(5, |i, j| Rational::new((2 * i + j) as i64, 3)),
            fmt,
        )
        .unwrap();
        for f in [
            FormatChanger::from_permutation(&alternating_perm(3, 2).unwrap()),
            osp_l(OspVariant::Plus, 1).unwrap(),
        ] {
            let lhs = change_format(&m, &f).unwrap().supertranspose();
            let rhs = change_format(&m.supertranspose(), &f).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn permutation_serde() {
        let p = Permutation::new(vec![1, 4, 2, 5, 3]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"perm":[1,4,2,5,3]}"#);
        let back: Permutation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Permutation>(r#"{"perm":[1,1]}"#).is_err());
    }
}
