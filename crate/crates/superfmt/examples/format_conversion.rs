//! Move matrices between block and diagonal formats.
//!
//! ```bash
//! cargo run --example format_conversion
//! ```

use superfmt::algebras::{chevalley_basis, AlgebraId, FormatKind};
use superfmt::formats::{
    alternating_perm, change_format, osp_arrangement, osp_l, preserves_format, FormatChanger,
    OspVariant,
};
use superfmt::graded::{Format, GradedMatrix};
use superfmt::matrix::Matrix;
use superfmt::rational::Rational;

fn main() {
    // The alternating arrangement interleaves the even and odd blocks of
    // gl(3|2): (v1..v5) -> (v1, v4, v2, v5, v3).
    let perm = alternating_perm(3, 2).unwrap();
    println!("alternating permutation: {:?}", perm.images());
    let f = FormatChanger::from_permutation(&perm);

    let block = Format::block(3, 2);
    let diagonal = f.transport_format(&block).unwrap();
    println!("block {block} -> diagonal {diagonal}");
    assert_eq!(diagonal, Format::alternating(5, 1).unwrap());

    // Conjugation preserves the supertrace entry for entry.
    let m = GradedMatrix::new(
        Matrix::from_fn(5, |i, j| Rational::new(i as i64 + j as i64, 2)),
        block,
    )
    .unwrap();
    let converted = change_format(&m, &f).unwrap();
    assert_eq!(converted.supertrace(), m.supertrace());
    // ... and the round trip is exact.
    assert_eq!(change_format(&converted, &f.inverted()).unwrap(), m);

    // Orthosymplectic block <-> diagonal runs through the signed
    // permutation L with L^{-1} = L^T.
    let l = osp_arrangement(OspVariant::Plus, 1).unwrap();
    println!("\nosp(3|2) arrangement L =\n{l}");
    assert_eq!(&l * &l.transpose(), Matrix::identity(5));

    let changer = osp_l(OspVariant::Plus, 1).unwrap();
    let block_basis = chevalley_basis(&AlgebraId::osp_plus(1, FormatKind::Block).unwrap()).unwrap();
    let diag_basis =
        chevalley_basis(&AlgebraId::osp_plus(1, FormatKind::Diagonal).unwrap()).unwrap();
    let converted = change_format(&block_basis.e[0], &changer).unwrap();
    println!("\nblock e_1 =\n{}", block_basis.e[0].matrix());
    println!("\nL^-1 e_1 L =\n{}", converted.matrix());
    assert_eq!(converted, diag_basis.e[0]);

    // Format preservation: matrices supported on even diagonals alone leave
    // an alternating format untouched.
    let preserving = FormatChanger::from_matrix(
        &Matrix::identity(5) + &Matrix::diag_band(2, &vec![Rational::from(3); 3], 5).unwrap(),
    )
    .unwrap();
    assert!(preserves_format(&preserving, converted.format()));
    println!("\nconversion checks all exact");
}
