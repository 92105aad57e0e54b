//! Orthosymplectic membership: the metric condition, the entrywise symmetry
//! condition, and the dimension count of the solution space.
//!
//! ```bash
//! cargo run --example membership
//! ```

use superfmt::algebras::{
    is_member, membership_dimensions, osp_metric_condition, osp_symmetry_condition, supermetric,
    AlgebraId, FormatKind,
};
use superfmt::graded::GradedMatrix;
use superfmt::matrix::Matrix;
use superfmt::rational::Rational;

fn rows(entries: &[[i64; 5]; 5]) -> Matrix {
    Matrix::from_rows(
        entries
            .iter()
            .map(|row| row.iter().map(|&v| Rational::from(v)).collect())
            .collect(),
    )
    .unwrap()
}

fn main() {
    let alg = AlgebraId::osp_plus(1, FormatKind::Diagonal).unwrap();
    println!("algebra: {alg}");
    println!("supermetric G =\n{}", supermetric(&alg).unwrap());

    // A generic element of osp(3|2) in diagonal format: twelve independent
    // entries, six even and six odd, with every diagonal alternately
    // symmetric or antisymmetric about the antidiagonal.
    let generic = rows(&[
        [1, 7, 2, 9, 0],
        [11, 4, 8, 5, 9],
        [3, 10, 0, -8, 2],
        [12, 6, 10, -4, -7],
        [0, -12, 3, 11, -1],
    ]);
    let m = GradedMatrix::new(generic, alg.format()).unwrap();
    println!("\ngeneric element =\n{}", m.matrix());

    // The two membership characterizations are independent computations and
    // must agree.
    assert!(osp_metric_condition(&alg, &m).unwrap());
    assert!(osp_symmetry_condition(&alg, &m).unwrap());
    assert!(is_member(&alg, &m).unwrap());
    assert!(m.supertrace().is_zero());
    println!("member: metric and symmetry conditions both hold, str = 0");

    // Perturbing one corner breaks both.
    let spoiled = &m
        + &GradedMatrix::new(Matrix::unit_entry(1, 1, 5).unwrap(), alg.format()).unwrap();
    assert!(!osp_metric_condition(&alg, &spoiled).unwrap());
    assert!(!osp_symmetry_condition(&alg, &spoiled).unwrap());
    println!("perturbed element correctly rejected by both predicates");

    // Dimension bookkeeping: osp(2m+1|2m) has 2m(2m+1) even and as many odd
    // independent entries; for m = 1 that is 6 + 6 = 12, matching the twelve
    // symbols above.
    let (even, odd) = membership_dimensions(&alg).unwrap();
    println!("\nsolution space dimensions: {even} even + {odd} odd");
    assert_eq!((even, odd), (6, 6));

    let osp12 = AlgebraId::osp_minus(1, FormatKind::Diagonal).unwrap();
    let (even, odd) = membership_dimensions(&osp12).unwrap();
    println!("osp(1|2): {even} even + {odd} odd");
    assert_eq!((even, odd), (3, 2));
}
