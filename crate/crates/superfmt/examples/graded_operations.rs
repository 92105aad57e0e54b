//! Supertrace, supertranspose and the graded commutator on formatted
//! matrices.
//!
//! ```bash
//! cargo run --example graded_operations
//! ```

use superfmt::graded::{Format, GradedMatrix};
use superfmt::matrix::Matrix;
use superfmt::rational::Rational;

fn main() {
    // A block gl(2|2) matrix: positions 1,2 even, 3,4 odd.
    let fmt = Format::block(2, 2);
    let m = GradedMatrix::new(
        Matrix::from_fn(4, |i, j| Rational::from((i as i64) * 10 + j as i64)),
        fmt.clone(),
    )
    .unwrap();

    // str M = tr A - tr D for the block format: (11 + 22) - (33 + 44).
    println!("M =\n{}", m.matrix());
    println!("str M = {}", m.supertrace());
    assert_eq!(m.supertrace(), Rational::from(-44));

    // Even/odd decomposition: Ad_eps fixes the even part, negates the odd.
    let (even, odd) = m.homogeneous_parts();
    assert_eq!(&even + &odd, m);
    assert_eq!(even.ad_eps(), even);
    assert_eq!(odd.ad_eps(), -&odd);
    println!("\neven part:\n{}", even.matrix());
    println!("\nodd part:\n{}", odd.matrix());

    // The supertranspose squares to Ad_eps, not to the identity.
    let st = m.supertranspose();
    println!("\nM^sT =\n{}", st.matrix());
    assert_eq!(st.supertranspose(), m.ad_eps());

    // Both sign conventions are exposed; they differ by a sign on the odd
    // entries.
    assert_eq!(m.supertranspose_dual(), st.ad_eps());

    // The graded commutator is an anticommutator on odd pairs, and its
    // supertrace always vanishes.
    let n = GradedMatrix::new(
        Matrix::from_fn(4, |i, j| Rational::new(i as i64 - j as i64, 3)),
        fmt,
    )
    .unwrap();
    let bracket = m.graded_commutator(&n);
    println!("\n[M, N}} =\n{}", bracket.matrix());
    assert!(bracket.supertrace().is_zero());
    assert_eq!(
        bracket.supertranspose(),
        -&m.supertranspose().graded_commutator(&n.supertranspose())
    );
    println!("\nall graded identities verified exactly");
}
