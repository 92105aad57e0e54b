//! Basis transformations that preserve the Chevalley relations: rescalings
//! and the graded Chevalley involution.
//!
//! ```bash
//! cargo run --example basis_transformations
//! ```

use superfmt::algebras::{
    cartan_from_basis, cartan_matrix, chevalley_basis, chevalley_involution, rescale_basis,
    trace_form, verify_chevalley, AlgebraId, FormatKind,
};
use superfmt::matrix::Matrix;
use superfmt::rational::Rational;

fn main() {
    let alg = AlgebraId::osp_plus(1, FormatKind::Diagonal).unwrap();
    let basis = chevalley_basis(&alg).unwrap();
    let a = cartan_matrix(alg.family(), alg.rank()).unwrap();

    // The graded involution sigma(h) = -h, sigma(e) = -f, sigma(f) = e has
    // order four and preserves the relations with the same Cartan matrix.
    let mut image = basis.clone();
    for power in 1..=4 {
        image = chevalley_involution(&image);
        if power == 4 {
            assert_eq!(image, basis, "sigma^4 = id");
        }
    }
    assert!(verify_chevalley(&chevalley_involution(&basis), &a).all_passed());
    println!("sigma preserves the relations; sigma^4 = id");

    // q-rescaling (e, f) -> (q e, f/q) leaves h and the relations untouched.
    let q = Rational::new(5, 3);
    let alpha = vec![q.clone(); basis.rank()];
    let beta = vec![q.recip(); basis.rank()];
    let scaled = rescale_basis(&basis, &alpha, &beta).unwrap();
    assert_eq!(scaled.h, basis.h);
    assert!(verify_chevalley(&scaled, &a).all_passed());
    println!("q-rescaling with q = {q} verified");

    // Normalizing rescale: with alpha_i beta_i = <e_i, f_i>^{-1} the Cartan
    // matrix becomes the symmetric Gram matrix <h_i', h_j'>. For this
    // algebra <e_i, f_i> = -2, so the rescale is nontrivial.
    for i in 0..basis.rank() {
        assert_eq!(trace_form(&basis.e[i], &basis.f[i]), Rational::from(-2));
    }
    let alpha: Vec<Rational> = (0..basis.rank())
        .map(|i| trace_form(&basis.e[i], &basis.f[i]).recip())
        .collect();
    let beta = vec![Rational::one(); basis.rank()];
    let normalized = rescale_basis(&basis, &alpha, &beta).unwrap();
    let a_prime = cartan_from_basis(&normalized).unwrap();
    let gram = Matrix::from_fn(basis.rank(), |i, j| {
        trace_form(&normalized.h[i - 1], &normalized.h[j - 1])
    });
    println!("\nnormalized Cartan matrix (symmetric):\n{a_prime}");
    assert_eq!(a_prime, gram);
    assert_eq!(a_prime, a_prime.transpose());
    assert!(verify_chevalley(&normalized, &a_prime).all_passed());
}
