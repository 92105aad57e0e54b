//! Build Chevalley bases and verify their relations exactly.
//!
//! ```bash
//! cargo run --example chevalley_bases
//! ```

use superfmt::algebras::{
    cartan_from_basis, cartan_matrix, chevalley_basis, verify_chevalley, AlgebraId, FormatKind,
};

fn main() {
    // osp(3|2) in diagonal format: generators live on the first upper and
    // lower diagonals, all of them odd.
    let alg = AlgebraId::osp_plus(1, FormatKind::Diagonal).unwrap();
    let basis = chevalley_basis(&alg).unwrap();
    println!("{alg}: rank {}", basis.rank());
    for i in 0..basis.rank() {
        println!("\ne_{} =\n{}", i + 1, basis.e[i].matrix());
        assert!(basis.e[i].is_odd(), "fermionic simple roots are odd");
    }

    // The closed-form Cartan matrix, and the same matrix recomputed from the
    // supertrace form <h_i, h_j> / <e_j, f_j>.
    let a = cartan_matrix(alg.family(), alg.rank()).unwrap();
    println!("\nCartan matrix:\n{a}");
    assert_eq!(cartan_from_basis(&basis).unwrap(), a);

    // Every relation holds with zero residual.
    let report = verify_chevalley(&basis, &a);
    println!("\n{report}");
    assert!(report.all_passed());

    // The same machinery covers the block realization.
    let block = AlgebraId::osp_plus(1, FormatKind::Block).unwrap();
    let report = verify_chevalley(&chevalley_basis(&block).unwrap(), &a);
    println!("block realization: {} / {} checks", report.passed_count(), report.len());
    assert!(report.all_passed());
}
