//! The principal osp(1|2) embedding and its bosonic completion.
//!
//! ```bash
//! cargo run --example principal_embedding
//! ```

use superfmt::algebras::{AlgebraId, FormatKind};
use superfmt::embeddings::{bosonic_pair, principal_closed, principal_for, verify_osp12};

fn main() {
    // J_- sums the lowering generators; J_+ weights the raising generators
    // by the row sums of the inverse Cartan matrix; H is their bracket.
    let triple = principal_closed(2);
    println!("J_- =\n{}", triple.j_minus.matrix());
    println!("\nJ_+ =\n{}", triple.j_plus.matrix());
    println!("\nH =\n{}", triple.h.matrix());

    let pair = bosonic_pair(&triple);
    println!("\nX_+ = J_+^2 =\n{}", pair.x_plus.matrix());

    // All eight osp(1|2) relations hold exactly.
    let report = verify_osp12(&triple);
    println!("\n{report}");
    assert!(report.all_passed());

    // The orthosymplectic algebras of matching size produce the identical
    // triple: osp(3|2) is 5x5, like sl(3|2).
    let osp = principal_for(&AlgebraId::osp_plus(1, FormatKind::Diagonal).unwrap()).unwrap();
    assert_eq!(osp.j_plus.matrix(), triple.j_plus.matrix());
    assert_eq!(osp.j_minus.matrix(), triple.j_minus.matrix());
    assert_eq!(osp.h.matrix(), triple.h.matrix());
    println!("osp(3|2) triple coincides with the sl(3|2) one, entry for entry");
}
