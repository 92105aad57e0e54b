//! Highest-weight generators: closed form against the exact kernel solver.
//!
//! ```bash
//! cargo run --example highest_weights
//! ```

use superfmt::algebras::{AlgebraId, FormatKind};
use superfmt::embeddings::{highest_weight_closed, highest_weights_solve, principal_m1};

fn main() {
    // For sl(3|2), M_1 sits on the first diagonal and generates the others
    // as powers: M_k = M_1^k, one generator per grade k = 1..2n.
    let n = 2;
    let m1 = principal_m1(n);
    println!("M_1 =\n{}", m1.matrix());
    assert!(m1.matrix().pow(5).is_zero(), "M_1 is nilpotent of order 2n+1");

    let alg = AlgebraId::sl(n, FormatKind::Diagonal).unwrap();
    for k in 1..=2 * n {
        let solved = highest_weights_solve(&alg, k as i64).unwrap();
        assert_eq!(solved.len(), 1, "one-dimensional space at grade {k}");
        let closed = highest_weight_closed(n, k).unwrap();
        println!("\ngrade {k}: solver found\n{}", solved[0].matrix());
        // The solver normalizes the leading entry to 1; the closed form is a
        // rational multiple of it.
        let lead = (1..=2 * n + 1 - k)
            .map(|t| closed.matrix().get(t, t + k).clone())
            .find(|c| !c.is_zero())
            .unwrap();
        assert_eq!(solved[0].scale(&lead), closed);
    }
    assert!(highest_weights_solve(&alg, 5).unwrap().is_empty());

    // Inside osp(3|2) only the grades 2+4q and 3+4q survive.
    let osp = AlgebraId::osp_plus(1, FormatKind::Diagonal).unwrap();
    println!("\nosp(3|2) highest-weight dimensions by grade:");
    for k in 1..=4 {
        let dim = highest_weights_solve(&osp, k).unwrap().len();
        println!("  grade {k}: {dim}");
        assert_eq!(dim, usize::from(k % 4 == 2 || k % 4 == 3));
    }
}
