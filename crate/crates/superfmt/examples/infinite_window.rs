//! Windowed truncations of sl∞ and osp∞ with integer-labeled rows and
//! columns.
//!
//! ```bash
//! cargo run --example infinite_window
//! ```

use superfmt::algebras::{
    self, cartan_from_generators, is_member, verify_chevalley_generators, AlgebraId, FormatKind,
};
use superfmt::infinite::{inf_chevalley, osp_inf_element, InfiniteKind};

fn main() {
    let window = 4i64;

    // osp∞ spanning elements pair the slots (i, j) and (-j, -i) with a sign
    // that depends on the diagonal; the central window of that pattern is
    // exactly the diagonal realization of a finite orthosymplectic algebra.
    let e = osp_inf_element(0, 1, 2).unwrap();
    println!("osp∞ element (0,1) at window 2:\n{}", e.graded().matrix());
    let osp32 = AlgebraId::osp_plus(1, FormatKind::Diagonal).unwrap();
    for i in -2..=2 {
        for j in -2..=2 {
            let m = osp_inf_element(i, j, 2).unwrap();
            assert!(is_member(&osp32, m.graded()).unwrap());
        }
    }
    println!("every window-2 element passes osp(3|2) diagonal membership");

    // Interior Chevalley relations are exact: truncation only affects
    // generators whose support touches the window boundary.
    let bound = window - 1;
    let triples: Vec<_> = (0..bound)
        .map(|i| inf_chevalley(InfiniteKind::OspInf, i, window).unwrap())
        .collect();
    let h: Vec<_> = triples.iter().map(|t| t.2.graded().clone()).collect();
    let e: Vec<_> = triples.iter().map(|t| t.0.graded().clone()).collect();
    let f: Vec<_> = triples.iter().map(|t| t.1.graded().clone()).collect();
    // The Cartan matrix of the truncation is recomputed from the supertrace
    // form on the interior generators.
    let a = cartan_from_generators(&h, &e, &f).unwrap();
    println!("\nosp∞ interior Cartan matrix at window {window}:\n{a}");
    let report = verify_chevalley_generators(&h, &e, &f, &a);
    println!("osp∞ interior: {} / {} relations", report.passed_count(), report.len());
    assert!(report.all_passed());

    // Same for sl∞, whose generator index runs over all integers.
    let triples: Vec<_> = (-bound..bound)
        .map(|i| inf_chevalley(InfiniteKind::SlInf, i, window).unwrap())
        .collect();
    let h: Vec<_> = triples.iter().map(|t| t.2.graded().clone()).collect();
    let e: Vec<_> = triples.iter().map(|t| t.0.graded().clone()).collect();
    let f: Vec<_> = triples.iter().map(|t| t.1.graded().clone()).collect();
    let a = cartan_from_generators(&h, &e, &f).unwrap();
    let report = algebras::verify_chevalley_generators(&h, &e, &f, &a);
    println!("sl∞ interior:  {} / {} relations", report.passed_count(), report.len());
    assert!(report.all_passed());

    // Windowed matrices serialize with explicit integer labels.
    let json = serde_json::to_string(&triples[0].0).unwrap();
    println!("\nserialized generator: {json}");
    let back: superfmt::WindowedMatrix = serde_json::from_str(&json).unwrap();
    assert_eq!(back, triples[0].0);
}
