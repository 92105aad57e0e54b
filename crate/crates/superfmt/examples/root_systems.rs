//! Simple root systems read off from a format: the distinguished system of
//! the block format versus the fermionic system of the diagonal one.
//!
//! ```bash
//! cargo run --example root_systems
//! ```

use superfmt::graded::Format;
use superfmt::rootspace::{admits_fermionic_srs, odd_simple_root_count, simple_root_system};

fn main() {
    // sl(3|2) in block format: one odd simple root, at the block boundary.
    let block = Format::block(3, 2);
    println!("block format {block}:");
    for (i, root) in simple_root_system(&block).iter().enumerate() {
        println!("  alpha_{} = {root}", i + 1);
    }
    let odd = odd_simple_root_count(&block);
    println!("  odd simple roots: {odd}");
    assert_eq!(odd, 1);
    assert!(!admits_fermionic_srs(&block));

    // The same algebra in diagonal format: every simple root is odd.
    let diagonal: Format = "+-+-+".parse().unwrap();
    println!("\ndiagonal format {diagonal}:");
    for (i, root) in simple_root_system(&diagonal).iter().enumerate() {
        println!("  alpha_{} = {root}", i + 1);
    }
    let odd = odd_simple_root_count(&diagonal);
    println!("  odd simple roots: {odd}");
    assert_eq!(odd, 4);
    assert!(admits_fermionic_srs(&diagonal));

    // The count always equals the number of adjacent sign changes, so a
    // fully fermionic system needs strict alternation; an intermediate
    // arrangement lands in between.
    let intermediate: Format = "++-+-".parse().unwrap();
    println!(
        "\nintermediate format {intermediate}: {} odd simple roots",
        odd_simple_root_count(&intermediate)
    );
    assert_eq!(odd_simple_root_count(&intermediate), 3);
}
