//! The instance generators and the plain-text family format.
//!
//! ```bash
//! cargo run --example generate_instances
//! ```

use gluing::instances::{fano, gen_random3, gen_uniform_random, sts9, Seed};
use gluing::text::{parse_family, write_family};

fn main() {
    println!("fano plane:\n{}", write_family(&fano()));
    println!(
        "first 9 lines of the triple system on 9 points:\n{}",
        write_family(&sts9(9).unwrap())
    );

    // Reproducible randomness: same seed, same family, byte for byte.
    let a = gen_random3(8, Seed(2024));
    let b = gen_random3(8, Seed(2024));
    assert_eq!(write_family(&a), write_family(&b));
    println!(
        "random permutation triples (n = 8, seed 2024):\n{}",
        write_family(&a)
    );

    let uniform = gen_uniform_random(10, 5, 3, Seed(99)).unwrap();
    let text = write_family(&uniform);
    println!("uniform 3-subsets (n = 10, m = 5, seed 99):\n{text}");

    // The canonical text round-trips exactly.
    let reparsed = parse_family(&text).unwrap();
    assert_eq!(write_family(&reparsed), text);
    println!("round-trip through the family format: byte-identical");
}
