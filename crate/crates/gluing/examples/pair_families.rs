//! Families of pairs: the exact polynomial method and the closed-form
//! worst case.
//!
//! ```bash
//! cargo run --example pair_families
//! ```

use gluing::bounds::two_set_worst_case;
use gluing::family::SetFamily;
use gluing::instances::gen_disjoint_pairs;
use gluing::order::two_set_optimal;

fn main() {
    // Disjoint pairs attain the worst case while m <= n/2.
    let n = 12;
    for m in [2usize, 5, 6] {
        let family = gen_disjoint_pairs(n, m).unwrap();
        let result = two_set_optimal(&family).unwrap();
        println!(
            "{m} disjoint pairs on [{n}]: width {} (worst case for this shape: {})",
            result.report.max_delta,
            two_set_worst_case(i64::from(n), m as i64).unwrap()
        );
    }

    // A denser family: triangle + path + isolated pair.
    let family = SetFamily::new(
        9,
        2,
        vec![
            vec![1, 2],
            vec![2, 3],
            vec![1, 3],
            vec![4, 5],
            vec![5, 6],
            vec![6, 7],
            vec![8, 9],
        ],
    )
    .unwrap();
    let result = two_set_optimal(&family).unwrap();
    println!(
        "mixed family: width {}  schedule {:?}  profile {:?}",
        result.report.max_delta,
        result.ordering.as_slice(),
        result.report.profile
    );

    println!("\nworst-case width table (rows n = 4..10, columns m = 1..9):");
    for n in 4..=10i64 {
        let row: Vec<String> = (1..=9)
            .map(|m| two_set_worst_case(n, m).unwrap().to_string())
            .collect();
        println!("  n = {n:2}: {}", row.join(" "));
    }
}
