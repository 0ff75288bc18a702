//! Computing the prefix-excess profile of a set family.
//!
//! ```bash
//! cargo run --example delta_profile
//! ```

use gluing::family::{components, delta_profile, primal_graph, Ordering, SetFamily};

fn main() {
    // Three triples chained through shared elements, plus an outlier pair.
    let family = SetFamily::new(
        9,
        3,
        vec![vec![1, 2, 3], vec![3, 4, 5], vec![5, 6, 7], vec![8, 9]],
    )
    .unwrap();

    println!("primal graph:");
    let graph = primal_graph(&family);
    for ((a, b), mult) in graph.edges() {
        println!("  {a} -- {b}  (in {mult} sets)");
    }

    println!("components:");
    for comp in components(&family) {
        println!(
            "  vertices {:?}  size {}  d {}  gamma {}",
            comp.vertices, comp.size, comp.d, comp.gamma
        );
    }

    for perm in [vec![1, 2, 3, 4], vec![4, 1, 3, 2]] {
        let order = Ordering::new(perm).unwrap();
        let report = delta_profile(&family, &order).unwrap();
        println!(
            "order {:?} -> profile {:?}, max {} at k = {}",
            order.as_slice(),
            report.profile,
            report.max_delta,
            report.argmax_k
        );
    }
}
