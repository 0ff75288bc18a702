//! The binary-entropy certificate behind the linear lower bound on random
//! permutation-triple families.
//!
//! ```bash
//! cargo run --example entropy_certificate
//! ```

use gluing::bounds::{binary_entropy, lower_bound_lhs, search_constants};

fn main() {
    println!("H(0.5) = {}", binary_entropy(0.5).unwrap());
    println!("H(0.11) = {}", binary_entropy(0.11).unwrap());

    // The pinned constants sit a hair inside the feasible region: the
    // left-hand side is negative by only ~5e-13.
    let pinned = lower_bound_lhs(0.4590625, 0.0818757697241).unwrap();
    println!(
        "\nlhs(c = {}, eps = {}) = {:e}  certified: {}",
        pinned.c_const, pinned.eps, pinned.lhs, pinned.certified
    );

    // Nudge the slack up by less than 3e-4 and the inequality flips.
    let broken = lower_bound_lhs(0.4590625, 0.082).unwrap();
    println!(
        "lhs(c = {}, eps = {}) = {:e}  certified: {}",
        broken.c_const, broken.eps, broken.lhs, broken.certified
    );

    for step in [1e-2, 1e-3, 1e-4] {
        let found = search_constants(step).unwrap();
        println!(
            "grid {step:.0e}: best eps {} at c = {} (lhs {:e})",
            found.eps, found.c_const, found.lhs
        );
    }
}
