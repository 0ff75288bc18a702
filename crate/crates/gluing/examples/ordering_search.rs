//! Comparing the ordering-search methods on the Fano plane and on a random
//! triple family.
//!
//! ```bash
//! cargo run --example ordering_search
//! ```

use gluing::instances::{fano, gen_random3, Seed};
use gluing::order::{
    branch_bound, standard_ordering, subset_dp_exact, ComponentRule, SearchBudget, StartRule,
};

fn main() {
    let budget = SearchBudget::default();

    for (name, family) in [
        ("fano plane".to_string(), fano()),
        (
            "random triples n = 18".to_string(),
            gen_random3(18, Seed(7)),
        ),
    ] {
        println!(
            "== {name} (n = {}, m = {})",
            family.ground_size(),
            family.len()
        );
        let greedy = standard_ordering(&family, StartRule::LowestIndex, ComponentRule::DIncreasing);
        println!(
            "  greedy         width {}  order {:?}",
            greedy.report.max_delta,
            greedy.ordering.as_slice()
        );
        let best_start = standard_ordering(
            &family,
            StartRule::BestOfAllStarts,
            ComponentRule::DIncreasing,
        );
        println!(
            "  greedy (all starts) width {}",
            best_start.report.max_delta
        );
        let dp = subset_dp_exact(&family, &budget).unwrap();
        println!(
            "  subset DP      width {}  order {:?}  (optimal)",
            dp.report.max_delta,
            dp.ordering.as_slice()
        );
        let bb = branch_bound(&family, &budget, None);
        println!(
            "  branch & bound width {}  optimal: {}",
            bb.report.max_delta, bb.optimal
        );
    }
}
