//! Measured widths of random permutation-triple families as n grows, and a
//! head-to-head of the two component-scheduling rules.
//!
//! The exact width comes from the subset DP while it fits; past that the
//! greedy and branch-and-bound values bracket it. Widths are reported, not
//! asserted: the linear lower bound is existential at large n and says
//! nothing about these desk-scale draws.
//!
//! ```bash
//! cargo run --release --example scaling_report
//! ```

use gluing::instances::{gen_random3, Seed};
use gluing::order::{
    branch_bound, standard_ordering, subset_dp_exact, ComponentRule, SearchBudget, StartRule,
};

fn main() {
    let budget = SearchBudget::default();
    let draws = 25;
    println!(
        "{:>4} {:>10} {:>10} {:>10} {:>10}",
        "n", "exact", "greedy(d)", "greedy(g)", "bb"
    );
    for n in [6u32, 9, 12, 15, 18, 21, 24, 30, 40] {
        let mut sums = [0.0f64; 4];
        let mut exact_known = true;
        for draw in 0..draws {
            let family = gen_random3(n, Seed(1000 * u64::from(n) + draw));
            let d_rule =
                standard_ordering(&family, StartRule::LowestIndex, ComponentRule::DIncreasing);
            let g_rule = standard_ordering(
                &family,
                StartRule::LowestIndex,
                ComponentRule::GammaDecreasing,
            );
            sums[1] += d_rule.report.max_delta as f64;
            sums[2] += g_rule.report.max_delta as f64;
            if family.len() <= budget.max_m_for_dp {
                sums[0] += subset_dp_exact(&family, &budget).unwrap().report.max_delta as f64;
            } else {
                exact_known = false;
            }
            let mut quick = budget.clone();
            quick.time_limit = std::time::Duration::from_millis(200);
            sums[3] += branch_bound(&family, &quick, Some(d_rule.report.max_delta))
                .report
                .max_delta as f64;
        }
        let avg = |s: f64| s / draws as f64;
        println!(
            "{n:>4} {:>10} {:>10.2} {:>10.2} {:>10.2}",
            if exact_known {
                format!("{:.2}", avg(sums[0]))
            } else {
                "-".into()
            },
            avg(sums[1]),
            avg(sums[2]),
            avg(sums[3]),
        );
    }
    println!("\n(widths averaged over {draws} seeded draws per n)");
}
