//! The closed-form width bounds for triple families, next to exact values
//! from the subset DP on the classical witnesses.
//!
//! ```bash
//! cargo run --example width_bounds
//! ```

use gluing::bounds::three_set_bounds;
use gluing::instances::{fano, sts9, sts9_minus_point};
use gluing::order::{subset_dp_exact, SearchBudget};

fn main() {
    println!("bound table for m = n:");
    println!(
        "{:>4} {:>12} {:>13} {:>9} {:>17}",
        "n", "exact_small", "double_third", "half_cap", "quarter_plus_two"
    );
    for n in [3i64, 6, 7, 8, 9, 12, 20, 100] {
        let reports = three_set_bounds(n, n).unwrap();
        let cell = |name: &str| {
            reports
                .iter()
                .find(|r| r.name == name)
                .and_then(|r| r.value.as_ref().map(|v| v.to_string()))
                .unwrap_or_else(|| "-".into())
        };
        println!(
            "{n:>4} {:>12} {:>13} {:>9} {:>17}",
            cell("exact_small"),
            cell("double_third"),
            cell("half_cap"),
            cell("quarter_plus_two"),
        );
    }

    println!("\nexact widths of the witness families:");
    let budget = SearchBudget::default();
    for (name, family) in [
        ("fano (n = 7)", fano()),
        ("sts9, 9 lines (n = 9)", sts9(9).unwrap()),
        ("sts9 minus a point (n = 8)", sts9_minus_point()),
    ] {
        let dp = subset_dp_exact(&family, &budget).unwrap();
        println!("  {name}: width {}", dp.report.max_delta);
    }
}
