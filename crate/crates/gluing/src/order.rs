//! Searching for orderings that minimize the maximum prefix excess.
//!
//! Four methods, from cheap to exhaustive:
//!
//! - [`standard_ordering`]: the greedy rule — always append the set that
//!   contributes the fewest new elements, component by component;
//! - [`two_set_optimal`]: exact and polynomial when every member set has at
//!   most two elements, using per-component peaks and end drifts;
//! - [`subset_dp_exact`]: exact for any family by dynamic programming over
//!   subsets of member-set indices, `O(2^m * m)` time;
//! - [`branch_bound`]: anytime depth-first search over prefixes with
//!   dominance pruning, seeded by the greedy result.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::family::{components, delta_profile, DeltaReport, ElementSet, Ordering, SetFamily};
use crate::Error;

/// Which algorithm produced an [`OrderingResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Greedy,
    TwoSetExact,
    SubsetDp,
    BranchBound,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Greedy => "greedy",
            Method::TwoSetExact => "two_set_exact",
            Method::SubsetDp => "subset_dp",
            Method::BranchBound => "branch_bound",
        })
    }
}

/// How the greedy chooses the first set within each component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StartRule {
    /// Start from the lowest-index set of the component.
    #[default]
    LowestIndex,
    /// Try every set of the component as the start and keep the ordering
    /// with the smallest internal peak.
    BestOfAllStarts,
}

impl std::str::FromStr for StartRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "lowest-index" | "lowest_index" => Ok(StartRule::LowestIndex),
            "best-of-all-starts" | "best_of_all_starts" => Ok(StartRule::BestOfAllStarts),
            other => Err(Error::Domain(format!("unknown start rule '{other}'"))),
        }
    }
}

/// How components are sequenced before the per-component greedy runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ComponentRule {
    /// Ascending `d = order - size`; optimal for families of pairs.
    #[default]
    DIncreasing,
    /// Descending `gamma = size - ceil((order - 1) / 2)`; the schedule used
    /// by the half-cap bound for triple families.
    GammaDecreasing,
}

impl std::str::FromStr for ComponentRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "d-increasing" | "d_increasing" => Ok(ComponentRule::DIncreasing),
            "gamma-decreasing" | "gamma_decreasing" => Ok(ComponentRule::GammaDecreasing),
            other => Err(Error::Domain(format!("unknown component rule '{other}'"))),
        }
    }
}

/// Resource limits for the exact searches.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    /// Hard cap on `m` for the subset DP (the table has `2^m` entries).
    pub max_m_for_dp: usize,
    /// Wall-clock limit for the branch-and-bound search.
    pub time_limit: Duration,
    /// Upper bound on table memory for the subset DP, in bytes.
    pub memory_limit: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_m_for_dp: 24,
            time_limit: Duration::from_secs(60),
            memory_limit: 1 << 30,
        }
    }
}

/// An ordering together with its profile and provenance.
#[derive(Debug, Clone, Serialize)]
pub struct OrderingResult {
    pub ordering: Ordering,
    pub report: DeltaReport,
    pub method: Method,
    /// True only for exact methods that ran to completion; then `max_delta`
    /// equals the width of the family.
    pub optimal: bool,
}

fn finish(family: &SetFamily, order: Vec<u32>, method: Method, optimal: bool) -> OrderingResult {
    let ordering = Ordering::new(order).expect("search produced a permutation");
    let report = delta_profile(family, &ordering).expect("ordering matches family");
    OrderingResult {
        ordering,
        report,
        method,
        optimal,
    }
}

/// Per-component greedy ordering plus its local profile summary.
struct ComponentOrder {
    sets: Vec<u32>,
    /// Maximum of the component-local excess profile.
    peak: i64,
    /// Final value of the local profile, `order - size` of the component.
    end: i64,
    min_vertex: u32,
}

/// Greedy-orders the sets of one component starting from `start`, returning
/// the visit order and the peak of the component-local profile.
fn greedy_component(family: &SetFamily, members: &[u32], start: u32) -> (Vec<u32>, i64) {
    let mut union = ElementSet::new(family.ground_size());
    let mut order = Vec::with_capacity(members.len());
    let mut remaining: Vec<u32> = members.iter().copied().filter(|&i| i != start).collect();
    let mut covered: i64 = 0;
    for &e in family.set(start as usize - 1) {
        if union.insert(e) {
            covered += 1;
        }
    }
    order.push(start);
    let mut peak = covered - 1;
    while !remaining.is_empty() {
        let mut best = (u32::MAX, u32::MAX); // (new elements, index)
        for &idx in &remaining {
            let new = family
                .set(idx as usize - 1)
                .iter()
                .filter(|&&e| !union.contains(e))
                .count() as u32;
            if (new, idx) < best {
                best = (new, idx);
            }
        }
        let idx = best.1;
        remaining.retain(|&i| i != idx);
        for &e in family.set(idx as usize - 1) {
            if union.insert(e) {
                covered += 1;
            }
        }
        order.push(idx);
        peak = peak.max(covered - order.len() as i64);
    }
    (order, peak)
}

fn order_one_component(family: &SetFamily, members: &[u32], start: StartRule) -> ComponentOrder {
    let min_vertex = members
        .iter()
        .flat_map(|&i| family.set(i as usize - 1).iter().copied())
        .min()
        .expect("component is nonempty");
    let starts: Vec<u32> = match start {
        StartRule::LowestIndex => vec![members[0]],
        StartRule::BestOfAllStarts => members.to_vec(),
    };
    let mut best: Option<(Vec<u32>, i64)> = None;
    for s in starts {
        let (order, peak) = greedy_component(family, members, s);
        if best.as_ref().is_none_or(|&(_, p)| peak < p) {
            best = Some((order, peak));
        }
    }
    let (sets, peak) = best.expect("at least one start");
    let mut union = ElementSet::new(family.ground_size());
    let mut covered = 0i64;
    for &i in members {
        for &e in family.set(i as usize - 1) {
            if union.insert(e) {
                covered += 1;
            }
        }
    }
    ComponentOrder {
        end: covered - members.len() as i64,
        sets,
        peak,
        min_vertex,
    }
}

/// Groups member-set indices (1-based) by containing component, in the
/// component order of [`components`].
fn component_members(family: &SetFamily) -> Vec<Vec<u32>> {
    let comps = components(family);
    let mut vertex_comp: HashMap<u32, usize> = HashMap::new();
    for (ci, comp) in comps.iter().enumerate() {
        for &v in &comp.vertices {
            vertex_comp.insert(v, ci);
        }
    }
    let mut groups = vec![Vec::new(); comps.len()];
    for (i, set) in family.sets().iter().enumerate() {
        groups[vertex_comp[&set[0]]].push(i as u32 + 1);
    }
    groups
}

/// The greedy standard ordering: components are sequenced by
/// `component_rule`, and within each component the set contributing the
/// fewest new elements is appended next, starting per `start_rule`.
pub fn standard_ordering(
    family: &SetFamily,
    start_rule: StartRule,
    component_rule: ComponentRule,
) -> OrderingResult {
    let comps = components(family);
    let groups = component_members(family);
    let mut keyed: Vec<(i64, u32, usize)> = comps
        .iter()
        .enumerate()
        .map(|(ci, comp)| {
            let key = match component_rule {
                ComponentRule::DIncreasing => comp.d,
                ComponentRule::GammaDecreasing => -comp.gamma,
            };
            (key, comp.vertices[0], ci)
        })
        .collect();
    keyed.sort_unstable();
    let mut order = Vec::with_capacity(family.len());
    for (_, _, ci) in keyed {
        order.extend(order_one_component(family, &groups[ci], start_rule).sets);
    }
    finish(family, order, Method::Greedy, false)
}

/// Exact optimal ordering for families whose member sets have at most two
/// elements.
///
/// Within each component the greedy from the best start attains the minimum
/// possible internal peak (the local profile never rises after the first
/// set). Components are then sequenced by their `(peak, end)` pairs:
/// non-positive end drifts first by ascending peak, positive drifts last by
/// descending `peak - end`, which is exchange-optimal for the running
/// maximum. For families of genuine pairs this is ascending `d`.
pub fn two_set_optimal(family: &SetFamily) -> Result<OrderingResult, Error> {
    if let Some(i) = family.sets().iter().position(|s| s.len() > 2) {
        return Err(Error::Inapplicable(format!(
            "set {} has {} elements; the exact pair method needs at most 2",
            i + 1,
            family.set(i).len()
        )));
    }
    let groups = component_members(family);
    let mut ordered: Vec<ComponentOrder> = groups
        .iter()
        .map(|g| order_one_component(family, g, StartRule::BestOfAllStarts))
        .collect();
    ordered.sort_by_key(|c| {
        if c.end <= 0 {
            (0, c.peak, c.end, c.min_vertex)
        } else {
            (1, c.end - c.peak, c.end, c.min_vertex)
        }
    });
    let order: Vec<u32> = ordered.into_iter().flat_map(|c| c.sets).collect();
    Ok(finish(family, order, Method::TwoSetExact, true))
}

/// Exact minimum width by dynamic programming over subsets of member sets.
///
/// `best(S) = min over j in S of max(best(S \ {j}), |union of S| - |S|)`,
/// with `best(empty)` acting as negative infinity so the empty prefix never
/// dominates. Union sizes come from a subset-sum transform over the
/// element-occurrence masks. Refuses to run past the budget rather than
/// falling back silently.
pub fn subset_dp_exact(family: &SetFamily, budget: &SearchBudget) -> Result<OrderingResult, Error> {
    let m = family.len();
    if m > budget.max_m_for_dp {
        return Err(Error::Budget(format!(
            "subset DP needs m <= {}, family has m = {m}",
            budget.max_m_for_dp
        )));
    }
    if m == 0 {
        return Ok(finish(family, Vec::new(), Method::SubsetDp, true));
    }
    let table_bytes = 5usize << m; // best (i16) + pred (u8) + cover counts (u16)
    if table_bytes > budget.memory_limit {
        return Err(Error::Budget(format!(
            "subset DP tables need {table_bytes} bytes, limit is {}",
            budget.memory_limit
        )));
    }

    let covered = family.covered_elements();
    let total = covered.len() as i64;
    let full: usize = (1 << m) - 1;

    // h[t] counts elements whose occurrence mask is a subset of t; the union
    // covered by an index subset s then has size total - h[full ^ s].
    let mut h = vec![0u16; 1 << m];
    for &e in &covered {
        let mut mask = 0usize;
        for (i, set) in family.sets().iter().enumerate() {
            if set.binary_search(&e).is_ok() {
                mask |= 1 << i;
            }
        }
        h[mask] += 1;
    }
    for bit in 0..m {
        for s in 0..=full {
            if s & (1 << bit) != 0 {
                h[s] += h[s ^ (1 << bit)];
            }
        }
    }

    let mut best = vec![0i16; 1 << m];
    let mut pred = vec![0u8; 1 << m];
    best[0] = i16::MIN;
    for s in 1..=full {
        let union_size = total - i64::from(h[full ^ s]);
        let here = (union_size - s.count_ones() as i64) as i16;
        let mut val = i16::MAX;
        let mut arg = 0u8;
        let mut rest = s;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let cand = best[s ^ (1 << j)].max(here);
            if cand < val {
                val = cand;
                arg = j as u8;
            }
        }
        best[s] = val;
        pred[s] = arg;
    }

    let mut order = vec![0u32; m];
    let mut s = full;
    for pos in (0..m).rev() {
        let j = pred[s] as usize;
        order[pos] = j as u32 + 1;
        s ^= 1 << j;
    }
    let result = finish(family, order, Method::SubsetDp, true);
    debug_assert_eq!(result.report.max_delta, i64::from(best[full]));
    Ok(result)
}

/// Anytime branch-and-bound over ordering prefixes.
///
/// Seeded with the greedy result (so it never does worse), expanding
/// candidates by ascending new-element count, pruning prefixes whose running
/// maximum reaches the best known width and prefixes dominated by an earlier
/// visit to the same index subset. On completion the result is optimal; on
/// timeout the best ordering found so far is returned with `optimal: false`.
pub fn branch_bound(
    family: &SetFamily,
    budget: &SearchBudget,
    incumbent: Option<i64>,
) -> OrderingResult {
    let m = family.len();
    let greedy = standard_ordering(family, StartRule::LowestIndex, ComponentRule::DIncreasing);
    if m == 0 {
        return OrderingResult {
            optimal: true,
            method: Method::BranchBound,
            ..greedy
        };
    }

    let mut search = BbSearch {
        family,
        deadline: Instant::now() + budget.time_limit,
        ticks: 0,
        timed_out: false,
        bound: greedy.report.max_delta.min(incumbent.unwrap_or(i64::MAX)),
        best_order: None,
        seen: HashMap::new(),
        union: ElementSet::new(family.ground_size()),
        prefix: Vec::with_capacity(m),
        mask: 0,
        covered: 0,
    };
    search.dive(i64::MIN);

    let completed = !search.timed_out;
    let found = search.best_order.is_some();
    let optimal = completed && (found || incumbent.is_none_or(|i| i >= greedy.report.max_delta));
    match search.best_order {
        Some(order) => finish(family, order, Method::BranchBound, optimal),
        None => OrderingResult {
            optimal,
            method: Method::BranchBound,
            ..greedy
        },
    }
}

struct BbSearch<'a> {
    family: &'a SetFamily,
    deadline: Instant,
    ticks: u32,
    timed_out: bool,
    bound: i64,
    best_order: Option<Vec<u32>>,
    /// Best running maximum seen per visited index subset (only for m <= 64).
    seen: HashMap<u64, i64>,
    union: ElementSet,
    prefix: Vec<u32>,
    mask: u64,
    covered: i64,
}

impl BbSearch<'_> {
    fn dive(&mut self, cur_max: i64) {
        let m = self.family.len();
        if self.prefix.len() == m {
            // Pruning guarantees cur_max < self.bound here.
            self.bound = cur_max;
            self.best_order = Some(self.prefix.clone());
            return;
        }
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(1024) && Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        if self.timed_out {
            return;
        }
        if m <= 64 {
            match self.seen.get_mut(&self.mask) {
                Some(prev) if *prev <= cur_max => return,
                Some(prev) => *prev = cur_max,
                None => {
                    self.seen.insert(self.mask, cur_max);
                }
            }
        }
        let mut candidates: Vec<(u32, u32)> = Vec::with_capacity(m - self.prefix.len());
        for i in 0..m {
            let placed = if m <= 64 {
                self.mask & (1 << i) != 0
            } else {
                self.prefix.contains(&(i as u32 + 1))
            };
            if placed {
                continue;
            }
            let new = self
                .family
                .set(i)
                .iter()
                .filter(|&&e| !self.union.contains(e))
                .count() as u32;
            candidates.push((new, i as u32));
        }
        candidates.sort_unstable();
        let mut last_sig: Option<(u32, &[u32])> = None;
        for (new, i) in candidates {
            // Identical unplaced sets are interchangeable; expand only one.
            let sig = (new, self.family.set(i as usize));
            if last_sig == Some(sig) {
                continue;
            }
            last_sig = Some(sig);
            let k = self.prefix.len() as i64 + 1;
            let delta = self.covered + i64::from(new) - k;
            let next_max = cur_max.max(delta);
            if next_max >= self.bound {
                continue;
            }
            let mut added = Vec::new();
            for &e in self.family.set(i as usize) {
                if self.union.insert(e) {
                    added.push(e);
                }
            }
            self.covered += added.len() as i64;
            self.prefix.push(i + 1);
            if m <= 64 {
                self.mask |= 1 << i;
            }
            self.dive(next_max);
            if m <= 64 {
                self.mask &= !(1 << i);
            }
            self.prefix.pop();
            self.covered -= added.len() as i64;
            for e in added {
                self.union.remove(e);
            }
            if self.timed_out {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn fam(n: u32, c: u32, sets: &[&[u32]]) -> SetFamily {
        SetFamily::new(n, c, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn greedy_on_connected_pair_path() {
        let f = fam(4, 2, &[&[1, 2], &[2, 3], &[3, 4]]);
        let r = standard_ordering(&f, StartRule::LowestIndex, ComponentRule::DIncreasing);
        assert_eq!(r.report.max_delta, 1);
    }

    #[test]
    fn greedy_orders_smaller_d_component_first() {
        // Two triangles of pairs; the second carries a repeated edge, so its
        // d is -1 against 0, and its sets (indices 4..=7) must come first.
        let f = fam(
            6,
            2,
            &[
                &[1, 2],
                &[2, 3],
                &[1, 3],
                &[4, 5],
                &[5, 6],
                &[4, 6],
                &[4, 5],
            ],
        );
        let r = standard_ordering(&f, StartRule::LowestIndex, ComponentRule::DIncreasing);
        assert_eq!(r.report.max_delta, 1);
        assert!(r.ordering.as_slice()[..4].iter().all(|&i| i >= 4));
    }

    #[test]
    fn two_set_on_disjoint_pairs() {
        let f = instances::gen_disjoint_pairs(10, 5).unwrap();
        let r = two_set_optimal(&f).unwrap();
        assert_eq!(r.report.max_delta, 5);
        assert!(r.optimal);
    }

    #[test]
    fn two_set_on_spanning_connected_family() {
        // A cycle on 6 vertices plus a chord: m = 7 >= n - 1.
        let f = fam(
            6,
            2,
            &[
                &[1, 2],
                &[2, 3],
                &[3, 4],
                &[4, 5],
                &[5, 6],
                &[1, 6],
                &[2, 5],
            ],
        );
        let r = two_set_optimal(&f).unwrap();
        assert_eq!(r.report.max_delta, 1);
    }

    #[test]
    fn two_set_mixed_matches_dp() {
        // Triangle plus two disjoint pairs on 7 elements.
        let f = fam(7, 2, &[&[1, 2], &[2, 3], &[1, 3], &[4, 5], &[6, 7]]);
        let exact = two_set_optimal(&f).unwrap();
        let dp = subset_dp_exact(&f, &SearchBudget::default()).unwrap();
        assert_eq!(exact.report.max_delta, dp.report.max_delta);
        assert_eq!(exact.report.max_delta, 2);
    }

    #[test]
    fn two_set_with_singleton_sets_matches_dp() {
        // Two copies of a singleton next to a doubled-edge triangle; the
        // scheduling must put the denser component first.
        let f = fam(
            4,
            2,
            &[&[4], &[4], &[1, 2], &[1, 2], &[2, 3], &[2, 3], &[1, 3]],
        );
        let exact = two_set_optimal(&f).unwrap();
        let dp = subset_dp_exact(&f, &SearchBudget::default()).unwrap();
        assert_eq!(exact.report.max_delta, dp.report.max_delta);
    }

    #[test]
    fn two_set_rejects_triples() {
        let f = fam(3, 3, &[&[1, 2, 3]]);
        assert!(two_set_optimal(&f).is_err());
    }

    #[test]
    fn dp_on_fano_plane() {
        let f = instances::fano();
        let r = subset_dp_exact(&f, &SearchBudget::default()).unwrap();
        assert_eq!(r.report.max_delta, 3);
        assert!(r.optimal);
    }

    #[test]
    fn dp_on_single_triple() {
        let f = fam(3, 3, &[&[1, 2, 3]]);
        let r = subset_dp_exact(&f, &SearchBudget::default()).unwrap();
        assert_eq!(r.report.max_delta, 2);
    }

    #[test]
    fn dp_refuses_oversized_family() {
        let sets: Vec<Vec<u32>> = (0..30).map(|i| vec![i + 1, i + 2]).collect();
        let f = SetFamily::new(40, 2, sets).unwrap();
        match subset_dp_exact(&f, &SearchBudget::default()) {
            Err(Error::Budget(_)) => {}
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn dp_handles_empty_family() {
        let f = SetFamily::new(3, 2, vec![]).unwrap();
        let r = subset_dp_exact(&f, &SearchBudget::default()).unwrap();
        assert_eq!(r.report.max_delta, 0);
        assert!(r.optimal);
    }

    #[test]
    fn branch_bound_matches_dp_on_fano() {
        let f = instances::fano();
        let r = branch_bound(&f, &SearchBudget::default(), None);
        assert_eq!(r.report.max_delta, 3);
        assert!(r.optimal);
    }

    #[test]
    fn branch_bound_single_set() {
        let f = fam(4, 3, &[&[2, 3, 4]]);
        let r = branch_bound(&f, &SearchBudget::default(), None);
        assert_eq!(r.ordering.as_slice(), &[1]);
        assert_eq!(r.report.max_delta, 2);
        assert!(r.optimal);
    }

    #[test]
    fn branch_bound_matches_dp_on_random_18() {
        let f = instances::gen_random3(18, instances::Seed(7));
        let dp = subset_dp_exact(&f, &SearchBudget::default()).unwrap();
        let bb = branch_bound(&f, &SearchBudget::default(), None);
        assert!(bb.optimal);
        assert_eq!(bb.report.max_delta, dp.report.max_delta);
    }

    #[test]
    fn greedy_never_beats_dp() {
        for seed in 0..30 {
            let f = instances::gen_uniform_random(8, 7, 3, instances::Seed(seed)).unwrap();
            let g = standard_ordering(&f, StartRule::LowestIndex, ComponentRule::DIncreasing);
            let dp = subset_dp_exact(&f, &SearchBudget::default()).unwrap();
            assert!(g.report.max_delta >= dp.report.max_delta);
        }
    }
}
