//! Shared generators for the integration suites. Everything is driven by
//! the crate's own SplitMix64 so runs are deterministic.

#![allow(dead_code)]

use gluing::family::{Ordering, SetFamily};
use gluing::glue::{FieldSpec, LinearSystem};
use gluing::instances::{Seed, SplitMix64};

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::new(Seed(seed))
}

/// A family with mixed set sizes in `[1, c]`.
pub fn random_family(rng: &mut SplitMix64, n: u32, m: usize, c: u32) -> SetFamily {
    let c = c.min(n);
    let mut sets = Vec::with_capacity(m);
    for _ in 0..m {
        let size = 1 + rng.next_below(u64::from(c)) as u32;
        let mut set = Vec::new();
        while (set.len() as u32) < size {
            let e = 1 + rng.next_below(u64::from(n)) as u32;
            if !set.contains(&e) {
                set.push(e);
            }
        }
        sets.push(set);
    }
    SetFamily::new(n, c, sets).expect("generated family is valid")
}

pub fn random_ordering(rng: &mut SplitMix64, m: usize) -> Ordering {
    Ordering::new(rng.permutation(m)).expect("permutation")
}

/// A connected family of 2- and 3-element sets: every set after the first
/// reuses at least one covered element.
pub fn random_connected_triple_family(rng: &mut SplitMix64, n: u32, m: usize) -> SetFamily {
    assert!(n >= 3 && m >= 1);
    let mut covered: Vec<u32> = Vec::new();
    let mut sets = Vec::with_capacity(m);
    let mut first = Vec::new();
    while first.len() < 3 {
        let e = 1 + rng.next_below(u64::from(n)) as u32;
        if !first.contains(&e) {
            first.push(e);
        }
    }
    covered.extend(&first);
    sets.push(first);
    for _ in 1..m {
        let size = 2 + rng.next_below(2) as usize;
        let mut set = vec![covered[rng.next_below(covered.len() as u64) as usize]];
        while set.len() < size {
            let e = 1 + rng.next_below(u64::from(n)) as u32;
            if !set.contains(&e) {
                set.push(e);
            }
        }
        for &e in &set {
            if !covered.contains(&e) {
                covered.push(e);
            }
        }
        sets.push(set);
    }
    SetFamily::new(n, 3, sets).expect("generated family is valid")
}

/// A random sparse system: supports of size `1..=3`, nonzero coefficients,
/// uniform right-hand sides. With `allow_duplicates`, some equations are
/// literal copies of earlier ones.
pub fn random_system(
    rng: &mut SplitMix64,
    q: u32,
    n: u32,
    m: usize,
    allow_duplicates: bool,
) -> LinearSystem {
    let field = FieldSpec::new(q).expect("prime modulus");
    let mut eqs: Vec<(Vec<(u32, u32)>, u32)> = Vec::with_capacity(m);
    for i in 0..m {
        if allow_duplicates && i > 0 && rng.next_below(5) == 0 {
            let j = rng.next_below(i as u64) as usize;
            eqs.push(eqs[j].clone());
            continue;
        }
        let size = 1 + rng.next_below(3.min(u64::from(n))) as usize;
        let mut vars: Vec<u32> = Vec::new();
        while vars.len() < size {
            let v = 1 + rng.next_below(u64::from(n)) as u32;
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        let terms = vars
            .into_iter()
            .map(|v| (v, 1 + rng.next_below(u64::from(q) - 1) as u32))
            .collect();
        eqs.push((terms, rng.next_below(u64::from(q)) as u32));
    }
    LinearSystem::new(field, n, 3.min(n), eqs).expect("generated system is valid")
}

/// A system whose coefficient rows are linearly independent (hence
/// consistent for any right-hand side, with every prefix of full rank).
pub fn random_independent_system(rng: &mut SplitMix64, q: u32, n: u32, m: usize) -> LinearSystem {
    use gluing::glue::prefix_rank;
    loop {
        let sys = random_system(rng, q, n, m, false);
        let full = prefix_rank(&sys, &Ordering::identity(m), m).expect("rank");
        if full == m {
            return sys;
        }
    }
}

/// Calls `visit(m, edges)` for every subset of the edges of the complete
/// graph on `[1, n]`.
pub fn for_all_graphs(n: u32, mut visit: impl FnMut(usize, &[(u32, u32)])) {
    let mut pairs = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            pairs.push((a, b));
        }
    }
    let total = pairs.len();
    let mut edges = Vec::with_capacity(total);
    for mask in 0u32..(1 << total) {
        edges.clear();
        for (i, &p) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                edges.push(p);
            }
        }
        visit(edges.len(), &edges);
    }
}

/// Number of components with at least two vertices in an edge list.
pub fn nontrivial_component_count(n: u32, edges: &[(u32, u32)]) -> usize {
    let mut parent: Vec<u32> = (0..=n).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra as usize] = rb;
        }
    }
    let mut roots: Vec<u32> = edges
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .map(|v| find(&mut parent, v))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}
