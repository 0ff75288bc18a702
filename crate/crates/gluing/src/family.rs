//! Set families, orderings, and the prefix-excess profile.
//!
//! The excess of an ordering after `k` sets is `|union of the first k| - k`.
//! Everything else in the crate is built on computing, bounding, or
//! minimizing the maximum of this profile.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::Error;

/// Ground sets larger than this are rejected; unions are dense bit vectors.
pub const MAX_GROUND_SET: u32 = 1_000_000;

/// An ordered multiset of member sets over the ground set `[1, n]`.
///
/// Member sets keep their position and multiplicity: the same set may occur
/// several times and each occurrence counts separately. Elements within a
/// set are stored sorted; ground elements covered by no member set are
/// legal (the declared `n` may exceed the covered union).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    n: u32,
    c: u32,
    sets: Vec<Vec<u32>>,
}

/// Checks the declared shape parameters; shared by the constructor and the
/// text parser.
pub(crate) fn validate_shape(n: u32, c: u32) -> Result<(), String> {
    if n == 0 || n > MAX_GROUND_SET {
        return Err(format!(
            "ground-set size must be in [1, {MAX_GROUND_SET}], got {n}"
        ));
    }
    if c == 0 || c > n {
        return Err(format!(
            "set-size cap must be in [1, n] = [1, {n}], got {c}"
        ));
    }
    Ok(())
}

/// Sorts one member set in place and checks its invariants against (n, c).
pub(crate) fn validate_set(set: &mut [u32], n: u32, c: u32) -> Result<(), String> {
    set.sort_unstable();
    if set.is_empty() || set.len() > c as usize {
        return Err(format!("set has {} elements, want 1..={c}", set.len()));
    }
    if set.windows(2).any(|w| w[0] == w[1]) {
        return Err("set repeats an element".into());
    }
    if set[0] < 1 || set[set.len() - 1] > n {
        return Err(format!("set has an element outside [1, {n}]"));
    }
    Ok(())
}

impl SetFamily {
    /// Validates and canonicalizes a family. Each set must be nonempty, hold
    /// distinct elements of `[1, n]`, and have at most `c` elements.
    pub fn new(n: u32, c: u32, sets: Vec<Vec<u32>>) -> Result<Self, Error> {
        validate_shape(n, c).map_err(Error::Domain)?;
        let mut canonical = Vec::with_capacity(sets.len());
        for (i, mut set) in sets.into_iter().enumerate() {
            validate_set(&mut set, n, c)
                .map_err(|msg| Error::Domain(format!("set {}: {msg}", i + 1)))?;
            canonical.push(set);
        }
        Ok(SetFamily {
            n,
            c,
            sets: canonical,
        })
    }

    /// Declared ground-set size `n`.
    pub fn ground_size(&self) -> u32 {
        self.n
    }

    /// The size cap `c`.
    pub fn cap(&self) -> u32 {
        self.c
    }

    /// Number of member sets `m`.
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// All member sets in declaration order, elements sorted.
    pub fn sets(&self) -> &[Vec<u32>] {
        &self.sets
    }

    /// The `i`-th member set, 0-based.
    pub fn set(&self, i: usize) -> &[u32] {
        &self.sets[i]
    }

    /// Sorted union of all member sets. May be smaller than `[1, n]`.
    pub fn covered_elements(&self) -> Vec<u32> {
        let mut seen = ElementSet::new(self.n);
        let mut out = Vec::new();
        for set in &self.sets {
            for &e in set {
                if seen.insert(e) {
                    out.push(e);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `|union of all member sets|`.
    pub fn covered_count(&self) -> usize {
        let mut seen = ElementSet::new(self.n);
        let mut count = 0;
        for set in &self.sets {
            for &e in set {
                if seen.insert(e) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Enlarges every member set to exactly `c` elements by adding the
    /// smallest ground elements not already present. Positions and
    /// multiplicities are preserved; the excess can only grow.
    pub fn pad_to_cap(&self) -> Result<SetFamily, Error> {
        if self.n < self.c {
            return Err(Error::Domain(format!(
                "cannot pad sets to {} elements over a {}-element ground set",
                self.c, self.n
            )));
        }
        let mut padded = Vec::with_capacity(self.sets.len());
        for set in &self.sets {
            let mut grown = set.clone();
            let mut next = 1;
            while grown.len() < self.c as usize {
                if !set.contains(&next) {
                    grown.push(next);
                }
                next += 1;
            }
            grown.sort_unstable();
            padded.push(grown);
        }
        SetFamily::new(self.n, self.c, padded)
    }
}

/// A permutation of the member-set indices `[1, m]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ordering(Vec<u32>);

impl Ordering {
    /// Validates that `perm` is a bijection on `[1, perm.len()]`.
    pub fn new(perm: Vec<u32>) -> Result<Self, Error> {
        let m = perm.len();
        let mut seen = vec![false; m];
        for &p in &perm {
            if p < 1 || p as usize > m {
                return Err(Error::Domain(format!(
                    "ordering entry {p} outside [1, {m}]"
                )));
            }
            if seen[p as usize - 1] {
                return Err(Error::Domain(format!("ordering repeats entry {p}")));
            }
            seen[p as usize - 1] = true;
        }
        Ok(Ordering(perm))
    }

    /// The identity ordering `1, 2, ..., m`.
    pub fn identity(m: usize) -> Self {
        Ordering((1..=m as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based set indices in visit order.
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// The excess profile of one ordering: `profile[k-1]` is the number of
/// covered elements after `k` sets minus `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub profile: Vec<i64>,
    /// Maximum of the profile; `0` for an empty family by convention (the
    /// empty prefix admits exactly one partial state).
    pub max_delta: i64,
    /// Smallest 1-based `k` attaining the maximum; `0` for an empty family.
    pub argmax_k: usize,
}

/// Computes the excess profile of `family` under `order`.
///
/// Fails if the ordering's length does not match the family's.
pub fn delta_profile(family: &SetFamily, order: &Ordering) -> Result<DeltaReport, Error> {
    if order.len() != family.len() {
        return Err(Error::Domain(format!(
            "ordering has {} entries, family has {} sets",
            order.len(),
            family.len()
        )));
    }
    let mut union = ElementSet::new(family.ground_size());
    let mut covered: i64 = 0;
    let mut profile = Vec::with_capacity(family.len());
    for (k, &idx) in order.as_slice().iter().enumerate() {
        for &e in family.set(idx as usize - 1) {
            if union.insert(e) {
                covered += 1;
            }
        }
        profile.push(covered - (k as i64 + 1));
    }
    Ok(report_from_profile(profile))
}

pub(crate) fn report_from_profile(profile: Vec<i64>) -> DeltaReport {
    let mut max_delta = 0;
    let mut argmax_k = 0;
    for (i, &v) in profile.iter().enumerate() {
        if i == 0 || v > max_delta {
            max_delta = v;
            argmax_k = i + 1;
        }
    }
    DeltaReport {
        profile,
        max_delta,
        argmax_k,
    }
}

/// The primal graph: vertices are the covered elements, and two elements are
/// joined whenever some member set contains both. Edge multiplicity counts
/// the member sets containing the pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalGraph {
    pub vertices: Vec<u32>,
    edges: BTreeMap<(u32, u32), u32>,
}

impl PrimalGraph {
    /// Number of member sets containing both `a` and `b`.
    pub fn multiplicity(&self, a: u32, b: u32) -> u32 {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.get(&key).copied().unwrap_or(0)
    }

    /// Distinct edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(a, b)` with `a < b` and their multiplicities, ascending.
    pub fn edges(&self) -> impl Iterator<Item = ((u32, u32), u32)> + '_ {
        self.edges.iter().map(|(&e, &m)| (e, m))
    }
}

/// Builds the primal graph of a family.
pub fn primal_graph(family: &SetFamily) -> PrimalGraph {
    let mut edges = BTreeMap::new();
    for set in family.sets() {
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                *edges.entry((set[i], set[j])).or_insert(0) += 1;
            }
        }
    }
    PrimalGraph {
        vertices: family.covered_elements(),
        edges,
    }
}

/// One connected component of the primal graph with its scheduling keys.
///
/// `size` counts the member sets contained in the component, `d` is
/// `order - size`, and `gamma` is `size - ceil((order - 1) / 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentStats {
    /// Sorted elements of the component.
    pub vertices: Vec<u32>,
    pub size: usize,
    pub d: i64,
    pub gamma: i64,
}

impl ComponentStats {
    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// Connected components of the primal graph, sorted by smallest contained
/// vertex. Every member set lies in exactly one component (its elements form
/// a clique), so the sizes sum to `m` and the orders sum to the covered
/// count.
pub fn components(family: &SetFamily) -> Vec<ComponentStats> {
    let covered = family.covered_elements();
    let mut dsu = DisjointSets::new(family.ground_size() as usize + 1);
    for set in family.sets() {
        for w in set.windows(2) {
            dsu.union(w[0] as usize, w[1] as usize);
        }
    }
    let mut groups: BTreeMap<usize, ComponentStats> = BTreeMap::new();
    for &v in &covered {
        let root = dsu.find(v as usize);
        groups
            .entry(root)
            .or_insert_with(|| ComponentStats {
                vertices: Vec::new(),
                size: 0,
                d: 0,
                gamma: 0,
            })
            .vertices
            .push(v);
    }
    for set in family.sets() {
        let root = dsu.find(set[0] as usize);
        groups.get_mut(&root).expect("set vertex is covered").size += 1;
    }
    let mut out: Vec<ComponentStats> = groups.into_values().collect();
    for comp in &mut out {
        comp.vertices.sort_unstable();
        let order = comp.vertices.len() as i64;
        comp.d = order - comp.size as i64;
        // ceil((order - 1) / 2) == floor(order / 2) for order >= 1
        comp.gamma = comp.size as i64 - order / 2;
    }
    out.sort_by_key(|c| c.vertices[0]);
    out
}

/// Whether the primal graph is connected (exactly one component).
pub fn is_connected(family: &SetFamily) -> bool {
    components(family).len() == 1
}

/// Sanity assertion for connected families: `m >= ceil((u - 1) / (c - 1))`
/// where `u` is the covered count. Holds for every valid connected family;
/// exposed so harnesses can assert it. Fails on disconnected input.
pub fn connectivity_lower_bound_check(family: &SetFamily) -> Result<bool, Error> {
    if !is_connected(family) {
        return Err(Error::Inapplicable(
            "connectivity bound requires a connected family".into(),
        ));
    }
    let u = family.covered_count() as u64;
    if u <= 1 {
        return Ok(true);
    }
    // Connected on >= 2 vertices forces some set of size >= 2, so c >= 2.
    let c = family.cap() as u64;
    let needed = (u - 1).div_ceil(c - 1);
    Ok(family.len() as u64 >= needed)
}

/// Dense bit vector over `[1, n]` used for union bookkeeping.
#[derive(Debug, Clone)]
pub(crate) struct ElementSet {
    words: Vec<u64>,
}

impl ElementSet {
    pub(crate) fn new(n: u32) -> Self {
        ElementSet {
            words: vec![0; (n as usize + 64) / 64],
        }
    }

    /// Inserts `e`, returning whether it was new.
    pub(crate) fn insert(&mut self, e: u32) -> bool {
        let (w, b) = ((e as usize - 1) / 64, (e as usize - 1) % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub(crate) fn contains(&self, e: u32) -> bool {
        let (w, b) = ((e as usize - 1) / 64, (e as usize - 1) % 64);
        self.words[w] & (1 << b) != 0
    }

    pub(crate) fn remove(&mut self, e: u32) {
        let (w, b) = ((e as usize - 1) / 64, (e as usize - 1) % 64);
        self.words[w] &= !(1 << b);
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
