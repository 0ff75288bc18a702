//! Orderings of set families that minimize the prefix excess, and a GF(q)
//! gluing solver whose running state is governed by that excess.
//!
//! A [`SetFamily`] is an ordered multiset of member sets over a ground set
//! `[1, n]`, each of size at most `c`. Given a permutation of the members,
//! the *prefix excess* after `k` sets is the number of distinct elements
//! covered so far minus `k`. Its maximum over `k` is the width of that
//! ordering, and the minimum width over all permutations is the width of the
//! family. When each member set is the support of a sparse linear equation
//! over GF(q), the gluing solver that processes equations in that order
//! keeps exactly `q^excess` partial solutions at every consistent,
//! independent step — so minimizing the excess minimizes the solver's state.
//!
//! The crate provides:
//!
//! - [`family`]: the family type, excess profiles, the primal graph, and
//!   connected components with their scheduling invariants;
//! - [`order`]: the greedy standard ordering, an exact polynomial method for
//!   families of pairs, exact dynamic programming over subsets, and an
//!   anytime branch-and-bound search;
//! - [`bounds`]: closed-form worst-case bounds and the binary-entropy
//!   certificate for the random-family lower bound;
//! - [`instances`]: reproducible generators (Fano plane, Steiner triple
//!   systems, random permutation triples) driven by a pinned SplitMix64;
//! - [`glue`]: sparse linear systems over GF(q), the gluing solver with its
//!   state-size trace, a brute-force oracle, and prefix ranks;
//! - [`text`]: the plain-text formats for families, orderings, and systems;
//! - [`cli`]: the command-line surface wired onto all of the above.
//!
//! Start with the runnable examples (`cargo run --example ordering_search`)
//! for a tour of each capability.

pub mod bounds;
pub mod cli;
pub mod family;
pub mod glue;
pub mod instances;
pub mod order;
pub mod text;

pub use family::{
    components, connectivity_lower_bound_check, delta_profile, primal_graph, ComponentStats,
    DeltaReport, Ordering, PrimalGraph, SetFamily,
};
pub use order::{
    branch_bound, standard_ordering, subset_dp_exact, two_set_optimal, ComponentRule, Method,
    OrderingResult, SearchBudget, StartRule,
};

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A text input could not be parsed; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A value violates a domain precondition (ranges, invariants).
    #[error("{0}")]
    Domain(String),
    /// An exact method refused to run because a budget would be exceeded.
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// A method does not apply to the given input.
    #[error("not applicable: {0}")]
    Inapplicable(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
