//! Sparse linear systems over GF(q) and the gluing solver.
//!
//! The solver processes equations in a caller-chosen order, maintaining the
//! set `S_k` of all assignments to the variables discovered so far that
//! satisfy the first `k` equations. Joining `S_k` with the next equation
//! extends each partial assignment over the equation's new variables. When
//! the first `k` equations are consistent and linearly independent,
//! `|S_k| = q^(u_k - k)` where `u_k` counts the discovered variables — the
//! prefix excess of the support family, base `q`. Ordering the equations to
//! minimize that excess therefore minimizes the solver's peak state.

use serde::Serialize;

use crate::family::{delta_profile, Ordering, SetFamily};
use crate::Error;

/// Largest admissible prime modulus.
pub const MAX_PRIME: u32 = 65_521;

/// A prime modulus `q` with the field arithmetic hung off it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldSpec {
    q: u32,
}

impl FieldSpec {
    /// Validates that `q` is prime and at most [`MAX_PRIME`].
    pub fn new(q: u32) -> Result<Self, Error> {
        if !(2..=MAX_PRIME).contains(&q) {
            return Err(Error::Domain(format!(
                "modulus must lie in [2, {MAX_PRIME}], got {q}"
            )));
        }
        let mut d = 2u32;
        while d * d <= q {
            if q.is_multiple_of(d) {
                return Err(Error::Domain(format!("modulus {q} is not prime")));
            }
            d += 1;
        }
        Ok(FieldSpec { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((u64::from(a) * u64::from(b)) % u64::from(self.q)) as u32
    }

    fn pow(&self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element, by Fermat's little
    /// theorem.
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.q), "zero has no inverse");
        if self.q == 2 {
            return 1;
        }
        self.pow(a, self.q - 2)
    }
}

/// One sparse equation `sum of coeff * x_var = rhs (mod q)`. Terms are kept
/// sorted by variable; coefficients are nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    terms: Vec<(u32, u32)>,
    rhs: u32,
}

impl Equation {
    /// `(variable, coefficient)` pairs sorted by variable id.
    pub fn terms(&self) -> &[(u32, u32)] {
        &self.terms
    }

    pub fn rhs(&self) -> u32 {
        self.rhs
    }

    /// Variable ids in ascending order.
    pub fn support(&self) -> Vec<u32> {
        self.terms.iter().map(|&(v, _)| v).collect()
    }
}

/// A system of sparse equations over GF(q) in `n` variables, each touching
/// at most `cap` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    field: FieldSpec,
    n: u32,
    cap: u32,
    equations: Vec<Equation>,
}

/// Checks the declared shape parameters; shared by the constructor and the
/// text parser.
pub(crate) fn validate_system_shape(n: u32, cap: u32) -> Result<(), String> {
    if n == 0 {
        return Err("need at least one variable".into());
    }
    if cap == 0 || cap > n {
        return Err(format!(
            "per-equation variable cap must be in [1, n] = [1, {n}], got {cap}"
        ));
    }
    Ok(())
}

/// Sorts one equation's terms by variable and checks its invariants.
pub(crate) fn validate_equation(
    terms: &mut [(u32, u32)],
    rhs: u32,
    n: u32,
    cap: u32,
    q: u32,
) -> Result<(), String> {
    terms.sort_unstable_by_key(|&(v, _)| v);
    if terms.is_empty() || terms.len() > cap as usize {
        return Err(format!(
            "equation has {} terms, want 1..={cap}",
            terms.len()
        ));
    }
    if terms.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err("equation repeats a variable".into());
    }
    for &(v, a) in terms.iter() {
        if v < 1 || v > n {
            return Err(format!("variable {v} outside [1, {n}]"));
        }
        if a < 1 || a >= q {
            return Err(format!("coefficient {a} outside [1, {}]", q - 1));
        }
    }
    if rhs >= q {
        return Err(format!("right-hand side {rhs} outside [0, {}]", q - 1));
    }
    Ok(())
}

impl LinearSystem {
    /// Validates every equation: 1 to `cap` terms, distinct variables in
    /// `[1, n]`, coefficients in `[1, q-1]`, right-hand side in `[0, q-1]`.
    pub fn new(
        field: FieldSpec,
        n: u32,
        cap: u32,
        equations: Vec<(Vec<(u32, u32)>, u32)>,
    ) -> Result<Self, Error> {
        validate_system_shape(n, cap).map_err(Error::Domain)?;
        let q = field.q();
        let mut canonical = Vec::with_capacity(equations.len());
        for (i, (mut terms, rhs)) in equations.into_iter().enumerate() {
            validate_equation(&mut terms, rhs, n, cap, q)
                .map_err(|msg| Error::Domain(format!("equation {}: {msg}", i + 1)))?;
            canonical.push(Equation { terms, rhs });
        }
        Ok(LinearSystem {
            field,
            n,
            cap,
            equations: canonical,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn variable_count(&self) -> u32 {
        self.n
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }
}

/// The supports of the equations as a set family, with `n` and the cap
/// carried over; ordering the family is ordering the system.
pub fn support_family(sys: &LinearSystem) -> SetFamily {
    let sets = sys.equations.iter().map(|e| e.support()).collect();
    SetFamily::new(sys.n, sys.cap, sets).expect("supports satisfy the family invariants")
}

/// Advances a base-q digit counter (last digit fastest); false on wrap.
fn next_digits(digits: &mut [u16], q: u32) -> bool {
    let mut pos = digits.len();
    while pos > 0 {
        digits[pos - 1] += 1;
        if u32::from(digits[pos - 1]) < q {
            return true;
        }
        digits[pos - 1] = 0;
        pos -= 1;
    }
    false
}

/// State-size trace of one step: after joining equation number `k` in the
/// visit order.
#[derive(Debug, Clone, Serialize)]
pub struct GlueStep {
    /// `|S_k|`: partial assignments alive after this step.
    pub state_count: u64,
    /// Prefix excess of the support family at this step.
    pub delta: i64,
    /// Cumulative extension work: one unit per substitution into a partial
    /// assignment plus one per emitted extension.
    pub work: u64,
}

/// Partial assignments over the variables discovered while gluing.
#[derive(Debug, Clone, Serialize)]
pub struct SolutionSet {
    /// Discovered variables in discovery order; assignments index into it.
    pub variables: Vec<u32>,
    /// Each assignment gives one digit in `[0, q-1]` per discovered
    /// variable, sorted lexicographically.
    pub assignments: Vec<Vec<u16>>,
}

/// Full output of the gluing run.
#[derive(Debug, Clone, Serialize)]
pub struct GlueTrace {
    /// One entry per executed step; shorter than `m` when some `S_k` came
    /// out empty and the run stopped early.
    pub steps: Vec<GlueStep>,
    /// Assignments to the discovered variables satisfying every processed
    /// equation.
    pub solutions: SolutionSet,
    /// Variables that occur in no equation; enumerated only on demand.
    pub free_variables: u64,
    /// `|S_m| * q^free`, the number of full assignments satisfying the
    /// system; `None` if it overflows 128 bits.
    pub total_solution_count: Option<u128>,
}

impl GlueTrace {
    /// Largest `|S_k|` along the run.
    pub fn peak_states(&self) -> u64 {
        self.steps.iter().map(|s| s.state_count).max().unwrap_or(1)
    }
}

/// Runs the gluing solver over the system's equations in the given order.
///
/// `S_0` holds the empty assignment. Step `k` substitutes each partial
/// assignment into the next equation and extends it over the equation's new
/// variables: with `v` new variables the reduced equation fixes one of them,
/// giving `q^(v-1)` extensions; with no new variables it keeps or kills the
/// assignment depending on the reduced constant. Inconsistent systems yield
/// an empty state set and stop early with the trace so far.
pub fn glue_solve(sys: &LinearSystem, order: &Ordering) -> Result<GlueTrace, Error> {
    let m = sys.len();
    if order.len() != m {
        return Err(Error::Domain(format!(
            "ordering has {} entries, system has {m} equations",
            order.len()
        )));
    }
    let field = sys.field;
    let q = field.q();
    let support = support_family(sys);
    let excess = delta_profile(&support, order)?;

    // slot[v] = position of variable v in discovery order, if discovered.
    let mut slot: Vec<Option<usize>> = vec![None; sys.n as usize + 1];
    let mut discovered: Vec<u32> = Vec::new();
    let mut states: Vec<Vec<u16>> = vec![Vec::new()];
    let mut steps = Vec::with_capacity(m);
    let mut work: u64 = 0;

    for (k, &eq_index) in order.as_slice().iter().enumerate() {
        let eq = &sys.equations[eq_index as usize - 1];
        let mut known: Vec<(usize, u32)> = Vec::new();
        let mut fresh: Vec<(u32, u32)> = Vec::new();
        for &(v, a) in eq.terms() {
            match slot[v as usize] {
                Some(s) => known.push((s, a)),
                None => fresh.push((v, a)),
            }
        }
        for &(v, _) in &fresh {
            slot[v as usize] = Some(discovered.len());
            discovered.push(v);
        }

        let mut next: Vec<Vec<u16>> = Vec::new();
        for state in &states {
            work += 1;
            let mut residual = eq.rhs();
            for &(s, a) in &known {
                residual = field.sub(residual, field.mul(a, u32::from(state[s])));
            }
            if fresh.is_empty() {
                if residual == 0 {
                    work += 1;
                    next.push(state.clone());
                }
                continue;
            }
            let (last_var, last_coeff) = fresh[fresh.len() - 1];
            let free = &fresh[..fresh.len() - 1];
            let last_inv = field.inv(last_coeff);
            let mut digits = vec![0u16; free.len()];
            loop {
                let mut rem = residual;
                for (d, &(_, a)) in digits.iter().zip(free.iter()) {
                    rem = field.sub(rem, field.mul(a, u32::from(*d)));
                }
                let solved = field.mul(rem, last_inv);
                let mut extended = Vec::with_capacity(state.len() + fresh.len());
                extended.extend_from_slice(state);
                extended.extend_from_slice(&digits);
                extended.push(solved as u16);
                debug_assert_eq!(extended.len(), discovered.len());
                debug_assert_eq!(slot[last_var as usize], Some(extended.len() - 1));
                work += 1;
                next.push(extended);
                if !next_digits(&mut digits, q) {
                    break;
                }
            }
        }
        next.sort_unstable();
        states = next;
        steps.push(GlueStep {
            state_count: states.len() as u64,
            delta: excess.profile[k],
            work,
        });
        if states.is_empty() {
            break;
        }
    }

    // Variables outside every support, including any not reached before an
    // early stop.
    let mut support_vars = vec![false; sys.n as usize + 1];
    for eq in &sys.equations {
        for &(v, _) in eq.terms() {
            support_vars[v as usize] = true;
        }
    }
    let supported = support_vars.iter().filter(|&&b| b).count() as u64;
    let free_variables = u64::from(sys.n) - supported;

    let total_solution_count = (q as u128)
        .checked_pow(free_variables.try_into().unwrap_or(u32::MAX))
        .and_then(|f| f.checked_mul(states.len() as u128));

    Ok(GlueTrace {
        steps,
        solutions: SolutionSet {
            variables: discovered,
            assignments: states,
        },
        free_variables,
        total_solution_count,
    })
}

/// Expands a gluing trace to full assignments over all `n` variables,
/// enumerating the free and never-discovered variables over the whole
/// field. Refuses when more than `max_count` assignments would materialize.
/// Results are sorted lexicographically, matching [`brute_force_solve`].
pub fn materialize_full(
    sys: &LinearSystem,
    trace: &GlueTrace,
    max_count: u128,
) -> Result<Vec<Vec<u16>>, Error> {
    let q = sys.field.q();
    let n = sys.n as usize;
    let mut fixed_slot: Vec<Option<usize>> = vec![None; n + 1];
    for (i, &v) in trace.solutions.variables.iter().enumerate() {
        fixed_slot[v as usize] = Some(i);
    }
    let unfixed: Vec<u32> = (1..=sys.n)
        .filter(|&v| fixed_slot[v as usize].is_none())
        .collect();
    let expansion = (q as u128)
        .checked_pow(unfixed.len() as u32)
        .and_then(|e| e.checked_mul(trace.solutions.assignments.len() as u128))
        .ok_or_else(|| Error::Budget("materialized solution count overflows".into()))?;
    if expansion > max_count {
        return Err(Error::Budget(format!(
            "materializing {expansion} assignments exceeds the cap of {max_count}"
        )));
    }

    let mut out = Vec::with_capacity(expansion as usize);
    for assignment in &trace.solutions.assignments {
        let mut base = vec![0u16; n];
        for (i, &v) in trace.solutions.variables.iter().enumerate() {
            base[v as usize - 1] = assignment[i];
        }
        let mut digits = vec![0u16; unfixed.len()];
        loop {
            let mut full = base.clone();
            for (d, &v) in digits.iter().zip(unfixed.iter()) {
                full[v as usize - 1] = *d;
            }
            out.push(full);
            if !next_digits(&mut digits, q) {
                break;
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Enumerates all `q^n` assignments in lexicographic order and keeps those
/// satisfying every equation. Guarded to `q^n <= 2^24`.
pub fn brute_force_solve(sys: &LinearSystem) -> Result<Vec<Vec<u16>>, Error> {
    let q = sys.field.q();
    let mut space: u128 = 1;
    for _ in 0..sys.n {
        space = space.saturating_mul(u128::from(q));
        if space > 1 << 24 {
            return Err(Error::Budget(format!(
                "brute force needs q^n <= 2^24, got {}^{}",
                q, sys.n
            )));
        }
    }
    let field = sys.field;
    let n = sys.n as usize;
    let mut out = Vec::new();
    let mut assignment = vec![0u16; n];
    loop {
        let ok = sys.equations.iter().all(|eq| {
            let mut acc = 0u32;
            for &(v, a) in eq.terms() {
                acc = field.add(acc, field.mul(a, u32::from(assignment[v as usize - 1])));
            }
            acc == eq.rhs()
        });
        if ok {
            out.push(assignment.clone());
        }
        if !next_digits(&mut assignment, q) {
            break;
        }
    }
    Ok(out)
}

/// Rank over GF(q) of the coefficient rows of the first `k` equations in
/// the given order, by sparse elimination.
pub fn prefix_rank(sys: &LinearSystem, order: &Ordering, k: usize) -> Result<usize, Error> {
    if order.len() != sys.len() {
        return Err(Error::Domain(format!(
            "ordering has {} entries, system has {} equations",
            order.len(),
            sys.len()
        )));
    }
    if k > sys.len() {
        return Err(Error::Domain(format!(
            "prefix length {k} exceeds m = {}",
            sys.len()
        )));
    }
    let field = sys.field;
    // pivots: leading variable -> reduced row (sorted sparse form).
    let mut pivots: Vec<(u32, Vec<(u32, u32)>)> = Vec::new();
    let mut rank = 0;
    for &eq_index in &order.as_slice()[..k] {
        let mut row: Vec<(u32, u32)> = sys.equations[eq_index as usize - 1].terms().to_vec();
        while let Some(&(lead, coeff)) = row.first() {
            match pivots.iter().find(|(v, _)| *v == lead) {
                None => {
                    let inv = field.inv(coeff);
                    for entry in &mut row {
                        entry.1 = field.mul(entry.1, inv);
                    }
                    pivots.push((lead, row));
                    rank += 1;
                    break;
                }
                Some((_, pivot_row)) => {
                    // row -= coeff * pivot_row, keeping the sparse form sorted.
                    let mut merged: Vec<(u32, u32)> = Vec::new();
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < pivot_row.len() {
                        let next = match (row.get(i), pivot_row.get(j)) {
                            (Some(&(va, ca)), Some(&(vb, cb))) => {
                                if va == vb {
                                    i += 1;
                                    j += 1;
                                    (va, field.sub(ca, field.mul(coeff, cb)))
                                } else if va < vb {
                                    i += 1;
                                    (va, ca)
                                } else {
                                    j += 1;
                                    (vb, field.sub(0, field.mul(coeff, cb)))
                                }
                            }
                            (Some(&(va, ca)), None) => {
                                i += 1;
                                (va, ca)
                            }
                            (None, Some(&(vb, cb))) => {
                                j += 1;
                                (vb, field.sub(0, field.mul(coeff, cb)))
                            }
                            (None, None) => unreachable!(),
                        };
                        if next.1 != 0 {
                            merged.push(next);
                        }
                    }
                    row = merged;
                }
            }
        }
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> FieldSpec {
        FieldSpec::new(q).unwrap()
    }

    fn sys(q: u32, n: u32, cap: u32, eqs: &[(&[(u32, u32)], u32)]) -> LinearSystem {
        LinearSystem::new(
            gf(q),
            n,
            cap,
            eqs.iter().map(|(t, b)| (t.to_vec(), *b)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn field_validation() {
        assert!(FieldSpec::new(2).is_ok());
        assert!(FieldSpec::new(65521).is_ok());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(65522).is_err());
    }

    #[test]
    fn field_arithmetic() {
        let f = gf(7);
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.mul(3, 5), 1);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(gf(2).inv(1), 1);
    }

    #[test]
    fn system_validation() {
        assert!(LinearSystem::new(gf(5), 3, 2, vec![(vec![(1, 0)], 0)]).is_err());
        assert!(LinearSystem::new(gf(5), 3, 2, vec![(vec![(1, 5)], 0)]).is_err());
        assert!(LinearSystem::new(gf(5), 3, 2, vec![(vec![(4, 1)], 0)]).is_err());
        assert!(LinearSystem::new(gf(5), 3, 2, vec![(vec![(1, 1), (1, 2)], 0)]).is_err());
        assert!(LinearSystem::new(gf(5), 3, 2, vec![(vec![(1, 1), (2, 1), (3, 1)], 0)]).is_err());
        assert!(LinearSystem::new(gf(5), 3, 2, vec![(vec![(1, 1)], 5)]).is_err());
        assert!(LinearSystem::new(gf(5), 3, 2, vec![(vec![], 0)]).is_err());
    }

    #[test]
    fn support_family_carries_shape() {
        let s = sys(
            2,
            5,
            3,
            &[(&[(1, 1), (2, 1)], 1), (&[(3, 1), (4, 1), (5, 1)], 0)],
        );
        let f = support_family(&s);
        assert_eq!(f.ground_size(), 5);
        assert_eq!(f.cap(), 3);
        assert_eq!(f.set(0), &[1, 2]);
        assert_eq!(f.set(1), &[3, 4, 5]);
    }

    #[test]
    fn glue_two_equations_over_gf2() {
        // x1 + x2 = 1; x2 + x3 = 0.
        let s = sys(2, 3, 2, &[(&[(1, 1), (2, 1)], 1), (&[(2, 1), (3, 1)], 0)]);
        let trace = glue_solve(&s, &Ordering::identity(2)).unwrap();
        assert_eq!(trace.steps[0].state_count, 2);
        assert_eq!(trace.steps[1].state_count, 2);
        let full = materialize_full(&s, &trace, 1 << 20).unwrap();
        assert_eq!(full, vec![vec![0, 1, 1], vec![1, 0, 0]]);
    }

    #[test]
    fn glue_detects_contradiction() {
        // x1 = 0 and x1 = 1 reduce to 0 = 1 at the second step.
        let s = sys(3, 2, 2, &[(&[(1, 1)], 0), (&[(1, 2)], 1)]);
        let trace = glue_solve(&s, &Ordering::identity(2)).unwrap();
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(trace.steps[1].state_count, 0);
        assert_eq!(trace.total_solution_count, Some(0));
        assert!(trace.solutions.assignments.is_empty());
    }

    #[test]
    fn glue_duplicate_equation_keeps_states() {
        let s = sys(5, 4, 3, &[(&[(1, 2), (2, 3)], 4), (&[(1, 2), (2, 3)], 4)]);
        let trace = glue_solve(&s, &Ordering::identity(2)).unwrap();
        assert_eq!(trace.steps[0].state_count, 5);
        assert_eq!(trace.steps[1].state_count, 5);
        assert_eq!(trace.free_variables, 2);
        assert_eq!(trace.total_solution_count, Some(5 * 25));
    }

    #[test]
    fn brute_force_cases() {
        let unsat = sys(2, 2, 2, &[(&[(1, 1)], 0), (&[(1, 1)], 1)]);
        assert!(brute_force_solve(&unsat).unwrap().is_empty());

        let empty = LinearSystem::new(gf(2), 2, 2, vec![]).unwrap();
        assert_eq!(brute_force_solve(&empty).unwrap().len(), 4);

        let big = LinearSystem::new(gf(65521), 3, 2, vec![]).unwrap();
        assert!(matches!(brute_force_solve(&big), Err(Error::Budget(_))));
    }

    #[test]
    fn brute_force_matches_glue() {
        let s = sys(
            3,
            4,
            3,
            &[
                (&[(1, 1), (2, 2), (3, 1)], 2),
                (&[(2, 1), (4, 2)], 0),
                (&[(1, 2), (4, 1)], 1),
            ],
        );
        let trace = glue_solve(&s, &Ordering::identity(3)).unwrap();
        let glued = materialize_full(&s, &trace, 1 << 20).unwrap();
        let brute = brute_force_solve(&s).unwrap();
        assert_eq!(glued, brute);
    }

    #[test]
    fn prefix_rank_cases() {
        let dup = sys(5, 4, 3, &[(&[(1, 2), (2, 3)], 4), (&[(1, 2), (2, 3)], 4)]);
        assert_eq!(prefix_rank(&dup, &Ordering::identity(2), 2).unwrap(), 1);

        // A scaled copy of a row is still dependent.
        let scaled = sys(5, 4, 3, &[(&[(1, 2), (2, 3)], 4), (&[(1, 4), (2, 1)], 3)]);
        assert_eq!(prefix_rank(&scaled, &Ordering::identity(2), 2).unwrap(), 1);

        let indep = sys(
            2,
            3,
            2,
            &[
                (&[(1, 1), (2, 1)], 1),
                (&[(2, 1), (3, 1)], 0),
                (&[(3, 1)], 0),
            ],
        );
        for k in 0..=3 {
            assert_eq!(prefix_rank(&indep, &Ordering::identity(3), k).unwrap(), k);
        }
        assert!(prefix_rank(&indep, &Ordering::identity(3), 4).is_err());
    }

    #[test]
    fn large_prime_field_solves_exactly() {
        // Two independent pair equations over the largest modulus pin the
        // Fermat-inverse path: exactly one assignment on the covered pair.
        let f = gf(65521);
        let s = sys(
            65521,
            2,
            2,
            &[(&[(1, 12345), (2, 54321)], 999), (&[(1, 1), (2, 65520)], 1)],
        );
        let trace = glue_solve(&s, &Ordering::identity(2)).unwrap();
        assert_eq!(trace.steps[0].state_count, 65521);
        assert_eq!(trace.steps[1].state_count, 1);
        let solution = &trace.solutions.assignments[0];
        let (x1, x2) = (u32::from(solution[0]), u32::from(solution[1]));
        assert_eq!(f.add(f.mul(12345, x1), f.mul(54321, x2)), 999);
        assert_eq!(f.add(x1, f.mul(65520, x2)), 1);
    }

    #[test]
    fn glue_rejects_mismatched_ordering() {
        let s = sys(2, 3, 2, &[(&[(1, 1), (2, 1)], 1)]);
        assert!(glue_solve(&s, &Ordering::identity(2)).is_err());
    }

    #[test]
    fn work_counter_dominates_state_sums() {
        let s = sys(
            3,
            5,
            3,
            &[
                (&[(1, 1), (2, 1), (3, 1)], 0),
                (&[(3, 2), (4, 1)], 1),
                (&[(4, 1), (5, 2)], 2),
            ],
        );
        let trace = glue_solve(&s, &Ordering::identity(3)).unwrap();
        let state_sum: u64 = trace.steps.iter().map(|st| st.state_count).sum();
        let final_work = trace.steps.last().unwrap().work;
        assert!(final_work >= state_sum);
        let mut prev = 0;
        for step in &trace.steps {
            assert!(step.work >= prev);
            prev = step.work;
        }
    }
}
