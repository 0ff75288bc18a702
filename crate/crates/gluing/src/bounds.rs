//! Closed-form worst-case bounds on the family width, and the
//! binary-entropy certificate behind the random-triple lower bound.
//!
//! `two_set_worst_case` is exact for families of pairs. For triple families
//! with `m = n` the exact value is known only for `n <= 9`; the remaining
//! evaluators report upper bounds with their applicability conditions. The
//! certificate side proves that the inequality
//! `(1-c) H(e/(1-c)) + 2 (c+e) H(c/(c+e)) - H(c) < 0` holds at the pinned
//! constants, which is the quantitative heart of the linear lower bound on
//! random permutation-triple families.

use serde::Serialize;

use crate::family::{components, SetFamily};
use crate::Error;

/// A bound value; integral bounds stay integral in reports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum BoundValue {
    Int(i64),
    Real(f64),
}

impl std::fmt::Display for BoundValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundValue::Int(v) => write!(f, "{v}"),
            BoundValue::Real(v) => write!(f, "{v:.4}"),
        }
    }
}

impl BoundValue {
    /// The value as a real number, for comparisons.
    pub fn as_f64(&self) -> f64 {
        match *self {
            BoundValue::Int(v) => v as f64,
            BoundValue::Real(v) => v,
        }
    }
}

/// One named bound with its applicability verdict.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub name: &'static str,
    /// Present exactly when `applicable`.
    pub value: Option<BoundValue>,
    pub applicable: bool,
    /// Human-readable formula and hypothesis.
    pub detail: &'static str,
}

impl BoundReport {
    fn holds(name: &'static str, value: BoundValue, detail: &'static str) -> Self {
        BoundReport {
            name,
            value: Some(value),
            applicable: true,
            detail,
        }
    }

    fn not_applicable(name: &'static str, detail: &'static str) -> Self {
        BoundReport {
            name,
            value: None,
            applicable: false,
            detail,
        }
    }
}

/// Exact worst-case width over all families of `m` sets of size at most 2
/// on `n` elements: `m` when `m <= n/2`, `n - m` when `n/2 < m < n - 1`,
/// and `1` once `m >= n - 1`.
pub fn two_set_worst_case(n: i64, m: i64) -> Result<i64, Error> {
    if n < 2 {
        return Err(Error::Domain(format!("need n >= 2, got {n}")));
    }
    if m < 0 {
        return Err(Error::Domain(format!("need m >= 0, got {m}")));
    }
    Ok(if 2 * m <= n {
        m
    } else if m < n - 1 {
        n - m
    } else {
        1
    })
}

fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1) / b
}

/// Every known bound on the width of triple families on `n` elements with
/// `m` sets, each with its applicability evaluated at `(n, m)`.
///
/// - `exact_small`: the exact worst case, known for `m = n <= 9`;
/// - `double_third`: `2 * ceil(n/3)`, any `m`;
/// - `half_cap`: `floor((n+1)/2)` once `m >= ceil((n-1)/2)`;
/// - `quarter_plus_two`: `ceil(n/4) + 2` for `m = n`;
/// - `fifth_log_reference`: `n/5 + 1 + log2 n` for `m = n`, a reference
///   value reported for comparison only.
pub fn three_set_bounds(n: i64, m: i64) -> Result<Vec<BoundReport>, Error> {
    if n < 3 {
        return Err(Error::Domain(format!("need n >= 3, got {n}")));
    }
    if m < 0 {
        return Err(Error::Domain(format!("need m >= 0, got {m}")));
    }
    let mut out = Vec::with_capacity(5);

    let exact_detail = "exact worst case; known for m = n <= 9";
    if m == n && n <= 9 {
        let value = if n == 3 { 2 } else { ceil_div(n, 3) };
        out.push(BoundReport::holds(
            "exact_small",
            BoundValue::Int(value),
            exact_detail,
        ));
    } else {
        out.push(BoundReport::not_applicable("exact_small", exact_detail));
    }

    out.push(BoundReport::holds(
        "double_third",
        BoundValue::Int(2 * ceil_div(n, 3)),
        "2 * ceil(n/3); any m",
    ));

    let half_detail = "floor((n+1)/2) for m >= ceil((n-1)/2)";
    if m >= ceil_div(n - 1, 2) {
        out.push(BoundReport::holds(
            "half_cap",
            BoundValue::Int((n + 1) / 2),
            half_detail,
        ));
    } else {
        out.push(BoundReport::not_applicable("half_cap", half_detail));
    }

    let quarter_detail = "ceil(n/4) + 2 for m = n";
    if m == n {
        out.push(BoundReport::holds(
            "quarter_plus_two",
            BoundValue::Int(ceil_div(n, 4) + 2),
            quarter_detail,
        ));
    } else {
        out.push(BoundReport::not_applicable(
            "quarter_plus_two",
            quarter_detail,
        ));
    }

    let fifth_detail = "n/5 + 1 + log2(n) for m = n; reference value, not constructive";
    if m == n {
        out.push(BoundReport::holds(
            "fifth_log_reference",
            BoundValue::Real(n as f64 / 5.0 + 1.0 + (n as f64).log2()),
            fifth_detail,
        ));
    } else {
        out.push(BoundReport::not_applicable(
            "fifth_log_reference",
            fifth_detail,
        ));
    }

    Ok(out)
}

/// For a disconnected triple family with at least as many sets as declared
/// ground elements, the width is at most `floor((L + 1) / 2)` where `L` is
/// the order of the largest component. Hypothesis violations are reported
/// as inapplicable rather than errors.
pub fn disconnected_bound(family: &SetFamily) -> BoundReport {
    const DETAIL: &str =
        "floor((L+1)/2), L the largest component order; needs a disconnected family \
         of sets of size <= 3 with m >= n";
    let comps = components(family);
    let triple_capped = family.sets().iter().all(|s| s.len() <= 3);
    if comps.len() < 2 || (family.len() as u64) < u64::from(family.ground_size()) || !triple_capped
    {
        return BoundReport::not_applicable("largest_component_half", DETAIL);
    }
    let largest = comps.iter().map(|c| c.order()).max().unwrap_or(0) as i64;
    BoundReport::holds(
        "largest_component_half",
        BoundValue::Int((largest + 1) / 2),
        DETAIL,
    )
}

/// Binary entropy `H(a) = -a log2 a - (1-a) log2 (1-a)`, with `H(0) =
/// H(1) = 0` by continuity.
pub fn binary_entropy(a: f64) -> Result<f64, Error> {
    if !(0.0..=1.0).contains(&a) || a.is_nan() {
        return Err(Error::Domain(format!(
            "entropy argument {a} outside [0, 1]"
        )));
    }
    if a == 0.0 || a == 1.0 {
        return Ok(0.0);
    }
    Ok(-a * a.log2() - (1.0 - a) * (1.0 - a).log2())
}

/// The evaluated left-hand side of the certificate inequality at a density
/// `c_const` and slack `eps`; `certified` iff it is strictly negative.
#[derive(Debug, Clone, Serialize)]
pub struct LowerBoundCertificate {
    pub c_const: f64,
    pub eps: f64,
    pub lhs: f64,
    pub certified: bool,
}

/// Evaluates `(1-c) H(eps/(1-c)) + 2 (c+eps) H(c/(c+eps)) - H(c)`.
///
/// A strictly negative value certifies that, for large `n`, a random
/// permutation-triple family has some `c n`-set prefix covering at least
/// `(c + eps) n` elements with positive probability — hence width at least
/// `eps * n`. At the pinned constants the value is about `-4.8e-13`, five
/// hundred times the double-precision noise floor of the expression.
pub fn lower_bound_lhs(c_const: f64, eps: f64) -> Result<LowerBoundCertificate, Error> {
    if !(c_const > 0.0 && c_const < 1.0) {
        return Err(Error::Domain(format!(
            "density constant {c_const} outside (0, 1)"
        )));
    }
    if !(eps > 0.0 && eps < 1.0 - c_const) {
        return Err(Error::Domain(format!(
            "slack {eps} outside (0, 1 - {c_const})"
        )));
    }
    let c = c_const;
    let lhs = (1.0 - c) * binary_entropy(eps / (1.0 - c))?
        + 2.0 * (c + eps) * binary_entropy(c / (c + eps))?
        - binary_entropy(c)?;
    Ok(LowerBoundCertificate {
        c_const,
        eps,
        lhs,
        certified: lhs < 0.0,
    })
}

/// Grid search for the largest certified slack: over densities `c = k *
/// grid_step`, finds the largest `eps = j * grid_step` with a strictly
/// negative left-hand side, using that feasibility is monotone in `eps`.
/// Ties on `eps` resolve to the density certifying most deeply (smallest
/// left-hand side).
pub fn search_constants(grid_step: f64) -> Result<LowerBoundCertificate, Error> {
    if !(grid_step > 0.0 && grid_step <= 1e-2) {
        return Err(Error::Domain(format!(
            "grid step {grid_step} outside (0, 1e-2]"
        )));
    }
    let mut best: Option<LowerBoundCertificate> = None;
    let steps = (1.0 / grid_step).floor() as i64;
    for k in 1..steps {
        let c = k as f64 * grid_step;
        if c >= 1.0 {
            break;
        }
        let max_j = (((1.0 - c) / grid_step).ceil() as i64 - 1).max(0);
        let certified_at = |j: i64| -> bool {
            let eps = j as f64 * grid_step;
            if eps <= 0.0 || eps >= 1.0 - c {
                return false;
            }
            lower_bound_lhs(c, eps)
                .map(|r| r.certified)
                .unwrap_or(false)
        };
        if !certified_at(1) {
            continue;
        }
        let (mut lo, mut hi) = (1i64, max_j);
        while lo < hi {
            let mid = (lo + hi + 1) / 2;
            if certified_at(mid) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let eps = lo as f64 * grid_step;
        let candidate = lower_bound_lhs(c, eps)?;
        let better = best
            .as_ref()
            .is_none_or(|b| eps > b.eps || (eps == b.eps && candidate.lhs < b.lhs));
        if better {
            best = Some(candidate);
        }
    }
    best.ok_or_else(|| Error::Domain("no certified point on the grid".into()))
}
