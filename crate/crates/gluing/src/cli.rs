//! Command-line surface.
//!
//! Subcommands map one-to-one onto the library: `delta`, `order`, `bounds`,
//! `certify`, `gen`, `solve`, `verify`. Every run is deterministic given its
//! arguments, input bytes, and seed; `--json` swaps the human rendering for
//! a single machine-readable report on stdout. Exit codes: 0 success, 2
//! parse/input error, 3 guard or inapplicable method, 4 verification
//! mismatch.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bounds::{
    lower_bound_lhs, search_constants, three_set_bounds, two_set_worst_case, BoundReport,
    BoundValue, LowerBoundCertificate,
};
use crate::family::{delta_profile, DeltaReport, Ordering, SetFamily};
use crate::glue::{brute_force_solve, glue_solve, materialize_full, support_family, GlueStep};
use crate::instances::{GeneratorSpec, Model, Seed};
use crate::order::{
    branch_bound, standard_ordering, subset_dp_exact, two_set_optimal, ComponentRule,
    OrderingResult, SearchBudget, StartRule,
};
use crate::text::{parse_family, parse_ordering, parse_system, write_family, write_ordering};
use crate::Error;

const EXIT_OK: i32 = 0;
const EXIT_PARSE: i32 = 2;
const EXIT_GUARD: i32 = 3;
const EXIT_MISMATCH: i32 = 4;

#[derive(Parser)]
#[command(
    name = "gluing",
    version,
    about = "Width of set families and gluing over GF(q)"
)]
struct Cli {
    /// Emit one machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the excess profile of a family under an ordering.
    Delta {
        /// Family file.
        family: PathBuf,
        /// Ordering file; identity when omitted.
        ordering: Option<PathBuf>,
    },
    /// Search for a low-width ordering and print it.
    Order(OrderArgs),
    /// Evaluate the closed-form width bounds at (n, m).
    Bounds {
        /// Set-size cap: 2 or 3.
        #[arg(long)]
        c: u32,
        #[arg(long)]
        n: i64,
        /// Number of sets; defaults to n when c = 3.
        #[arg(long)]
        m: Option<i64>,
    },
    /// Evaluate the entropy certificate, or grid-search its constants.
    Certify {
        /// Density constant.
        #[arg(long, requires = "eps", conflicts_with = "search")]
        c_const: Option<f64>,
        /// Slack constant.
        #[arg(long, requires = "c_const")]
        eps: Option<f64>,
        /// Grid-search the largest certified slack instead.
        #[arg(long)]
        search: bool,
        /// Grid step for --search.
        #[arg(long, default_value_t = 1e-4)]
        grid: f64,
    },
    /// Generate a family and print it in the family format.
    Gen {
        /// random3 | fano | sts9 | sts9_minus_point | disjoint_pairs |
        /// uniform_random
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        c: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the gluing solver on a system and print its state-size trace.
    Solve {
        /// System file.
        system: PathBuf,
        #[command(flatten)]
        order_method: SolveOrderArgs,
    },
    /// Check the gluing solver against brute force; exit 4 on mismatch.
    Verify {
        /// System file.
        system: PathBuf,
        #[command(flatten)]
        order_method: SolveOrderArgs,
    },
}

#[derive(Args)]
struct OrderArgs {
    /// Family file.
    family: PathBuf,
    /// greedy | two-set | dp | bb
    #[arg(long)]
    method: String,
    /// Echoed into the report for replayability.
    #[arg(long)]
    seed: Option<u64>,
    /// d-increasing | gamma-decreasing (greedy only)
    #[arg(long, default_value = "d-increasing")]
    component_rule: String,
    /// lowest-index | best-of-all-starts (greedy only)
    #[arg(long, default_value = "lowest-index")]
    start_rule: String,
    /// Seconds before branch-and-bound returns its best-so-far.
    #[arg(long)]
    time_limit: Option<f64>,
}

#[derive(Args)]
struct SolveOrderArgs {
    /// identity | greedy | two-set | dp | bb
    #[arg(long, default_value = "identity")]
    order_method: String,
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

/// Envelope around every command's payload; `--json` prints it verbatim.
#[derive(Serialize)]
struct RunReport<T: Serialize> {
    command: String,
    inputs: Vec<InputDigest>,
    method: Option<String>,
    seed: Option<u64>,
    wall_ms: f64,
    result: T,
}

struct Ctx {
    started: Instant,
    argv: Vec<String>,
    inputs: Vec<InputDigest>,
    json: bool,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<String, Error> {
        let bytes = std::fs::read(path).map_err(|e| {
            Error::Io(std::io::Error::new(
                e.kind(),
                format!("{}: {e}", path.display()),
            ))
        })?;
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex(&Sha256::digest(&bytes)),
        });
        String::from_utf8(bytes).map_err(|_| Error::Parse {
            line: 1,
            msg: format!("{} is not UTF-8", path.display()),
        })
    }

    fn report<T: Serialize>(&self, method: Option<String>, seed: Option<u64>, result: T) {
        if !self.json {
            return;
        }
        let report = RunReport {
            command: self.argv.join(" "),
            inputs: self
                .inputs
                .iter()
                .map(|d| InputDigest {
                    path: d.path.clone(),
                    sha256: d.sha256.clone(),
                })
                .collect(),
            method,
            seed,
            wall_ms: self.started.elapsed().as_secs_f64() * 1e3,
            result,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Entry point for the binary: parses `std::env::args`.
pub fn run() -> i32 {
    let argv: Vec<String> = std::env::args().collect();
    run_from(argv)
}

/// Testable entry point.
pub fn run_from(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version print to stdout with exit 0.
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let mut ctx = Ctx {
        started: Instant::now(),
        argv,
        inputs: Vec::new(),
        json: cli.json,
    };
    let outcome = match cli.command {
        Command::Delta { family, ordering } => cmd_delta(&mut ctx, &family, ordering.as_deref()),
        Command::Order(args) => cmd_order(&mut ctx, &args),
        Command::Bounds { c, n, m } => cmd_bounds(&mut ctx, c, n, m),
        Command::Certify {
            c_const,
            eps,
            search,
            grid,
        } => cmd_certify(&mut ctx, c_const, eps, search, grid),
        Command::Gen {
            model,
            n,
            m,
            c,
            seed,
        } => cmd_gen(&mut ctx, &model, n, m, c, seed),
        Command::Solve {
            system,
            order_method,
        } => cmd_solve(&mut ctx, &system, &order_method.order_method),
        Command::Verify {
            system,
            order_method,
        } => cmd_verify(&mut ctx, &system, &order_method.order_method),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } | Error::Io(_) => EXIT_PARSE,
                Error::Domain(_) | Error::Budget(_) | Error::Inapplicable(_) => EXIT_GUARD,
            }
        }
    }
}

#[derive(Serialize)]
struct DeltaPayload {
    ordering: Ordering,
    report: DeltaReport,
}

fn cmd_delta(ctx: &mut Ctx, family: &Path, ordering: Option<&Path>) -> Result<i32, Error> {
    let fam = parse_family(&ctx.read(family)?)?;
    let ord = match ordering {
        Some(path) => parse_ordering(&ctx.read(path)?)?,
        None => Ordering::identity(fam.len()),
    };
    let report = delta_profile(&fam, &ord)?;
    if ctx.json {
        ctx.report(
            None,
            None,
            DeltaPayload {
                ordering: ord,
                report,
            },
        );
    } else {
        let profile: Vec<String> = report.profile.iter().map(|v| v.to_string()).collect();
        println!("profile: {}", profile.join(" "));
        println!("max_delta: {} at k = {}", report.max_delta, report.argmax_k);
    }
    Ok(EXIT_OK)
}

fn search_budget(time_limit: Option<f64>) -> SearchBudget {
    let mut budget = SearchBudget::default();
    if let Some(secs) = time_limit {
        budget.time_limit = std::time::Duration::from_secs_f64(secs.max(0.0));
    }
    budget
}

fn run_method(
    family: &SetFamily,
    method: &str,
    start_rule: StartRule,
    component_rule: ComponentRule,
    budget: &SearchBudget,
) -> Result<OrderingResult, Error> {
    match method {
        "greedy" => Ok(standard_ordering(family, start_rule, component_rule)),
        "two-set" | "two_set" => two_set_optimal(family),
        "dp" => subset_dp_exact(family, budget),
        "bb" => Ok(branch_bound(family, budget, None)),
        other => Err(Error::Domain(format!("unknown method '{other}'"))),
    }
}

fn cmd_order(ctx: &mut Ctx, args: &OrderArgs) -> Result<i32, Error> {
    let fam = parse_family(&ctx.read(&args.family)?)?;
    let start_rule: StartRule = args.start_rule.parse()?;
    let component_rule: ComponentRule = args.component_rule.parse()?;
    let budget = search_budget(args.time_limit);
    let result = run_method(&fam, &args.method, start_rule, component_rule, &budget)?;
    if ctx.json {
        ctx.report(Some(result.method.to_string()), args.seed, &result);
    } else {
        print!("{}", write_ordering(&result.ordering));
        eprintln!(
            "method: {}  max_delta: {}  optimal: {}",
            result.method, result.report.max_delta, result.optimal
        );
    }
    Ok(EXIT_OK)
}

fn cmd_bounds(ctx: &mut Ctx, c: u32, n: i64, m: Option<i64>) -> Result<i32, Error> {
    let reports: Vec<BoundReport> = match c {
        2 => {
            let m = m.ok_or_else(|| Error::Domain("--m is required for --c 2".into()))?;
            vec![BoundReport {
                name: "two_set_exact",
                value: Some(BoundValue::Int(two_set_worst_case(n, m)?)),
                applicable: true,
                detail: "m if m <= n/2; n-m if n/2 < m < n-1; 1 if m >= n-1",
            }]
        }
        3 => three_set_bounds(n, m.unwrap_or(n))?,
        other => {
            return Err(Error::Domain(format!(
                "bounds are tabulated for c = 2 or 3, got {other}"
            )))
        }
    };
    if ctx.json {
        ctx.report(None, None, &reports);
    } else {
        for r in &reports {
            match &r.value {
                Some(v) => println!("{}: {} ({})", r.name, v, r.detail),
                None => println!("{}: not applicable ({})", r.name, r.detail),
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_certify(
    ctx: &mut Ctx,
    c_const: Option<f64>,
    eps: Option<f64>,
    search: bool,
    grid: f64,
) -> Result<i32, Error> {
    let cert: LowerBoundCertificate = if search {
        search_constants(grid)?
    } else {
        let c = c_const
            .ok_or_else(|| Error::Domain("pass --c-const with --eps, or --search".into()))?;
        let e = eps.ok_or_else(|| Error::Domain("--eps is required with --c-const".into()))?;
        lower_bound_lhs(c, e)?
    };
    if ctx.json {
        ctx.report(None, None, &cert);
    } else {
        println!("c = {}  eps = {}", cert.c_const, cert.eps);
        println!("lhs = {:e}", cert.lhs);
        println!(
            "{}",
            if cert.certified {
                "CERTIFIED"
            } else {
                "NOT CERTIFIED"
            }
        );
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct GenPayload {
    model: Model,
    family: String,
}

fn cmd_gen(
    ctx: &mut Ctx,
    model: &str,
    n: Option<u32>,
    m: Option<usize>,
    c: Option<u32>,
    seed: u64,
) -> Result<i32, Error> {
    let model: Model = model.parse()?;
    let spec = GeneratorSpec {
        model,
        n,
        m,
        c,
        seed: Seed(seed),
    };
    let family = spec.generate()?;
    let text = write_family(&family);
    if ctx.json {
        ctx.report(
            Some(model.to_string()),
            Some(seed),
            GenPayload {
                model,
                family: text,
            },
        );
    } else {
        print!("{text}");
    }
    Ok(EXIT_OK)
}

fn order_for_system(
    sys: &crate::glue::LinearSystem,
    method: &str,
) -> Result<(Ordering, String), Error> {
    if method == "identity" {
        return Ok((Ordering::identity(sys.len()), "identity".into()));
    }
    let fam = support_family(sys);
    let result = run_method(
        &fam,
        method,
        StartRule::LowestIndex,
        ComponentRule::DIncreasing,
        &SearchBudget::default(),
    )?;
    Ok((result.ordering, result.method.to_string()))
}

#[derive(Serialize)]
struct SolvePayload {
    order_method: String,
    ordering: Ordering,
    steps: Vec<GlueStep>,
    peak_states: u64,
    free_variables: u64,
    solutions_on_support: u64,
    total_solution_count: Option<u128>,
}

fn cmd_solve(ctx: &mut Ctx, system: &Path, method: &str) -> Result<i32, Error> {
    let sys = parse_system(&ctx.read(system)?)?;
    let (ordering, method_name) = order_for_system(&sys, method)?;
    let trace = glue_solve(&sys, &ordering)?;
    let payload = SolvePayload {
        order_method: method_name.clone(),
        ordering,
        peak_states: trace.peak_states(),
        free_variables: trace.free_variables,
        solutions_on_support: trace.solutions.assignments.len() as u64,
        total_solution_count: trace.total_solution_count,
        steps: trace.steps,
    };
    if ctx.json {
        ctx.report(Some(method_name), None, &payload);
    } else {
        println!("order ({}): {}", payload.order_method, {
            let s = write_ordering(&payload.ordering);
            s.trim_end().to_string()
        });
        println!("k\t|S_k|\tdelta\twork");
        for (k, step) in payload.steps.iter().enumerate() {
            println!(
                "{}\t{}\t{}\t{}",
                k + 1,
                step.state_count,
                step.delta,
                step.work
            );
        }
        println!("peak states: {}", payload.peak_states);
        println!("free variables: {}", payload.free_variables);
        match payload.total_solution_count {
            Some(total) => println!("solutions: {total}"),
            None => println!("solutions: overflow (more than 2^128)"),
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyPayload {
    order_method: String,
    matched: bool,
    glue_count: u64,
    brute_count: u64,
}

fn cmd_verify(ctx: &mut Ctx, system: &Path, method: &str) -> Result<i32, Error> {
    let sys = parse_system(&ctx.read(system)?)?;
    let (ordering, method_name) = order_for_system(&sys, method)?;
    let trace = glue_solve(&sys, &ordering)?;
    let glued = materialize_full(&sys, &trace, 1 << 24)?;
    let brute = brute_force_solve(&sys)?;
    let matched = glued == brute;
    let payload = VerifyPayload {
        order_method: method_name.clone(),
        matched,
        glue_count: glued.len() as u64,
        brute_count: brute.len() as u64,
    };
    if ctx.json {
        ctx.report(Some(method_name), None, &payload);
    } else if matched {
        println!("verified: {} solutions match", payload.glue_count);
    } else {
        println!(
            "MISMATCH: gluing found {} solutions, brute force {}",
            payload.glue_count, payload.brute_count
        );
    }
    Ok(if matched { EXIT_OK } else { EXIT_MISMATCH })
}
