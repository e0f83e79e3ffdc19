//! Command-line front end. Every subcommand maps onto one library
//! operation; output is a stream of report rows on stdout.
//!
//! Exit status: 0 on success, 1 when a verification run found a violation
//! (a hypothesis-met bound that fails, a satisfied monotonicity condition
//! with the wrong delta sign, a sweep or round-trip mismatch), 2 on usage or
//! input errors.

use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use hsolab_core::bounds::{
    pair_slack, sweep_pair_slack, sweep_slack_floor, sweep_star_ratio, EQUALITY_TOL,
};
use hsolab_core::enumeration::EnumerationPlan;
use hsolab_core::extremal::{conjecture_report, find_extremal_with_tol, Direction};
use hsolab_core::graph::{Family, GraphClassSpec};
use hsolab_core::indices::{index_value, IndexKind};
use hsolab_core::monotonicity::{scan_graph, sweep_contribution_drop};

use crate::drivers::{
    bounds_exhaustive, checked_reports, fault_injected, monotonicity_exhaustive,
    roundtrip_selftest,
};
use crate::report::{
    BoundRow, ComputeRow, ConjectureRow, Emitter, ExtremalRow, MonotonicityRow, OutputFormat,
    SummaryRow, SweepRow,
};
use crate::stream::{read_graphs, GraphRecord};

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;

#[derive(Parser)]
#[command(name = "hsolab", version, about = "Sombor-family graph index laboratory")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format on stdout
    #[arg(long, global = true, default_value = "json")]
    pub format: OutputFormat,

    /// Worker threads for exhaustive runs (1 = sequential, bit-reproducible)
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,

    /// Equality / strictness tolerance override (default 1e-9)
    #[arg(long, global = true)]
    pub tol: Option<f64>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute index values for input graphs or a named family member
    Compute {
        /// Graph input: a file path or `-` for stdin (graph6 stream or edge
        /// list; default stdin)
        #[arg(long, value_name = "PATH|-", conflicts_with_all = ["family", "n"])]
        input: Option<String>,
        /// Evaluate one family member instead of reading input
        #[arg(long, requires = "n")]
        family: Option<Family>,
        /// Order of the family member
        #[arg(long, visible_alias = "order")]
        n: Option<usize>,
        /// Restrict output to one index (default: all five)
        #[arg(long)]
        index: Option<IndexKind>,
    },
    /// Evaluate every index inequality, from input or exhaustively
    Bounds {
        #[arg(long, value_name = "PATH|-", conflicts_with_all = ["n", "exhaustive"])]
        input: Option<String>,
        /// Order for --exhaustive
        #[arg(long, visible_alias = "order", requires = "exhaustive")]
        n: Option<usize>,
        /// Check all connected graphs of order --n (violations only)
        #[arg(long, requires = "n")]
        exhaustive: bool,
    },
    /// Classify non-adjacent pairs under the edge-addition conditions
    Monotonicity {
        #[arg(long, value_name = "PATH|-", conflicts_with_all = ["n", "exhaustive"])]
        input: Option<String>,
        #[arg(long, visible_alias = "order", requires = "exhaustive")]
        n: Option<usize>,
        /// Scan all connected graphs of order --n (violations only)
        #[arg(long, requires = "n")]
        exhaustive: bool,
    },
    /// Find index minimizers or maximizers over a graph class
    Extremal {
        #[arg(long, visible_alias = "order")]
        n: usize,
        /// Restrict to connected graphs with this cyclomatic number
        #[arg(long, conflicts_with = "trees")]
        ell: Option<u32>,
        /// Restrict to trees
        #[arg(long)]
        trees: bool,
        #[arg(long)]
        index: IndexKind,
        #[arg(long)]
        direction: Direction,
        /// Deduplicate the enumeration by isomorphism class first
        #[arg(long)]
        dedup: bool,
    },
    /// Extremal evidence over fixed-cyclomatic-number classes
    Conjectures {
        #[arg(long, visible_alias = "order")]
        n: usize,
        #[arg(long)]
        ell: u32,
    },
    /// Numeric sweeps of the auxiliary functions certifying the bounds
    Sweeps {
        /// Largest degree for the pair-slack and floor sweeps
        #[arg(long, default_value_t = 500)]
        smax: u32,
        /// Largest order for the star-condition sweep
        #[arg(long, default_value_t = 300)]
        nmax: u32,
    },
    /// graph6 encode/decode self-test over all connected graphs
    Roundtrip {
        /// Largest order covered exhaustively
        #[arg(long, visible_alias = "order", default_value_t = 6)]
        n: usize,
    },
}

pub fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let tol = cli.tol.unwrap_or(EQUALITY_TOL);
    if !tol.is_finite() || tol <= 0.0 {
        bail!("--tol must be a positive number, got {tol}");
    }
    if cli.workers == 0 {
        bail!("--workers must be at least 1");
    }
    let stdout = std::io::stdout().lock();
    let mut emitter = Emitter::new(cli.format, stdout);
    let code = match cli.command {
        Command::Compute { input, family, n, index } => {
            compute(&mut emitter, input, family, n, index)?
        }
        Command::Bounds { input, n, exhaustive } => {
            bounds(&mut emitter, input, n, exhaustive, cli.workers, tol)?
        }
        Command::Monotonicity { input, n, exhaustive } => {
            monotonicity(&mut emitter, input, n, exhaustive, cli.workers, tol)?
        }
        Command::Extremal { n, ell, trees, index, direction, dedup } => {
            extremal(&mut emitter, n, ell, trees, index, direction, dedup, tol)?
        }
        Command::Conjectures { n, ell } => {
            let report = conjecture_report(n, ell)?;
            emitter.emit(&ConjectureRow { report })?;
            EXIT_OK
        }
        Command::Sweeps { smax, nmax } => sweeps(&mut emitter, smax, nmax)?,
        Command::Roundtrip { n } => roundtrip(&mut emitter, n)?,
    };
    Ok(ExitCode::from(code))
}

fn load(input: Option<String>) -> anyhow::Result<Vec<GraphRecord>> {
    let path = input.as_deref().unwrap_or("-");
    Ok(read_graphs(path)?)
}

fn compute(
    emitter: &mut Emitter<impl std::io::Write>,
    input: Option<String>,
    family: Option<Family>,
    n: Option<usize>,
    index: Option<IndexKind>,
) -> anyhow::Result<u8> {
    let records = match family {
        Some(family) => {
            let n = n.context("--family needs --n")?;
            let graph = family.build(n)?;
            vec![GraphRecord { source: format!("family:{family}:{n}"), graph }]
        }
        None => load(input)?,
    };
    let kinds: Vec<IndexKind> = match index {
        Some(kind) => vec![kind],
        None => IndexKind::ALL.to_vec(),
    };
    for record in &records {
        for &kind in &kinds {
            emitter.emit(&ComputeRow {
                source: record.source.clone(),
                n: record.graph.order(),
                m: record.graph.size(),
                index: kind,
                value: index_value(&record.graph, kind),
            })?;
        }
    }
    Ok(EXIT_OK)
}

fn bounds(
    emitter: &mut Emitter<impl std::io::Write>,
    input: Option<String>,
    n: Option<usize>,
    exhaustive: bool,
    workers: usize,
    tol: f64,
) -> anyhow::Result<u8> {
    if exhaustive {
        let n = n.expect("clap enforces --n with --exhaustive");
        let outcome = bounds_exhaustive(n, workers, tol)?;
        for finding in outcome.violations.iter().chain(&outcome.inconsistencies) {
            emitter.emit(&BoundRow::new(
                format!("enum:n={n}"),
                &finding.graph,
                finding.report.clone(),
            ))?;
        }
        emitter.emit(&SummaryRow {
            task: "bounds-exhaustive",
            n: Some(n),
            graphs: outcome.graphs,
            checks: outcome.checks,
            violations: outcome.violations.len() as u64,
            inconsistencies: outcome.inconsistencies.len() as u64,
            passed: outcome.passed(),
        })?;
        return Ok(if outcome.passed() { EXIT_OK } else { EXIT_VIOLATION });
    }

    let records = load(input)?;
    let fault = fault_injected("bound");
    let mut graphs = 0;
    let mut checks = 0;
    let mut violations = 0;
    let mut inconsistencies = 0;
    for record in &records {
        graphs += 1;
        for report in checked_reports(&record.graph, tol, fault) {
            checks += 1;
            if report.hypothesis_met && !report.holds {
                violations += 1;
            } else if !report.equality_consistent() {
                inconsistencies += 1;
            }
            emitter.emit(&BoundRow::new(record.source.clone(), &record.graph, report))?;
        }
    }
    let passed = violations == 0 && inconsistencies == 0;
    emitter.emit(&SummaryRow {
        task: "bounds",
        n: None,
        graphs,
        checks,
        violations,
        inconsistencies,
        passed,
    })?;
    Ok(if passed { EXIT_OK } else { EXIT_VIOLATION })
}

fn monotonicity(
    emitter: &mut Emitter<impl std::io::Write>,
    input: Option<String>,
    n: Option<usize>,
    exhaustive: bool,
    workers: usize,
    tol: f64,
) -> anyhow::Result<u8> {
    if exhaustive {
        let n = n.expect("clap enforces --n with --exhaustive");
        let outcome = monotonicity_exhaustive(n, workers, tol)?;
        for finding in &outcome.violations {
            emitter.emit(&MonotonicityRow::new(
                format!("enum:n={n}"),
                &finding.graph,
                finding.report.clone(),
                tol,
            ))?;
        }
        emitter.emit(&SummaryRow {
            task: "monotonicity-exhaustive",
            n: Some(n),
            graphs: outcome.graphs,
            checks: outcome.pairs,
            violations: outcome.violations.len() as u64,
            inconsistencies: 0,
            passed: outcome.passed(),
        })?;
        return Ok(if outcome.passed() { EXIT_OK } else { EXIT_VIOLATION });
    }

    let records = load(input)?;
    let mut graphs = 0;
    let mut pairs = 0;
    let mut violations = 0;
    for record in &records {
        graphs += 1;
        for report in scan_graph(&record.graph) {
            pairs += 1;
            let row = MonotonicityRow::new(record.source.clone(), &record.graph, report, tol);
            if !row.consistent {
                violations += 1;
            }
            emitter.emit(&row)?;
        }
    }
    emitter.emit(&SummaryRow {
        task: "monotonicity",
        n: None,
        graphs,
        checks: pairs,
        violations,
        inconsistencies: 0,
        passed: violations == 0,
    })?;
    Ok(if violations == 0 { EXIT_OK } else { EXIT_VIOLATION })
}

#[allow(clippy::too_many_arguments)]
fn extremal(
    emitter: &mut Emitter<impl std::io::Write>,
    n: usize,
    ell: Option<u32>,
    trees: bool,
    index: IndexKind,
    direction: Direction,
    dedup: bool,
    tol: f64,
) -> anyhow::Result<u8> {
    let class = match (trees, ell) {
        (true, _) => GraphClassSpec::trees(n),
        (false, Some(ell)) => GraphClassSpec::cyclomatic(n, ell),
        (false, None) => GraphClassSpec::connected(n),
    };
    let plan = EnumerationPlan::new(class, dedup);
    let result = find_extremal_with_tol(&plan, index, direction, tol)?;
    emitter.emit(&ExtremalRow { result })?;
    Ok(EXIT_OK)
}

fn sweeps(emitter: &mut Emitter<impl std::io::Write>, smax: u32, nmax: u32) -> anyhow::Result<u8> {
    let mut rows: Vec<SweepRow> = Vec::new();

    let hso = sweep_pair_slack(IndexKind::Hso, smax)?;
    rows.push(SweepRow {
        name: "pair_slack_positive_hso",
        params: vec![("smax", smax as u64)],
        checked: hso.checked,
        violations: hso.violations.iter().map(|(r, s)| format!("({r},{s})")).collect(),
        passed: hso.passed(),
    });
    let cdso = sweep_pair_slack(IndexKind::Cdso, smax)?;
    rows.push(SweepRow {
        name: "pair_slack_negative_cdso",
        params: vec![("smax", smax as u64)],
        checked: cdso.checked,
        violations: cdso.violations.iter().map(|(r, s)| format!("({r},{s})")).collect(),
        passed: cdso.passed(),
    });

    // The path/cycle pairs are exact zeros of the pair slack.
    let mut zero_violations = Vec::new();
    for kind in [IndexKind::Hso, IndexKind::Cdso] {
        for (r, s) in [(1u32, 2u32), (2, 2)] {
            if pair_slack(kind, r, s)?.abs() > 1e-12 {
                zero_violations.push(format!("{kind}:({r},{s})"));
            }
        }
    }
    let zeros_passed = zero_violations.is_empty();
    rows.push(SweepRow {
        name: "pair_slack_zeros",
        params: vec![],
        checked: 4,
        violations: zero_violations,
        passed: zeros_passed,
    });

    let star = sweep_star_ratio(nmax)?;
    rows.push(SweepRow {
        name: "star_condition_ratio",
        params: vec![("nmax", nmax as u64)],
        checked: star.checked,
        violations: star.violations.iter().map(|(i, j, n)| format!("({i},{j},{n})")).collect(),
        passed: star.passed(),
    });

    let floor = sweep_slack_floor(smax.max(8))?;
    rows.push(SweepRow {
        name: "slack_floor_positive",
        params: vec![("smax", smax.max(8) as u64)],
        checked: floor.checked,
        violations: floor.violations.iter().map(|(r, s)| format!("({r},{s})")).collect(),
        passed: floor.passed(),
    });

    const DROP_DELTA_MAX: u32 = 200;
    const DROP_D_MAX: u32 = 400;
    let drop = sweep_contribution_drop(DROP_DELTA_MAX, DROP_D_MAX)?;
    rows.push(SweepRow {
        name: "contribution_drop",
        params: vec![("deltamax", DROP_DELTA_MAX as u64), ("dmax", DROP_D_MAX as u64)],
        checked: drop.checked,
        violations: drop.violations.iter().map(|(d, e)| format!("({d},{e})")).collect(),
        passed: drop.passed(),
    });

    let all_passed = rows.iter().all(|r| r.passed);
    let checks = rows.iter().map(|r| r.checked).sum();
    let violations = rows.iter().map(|r| r.violations.len() as u64).sum();
    for row in &rows {
        emitter.emit(row)?;
    }
    emitter.emit(&SummaryRow {
        task: "sweeps",
        n: None,
        graphs: 0,
        checks,
        violations,
        inconsistencies: 0,
        passed: all_passed,
    })?;
    Ok(if all_passed { EXIT_OK } else { EXIT_VIOLATION })
}

fn roundtrip(emitter: &mut Emitter<impl std::io::Write>, n: usize) -> anyhow::Result<u8> {
    let outcome = roundtrip_selftest(n)?;
    let passed = outcome.mismatches.is_empty();
    emitter.emit(&SweepRow {
        name: "graph6_roundtrip",
        params: vec![("max_order", n as u64)],
        checked: outcome.checked,
        violations: outcome.mismatches.clone(),
        passed,
    })?;
    Ok(if passed { EXIT_OK } else { EXIT_VIOLATION })
}
