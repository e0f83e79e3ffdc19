//! Exhaustive verification drivers: partition the labeled mask space, map
//! workers over the partitions, and merge per-partition results in partition
//! order so every outcome is independent of thread scheduling.

use hsolab_core::bounds::{check_all_with_tol, BoundId, BoundReport};
use hsolab_core::enumeration::{enumerate_range, partition_masks, EnumerationError, EnumerationPlan};
use hsolab_core::graph::{Graph, GraphClassSpec};
use hsolab_core::monotonicity::{scan_graph, MonotonicityReport};
use rayon::prelude::*;

use crate::graph6::write_graph6;
use crate::stream::GraphRecord;

/// Environment hook that deliberately corrupts one bound verdict, for
/// exercising the nonzero-exit path end to end. Value `bound` forces the
/// first bound's `holds` flag to false on every graph.
pub const FAULT_ENV: &str = "HSOLAB_FAULT";

pub fn fault_injected(target: &str) -> bool {
    std::env::var(FAULT_ENV).is_ok_and(|v| v.split(',').any(|t| t.trim() == target))
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Maps `work` over contiguous mask ranges; sequential when `workers <= 1`,
/// otherwise on a dedicated pool. Results come back in range order.
pub fn map_mask_ranges<R: Send>(
    class: GraphClassSpec,
    workers: usize,
    work: impl Fn(u64, u64) -> R + Sync,
) -> Result<Vec<R>, EnumerationError> {
    // Validate caps once up front so workers can unwrap.
    enumerate_range(&class, 0, 0)?;
    let ranges = partition_masks(class.n, workers.max(1) * 8);
    if workers <= 1 {
        return Ok(ranges.into_iter().map(|(lo, hi)| work(lo, hi)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool construction");
    Ok(pool.install(|| ranges.into_par_iter().map(|(lo, hi)| work(lo, hi)).collect()))
}

/// A violating or inconsistent bound report, with the graph pinned down.
#[derive(Debug, Clone)]
pub struct BoundFinding {
    pub graph6: String,
    pub graph: Graph,
    pub report: BoundReport,
}

#[derive(Debug, Clone, Default)]
pub struct BoundsOutcome {
    pub graphs: u64,
    pub checks: u64,
    /// Hypothesis met but the inequality failed.
    pub violations: Vec<BoundFinding>,
    /// Numeric equality flag disagreed with the structural characterization.
    pub inconsistencies: Vec<BoundFinding>,
}

impl BoundsOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.inconsistencies.is_empty()
    }

    fn absorb(&mut self, other: BoundsOutcome) {
        self.graphs += other.graphs;
        self.checks += other.checks;
        self.violations.extend(other.violations);
        self.inconsistencies.extend(other.inconsistencies);
    }

    fn record(&mut self, g: &Graph, report: BoundReport) {
        self.checks += 1;
        let violated = report.hypothesis_met && !report.holds;
        let inconsistent = !report.equality_consistent();
        if violated || inconsistent {
            let finding = BoundFinding {
                graph6: write_graph6(g).unwrap_or_default(),
                graph: g.clone(),
                report,
            };
            if violated {
                self.violations.push(finding);
            } else {
                self.inconsistencies.push(finding);
            }
        }
    }
}

/// All thirteen reports for one graph, with the fault hook applied.
pub fn checked_reports(g: &Graph, tol: f64, fault: bool) -> Vec<BoundReport> {
    let mut reports = check_all_with_tol(g, tol);
    if fault {
        for report in &mut reports {
            if report.id == BoundId::HsoGeSqrt2M && report.hypothesis_met {
                report.holds = false;
            }
        }
    }
    reports
}

fn check_graph_bounds(g: &Graph, tol: f64, fault: bool, acc: &mut BoundsOutcome) {
    acc.graphs += 1;
    for report in checked_reports(g, tol, fault) {
        acc.record(g, report);
    }
}

/// Checks all thirteen bounds on every labeled connected graph of order `n`.
pub fn bounds_exhaustive(n: usize, workers: usize, tol: f64) -> Result<BoundsOutcome, EnumerationError> {
    let class = GraphClassSpec::connected(n);
    let fault = fault_injected("bound");
    let partials = map_mask_ranges(class, workers, |lo, hi| {
        let mut acc = BoundsOutcome::default();
        for g in enumerate_range(&class, lo, hi).expect("caps validated") {
            check_graph_bounds(&g, tol, fault, &mut acc);
        }
        acc
    })?;
    let mut merged = BoundsOutcome::default();
    for partial in partials {
        merged.absorb(partial);
    }
    Ok(merged)
}

/// Checks all thirteen bounds on an explicit record stream.
pub fn bounds_stream(records: &[GraphRecord], tol: f64) -> BoundsOutcome {
    let fault = fault_injected("bound");
    let mut acc = BoundsOutcome::default();
    for record in records {
        check_graph_bounds(&record.graph, tol, fault, &mut acc);
    }
    acc
}

#[derive(Debug, Clone)]
pub struct MonotonicityFinding {
    pub graph6: String,
    pub graph: Graph,
    pub report: MonotonicityReport,
}

#[derive(Debug, Clone, Default)]
pub struct MonotonicityOutcome {
    pub graphs: u64,
    pub pairs: u64,
    /// A satisfied condition whose delta has the wrong sign or misses the
    /// strictness margin, or both opposing conditions at once.
    pub violations: Vec<MonotonicityFinding>,
    /// Pairs whose HSO delta is strictly negative: together they witness
    /// that edge addition does not always increase HSO.
    pub hso_decreasing_pairs: u64,
}

impl MonotonicityOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn absorb(&mut self, other: MonotonicityOutcome) {
        self.graphs += other.graphs;
        self.pairs += other.pairs;
        self.violations.extend(other.violations);
        self.hso_decreasing_pairs += other.hso_decreasing_pairs;
    }

    fn scan(&mut self, g: &Graph, tol: f64) {
        self.graphs += 1;
        for report in scan_graph(g) {
            self.pairs += 1;
            if report.delta_hso < -tol {
                self.hso_decreasing_pairs += 1;
            }
            if !report.consistent(tol) || report.anomalous() {
                self.violations.push(MonotonicityFinding {
                    graph6: write_graph6(g).unwrap_or_default(),
                    graph: g.clone(),
                    report,
                });
            }
        }
    }
}

/// Classifies every non-adjacent pair of every labeled connected graph of
/// order `n` and verifies the promised delta signs.
pub fn monotonicity_exhaustive(
    n: usize,
    workers: usize,
    tol: f64,
) -> Result<MonotonicityOutcome, EnumerationError> {
    let class = GraphClassSpec::connected(n);
    let partials = map_mask_ranges(class, workers, |lo, hi| {
        let mut acc = MonotonicityOutcome::default();
        for g in enumerate_range(&class, lo, hi).expect("caps validated") {
            acc.scan(&g, tol);
        }
        acc
    })?;
    let mut merged = MonotonicityOutcome::default();
    for partial in partials {
        merged.absorb(partial);
    }
    Ok(merged)
}

pub fn monotonicity_stream(records: &[GraphRecord], tol: f64) -> MonotonicityOutcome {
    let mut acc = MonotonicityOutcome::default();
    for record in records {
        acc.scan(&record.graph, tol);
    }
    acc
}

/// graph6 encode/parse round-trip over all connected graphs up to `max_n`,
/// plus the fixed reference encodings.
#[derive(Debug, Clone, Default)]
pub struct RoundtripOutcome {
    pub checked: u64,
    pub mismatches: Vec<String>,
}

pub fn roundtrip_selftest(max_n: usize) -> Result<RoundtripOutcome, EnumerationError> {
    use hsolab_core::enumeration::enumerate;
    use hsolab_core::graph::Family;

    let mut outcome = RoundtripOutcome::default();
    for n in 1..=max_n {
        let plan = EnumerationPlan::new(GraphClassSpec::connected(n), false);
        for g in enumerate(&plan)? {
            outcome.checked += 1;
            let encoded = match write_graph6(&g) {
                Ok(e) => e,
                Err(err) => {
                    outcome.mismatches.push(format!("encode n={n}: {err}"));
                    continue;
                }
            };
            match crate::graph6::parse_graph6(encoded.as_bytes()) {
                Ok(back) if back == g => {}
                Ok(_) => outcome.mismatches.push(format!("roundtrip mismatch for {encoded}")),
                Err(err) => outcome.mismatches.push(format!("reparse {encoded}: {err}")),
            }
        }
    }
    // Reference vectors pin the exact byte encoding.
    for (code, graph) in [
        ("Bw", Family::Complete.build(3).unwrap()),
        ("Bg", Family::Path.build(3).unwrap()),
        ("@", Family::Path.build(1).unwrap()),
    ] {
        outcome.checked += 1;
        if write_graph6(&graph).ok().as_deref() != Some(code) {
            outcome.mismatches.push(format!("reference encoding {code} not reproduced"));
        }
        match crate::graph6::parse_graph6(code.as_bytes()) {
            Ok(parsed) if parsed == graph => {}
            _ => outcome.mismatches.push(format!("reference decoding {code} failed")),
        }
    }
    Ok(outcome)
}
