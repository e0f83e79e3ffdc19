//! Index minimizers and maximizers over enumerated graph classes, plus the
//! small-order reports on the open questions about fixed cyclomatic number.
//!
//! Searches are two-pass: the first pass reduces to the optimum value only
//! (a pure min/max, so partitions merge trivially), the second collects the
//! attainers within tolerance and deduplicates them by canonical code.

use alloc::vec::Vec;
use core::fmt;

use crate::bounds::EQUALITY_TOL;
use crate::canon::{canonical_form, CanonError};
use crate::enumeration::{enumerate, EnumerationError, EnumerationPlan, INTERNAL_ORDER_CAP};
use crate::graph::{Graph, GraphClassSpec, UnknownName};
use crate::indices::{index_value, IndexKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Min,
    Max,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Min => "min",
            Direction::Max => "max",
        }
    }

    #[inline]
    fn better(self, a: f64, b: f64) -> bool {
        match self {
            Direction::Min => a < b,
            Direction::Max => a > b,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for Direction {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, UnknownName> {
        match s {
            "min" => Ok(Direction::Min),
            "max" => Ok(Direction::Max),
            _ => Err(UnknownName("direction")),
        }
    }
}

/// Per-witness structural record used by the conjecture reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessProperties {
    pub has_dominating_vertex: bool,
    pub min_degree: u32,
    pub max_degree: u32,
    /// Both extreme degrees are 2 or 3.
    pub degrees_in_2_3: bool,
}

impl WitnessProperties {
    fn of(g: &Graph) -> WitnessProperties {
        let summary = g.structural_summary();
        let in23 = |d: u32| d == 2 || d == 3;
        WitnessProperties {
            has_dominating_vertex: summary.has_dominating_vertex,
            min_degree: summary.min_degree,
            max_degree: summary.max_degree,
            degrees_in_2_3: in23(summary.min_degree) && in23(summary.max_degree),
        }
    }
}

/// Exact optimum of an index over a class, with all attaining graphs.
///
/// Witnesses are canonical representatives, pairwise non-isomorphic, ordered
/// by canonical code. `nearest_other` is the attained value closest to the
/// optimum but beyond tolerance; a small gap there flags a near-tie that a
/// report should surface.
#[derive(Debug, Clone)]
pub struct ExtremalResult {
    pub class: GraphClassSpec,
    pub kind: IndexKind,
    pub direction: Direction,
    pub optimum: f64,
    pub witnesses: Vec<Graph>,
    pub witness_properties: Vec<WitnessProperties>,
    pub nearest_other: Option<f64>,
}

/// Gap below which `nearest_other` counts as a near-tie warning.
pub const NEAR_TIE_GAP: f64 = 1e-6;

impl ExtremalResult {
    pub fn near_tie(&self) -> bool {
        self.nearest_other.is_some_and(|v| (v - self.optimum).abs() < NEAR_TIE_GAP)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalError {
    EmptyClass(GraphClassSpec),
    Enumeration(EnumerationError),
    Canon(CanonError),
    /// Conjecture reports cover 4 <= n <= the internal cap.
    OrderOutOfRange { n: usize, min: usize, max: usize },
    /// Conjecture reports need cyclomatic number >= 1.
    CyclomaticTooSmall { ell: u32 },
}

impl fmt::Display for ExtremalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremalError::EmptyClass(class) => write!(f, "no {class}"),
            ExtremalError::Enumeration(e) => e.fmt(f),
            ExtremalError::Canon(e) => e.fmt(f),
            ExtremalError::OrderOutOfRange { n, min, max } => {
                write!(f, "conjecture reports cover orders {min}..={max}, got {n}")
            }
            ExtremalError::CyclomaticTooSmall { ell } => {
                write!(f, "conjecture reports need cyclomatic number >= 1, got {ell}")
            }
        }
    }
}

impl core::error::Error for ExtremalError {}

impl From<EnumerationError> for ExtremalError {
    fn from(e: EnumerationError) -> Self {
        ExtremalError::Enumeration(e)
    }
}

impl From<CanonError> for ExtremalError {
    fn from(e: CanonError) -> Self {
        ExtremalError::Canon(e)
    }
}

/// Finds the optimum with the default tolerance.
pub fn find_extremal(
    plan: &EnumerationPlan,
    kind: IndexKind,
    direction: Direction,
) -> Result<ExtremalResult, ExtremalError> {
    find_extremal_with_tol(plan, kind, direction, EQUALITY_TOL)
}

pub fn find_extremal_with_tol(
    plan: &EnumerationPlan,
    kind: IndexKind,
    direction: Direction,
    tol: f64,
) -> Result<ExtremalResult, ExtremalError> {
    // Pass 1: optimum only. Isomorphic duplicates cannot move a min/max, so
    // the stream runs without dedup regardless of the plan.
    let value_plan = EnumerationPlan::new(plan.class, false);
    let mut optimum: Option<f64> = None;
    for g in enumerate(&value_plan)? {
        let v = index_value(&g, kind);
        if optimum.is_none_or(|b| direction.better(v, b)) {
            optimum = Some(v);
        }
    }
    let optimum = optimum.ok_or(ExtremalError::EmptyClass(plan.class))?;

    // Pass 2: collect attainers and the nearest non-attaining value.
    let mut witnesses: Vec<(Vec<u8>, Graph)> = Vec::new();
    let mut nearest_other: Option<f64> = None;
    for g in enumerate(&value_plan)? {
        let v = index_value(&g, kind);
        if (v - optimum).abs() <= tol {
            let (rep, code) = canonical_form(&g)?;
            if witnesses.iter().all(|(c, _)| *c != code) {
                witnesses.push((code, rep));
            }
        } else if nearest_other.is_none_or(|b| (v - optimum).abs() < (b - optimum).abs()) {
            nearest_other = Some(v);
        }
    }
    witnesses.sort_by(|(a, _), (b, _)| a.cmp(b));
    let witness_properties = witnesses.iter().map(|(_, g)| WitnessProperties::of(g)).collect();
    Ok(ExtremalResult {
        class: plan.class,
        kind,
        direction,
        optimum,
        witnesses: witnesses.into_iter().map(|(_, g)| g).collect(),
        witness_properties,
        nearest_other,
    })
}

/// Small-order evidence for the two open questions on connected graphs with
/// fixed cyclomatic number: whether CDSO minimizers and HSO maximizers have a
/// dominating vertex, and whether (for cyclomatic number >= 2) the extreme
/// degrees of CDSO maximizers and HSO minimizers lie in {2, 3}.
///
/// These are findings, not assertions — a false flag is a reported outcome.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub n: usize,
    pub ell: u32,
    pub cdso_min: ExtremalResult,
    pub hso_max: ExtremalResult,
    pub cdso_max: ExtremalResult,
    pub hso_min: ExtremalResult,
    /// Every witness of `cdso_min` and `hso_max` has a dominating vertex.
    pub dominating_vertex_all_witnesses: bool,
    /// The degree question applies only for cyclomatic number >= 2.
    pub degree_conjecture_applicable: bool,
    /// Every witness of `cdso_max` and `hso_min` has extreme degrees in {2, 3}.
    pub degree_conjecture_all_in_2_3: bool,
}

pub fn conjecture_report(n: usize, ell: u32) -> Result<ConjectureReport, ExtremalError> {
    if !(4..=INTERNAL_ORDER_CAP).contains(&n) {
        return Err(ExtremalError::OrderOutOfRange { n, min: 4, max: INTERNAL_ORDER_CAP });
    }
    if ell < 1 {
        return Err(ExtremalError::CyclomaticTooSmall { ell });
    }
    let plan = EnumerationPlan::new(GraphClassSpec::cyclomatic(n, ell), false);
    let cdso_min = find_extremal(&plan, IndexKind::Cdso, Direction::Min)?;
    let hso_max = find_extremal(&plan, IndexKind::Hso, Direction::Max)?;
    let cdso_max = find_extremal(&plan, IndexKind::Cdso, Direction::Max)?;
    let hso_min = find_extremal(&plan, IndexKind::Hso, Direction::Min)?;

    let dominating_vertex_all_witnesses = cdso_min
        .witness_properties
        .iter()
        .chain(&hso_max.witness_properties)
        .all(|p| p.has_dominating_vertex);
    let degree_conjecture_all_in_2_3 = cdso_max
        .witness_properties
        .iter()
        .chain(&hso_min.witness_properties)
        .all(|p| p.degrees_in_2_3);

    Ok(ConjectureReport {
        n,
        ell,
        cdso_min,
        hso_max,
        cdso_max,
        hso_min,
        dominating_vertex_all_witnesses,
        degree_conjecture_applicable: ell >= 2,
        degree_conjecture_all_in_2_3,
    })
}
