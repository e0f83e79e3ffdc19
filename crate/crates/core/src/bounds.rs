//! The inequality battery for HSO and CDSO, with per-graph reports and
//! numeric sweeps of the auxiliary functions behind the bounds.
//!
//! Every bound is checked the same way: evaluate the index, evaluate the
//! bound formula, compare with tolerance, and separately decide the equality
//! characterization from structural predicates. A report never fails — a
//! graph that misses a hypothesis is recorded with `hypothesis_met = false`
//! so batch sweeps keep going.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::indices::{index_value, IndexKind};
use crate::math::{sqrt, sqrt2, sqrt5};

/// Absolute tolerance for equality flags and violation checks.
/// Index values at desk scale stay below 1e3, so absolute suffices.
pub const EQUALITY_TOL: f64 = 1e-9;

/// Identifies one of the verified index inequalities.
///
/// Unless stated otherwise the hypothesis is a connected graph; the order or
/// size floor is noted per variant. Lower/upper refer to bounds on the index
/// named first in the tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    /// HSO >= sqrt2 * m (order >= 2); equality iff regular.
    HsoGeSqrt2M,
    /// SO/max_deg <= HSO <= SO/min_deg (order >= 2); left equality iff
    /// regular, right iff every edge touches a minimum-degree vertex.
    HsoSoSandwich,
    /// HSO >= M1 / (sqrt2 * max_deg) (order >= 2); equality iff regular.
    HsoGeM1,
    /// HSO >= 2(sqrt5-sqrt2) n + (3 sqrt2 - 2 sqrt5) m (order >= 4);
    /// equality iff the graph is a path or a cycle.
    HsoOrderSizeLower,
    /// HSO(C_n) <= HSO <= HSO(S_n) (order >= 3); equality iff cycle / star.
    HsoCycleStar,
    /// CDSO <= sqrt2 * m (size >= 1); equality iff regular.
    CdsoLeSqrt2M,
    /// CDSO >= m sqrt(max_deg^2 + 1) / max_deg (size >= 1); equality iff the
    /// graph is a star (the star on m+1 vertices).
    CdsoGeStarform,
    /// CDSO(S_n) <= CDSO <= CDSO(K_n) (order >= 3); equality iff star /
    /// complete.
    CdsoConnectedRange,
    /// SO/max_deg <= CDSO <= SO/min_deg (order >= 2); left equality iff every
    /// edge touches a maximum-degree vertex, right iff regular.
    CdsoSoSandwich,
    /// CDSO >= M1 / (sqrt2 * max_deg) (order >= 2); equality iff regular.
    CdsoGeM1,
    /// CDSO <= (sqrt5 - 2 sqrt2) n + (3 sqrt2 - sqrt5) m (order >= 4);
    /// equality iff the graph is a path or a cycle.
    CdsoOrderSizeUpper,
    /// sqrt((n-1)^2+1) <= CDSO <= sqrt5 + (n-3) sqrt2 on trees (order >= 4);
    /// equality iff star / path.
    CdsoTreeRange,
    /// CDSO <= HSO on every graph (no hypothesis); equality iff every edge
    /// joins endpoints of equal degree (on connected graphs: iff regular).
    CdsoLeHso,
}

impl BoundId {
    pub const ALL: [BoundId; 13] = [
        BoundId::HsoGeSqrt2M,
        BoundId::HsoSoSandwich,
        BoundId::HsoGeM1,
        BoundId::HsoOrderSizeLower,
        BoundId::HsoCycleStar,
        BoundId::CdsoLeSqrt2M,
        BoundId::CdsoGeStarform,
        BoundId::CdsoConnectedRange,
        BoundId::CdsoSoSandwich,
        BoundId::CdsoGeM1,
        BoundId::CdsoOrderSizeUpper,
        BoundId::CdsoTreeRange,
        BoundId::CdsoLeHso,
    ];

    /// Stable tag used in serialized reports.
    pub fn tag(self) -> &'static str {
        match self {
            BoundId::HsoGeSqrt2M => "HSO_GE_SQRT2M",
            BoundId::HsoSoSandwich => "HSO_SO_SANDWICH",
            BoundId::HsoGeM1 => "HSO_GE_M1",
            BoundId::HsoOrderSizeLower => "HSO_ORDER_SIZE_LOWER",
            BoundId::HsoCycleStar => "HSO_CYCLE_STAR",
            BoundId::CdsoLeSqrt2M => "CDSO_LE_SQRT2M",
            BoundId::CdsoGeStarform => "CDSO_GE_STARFORM",
            BoundId::CdsoConnectedRange => "CDSO_CONNECTED_RANGE",
            BoundId::CdsoSoSandwich => "CDSO_SO_SANDWICH",
            BoundId::CdsoGeM1 => "CDSO_GE_M1",
            BoundId::CdsoOrderSizeUpper => "CDSO_ORDER_SIZE_UPPER",
            BoundId::CdsoTreeRange => "CDSO_TREE_RANGE",
            BoundId::CdsoLeHso => "CDSO_LE_HSO",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One bound's verdict on one graph.
///
/// `holds` is vacuously true when the hypothesis is not met; bounds and
/// equality flags are then absent. Equality flags are numeric (within the
/// tolerance), the structural flags are the exact equality characterizations;
/// the two must agree on every graph meeting the hypothesis.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub id: BoundId,
    pub value: f64,
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub hypothesis_met: bool,
    pub holds: bool,
    pub equality_low: Option<bool>,
    pub equality_high: Option<bool>,
    pub structural_equality_low: Option<bool>,
    pub structural_equality_high: Option<bool>,
}

impl BoundReport {
    /// Numeric equality flags agree with the structural predictions.
    pub fn equality_consistent(&self) -> bool {
        !self.hypothesis_met
            || (self.equality_low == self.structural_equality_low
                && self.equality_high == self.structural_equality_high)
    }

    /// Smallest slack to a present bound (0 at equality).
    pub fn slack(&self) -> Option<f64> {
        let lo = self.lower.map(|b| self.value - b);
        let hi = self.upper.map(|b| b - self.value);
        match (lo, hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (None, None) => None,
        }
    }
}

// Everything the thirteen bound formulas need, computed once per graph.
struct Snapshot {
    n: f64,
    m: f64,
    min_deg: f64,
    max_deg: f64,
    connected: bool,
    order: usize,
    size: usize,
    so: f64,
    hso: f64,
    cdso: f64,
    m1: f64,
    regular: bool,
    path: bool,
    cycle: bool,
    star: bool,
    complete: bool,
    edge_touch_min: bool,
    edge_touch_max: bool,
    every_edge_balanced: bool,
}

impl Snapshot {
    fn take(g: &Graph) -> Snapshot {
        let summary = g.structural_summary();
        Snapshot {
            n: g.order() as f64,
            m: g.size() as f64,
            min_deg: summary.min_degree as f64,
            max_deg: summary.max_degree as f64,
            connected: g.is_connected(),
            order: g.order(),
            size: g.size(),
            so: index_value(g, IndexKind::So),
            hso: index_value(g, IndexKind::Hso),
            cdso: index_value(g, IndexKind::Cdso),
            m1: index_value(g, IndexKind::M1),
            regular: summary.is_regular,
            path: g.is_path(),
            cycle: g.is_cycle(),
            star: g.is_star(),
            complete: g.is_complete(),
            edge_touch_min: summary.every_edge_touches_min_degree,
            edge_touch_max: summary.every_edge_touches_max_degree,
            every_edge_balanced: g.every_edge_balanced(),
        }
    }
}

type Side = Option<(f64, bool)>; // bound value, predicted structural equality

fn report(id: BoundId, hyp: bool, value: f64, lower: Side, upper: Side, tol: f64) -> BoundReport {
    if !hyp {
        return BoundReport {
            id,
            value,
            lower: None,
            upper: None,
            hypothesis_met: false,
            holds: true,
            equality_low: None,
            equality_high: None,
            structural_equality_low: None,
            structural_equality_high: None,
        };
    }
    let holds = lower.is_none_or(|(b, _)| value >= b - tol)
        && upper.is_none_or(|(b, _)| value <= b + tol);
    BoundReport {
        id,
        value,
        lower: lower.map(|(b, _)| b),
        upper: upper.map(|(b, _)| b),
        hypothesis_met: true,
        holds,
        equality_low: lower.map(|(b, _)| (value - b).abs() <= tol),
        equality_high: upper.map(|(b, _)| (value - b).abs() <= tol),
        structural_equality_low: lower.map(|(_, s)| s),
        structural_equality_high: upper.map(|(_, s)| s),
    }
}

fn eval(s: &Snapshot, id: BoundId, tol: f64) -> BoundReport {
    let conn = s.connected;
    let path_or_cycle = s.path || s.cycle;
    match id {
        BoundId::HsoGeSqrt2M => report(
            id,
            conn && s.order >= 2,
            s.hso,
            Some((sqrt2() * s.m, s.regular)),
            None,
            tol,
        ),
        BoundId::HsoSoSandwich => report(
            id,
            conn && s.order >= 2,
            s.hso,
            Some((s.so / s.max_deg, s.regular)),
            Some((s.so / s.min_deg, s.edge_touch_min)),
            tol,
        ),
        BoundId::HsoGeM1 => report(
            id,
            conn && s.order >= 2,
            s.hso,
            Some((s.m1 / (sqrt2() * s.max_deg), s.regular)),
            None,
            tol,
        ),
        BoundId::HsoOrderSizeLower => report(
            id,
            conn && s.order >= 4,
            s.hso,
            Some((2.0 * (sqrt5() - sqrt2()) * s.n + (3.0 * sqrt2() - 2.0 * sqrt5()) * s.m, path_or_cycle)),
            None,
            tol,
        ),
        BoundId::HsoCycleStar => report(
            id,
            conn && s.order >= 3,
            s.hso,
            Some((s.n * sqrt2(), s.cycle)),
            Some(((s.n - 1.0) * sqrt((s.n - 1.0) * (s.n - 1.0) + 1.0), s.star)),
            tol,
        ),
        BoundId::CdsoLeSqrt2M => report(
            id,
            conn && s.size >= 1,
            s.cdso,
            None,
            Some((sqrt2() * s.m, s.regular)),
            tol,
        ),
        BoundId::CdsoGeStarform => report(
            id,
            conn && s.size >= 1,
            s.cdso,
            Some((s.m * sqrt(s.max_deg * s.max_deg + 1.0) / s.max_deg, s.star)),
            None,
            tol,
        ),
        BoundId::CdsoConnectedRange => report(
            id,
            conn && s.order >= 3,
            s.cdso,
            Some((sqrt((s.n - 1.0) * (s.n - 1.0) + 1.0), s.star)),
            Some((s.n * (s.n - 1.0) / sqrt2(), s.complete)),
            tol,
        ),
        BoundId::CdsoSoSandwich => report(
            id,
            conn && s.order >= 2,
            s.cdso,
            Some((s.so / s.max_deg, s.edge_touch_max)),
            Some((s.so / s.min_deg, s.regular)),
            tol,
        ),
        BoundId::CdsoGeM1 => report(
            id,
            conn && s.order >= 2,
            s.cdso,
            Some((s.m1 / (sqrt2() * s.max_deg), s.regular)),
            None,
            tol,
        ),
        BoundId::CdsoOrderSizeUpper => report(
            id,
            conn && s.order >= 4,
            s.cdso,
            None,
            Some(((sqrt5() - 2.0 * sqrt2()) * s.n + (3.0 * sqrt2() - sqrt5()) * s.m, path_or_cycle)),
            tol,
        ),
        BoundId::CdsoTreeRange => report(
            id,
            conn && s.size + 1 == s.order && s.order >= 4,
            s.cdso,
            Some((sqrt((s.n - 1.0) * (s.n - 1.0) + 1.0), s.star)),
            Some((sqrt5() + (s.n - 3.0) * sqrt2(), s.path)),
            tol,
        ),
        BoundId::CdsoLeHso => {
            report(id, true, s.cdso, None, Some((s.hso, s.every_edge_balanced)), tol)
        }
    }
}

/// Evaluates one bound on one graph with the default tolerance.
pub fn check_bound(g: &Graph, id: BoundId) -> BoundReport {
    eval(&Snapshot::take(g), id, EQUALITY_TOL)
}

/// Same as [`check_bound`] with a caller-chosen tolerance.
pub fn check_bound_with_tol(g: &Graph, id: BoundId, tol: f64) -> BoundReport {
    eval(&Snapshot::take(g), id, tol)
}

/// Evaluates all thirteen bounds, in tag order.
pub fn check_all(g: &Graph) -> Vec<BoundReport> {
    check_all_with_tol(g, EQUALITY_TOL)
}

pub fn check_all_with_tol(g: &Graph, tol: f64) -> Vec<BoundReport> {
    let snapshot = Snapshot::take(g);
    BoundId::ALL.iter().map(|&id| eval(&snapshot, id, tol)).collect()
}

// ---------------------------------------------------------------------------
// Auxiliary functions behind the order-size and star bounds, with sweeps.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainError {
    /// Requires `s >= r >= 1` (or `j >= i >= 1`).
    ArgumentsOutOfOrder { r: u32, s: u32 },
    ZeroArgument,
    /// Requires `1 <= i <= j <= n-1` and `n >= 3`.
    OutsideTriangle { i: u32, j: u32, n: u32 },
    RangeTooSmall { got: u32, min: u32 },
    /// The sign sweep is only defined for HSO and CDSO.
    UnsupportedKind(IndexKind),
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DomainError::ArgumentsOutOfOrder { r, s } => {
                write!(f, "arguments must satisfy s >= r >= 1, got r={r}, s={s}")
            }
            DomainError::ZeroArgument => write!(f, "arguments must be positive"),
            DomainError::OutsideTriangle { i, j, n } => {
                write!(f, "(i={i}, j={j}) outside 1 <= i <= j <= n-1 for n={n}")
            }
            DomainError::RangeTooSmall { got, min } => {
                write!(f, "sweep range must reach at least {min}, got {got}")
            }
            DomainError::UnsupportedKind(kind) => {
                write!(f, "sign sweep is defined for hso and cdso, not {kind}")
            }
        }
    }
}

impl core::error::Error for DomainError {}

/// Outcome of a numeric sweep: how many points were checked and which
/// violated the claimed sign.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport<V> {
    pub checked: u64,
    pub violations: Vec<V>,
}

impl<V> SweepReport<V> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Per-degree-pair slack of the linear order-size bound for a BID index:
///
/// `h(r,s) + 2 h(1,2) (rs - r - s) / (rs) + h(2,2) (2r + 2s - 3rs) / (rs)`.
///
/// Its sign over all degree pairs decides whether the order-size expression
/// is a lower bound (positive, HSO) or an upper bound (negative, CDSO), with
/// the pairs (1,1), (1,2), (2,2) — the pairs realized by paths and cycles —
/// as the equality cases.
pub fn pair_slack(kind: IndexKind, r: u32, s: u32) -> Result<f64, DomainError> {
    if r == 0 {
        return Err(DomainError::ZeroArgument);
    }
    if r > s {
        return Err(DomainError::ArgumentsOutOfOrder { r, s });
    }
    let h = |x, y| kind.edge_contribution(x, y);
    let (rf, sf) = (r as f64, s as f64);
    let product = rf * sf;
    Ok(h(r, s)
        + 2.0 * h(1, 2) * (product - rf - sf) / product
        + h(2, 2) * (2.0 * rf + 2.0 * sf - 3.0 * product) / product)
}

/// Checks the pair-slack sign for all `1 <= r <= s <= s_max` outside the
/// three equality pairs: positive for HSO, negative for CDSO.
pub fn sweep_pair_slack(kind: IndexKind, s_max: u32) -> Result<SweepReport<(u32, u32)>, DomainError> {
    if s_max < 3 {
        return Err(DomainError::RangeTooSmall { got: s_max, min: 3 });
    }
    let positive = match kind {
        IndexKind::Hso => true,
        IndexKind::Cdso => false,
        other => return Err(DomainError::UnsupportedKind(other)),
    };
    let mut checked = 0;
    let mut violations = Vec::new();
    for s in 1..=s_max {
        for r in 1..=s {
            if matches!((r, s), (1, 1) | (1, 2) | (2, 2)) {
                continue;
            }
            checked += 1;
            let slack = pair_slack(kind, r, s)?;
            if (positive && slack <= 0.0) || (!positive && slack >= 0.0) {
                violations.push((r, s));
            }
        }
    }
    Ok(SweepReport { checked, violations })
}

/// Membership in the degree-pair set of the star-maximality condition:
/// `1 <= i <= j <= n-1` minus the star's own pair `(1, n-1)`.
pub fn star_condition_pair(i: u32, j: u32, n: u32) -> bool {
    1 <= i && i <= j && j < n && (i, j) != (1, n - 1)
}

/// Ratio form of the star-maximality condition for HSO:
///
/// `(n-1)/n * sqrt((n-1)^2 + 1) * (i + j) / (j * sqrt(i^2 + j^2))`.
///
/// Values above 1 on every admissible pair certify that the star maximizes
/// HSO over connected graphs of order n.
pub fn star_ratio(i: u32, j: u32, n: u32) -> Result<f64, DomainError> {
    if n < 3 || i < 1 || i > j || j > n - 1 {
        return Err(DomainError::OutsideTriangle { i, j, n });
    }
    let (i, j, n) = (i as f64, j as f64, n as f64);
    Ok((n - 1.0) / n * sqrt((n - 1.0) * (n - 1.0) + 1.0) * (i + j) / (j * sqrt(i * i + j * j)))
}

/// Difference form of the same condition (negative where the condition
/// holds); kept as a cross-check of [`star_ratio`].
pub fn star_gap(i: u32, j: u32, n: u32) -> Result<f64, DomainError> {
    if n < 3 || i < 1 || i > j || j > n - 1 {
        return Err(DomainError::OutsideTriangle { i, j, n });
    }
    let h = IndexKind::Hso;
    let (fi, fj, order) = (i as f64, j as f64, n as f64);
    Ok(h.edge_contribution(i, j)
        - (order - 1.0) / order * (1.0 / fi + 1.0 / fj) * h.edge_contribution(1, n - 1))
}

/// Sweeps the star-maximality condition: ratio > 1 and gap < 0 on every
/// admissible pair for every order `3 <= n <= n_max`.
pub fn sweep_star_ratio(n_max: u32) -> Result<SweepReport<(u32, u32, u32)>, DomainError> {
    if n_max < 3 {
        return Err(DomainError::RangeTooSmall { got: n_max, min: 3 });
    }
    let mut checked = 0;
    let mut violations = Vec::new();
    for n in 3..=n_max {
        for j in 1..=n - 1 {
            for i in 1..=j {
                if !star_condition_pair(i, j, n) {
                    continue;
                }
                checked += 1;
                let ratio = star_ratio(i, j, n)?;
                let gap = star_gap(i, j, n)?;
                if ratio <= 1.0 || gap >= 0.0 {
                    violations.push((i, j, n));
                }
            }
        }
    }
    Ok(SweepReport { checked, violations })
}

/// Quadratic floor used to certify positivity of the HSO pair slack:
///
/// `(2 sqrt5 - 3 sqrt2) rs - 2 (sqrt5 - sqrt2)(r + s) + s^2`.
pub fn slack_floor(r: u32, s: u32) -> Result<f64, DomainError> {
    if r == 0 {
        return Err(DomainError::ZeroArgument);
    }
    if r > s {
        return Err(DomainError::ArgumentsOutOfOrder { r, s });
    }
    let (r, s) = (r as f64, s as f64);
    Ok((2.0 * sqrt5() - 3.0 * sqrt2()) * r * s - 2.0 * (sqrt5() - sqrt2()) * (r + s) + s * s)
}

/// `rs`-scaled HSO pair slack, `slack_floor` with `s^2` replaced by
/// `s sqrt(r^2 + s^2)`; always strictly above the floor.
pub fn scaled_slack(r: u32, s: u32) -> Result<f64, DomainError> {
    if r == 0 {
        return Err(DomainError::ZeroArgument);
    }
    if r > s {
        return Err(DomainError::ArgumentsOutOfOrder { r, s });
    }
    let (r, s) = (r as f64, s as f64);
    Ok((2.0 * sqrt5() - 3.0 * sqrt2()) * r * s - 2.0 * (sqrt5() - sqrt2()) * (r + s)
        + s * sqrt(r * r + s * s))
}

/// Positivity sweep of the floor on its two certifying edges — `(1, s)` for
/// `s >= 8` and the diagonal `(s, s)` for `3 <= s <= 8` — plus spot checks
/// that the scaled slack stays strictly above the floor.
pub fn sweep_slack_floor(s_max: u32) -> Result<SweepReport<(u32, u32)>, DomainError> {
    if s_max < 8 {
        return Err(DomainError::RangeTooSmall { got: s_max, min: 8 });
    }
    let mut checked = 0;
    let mut violations = Vec::new();
    for s in 8..=s_max {
        checked += 1;
        if slack_floor(1, s)? <= 0.0 {
            violations.push((1, s));
        }
    }
    for s in 3..=8 {
        checked += 1;
        if slack_floor(s, s)? <= 0.0 {
            violations.push((s, s));
        }
    }
    for s in 1..=12u32 {
        for r in 1..=s {
            checked += 1;
            if scaled_slack(r, s)? <= slack_floor(r, s)? {
                violations.push((r, s));
            }
        }
    }
    Ok(SweepReport { checked, violations })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::graph::{Family, Graph};

    const TIGHT: f64 = 1e-12;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9
    }

    #[test]
    fn regular_graph_meets_size_bound_with_equality() {
        let c7 = Family::Cycle.build(7).unwrap();
        let r = check_bound(&c7, BoundId::HsoGeSqrt2M);
        assert!(r.hypothesis_met && r.holds);
        assert!(close(r.value, 7.0 * sqrt2()));
        assert!(close(r.lower.unwrap(), 7.0 * sqrt2()));
        assert_eq!(r.equality_low, Some(true));
        assert_eq!(r.structural_equality_low, Some(true));
        assert!(r.equality_consistent());
    }

    #[test]
    fn path_attains_order_size_lower_bound() {
        let p6 = Family::Path.build(6).unwrap();
        let r = check_bound(&p6, BoundId::HsoOrderSizeLower);
        assert!(r.holds);
        // 2*sqrt5 + 3*sqrt2, frozen from the oracle.
        assert!(close(r.value, 8.7147766421188645));
        assert!(close(r.lower.unwrap(), 8.7147766421188645));
        assert_eq!(r.equality_low, Some(true));
        assert_eq!(r.structural_equality_low, Some(true));
    }

    #[test]
    fn star_attains_connected_range_lower() {
        let s5 = Family::Star.build(5).unwrap();
        let r = check_bound(&s5, BoundId::CdsoConnectedRange);
        assert!(close(r.value, 4.1231056256176605)); // sqrt17
        assert!(close(r.lower.unwrap(), 4.1231056256176605));
        assert!(close(r.upper.unwrap(), 10.0 * sqrt2()));
        assert_eq!(r.equality_low, Some(true));
        assert_eq!(r.equality_high, Some(false));
        assert!(r.equality_consistent());
    }

    #[test]
    fn complete_graph_attains_cdso_size_upper() {
        let k4 = Family::Complete.build(4).unwrap();
        let r = check_bound(&k4, BoundId::CdsoLeSqrt2M);
        assert!(close(r.value, 6.0 * sqrt2()));
        assert!(close(r.upper.unwrap(), 6.0 * sqrt2()));
        assert_eq!(r.equality_high, Some(true));
        assert_eq!(r.structural_equality_high, Some(true));
    }

    #[test]
    fn check_all_is_ordered_and_total() {
        let p2 = Family::Path.build(2).unwrap();
        let reports = check_all(&p2);
        assert_eq!(reports.len(), BoundId::ALL.len());
        for (r, id) in reports.iter().zip(BoundId::ALL) {
            assert_eq!(r.id, id);
        }
        // Order-2 path misses the n >= 4 hypotheses but meets the rest.
        let by_id = |id: BoundId| reports.iter().find(|r| r.id == id).unwrap().clone();
        assert!(!by_id(BoundId::HsoOrderSizeLower).hypothesis_met);
        assert!(!by_id(BoundId::CdsoOrderSizeUpper).hypothesis_met);
        assert!(!by_id(BoundId::CdsoTreeRange).hypothesis_met);
        assert!(by_id(BoundId::HsoGeSqrt2M).hypothesis_met);
        assert!(by_id(BoundId::HsoSoSandwich).equality_low == Some(true));
    }

    #[test]
    fn disconnected_graphs_are_data_not_errors() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        for r in check_all(&two_k2) {
            if r.id == BoundId::CdsoLeHso {
                assert!(r.hypothesis_met);
                assert_eq!(r.equality_high, Some(true)); // regular components
                assert_eq!(r.structural_equality_high, Some(true));
            } else {
                assert!(!r.hypothesis_met);
                assert!(r.holds);
            }
        }
    }

    #[test]
    fn cycle_star_sandwich_on_order_five() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let r = check_bound(&g, BoundId::HsoCycleStar);
        assert!(close(r.lower.unwrap(), 5.0 * sqrt2()));
        assert!(close(r.upper.unwrap(), 4.0 * sqrt(17.0)));
        assert!(r.holds);
    }

    #[test]
    fn pair_slack_values() {
        // Frozen by direct formula evaluation.
        assert!(close(pair_slack(IndexKind::Hso, 3, 3).unwrap(), 0.54790294341779643));
        assert!(close(pair_slack(IndexKind::Cdso, 3, 3).unwrap(), -0.19745304908213347));
        // Exact zeros at the path/cycle pairs.
        assert!(pair_slack(IndexKind::Hso, 1, 2).unwrap().abs() <= 1e-12);
        assert!(pair_slack(IndexKind::Hso, 2, 2).unwrap().abs() <= 1e-12);
        assert!(pair_slack(IndexKind::Cdso, 1, 2).unwrap().abs() <= 1e-12);
        assert!(pair_slack(IndexKind::Cdso, 2, 2).unwrap().abs() <= 1e-12);
        assert_eq!(
            pair_slack(IndexKind::Hso, 3, 2),
            Err(DomainError::ArgumentsOutOfOrder { r: 3, s: 2 })
        );
    }

    #[test]
    fn pair_slack_sweeps() {
        let hso = sweep_pair_slack(IndexKind::Hso, 200).unwrap();
        assert!(hso.passed(), "violations: {:?}", hso.violations);
        let cdso = sweep_pair_slack(IndexKind::Cdso, 200).unwrap();
        assert!(cdso.passed(), "violations: {:?}", cdso.violations);
        // Range accounting: s_max = 3 checks exactly (1,3), (2,3), (3,3).
        assert_eq!(sweep_pair_slack(IndexKind::Hso, 3).unwrap().checked, 3);
        assert_eq!(
            sweep_pair_slack(IndexKind::So, 10),
            Err(DomainError::UnsupportedKind(IndexKind::So))
        );
    }

    #[test]
    fn star_ratio_values() {
        // 2*sqrt10/3, frozen from the oracle.
        assert!(close(star_ratio(1, 1, 3).unwrap(), 2.1081851067789196));
        assert!(star_condition_pair(1, 1, 3));
        assert!(!star_condition_pair(1, 2, 3)); // the star's own pair
        assert!(star_ratio(2, 1, 3).is_err());
        let sweep = sweep_star_ratio(300).unwrap();
        assert!(sweep.passed(), "violations: {:?}", sweep.violations);
    }

    #[test]
    fn slack_floor_values() {
        // Frozen by direct formula evaluation.
        assert!(close(slack_floor(1, 8).unwrap(), 51.04258267076185));
        assert!(close(slack_floor(3, 3).unwrap(), 1.2032044294023124));
        let diff = scaled_slack(2, 3).unwrap() - slack_floor(2, 3).unwrap();
        assert!(close(diff, 3.0 * sqrt(13.0) - 9.0));
        assert!(sweep_slack_floor(500).unwrap().passed());
    }

    #[test]
    fn tolerance_override_changes_equality_only() {
        let p4 = Family::Path.build(4).unwrap();
        let loose = check_bound_with_tol(&p4, BoundId::HsoGeSqrt2M, 10.0);
        assert_eq!(loose.equality_low, Some(true)); // sloppy tolerance flags near-equality
        let strict = check_bound(&p4, BoundId::HsoGeSqrt2M);
        assert_eq!(strict.equality_low, Some(false));
        assert_eq!(strict.holds, loose.holds);
    }

    #[test]
    fn slack_reporting() {
        let c4 = Family::Cycle.build(4).unwrap();
        let r = check_bound(&c4, BoundId::HsoGeSqrt2M);
        assert!(r.slack().unwrap().abs() <= TIGHT);
    }
}
