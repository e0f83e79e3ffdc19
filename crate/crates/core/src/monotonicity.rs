//! Edge-addition monotonicity: sufficient conditions under which adding an
//! edge strictly decreases or increases HSO and CDSO, and the measured index
//! change for any non-adjacent pair.
//!
//! The four conditions, for non-adjacent vertices u, v:
//!
//! * HSO decrease — both endpoints have the graph's minimum degree (>= 1)
//!   and every neighbor of each has strictly larger degree.
//! * HSO increase — minimum degree >= 1 and each endpoint's degree is at
//!   least every one of its neighbors' degrees.
//! * CDSO decrease — `d(u) = 4 d(v) >= 12`, every neighbor of u has degree
//!   `d(u)` and every neighbor of v has degree `d(v)`.
//! * CDSO increase — minimum degree >= 1 and each endpoint's degree is
//!   strictly below all of its neighbors' degrees (`d + 1 <=` the minimum
//!   neighbor degree).
//!
//! The conditions are sufficient, not necessary. In particular the HSO
//! decrease condition fires on small graphs (two leaves of a star), which is
//! what makes HSO non-monotone under edge addition.

use alloc::vec::Vec;
use core::fmt;

use crate::bounds::{DomainError, SweepReport};
use crate::graph::{Graph, GraphError};
use crate::indices::{index_value, IndexKind};

/// Classification of one non-adjacent pair.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotonicityReport {
    pub u: usize,
    pub v: usize,
    pub hso_decrease_condition: bool,
    pub hso_increase_condition: bool,
    pub cdso_decrease_condition: bool,
    pub cdso_increase_condition: bool,
    /// `HSO(G + uv) - HSO(G)`.
    pub delta_hso: f64,
    /// `CDSO(G + uv) - CDSO(G)`.
    pub delta_cdso: f64,
}

impl MonotonicityReport {
    /// Every satisfied condition implies the strict delta sign it promises.
    pub fn consistent(&self, tol: f64) -> bool {
        (!self.hso_decrease_condition || self.delta_hso < -tol)
            && (!self.hso_increase_condition || self.delta_hso > tol)
            && (!self.cdso_decrease_condition || self.delta_cdso < -tol)
            && (!self.cdso_increase_condition || self.delta_cdso > tol)
    }

    /// The decrease and increase hypotheses for the same index can never
    /// coincide (a neighbor cannot be both strictly above and at most the
    /// endpoint degree); a true result here is an anomaly worth surfacing.
    pub fn anomalous(&self) -> bool {
        (self.hso_decrease_condition && self.hso_increase_condition)
            || (self.cdso_decrease_condition && self.cdso_increase_condition)
    }
}

impl fmt::Display for MonotonicityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pair ({}, {}): delta_hso={:+.6e} delta_cdso={:+.6e}",
            self.u, self.v, self.delta_hso, self.delta_cdso
        )
    }
}

/// Classifies the non-adjacent pair `(u, v)` under all four conditions and
/// measures both deltas by full re-evaluation of the extended graph.
pub fn classify_pair(g: &Graph, u: usize, v: usize) -> Result<MonotonicityReport, GraphError> {
    let extended = g.with_edge(u, v)?; // rejects u = v, adjacency, range
    let deg = g.degrees();
    let min_deg = g.min_degree();

    let neighbor_degrees = |w: usize| g.neighbors(w).map(|x| deg[x]);
    let all_neighbors_above = |w: usize, d: u32| neighbor_degrees(w).all(|x| x > d);
    let no_neighbor_above = |w: usize, d: u32| neighbor_degrees(w).all(|x| x <= d);
    let all_neighbors_equal = |w: usize, d: u32| neighbor_degrees(w).all(|x| x == d);
    let all_neighbors_at_least = |w: usize, d: u32| neighbor_degrees(w).all(|x| x >= d);

    let hso_decrease_condition = min_deg >= 1
        && deg[u] == min_deg
        && deg[v] == min_deg
        && all_neighbors_above(u, min_deg)
        && all_neighbors_above(v, min_deg);
    let hso_increase_condition =
        min_deg >= 1 && no_neighbor_above(u, deg[u]) && no_neighbor_above(v, deg[v]);
    let (big, small) = if deg[u] >= deg[v] { (u, v) } else { (v, u) };
    let cdso_decrease_condition = deg[big] == 4 * deg[small]
        && deg[big] >= 12
        && all_neighbors_equal(big, deg[big])
        && all_neighbors_equal(small, deg[small]);
    let cdso_increase_condition = min_deg >= 1
        && all_neighbors_at_least(u, deg[u] + 1)
        && all_neighbors_at_least(v, deg[v] + 1);

    Ok(MonotonicityReport {
        u: u.min(v),
        v: u.max(v),
        hso_decrease_condition,
        hso_increase_condition,
        cdso_decrease_condition,
        cdso_increase_condition,
        delta_hso: index_value(&extended, IndexKind::Hso) - index_value(g, IndexKind::Hso),
        delta_cdso: index_value(&extended, IndexKind::Cdso) - index_value(g, IndexKind::Cdso),
    })
}

/// The CDSO decrease condition with the stated degree floor dropped to what
/// the underlying argument needs (`d(v) >= 3`, hence `d(u) >= 12` follows);
/// diagnostic only, never used by [`classify_pair`].
pub fn cdso_decrease_condition_relaxed(g: &Graph, u: usize, v: usize) -> bool {
    let deg = g.degrees();
    let (big, small) = if deg[u] >= deg[v] { (u, v) } else { (v, u) };
    deg[big] == 4 * deg[small]
        && deg[small] >= 3
        && g.neighbors(big).all(|x| deg[x] == deg[big])
        && g.neighbors(small).all(|x| deg[x] == deg[small])
}

/// One report per non-adjacent pair with both degrees >= 1, in lexicographic
/// pair order. Pairs touching an isolated vertex are skipped: the conditions
/// quantify over nonempty neighborhoods.
pub fn scan_graph(g: &Graph) -> Vec<MonotonicityReport> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) || g.degree(u) == 0 || g.degree(v) == 0 {
                continue;
            }
            out.push(classify_pair(g, u, v).expect("pair is non-adjacent and in range"));
        }
    }
    out
}

/// Verifies, over a degree grid, the inequality behind the HSO decrease
/// condition: raising the smaller endpoint of a `(delta, d)` edge by one
/// lowers the HSO contribution by at least as much as it does at `d =
/// delta + 1`. Checked for `1 <= delta <= delta_max`, `delta < d <= d_max`.
pub fn sweep_contribution_drop(
    delta_max: u32,
    d_max: u32,
) -> Result<SweepReport<(u32, u32)>, DomainError> {
    if delta_max < 1 || d_max <= delta_max {
        return Err(DomainError::RangeTooSmall { got: d_max, min: delta_max + 1 });
    }
    let h = |x, y| IndexKind::Hso.edge_contribution(x, y);
    let mut checked = 0;
    let mut violations = Vec::new();
    for delta in 1..=delta_max {
        let reference = h(delta, delta + 1) - h(delta + 1, delta + 1);
        for d in delta + 1..=d_max {
            checked += 1;
            if h(delta, d) - h(delta + 1, d) < reference {
                violations.push((delta, d));
            }
        }
    }
    Ok(SweepReport { checked, violations })
}
