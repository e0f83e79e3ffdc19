//! Immutable simple undirected graphs on at most 64 labeled vertices.
//!
//! Vertices are dense integers `0..n`. Adjacency is one machine word of bits
//! per vertex, so every structural query used by the index bounds (degrees,
//! connectivity, edge scans) is a handful of word operations. Graph values
//! never mutate after construction; "adding" an edge produces a copy.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Hard cap on the order: one adjacency word per vertex.
pub const MAX_ORDER: usize = 64;

/// Validation failures when constructing or extending a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    /// Graphs have at least one vertex.
    ZeroOrder,
    /// Order exceeds [`MAX_ORDER`].
    OrderTooLarge { n: usize },
    /// An edge endpoint is not in `0..n`.
    VertexOutOfRange { vertex: usize, order: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: usize },
    /// The same unordered pair appears twice in an edge list.
    DuplicateEdge { u: usize, v: usize },
    /// The pair is already an edge, so it cannot be added.
    AlreadyAdjacent { u: usize, v: usize },
    /// A named family has no member of the requested order.
    FamilyOrderTooSmall { family: Family, n: usize, min: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::ZeroOrder => write!(f, "graph order must be at least 1"),
            GraphError::OrderTooLarge { n } => {
                write!(f, "graph order {n} exceeds the supported maximum {MAX_ORDER}")
            }
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} is out of range for order {order}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::AlreadyAdjacent { u, v } => {
                write!(f, "vertices {u} and {v} are already adjacent")
            }
            GraphError::FamilyOrderTooSmall { family, n, min } => {
                write!(f, "{family} graphs need order >= {min}, got {n}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// The four named graph families used throughout the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Path, Family::Cycle, Family::Star, Family::Complete];

    /// Smallest order for which the family has a member.
    pub fn min_order(self) -> usize {
        match self {
            Family::Path | Family::Complete => 1,
            Family::Star => 2,
            Family::Cycle => 3,
        }
    }

    /// Canonical labeled member of the family on `n` vertices.
    ///
    /// Paths and cycles are labeled along the walk; the star center is
    /// vertex 0.
    pub fn build(self, n: usize) -> Result<Graph, GraphError> {
        let min = self.min_order();
        if n < min {
            return Err(GraphError::FamilyOrderTooSmall { family: self, n, min });
        }
        let edges: Vec<(usize, usize)> = match self {
            Family::Path => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
            Family::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
            Family::Star => (1..n).map(|i| (0, i)).collect(),
            Family::Complete => {
                let mut e = Vec::with_capacity(n * (n - 1) / 2);
                for v in 1..n {
                    for u in 0..v {
                        e.push((u, v));
                    }
                }
                e
            }
        };
        Graph::from_edges(n, &edges)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
        })
    }
}

impl core::str::FromStr for Family {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, UnknownName> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "star" => Ok(Family::Star),
            "complete" => Ok(Family::Complete),
            _ => Err(UnknownName("family")),
        }
    }
}

/// Parse failure for the small name enums (family, index, direction).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnknownName(pub &'static str);

impl fmt::Display for UnknownName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown {} name", self.0)
    }
}

impl core::error::Error for UnknownName {}

/// Structural facts the equality characterizations need.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralSummary {
    pub is_regular: bool,
    pub has_dominating_vertex: bool,
    pub min_degree: u32,
    pub max_degree: u32,
    /// Every edge is incident to a vertex of minimum degree.
    /// Vacuously true on edgeless graphs.
    pub every_edge_touches_min_degree: bool,
    /// Every edge is incident to a vertex of maximum degree.
    /// Vacuously true on edgeless graphs.
    pub every_edge_touches_max_degree: bool,
}

/// An immutable simple undirected graph with cached degrees.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    deg: Vec<u32>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an explicit edge list, rejecting out-of-range
    /// endpoints, self-loops, and duplicate pairs with distinct errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroOrder);
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { n });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if adj[u] >> v & 1 == 1 {
                let (a, b) = if u < v { (u, v) } else { (v, u) };
                return Err(GraphError::DuplicateEdge { u: a, v: b });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Self::from_rows(n, adj))
    }

    /// Adopts symmetric adjacency rows without validation.
    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        let deg: Vec<u32> = adj.iter().map(|row| row.count_ones()).collect();
        let m = deg.iter().map(|&d| d as usize).sum::<usize>() / 2;
        Graph { n, adj, deg, m }
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.deg[v]
    }

    #[inline]
    pub fn degrees(&self) -> &[u32] {
        &self.deg
    }

    #[inline]
    pub fn min_degree(&self) -> u32 {
        self.deg.iter().copied().min().unwrap_or(0)
    }

    #[inline]
    pub fn max_degree(&self) -> u32 {
        self.deg.iter().copied().max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Adjacency row of `v` as a bitmask.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> BitIter {
        BitIter(self.adj[v])
    }

    /// Edges as unordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> EdgeIter<'_> {
        EdgeIter { g: self, u: 0, bits: bits_above(self.adj.first().copied().unwrap_or(0), 0) }
    }

    /// New graph equal to `self` plus the edge `uv`; `self` is unchanged.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, order: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if self.has_edge(u, v) {
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            return Err(GraphError::AlreadyAdjacent { u: a, v: b });
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Self::from_rows(self.n, adj))
    }

    /// True iff the graph has exactly one component. The one-vertex graph is
    /// connected.
    pub fn is_connected(&self) -> bool {
        connected_rows(&self.adj, self.n)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut unvisited = if self.n == 64 { !0u64 } else { (1u64 << self.n) - 1 };
        let mut components = 0;
        while unvisited != 0 {
            components += 1;
            let start = unvisited.trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            loop {
                let mut next = seen;
                let mut frontier = seen;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    next |= self.adj[v];
                    frontier &= frontier - 1;
                }
                if next == seen {
                    break;
                }
                seen = next;
            }
            unvisited &= !seen;
        }
        components
    }

    /// `m - n + c`: minimum number of edges whose removal leaves the graph
    /// acyclic.
    pub fn cyclomatic_number(&self) -> usize {
        self.m + self.component_count() - self.n
    }

    /// Degree-based structural predicates; edge-incidence flags are vacuously
    /// true on edgeless graphs.
    pub fn structural_summary(&self) -> StructuralSummary {
        let min_degree = self.min_degree();
        let max_degree = self.max_degree();
        StructuralSummary {
            is_regular: min_degree == max_degree,
            has_dominating_vertex: self.deg.iter().any(|&d| d as usize == self.n - 1),
            min_degree,
            max_degree,
            every_edge_touches_min_degree: self.every_edge_touches_degree(min_degree),
            every_edge_touches_max_degree: self.every_edge_touches_degree(max_degree),
        }
    }

    /// True iff every edge has an endpoint of degree `d`.
    pub fn every_edge_touches_degree(&self, d: u32) -> bool {
        self.edges().all(|(u, v)| self.deg[u] == d || self.deg[v] == d)
    }

    /// True iff every edge joins endpoints of equal degree.
    pub fn every_edge_balanced(&self) -> bool {
        self.edges().all(|(u, v)| self.deg[u] == self.deg[v])
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// Isomorphic to the path on `order()` vertices.
    pub fn is_path(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        match self.n {
            1 => self.m == 0,
            2 => self.m == 1,
            _ => {
                self.m == self.n - 1
                    && self.deg.iter().filter(|&&d| d == 1).count() == 2
                    && self.deg.iter().filter(|&&d| d == 2).count() == self.n - 2
            }
        }
    }

    /// Isomorphic to the cycle on `order()` vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.deg.iter().all(|&d| d == 2) && self.is_connected()
    }

    /// Isomorphic to the star on `order()` vertices (one center, n-1 leaves).
    pub fn is_star(&self) -> bool {
        self.n >= 2
            && self.m == self.n - 1
            && self.max_degree() as usize == self.n - 1
            && self.is_connected()
    }

    /// Complete graph on `order()` vertices.
    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({u},{v})")?;
        }
        write!(f, "])")
    }
}

/// Connectivity over raw adjacency rows; shared with the enumeration kernel.
pub(crate) fn connected_rows(adj: &[u64], n: usize) -> bool {
    let mut seen = 1u64;
    loop {
        let mut next = seen;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            next |= adj[v];
            frontier &= frontier - 1;
        }
        if next == seen {
            break;
        }
        seen = next;
    }
    seen.count_ones() as usize == n
}

#[inline]
fn bits_above(word: u64, v: usize) -> u64 {
    if v + 1 >= 64 {
        0
    } else {
        word & (!0u64 << (v + 1))
    }
}

/// Iterator over the set bits of a word.
#[derive(Clone)]
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Iterator over edges `(u, v)` with `u < v`.
pub struct EdgeIter<'a> {
    g: &'a Graph,
    u: usize,
    bits: u64,
}

impl Iterator for EdgeIter<'_> {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        loop {
            if self.bits != 0 {
                let v = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some((self.u, v));
            }
            self.u += 1;
            if self.u >= self.g.n {
                return None;
            }
            self.bits = bits_above(self.g.adj[self.u], self.u);
        }
    }
}

/// A class of graphs over which enumeration and extremal search run.
///
/// All three constraints include connectivity; trees are the connected graphs
/// with `m = n - 1`, and a connected graph has cyclomatic number `l` exactly
/// when `m = n - 1 + l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphClassSpec {
    pub n: usize,
    pub constraint: ClassConstraint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassConstraint {
    Connected,
    Trees,
    Cyclomatic(u32),
}

impl GraphClassSpec {
    pub fn connected(n: usize) -> Self {
        GraphClassSpec { n, constraint: ClassConstraint::Connected }
    }

    pub fn trees(n: usize) -> Self {
        GraphClassSpec { n, constraint: ClassConstraint::Trees }
    }

    pub fn cyclomatic(n: usize, ell: u32) -> Self {
        GraphClassSpec { n, constraint: ClassConstraint::Cyclomatic(ell) }
    }

    /// Edge count forced by the constraint, if any.
    pub fn edge_count(&self) -> Option<usize> {
        match self.constraint {
            ClassConstraint::Connected => None,
            ClassConstraint::Trees => Some(self.n - 1),
            ClassConstraint::Cyclomatic(ell) => Some(self.n - 1 + ell as usize),
        }
    }

    /// Membership test, including the connectivity recheck.
    pub fn admits(&self, g: &Graph) -> bool {
        g.order() == self.n
            && self.edge_count().is_none_or(|m| g.size() == m)
            && g.is_connected()
    }
}

impl fmt::Display for GraphClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.constraint {
            ClassConstraint::Connected => write!(f, "connected graphs of order {}", self.n),
            ClassConstraint::Trees => write!(f, "trees of order {}", self.n),
            ClassConstraint::Cyclomatic(ell) => {
                write!(f, "connected graphs of order {} with cyclomatic number {}", self.n, ell)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn build_path_three() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), &[1, 2, 1]);
        assert_eq!(g.size(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn build_single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.size(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn build_rejections() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 0), (0, 1)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop { vertex: 0 }));
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, order: 2 })
        );
        assert_eq!(Graph::from_edges(0, &[]), Err(GraphError::ZeroOrder));
        assert_eq!(Graph::from_edges(65, &[]), Err(GraphError::OrderTooLarge { n: 65 }));
    }

    #[test]
    fn families() {
        let star = Family::Star.build(5).unwrap();
        assert_eq!(star.size(), 4);
        let mut degs: Vec<u32> = star.degrees().to_vec();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 1, 4]);

        let c3 = Family::Cycle.build(3).unwrap();
        assert!(c3.is_complete());

        assert_eq!(
            Family::Cycle.build(2),
            Err(GraphError::FamilyOrderTooSmall { family: Family::Cycle, n: 2, min: 3 })
        );
        assert!(Family::Path.build(1).is_ok());
        assert_eq!(
            Family::Star.build(1),
            Err(GraphError::FamilyOrderTooSmall { family: Family::Star, n: 1, min: 2 })
        );
    }

    #[test]
    fn connectivity() {
        assert!(Family::Path.build(4).unwrap().is_connected());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        assert_eq!(two_k2.component_count(), 2);
        assert!(Graph::from_edges(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn cyclomatic_numbers() {
        let tree = Family::Star.build(6).unwrap();
        assert_eq!(tree.cyclomatic_number(), 0);
        assert_eq!(Family::Cycle.build(5).unwrap().cyclomatic_number(), 1);
        assert_eq!(Family::Complete.build(4).unwrap().cyclomatic_number(), 3);
    }

    #[test]
    fn structural_predicates() {
        let s6 = Family::Star.build(6).unwrap().structural_summary();
        assert!(!s6.is_regular);
        assert!(s6.has_dominating_vertex);
        assert!(s6.every_edge_touches_min_degree);
        assert!(s6.every_edge_touches_max_degree);

        let c4 = Family::Cycle.build(4).unwrap().structural_summary();
        assert!(c4.is_regular);
        assert!(!c4.has_dominating_vertex);

        // The middle edge of P4 joins two degree-2 vertices.
        let p4 = Family::Path.build(4).unwrap().structural_summary();
        assert!(!p4.every_edge_touches_min_degree);
        assert!(p4.every_edge_touches_max_degree);

        // Edge flags are vacuous without edges.
        let e3 = Graph::from_edges(3, &[]).unwrap().structural_summary();
        assert!(e3.every_edge_touches_min_degree);
        assert!(e3.every_edge_touches_max_degree);
    }

    #[test]
    fn with_edge_copies() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let joined = two_k2.with_edge(1, 2).unwrap();
        assert!(joined.is_path());
        assert_eq!(two_k2.size(), 2);

        let p3 = Family::Path.build(3).unwrap();
        assert!(p3.with_edge(0, 2).unwrap().is_cycle());

        let k3 = Family::Complete.build(3).unwrap();
        assert_eq!(k3.with_edge(0, 1), Err(GraphError::AlreadyAdjacent { u: 0, v: 1 }));
        assert_eq!(k3.with_edge(1, 1), Err(GraphError::SelfLoop { vertex: 1 }));
    }

    #[test]
    fn degree_sum_is_twice_size() {
        for n in 1..7 {
            for family in Family::ALL {
                if n < family.min_order() {
                    continue;
                }
                let g = family.build(n).unwrap();
                let total: u32 = g.degrees().iter().sum();
                assert_eq!(total as usize, 2 * g.size());
            }
        }
    }

    #[test]
    fn family_recognizers() {
        assert!(Family::Path.build(5).unwrap().is_path());
        assert!(Family::Cycle.build(5).unwrap().is_cycle());
        assert!(Family::Star.build(5).unwrap().is_star());
        assert!(Family::Complete.build(5).unwrap().is_complete());
        // P2 = S2 = K2, P3 = S3, C3 = K3.
        let p2 = Family::Path.build(2).unwrap();
        assert!(p2.is_path() && p2.is_star() && p2.is_complete());
        let p3 = Family::Path.build(3).unwrap();
        assert!(p3.is_star());
        assert!(Family::Cycle.build(3).unwrap().is_complete());
        assert!(!Family::Path.build(4).unwrap().is_star());
    }

    #[test]
    fn class_specs() {
        let trees5 = GraphClassSpec::trees(5);
        assert!(trees5.admits(&Family::Path.build(5).unwrap()));
        assert!(!trees5.admits(&Family::Cycle.build(5).unwrap()));
        let uni5 = GraphClassSpec::cyclomatic(5, 1);
        assert!(uni5.admits(&Family::Cycle.build(5).unwrap()));
        assert_eq!(GraphClassSpec::cyclomatic(5, 1).edge_count(), Some(5));
        let conn = GraphClassSpec::connected(4);
        assert!(!conn.admits(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()));
    }

    #[test]
    fn max_order_graph() {
        let g = Graph::from_edges(64, &[(0, 63), (62, 63)]).unwrap();
        assert_eq!(g.degree(63), 2);
        assert_eq!(g.edges().count(), 2);
        assert!(!g.is_connected());
        assert_eq!(g.component_count(), 62);
    }
}
