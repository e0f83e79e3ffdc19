//! Canonical codes for small graphs by brute-force relabeling.
//!
//! The code of a graph is the lexicographically smallest column-major
//! upper-triangle adjacency bitstring over all vertex relabelings that list
//! the vertices in ascending degree order. Restricting to degree-sorted
//! relabelings is sound because isomorphisms preserve degrees, and it prunes
//! the search to permutations within degree classes. A prefix comparison
//! against the best code found so far cuts most branches early.
//!
//! Isomorphic graphs get identical codes, non-isomorphic graphs distinct
//! ones; the search is factorial in the worst case, hence the order cap.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

/// Default order cap for canonicalization.
pub const CANONICAL_ORDER_LIMIT: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonError {
    OrderTooLarge { n: usize, limit: usize },
}

impl fmt::Display for CanonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CanonError::OrderTooLarge { n, limit } => {
                write!(f, "canonicalization supports order <= {limit}, got {n}")
            }
        }
    }
}

impl core::error::Error for CanonError {}

/// Canonical byte code under the default order cap.
///
/// Layout: one byte holding `n`, then the upper-triangle bits of the minimal
/// relabeled adjacency matrix, column-major, packed most-significant first.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>, CanonError> {
    canonical_code_with_limit(g, CANONICAL_ORDER_LIMIT)
}

/// Canonical code with a caller-chosen order cap (cost grows factorially).
pub fn canonical_code_with_limit(g: &Graph, limit: usize) -> Result<Vec<u8>, CanonError> {
    let (code, _) = search(g, limit)?;
    Ok(code)
}

/// Canonically relabeled copy of the graph together with its code.
pub fn canonical_form(g: &Graph) -> Result<(Graph, Vec<u8>), CanonError> {
    let (code, perm) = search(g, CANONICAL_ORDER_LIMIT)?;
    let n = g.order();
    let mut edges = Vec::with_capacity(g.size());
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(perm[i], perm[j]) {
                edges.push((i, j));
            }
        }
    }
    let relabeled = Graph::from_edges(n, &edges).expect("relabeling preserves simplicity");
    Ok((relabeled, code))
}

fn search(g: &Graph, limit: usize) -> Result<(Vec<u8>, Vec<usize>), CanonError> {
    let n = g.order();
    if n > limit || n > 64 {
        return Err(CanonError::OrderTooLarge { n, limit });
    }
    // Positions are grouped by ascending degree; candidates for a position
    // are the unplaced vertices of that degree.
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let position_degree: Vec<u32> = by_degree.iter().map(|&v| g.degree(v)).collect();

    let mut state = Search {
        g,
        n,
        position_degree,
        perm: alloc::vec![0usize; n],
        used: 0u64,
        best_bits: u64::MAX,
        best_perm: alloc::vec![0usize; n],
    };
    state.descend(0, 0);

    let total_bits = n * (n - 1) / 2;
    let mut code = Vec::with_capacity(1 + total_bits.div_ceil(8));
    code.push(n as u8);
    let bytes = state.best_bits.to_be_bytes();
    code.extend_from_slice(&bytes[..total_bits.div_ceil(8)]);
    Ok((code, state.best_perm))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    position_degree: Vec<u32>,
    perm: Vec<usize>,
    used: u64,
    best_bits: u64,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    // Bit k (column-major pair k) lives at u64 bit 63-k, so integer order
    // equals lexicographic bitstring order.
    fn descend(&mut self, p: usize, prefix: u64) {
        if p == self.n {
            if prefix < self.best_bits {
                self.best_bits = prefix;
                self.best_perm.copy_from_slice(&self.perm);
            }
            return;
        }
        let want = self.position_degree[p];
        let filled = p * (p + 1) / 2;
        let prefix_mask = if filled == 0 { 0 } else { !0u64 << (64 - filled) };
        for w in 0..self.n {
            if self.used >> w & 1 == 1 || self.g.degree(w) != want {
                continue;
            }
            let mut bits = prefix;
            let base = p * p.saturating_sub(1) / 2;
            for i in 0..p {
                if self.g.has_edge(self.perm[i], w) {
                    bits |= 1u64 << (63 - (base + i));
                }
            }
            if bits & prefix_mask > self.best_bits & prefix_mask {
                continue;
            }
            self.perm[p] = w;
            self.used |= 1 << w;
            self.descend(p + 1, bits);
            self.used &= !(1 << w);
        }
    }
}

/// Tracks canonical codes already seen; used for isomorphism-free emission.
#[derive(Default)]
pub struct Deduper {
    seen: BTreeSet<Vec<u8>>,
}

impl Deduper {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns true the first time a graph's isomorphism class appears.
    pub fn insert(&mut self, g: &Graph) -> Result<bool, CanonError> {
        Ok(self.seen.insert(canonical_code(g)?))
    }

    pub fn len(&self) -> usize {
        self.seen.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seen.is_empty()
    }
}
