//! Exhaustive generation of all connected graphs of a small order.
//!
//! Internal generation walks the labeled upper-triangle bitmask space
//! (`2^(n(n-1)/2)` masks) in ascending order, filtering by edge count and
//! connectivity. Classes with a fixed edge count (trees, fixed cyclomatic
//! number) iterate only the masks of that popcount. Isomorphism-free output
//! is optional and implemented by canonical-code dedup.
//!
//! The mask space can be split into contiguous ranges for parallel
//! producers; the per-range emission multisets always union to the
//! single-range emission.

use alloc::vec::Vec;
use core::fmt;

use crate::canon::{CanonError, Deduper, CANONICAL_ORDER_LIMIT};
use crate::graph::{connected_rows, Graph, GraphClassSpec};

/// Largest order generated internally; beyond this, feed an external
/// graph6 stream through the same class filters.
pub const INTERNAL_ORDER_CAP: usize = 8;

/// Largest order for which dedup (canonical codes) is allowed.
pub const DEDUP_ORDER_CAP: usize = CANONICAL_ORDER_LIMIT;

/// What to enumerate and whether to deduplicate by isomorphism class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationPlan {
    pub class: GraphClassSpec,
    pub dedup: bool,
}

impl EnumerationPlan {
    pub fn new(class: GraphClassSpec, dedup: bool) -> Self {
        EnumerationPlan { class, dedup }
    }

    pub fn order(&self) -> usize {
        self.class.n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationError {
    ZeroOrder,
    InternalCapExceeded { n: usize, cap: usize },
    DedupCapExceeded { n: usize, cap: usize },
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EnumerationError::ZeroOrder => write!(f, "enumeration needs order >= 1"),
            EnumerationError::InternalCapExceeded { n, cap } => {
                write!(f, "internal enumeration is capped at order {cap}, got {n} (use an external graph6 stream)")
            }
            EnumerationError::DedupCapExceeded { n, cap } => {
                write!(f, "isomorphism dedup is capped at order {cap}, got {n}")
            }
        }
    }
}

impl core::error::Error for EnumerationError {}

/// Number of labeled masks for order `n`.
pub fn mask_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// Splits the mask space `[0, mask_count(n))` into up to `parts` contiguous
/// half-open ranges covering it exactly.
pub fn partition_masks(n: usize, parts: usize) -> Vec<(u64, u64)> {
    let total = mask_count(n);
    let parts = (parts.max(1) as u64).min(total);
    let chunk = total / parts;
    let remainder = total % parts;
    let mut out = Vec::with_capacity(parts as usize);
    let mut lo = 0;
    for i in 0..parts {
        let width = chunk + if i < remainder { 1 } else { 0 };
        out.push((lo, lo + width));
        lo += width;
    }
    out
}

fn validate(plan: &EnumerationPlan) -> Result<(), EnumerationError> {
    let n = plan.order();
    if n == 0 {
        return Err(EnumerationError::ZeroOrder);
    }
    if n > INTERNAL_ORDER_CAP {
        return Err(EnumerationError::InternalCapExceeded { n, cap: INTERNAL_ORDER_CAP });
    }
    if plan.dedup && n > DEDUP_ORDER_CAP {
        return Err(EnumerationError::DedupCapExceeded { n, cap: DEDUP_ORDER_CAP });
    }
    Ok(())
}

/// Streams the plan's graphs in ascending mask order.
pub fn enumerate(plan: &EnumerationPlan) -> Result<GraphStream, EnumerationError> {
    validate(plan)?;
    let n = plan.order();
    Ok(GraphStream::new(plan.class, plan.dedup, 0, mask_count(n)))
}

/// Streams the graphs whose masks fall in `[lo, hi)`; dedup is not available
/// on a range (partitions dedup after merging).
pub fn enumerate_range(
    class: &GraphClassSpec,
    lo: u64,
    hi: u64,
) -> Result<GraphStream, EnumerationError> {
    validate(&EnumerationPlan::new(*class, false))?;
    let hi = hi.min(mask_count(class.n));
    Ok(GraphStream::new(*class, false, lo.min(hi), hi))
}

/// Cardinality of [`enumerate`] without materializing graphs (dedup still
/// materializes canonical codes).
pub fn count(plan: &EnumerationPlan) -> Result<u64, EnumerationError> {
    validate(plan)?;
    if plan.dedup {
        let mut stream = enumerate(plan)?;
        let mut total = 0;
        while stream.next().is_some() {
            total += 1;
        }
        return Ok(total);
    }
    let n = plan.order();
    let kernel = Kernel::new(plan.class);
    let mut total = 0;
    let mut rows = [0u64; INTERNAL_ORDER_CAP];
    for mask in 0..mask_count(n) {
        if kernel.admits(mask, &mut rows) {
            total += 1;
        }
    }
    Ok(total)
}

// Mask -> adjacency-rows -> class filter, without Graph construction.
struct Kernel {
    n: usize,
    edge_count: Option<u32>,
    pairs: Vec<(u8, u8)>, // column-major upper triangle, pair k for bit k
}

impl Kernel {
    fn new(class: GraphClassSpec) -> Kernel {
        let n = class.n;
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for j in 1..n {
            for i in 0..j {
                pairs.push((i as u8, j as u8));
            }
        }
        Kernel { n, edge_count: class.edge_count().map(|m| m as u32), pairs }
    }

    #[inline]
    fn admits(&self, mask: u64, rows: &mut [u64; INTERNAL_ORDER_CAP]) -> bool {
        if let Some(m) = self.edge_count {
            if mask.count_ones() != m {
                return false;
            }
        }
        rows[..self.n].fill(0);
        let mut bits = mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (i, j) = self.pairs[k];
            rows[i as usize] |= 1 << j;
            rows[j as usize] |= 1 << i;
        }
        connected_rows(&rows[..self.n], self.n)
    }
}

/// Iterator over the graphs of a plan; see [`enumerate`].
pub struct GraphStream {
    kernel: Kernel,
    next_mask: u64,
    hi: u64,
    stride_popcount: Option<u32>,
    deduper: Option<Deduper>,
}

impl GraphStream {
    fn new(class: GraphClassSpec, dedup: bool, lo: u64, hi: u64) -> GraphStream {
        let kernel = Kernel::new(class);
        let stride_popcount = kernel.edge_count;
        GraphStream {
            kernel,
            next_mask: lo,
            hi,
            stride_popcount,
            deduper: if dedup { Some(Deduper::new()) } else { None },
        }
    }

    // Smallest mask >= self.next_mask with the required popcount, if the
    // class fixes the edge count; otherwise just self.next_mask. Gosper's
    // hack advances between same-popcount masks in O(1).
    fn advance(&mut self) -> Option<u64> {
        let k = match self.stride_popcount {
            None => {
                if self.next_mask >= self.hi {
                    return None;
                }
                let mask = self.next_mask;
                self.next_mask += 1;
                return Some(mask);
            }
            Some(k) => k,
        };
        let mut mask = self.next_mask;
        while mask < self.hi && mask.count_ones() != k {
            mask += 1;
        }
        if mask >= self.hi {
            self.next_mask = self.hi;
            return None;
        }
        // Gosper: next integer with the same popcount. The division is
        // checked because the all-zero mask (k = 0) has no carry bit.
        let c = mask & mask.wrapping_neg();
        let r = mask.wrapping_add(c);
        self.next_mask = match (mask ^ r).checked_div(c) {
            Some(quotient) => r | (quotient >> 2),
            None => self.hi,
        };
        if self.next_mask <= mask {
            self.next_mask = self.hi; // popcount overflowed past the range
        }
        Some(mask)
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let mut rows = [0u64; INTERNAL_ORDER_CAP];
        while let Some(mask) = self.advance() {
            if !self.kernel.admits(mask, &mut rows) {
                continue;
            }
            let graph = Graph::from_rows(self.kernel.n, rows[..self.kernel.n].to_vec());
            if let Some(dedup) = &mut self.deduper {
                match dedup.insert(&graph) {
                    Ok(true) => {}
                    Ok(false) => continue,
                    Err(CanonError::OrderTooLarge { .. }) => {
                        unreachable!("dedup cap validated against the canonical cap")
                    }
                }
            }
            return Some(graph);
        }
        None
    }
}
