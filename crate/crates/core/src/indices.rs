//! The five bond-incident-degree indices and their closed forms on the named
//! families.
//!
//! Each index is a sum over edges of a symmetric contribution `h(d(u), d(v))`:
//!
//! | index | h(x, y)            |
//! |-------|--------------------|
//! | SO    | sqrt(x^2 + y^2)            |
//! | DSO   | sqrt(x^2 + y^2) / (x + y)  |
//! | HSO   | sqrt(x^2 + y^2) / min(x,y) |
//! | CDSO  | sqrt(x^2 + y^2) / max(x,y) |
//! | M1    | x + y                      |
//!
//! M1 is the edge form of the first Zagreb index and equals the vertex form
//! `sum d(u)^2`. For every graph `CDSO <= HSO`, with equality exactly when
//! every edge joins endpoints of equal degree.

use core::fmt;

use crate::graph::{Family, Graph, UnknownName};
use crate::math;

/// One of the five implemented bond-incident-degree indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexKind {
    So,
    Dso,
    Hso,
    Cdso,
    M1,
}

impl IndexKind {
    pub const ALL: [IndexKind; 5] =
        [IndexKind::So, IndexKind::Dso, IndexKind::Hso, IndexKind::Cdso, IndexKind::M1];

    /// Per-edge contribution for endpoint degrees `x`, `y`.
    ///
    /// Degrees of edge endpoints are always positive in a valid graph; zero
    /// arguments panic.
    #[inline]
    pub fn edge_contribution(self, x: u32, y: u32) -> f64 {
        assert!(x >= 1 && y >= 1, "edge endpoint degrees must be positive");
        let (x, y) = (x as f64, y as f64);
        let root = math::sqrt(x * x + y * y);
        match self {
            IndexKind::So => root,
            IndexKind::Dso => root / (x + y),
            IndexKind::Hso => root / if x < y { x } else { y },
            IndexKind::Cdso => root / if x > y { x } else { y },
            IndexKind::M1 => x + y,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::So => "so",
            IndexKind::Dso => "dso",
            IndexKind::Hso => "hso",
            IndexKind::Cdso => "cdso",
            IndexKind::M1 => "m1",
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for IndexKind {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, UnknownName> {
        match s {
            "so" => Ok(IndexKind::So),
            "dso" => Ok(IndexKind::Dso),
            "hso" => Ok(IndexKind::Hso),
            "cdso" => Ok(IndexKind::Cdso),
            "m1" => Ok(IndexKind::M1),
            _ => Err(UnknownName("index")),
        }
    }
}

/// Sum of edge contributions over all edges; 0 for edgeless graphs.
pub fn index_value(g: &Graph, kind: IndexKind) -> f64 {
    let deg = g.degrees();
    g.edges().map(|(u, v)| kind.edge_contribution(deg[u], deg[v])).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormError {
    /// The closed form is not valid below this order (for paths the formula
    /// needs `n >= 3`; `P_2`'s value is still available via [`index_value`]).
    OrderBelowMinimum { family: Family, n: usize, min: usize },
}

impl fmt::Display for ClosedFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ClosedFormError::OrderBelowMinimum { family, n, min } => {
                write!(f, "closed form for {family} graphs needs n >= {min}, got {n}")
            }
        }
    }
}

impl core::error::Error for ClosedFormError {}

/// Closed-form index value on a named family, computed from the family's
/// edge-degree multiset:
///
/// * path (n >= 3): two (1,2) edges and n-3 (2,2) edges
/// * cycle (n >= 3): n (2,2) edges
/// * star (n >= 2): n-1 (1, n-1) edges
/// * complete (n >= 2): n(n-1)/2 (n-1, n-1) edges
///
/// In particular `HSO(P_n) = 2*sqrt5 + (n-3)*sqrt2`, `HSO(C_n) = n*sqrt2`,
/// `HSO(S_n) = (n-1)*sqrt((n-1)^2+1)`, `CDSO(S_n) = sqrt((n-1)^2+1)`, and
/// `CDSO(K_n) = n(n-1)/sqrt2`.
pub fn closed_form(kind: IndexKind, family: Family, n: usize) -> Result<f64, ClosedFormError> {
    let min = match family {
        Family::Path | Family::Cycle => 3,
        Family::Star | Family::Complete => 2,
    };
    if n < min {
        return Err(ClosedFormError::OrderBelowMinimum { family, n, min });
    }
    let d = (n - 1) as u32;
    let terms: [(u64, u32, u32); 2] = match family {
        Family::Path => [(2, 1, 2), ((n - 3) as u64, 2, 2)],
        Family::Cycle => [(n as u64, 2, 2), (0, 1, 1)],
        Family::Star => [((n - 1) as u64, 1, d), (0, 1, 1)],
        Family::Complete => [((n * (n - 1) / 2) as u64, d, d), (0, 1, 1)],
    };
    Ok(terms
        .iter()
        .filter(|&&(count, _, _)| count > 0)
        .map(|&(count, x, y)| count as f64 * kind.edge_contribution(x, y))
        .sum())
}
