//! Degree-based graph invariants of the Sombor family.
//!
//! This crate computes five bond-incident-degree indices (SO, DSO, HSO, CDSO,
//! M1) on small simple graphs and verifies the inequalities, equality
//! characterizations, and edge-addition monotonicity conditions that relate
//! them. It also enumerates all connected graphs of a given small order so
//! that every claim can be checked exhaustively, and searches such classes
//! for index minimizers and maximizers.
//!
//! The crate is `no_std`-compatible (`alloc` required). Enable the `libm`
//! feature for builds without `std`.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("hsolab-core needs either the `std` or the `libm` feature for f64 math");

extern crate alloc;

pub mod bounds;
pub mod canon;
pub mod enumeration;
pub mod extremal;
pub mod graph;
pub mod indices;
mod math;
pub mod monotonicity;

pub use bounds::{check_all, check_bound, BoundId, BoundReport, EQUALITY_TOL};
pub use canon::{canonical_code, canonical_form, Deduper, CANONICAL_ORDER_LIMIT};
pub use enumeration::{count, enumerate, EnumerationPlan};
pub use extremal::{conjecture_report, find_extremal, ConjectureReport, Direction, ExtremalResult};
pub use graph::{ClassConstraint, Family, Graph, GraphClassSpec, GraphError, StructuralSummary};
pub use indices::{closed_form, index_value, IndexKind};
pub use monotonicity::{classify_pair, scan_graph, MonotonicityReport};
