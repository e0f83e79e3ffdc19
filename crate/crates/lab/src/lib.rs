//! IO, file formats, report serialization, and parallel verification
//! drivers around [`hsolab_core`], plus the `hsolab` command-line front end.

pub mod cli;
pub mod drivers;
pub mod edge_list;
pub mod graph6;
pub mod report;
pub mod stream;

pub use edge_list::parse_edge_list;
pub use graph6::{parse_graph6, write_graph6};
pub use stream::{read_graphs, GraphRecord};
