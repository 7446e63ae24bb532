//! File formats, DOT export, timing benchmarks and the `tecc` command line
//! on top of [`tecc_core`].

pub mod cli;
pub mod doc;
pub mod dot;
pub mod edgelist;
pub mod timing;

pub use doc::{write_decomposition, DecompositionDoc, Format};
pub use edgelist::{parse_edge_list, read_edge_list, write_edge_list, EdgeListFile, ParseError};
