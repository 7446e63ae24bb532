//! Single-pass decomposition of an undirected multigraph into its
//! 3-edge-connected components, together with the auxiliary subgraph of
//! every component.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! wall-clock benchmarking live in the companion `tecc` crate.
//!
//! ```
//! use tecc_core::{decompose, Multigraph};
//!
//! // K4: a single 3-edge-connected component holding all six edges.
//! let k4 = Multigraph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
//! let d = decompose(&k4);
//! assert_eq!(d.components.len(), 1);
//! assert_eq!(d.components[0].alpha.len(), 6);
//! ```

#![no_std]

extern crate alloc;

pub mod bench;
pub mod chain;
pub mod decomposer;
pub mod generator;
pub mod graph;
pub mod invariants;
pub mod oracle;

pub use bench::{instrumented_decompose, WorkCounters};
pub use decomposer::{
    decompose, decompose_with, Component, CutTag, DecompState, Decomposition, EarValue, Options,
    OutputEdge,
};
pub use graph::{EdgeId, GraphError, HalfEdge, Multigraph, VertexId};
