//! Work counters for the linear-time bound.

use crate::decomposer::{decompose_with, Decomposition, Options};
use crate::graph::Multigraph;

/// Per-run operation counts. All counters only grow during a run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WorkCounters {
    /// Adjacency entries scanned.
    pub dfs_steps: u64,
    /// `next` links followed while absorbing path vertices.
    pub path_link_traversals: u64,
    /// Single-edge insertions into some alpha set (concatenations excluded).
    pub alpha_insertions: u64,
    pub ear_comparisons: u64,
    /// Path vertices inspected by the optional path invariant check.
    pub path_checks: u64,
}

impl WorkCounters {
    /// The quantity bounded by `WORK_BOUND_FACTOR * (n + m)`.
    pub fn bounded_work(&self) -> u64 {
        self.path_link_traversals + self.alpha_insertions
    }
}

/// Every absorbed vertex costs one link and one parent-edge insertion, every
/// edge is inserted once and each ejection adds at most one auxiliary edge.
pub const WORK_BOUND_FACTOR: u64 = 4;

/// Same result as [`crate::decompose`], plus the work counters.
pub fn instrumented_decompose(g: &Multigraph) -> (Decomposition, WorkCounters) {
    decompose_with(g, Options::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose;

    #[test]
    fn k4_counts_six_insertions() {
        let g = Multigraph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        let (d, c) = instrumented_decompose(&g);
        assert_eq!(d, decompose(&g));
        assert_eq!(c.alpha_insertions, 6);
        assert_eq!(c.dfs_steps, 12);
        assert!(c.bounded_work() <= WORK_BOUND_FACTOR * 10);
    }
}
