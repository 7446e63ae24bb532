//! Immutable multigraph with stable edge identities.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Dense vertex index in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Dense edge index in `[0, m)`. Parallel edges get distinct ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// One end of an edge as seen from a vertex's adjacency list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfEdge {
    pub edge: EdgeId,
    pub other: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("edge {index} ({u}, {v}) has an endpoint outside [0, {n})")]
    EndpointOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        n: usize,
    },
    #[error("graph too large: {what} count {count} exceeds u32 range")]
    TooLarge { what: &'static str, count: usize },
}

/// Undirected multigraph stored as an edge table plus CSR adjacency.
///
/// Adjacency order follows input order and defines the DFS traversal order.
/// Self-loops are kept in the edge table but diverted to a side list; they
/// never appear in `neighbors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    offsets: Vec<usize>,
    adj: Vec<HalfEdge>,
    self_loops: Vec<EdgeId>,
}

impl Multigraph {
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > u32::MAX as usize {
            return Err(GraphError::TooLarge {
                what: "vertex",
                count: n,
            });
        }
        if pairs.len() > u32::MAX as usize {
            return Err(GraphError::TooLarge {
                what: "edge",
                count: pairs.len(),
            });
        }
        let mut counts = vec![0usize; n + 1];
        let mut edges = Vec::with_capacity(pairs.len());
        let mut self_loops = Vec::new();
        for (index, &(u, v)) in pairs.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { index, u, v, n });
            }
            edges.push((VertexId(u as u32), VertexId(v as u32)));
            if u == v {
                self_loops.push(EdgeId(index as u32));
            } else {
                counts[u + 1] += 1;
                counts[v + 1] += 1;
            }
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let offsets = counts.clone();
        let mut fill = counts;
        let placeholder = HalfEdge {
            edge: EdgeId(0),
            other: VertexId(0),
        };
        let mut adj = vec![placeholder; offsets[n]];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                continue;
            }
            let edge = EdgeId(i as u32);
            adj[fill[u.index()]] = HalfEdge { edge, other: v };
            fill[u.index()] += 1;
            adj[fill[v.index()]] = HalfEdge { edge, other: u };
            fill[v.index()] += 1;
        }
        Ok(Multigraph {
            n,
            edges,
            offsets,
            adj,
            self_loops,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges, self-loops included.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.index()]
    }

    /// The edge table in input order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n as u32).map(VertexId)
    }

    /// Non-loop half-edges at `v`, in input order.
    pub fn neighbors(&self, v: VertexId) -> &[HalfEdge] {
        &self.adj[self.offsets[v.index()]..self.offsets[v.index() + 1]]
    }

    /// Input self-loops, in input order.
    pub fn self_loops(&self) -> &[EdgeId] {
        &self.self_loops
    }

    pub fn is_self_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.endpoints(e);
        u == v
    }

    /// Half-edge count at `v`; a self-loop contributes two.
    pub fn degree(&self, v: VertexId) -> usize {
        let loops = self
            .self_loops
            .iter()
            .filter(|&&e| self.endpoints(e).0 == v)
            .count();
        self.neighbors(v).len() + 2 * loops
    }

    /// Connected components ordered by their smallest vertex; each set is sorted.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(VertexId(s as u32));
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for h in self.neighbors(v) {
                    if !seen[h.other.index()] {
                        seen[h.other.index()] = true;
                        stack.push(h.other);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Re-emits the input pair list.
    pub fn to_pairs(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|&(u, v)| (u.index(), v.index()))
            .collect()
    }
}
