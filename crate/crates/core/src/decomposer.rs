//! Single-pass DFS decomposition into 3-edge-connected components.
//!
//! The DFS contracts the graph as it backtracks. Every vertex `w` stands for
//! a supervertex holding a vertex set `sigma(w)` and the edges `alpha(w)`
//! already known to belong to that component's auxiliary subgraph. When a
//! supervertex is found to be attached to the rest of the graph by one or
//! two edges it is ejected as a finished component. Two-edge cuts are
//! replaced by auxiliary edges on both sides of the cut.
//!
//! The transformed graph is never materialized. It is encoded by the
//! per-vertex degree counters, the `next` links of the current path, the
//! re-pointed parent edges and the embodiment carried by each ear.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::bench::WorkCounters;
use crate::chain::{Chain, ChainArena};
use crate::graph::{EdgeId, Multigraph, VertexId};

/// Index of the two-edge cut (in [`Decomposition::two_cuts`]) that produced
/// an auxiliary edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CutTag(pub u32);

/// An edge of some output subgraph: either an input edge or an auxiliary
/// edge standing in for a two-edge cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OutputEdge {
    Original(EdgeId),
    Auxiliary {
        u: VertexId,
        v: VertexId,
        cut: CutTag,
    },
}

impl OutputEdge {
    pub fn endpoints(&self, g: &Multigraph) -> (VertexId, VertexId) {
        match *self {
            OutputEdge::Original(e) => g.endpoints(e),
            OutputEdge::Auxiliary { u, v, .. } => (u, v),
        }
    }

    pub fn is_auxiliary(&self) -> bool {
        matches!(self, OutputEdge::Auxiliary { .. })
    }

    /// Fixed rank used to order parallel back-edges.
    fn tie_key(&self) -> (u8, u32) {
        match *self {
            OutputEdge::Original(e) => (0, e.0),
            OutputEdge::Auxiliary { cut, .. } => (1, cut.0),
        }
    }

    /// Sort key: originals before auxiliaries, then unordered endpoints, then id/tag.
    pub fn canonical_key(&self, g: &Multigraph) -> (u8, u32, u32, u32) {
        let (a, b) = self.endpoints(g);
        let (lo, hi) = if a <= b { (a.0, b.0) } else { (b.0, a.0) };
        let (kind, id) = self.tie_key();
        (kind, lo, hi, id)
    }
}

impl fmt::Display for OutputEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutputEdge::Original(e) => write!(f, "{e}"),
            OutputEdge::Auxiliary { u, v, cut } => write!(f, "aux({u},{v})#{}", cut.0),
        }
    }
}

/// The lexicographically smallest ear leaving a subtree, or the sentinel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EarValue {
    Infinity,
    BackEdge {
        tail: VertexId,
        head: VertexId,
        via: OutputEdge,
    },
}

impl EarValue {
    pub fn head(&self) -> Option<VertexId> {
        match *self {
            EarValue::Infinity => None,
            EarValue::BackEdge { head, .. } => Some(head),
        }
    }

    pub fn tail(&self) -> Option<VertexId> {
        match *self {
            EarValue::Infinity => None,
            EarValue::BackEdge { tail, .. } => Some(tail),
        }
    }

    pub fn via(&self) -> Option<OutputEdge> {
        match *self {
            EarValue::Infinity => None,
            EarValue::BackEdge { via, .. } => Some(via),
        }
    }
}

/// One 3-edge-connected component and its auxiliary subgraph's edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub sigma: Vec<VertexId>,
    pub alpha: Vec<OutputEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub vertex_count: usize,
    /// Components in ejection order; each DFS root's component closes its tree.
    pub components: Vec<Component>,
    pub bridges: Vec<EdgeId>,
    /// Two-edge cuts in the order they were found, as the edges embodying them at the time.
    pub two_cuts: Vec<(OutputEdge, OutputEdge)>,
}

impl Decomposition {
    /// Components ordered by smallest vertex, vertex sets sorted, edges in
    /// canonical order, bridges sorted. Two-cut order is left as found.
    pub fn canonical(&self, g: &Multigraph) -> Decomposition {
        let mut components: Vec<Component> = self
            .components
            .iter()
            .map(|c| {
                let mut sigma = c.sigma.clone();
                sigma.sort_unstable();
                let mut alpha = c.alpha.clone();
                alpha.sort_by_key(|e| e.canonical_key(g));
                Component { sigma, alpha }
            })
            .collect();
        components.sort_by_key(|c| c.sigma.first().copied());
        let mut bridges = self.bridges.clone();
        bridges.sort_unstable();
        Decomposition {
            vertex_count: self.vertex_count,
            components,
            bridges,
            two_cuts: self.two_cuts.clone(),
        }
    }

    pub fn auxiliary_count(&self) -> usize {
        self.components
            .iter()
            .flat_map(|c| c.alpha.iter())
            .filter(|e| e.is_auxiliary())
            .count()
    }

    /// Component index of every vertex.
    pub fn component_of(&self) -> Vec<usize> {
        let mut of = vec![usize::MAX; self.vertex_count];
        for (i, c) in self.components.iter().enumerate() {
            for v in &c.sigma {
                of[v.index()] = i;
            }
        }
        of
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Walk every finished path and assert its degree and ordering
    /// properties. Costs time proportional to the path length.
    pub check_path_invariants: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            check_path_invariants: cfg!(debug_assertions),
        }
    }
}

pub fn decompose(g: &Multigraph) -> Decomposition {
    decompose_with(g, Options::default()).0
}

pub fn decompose_with(g: &Multigraph, options: Options) -> (Decomposition, WorkCounters) {
    let mut state = DecompState::new(g, options);
    for r in g.vertices() {
        if !state.is_visited(r) {
            state.visit(r);
        }
    }
    state.finish()
}

#[derive(Clone, Copy, Debug)]
struct Frame {
    w: VertexId,
    cursor: usize,
    inc_start: usize,
}

/// All per-vertex DFS bookkeeping for one decomposition run.
pub struct DecompState<'g> {
    graph: &'g Multigraph,
    /// Visit number; 0 means unvisited.
    dfs: Vec<u32>,
    cnt: u32,
    /// Parent in the transformed graph. Re-pointed when a two-cut is spliced out.
    parent: Vec<Option<VertexId>>,
    /// Current embodiment of the parent edge.
    parent_edge: Vec<Option<OutputEdge>>,
    nd: Vec<u32>,
    deg: Vec<i64>,
    next: Vec<Option<VertexId>>,
    ear: Vec<EarValue>,
    /// Tails of stored incoming back-edges; each frame owns a suffix.
    inc: Vec<VertexId>,
    sigma: Vec<Chain>,
    alpha: Vec<Chain>,
    vertices: ChainArena<VertexId>,
    edges: ChainArena<OutputEdge>,
    open: Vec<bool>,
    emitted: Vec<(Chain, Chain)>,
    bridges: Vec<EdgeId>,
    two_cuts: Vec<(OutputEdge, OutputEdge)>,
    counters: WorkCounters,
    options: Options,
}

impl<'g> DecompState<'g> {
    pub fn new(graph: &'g Multigraph, options: Options) -> Self {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        DecompState {
            graph,
            dfs: vec![0; n],
            cnt: 1,
            parent: vec![None; n],
            parent_edge: vec![None; n],
            nd: vec![1; n],
            deg: vec![0; n],
            next: vec![None; n],
            ear: vec![EarValue::Infinity; n],
            inc: Vec::new(),
            sigma: vec![Chain::new(); n],
            alpha: vec![Chain::new(); n],
            vertices: ChainArena::with_capacity(n),
            edges: ChainArena::with_capacity(m + n),
            open: vec![false; n],
            emitted: Vec::new(),
            bridges: Vec::new(),
            two_cuts: Vec::new(),
            counters: WorkCounters::default(),
            options,
        }
    }

    pub fn is_visited(&self, v: VertexId) -> bool {
        self.dfs[v.index()] != 0
    }

    pub fn counters(&self) -> &WorkCounters {
        &self.counters
    }

    /// `a` is an ancestor of `b` (or equal) in the DFS tree. Both visited.
    pub fn is_ancestor(&self, a: VertexId, b: VertexId) -> bool {
        let da = self.dfs[a.index()];
        let db = self.dfs[b.index()];
        debug_assert!(da != 0 && db != 0);
        if self.open[a.index()] {
            // every visited vertex numbered after an open vertex lies in its subtree
            da <= db
        } else {
            da <= db && db < da + self.nd[a.index()]
        }
    }

    fn is_proper_ancestor(&self, a: VertexId, b: VertexId) -> bool {
        a != b && self.is_ancestor(a, b)
    }

    /// Strict lexicographic back-edge order, with the sentinel placed
    /// relative to context vertex `w`.
    pub fn ear_less(&mut self, a: EarValue, b: EarValue, w: VertexId) -> bool {
        self.counters.ear_comparisons += 1;
        match (a, b) {
            (EarValue::Infinity, EarValue::Infinity) => false,
            (EarValue::BackEdge { tail, head, .. }, EarValue::Infinity) => {
                self.is_proper_ancestor(head, w) && self.is_ancestor(w, tail)
            }
            (EarValue::Infinity, EarValue::BackEdge { head, .. }) => self.is_ancestor(w, head),
            (
                EarValue::BackEdge {
                    tail: p,
                    head: q,
                    via: va,
                },
                EarValue::BackEdge {
                    tail: x,
                    head: y,
                    via: vb,
                },
            ) => {
                let (dq, dy) = (self.dfs[q.index()], self.dfs[y.index()]);
                match dq.cmp(&dy) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal if p == x => va.tie_key() < vb.tie_key(),
                    Ordering::Equal => {
                        if self.is_ancestor(x, p) {
                            true
                        } else if self.is_ancestor(p, x) {
                            false
                        } else {
                            self.dfs[p.index()] < self.dfs[x.index()]
                        }
                    }
                }
            }
        }
    }

    fn ear_less_or_equal(&mut self, a: EarValue, b: EarValue, w: VertexId) -> bool {
        a == b || self.ear_less(a, b, w)
    }

    /// Runs the DFS from `root` over its whole connected component.
    pub fn visit(&mut self, root: VertexId) {
        debug_assert!(!self.is_visited(root));
        let g = self.graph;
        self.enter(root, None, None);
        let mut stack = vec![Frame {
            w: root,
            cursor: 0,
            inc_start: self.inc.len(),
        }];
        while let Some(frame) = stack.last_mut() {
            let w = frame.w;
            let adj = g.neighbors(w);
            if frame.cursor < adj.len() {
                let h = adj[frame.cursor];
                frame.cursor += 1;
                self.counters.dfs_steps += 1;
                self.deg[w.index()] += 1;
                if self.parent_edge[w.index()] == Some(OutputEdge::Original(h.edge)) {
                    continue;
                }
                let u = h.other;
                if !self.is_visited(u) {
                    self.enter(u, Some(w), Some(h.edge));
                    stack.push(Frame {
                        w: u,
                        cursor: 0,
                        inc_start: self.inc.len(),
                    });
                } else if self.dfs[u.index()] < self.dfs[w.index()] {
                    self.outgoing_back_edge(w, u, h.edge);
                } else {
                    self.inc.push(u);
                }
            } else {
                let inc_start = frame.inc_start;
                stack.pop();
                self.complete(w, inc_start);
                match stack.last() {
                    Some(f) => self.backtrack(f.w, w),
                    None => self.emit(w),
                }
            }
        }
    }

    fn enter(&mut self, w: VertexId, parent: Option<VertexId>, tree_edge: Option<EdgeId>) {
        let i = w.index();
        self.dfs[i] = self.cnt;
        self.cnt += 1;
        self.parent[i] = parent;
        self.parent_edge[i] = tree_edge.map(OutputEdge::Original);
        self.next[i] = None;
        self.ear[i] = EarValue::Infinity;
        self.open[i] = true;
        self.sigma[i].push(&mut self.vertices, w);
    }

    fn outgoing_back_edge(&mut self, w: VertexId, u: VertexId, e: EdgeId) {
        let edge = EarValue::BackEdge {
            tail: w,
            head: u,
            via: OutputEdge::Original(e),
        };
        if self.ear_less(edge, self.ear[w.index()], w) {
            self.absorb_ear(w, self.next[w.index()], false);
            self.next[w.index()] = None;
            self.ear[w.index()] = edge;
        } else {
            self.push_alpha(w, OutputEdge::Original(e));
        }
    }

    /// Work after the DFS returns from child `u` to `w`.
    fn backtrack(&mut self, w: VertexId, u: VertexId) {
        self.nd[w.index()] += self.nd[u.index()];
        let mut null = false;
        let mut u = u;
        if self.deg[u.index()] <= 2 {
            u = self.gen_aux_edges(w, u, &mut null);
        }
        let (ear_w, ear_u) = (self.ear[w.index()], self.ear[u.index()]);
        if self.ear_less_or_equal(ear_w, ear_u, w) {
            self.absorb_ear(w, Some(u), null);
            if null {
                if let EarValue::BackEdge { head, via, .. } = ear_u {
                    if head != w {
                        // the u-path collapsed into the back-edge (w, head)
                        self.push_alpha(w, via);
                    }
                }
            }
        } else {
            self.absorb_ear(w, self.next[w.index()], false);
            self.next[w.index()] = if null { None } else { Some(u) };
            self.ear[w.index()] = ear_u;
        }
    }

    /// Ejects `u`, which has degree at most two after its subtree was
    /// processed, and emits its component. Returns the new head of the
    /// u-path; `null` is set when the u-path vanished.
    pub fn gen_aux_edges(&mut self, w: VertexId, u: VertexId, null: &mut bool) -> VertexId {
        let ui = u.index();
        debug_assert!(
            (1..=2).contains(&self.deg[ui]),
            "deg({u}) = {}",
            self.deg[ui]
        );
        // the cut edges leave with u: a bridge lowers deg(w) by one, a two-cut
        // is replaced by a single edge at w
        self.deg[w.index()] += self.deg[ui] - 2;
        let parent_edge = self.parent_edge[ui].expect("ejected vertex has a parent edge");
        let mut head = u;
        if self.deg[ui] == 1 {
            match parent_edge {
                OutputEdge::Original(e) => self.bridges.push(e),
                OutputEdge::Auxiliary { .. } => unreachable!("tree children keep their tree edge"),
            }
            *null = true;
        } else {
            let cut = CutTag(self.two_cuts.len() as u32);
            match self.next[ui] {
                None => {
                    let EarValue::BackEdge {
                        tail: far,
                        head: d,
                        via,
                    } = self.ear[ui]
                    else {
                        unreachable!("a two-cut child has an ear")
                    };
                    self.two_cuts.push((parent_edge, via));
                    if w != d {
                        self.ear[ui] = EarValue::BackEdge {
                            tail: w,
                            head: d,
                            via: OutputEdge::Auxiliary { u: w, v: d, cut },
                        };
                    }
                    if u != far {
                        self.push_alpha(u, OutputEdge::Auxiliary { u, v: far, cut });
                    }
                    *null = true;
                }
                Some(u1) => {
                    let far = self.parent[u1.index()].expect("path vertex has a parent");
                    let cut_edge =
                        self.parent_edge[u1.index()].expect("path vertex has a parent edge");
                    self.two_cuts.push((parent_edge, cut_edge));
                    self.parent[u1.index()] = Some(w);
                    self.parent_edge[u1.index()] = Some(OutputEdge::Auxiliary { u: w, v: u1, cut });
                    if u != far {
                        self.push_alpha(u, OutputEdge::Auxiliary { u, v: far, cut });
                    }
                    head = u1;
                }
            }
        }
        self.emit(u);
        head
    }

    /// Absorbs the path starting at `head` into `w` together with the ear
    /// that closes it. With no path, only `ear(w)` is absorbed.
    pub fn absorb_ear(&mut self, w: VertexId, head: Option<VertexId>, null: bool) {
        if null {
            return;
        }
        match head {
            None => {
                if let Some(via) = self.ear[w.index()].via() {
                    self.push_alpha(w, via);
                }
            }
            Some(u) => {
                let mut x = Some(u);
                while let Some(xv) = x {
                    self.absorb_vertex(w, xv);
                    x = self.next[xv.index()];
                    self.counters.path_link_traversals += 1;
                }
                let via = self.ear[u.index()].via().expect("path head has an ear");
                self.push_alpha(w, via);
            }
        }
    }

    /// Handles a stored incoming back-edge from `tail`: the back-edge
    /// becomes a self-loop at `w`, and every path vertex above `tail` joins `w`.
    pub fn absorb_subpath(&mut self, w: VertexId, tail: VertexId) {
        self.deg[w.index()] -= 2;
        let mut x = self.next[w.index()];
        while let Some(xv) = x {
            if !self.is_ancestor(xv, tail) {
                break;
            }
            self.absorb_vertex(w, xv);
            x = self.next[xv.index()];
            self.counters.path_link_traversals += 1;
        }
        self.next[w.index()] = x;
    }

    fn absorb_vertex(&mut self, w: VertexId, x: VertexId) {
        let (wi, xi) = (w.index(), x.index());
        let mut ax = core::mem::take(&mut self.alpha[xi]);
        self.alpha[wi].append(&mut self.edges, &mut ax);
        let pe = self.parent_edge[xi].expect("absorbed vertex has a parent edge");
        self.push_alpha(w, pe);
        let mut sx = core::mem::take(&mut self.sigma[xi]);
        self.sigma[wi].append(&mut self.vertices, &mut sx);
        self.deg[wi] += self.deg[xi] - 2;
    }

    fn push_alpha(&mut self, w: VertexId, e: OutputEdge) {
        self.counters.alpha_insertions += 1;
        self.alpha[w.index()].push(&mut self.edges, e);
    }

    fn complete(&mut self, w: VertexId, inc_start: usize) {
        for i in inc_start..self.inc.len() {
            let tail = self.inc[i];
            #[cfg(debug_assertions)]
            let before = self.next[w.index()].map(|x| self.dfs[x.index()]);
            self.absorb_subpath(w, tail);
            #[cfg(debug_assertions)]
            {
                // the absorbed prefix only grows
                let after = self.next[w.index()].map(|x| self.dfs[x.index()]);
                debug_assert!(match (before, after) {
                    (Some(b), Some(a)) => a >= b,
                    (_, None) => true,
                    (None, Some(_)) => false,
                });
            }
        }
        self.inc.truncate(inc_start);
        if self.options.check_path_invariants {
            self.check_path(w);
        }
        self.open[w.index()] = false;
    }

    fn check_path(&mut self, w: VertexId) {
        let mut prev = self.dfs[w.index()];
        let mut x = self.next[w.index()];
        while let Some(xv) = x {
            self.counters.path_checks += 1;
            let d = self.dfs[xv.index()];
            assert!(d > prev, "path of {w} does not descend at {xv}");
            assert!(
                self.deg[xv.index()] >= 3,
                "path of {w}: interior supervertex {xv} has degree {}",
                self.deg[xv.index()]
            );
            prev = d;
            x = self.next[xv.index()];
        }
    }

    fn emit(&mut self, u: VertexId) {
        let s = core::mem::take(&mut self.sigma[u.index()]);
        let a = core::mem::take(&mut self.alpha[u.index()]);
        self.emitted.push((s, a));
    }

    /// Freezes the emitted bags and re-attaches input self-loops.
    pub fn finish(self) -> (Decomposition, WorkCounters) {
        let mut components: Vec<Component> = self
            .emitted
            .iter()
            .map(|(s, a)| Component {
                sigma: s.iter(&self.vertices).copied().collect(),
                alpha: a.iter(&self.edges).copied().collect(),
            })
            .collect();
        let mut of = vec![usize::MAX; self.graph.vertex_count()];
        for (i, c) in components.iter().enumerate() {
            for v in &c.sigma {
                of[v.index()] = i;
            }
        }
        for &e in self.graph.self_loops() {
            let (v, _) = self.graph.endpoints(e);
            components[of[v.index()]]
                .alpha
                .push(OutputEdge::Original(e));
        }
        let d = Decomposition {
            vertex_count: self.graph.vertex_count(),
            components,
            bridges: self.bridges,
            two_cuts: self.two_cuts,
        };
        (d, self.counters)
    }
}
