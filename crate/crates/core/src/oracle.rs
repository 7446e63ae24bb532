//! Brute-force reference for small graphs.
//!
//! Nothing here shares code with the decomposer. Edge connectivity comes from
//! unit-capacity augmenting paths, cuts from exhaustive edge deletion, and
//! auxiliary edges from the explicit two-cut replacement rule: for every
//! minimal two-cut, each side whose two cut endpoints are distinct vertices
//! of one component receives an edge joining them.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::decomposer::{Decomposition, OutputEdge};
use crate::graph::{EdgeId, Multigraph, VertexId};

pub const DEFAULT_EDGE_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("source and sink are the same vertex {0}")]
    SameEndpoints(usize),
    #[error("graph has {m} edges, oracle limit is {limit}")]
    TooLarge { m: usize, limit: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_edges: usize,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_edges: DEFAULT_EDGE_LIMIT,
        }
    }
}

impl SizeGuard {
    fn check(&self, g: &Multigraph) -> Result<(), OracleError> {
        if g.edge_count() > self.max_edges {
            return Err(OracleError::TooLarge {
                m: g.edge_count(),
                limit: self.max_edges,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CutReport {
    pub bridges: Vec<EdgeId>,
    /// Minimal two-cuts `{e, f}` with `e < f`.
    pub two_cuts: Vec<(EdgeId, EdgeId)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReferenceSubgraph {
    /// Input edges with both ends in the class, self-loops included, sorted.
    pub originals: Vec<EdgeId>,
    /// Auxiliary endpoint pairs as `(min, max)`, sorted.
    pub aux_pairs: Vec<(VertexId, VertexId)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReferencePartition {
    /// Classes sorted internally and ordered by smallest vertex.
    pub classes: Vec<Vec<VertexId>>,
    /// Aligned with `classes`.
    pub subgraphs: Vec<ReferenceSubgraph>,
}

/// Number of pairwise edge-disjoint `s`-`t` paths in a plain edge list,
/// capped at `cap`. Self-loops are ignored.
pub fn edge_disjoint_paths(
    n: usize,
    edges: &[(usize, usize)],
    s: usize,
    t: usize,
    cap: u32,
) -> u32 {
    // flow[i] = +1 when edge i carries flow a->b, -1 for b->a
    let mut flow = vec![0i8; edges.len()];
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        if a != b {
            incident[a].push(i);
            incident[b].push(i);
        }
    }
    let mut value = 0;
    while value < cap {
        let mut via: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[s] = true;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &i in &incident[x] {
                let (a, b) = edges[i];
                let (y, residual) = if a == x {
                    (b, 1 - flow[i])
                } else {
                    (a, 1 + flow[i])
                };
                if residual > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = Some(i);
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            break;
        }
        let mut y = t;
        while y != s {
            let i = via[y].unwrap();
            let (a, b) = edges[i];
            if b == y {
                flow[i] += 1;
                y = a;
            } else {
                flow[i] -= 1;
                y = b;
            }
        }
        value += 1;
    }
    value
}

/// `min(cap, λ(s, t))` for the input graph.
pub fn max_flow_value(
    g: &Multigraph,
    s: VertexId,
    t: VertexId,
    cap: u32,
) -> Result<u32, OracleError> {
    if s == t {
        return Err(OracleError::SameEndpoints(s.index()));
    }
    Ok(edge_disjoint_paths(
        g.vertex_count(),
        &g.to_pairs(),
        s.index(),
        t.index(),
        cap,
    ))
}

/// Component label per vertex after deleting the edges flagged in `skip`.
fn labels(n: usize, edges: &[(usize, usize)], skip: &[bool]) -> (Vec<usize>, usize) {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        if !skip[i] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut out = vec![0; n];
    for x in 0..n {
        let r = find(&mut parent, x);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        out[x] = label[r];
    }
    (out, count)
}

pub fn enumerate_cuts(g: &Multigraph, guard: SizeGuard) -> Result<CutReport, OracleError> {
    guard.check(g)?;
    let n = g.vertex_count();
    let edges = g.to_pairs();
    let m = edges.len();
    let mut skip = vec![false; m];
    let (_, base) = labels(n, &edges, &skip);
    let mut is_bridge = vec![false; m];
    let mut report = CutReport::default();
    for e in 0..m {
        skip[e] = true;
        if labels(n, &edges, &skip).1 > base {
            is_bridge[e] = true;
            report.bridges.push(EdgeId(e as u32));
        }
        skip[e] = false;
    }
    for e in 0..m {
        if is_bridge[e] {
            continue;
        }
        for f in e + 1..m {
            if is_bridge[f] {
                continue;
            }
            skip[e] = true;
            skip[f] = true;
            if labels(n, &edges, &skip).1 > base {
                report.two_cuts.push((EdgeId(e as u32), EdgeId(f as u32)));
            }
            skip[e] = false;
            skip[f] = false;
        }
    }
    Ok(report)
}

/// Groups vertices joined by at least three edge-disjoint paths.
pub fn three_ecc_classes(
    g: &Multigraph,
    guard: SizeGuard,
) -> Result<Vec<Vec<VertexId>>, OracleError> {
    guard.check(g)?;
    Ok(classes_of(g.vertex_count(), &g.to_pairs()))
}

fn classes_of(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<VertexId>> {
    let mut class = vec![usize::MAX; n];
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    for s in 0..n {
        if class[s] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class[s] = id;
        let mut members = vec![VertexId(s as u32)];
        for t in s + 1..n {
            if class[t] == usize::MAX && edge_disjoint_paths(n, edges, s, t, 3) == 3 {
                class[t] = id;
                members.push(VertexId(t as u32));
            }
        }
        classes.push(members);
    }
    // the relation must be transitive: every pair inside a class is 3-connected
    for c in &classes {
        for (i, a) in c.iter().enumerate() {
            for b in &c[i + 1..] {
                assert_eq!(
                    edge_disjoint_paths(n, edges, a.index(), b.index(), 3),
                    3,
                    "3-edge-connectivity not transitive at {a}, {b}"
                );
            }
        }
    }
    classes
}

/// Classes together with each class's auxiliary subgraph built from the
/// exhaustive two-cut list.
pub fn reference_aux_subgraphs(
    g: &Multigraph,
    guard: SizeGuard,
) -> Result<ReferencePartition, OracleError> {
    let cuts = enumerate_cuts(g, guard)?;
    let classes = three_ecc_classes(g, guard)?;
    let n = g.vertex_count();
    let edges = g.to_pairs();
    let mut class_of = vec![0usize; n];
    for (i, c) in classes.iter().enumerate() {
        for v in c {
            class_of[v.index()] = i;
        }
    }
    let mut subgraphs = vec![ReferenceSubgraph::default(); classes.len()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        if class_of[a] == class_of[b] {
            subgraphs[class_of[a]].originals.push(EdgeId(i as u32));
        }
    }
    let mut skip = vec![false; edges.len()];
    for &(e, f) in &cuts.two_cuts {
        skip[e.index()] = true;
        skip[f.index()] = true;
        let (side, _) = labels(n, &edges, &skip);
        skip[e.index()] = false;
        skip[f.index()] = false;
        let (ea, eb) = edges[e.index()];
        let (fa, fb) = edges[f.index()];
        for near in [ea, eb] {
            let other = if side[fa] == side[near] { fa } else { fb };
            debug_assert_eq!(side[other], side[near]);
            if near != other && class_of[near] == class_of[other] {
                let pair = (
                    VertexId(near.min(other) as u32),
                    VertexId(near.max(other) as u32),
                );
                subgraphs[class_of[near]].aux_pairs.push(pair);
            }
        }
    }
    for s in &mut subgraphs {
        s.aux_pairs.sort_unstable();
    }
    Ok(ReferencePartition { classes, subgraphs })
}

/// Result of comparing a decomposition against the reference.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub diffs: Vec<String>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "PASS");
        }
        write!(f, "FAIL")?;
        for d in &self.diffs {
            write!(f, "\n  {d}")?;
        }
        Ok(())
    }
}

fn fmt_set(vs: &[VertexId]) -> String {
    let items: Vec<String> = vs.iter().map(|v| format!("{}", v.0)).collect();
    format!("{{{}}}", items.join(","))
}

/// Multiset difference `a - b` for sorted slices.
fn missing_from<T: Ord + Copy>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() {
        if j < b.len() && a[i] == b[j] {
            i += 1;
            j += 1;
        } else if j < b.len() && b[j] < a[i] {
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
        }
    }
    out
}

/// Sorted vertex set, original edges, auxiliary pairs and component index.
type Summary = (Vec<VertexId>, Vec<EdgeId>, Vec<(VertexId, VertexId)>, usize);

/// Compares partition, original edges, auxiliary endpoint pairs, and checks
/// that every emitted subgraph with two or more vertices is 3-edge-connected.
pub fn check_equivalence(
    g: &Multigraph,
    dec: &Decomposition,
    reference: &ReferencePartition,
) -> Verdict {
    let mut diffs = Vec::new();
    let mut ours: Vec<Summary> = dec
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut sigma = c.sigma.clone();
            sigma.sort_unstable();
            let mut originals = Vec::new();
            let mut aux = Vec::new();
            for e in &c.alpha {
                match *e {
                    OutputEdge::Original(id) => originals.push(id),
                    OutputEdge::Auxiliary { u, v, .. } => aux.push((u.min(v), u.max(v))),
                }
            }
            originals.sort_unstable();
            aux.sort_unstable();
            (sigma, originals, aux, i)
        })
        .collect();
    ours.sort_by(|a, b| a.0.cmp(&b.0));

    let our_classes: Vec<&Vec<VertexId>> = ours.iter().map(|c| &c.0).collect();
    let ref_classes: Vec<&Vec<VertexId>> = reference.classes.iter().collect();
    if our_classes != ref_classes {
        for c in ours.iter().filter(|c| !reference.classes.contains(&c.0)) {
            diffs.push(format!(
                "component {} is not a reference class",
                fmt_set(&c.0)
            ));
        }
        for c in reference
            .classes
            .iter()
            .filter(|c| !our_classes.contains(c))
        {
            diffs.push(format!("reference class {} not produced", fmt_set(c)));
        }
    }

    for (sigma, originals, aux, _) in &ours {
        let Some(k) = reference.classes.iter().position(|c| c == sigma) else {
            continue;
        };
        let r = &reference.subgraphs[k];
        let name = fmt_set(sigma);
        for e in missing_from(&r.originals, originals) {
            diffs.push(format!("component {name}: missing original edge {}", e.0));
        }
        for e in missing_from(originals, &r.originals) {
            diffs.push(format!(
                "component {name}: unexpected original edge {}",
                e.0
            ));
        }
        for (a, b) in missing_from(&r.aux_pairs, aux) {
            diffs.push(format!(
                "component {name}: missing auxiliary edge ({a},{b})"
            ));
        }
        for (a, b) in missing_from(aux, &r.aux_pairs) {
            diffs.push(format!(
                "component {name}: unexpected auxiliary edge ({a},{b})"
            ));
        }
    }

    for (sigma, _, _, i) in &ours {
        if sigma.len() < 2 {
            continue;
        }
        let sub: Vec<(usize, usize)> = dec.components[*i]
            .alpha
            .iter()
            .map(|e| {
                let (a, b) = e.endpoints(g);
                (a.index(), b.index())
            })
            .collect();
        let s = sigma[0].index();
        for t in &sigma[1..] {
            let k = edge_disjoint_paths(g.vertex_count(), &sub, s, t.index(), 3);
            if k < 3 {
                diffs.push(format!(
                    "component {}: only {k} edge-disjoint paths between {} and {} in its subgraph",
                    fmt_set(sigma),
                    sigma[0],
                    t
                ));
                break;
            }
        }
    }
    Verdict { diffs }
}

/// Runs the reference construction and compares in one step.
pub fn verify(
    g: &Multigraph,
    dec: &Decomposition,
    guard: SizeGuard,
) -> Result<Verdict, OracleError> {
    let reference = reference_aux_subgraphs(g, guard)?;
    Ok(check_equivalence(g, dec, &reference))
}

/// True when the reference subgraph of every class with two or more
/// vertices is 3-edge-connected.
pub fn reference_subgraphs_are_3_edge_connected(
    g: &Multigraph,
    reference: &ReferencePartition,
) -> bool {
    let n = g.vertex_count();
    reference
        .classes
        .iter()
        .zip(&reference.subgraphs)
        .all(|(class, sub)| {
            if class.len() < 2 {
                return true;
            }
            let mut edges: Vec<(usize, usize)> = sub
                .originals
                .iter()
                .map(|&e| {
                    let (a, b) = g.endpoints(e);
                    (a.index(), b.index())
                })
                .collect();
            edges.extend(sub.aux_pairs.iter().map(|&(a, b)| (a.index(), b.index())));
            class[1..]
                .iter()
                .all(|t| edge_disjoint_paths(n, &edges, class[0].index(), t.index(), 3) == 3)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn graph(n: usize, pairs: &[(usize, usize)]) -> Multigraph {
        Multigraph::from_edge_list(n, pairs).unwrap()
    }

    const K4: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

    fn two_k4(extra: &[(usize, usize)]) -> Multigraph {
        let mut pairs: Vec<(usize, usize)> = K4.to_vec();
        pairs.extend(K4.iter().map(|&(a, b)| (a + 4, b + 4)));
        pairs.extend_from_slice(extra);
        graph(8, &pairs)
    }

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn flow_values() {
        let k4 = graph(4, &K4);
        for s in 0..4 {
            for t in 0..4 {
                if s != t {
                    assert_eq!(max_flow_value(&k4, v(s), v(t), 3).unwrap(), 3);
                }
            }
        }
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(max_flow_value(&c4, v(0), v(2), 3).unwrap(), 2);
        assert_eq!(max_flow_value(&c4, v(0), v(1), 3).unwrap(), 2);
        let p2 = graph(2, &[(0, 1)]);
        assert_eq!(max_flow_value(&p2, v(0), v(1), 3).unwrap(), 1);
        assert_eq!(
            max_flow_value(&p2, v(0), v(0), 3),
            Err(OracleError::SameEndpoints(0))
        );
    }

    #[test]
    fn flow_is_capped() {
        let g = graph(2, &[(0, 1); 7]);
        assert_eq!(max_flow_value(&g, v(0), v(1), 3).unwrap(), 3);
        assert_eq!(max_flow_value(&g, v(0), v(1), 10).unwrap(), 7);
    }

    #[test]
    fn cut_enumeration() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let r = enumerate_cuts(&c4, SizeGuard::default()).unwrap();
        assert!(r.bridges.is_empty());
        assert_eq!(r.two_cuts.len(), 6);

        let r = enumerate_cuts(&two_k4(&[(0, 4)]), SizeGuard::default()).unwrap();
        assert_eq!(r.bridges, [EdgeId(12)]);
        assert!(r.two_cuts.is_empty());

        let r = enumerate_cuts(&graph(4, &K4), SizeGuard::default()).unwrap();
        assert_eq!(r, CutReport::default());
    }

    #[test]
    fn size_guard_refuses() {
        let g = graph(2, &[(0, 1); 70]);
        assert_eq!(
            enumerate_cuts(&g, SizeGuard::default()),
            Err(OracleError::TooLarge { m: 70, limit: 64 })
        );
        assert!(enumerate_cuts(&g, SizeGuard { max_edges: 100 }).is_ok());
    }

    #[test]
    fn classes() {
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(
            three_ecc_classes(&c5, SizeGuard::default()).unwrap().len(),
            5
        );
        let k4 = graph(4, &K4);
        assert_eq!(
            three_ecc_classes(&k4, SizeGuard::default()).unwrap(),
            vec![vec![v(0), v(1), v(2), v(3)]]
        );
    }

    #[test]
    fn reference_two_k4_bundle() {
        let g = two_k4(&[(0, 4), (1, 5)]);
        let r = reference_aux_subgraphs(&g, SizeGuard::default()).unwrap();
        assert_eq!(r.classes.len(), 2);
        assert_eq!(r.subgraphs[0].aux_pairs, [(v(0), v(1))]);
        assert_eq!(r.subgraphs[1].aux_pairs, [(v(4), v(5))]);
        assert_eq!(r.subgraphs[0].originals.len(), 6);
        assert!(reference_subgraphs_are_3_edge_connected(&g, &r));
    }

    #[test]
    fn reference_digon() {
        let g = graph(2, &[(0, 1), (0, 1)]);
        let r = reference_aux_subgraphs(&g, SizeGuard::default()).unwrap();
        assert_eq!(r.classes.len(), 2);
        assert!(r
            .subgraphs
            .iter()
            .all(|s| s.aux_pairs.is_empty() && s.originals.is_empty()));
    }

    #[test]
    fn reference_ring_of_three_k4() {
        let mut pairs = Vec::new();
        for b in 0..3 {
            pairs.extend(K4.iter().map(|&(x, y)| (x + 4 * b, y + 4 * b)));
        }
        // attachment vertices: block b enters at 4b and leaves at 4b+1
        pairs.extend([(1, 4), (5, 8), (9, 0)]);
        let g = graph(12, &pairs);
        let r = reference_aux_subgraphs(&g, SizeGuard::default()).unwrap();
        assert_eq!(r.classes.len(), 3);
        for (b, s) in r.subgraphs.iter().enumerate() {
            let b = b as u32;
            assert_eq!(s.aux_pairs, [(v(4 * b), v(4 * b + 1))]);
        }
    }

    #[test]
    fn corrupted_alpha_fails_with_named_edge() {
        let g = graph(4, &K4);
        let mut d = crate::decompose(&g);
        let r = reference_aux_subgraphs(&g, SizeGuard::default()).unwrap();
        assert!(check_equivalence(&g, &d, &r).passed());
        let dropped = d.components[0].alpha.remove(2);
        let verdict = check_equivalence(&g, &d, &r);
        assert!(!verdict.passed());
        let OutputEdge::Original(id) = dropped else {
            panic!()
        };
        let needle = format!("missing original edge {}", id.0);
        assert!(
            verdict.diffs.iter().any(|d| d.contains(&needle)),
            "{verdict}"
        );
    }
}
