//! Structural checks that hold for every decomposition, at any size.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bench::{WorkCounters, WORK_BOUND_FACTOR};
use crate::decomposer::{Decomposition, OutputEdge};
use crate::graph::Multigraph;

/// Where an input edge ended up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Fate {
    Unseen,
    Alpha,
    Bridge,
    Cut,
}

/// Violations of partition, edge conservation, endpoint locality, auxiliary
/// non-degeneracy and absorb-once. With `counters`, also the work bound and
/// the insertion count. Empty when everything holds.
pub fn structural_violations(
    g: &Multigraph,
    d: &Decomposition,
    counters: Option<&WorkCounters>,
) -> Vec<String> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut out = Vec::new();
    if d.vertex_count != n {
        out.push(format!("vertex_count {} but graph has {n}", d.vertex_count));
    }

    // partition
    let mut owner = vec![usize::MAX; n];
    for (i, c) in d.components.iter().enumerate() {
        if c.sigma.is_empty() {
            out.push(format!("component {i} is empty"));
        }
        for &v in &c.sigma {
            if v.index() >= n {
                out.push(format!("component {i} names vertex {v} outside the graph"));
            } else if owner[v.index()] != usize::MAX {
                out.push(format!(
                    "vertex {v} is in components {} and {i}",
                    owner[v.index()]
                ));
            } else {
                owner[v.index()] = i;
            }
        }
    }
    for (v, &o) in owner.iter().enumerate() {
        if o == usize::MAX {
            out.push(format!("vertex {v} is in no component"));
        }
    }
    if !out.is_empty() {
        return out;
    }

    // conservation, locality, non-degeneracy, absorb-once
    let mut fate = vec![Fate::Unseen; m];
    let mut mark = |id: usize, f: Fate, out: &mut Vec<String>| {
        if id >= m {
            out.push(format!("edge id {id} outside the graph"));
        } else if fate[id] != Fate::Unseen {
            out.push(format!(
                "edge {id} recorded twice ({:?} and {f:?})",
                fate[id]
            ));
        } else {
            fate[id] = f;
        }
    };
    let mut aux_seen = Vec::new();
    let mut alpha_total = 0u64;
    for (i, c) in d.components.iter().enumerate() {
        alpha_total += c.alpha.len() as u64;
        for e in &c.alpha {
            match *e {
                OutputEdge::Original(id) => mark(id.index(), Fate::Alpha, &mut out),
                OutputEdge::Auxiliary { u, v, cut } => {
                    if u == v {
                        out.push(format!("auxiliary edge {e} is a loop"));
                    }
                    if cut.0 as usize >= d.two_cuts.len() {
                        out.push(format!("auxiliary edge {e} names unknown cut {}", cut.0));
                    }
                    aux_seen.push((cut.0, u.0, v.0));
                }
            }
            let (a, b) = match *e {
                OutputEdge::Auxiliary { u, v, .. } if u.index() >= n || v.index() >= n => {
                    out.push(format!("auxiliary edge {e} leaves the graph"));
                    continue;
                }
                _ => e.endpoints(g),
            };
            if owner[a.index()] != i || owner[b.index()] != i {
                out.push(format!(
                    "component {i} holds {e} with an endpoint outside it"
                ));
            }
        }
    }
    aux_seen.sort_unstable();
    if aux_seen.windows(2).any(|w| w[0] == w[1]) {
        out.push(String::from("an auxiliary edge appears twice"));
    }
    for &b in &d.bridges {
        mark(b.index(), Fate::Bridge, &mut out);
        if b.index() < m {
            let (x, y) = g.endpoints(b);
            if owner[x.index()] == owner[y.index()] {
                out.push(format!("bridge {b} lies inside one component"));
            }
        }
    }
    for (e, f) in &d.two_cuts {
        for x in [e, f] {
            if let OutputEdge::Original(id) = *x {
                mark(id.index(), Fate::Cut, &mut out);
            }
        }
    }
    for (id, f) in fate.iter().enumerate() {
        if *f == Fate::Unseen {
            out.push(format!("edge {id} was lost"));
        }
    }

    if let Some(c) = counters {
        let loops = g.self_loops().len() as u64;
        if c.alpha_insertions + loops != alpha_total {
            out.push(format!(
                "{} insertions plus {loops} loops but {alpha_total} alpha entries",
                c.alpha_insertions
            ));
        }
        let bound = WORK_BOUND_FACTOR * (n + m) as u64;
        if c.bounded_work() > bound {
            out.push(format!("work {} exceeds {bound}", c.bounded_work()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposer::{decompose_with, Options};
    use crate::graph::{EdgeId, VertexId};

    fn bundle() -> Multigraph {
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut pairs: Vec<(usize, usize)> = k4.to_vec();
        pairs.extend(k4.iter().map(|&(a, b)| (a + 4, b + 4)));
        pairs.extend([(0, 4), (1, 5), (2, 2)]);
        Multigraph::from_edge_list(8, &pairs).unwrap()
    }

    #[test]
    fn clean_run() {
        let g = bundle();
        let (d, c) = decompose_with(&g, Options::default());
        assert_eq!(
            structural_violations(&g, &d, Some(&c)),
            Vec::<String>::new()
        );
    }

    #[test]
    fn catches_corruption() {
        let g = bundle();
        let (d, c) = decompose_with(&g, Options::default());
        let d = d.canonical(&g);

        let mut lost = d.clone();
        lost.components[0]
            .alpha
            .retain(|e| *e != OutputEdge::Original(EdgeId(0)));
        let v = structural_violations(&g, &lost, Some(&c));
        assert!(v.iter().any(|s| s == "edge 0 was lost"), "{v:?}");

        let mut twice = d.clone();
        twice.bridges.push(EdgeId(12));
        assert!(structural_violations(&g, &twice, None)
            .iter()
            .any(|s| s.contains("recorded twice")));

        let mut moved = d.clone();
        let x = moved.components[1].sigma.pop().unwrap();
        moved.components[0].sigma.push(x);
        assert!(structural_violations(&g, &moved, None)
            .iter()
            .any(|s| s.contains("endpoint outside")));

        let mut orphan = d.clone();
        orphan.components[0].sigma.retain(|&v| v != VertexId(3));
        assert!(structural_violations(&g, &orphan, None)
            .iter()
            .any(|s| s == "vertex 3 is in no component"));

        let mut looped = d;
        looped.components[0].alpha.push(OutputEdge::Auxiliary {
            u: VertexId(1),
            v: VertexId(1),
            cut: crate::CutTag(0),
        });
        let v = structural_violations(&g, &looped, Some(&c));
        assert!(v.iter().any(|s| s.contains("is a loop")));
        assert!(v.iter().any(|s| s.contains("insertions")));
    }
}
