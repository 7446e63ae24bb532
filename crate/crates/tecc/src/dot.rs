//! Graphviz rendering: one cluster per component.
//!
//! Auxiliary edges are dashed. Input edges that run between clusters are
//! drawn outside them, red for bridges and blue for other cut edges.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use tecc_core::{Decomposition, Multigraph, OutputEdge};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot(
    g: &Multigraph,
    d: &Decomposition,
    labels: Option<&BTreeMap<usize, String>>,
) -> String {
    let c = d.canonical(g);
    let mut out = String::from("graph decomposition {\n");
    if g.vertex_count() > 0 {
        out.push_str("  node [shape=circle];\n");
    }
    for (i, comp) in c.components.iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{i} {{");
        let _ = writeln!(out, "    label=\"C{i}\";");
        for v in &comp.sigma {
            match labels.and_then(|l| l.get(&v.index())) {
                Some(name) => {
                    let _ = writeln!(out, "    {} [label={}];", v.0, quote(name));
                }
                None => {
                    let _ = writeln!(out, "    {};", v.0);
                }
            }
        }
        for e in &comp.alpha {
            let (a, b) = e.endpoints(g);
            match e {
                OutputEdge::Original(_) => {
                    let _ = writeln!(out, "    {} -- {};", a.0, b.0);
                }
                OutputEdge::Auxiliary { cut, .. } => {
                    let _ = writeln!(
                        out,
                        "    {} -- {} [style=dashed, label=\"cut {}\"];",
                        a.0, b.0, cut.0
                    );
                }
            }
        }
        out.push_str("  }\n");
    }
    let bridges: BTreeSet<_> = c.bridges.iter().copied().collect();
    let comp = c.component_of();
    for (id, &(a, b)) in g.edges().iter().enumerate() {
        if comp[a.index()] == comp[b.index()] {
            continue;
        }
        let color = if bridges.contains(&tecc_core::EdgeId(id as u32)) {
            "red"
        } else {
            "blue"
        };
        let _ = writeln!(out, "  {} -- {} [color={color}, penwidth=2];", a.0, b.0);
    }
    out.push_str("}\n");
    out
}
