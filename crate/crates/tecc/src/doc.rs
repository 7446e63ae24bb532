//! Canonical serialization of a decomposition (JSON or text).
//!
//! Components are ordered by their smallest vertex, vertex sets are sorted,
//! and edges are ordered by kind (original first), then unordered endpoints,
//! then edge id or cut tag. Two-cuts keep the order they were found in.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use tecc_core::{Component, CutTag, Decomposition, EdgeId, Multigraph, OutputEdge, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Original,
    Auxiliary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub kind: EdgeKind,
    pub endpoints: [u32; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_id: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub bridges: usize,
    pub auxiliary_edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub index: usize,
    pub sigma: Vec<u32>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    pub graph: GraphStats,
    pub components: Vec<ComponentDoc>,
    pub bridges: Vec<u32>,
    pub two_cuts: Vec<[EdgeDoc; 2]>,
}

impl EdgeDoc {
    fn new(g: &Multigraph, e: &OutputEdge) -> Self {
        let (a, b) = e.endpoints(g);
        match *e {
            OutputEdge::Original(id) => EdgeDoc {
                kind: EdgeKind::Original,
                endpoints: [a.0, b.0],
                edge_id: Some(id.0),
                cut: None,
            },
            OutputEdge::Auxiliary { cut, .. } => EdgeDoc {
                kind: EdgeKind::Auxiliary,
                endpoints: [a.0, b.0],
                edge_id: None,
                cut: Some(cut.0),
            },
        }
    }

    fn to_edge(&self) -> Result<OutputEdge, String> {
        match self.kind {
            EdgeKind::Original => {
                let id = self.edge_id.ok_or("original edge without edge_id")?;
                Ok(OutputEdge::Original(EdgeId(id)))
            }
            EdgeKind::Auxiliary => {
                let cut = self.cut.ok_or("auxiliary edge without cut")?;
                Ok(OutputEdge::Auxiliary {
                    u: VertexId(self.endpoints[0]),
                    v: VertexId(self.endpoints[1]),
                    cut: CutTag(cut),
                })
            }
        }
    }
}

impl DecompositionDoc {
    pub fn new(g: &Multigraph, d: &Decomposition) -> Self {
        let c = d.canonical(g);
        let components = c
            .components
            .iter()
            .enumerate()
            .map(|(index, comp)| ComponentDoc {
                index,
                sigma: comp.sigma.iter().map(|v| v.0).collect(),
                edges: comp.alpha.iter().map(|e| EdgeDoc::new(g, e)).collect(),
            })
            .collect();
        DecompositionDoc {
            graph: GraphStats {
                n: g.vertex_count(),
                m: g.edge_count(),
                components: c.components.len(),
                bridges: c.bridges.len(),
                auxiliary_edges: c.auxiliary_count(),
            },
            components,
            bridges: c.bridges.iter().map(|e| e.0).collect(),
            two_cuts: c
                .two_cuts
                .iter()
                .map(|(a, b)| [EdgeDoc::new(g, a), EdgeDoc::new(g, b)])
                .collect(),
        }
    }

    /// Rebuilds the (canonically ordered) decomposition.
    pub fn to_decomposition(&self) -> Result<Decomposition, String> {
        let components = self
            .components
            .iter()
            .map(|c| {
                Ok(Component {
                    sigma: c.sigma.iter().map(|&v| VertexId(v)).collect(),
                    alpha: c
                        .edges
                        .iter()
                        .map(EdgeDoc::to_edge)
                        .collect::<Result<_, String>>()?,
                })
            })
            .collect::<Result<_, String>>()?;
        let two_cuts = self
            .two_cuts
            .iter()
            .map(|[a, b]| Ok((a.to_edge()?, b.to_edge()?)))
            .collect::<Result<_, String>>()?;
        Ok(Decomposition {
            vertex_count: self.graph.n,
            components,
            bridges: self.bridges.iter().map(|&e| EdgeId(e)).collect(),
            two_cuts,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let s = &self.graph;
        let _ = writeln!(
            out,
            "graph n={} m={} components={} bridges={} auxiliary={}",
            s.n, s.m, s.components, s.bridges, s.auxiliary_edges
        );
        for c in &self.components {
            let sigma: Vec<String> = c.sigma.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "component {} sigma={{{}}}", c.index, sigma.join(","));
            for e in &c.edges {
                let _ = writeln!(out, "  {}", edge_text(e));
            }
        }
        let bridges: Vec<String> = self.bridges.iter().map(|e| format!("#{e}")).collect();
        let _ = writeln!(out, "bridges [{}]", bridges.join(","));
        for (i, [a, b]) in self.two_cuts.iter().enumerate() {
            let _ = writeln!(out, "two_cut {i}: {} | {}", edge_text(a), edge_text(b));
        }
        out
    }
}

fn edge_text(e: &EdgeDoc) -> String {
    let [a, b] = e.endpoints;
    match e.kind {
        EdgeKind::Original => format!("original {a}-{b} #{}", e.edge_id.unwrap_or_default()),
        EdgeKind::Auxiliary => format!("auxiliary {a}-{b} cut={}", e.cut.unwrap_or_default()),
    }
}

/// Canonical bytes for `d` in the requested format.
pub fn write_decomposition(g: &Multigraph, d: &Decomposition, format: Format) -> Vec<u8> {
    match format {
        Format::Json => DecompositionDoc::new(g, d).to_json().into_bytes(),
        Format::Text => DecompositionDoc::new(g, d).to_text().into_bytes(),
        Format::Dot => crate::dot::export_dot(g, d, None).into_bytes(),
    }
}
