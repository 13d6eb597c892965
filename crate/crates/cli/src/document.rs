//! The versioned JSON interchange schema. JSON is canonical (lossless round
//! trip of multiplicities, loops, and labels); DOT and edge lists are
//! render-only views.

use serde::{Deserialize, Serialize};

use fibsum::graphcore::{MultiGraph, SimpleGraph};
use fibsum::setspace::{label_of, SubsetId};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub format_version: u32,
    /// One of `fib_sum`, `set_graph`, `fib_sum_set`, `set_graph_of_graph`,
    /// `popped`.
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    /// Description of the host graph for `set_graph_of_graph`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub host: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semantics: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequence: Option<String>,
    pub vertices: Vec<VertexRecord>,
    /// Canonical order: `u < v`, listed ascending, multiplicities >= 1.
    pub edges: Vec<EdgeRecord>,
    /// Only vertices with at least one loop appear.
    pub loops: Vec<LoopRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub index: usize,
    /// Cardinality label, present for subset-vertex families.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    /// Rank label, present for subset-vertex families.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<u64>,
    pub elements: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub u: usize,
    pub v: usize,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LoopRecord {
    pub v: usize,
    pub count: u32,
}

impl GraphDocument {
    fn shell(family: &str, n: Option<u32>) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            family: family.to_string(),
            n,
            host: None,
            semantics: None,
            sequence: None,
            vertices: Vec::new(),
            edges: Vec::new(),
            loops: Vec::new(),
        }
    }

    /// Document for a multigraph whose vertices are subsets (the generator
    /// attaches the metadata).
    pub fn from_multigraph(g: &MultiGraph, family: &str, n: Option<u32>) -> Self {
        let mut doc = Self::shell(family, n);
        doc.vertices = subset_vertices(g.vertex_meta().expect("subset metadata required"));
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                let multiplicity = g.eps(u, v);
                if multiplicity >= 1 {
                    doc.edges.push(EdgeRecord { u, v, multiplicity });
                }
            }
            if g.loops(u) >= 1 {
                doc.loops.push(LoopRecord {
                    v: u,
                    count: g.loops(u),
                });
            }
        }
        doc
    }

    /// Document for a simple graph; `subsets` supplies `(s, i)` labels when
    /// the vertices are subsets, otherwise vertex `j` is the integer `j + 1`.
    pub fn from_simple(
        g: &SimpleGraph,
        family: &str,
        n: Option<u32>,
        subsets: Option<&[SubsetId]>,
    ) -> Self {
        let mut doc = Self::shell(family, n);
        doc.vertices = match subsets {
            Some(subs) => subset_vertices(subs),
            None => (0..g.order())
                .map(|index| VertexRecord {
                    index,
                    s: None,
                    i: None,
                    elements: vec![index as u32 + 1],
                })
                .collect(),
        };
        for (u, v) in g.edges() {
            doc.edges.push(EdgeRecord {
                u,
                v,
                multiplicity: 1,
            });
        }
        doc
    }

    /// Rebuilds the multigraph (with multiplicities and loops) this document
    /// describes.
    pub fn to_multigraph(&self) -> Result<MultiGraph, String> {
        let order = self.vertices.len();
        let mut g = MultiGraph::new(order);
        for e in &self.edges {
            if e.u >= e.v || e.v >= order {
                return Err(format!("edge ({}, {}) is not canonical", e.u, e.v));
            }
            if e.multiplicity < 1 {
                return Err(format!("edge ({}, {}) has multiplicity 0", e.u, e.v));
            }
            g.set_eps(e.u, e.v, e.multiplicity);
        }
        for l in &self.loops {
            if l.v >= order {
                return Err(format!("loop vertex {} out of range", l.v));
            }
            g.set_loops(l.v, l.count);
        }
        Ok(g)
    }

    /// Rebuilds the popped/simple view: any positive multiplicity is an
    /// edge, loops are dropped.
    pub fn to_simple(&self) -> Result<SimpleGraph, String> {
        let order = self.vertices.len();
        let mut g = SimpleGraph::new(order);
        for e in &self.edges {
            if e.u >= e.v || e.v >= order {
                return Err(format!("edge ({}, {}) is not canonical", e.u, e.v));
            }
            g.add_edge(e.u, e.v);
        }
        Ok(g)
    }

    /// Whether every listed multiplicity is 1 and no loops are present.
    pub fn is_simple(&self) -> bool {
        self.edges.iter().all(|e| e.multiplicity == 1) && self.loops.is_empty()
    }

    /// Short human identity: family plus `n` or host.
    pub fn identity(&self) -> String {
        match (self.n, &self.host) {
            (Some(n), _) => format!("{}(n={n})", self.family),
            (None, Some(host)) => format!("{}[{host}]", self.family),
            (None, None) => self.family.clone(),
        }
    }

    /// Display label for one vertex: `v2,1 {1,2}` for subset vertices, the
    /// integer itself otherwise.
    pub fn vertex_label(&self, index: usize) -> String {
        let rec = &self.vertices[index];
        match (rec.s, rec.i) {
            (Some(s), Some(i)) => {
                let elements: Vec<String> = rec.elements.iter().map(u32::to_string).collect();
                format!("v{s},{i} {{{}}}", elements.join(","))
            }
            _ => rec.elements[0].to_string(),
        }
    }
}

fn subset_vertices(subsets: &[SubsetId]) -> Vec<VertexRecord> {
    subsets
        .iter()
        .enumerate()
        .map(|(index, sub)| {
            let label = label_of(sub);
            VertexRecord {
                index,
                s: Some(label.s),
                i: Some(label.i),
                elements: sub.elements().collect(),
            }
        })
        .collect()
}
