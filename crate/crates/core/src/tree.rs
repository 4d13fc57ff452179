//! Decomposition trees: certificates that a graph is built from `K1` by
//! joins, 0-sums and 1-sums.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::connectivity;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Leaf,
    Join,
    ZeroSum,
    OneSum,
}

impl NodeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Leaf => "leaf",
            NodeKind::Join => "join",
            NodeKind::ZeroSum => "zerosum",
            NodeKind::OneSum => "onesum",
        }
    }
}

/// One node of a decomposition tree. Each node records the vertex set of
/// the subgraph it generates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTree {
    kind: NodeKind,
    vertices: VertexSet,
    children: Vec<DecompositionTree>,
}

/// Wire form: `{"kind": ..., "vertex": n, "children": [...]}`; `vertex` only
/// on leaves, `children` only on inner nodes.
#[derive(Serialize, Deserialize)]
struct TreeJson {
    kind: NodeKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertex: Option<Vertex>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    children: Vec<TreeJson>,
}

impl DecompositionTree {
    pub fn leaf(v: Vertex) -> Self {
        DecompositionTree {
            kind: NodeKind::Leaf,
            vertices: VertexSet::from([v]),
            children: Vec::new(),
        }
    }

    /// Inner node; its vertex set is the union of the children's sets.
    pub fn node(kind: NodeKind, children: Vec<DecompositionTree>) -> Self {
        assert_ne!(kind, NodeKind::Leaf, "leaves are built with DecompositionTree::leaf");
        let vertices = children.iter().flat_map(|c| c.vertices.iter()).collect();
        DecompositionTree {
            kind,
            vertices,
            children,
        }
    }

    pub fn join(children: Vec<DecompositionTree>) -> Self {
        Self::node(NodeKind::Join, children)
    }

    pub fn zero_sum(children: Vec<DecompositionTree>) -> Self {
        Self::node(NodeKind::ZeroSum, children)
    }

    pub fn one_sum(children: Vec<DecompositionTree>) -> Self {
        Self::node(NodeKind::OneSum, children)
    }

    pub fn kind(&self) -> NodeKind {
        self.kind
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn children(&self) -> &[DecompositionTree] {
        &self.children
    }

    /// The leaf's vertex, if this is a leaf.
    pub fn vertex(&self) -> Option<Vertex> {
        match self.kind {
            NodeKind::Leaf => self.vertices.first(),
            _ => None,
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(|c| c.node_count()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    /// Rebuilds the graph the tree generates, checking the structural
    /// invariants on the way up.
    pub fn evaluate(&self) -> Result<Graph> {
        let structural = |msg: String| Err(Error::Structural(msg));
        match self.kind {
            NodeKind::Leaf => {
                if self.vertices.len() != 1 || !self.children.is_empty() {
                    return structural("leaf must hold exactly one vertex and no children".into());
                }
                Graph::new(self.vertices.iter(), [])
            }
            kind => {
                // a childless zerosum stands for the empty graph
                let empty_sum = kind == NodeKind::ZeroSum && self.children.is_empty();
                if self.children.len() < 2 && !empty_sum {
                    return structural(format!("{} node needs at least two children", kind.as_str()));
                }
                let parts: Vec<Graph> = self
                    .children
                    .iter()
                    .map(|c| c.evaluate())
                    .collect::<Result<_>>()?;
                let union: VertexSet = parts.iter().flat_map(|p| p.vertices()).collect();
                if union != self.vertices {
                    return structural(format!(
                        "{} node vertex set {:?} differs from the union of its children {:?}",
                        kind.as_str(),
                        self.vertices,
                        union
                    ));
                }
                for (a, pa) in parts.iter().enumerate() {
                    for pb in &parts[a + 1..] {
                        let shared: Vec<Vertex> = pa.vertices().filter(|&v| pb.has_vertex(v)).collect();
                        let allowed = if kind == NodeKind::OneSum { 1 } else { 0 };
                        if shared.len() > allowed {
                            return structural(format!(
                                "{} children share vertices {:?}",
                                kind.as_str(),
                                shared
                            ));
                        }
                    }
                }
                let mut edges: Vec<(Vertex, Vertex)> = parts.iter().flat_map(|p| p.edges()).collect();
                if kind == NodeKind::Join {
                    for (a, pa) in parts.iter().enumerate() {
                        for pb in &parts[a + 1..] {
                            edges.extend(pa.vertices().flat_map(|u| pb.vertices().map(move |v| (u, v))));
                        }
                    }
                }
                let g = Graph::new(union.iter(), edges)?;
                if kind == NodeKind::OneSum {
                    let cuts = connectivity::blocks_and_cut_vertices(&g).cut_vertices;
                    for (a, pa) in parts.iter().enumerate() {
                        for pb in &parts[a + 1..] {
                            if let Some(v) = pa.vertices().find(|&v| pb.has_vertex(v)) {
                                if !cuts.contains(v) {
                                    return structural(format!(
                                        "shared vertex {v} of a onesum node is not a cut vertex"
                                    ));
                                }
                            }
                        }
                    }
                }
                Ok(g)
            }
        }
    }

    fn to_json_node(&self) -> TreeJson {
        TreeJson {
            kind: self.kind,
            vertex: self.vertex(),
            children: self.children.iter().map(|c| c.to_json_node()).collect(),
        }
    }

    fn from_json_node(node: TreeJson) -> Result<Self> {
        match node.kind {
            NodeKind::Leaf => {
                let v = node
                    .vertex
                    .ok_or_else(|| Error::Structural("leaf without \"vertex\"".into()))?;
                if !node.children.is_empty() {
                    return Err(Error::Structural("leaf with children".into()));
                }
                Ok(Self::leaf(v))
            }
            kind => {
                if node.vertex.is_some() {
                    return Err(Error::Structural(format!("{} node with a vertex", kind.as_str())));
                }
                let children = node
                    .children
                    .into_iter()
                    .map(Self::from_json_node)
                    .collect::<Result<_>>()?;
                Ok(Self::node(kind, children))
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_node()).expect("tree serialises")
    }

    pub fn from_json(value: serde_json::Value) -> Result<Self> {
        let node: TreeJson =
            serde_json::from_value(value).map_err(|e| Error::Structural(e.to_string()))?;
        Self::from_json_node(node)
    }

    /// Graphviz rendering: inner nodes are labeled with their operation,
    /// leaves with their vertex.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph decomposition {\n  node [fontname=\"Helvetica\"];\n");
        let mut next = 0usize;
        self.write_dot(&mut out, &mut next);
        out.push_str("}\n");
        out
    }

    fn write_dot(&self, out: &mut String, next: &mut usize) -> usize {
        let id = *next;
        *next += 1;
        match self.vertex() {
            Some(v) => {
                let _ = writeln!(out, "  n{id} [label=\"{v}\", shape=circle];");
            }
            None => {
                let _ = writeln!(out, "  n{id} [label=\"{}\", shape=box];", self.kind.as_str());
            }
        }
        for c in &self.children {
            let cid = c.write_dot(out, next);
            let _ = writeln!(out, "  n{id} -> n{cid};");
        }
        id
    }

    /// Indented outline, one node per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0);
        out
    }

    fn write_text(&self, out: &mut String, indent: usize) {
        match self.vertex() {
            Some(v) => {
                let _ = writeln!(out, "{:indent$}leaf {v}", "");
            }
            None => {
                let _ = writeln!(out, "{:indent$}{} {:?}", "", self.kind.as_str(), self.vertices);
            }
        }
        for c in &self.children {
            c.write_text(out, indent + 2);
        }
    }
}

impl Serialize for DecompositionTree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_node().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DecompositionTree {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let node = TreeJson::deserialize(deserializer)?;
        Self::from_json_node(node).map_err(serde::de::Error::custom)
    }
}
