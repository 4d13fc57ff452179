//! Labeled simple graphs and the operations that build sesquicographs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, ones};
use crate::error::{Error, Result};

/// Vertex label. Labels are arbitrary small integers; they need not be
/// contiguous.
pub type Vertex = u32;

/// Largest order a [`Graph`] can hold (one machine word per neighbourhood).
pub const MAX_ORDER: usize = 64;

/// An ordered set of vertex labels.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersection<'a>(&'a self, other: &'a VertexSet) -> impl Iterator<Item = Vertex> + 'a {
        self.0.intersection(&other.0).copied()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(value: [Vertex; N]) -> Self {
        value.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = std::collections::btree_set::IntoIter<Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// A finite simple undirected graph on labeled vertices.
///
/// Internally the vertices are kept in increasing label order and vertex `i`
/// of that order owns the neighbourhood bitset `adj[i]`. Two graphs compare
/// equal exactly when they have the same labels and the same edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<Vertex>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from vertex labels and edges. Repeated vertices and
    /// edges collapse; loops and edges to unknown vertices are rejected.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let labels: Vec<Vertex> = vertices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if labels.len() > MAX_ORDER {
            return Err(Error::too_large("graph", MAX_ORDER, labels.len()));
        }
        let mut g = Graph {
            adj: vec![0; labels.len()],
            labels,
        };
        for (u, v) in edges {
            if u == v {
                return Err(Error::Loop(u));
            }
            let i = g.index_of(u).ok_or(Error::MissingVertex(u))?;
            let j = g.index_of(v).ok_or(Error::MissingVertex(v))?;
            g.adj[i] |= bit(j);
            g.adj[j] |= bit(i);
        }
        Ok(g)
    }

    /// Vertices `0..n`, edges given as dense index pairs.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::new(0..n as Vertex, edges.iter().copied())
    }

    pub(crate) fn from_parts(labels: Vec<Vertex>, adj: Vec<u64>) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        Graph { labels, adj }
    }

    /// Edgeless graph on `0..n`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER);
        Graph {
            labels: (0..n as Vertex).collect(),
            adj: vec![0; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        assert!(n <= MAX_ORDER);
        let all = bits::full(n);
        Graph {
            labels: (0..n as Vertex).collect(),
            adj: (0..n).map(|i| all & !bit(i)).collect(),
        }
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n as Vertex).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    /// Cycle `0-1-...-(n-1)-0`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut edges: Vec<_> = (1..n as Vertex).map(|i| (i - 1, i)).collect();
        edges.push((n as Vertex - 1, 0));
        Self::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = Vertex> + '_ {
        self.labels.iter().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.order()).flat_map(move |i| {
            ones(self.adj[i] & !bits::full(i + 1)).map(move |j| (self.labels[i], self.labels[j]))
        })
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.labels.binary_search(&v).ok()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.index_of(v).is_some()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adj[i] & bit(j) != 0,
            _ => false,
        }
    }

    pub fn neighbors(&self, v: Vertex) -> Result<VertexSet> {
        let i = self.index_of(v).ok_or(Error::MissingVertex(v))?;
        Ok(self.labels_of(self.adj[i]))
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        let i = self.index_of(v).ok_or(Error::MissingVertex(v))?;
        Ok(self.adj[i].count_ones() as usize)
    }

    /// Sorted degree sequence (ascending).
    pub fn degree_sequence(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.adj.iter().map(|a| a.count_ones()).collect();
        d.sort_unstable();
        d
    }

    pub(crate) fn adj(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn full_mask(&self) -> u64 {
        bits::full(self.order())
    }

    pub(crate) fn labels_of(&self, mask: u64) -> VertexSet {
        ones(mask).map(|i| self.labels[i]).collect()
    }

    pub(crate) fn mask_of(&self, s: &VertexSet) -> Result<u64> {
        s.iter().try_fold(0u64, |m, v| {
            let i = self.index_of(v).ok_or(Error::NotASubset(v))?;
            Ok(m | bit(i))
        })
    }

    /// Induced subgraph on a dense-index mask, labels preserved.
    pub(crate) fn induced_by_mask(&self, mask: u64) -> Graph {
        let idx: Vec<usize> = ones(mask).collect();
        let labels = idx.iter().map(|&i| self.labels[i]).collect();
        let adj = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .enumerate()
                    .fold(0u64, |m, (k, &j)| if self.adj[i] & bit(j) != 0 { m | bit(k) } else { m })
            })
            .collect();
        Graph { labels, adj }
    }

    pub fn complement(&self) -> Graph {
        let all = self.full_mask();
        Graph {
            labels: self.labels.clone(),
            adj: self.adj.iter().enumerate().map(|(i, a)| all & !a & !bit(i)).collect(),
        }
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        Ok(self.induced_by_mask(self.mask_of(s)?))
    }

    /// `self - v`.
    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph> {
        let i = self.index_of(v).ok_or(Error::MissingVertex(v))?;
        Ok(self.induced_by_mask(self.full_mask() & !bit(i)))
    }

    /// Disjoint union. Label sets must not overlap.
    pub fn zero_sum(&self, other: &Graph) -> Result<Graph> {
        if let Some(v) = self.labels.iter().find(|v| other.has_vertex(**v)) {
            return Err(Error::LabelOverlap(*v));
        }
        Graph::new(
            self.vertices().chain(other.vertices()),
            self.edges().chain(other.edges()),
        )
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let sum = self.zero_sum(other)?;
        let cross = self
            .vertices()
            .flat_map(|u| other.vertices().map(move |v| (u, v)));
        Graph::new(sum.vertices(), sum.edges().chain(cross))
    }

    /// Identifies `u` of `self` with `v` of `other`; the glued vertex keeps
    /// the label `u`.
    pub fn one_sum(&self, u: Vertex, other: &Graph, v: Vertex) -> Result<Graph> {
        if !self.has_vertex(u) {
            return Err(Error::MissingVertex(u));
        }
        if !other.has_vertex(v) {
            return Err(Error::MissingVertex(v));
        }
        if let Some(w) = self.labels.iter().find(|w| other.has_vertex(**w)) {
            return Err(Error::LabelOverlap(*w));
        }
        let rename = |x: Vertex| if x == v { u } else { x };
        Graph::new(
            self.vertices().chain(other.vertices().filter(|&x| x != v)),
            self.edges()
                .chain(other.edges().map(|(a, b)| (rename(a), rename(b)))),
        )
    }

    /// Simple contraction of the edge `uv`: `v` disappears and `u` inherits
    /// its neighbours.
    pub fn contract(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let i = self.index_of(u).expect("edge endpoint");
        let j = self.index_of(v).expect("edge endpoint");
        Ok(self.contract_dense(i, j))
    }

    /// Contracts dense indices `i` (kept) and `j` (removed). Adjacency of
    /// `i` and `j` is not checked.
    pub(crate) fn contract_dense(&self, i: usize, j: usize) -> Graph {
        let mut adj = self.adj.clone();
        let merged = (adj[i] | adj[j]) & !bit(i) & !bit(j);
        for (k, a) in adj.iter_mut().enumerate() {
            if k != i && k != j {
                if merged & bit(k) != 0 {
                    *a |= bit(i);
                } else {
                    *a &= !bit(i);
                }
            }
        }
        adj[i] = merged;
        let g = Graph {
            labels: self.labels.clone(),
            adj,
        };
        g.induced_by_mask(self.full_mask() & !bit(j))
    }

    /// Renames vertices through `map`; labels missing from the map keep
    /// their value. The result must still have distinct labels.
    pub fn relabeled(&self, map: &BTreeMap<Vertex, Vertex>) -> Result<Graph> {
        let f = |x: Vertex| map.get(&x).copied().unwrap_or(x);
        let mut seen = BTreeSet::new();
        for v in self.vertices() {
            if !seen.insert(f(v)) {
                return Err(Error::NonInjectiveRelabel(f(v)));
            }
        }
        Graph::new(self.vertices().map(f), self.edges().map(|(a, b)| (f(a), f(b))))
    }

    /// Relabels to `0..n` preserving label order.
    pub fn normalized(&self) -> Graph {
        Graph {
            labels: (0..self.order() as Vertex).collect(),
            adj: self.adj.clone(),
        }
    }

    /// Shifts every label by `offset`.
    pub fn shifted(&self, offset: Vertex) -> Graph {
        Graph {
            labels: self.labels.iter().map(|v| v + offset).collect(),
            adj: self.adj.clone(),
        }
    }

    pub fn is_connected(&self) -> bool {
        bits::is_connected(&self.adj, self.full_mask())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() * 2 == n * n.saturating_sub(1)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph {{ V: {:?}, E: [", self.labels)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "] }}")
    }
}
