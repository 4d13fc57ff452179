//! Recognizers for cographs, sesquicographs and 2-cographs.
//!
//! The sesquicograph recognizer works through a list of pieces. A piece is
//! split into components if it is disconnected, into blocks if it has a cut
//! vertex, and into the complements of its complement's components if its
//! complement is disconnected. A piece on at least five vertices for which
//! none of these apply is 2-connected with a connected complement, and no
//! graph containing it is a sesquicograph. Every successful run yields a
//! [`DecompositionTree`] for the input.

use serde::Serialize;

use crate::bits::{self, bit, ones};
use crate::canon::MAX_CANON_ORDER;
use crate::connectivity::block_masks;
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::{Graph, VertexSet};
use crate::obstructions::{obstruction_witness, ObstructionWitness};
use crate::tree::{DecompositionTree, NodeKind};

/// Largest order accepted by [`is_sesquicograph_by_subgraph_criterion`].
pub const MAX_SUBGRAPH_CRITERION_ORDER: usize = 8;

/// An induced subgraph on at least five vertices that is 2-connected and
/// whose complement is connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailurePiece {
    pub graph: Graph,
}

impl FailurePiece {
    pub fn vertices(&self) -> VertexSet {
        self.graph.vertex_set()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Tree(DecompositionTree),
    Failure(FailurePiece),
}

impl Decomposition {
    pub fn tree(&self) -> Option<&DecompositionTree> {
        match self {
            Decomposition::Tree(t) => Some(t),
            Decomposition::Failure(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&FailurePiece> {
        match self {
            Decomposition::Tree(_) => None,
            Decomposition::Failure(f) => Some(f),
        }
    }
}

/// How a piece splits, as dense masks over the host graph.
enum Split {
    Leaf,
    Node(NodeKind, Vec<u64>),
    Stuck,
}

fn split_piece(adj: &[u64], piece: u64, allow_blocks: bool) -> Split {
    if piece.count_ones() == 1 {
        return Split::Leaf;
    }
    let comps = bits::components(adj, piece);
    if comps.len() > 1 {
        return Split::Node(NodeKind::ZeroSum, comps);
    }
    if allow_blocks && bits::has_cut_vertex(adj, piece) {
        let (mut blocks, _) = block_masks(adj, piece);
        blocks.sort_by_key(|&m| ones(m).collect::<Vec<_>>());
        return Split::Node(NodeKind::OneSum, blocks);
    }
    let co = bits::complement_components(adj, piece);
    if co.len() > 1 {
        return Split::Node(NodeKind::Join, co);
    }
    Split::Stuck
}

/// Worklist decomposition. With `allow_blocks` false only joins and 0-sums
/// are used, which recognizes cographs.
fn decompose_with(g: &Graph, allow_blocks: bool) -> Decomposition {
    struct Slot {
        kind: NodeKind,
        mask: u64,
        children: Vec<usize>,
    }
    let adj = g.adj();
    let mut arena: Vec<Slot> = Vec::new();
    let mut work: Vec<usize> = Vec::new();
    if g.order() == 0 {
        // the empty graph is the 0-sum of nothing
        return Decomposition::Tree(DecompositionTree::zero_sum(Vec::new()));
    }
    arena.push(Slot {
        kind: NodeKind::Leaf,
        mask: g.full_mask(),
        children: Vec::new(),
    });
    work.push(0);
    while let Some(id) = work.pop() {
        let mask = arena[id].mask;
        match split_piece(adj, mask, allow_blocks) {
            Split::Leaf => arena[id].kind = NodeKind::Leaf,
            Split::Node(kind, parts) => {
                arena[id].kind = kind;
                for part in parts {
                    let child = arena.len();
                    arena.push(Slot {
                        kind: NodeKind::Leaf,
                        mask: part,
                        children: Vec::new(),
                    });
                    arena[id].children.push(child);
                    work.push(child);
                }
            }
            Split::Stuck => {
                return Decomposition::Failure(FailurePiece {
                    graph: g.induced_by_mask(mask),
                });
            }
        }
    }

    fn build(arena: &[Slot], id: usize, g: &Graph) -> DecompositionTree {
        let slot = &arena[id];
        match slot.kind {
            NodeKind::Leaf => DecompositionTree::leaf(g.labels()[slot.mask.trailing_zeros() as usize]),
            kind => DecompositionTree::node(
                kind,
                slot.children.iter().map(|&c| build(arena, c, g)).collect(),
            ),
        }
    }
    Decomposition::Tree(build(&arena, 0, g))
}

/// Decomposes `g` by joins, 0-sums and 1-sums, or reports the piece where
/// the decomposition gets stuck.
///
/// Components come before blocks, and joins are only tried on pieces with
/// no cut vertex. Children are ordered by least label.
pub fn decompose_sesquicograph(g: &Graph) -> Decomposition {
    decompose_with(g, true)
}

pub fn is_sesquicograph(g: &Graph) -> bool {
    is_sesquicograph_mask(g.adj(), g.full_mask())
}

/// Allocation-light verdict used in the enumeration hot loops.
pub(crate) fn is_sesquicograph_mask(adj: &[u64], mask: u64) -> bool {
    let mut work = vec![mask];
    while let Some(piece) = work.pop() {
        if piece.count_ones() <= 1 {
            continue;
        }
        match split_piece(adj, piece, true) {
            Split::Leaf => {}
            Split::Node(_, parts) => work.extend(parts),
            Split::Stuck => return false,
        }
    }
    true
}

/// Same shape of decomposition as the sesquicograph one but without
/// 1-sums. Kept for cross-checking [`is_cograph`].
pub fn decompose_cograph(g: &Graph) -> Decomposition {
    decompose_with(g, false)
}

/// True iff no four vertices induce a path `P4`.
pub fn is_cograph(g: &Graph) -> bool {
    let adj = g.adj();
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if induces_p4(adj, bit(a) | bit(b) | bit(c) | bit(d)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn induces_p4(adj: &[u64], m: u64) -> bool {
    let mut degs = [0u32; 4];
    for (k, v) in ones(m).enumerate() {
        degs[k] = bits::degree_in(adj, m, v);
    }
    degs.sort_unstable();
    degs == [1, 1, 2, 2] && bits::is_connected(adj, m)
}

/// Brute force over induced subgraphs: no induced subgraph on two or more
/// vertices is 2-connected with a 2-connected complement.
pub fn is_2_cograph(g: &Graph) -> Result<bool> {
    if g.order() > MAX_CANON_ORDER {
        return Err(Error::too_large("2-cograph subset scan", MAX_CANON_ORDER, g.order()));
    }
    let adj = g.adj();
    let all = g.full_mask();
    let mut sub = all;
    loop {
        if sub.count_ones() >= 2 && bits::is_2_connected(adj, sub) && bits::is_complement_2_connected(adj, sub) {
            return Ok(false);
        }
        if sub == 0 {
            return Ok(true);
        }
        sub = (sub - 1) & all;
    }
}

/// Recursive 2-cograph test for graphs of any order: split a piece by
/// components or blocks; otherwise split its complement the same way; a
/// piece on which both fail is not a 2-cograph.
pub fn is_2_cograph_by_decomposition(g: &Graph) -> bool {
    let adj = g.adj();
    let n = g.order();
    let all = g.full_mask();
    let co: Vec<u64> = (0..n).map(|i| all & !adj[i] & !bit(i)).collect();
    // (piece, whether it is currently viewed through its complement)
    let mut work = vec![(all, false)];
    while let Some((piece, flipped)) = work.pop() {
        if piece.count_ones() <= 2 {
            continue;
        }
        let (here, there) = if flipped { (&co[..], adj) } else { (adj, &co[..]) };
        if let Some(parts) = split_by_separation(here, piece) {
            work.extend(parts.into_iter().map(|m| (m, flipped)));
        } else if let Some(parts) = split_by_separation(there, piece) {
            work.extend(parts.into_iter().map(|m| (m, !flipped)));
        } else {
            return false;
        }
    }
    true
}

/// Components if disconnected, blocks if it has a cut vertex, else `None`.
fn split_by_separation(adj: &[u64], piece: u64) -> Option<Vec<u64>> {
    let comps = bits::components(adj, piece);
    if comps.len() > 1 {
        return Some(comps);
    }
    if bits::has_cut_vertex(adj, piece) {
        return Some(block_masks(adj, piece).0);
    }
    None
}

/// Sesquicograph test by the subgraph criterion: every induced subgraph on
/// two or more vertices is either not 2-connected or has a disconnected
/// complement. Exponential; bounded to eight vertices.
pub fn is_sesquicograph_by_subgraph_criterion(g: &Graph) -> Result<bool> {
    if g.order() > MAX_SUBGRAPH_CRITERION_ORDER {
        return Err(Error::too_large(
            "subgraph criterion",
            MAX_SUBGRAPH_CRITERION_ORDER,
            g.order(),
        ));
    }
    let adj = g.adj();
    let all = g.full_mask();
    let mut sub = all;
    while sub != 0 {
        if sub.count_ones() >= 2 && bits::is_2_connected(adj, sub) && bits::is_complement_connected(adj, sub) {
            return Ok(false);
        }
        sub = (sub - 1) & all;
    }
    Ok(true)
}

/// Verdicts of the three recognizers plus a certificate or a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub graph6: String,
    pub order: usize,
    pub is_cograph: bool,
    pub is_sesquicograph: bool,
    pub is_2_cograph: bool,
    pub certificate: Option<DecompositionTree>,
    pub witness: Option<ObstructionWitness>,
}

/// Runs every recognizer on `g`. Sesquicographs of any order get a
/// certificate; other graphs need a witness, which bounds them to the
/// witness search limit.
pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    let graph6 = to_graph6(g)?;
    let is_cograph = is_cograph(g);
    let is_2_cograph = is_2_cograph_by_decomposition(g);
    let (certificate, witness) = match decompose_sesquicograph(g) {
        Decomposition::Tree(t) => (Some(t), None),
        Decomposition::Failure(_) => {
            let w = obstruction_witness(g)?;
            debug_assert!(w.is_some(), "non-sesquicograph without a witness");
            (None, w)
        }
    };
    Ok(ClassificationReport {
        graph6,
        order: g.order(),
        is_cograph,
        is_sesquicograph: certificate.is_some(),
        is_2_cograph,
        certificate,
        witness,
    })
}
