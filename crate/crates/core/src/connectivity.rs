//! Components, blocks, cut vertices and vertex connectivity.

use crate::bits::{self, bit, ones};
use crate::graph::{Graph, VertexSet};

/// Blocks and cut vertices of a graph.
///
/// Blocks are maximal 2-connected subgraphs, bridges, or isolated vertices,
/// each given by its vertex set. They are sorted by their sorted member
/// lists, so in particular by least label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

/// Connected components ordered by least label.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    bits::components(g.adj(), g.full_mask())
        .into_iter()
        .map(|m| g.labels_of(m))
        .collect()
}

/// Dense-index blocks as masks plus the cut-vertex mask.
pub(crate) fn block_masks(adj: &[u64], mask: u64) -> (Vec<u64>, u64) {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut cuts = 0u64;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in ones(mask) {
        if disc[root] != usize::MAX {
            continue;
        }
        if adj[root] & mask == 0 {
            disc[root] = time;
            time += 1;
            blocks.push(bit(root));
            continue;
        }
        // iterative DFS: (vertex, parent, remaining neighbours)
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack = vec![(root, usize::MAX, adj[root] & mask)];
        let mut root_children = 0;
        while let Some(&mut (v, parent, ref mut rest)) = stack.last_mut() {
            if *rest != 0 {
                let w = rest.trailing_zeros() as usize;
                *rest &= *rest - 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, adj[w] & mask));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    if parent != root {
                        cuts |= bit(parent);
                    }
                    let mut block = 0u64;
                    while let Some((a, b)) = edge_stack.pop() {
                        block |= bit(a) | bit(b);
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    blocks.push(block);
                }
            }
        }
        if root_children > 1 {
            cuts |= bit(root);
        }
    }
    (blocks, cuts)
}

/// Block / cut-vertex decomposition via depth-first lowpoints.
pub fn blocks_and_cut_vertices(g: &Graph) -> BlockDecomposition {
    let (masks, cuts) = block_masks(g.adj(), g.full_mask());
    let mut blocks: Vec<VertexSet> = masks.into_iter().map(|m| g.labels_of(m)).collect();
    blocks.sort_by(|a, b| a.iter().cmp(b.iter()));
    BlockDecomposition {
        blocks,
        cut_vertices: g.labels_of(cuts),
    }
}

/// At least three vertices, connected, and no cut vertex. `K1` and `K2` are
/// therefore not 2-connected.
pub fn is_2_connected(g: &Graph) -> bool {
    bits::is_2_connected(g.adj(), g.full_mask())
}

/// Least number of vertices whose removal disconnects `g`, found by trying
/// every subset in order of size. Complete graphs get `n - 1`; disconnected
/// graphs and `K1` get 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    let all = g.full_mask();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    for t in 1..n.saturating_sub(1) {
        if bits::subsets_lex(all, t).any(|cut| !bits::is_connected(g.adj(), all & !cut)) {
            return t;
        }
    }
    n - 1
}

/// 2-connected, and no single deletion leaves a 2-connected graph.
pub fn is_critically_2_connected(g: &Graph) -> bool {
    let adj = g.adj();
    let all = g.full_mask();
    bits::is_2_connected(adj, all) && ones(all).all(|v| !bits::is_2_connected(adj, all & !bit(v)))
}
