//! Canonical forms for small graphs.
//!
//! Vertices are first split into cells by colour refinement, which is
//! isomorphism invariant. The canonical ordering is then the one, among all
//! orderings that list the cells in colour order, whose upper-triangle
//! adjacency string (graph6 bit order) is lexicographically least. The
//! search is a depth-first walk over those orderings that abandons a branch
//! as soon as its prefix is larger than the best string found so far.

use std::fmt;

use crate::bits::{bit, ones};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order accepted by the canonical-form search.
pub const MAX_CANON_ORDER: usize = 10;

/// Isomorphism-class key: order plus the least adjacency string.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    order: u8,
    code: u64,
}

impl CanonicalKey {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Upper-triangle bits in graph6 order, first pair in the most
    /// significant position.
    pub fn code(&self) -> u64 {
        self.code
    }

    /// The canonical representative on vertices `0..n`.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut adj = vec![0u64; n];
        let total = n * n.saturating_sub(1) / 2;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (total - 1 - k) & 1 == 1 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                k += 1;
            }
        }
        Graph::from_parts((0..n as Vertex).collect(), adj)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey(n={}, {:#x})", self.order, self.code)
    }
}

/// A canonical key together with the ordering that realises it:
/// `order[p]` is the dense index of the vertex placed at position `p`.
#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    pub key: CanonicalKey,
    pub order: Vec<usize>,
}

fn check_bound(g: &Graph) -> Result<()> {
    if g.order() > MAX_CANON_ORDER {
        return Err(Error::too_large("canonical form", MAX_CANON_ORDER, g.order()));
    }
    Ok(())
}

/// Stable colour refinement. Returns one colour per dense vertex; colours
/// are ranks in `0..cells`, assigned in an isomorphism-invariant order.
fn refine(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    let mut cells = 0;
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = ones(adj[v]).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0; n];
        let mut rank = 0;
        for k in 0..n {
            if k > 0 && (sigs[k].0 != sigs[k - 1].0 || sigs[k].1 != sigs[k - 1].1) {
                rank += 1;
            }
            next[sigs[k].2] = rank;
        }
        let count = if n == 0 { 0 } else { rank + 1 };
        colour = next;
        if count == cells {
            return colour;
        }
        cells = count;
    }
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    /// cell mask required at each position
    slot_cell: Vec<u64>,
    placed: Vec<usize>,
    best_prefix: Vec<u64>,
    best_order: Vec<usize>,
    found: bool,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, used: u64, prefix: u64) {
        if depth == self.n {
            if !self.found || prefix < self.best_prefix[depth] {
                self.found = true;
                self.best_order.clone_from(&self.placed);
                self.refresh_prefixes();
            }
            return;
        }
        for v in ones(self.slot_cell[depth] & !used) {
            let mut column = 0u64;
            for &u in &self.placed {
                column = (column << 1) | (self.adj[u] >> v & 1);
            }
            let next = (prefix << depth) | column;
            // equal-length prefixes compare lexicographically as integers
            if self.found && next > self.best_prefix[depth + 1] {
                continue;
            }
            self.placed.push(v);
            self.run(depth + 1, used | bit(v), next);
            self.placed.pop();
        }
    }

    fn refresh_prefixes(&mut self) {
        let mut prefix = 0u64;
        self.best_prefix[0] = 0;
        for depth in 0..self.n {
            let v = self.best_order[depth];
            let mut column = 0u64;
            for &u in &self.best_order[..depth] {
                column = (column << 1) | (self.adj[u] >> v & 1);
            }
            prefix = (prefix << depth) | column;
            self.best_prefix[depth + 1] = prefix;
        }
    }
}

/// Canonical key and a realising vertex ordering.
pub fn canonical_labeling(g: &Graph) -> Result<CanonicalLabeling> {
    check_bound(g)?;
    let adj = g.adj();
    let n = adj.len();
    let colour = refine(adj);
    let mut by_colour: Vec<usize> = (0..n).collect();
    by_colour.sort_by_key(|&v| colour[v]);
    let slot_cell = by_colour
        .iter()
        .map(|&v| {
            (0..n)
                .filter(|&u| colour[u] == colour[v])
                .fold(0u64, |m, u| m | bit(u))
        })
        .collect();
    let mut search = Search {
        adj,
        n,
        slot_cell,
        placed: Vec::with_capacity(n),
        best_prefix: vec![0; n + 1],
        best_order: Vec::new(),
        found: false,
    };
    search.run(0, 0, 0);
    let key = CanonicalKey {
        order: n as u8,
        code: search.best_prefix[n],
    };
    Ok(CanonicalLabeling {
        key,
        order: search.best_order,
    })
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    Ok(canonical_labeling(g)?.key)
}

/// Relabeling of `g` onto `0..n` shared by every graph isomorphic to `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(canonical_key(g)?.to_graph())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    check_bound(g)?;
    check_bound(h)?;
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_key(g)? == canonical_key(h)?)
}

/// An isomorphism from `g` onto `h` as label pairs `(g_label, h_label)`, or
/// `None` when the graphs are not isomorphic.
pub fn isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<(Vertex, Vertex)>>> {
    if !are_isomorphic(g, h)? {
        return Ok(None);
    }
    let lg = canonical_labeling(g)?;
    let lh = canonical_labeling(h)?;
    Ok(Some(
        lg.order
            .iter()
            .zip(&lh.order)
            .map(|(&a, &b)| (g.labels()[a], h.labels()[b]))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits;

    /// Reference: least adjacency string over all n! orderings.
    fn brute_key(g: &Graph) -> u64 {
        let adj = g.adj();
        let n = adj.len();
        let mut best = u64::MAX;
        let mut perm: Vec<usize> = (0..n).collect();
        permute_all(&mut perm, 0, &mut |p| {
            let mut code = 0u64;
            for j in 1..n {
                for i in 0..j {
                    code = (code << 1) | (adj[p[i]] >> p[j] & 1);
                }
            }
            best = best.min(code);
        });
        if n == 0 {
            0
        } else {
            best
        }
    }

    fn permute_all(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute_all(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn key_is_invariant_and_separates_classes_on_five_vertices() {
        // every labeled graph on 5 vertices; keys must induce the 34 classes
        let n = 5;
        let mut keys = std::collections::BTreeSet::new();
        let mut brute = std::collections::BTreeSet::new();
        for code in 0u32..1 << 10 {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if code >> k & 1 == 1 {
                        edges.push((i as Vertex, j as Vertex));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            keys.insert(canonical_key(&g).unwrap());
            brute.insert(brute_key(&g));
        }
        assert_eq!(keys.len(), 34);
        assert_eq!(brute.len(), 34);
    }

    #[test]
    fn labeling_realises_the_key() {
        let g = Graph::new(1..=6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (2, 5)]).unwrap();
        let lab = canonical_labeling(&g).unwrap();
        let adj = g.adj();
        let mut code = 0u64;
        for j in 1..6 {
            for i in 0..j {
                code = (code << 1) | (adj[lab.order[i]] >> lab.order[j] & 1);
            }
        }
        assert_eq!(code, lab.key.code());
        assert_eq!(bits::full(6).count_ones(), 6);
    }

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Graph::cycle(5);
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&c5.complement()).unwrap());
        assert!(are_isomorphic(&c5, &c5.complement()).unwrap());
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            canonical_form(&Graph::empty(11)),
            Err(Error::TooLarge { max: 10, got: 11, .. })
        ));
        assert!(canonical_form(&Graph::cycle(10)).is_ok());
    }

    #[test]
    fn empty_and_single_vertex() {
        assert_eq!(canonical_form(&Graph::empty(0)).unwrap(), Graph::empty(0));
        assert_eq!(canonical_form(&Graph::new([7], []).unwrap()).unwrap(), Graph::empty(1));
    }
}
