//! Word-level graph routines over dense adjacency masks.
//!
//! Every routine takes `adj`, where `adj[i]` is the neighbourhood bitset of
//! dense vertex `i`, and a `mask` restricting attention to an induced
//! subgraph. Nothing here allocates in the hot path except `components`.

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

#[inline]
pub(crate) fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bits of `mask` in increasing order.
pub(crate) fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Vertices reachable from `start` without leaving `mask`.
#[inline]
pub(crate) fn reach(adj: &[u64], mask: u64, start: usize) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

/// Same as [`reach`] but walking the complement graph.
#[inline]
pub(crate) fn reach_complement(adj: &[u64], mask: u64, start: usize) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = !adj[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen
}

/// The empty graph counts as connected.
#[inline]
pub(crate) fn is_connected(adj: &[u64], mask: u64) -> bool {
    mask == 0 || reach(adj, mask, mask.trailing_zeros() as usize) == mask
}

#[inline]
pub(crate) fn is_complement_connected(adj: &[u64], mask: u64) -> bool {
    mask == 0 || reach_complement(adj, mask, mask.trailing_zeros() as usize) == mask
}

/// Connected components, ordered by their least vertex.
pub(crate) fn components(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut rest = mask;
    let mut out = Vec::new();
    while rest != 0 {
        let c = reach(adj, rest, rest.trailing_zeros() as usize);
        out.push(c);
        rest &= !c;
    }
    out
}

pub(crate) fn complement_components(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut rest = mask;
    let mut out = Vec::new();
    while rest != 0 {
        let c = reach_complement(adj, rest, rest.trailing_zeros() as usize);
        out.push(c);
        rest &= !c;
    }
    out
}

/// True when some vertex of a connected `mask` disconnects it.
pub(crate) fn has_cut_vertex(adj: &[u64], mask: u64) -> bool {
    ones(mask).any(|v| !is_connected(adj, mask & !bit(v)))
}

/// At least three vertices, connected, no cut vertex.
#[inline]
pub(crate) fn is_2_connected(adj: &[u64], mask: u64) -> bool {
    mask.count_ones() >= 3 && is_connected(adj, mask) && !has_cut_vertex(adj, mask)
}

/// Complement counterpart of [`is_2_connected`].
pub(crate) fn is_complement_2_connected(adj: &[u64], mask: u64) -> bool {
    mask.count_ones() >= 3
        && is_complement_connected(adj, mask)
        && ones(mask).all(|v| is_complement_connected(adj, mask & !bit(v)))
}

/// Degree of `v` inside `mask`.
#[inline]
pub(crate) fn degree_in(adj: &[u64], mask: u64, v: usize) -> u32 {
    (adj[v] & mask).count_ones()
}

/// Every `k`-subset of the bits of `universe`, as masks, in lexicographic
/// order of their sorted member lists.
pub(crate) fn subsets_lex(universe: u64, k: usize) -> impl Iterator<Item = u64> {
    let members: Vec<usize> = ones(universe).collect();
    let n = members.len();
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mask = idx.iter().fold(0u64, |m, &i| m | bit(members[i]));
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    })
}
