use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use sesqui::{
    are_isomorphic, blocks_and_cut_vertices, canonical_form, components, from_graph6, is_2_connected,
    to_graph6, vertex_connectivity, Graph, Vertex, VertexSet,
};

/// Graph on `0..n` with edges chosen by `bits`.
fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0u32;
    for j in 1..n {
        for i in 0..j {
            if bits.rotate_right(k % 64) & 1 == 1 {
                edges.push((i as Vertex, j as Vertex));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, bits)| graph_from_bits(n, bits))
}

/// Relabels `g` through a random injection into `0..100`.
fn scramble(g: &Graph, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut pool: Vec<Vertex> = (0..100).collect();
    pool.shuffle(&mut rng);
    let map: BTreeMap<Vertex, Vertex> = g.vertices().zip(pool).collect();
    Graph::new(
        g.vertices().map(|v| map[&v]),
        g.edges().map(|(a, b)| (map[&a], map[&b])),
    )
    .unwrap()
}

/// Union-find components over the edge list.
fn union_find_components(g: &Graph) -> Vec<VertexSet> {
    let labels = g.labels();
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (u, v) in g.edges() {
        let a = find(&mut parent, g.index_of(u).unwrap());
        let b = find(&mut parent, g.index_of(v).unwrap());
        parent[a] = b;
    }
    let mut groups: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for (i, &l) in labels.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().insert(l);
    }
    let mut out: Vec<VertexSet> = groups.into_values().collect();
    out.sort_by_key(|s| s.first());
    out
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(&text).unwrap(), g.normalized());
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(9)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.order();
        prop_assert_eq!(g.size() + g.complement().size(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn complement_of_join_is_sum_of_complements(a in arb_graph(4), b in arb_graph(3)) {
        let b = b.shifted(10);
        let lhs = a.join(&b).unwrap().complement();
        let rhs = a.complement().zero_sum(&b.complement()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_drops_one_vertex(g in arb_graph(8)) {
        for (u, v) in g.edges() {
            let c = g.contract(u, v).unwrap();
            prop_assert_eq!(c.order(), g.order() - 1);
            prop_assert!(!c.has_vertex(v));
            prop_assert!(c.has_vertex(u));
            let expected: BTreeSet<Vertex> = g.neighbors(u).unwrap().iter()
                .chain(g.neighbors(v).unwrap().iter())
                .filter(|&x| x != u && x != v)
                .collect();
            let got: BTreeSet<Vertex> = c.neighbors(u).unwrap().iter().collect();
            prop_assert_eq!(got, expected);
        }
    }

    #[test]
    fn one_sum_order(a in arb_graph(5), b in arb_graph(5)) {
        prop_assume!(a.order() > 0 && b.order() > 0);
        let b = b.shifted(20);
        let s = a.one_sum(a.labels()[0], &b, b.labels()[0]).unwrap();
        prop_assert_eq!(s.order(), a.order() + b.order() - 1);
        prop_assert_eq!(s.size(), a.size() + b.size());
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(7), seed in any::<u64>()) {
        let h = scramble(&g, seed);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn components_match_union_find(g in arb_graph(12)) {
        prop_assert_eq!(components(&g), union_find_components(&g));
    }

    #[test]
    fn block_decomposition_invariants(g in arb_graph(10)) {
        let bd = blocks_and_cut_vertices(&g);
        // blocks cover the vertices
        let covered: VertexSet = bd.blocks.iter().flat_map(|b| b.iter()).collect();
        prop_assert_eq!(covered, g.vertex_set());
        // each edge lies in exactly one block
        for (u, v) in g.edges() {
            let n = bd.blocks.iter().filter(|b| b.contains(u) && b.contains(v)).count();
            prop_assert_eq!(n, 1);
        }
        // blocks meet in at most one vertex, always a cut vertex
        for (i, a) in bd.blocks.iter().enumerate() {
            for b in &bd.blocks[i + 1..] {
                let shared: Vec<Vertex> = a.intersection(b).collect();
                prop_assert!(shared.len() <= 1);
                for v in shared {
                    prop_assert!(bd.cut_vertices.contains(v));
                }
            }
        }
        // cut vertices are exactly those whose deletion adds components
        let base = components(&g).len();
        for v in g.vertices() {
            let more = components(&g.remove_vertex(v).unwrap()).len() > base;
            prop_assert_eq!(more, bd.cut_vertices.contains(v));
            if more {
                prop_assert!(bd.blocks.iter().filter(|b| b.contains(v)).count() >= 2);
            }
        }
        // a single block on three or more vertices is 2-connected
        if bd.blocks.len() == 1 && g.order() >= 3 {
            prop_assert!(is_2_connected(&g));
        }
    }

    #[test]
    fn connectivity_at_most_min_degree(g in arb_graph(8)) {
        if !g.is_complete() && g.order() > 0 {
            let min_deg = *g.degree_sequence().first().unwrap() as usize;
            prop_assert!(vertex_connectivity(&g) <= min_deg);
        }
    }
}

#[test]
fn two_connected_iff_connectivity_at_least_two() {
    for n in 0..=7 {
        for g in sesqui::generate_graphs(n).unwrap() {
            let by_kappa = g.order() >= 3 && vertex_connectivity(&g) >= 2;
            assert_eq!(is_2_connected(&g), by_kappa, "{:?}", g);
        }
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_a_sample() {
    let mut rng = StdRng::seed_from_u64(7);
    let base: Vec<Graph> = (0..12).map(|k| graph_from_bits(5, (k * 97 + 13) % 1024)).collect();
    let sample: Vec<Graph> = base
        .iter()
        .flat_map(|g| [g.clone(), scramble(g, rand::Rng::random(&mut rng))])
        .collect();
    for a in &sample {
        assert!(are_isomorphic(a, a).unwrap());
        for b in &sample {
            let ab = are_isomorphic(a, b).unwrap();
            assert_eq!(ab, are_isomorphic(b, a).unwrap());
            if ab {
                for c in &sample {
                    if are_isomorphic(b, c).unwrap() {
                        assert!(are_isomorphic(a, c).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_form_under_many_permutations() {
    for n in 1..=6 {
        for g in sesqui::generate_graphs(n).unwrap() {
            let want = canonical_form(&g).unwrap();
            for seed in 0..100 {
                assert_eq!(canonical_form(&scramble(&g, seed)).unwrap(), want);
            }
        }
    }
}
