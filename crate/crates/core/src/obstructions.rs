//! The forbidden induced subgraphs for sesquicographs, witness search, and
//! induced-minor containment.
//!
//! The obstructions are the chordless cycles of length at least five plus
//! seven sporadic graphs on five or six vertices: the house, the domino and
//! `H1`..`H5`. Each sporadic representative is a 6-cycle (5-cycle for the
//! house) on vertices `1..=6` in cycle order plus a few chords.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize, Serializer};

use crate::bits::{self, bit, ones};
use crate::canon::{canonical_key, canonical_labeling, CanonicalKey, MAX_CANON_ORDER};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Largest host order for witness searches.
pub const MAX_WITNESS_ORDER: usize = MAX_CANON_ORDER;
/// Largest host order for induced-minor searches.
pub const MAX_MINOR_ORDER: usize = 8;
/// Largest order accepted by [`is_sesquicograph_by_minor_criterion`].
pub const MAX_MINOR_CRITERION_ORDER: usize = 7;
/// Default cap on graphs visited by one induced-minor search.
pub const DEFAULT_MINOR_VISIT_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ObstructionName {
    /// Chordless cycle of the given length (at least five).
    Cycle(usize),
    House,
    Domino,
    H1,
    H2,
    H3,
    H4,
    H5,
}

impl fmt::Display for ObstructionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionName::Cycle(k) => write!(f, "C{k}"),
            ObstructionName::House => f.write_str("house"),
            ObstructionName::Domino => f.write_str("domino"),
            ObstructionName::H1 => f.write_str("H1"),
            ObstructionName::H2 => f.write_str("H2"),
            ObstructionName::H3 => f.write_str("H3"),
            ObstructionName::H4 => f.write_str("H4"),
            ObstructionName::H5 => f.write_str("H5"),
        }
    }
}

impl FromStr for ObstructionName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s {
            "house" => ObstructionName::House,
            "domino" => ObstructionName::Domino,
            "H1" => ObstructionName::H1,
            "H2" => ObstructionName::H2,
            "H3" => ObstructionName::H3,
            "H4" => ObstructionName::H4,
            "H5" => ObstructionName::H5,
            _ => match s.strip_prefix('C').and_then(|k| k.parse::<usize>().ok()) {
                Some(k) if k >= 5 => ObstructionName::Cycle(k),
                _ => return Err(format!("unknown obstruction name {s:?}")),
            },
        })
    }
}

impl Serialize for ObstructionName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ObstructionName {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: ObstructionName,
    pub graph: Graph,
}

fn chorded_cycle(len: Vertex, chords: &[(Vertex, Vertex)]) -> Graph {
    let ring = (1..=len).map(|i| (i, i % len + 1));
    Graph::new(1..=len, ring.chain(chords.iter().copied())).expect("catalog graph")
}

/// Chordless cycle on `1..=k` in cycle order.
pub fn long_cycle(k: usize) -> CatalogEntry {
    assert!(k >= 5, "obstruction cycles have length at least five");
    CatalogEntry {
        name: ObstructionName::Cycle(k),
        graph: chorded_cycle(k as Vertex, &[]),
    }
}

/// The seven sporadic obstructions in catalog order: house, domino,
/// H1..H5. Cycles are produced by [`long_cycle`].
pub fn catalog() -> Vec<CatalogEntry> {
    use ObstructionName::*;
    vec![
        CatalogEntry { name: House, graph: chorded_cycle(5, &[(2, 5)]) },
        CatalogEntry { name: Domino, graph: chorded_cycle(6, &[(2, 5)]) },
        CatalogEntry { name: H1, graph: chorded_cycle(6, &[(2, 5), (2, 6), (3, 5), (3, 6)]) },
        CatalogEntry { name: H2, graph: chorded_cycle(6, &[(2, 5), (3, 5), (3, 6)]) },
        CatalogEntry { name: H3, graph: chorded_cycle(6, &[(2, 5), (3, 6)]) },
        CatalogEntry { name: H4, graph: chorded_cycle(6, &[(2, 5), (2, 6), (3, 5)]) },
        CatalogEntry { name: H5, graph: chorded_cycle(6, &[(2, 4), (2, 6), (4, 6)]) },
    ]
}

/// Representative of any catalog name.
pub fn representative(name: ObstructionName) -> Graph {
    match name {
        ObstructionName::Cycle(k) => long_cycle(k).graph,
        other => catalog()
            .into_iter()
            .find(|e| e.name == other)
            .expect("sporadic entry")
            .graph,
    }
}

/// Catalog entries with cached keys for the matching hot loop.
struct Sporadic {
    name: ObstructionName,
    graph: Graph,
    key: CanonicalKey,
    degrees: Vec<u32>,
}

fn sporadics() -> &'static [Sporadic] {
    static CELL: OnceLock<Vec<Sporadic>> = OnceLock::new();
    CELL.get_or_init(|| {
        catalog()
            .into_iter()
            .map(|e| Sporadic {
                name: e.name,
                key: canonical_key(&e.graph).expect("small"),
                degrees: e.graph.degree_sequence(),
                graph: e.graph,
            })
            .collect()
    })
}

/// An induced copy of a catalog graph inside a host graph.
///
/// `mapping` sends each vertex of the representative (see
/// [`representative`]) to the host vertex playing its role.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionWitness {
    pub name: ObstructionName,
    pub vertices: VertexSet,
    pub mapping: BTreeMap<Vertex, Vertex>,
}

impl ObstructionWitness {
    /// Checks edge by edge, and non-edge by non-edge, that the mapping is an
    /// isomorphism from the representative onto the induced subgraph.
    pub fn verify(&self, host: &Graph) -> bool {
        let rep = representative(self.name);
        if self.mapping.len() != rep.order() || self.vertices.len() != rep.order() {
            return false;
        }
        let image: VertexSet = self.mapping.values().copied().collect();
        if image != self.vertices || !rep.vertices().all(|v| self.mapping.contains_key(&v)) {
            return false;
        }
        if !self.vertices.iter().all(|v| host.has_vertex(v)) {
            return false;
        }
        let labels = rep.labels();
        for (i, &a) in labels.iter().enumerate() {
            for &b in &labels[i + 1..] {
                if rep.has_edge(a, b) != host.has_edge(self.mapping[&a], self.mapping[&b]) {
                    return false;
                }
            }
        }
        true
    }
}

fn check_order(g: &Graph, what: &'static str, max: usize) -> Result<()> {
    if g.order() > max {
        return Err(Error::too_large(what, max, g.order()));
    }
    Ok(())
}

/// Whether `mask` induces a chordless cycle (at least three vertices).
fn induces_cycle(adj: &[u64], mask: u64) -> bool {
    mask.count_ones() >= 3
        && ones(mask).all(|v| bits::degree_in(adj, mask, v) == 2)
        && bits::is_connected(adj, mask)
}

/// Dense vertices of an induced cycle in cycle order: from the least
/// vertex toward its smaller neighbour.
fn cycle_order(adj: &[u64], mask: u64) -> Vec<usize> {
    let start = mask.trailing_zeros() as usize;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = (adj[start] & mask).trailing_zeros() as usize;
    while cur != start {
        order.push(cur);
        let next = (adj[cur] & mask & !bit(prev)).trailing_zeros() as usize;
        prev = cur;
        cur = next;
    }
    order
}

fn cycle_witness(g: &Graph, mask: u64) -> ObstructionWitness {
    let order = cycle_order(g.adj(), mask);
    ObstructionWitness {
        name: ObstructionName::Cycle(order.len()),
        vertices: g.labels_of(mask),
        mapping: order
            .iter()
            .enumerate()
            .map(|(k, &i)| (k as Vertex + 1, g.labels()[i]))
            .collect(),
    }
}

fn sporadic_witness(g: &Graph, mask: u64) -> Option<ObstructionWitness> {
    let k = mask.count_ones() as usize;
    if k != 5 && k != 6 {
        return None;
    }
    let sub = g.induced_by_mask(mask);
    let degrees = sub.degree_sequence();
    let mut sub_labeling = None;
    for s in sporadics() {
        if s.graph.order() != k || s.degrees != degrees {
            continue;
        }
        let lab = match &sub_labeling {
            Some(l) => l,
            None => sub_labeling.insert(canonical_labeling(&sub).expect("small")),
        };
        if lab.key != s.key {
            continue;
        }
        let rep_lab = canonical_labeling(&s.graph).expect("small");
        let mapping = rep_lab
            .order
            .iter()
            .zip(&lab.order)
            .map(|(&r, &h)| (s.graph.labels()[r], sub.labels()[h]))
            .collect();
        return Some(ObstructionWitness {
            name: s.name,
            vertices: sub.vertex_set(),
            mapping,
        });
    }
    None
}

/// The catalog name of `g` itself, if `g` is isomorphic to an obstruction.
pub fn catalog_name(g: &Graph) -> Result<Option<ObstructionName>> {
    let all = g.full_mask();
    if g.order() >= 5 && induces_cycle(g.adj(), all) {
        return Ok(Some(ObstructionName::Cycle(g.order())));
    }
    check_order(g, "catalog lookup", MAX_WITNESS_ORDER)?;
    Ok(sporadic_witness(g, all).map(|w| w.name))
}

/// Vertex set of a chordless cycle of length at least `min_len`, searching
/// subsets by increasing size and then lexicographically.
pub fn find_long_induced_cycle(g: &Graph, min_len: usize) -> Result<Option<VertexSet>> {
    check_order(g, "induced cycle search", MAX_WITNESS_ORDER)?;
    let adj = g.adj();
    let all = g.full_mask();
    for k in min_len.max(3)..=g.order() {
        if let Some(m) = bits::subsets_lex(all, k).find(|&m| induces_cycle(adj, m)) {
            return Ok(Some(g.labels_of(m)));
        }
    }
    Ok(None)
}

/// First induced copy of a sporadic catalog graph, by subset order and then
/// catalog order.
pub fn find_catalog_obstruction(g: &Graph) -> Result<Option<ObstructionWitness>> {
    check_order(g, "catalog obstruction search", MAX_WITNESS_ORDER)?;
    let all = g.full_mask();
    for k in 5..=6.min(g.order()) {
        if let Some(w) = bits::subsets_lex(all, k).find_map(|m| sporadic_witness(g, m)) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Smallest forbidden induced subgraph of `g`, or `None` when `g` has none.
///
/// Subsets are visited by increasing size and then lexicographically; at
/// each subset a chordless cycle is preferred over a sporadic match.
pub fn obstruction_witness(g: &Graph) -> Result<Option<ObstructionWitness>> {
    check_order(g, "witness search", MAX_WITNESS_ORDER)?;
    let adj = g.adj();
    let all = g.full_mask();
    for k in 5..=g.order() {
        for m in bits::subsets_lex(all, k) {
            if induces_cycle(adj, m) {
                return Ok(Some(cycle_witness(g, m)));
            }
            if let Some(w) = sporadic_witness(g, m) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Induced-minor containment with the default visit budget.
pub fn has_induced_minor(g: &Graph, h: &Graph) -> Result<bool> {
    has_induced_minor_with_limit(g, h, DEFAULT_MINOR_VISIT_LIMIT)
}

/// Breadth-first search over the graphs reachable from `g` by vertex
/// deletions and edge contractions, one canonical form per class. Graphs
/// smaller than `h` are never generated. Exceeding `limit` distinct visited
/// classes is an error, never a negative answer.
pub fn has_induced_minor_with_limit(g: &Graph, h: &Graph, limit: usize) -> Result<bool> {
    check_order(g, "induced minor search", MAX_MINOR_ORDER)?;
    check_order(h, "induced minor target", MAX_MINOR_ORDER)?;
    if h.order() > g.order() {
        return Ok(false);
    }
    let target = canonical_key(h)?;
    let start = canonical_key(g)?;
    let mut seen: HashSet<CanonicalKey> = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(key) = queue.pop_front() {
        if key == target {
            return Ok(true);
        }
        if key.order() == h.order() {
            continue;
        }
        let cur = key.to_graph();
        let n = cur.order();
        let all = cur.full_mask();
        let mut children = Vec::with_capacity(n + cur.size());
        for v in 0..n {
            children.push(cur.induced_by_mask(all & !bit(v)));
        }
        for i in 0..n {
            for j in ones(cur.adj()[i] & !bits::full(i + 1)) {
                children.push(cur.contract_dense(i, j));
            }
        }
        for child in children {
            let ck = canonical_key(&child)?;
            if seen.insert(ck) {
                if seen.len() > limit {
                    return Err(Error::ResourceExhausted { limit });
                }
                queue.push_back(ck);
            }
        }
    }
    Ok(false)
}

/// The induced-minor targets: `C5`, the house and `H1`..`H5`.
pub fn minor_targets() -> Vec<CatalogEntry> {
    std::iter::once(long_cycle(5))
        .chain(catalog().into_iter().filter(|e| e.name != ObstructionName::Domino))
        .collect()
}

/// Sesquicograph test by forbidden induced minors.
pub fn is_sesquicograph_by_minor_criterion(g: &Graph) -> Result<bool> {
    check_order(g, "minor criterion", MAX_MINOR_CRITERION_ORDER)?;
    for t in minor_targets() {
        if has_induced_minor(g, &t.graph)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::recognition::is_sesquicograph;

    fn entry(name: ObstructionName) -> Graph {
        representative(name)
    }

    #[test]
    fn catalog_sizes() {
        let sizes: Vec<(String, usize, usize)> = catalog()
            .iter()
            .map(|e| (e.name.to_string(), e.graph.order(), e.graph.size()))
            .collect();
        let expected = [
            ("house", 5, 6),
            ("domino", 6, 7),
            ("H1", 6, 10),
            ("H2", 6, 9),
            ("H3", 6, 8),
            ("H4", 6, 9),
            ("H5", 6, 9),
        ];
        for (got, want) in sizes.iter().zip(expected) {
            assert_eq!((got.0.as_str(), got.1, got.2), want);
        }
    }

    #[test]
    fn catalog_is_pairwise_non_isomorphic() {
        let c = catalog();
        for (i, a) in c.iter().enumerate() {
            for b in &c[i + 1..] {
                assert!(!are_isomorphic(&a.graph, &b.graph).unwrap(), "{} ~ {}", a.name, b.name);
            }
        }
        assert!(!are_isomorphic(&entry(ObstructionName::H2), &entry(ObstructionName::H4)).unwrap());
    }

    #[test]
    fn house_is_complement_of_p5() {
        let p5 = Graph::path(5);
        assert!(are_isomorphic(&entry(ObstructionName::House), &p5.complement()).unwrap());
    }

    #[test]
    fn names_round_trip() {
        for name in ["C5", "C12", "house", "domino", "H1", "H5"] {
            assert_eq!(name.parse::<ObstructionName>().unwrap().to_string(), name);
        }
        assert!("C4".parse::<ObstructionName>().is_err());
        assert!("H6".parse::<ObstructionName>().is_err());
    }

    #[test]
    fn long_cycle_examples() {
        let c6 = Graph::cycle(6);
        assert_eq!(find_long_induced_cycle(&c6, 5).unwrap(), Some(c6.vertex_set()));
        assert_eq!(find_long_induced_cycle(&Graph::complete(4), 5).unwrap(), None);
        assert_eq!(find_long_induced_cycle(&entry(ObstructionName::House), 5).unwrap(), None);
        assert_eq!(
            find_long_induced_cycle(&entry(ObstructionName::House), 4).unwrap(),
            Some(VertexSet::from([2, 3, 4, 5]))
        );
        assert!(matches!(
            find_long_induced_cycle(&Graph::empty(11), 5),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn catalog_obstruction_examples() {
        let house = entry(ObstructionName::House);
        let w = find_catalog_obstruction(&house).unwrap().unwrap();
        assert_eq!(w.name, ObstructionName::House);
        assert_eq!(w.vertices, house.vertex_set());
        assert!(w.verify(&house));

        let domino = entry(ObstructionName::Domino);
        let w = find_catalog_obstruction(&domino).unwrap().unwrap();
        assert_eq!(w.name, ObstructionName::Domino);
        assert!(w.verify(&domino));

        assert_eq!(find_catalog_obstruction(&Graph::cycle(5)).unwrap(), None);
    }

    #[test]
    fn witness_examples() {
        let host = entry(ObstructionName::House)
            .zero_sum(&Graph::new([9], []).unwrap())
            .unwrap();
        let w = obstruction_witness(&host).unwrap().unwrap();
        assert_eq!(w.name, ObstructionName::House);
        assert!(w.verify(&host));
        assert_eq!(obstruction_witness(&Graph::path(7)).unwrap(), None);

        let c7 = Graph::cycle(7);
        let w = obstruction_witness(&c7).unwrap().unwrap();
        assert_eq!(w.name, ObstructionName::Cycle(7));
        assert_eq!(w.mapping[&1], 0);
        assert_eq!(w.mapping[&2], 1);
        assert!(w.verify(&c7));
    }

    #[test]
    fn witness_json_schema() {
        let w = obstruction_witness(&Graph::cycle(5)).unwrap().unwrap();
        let v = serde_json::to_value(&w).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "name": "C5",
                "vertices": [0, 1, 2, 3, 4],
                "mapping": {"1": 0, "2": 1, "3": 2, "4": 3, "5": 4}
            })
        );
        let back: ObstructionWitness = serde_json::from_value(v).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn tampered_witness_fails_verification() {
        let c5 = Graph::cycle(5);
        let mut w = obstruction_witness(&c5).unwrap().unwrap();
        w.mapping.insert(2, 2);
        w.mapping.insert(3, 1);
        assert!(!w.verify(&c5));
    }

    #[test]
    fn catalog_members_are_minimal() {
        let mut all = catalog();
        all.extend((5..=8).map(long_cycle));
        for e in all {
            assert!(!is_sesquicograph(&e.graph), "{} accepted", e.name);
            for v in e.graph.vertices() {
                assert!(is_sesquicograph(&e.graph.remove_vertex(v).unwrap()), "{} - {v}", e.name);
            }
        }
    }

    #[test]
    fn induced_minor_examples() {
        assert!(has_induced_minor(&Graph::cycle(7), &Graph::cycle(5)).unwrap());
        assert!(has_induced_minor(&entry(ObstructionName::Domino), &entry(ObstructionName::House)).unwrap());
        assert!(!has_induced_minor(&Graph::cycle(4), &Graph::cycle(5)).unwrap());
        assert!(!has_induced_minor(&Graph::complete(5), &Graph::cycle(4)).unwrap());
        assert!(matches!(
            has_induced_minor(&Graph::empty(9), &Graph::cycle(5)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn minor_budget_is_an_error_not_a_no() {
        let r = has_induced_minor_with_limit(&Graph::cycle(8), &Graph::complete(3), 2);
        assert_eq!(r, Err(Error::ResourceExhausted { limit: 2 }));
    }

    #[test]
    fn minor_criterion_examples() {
        assert!(!is_sesquicograph_by_minor_criterion(&Graph::cycle(6)).unwrap());
        assert!(is_sesquicograph_by_minor_criterion(&Graph::complete(5)).unwrap());
        assert!(matches!(
            is_sesquicograph_by_minor_criterion(&Graph::empty(8)),
            Err(Error::TooLarge { .. })
        ));
    }
}
