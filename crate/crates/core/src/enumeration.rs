//! Isomorph-free generation of small graphs and the sweeps built on it:
//! the search for induced-subgraph-minimal non-sesquicographs and the
//! exhaustive cross-checks between the recognizers.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bits::{self, bit, ones};
use crate::canon::{canonical_key, CanonicalKey};
use crate::connectivity::{is_2_connected, is_critically_2_connected, vertex_connectivity};
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::{Graph, Vertex};
use crate::obstructions::{catalog_name, is_sesquicograph_by_minor_criterion, obstruction_witness, ObstructionName};
use crate::par::{self, Execution};
use crate::recognition::{
    decompose_sesquicograph, is_sesquicograph, is_sesquicograph_by_subgraph_criterion, is_sesquicograph_mask,
};

/// Largest order generated without opting in.
pub const DEFAULT_MAX_GENERATED_ORDER: usize = 7;
/// Largest order generated at all.
pub const MAX_GENERATED_ORDER: usize = 8;
/// Largest order for the equivalence and closure sweeps.
pub const MAX_VERIFY_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GenerateOptions {
    /// Permit order 8 (12346 classes; takes noticeably longer).
    pub allow_order_8: bool,
    pub execution: Execution,
}

/// All graphs on `n` vertices up to isomorphism, as canonical keys in
/// increasing order.
///
/// Every graph on `n` vertices is a graph on `n - 1` vertices plus one new
/// vertex, so the classes of order `n` are found by extending each class of
/// order `n - 1` by every possible neighbourhood and deduplicating by
/// canonical form. Workers deduplicate locally before a global merge.
pub fn generate_keys(n: usize, opts: &GenerateOptions) -> Result<Vec<CanonicalKey>> {
    let max = if opts.allow_order_8 {
        MAX_GENERATED_ORDER
    } else {
        DEFAULT_MAX_GENERATED_ORDER
    };
    if n > max {
        return Err(Error::too_large("graph generation", max, n));
    }
    let mut level = vec![canonical_key(&Graph::empty(0))?];
    for m in 1..=n {
        let parents: Vec<Graph> = level.iter().map(|k| k.to_graph()).collect();
        let per_parent = par::map(opts.execution, &parents, extensions);
        let mut merged: HashSet<CanonicalKey> = HashSet::new();
        for local in per_parent {
            merged.extend(local);
        }
        level = merged.into_iter().collect();
        level.sort_unstable();
        debug_assert!(level.iter().all(|k| k.order() == m));
    }
    Ok(level)
}

/// Canonical keys of every one-vertex extension of `parent`.
fn extensions(parent: &Graph) -> HashSet<CanonicalKey> {
    let n = parent.order();
    let mut local = HashSet::new();
    for nbhd in 0..1u64 << n {
        let mut adj: Vec<u64> = parent
            .adj()
            .iter()
            .enumerate()
            .map(|(i, &a)| a | ((nbhd >> i & 1) << n))
            .collect();
        adj.push(nbhd);
        let g = Graph::from_parts((0..=n as Vertex).collect(), adj);
        local.insert(canonical_key(&g).expect("bounded order"));
    }
    local
}

/// Canonical representatives of all graphs on `n` vertices, in canonical
/// key order. Orders above 7 need [`GenerateOptions::allow_order_8`].
pub fn generate_graphs(n: usize) -> Result<Vec<Graph>> {
    generate_graphs_with(n, &GenerateOptions::default())
}

pub fn generate_graphs_with(n: usize, opts: &GenerateOptions) -> Result<Vec<Graph>> {
    Ok(generate_keys(n, opts)?.iter().map(|k| k.to_graph()).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FilterMode {
    /// Test minimality on every generated graph.
    Naive,
    /// Screen by the connectivity dichotomy first, then test minimality.
    #[default]
    Pruned,
}

impl fmt::Display for FilterMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FilterMode::Naive => "naive",
            FilterMode::Pruned => "pruned",
        })
    }
}

impl FromStr for FilterMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "naive" => Ok(FilterMode::Naive),
            "pruned" => Ok(FilterMode::Pruned),
            _ => Err(format!("unknown filter mode {s:?} (expected naive or pruned)")),
        }
    }
}

/// Not a sesquicograph, but every one-vertex deletion is.
pub fn is_minimal_non_sesquicograph(g: &Graph) -> bool {
    let adj = g.adj();
    let all = g.full_mask();
    !is_sesquicograph_mask(adj, all) && ones(all).all(|v| is_sesquicograph_mask(adj, all & !bit(v)))
}

/// Necessary condition for minimality: critically 2-connected, or vertex
/// connectivity two with a complement of vertex connectivity one.
pub fn passes_connectivity_screen(g: &Graph) -> bool {
    is_critically_2_connected(g)
        || (vertex_connectivity(g) == 2 && vertex_connectivity(&g.complement()) == 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    /// `None` when the graphs came from an external list.
    pub order: Option<usize>,
    pub total_graphs: usize,
    /// Graphs that reached the minimality test (all of them in naive mode).
    pub screened: usize,
    pub minimal_obstructions: Vec<Graph>,
    pub elapsed: Duration,
    pub filter_mode: FilterMode,
}

#[derive(Serialize)]
struct ObstructionJson {
    graph6: String,
    name: Option<String>,
}

#[derive(Serialize)]
struct ReportJson {
    order: Option<usize>,
    total_graphs: usize,
    screened: usize,
    filter_mode: FilterMode,
    elapsed_seconds: f64,
    minimal_obstructions: Vec<ObstructionJson>,
}

impl EnumerationReport {
    pub fn to_json(&self) -> Result<serde_json::Value> {
        let minimal_obstructions = self
            .minimal_obstructions
            .iter()
            .map(|g| {
                Ok(ObstructionJson {
                    graph6: to_graph6(g)?,
                    name: catalog_name(g).ok().flatten().map(|n| n.to_string()),
                })
            })
            .collect::<Result<_>>()?;
        Ok(serde_json::to_value(ReportJson {
            order: self.order,
            total_graphs: self.total_graphs,
            screened: self.screened,
            filter_mode: self.filter_mode,
            elapsed_seconds: self.elapsed.as_secs_f64(),
            minimal_obstructions,
        })
        .expect("report serialises"))
    }

    pub fn names(&self) -> Vec<Option<ObstructionName>> {
        self.minimal_obstructions
            .iter()
            .map(|g| catalog_name(g).ok().flatten())
            .collect()
    }
}

/// Minimal non-sesquicographs among all graphs of order `n`.
pub fn minimal_non_sesquicographs(n: usize, mode: FilterMode) -> Result<EnumerationReport> {
    minimal_non_sesquicographs_with(n, mode, &GenerateOptions::default())
}

pub fn minimal_non_sesquicographs_with(
    n: usize,
    mode: FilterMode,
    opts: &GenerateOptions,
) -> Result<EnumerationReport> {
    let start = Instant::now();
    let graphs = generate_graphs_with(n, opts)?;
    let mut report = minimal_non_sesquicographs_among(&graphs, mode, opts.execution);
    report.order = Some(n);
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Minimal non-sesquicographs among an arbitrary list, kept in input order.
/// Duplicates are not removed.
pub fn minimal_non_sesquicographs_among(graphs: &[Graph], mode: FilterMode, exec: Execution) -> EnumerationReport {
    let start = Instant::now();
    let candidates = match mode {
        FilterMode::Naive => graphs.to_vec(),
        FilterMode::Pruned => par::filter(exec, graphs, passes_connectivity_screen),
    };
    let minimal = par::filter(exec, &candidates, is_minimal_non_sesquicograph);
    EnumerationReport {
        order: None,
        total_graphs: graphs.len(),
        screened: candidates.len(),
        minimal_obstructions: minimal,
        elapsed: start.elapsed(),
        filter_mode: mode,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderCount {
    pub order: usize,
    pub graphs: usize,
    pub sesquicographs: usize,
}

/// A graph on which two of the three sesquicograph tests disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub graph6: String,
    pub recognizer: bool,
    pub subgraph_criterion: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub max_order: usize,
    pub per_order: Vec<OrderCount>,
    pub mismatches: Vec<Mismatch>,
}

impl EquivalenceReport {
    pub fn total_graphs(&self) -> usize {
        self.per_order.iter().map(|c| c.graphs).sum()
    }
}

fn check_verify_bound(n_max: usize) -> Result<()> {
    if n_max > MAX_VERIFY_ORDER {
        return Err(Error::too_large("verification sweep", MAX_VERIFY_ORDER, n_max));
    }
    Ok(())
}

/// For every graph on 1 to `n_max` vertices, compares the recognizer with
/// the subgraph criterion and with the absence of a forbidden induced
/// subgraph.
pub fn verify_theorem_equivalence(n_max: usize, exec: Execution) -> Result<EquivalenceReport> {
    check_verify_bound(n_max)?;
    let mut per_order = Vec::new();
    let mut mismatches = Vec::new();
    let opts = GenerateOptions {
        execution: exec,
        ..Default::default()
    };
    for n in 1..=n_max {
        let graphs = generate_graphs_with(n, &opts)?;
        let rows = par::map(exec, &graphs, |g| -> Result<(bool, Option<Mismatch>)> {
            let rec = is_sesquicograph(g);
            let sub = is_sesquicograph_by_subgraph_criterion(g)?;
            let wit = obstruction_witness(g)?;
            if rec == sub && rec == wit.is_none() && wit.as_ref().is_none_or(|w| w.verify(g)) {
                Ok((rec, None))
            } else {
                Ok((
                    rec,
                    Some(Mismatch {
                        graph6: to_graph6(g)?,
                        recognizer: rec,
                        subgraph_criterion: sub,
                        witness: wit.map(|w| w.name.to_string()),
                    }),
                ))
            }
        });
        let mut sesquicographs = 0;
        for row in rows {
            let (rec, mismatch) = row?;
            sesquicographs += rec as usize;
            mismatches.extend(mismatch);
        }
        per_order.push(OrderCount {
            order: n,
            graphs: graphs.len(),
            sesquicographs,
        });
    }
    Ok(EquivalenceReport {
        max_order: n_max,
        per_order,
        mismatches,
    })
}

/// Counterexamples to the closure properties, as graph6 strings.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub max_order: usize,
    pub sesquicographs_checked: usize,
    pub deletions_checked: usize,
    pub contractions_checked: usize,
    /// `graph6 - v` is not a sesquicograph.
    pub deletion_violations: Vec<String>,
    /// `graph6 / uv` is not a sesquicograph.
    pub contraction_violations: Vec<String>,
    /// The certificate does not evaluate back to the graph.
    pub certificate_violations: Vec<String>,
}

impl ClosureReport {
    pub fn violations(&self) -> usize {
        self.deletion_violations.len() + self.contraction_violations.len() + self.certificate_violations.len()
    }
}

/// Closure under vertex deletion and edge contraction, and certificate
/// round trips, for every sesquicograph on 1 to `n_max` vertices.
pub fn verify_closure(n_max: usize, exec: Execution) -> Result<ClosureReport> {
    check_verify_bound(n_max)?;
    let opts = GenerateOptions {
        execution: exec,
        ..Default::default()
    };
    let mut report = ClosureReport {
        max_order: n_max,
        ..Default::default()
    };
    for n in 1..=n_max {
        let graphs = generate_graphs_with(n, &opts)?;
        let sesqui = par::filter(exec, &graphs, is_sesquicograph);
        let rows = par::map(exec, &sesqui, |g| {
            let g6 = to_graph6(g).expect("small");
            let mut del = Vec::new();
            let mut con = Vec::new();
            for v in g.vertices() {
                if !is_sesquicograph(&g.remove_vertex(v).expect("vertex")) {
                    del.push(format!("{g6} - {v}"));
                }
            }
            let edges: Vec<_> = g.edges().collect();
            for &(u, v) in &edges {
                if !is_sesquicograph(&g.contract(u, v).expect("edge")) {
                    con.push(format!("{g6} / {u}{v}"));
                }
            }
            let cert_ok = decompose_sesquicograph(g)
                .tree()
                .is_some_and(|t| t.evaluate().as_ref() == Ok(g));
            (g.order(), edges.len(), del, con, (!cert_ok).then_some(g6))
        });
        report.sesquicographs_checked += sesqui.len();
        for (dels, cons, del, con, cert) in rows {
            report.deletions_checked += dels;
            report.contractions_checked += cons;
            report.deletion_violations.extend(del);
            report.contraction_violations.extend(con);
            report.certificate_violations.extend(cert);
        }
    }
    Ok(report)
}

/// Graphs (graph6) on which the forbidden-induced-minor test disagrees
/// with the recognizer, plus the number of graphs checked.
pub fn verify_minor_equivalence(n_max: usize, exec: Execution) -> Result<(usize, Vec<String>)> {
    if n_max > 6 {
        return Err(Error::too_large("induced-minor sweep", 6, n_max));
    }
    let opts = GenerateOptions {
        execution: exec,
        ..Default::default()
    };
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=n_max {
        let graphs = generate_graphs_with(n, &opts)?;
        let rows = par::map(exec, &graphs, |g| -> Result<Option<String>> {
            let by_minor = is_sesquicograph_by_minor_criterion(g)?;
            (by_minor != is_sesquicograph(g)).then(|| to_graph6(g)).transpose()
        });
        checked += graphs.len();
        for r in rows {
            bad.extend(r?);
        }
    }
    Ok((checked, bad))
}

/// Minimal obstructions must be 2-connected with a connected complement.
pub fn has_minimal_obstruction_shape(g: &Graph) -> bool {
    is_2_connected(g) && bits::is_complement_connected(g.adj(), g.full_mask())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| generate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn order_8_needs_opt_in() {
        assert!(matches!(generate_graphs(8), Err(Error::TooLarge { max: 7, got: 8, .. })));
        let opts = GenerateOptions {
            allow_order_8: true,
            ..Default::default()
        };
        assert!(matches!(generate_keys(9, &opts), Err(Error::TooLarge { max: 8, .. })));
    }

    #[test]
    fn minimal_at_five() {
        for mode in [FilterMode::Naive, FilterMode::Pruned] {
            let r = minimal_non_sesquicographs(5, mode).unwrap();
            assert_eq!(r.minimal_obstructions.len(), 2);
            let mut names = r.names();
            names.sort();
            assert_eq!(names, vec![Some(ObstructionName::Cycle(5)), Some(ObstructionName::House)]);
        }
    }

    #[test]
    fn screen_examples() {
        assert!(passes_connectivity_screen(&Graph::cycle(6)));
        assert!(!passes_connectivity_screen(&Graph::complete(5)));
        assert!(!passes_connectivity_screen(&Graph::path(5)));
    }

    #[test]
    fn filter_mode_parses() {
        assert_eq!("naive".parse::<FilterMode>().unwrap(), FilterMode::Naive);
        assert!("fast".parse::<FilterMode>().is_err());
    }

    #[test]
    fn equivalence_through_six() {
        let r = verify_theorem_equivalence(6, Execution::Parallel).unwrap();
        assert_eq!(r.total_graphs(), 208);
        assert!(r.mismatches.is_empty());
        // every graph on at most four vertices is a sesquicograph
        assert!(r.per_order[..4].iter().all(|c| c.graphs == c.sesquicographs));
    }

    #[test]
    fn verify_bounds() {
        assert!(verify_theorem_equivalence(8, Execution::Sequential).is_err());
        assert!(verify_minor_equivalence(7, Execution::Sequential).is_err());
    }
}
