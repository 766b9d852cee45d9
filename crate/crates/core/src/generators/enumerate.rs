//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! Level `n` is built from the representatives of level `n - 1` by adding one
//! vertex with every admissible neighborhood, then keeping one graph per
//! canonical form. Deleting a vertex from any graph of the family gives a
//! graph of the family on one vertex fewer (both families are hereditary), so
//! every isomorphism class is reached. Workers shard by parent graph; the
//! merged level is sorted by canonical string so output does not depend on
//! scheduling.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::GeneratorError;
use crate::generators::canon::{canonical_form, canonical_graph};
use crate::graph::Graph;
use crate::graph6::from_graph6;

pub const MAX_TRIANGLE_FREE_N: usize = 10;
pub const MAX_ALL_GRAPHS_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Named(String),
    Blowup(String),
    Random { seed: u64 },
    Enumerated { index: usize },
    File { line: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusItem {
    pub graph: Graph,
    pub provenance: Provenance,
    /// graph6 of the canonical relabeling.
    pub canonical: String,
}

impl CorpusItem {
    pub fn new(graph: Graph, provenance: Provenance) -> Self {
        let canonical = canonical_form(&graph);
        Self {
            graph,
            provenance,
            canonical,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    TriangleFree,
    All,
}

impl Family {
    fn max_n(self) -> usize {
        match self {
            Family::TriangleFree => MAX_TRIANGLE_FREE_N,
            Family::All => MAX_ALL_GRAPHS_N,
        }
    }
}

fn children(parent: &Graph, family: Family) -> Vec<(String, Graph)> {
    let m = parent.n();
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let nbrs = VertexSet::from_indices(m, (0..m).filter(|&v| mask >> v & 1 == 1));
        if family == Family::TriangleFree
            && nbrs.iter().any(|v| parent.row(v).iter().zip(nbrs.words()).any(|(a, b)| a & b != 0))
        {
            continue;
        }
        let child = parent.with_vertex(&nbrs).expect("small graph");
        let canon = canonical_graph(&child);
        out.push((crate::graph6::to_graph6(&canon), canon));
    }
    out
}

fn next_level(prev: &[Graph], family: Family) -> Vec<Graph> {
    let found: BTreeMap<String, Graph> = prev
        .par_iter()
        .map(|p| children(p, family))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    found.into_values().collect()
}

/// Canonical representatives for every `n` in `1..=max_n`; entry `k` holds
/// the graphs on `k + 1` vertices sorted by canonical string.
pub fn enumerate_levels(family: Family, max_n: usize) -> Result<Vec<Vec<CorpusItem>>, GeneratorError> {
    if max_n == 0 || max_n > family.max_n() {
        return Err(GeneratorError::OutOfRange {
            n: max_n,
            min: 1,
            max: family.max_n(),
        });
    }
    let mut levels = vec![vec![Graph::empty(1)?]];
    while levels.len() < max_n {
        let next = next_level(levels.last().expect("non-empty"), family);
        levels.push(next);
    }
    Ok(levels
        .into_iter()
        .map(|graphs| {
            graphs
                .into_iter()
                .enumerate()
                .map(|(index, graph)| CorpusItem {
                    canonical: crate::graph6::to_graph6(&graph),
                    graph,
                    provenance: Provenance::Enumerated { index },
                })
                .collect()
        })
        .collect())
}

/// One representative per isomorphism class of triangle-free graphs on `n`
/// vertices, `1 <= n <= 10`.
pub fn enumerate_triangle_free(n: usize) -> Result<Vec<CorpusItem>, GeneratorError> {
    Ok(enumerate_levels(Family::TriangleFree, n)?.pop().expect("n >= 1"))
}

/// One representative per isomorphism class of all graphs on `n` vertices,
/// `1 <= n <= 8`.
pub fn enumerate_all_graphs(n: usize) -> Result<Vec<CorpusItem>, GeneratorError> {
    Ok(enumerate_levels(Family::All, n)?.pop().expect("n >= 1"))
}

/// Reads canonical items back from graph6 strings.
pub fn items_from_graph6_lines(text: &str) -> Result<Vec<CorpusItem>, GeneratorError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| Ok(CorpusItem::new(from_graph6(l.trim())?, Provenance::File { line: i + 1 })))
        .collect()
}
