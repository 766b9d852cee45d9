//! Canonical labeling by partition refinement and individualization.
//!
//! The vertex partition is refined until equitable (every vertex in a cell has
//! the same number of neighbors in every cell), then the search individualizes
//! each vertex of the first non-singleton cell in turn and recurses. Every
//! discrete leaf gives a relabeling; the one whose upper-triangle bit string is
//! lexicographically largest is canonical. Vertices in the branching cell that
//! are twins of an already tried vertex are skipped: swapping two twins is an
//! automorphism that fixes everything individualized so far, so their subtrees
//! produce the same leaves.
//!
//! This is adequate for the small graphs it is used on (up to a dozen or so
//! vertices); it does no general automorphism pruning.

use crate::bitset::{and_count, VertexSet};
use crate::graph::Graph;
use crate::graph6::to_graph6;

type Cells = Vec<Vec<usize>>;

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<VertexSet> = cells
            .iter()
            .map(|c| VertexSet::from_indices(g.n(), c.iter().copied()))
            .collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|m| and_count(g.row(v), m.words())).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut group = vec![keyed[0].1];
            for w in keyed.windows(2) {
                if w[0].0 != w[1].0 {
                    next.push(std::mem::take(&mut group));
                }
                group.push(w[1].1);
            }
            next.push(group);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn leaf_key(g: &Graph, at: &[usize]) -> Vec<u64> {
    let n = at.len();
    let bits = n * n.saturating_sub(1) / 2;
    let mut key = vec![0u64; bits.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(at[i], at[j]) {
                key[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    key
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let (ru, rv) = (g.row(u), g.row(v));
    ru.iter().zip(rv).enumerate().all(|(w, (&a, &b))| {
        let mut mask = !0u64;
        if u / 64 == w {
            mask &= !(1 << (u % 64));
        }
        if v / 64 == w {
            mask &= !(1 << (v % 64));
        }
        a & mask == b & mask
    })
}

struct Best {
    key: Vec<u64>,
    at: Vec<usize>,
}

fn search(g: &Graph, cells: Cells, best: &mut Option<Best>) {
    let cells = refine(g, cells);
    let Some(t) = cells.iter().position(|c| c.len() > 1) else {
        let at: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let key = leaf_key(g, &at);
        if best.as_ref().is_none_or(|b| key > b.key) {
            *best = Some(Best { key, at });
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[t] {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..t]);
        child.push(vec![v]);
        child.push(cells[t].iter().copied().filter(|&w| w != v).collect());
        child.extend_from_slice(&cells[t + 1..]);
        search(g, child, best);
    }
}

/// `labeling[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut best = None;
    search(g, vec![(0..g.n()).collect()], &mut best);
    let at = best.expect("search reaches a leaf").at;
    let mut labeling = vec![0; g.n()];
    for (pos, &v) in at.iter().enumerate() {
        labeling[v] = pos;
    }
    labeling
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

/// graph6 string of the canonical relabeling; equal iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> String {
    to_graph6(&canonical_graph(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}
