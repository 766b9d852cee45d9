//! Odd cycles, bipartiteness and 5-cycles.
//!
//! Cycle witnesses are normalized so the least vertex comes first and the
//! second vertex is smaller than the last. Among all cycles of the requested
//! length the lexicographically least normalized sequence is returned, which
//! makes witnesses independent of traversal details.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bitset::{Iter, VertexSet};
use crate::graph::{Graph, VertexId};

/// A cycle given by its cyclic vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(pub Vec<VertexId>);

impl Cycle {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    /// Distinct vertices with consecutive (cyclic) pairs adjacent in `g`.
    pub fn is_cycle_in(&self, g: &Graph) -> bool {
        let k = self.0.len();
        if k < 3 || self.0.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut seen = VertexSet::new(g.n());
        self.0.iter().all(|&v| seen.insert(v)) && (0..k).all(|i| g.has_edge(self.0[i], self.0[(i + 1) % k]))
    }

    /// No edges between non-consecutive cycle vertices.
    pub fn is_chordless_in(&self, g: &Graph) -> bool {
        let k = self.0.len();
        (0..k).all(|i| {
            (i + 2..k)
                .filter(|&j| !(i == 0 && j == k - 1))
                .all(|j| !g.has_edge(self.0[i], self.0[j]))
        })
    }
}

/// BFS distances from `s` inside the vertex set `allowed` (which contains `s`).
fn distances_within(g: &Graph, s: VertexId, allowed: &VertexSet) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbor_iter(u) {
            if dist[w] == usize::MAX && allowed.contains(w) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Length of a shortest odd cycle, `None` for bipartite graphs.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    let all = VertexSet::full(g.n());
    let mut best: Option<usize> = None;
    for s in 0..g.n() {
        let dist = distances_within(g, s, &all);
        for (u, v) in g.edges() {
            if dist[u] != usize::MAX && dist[u] == dist[v] {
                let len = 2 * dist[u] + 1;
                if best.is_none_or(|b| len < b) {
                    best = Some(len);
                }
            }
        }
        if best == Some(3) {
            break;
        }
    }
    best
}

struct CycleSearch<'a> {
    g: &'a Graph,
    len: usize,
    start: VertexId,
    allowed: VertexSet,
    dist: Vec<usize>,
    path: Vec<VertexId>,
    on_path: VertexSet,
}

impl<'a> CycleSearch<'a> {
    fn new(g: &'a Graph, len: usize, start: VertexId) -> Self {
        let allowed = VertexSet::from_indices(g.n(), start..g.n());
        let dist = distances_within(g, start, &allowed);
        let mut on_path = VertexSet::new(g.n());
        on_path.insert(start);
        Self {
            g,
            len,
            start,
            allowed,
            dist,
            path: vec![start],
            on_path,
        }
    }

    /// Visits every normalized cycle through `start` (as least vertex) in
    /// lexicographic order; `visit` returns `true` to stop.
    fn run(&mut self, visit: &mut dyn FnMut(&[VertexId]) -> bool) -> bool {
        let depth = self.path.len();
        let last = *self.path.last().expect("path starts non-empty");
        if depth == self.len - 1 {
            // Close the cycle: the final vertex must see both ends.
            let lower = self.path[1];
            let closing: Vec<u64> = self
                .g
                .row(last)
                .iter()
                .zip(self.g.row(self.start))
                .map(|(a, b)| a & b)
                .collect();
            for c in Iter::new(&closing) {
                if c > lower && !self.on_path.contains(c) && self.allowed.contains(c) {
                    self.path.push(c);
                    let stop = visit(&self.path);
                    self.path.pop();
                    if stop {
                        return true;
                    }
                }
            }
            return false;
        }
        let remaining = self.len - depth;
        let candidates: Vec<VertexId> = self.g.neighbor_iter(last).collect();
        for c in candidates {
            if c <= self.start || self.on_path.contains(c) || self.dist[c] > remaining {
                continue;
            }
            self.path.push(c);
            self.on_path.insert(c);
            let stop = self.run(visit);
            self.on_path.remove(c);
            self.path.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

/// Lexicographically least normalized cycle of exactly `len` vertices.
pub fn find_cycle_of_length(g: &Graph, len: usize) -> Option<Cycle> {
    assert!(len >= 3, "cycles have at least three vertices");
    for s in 0..g.n() {
        let mut found = None;
        CycleSearch::new(g, len, s).run(&mut |p| {
            found = Some(p.to_vec());
            true
        });
        if let Some(p) = found {
            return Some(Cycle(p));
        }
    }
    None
}

/// Every cycle of exactly `len` vertices, each once, in lexicographic order.
pub fn cycles_of_length(g: &Graph, len: usize) -> Vec<Cycle> {
    assert!(len >= 3, "cycles have at least three vertices");
    let mut out = Vec::new();
    for s in 0..g.n() {
        CycleSearch::new(g, len, s).run(&mut |p| {
            out.push(Cycle(p.to_vec()));
            false
        });
    }
    out
}

/// All chordless 5-cycles as `[v1, .., v5]`.
pub fn induced_five_cycles(g: &Graph) -> Vec<[VertexId; 5]> {
    cycles_of_length(g, 5)
        .into_iter()
        .filter(|c| c.is_chordless_in(g))
        .map(|c| c.0.try_into().expect("five vertices"))
        .collect()
}

/// Shortest odd cycle; chord-free by minimality. `None` iff `g` is bipartite.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Cycle> {
    let len = odd_girth(g)?;
    let c = find_cycle_of_length(g, len).expect("odd girth is realized by a cycle");
    debug_assert!(c.is_chordless_in(g));
    Some(c)
}

/// Any 5-cycle subgraph (not necessarily induced).
pub fn find_five_cycle(g: &Graph) -> Option<[VertexId; 5]> {
    find_cycle_of_length(g, 5).map(|c| c.0.try_into().expect("five vertices"))
}

pub fn is_c5_free(g: &Graph) -> bool {
    find_five_cycle(g).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bipartiteness {
    /// Color (0 or 1) per vertex; the least vertex of every component gets 0.
    Bipartite(Vec<u8>),
    OddCycle(Cycle),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }

    pub fn coloring(&self) -> Option<&[u8]> {
        match self {
            Bipartiteness::Bipartite(c) => Some(c),
            Bipartiteness::OddCycle(_) => None,
        }
    }
}

/// Two-coloring by BFS, or the shortest odd cycle.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let mut color = vec![u8::MAX; g.n()];
    let mut queue = VecDeque::new();
    for root in 0..g.n() {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbor_iter(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    let c = shortest_odd_cycle(g).expect("monochromatic edge implies an odd cycle");
                    return Bipartiteness::OddCycle(c);
                }
            }
        }
    }
    Bipartiteness::Bipartite(color)
}

/// Checks that `coloring` properly 2-colors `g`.
pub fn is_proper_two_coloring(g: &Graph, coloring: &[u8]) -> bool {
    coloring.len() == g.n()
        && coloring.iter().all(|&c| c <= 1)
        && g.edges().all(|(u, v)| coloring[u] != coloring[v])
}

/// `true` if some vertex of `vs` is adjacent to `v`.
pub(crate) fn touches(g: &Graph, v: VertexId, vs: &VertexSet) -> bool {
    g.row(v).iter().zip(vs.words()).any(|(a, b)| a & b != 0)
}
