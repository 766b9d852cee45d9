//! Graph homomorphisms and blow-ups.
//!
//! [`find_homomorphism`] is an exhaustive backtracking search that works
//! independently of the constructive C5 map in [`crate::structure`], so the
//! two can be cross-checked.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bitset::{Iter, VertexSet};
use crate::embedding::search_order;
use crate::error::{BlowupError, HomomorphismError};
use crate::graph::{Graph, GraphBuilder, VertexId};

/// Image of every source vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomMap(pub Vec<VertexId>);

impl HomMap {
    pub fn assignment(&self) -> &[VertexId] {
        &self.0
    }

    pub fn image(&self, v: VertexId) -> VertexId {
        self.0[v]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomCheck {
    Valid,
    /// First source edge (in [`Graph::edges`] order) whose image is not an edge.
    Counterexample { edge: (VertexId, VertexId) },
}

impl HomCheck {
    pub fn is_valid(self) -> bool {
        self == HomCheck::Valid
    }
}

pub fn verify_homomorphism(g: &Graph, h: &Graph, m: &HomMap) -> Result<HomCheck, HomomorphismError> {
    if m.0.len() != g.n() {
        return Err(HomomorphismError::WrongLength {
            expected: g.n(),
            found: m.0.len(),
        });
    }
    if let Some((v, &t)) = m.0.iter().enumerate().find(|(_, &t)| t >= h.n()) {
        return Err(HomomorphismError::TargetOutOfRange {
            source_vertex: v,
            target: t,
            n: h.n(),
        });
    }
    Ok(g.edges()
        .find(|&(u, v)| !h.has_edge(m.0[u], m.0[v]))
        .map_or(HomCheck::Valid, |edge| HomCheck::Counterexample { edge }))
}

/// Backtracking with forward checking: every unassigned neighbor of an
/// assigned vertex keeps a domain of still-compatible targets.
struct HomSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<VertexId>,
    domains: Vec<VertexSet>,
    image: Vec<Option<VertexId>>,
}

impl HomSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let targets: Vec<VertexId> = self.domains[p].iter().collect();
        for t in targets {
            self.image[p] = Some(t);
            let mut saved = Vec::new();
            let mut dead = false;
            for q in self.g.neighbor_iter(p) {
                if self.image[q].is_some() {
                    continue;
                }
                saved.push((q, self.domains[q].clone()));
                self.domains[q].intersect_with(self.h.row(t));
                if self.domains[q].is_empty() {
                    dead = true;
                    break;
                }
            }
            if !dead && self.extend(depth + 1) {
                return true;
            }
            for (q, d) in saved.into_iter().rev() {
                self.domains[q] = d;
            }
            self.image[p] = None;
        }
        false
    }
}

/// Plain backtracking over all of `g`, without twin reduction.
pub fn find_homomorphism_unreduced(g: &Graph, h: &Graph) -> Option<HomMap> {
    if g.n() == 0 {
        return Some(HomMap(Vec::new()));
    }
    if h.n() == 0 || (g.edge_count() > 0 && h.edge_count() == 0) {
        return None;
    }
    let mut s = HomSearch {
        g,
        h,
        order: search_order(g),
        domains: vec![VertexSet::full(h.n()); g.n()],
        image: vec![None; g.n()],
    };
    s.extend(0)
        .then(|| HomMap(s.image.into_iter().map(|t| t.expect("complete map")).collect()))
}

/// Searches for a homomorphism `g -> h`.
///
/// Non-adjacent twins may always share an image, so the search runs on one
/// representative per twin class and copies the image to the rest.
pub fn find_homomorphism(g: &Graph, h: &Graph) -> Option<HomMap> {
    let classes = twin_classes(g);
    let reps = class_representatives(&classes);
    let quotient = g
        .induced_subgraph(&VertexSet::from_indices(g.n(), reps.iter().copied()))
        .expect("representatives are vertices of g");
    let m = find_homomorphism_unreduced(&quotient, h)?;
    Some(HomMap(classes.iter().map(|&c| m.0[c]).collect()))
}

/// Class index of every vertex, grouping vertices with identical open
/// neighborhoods. Classes are numbered by their least vertex.
pub fn twin_classes(g: &Graph) -> Vec<usize> {
    let mut seen: HashMap<&[u64], usize> = HashMap::new();
    (0..g.n())
        .map(|v| {
            let next = seen.len();
            *seen.entry(g.row(v)).or_insert(next)
        })
        .collect()
}

fn class_representatives(classes: &[usize]) -> Vec<VertexId> {
    let mut reps = Vec::new();
    for (v, &c) in classes.iter().enumerate() {
        if c == reps.len() {
            reps.push(v);
        }
    }
    reps
}

/// A pattern graph and one part size per pattern vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupSpec {
    pub pattern: Graph,
    pub sizes: Vec<usize>,
}

impl BlowupSpec {
    pub fn new(pattern: Graph, sizes: Vec<usize>) -> Result<Self, BlowupError> {
        if pattern.n() == 0 {
            return Err(BlowupError::EmptyPattern);
        }
        if sizes.len() != pattern.n() {
            return Err(BlowupError::SizeCount {
                sizes: sizes.len(),
                pattern: pattern.n(),
            });
        }
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(BlowupError::ZeroSize(i));
        }
        Ok(Self { pattern, sizes })
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Part sizes differ by at most one.
    pub fn is_balanced(&self) -> bool {
        match (self.sizes.iter().min(), self.sizes.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }
}

/// Replaces pattern vertex `i` by an independent set of `sizes[i]` vertices
/// and every pattern edge by a complete bipartite graph. Parts are laid out
/// consecutively; the second value gives each vertex's part.
pub fn blow_up(spec: &BlowupSpec) -> Result<(Graph, Vec<usize>), BlowupError> {
    let spec = BlowupSpec::new(spec.pattern.clone(), spec.sizes.clone())?;
    let parts: Vec<usize> = spec
        .sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let n = parts.len();
    let mut b = GraphBuilder::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if spec.pattern.has_edge(parts[u], parts[v]) {
                b.set(u, v);
            }
        }
    }
    Ok((b.build(), parts))
}

/// Sizes `⌈n/k⌉` for the first `n mod k` parts, `⌊n/k⌋` after.
pub fn balanced_sizes(k: usize, n: usize) -> Result<Vec<usize>, BlowupError> {
    if k == 0 {
        return Err(BlowupError::EmptyPattern);
    }
    if n < k {
        return Err(BlowupError::TooFewVertices { n, parts: k });
    }
    Ok((0..k).map(|i| n / k + usize::from(i < n % k)).collect())
}

pub fn balanced_blow_up(pattern: &Graph, n: usize) -> Result<(Graph, Vec<usize>), BlowupError> {
    let sizes = balanced_sizes(pattern.n(), n)?;
    blow_up(&BlowupSpec::new(pattern.clone(), sizes)?)
}

/// Result of reading a graph as a blow-up of its twin quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recognition {
    pub spec: BlowupSpec,
    /// Part (pattern vertex) of every vertex of the input graph.
    pub parts: Vec<usize>,
}

/// Partitions the vertices into maximal twin classes and returns the
/// quotient. When the quotient is a cycle it is relabeled along the cycle,
/// choosing the rotation and direction with the lexicographically least size
/// sequence, so the pattern is exactly `0-1-...-(k-1)-0`.
pub fn recognize_blow_up(g: &Graph) -> Recognition {
    let classes = twin_classes(g);
    let reps = class_representatives(&classes);
    let k = reps.len();
    let mut sizes = vec![0usize; k];
    for &c in &classes {
        sizes[c] += 1;
    }
    let pattern = Graph::from_fn(k, |a, b| g.has_edge(reps[a], reps[b])).expect("quotient is smaller than g");

    if let Some(cyc) = cycle_order(&pattern) {
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for start in 0..k {
            for dir in [1, k - 1] {
                let seq: Vec<usize> = (0..k).map(|i| cyc[(start + dir * i) % k]).collect();
                let key: Vec<usize> = seq.iter().map(|&c| sizes[c]).collect();
                if best.as_ref().is_none_or(|(bk, _)| key < *bk) {
                    best = Some((key, seq));
                }
            }
        }
        let (sizes, seq) = best.expect("cycle has vertices");
        let mut relabel = vec![0; k];
        for (pos, &c) in seq.iter().enumerate() {
            relabel[c] = pos;
        }
        let pattern = Graph::from_fn(k, |a, b| (a + 1) % k == b || (b + 1) % k == a).expect("small cycle");
        return Recognition {
            spec: BlowupSpec { pattern, sizes },
            parts: classes.iter().map(|&c| relabel[c]).collect(),
        };
    }

    Recognition {
        spec: BlowupSpec { pattern, sizes },
        parts: classes,
    }
}

/// Vertices of `g` in cyclic order when `g` is a single cycle.
fn cycle_order(g: &Graph) -> Option<Vec<VertexId>> {
    let k = g.n();
    if k < 3 || (0..k).any(|v| g.degree(v) != 2) {
        return None;
    }
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    loop {
        let next = Iter::new(g.row(cur)).find(|&w| w != prev).expect("degree two");
        if next == 0 {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order.len() == k).then_some(order)
}
