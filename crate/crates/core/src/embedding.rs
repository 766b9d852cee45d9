//! Subgraph containment by backtracking.

use crate::bitset::{Iter, VertexSet};
use crate::graph::{Graph, VertexId};

/// Pattern vertices in search order: highest degree first, then repeatedly the
/// vertex with the most already-ordered neighbors (ties: degree, then index).
pub(crate) fn search_order(h: &Graph) -> Vec<VertexId> {
    let n = h.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (links[a], h.degree(a))
                    .cmp(&(links[b], h.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for w in h.neighbor_iter(next) {
            links[w] += 1;
        }
    }
    order
}

struct Embedder<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<VertexId>,
    image: Vec<Option<VertexId>>,
    used: VertexSet,
}

impl Embedder<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let need = self.h.degree(p);
        let mut cand = VertexSet::full(self.g.n());
        for q in self.h.neighbor_iter(p) {
            if let Some(img) = self.image[q] {
                cand.intersect_with(self.g.row(img));
            }
        }
        cand.difference_with(&self.used);
        let cand: Vec<VertexId> = Iter::new(cand.words()).filter(|&c| self.g.degree(c) >= need).collect();
        for c in cand {
            self.image[p] = Some(c);
            self.used.insert(c);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(c);
            self.image[p] = None;
        }
        false
    }
}

/// Injective edge-preserving map from `h` into `g` (not necessarily induced).
/// Entry `i` of the result is the image of pattern vertex `i`.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> Option<Vec<VertexId>> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return None;
    }
    let mut e = Embedder {
        g,
        h,
        order: search_order(h),
        image: vec![None; h.n()],
        used: VertexSet::new(g.n()),
    };
    e.extend(0)
        .then(|| e.image.into_iter().map(|v| v.expect("complete embedding")).collect())
}

/// Checks injectivity and edge preservation of `embedding: V(h) -> V(g)`.
pub fn is_subgraph_embedding(g: &Graph, h: &Graph, embedding: &[VertexId]) -> bool {
    if embedding.len() != h.n() || embedding.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = VertexSet::new(g.n());
    embedding.iter().all(|&v| seen.insert(v)) && h.edges().all(|(a, b)| g.has_edge(embedding[a], embedding[b]))
}
