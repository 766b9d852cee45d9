//! Undirected simple graphs stored as dense adjacency bit rows.
//!
//! Row `v` holds one bit per vertex; bit `u` is set iff `uv` is an edge.
//! The rows are symmetric and irreflexive, so `e(G)` is half of the total
//! population count. Graphs never change after construction: build them with
//! [`GraphBuilder`] or [`Graph::from_edge_list`].

use std::fmt;

use crate::bitset::{and_count, test_bit, words_for, Iter, VertexSet};
use crate::error::GraphError;

/// Positional vertex index, meaningful only relative to one [`Graph`].
pub type VertexId = usize;

/// Largest vertex count the representation accepts.
pub const MAX_VERTICES: usize = 1 << 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, max: MAX_VERTICES });
        }
        let stride = words_for(n);
        Ok(Self {
            n,
            stride,
            rows: vec![0; n * stride],
        })
    }

    /// Duplicate edges collapse; `(u, v)` and `(v, u)` are the same edge.
    pub fn from_edge_list(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Builds the graph on `n` vertices whose edges are the pairs accepted by `adjacent`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    b.set(u, v);
                }
            }
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Raw adjacency row of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn row(&self, v: VertexId) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    /// Panics if either vertex is out of range.
    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        assert!(v < self.n, "vertex {v} out of range for n = {}", self.n);
        test_bit(self.row(u), v)
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// `N(v)`.
    pub fn neighbors(&self, v: VertexId) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_words(self.n, self.row(v).to_vec()))
    }

    /// Ascending iterator over `N(v)` without allocating. Panics if out of range.
    #[inline]
    pub fn neighbor_iter(&self, v: VertexId) -> Iter<'_> {
        Iter::new(self.row(v))
    }

    /// `N(u) ∩ N(v)` as a row intersection.
    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> Result<VertexSet, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        let words = self.row(u).iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
        Ok(VertexSet::from_words(self.n, words))
    }

    /// `|N(u) ∩ N(v)|` without bounds checks beyond slicing.
    #[inline]
    pub fn common_count(&self, u: VertexId, v: VertexId) -> usize {
        and_count(self.row(u), self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbor_iter(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Subgraph induced by `vs`, re-indexed in ascending original order.
    pub fn induced_subgraph(&self, vs: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(bad) = vs.iter().find(|&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let members = vs.to_vec();
        let mut b = GraphBuilder::new(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.set(i, j);
                }
            }
        }
        Ok(b.build())
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut b = GraphBuilder::new(self.n).expect("same size as an existing graph");
        for (u, v) in self.edges() {
            b.set(perm[u], perm[v]);
        }
        b.build()
    }

    /// Copy of this graph with one extra vertex adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: &VertexSet) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in self.edges() {
            b.set(u, v);
        }
        for v in nbrs.iter() {
            self.check_vertex(v)?;
            b.set(v, self.n);
        }
        Ok(b.build())
    }

    /// Copy of this graph with the edge `uv` added.
    pub fn with_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::from_graph(self);
        b.add_edge(u, v)?;
        Ok(b.build())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Mutable staging area for a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    graph: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        Ok(Self { graph: Graph::empty(n)? })
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self { graph: g.clone() }
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.set(u, v);
        Ok(())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.graph.has_edge(u, v)
    }

    pub fn row(&self, v: VertexId) -> &[u64] {
        self.graph.row(v)
    }

    #[inline]
    pub(crate) fn set(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        let s = self.graph.stride;
        self.graph.rows[u * s + v / 64] |= 1 << (v % 64);
        self.graph.rows[v * s + u / 64] |= 1 << (u % 64);
    }

    pub fn build(self) -> Graph {
        self.graph
    }
}
