//! Degree-type invariants: `δ`, `δ₂`, triangles and maximality.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bitset::{and_is_empty, test_bit, Iter};
use crate::error::StructureError;
use crate::graph::{Graph, VertexId};

/// Minimum common degree: `min |N(x) ∩ N(y)|` over non-adjacent pairs.
///
/// A graph without non-adjacent pairs has no pair to minimize over; that
/// vacuous minimum is `Infinite`, which exceeds every finite bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CommonDegree {
    Finite(usize),
    Infinite,
}

/// Value reported for complete graphs. Change here to alter the convention.
pub const VACUOUS_COMMON_DEGREE: CommonDegree = CommonDegree::Infinite;

impl CommonDegree {
    pub fn finite(self) -> Option<usize> {
        match self {
            CommonDegree::Finite(v) => Some(v),
            CommonDegree::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == CommonDegree::Infinite
    }

    /// `self > bound`.
    pub fn exceeds(self, bound: usize) -> bool {
        self > CommonDegree::Finite(bound)
    }

    /// `self >= bound`.
    pub fn at_least(self, bound: usize) -> bool {
        self >= CommonDegree::Finite(bound)
    }
}

impl Ord for CommonDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        use CommonDegree::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for CommonDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CommonDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommonDegree::Finite(v) => write!(f, "{v}"),
            CommonDegree::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for CommonDegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CommonDegree::Finite(v) => s.serialize_u64(*v as u64),
            CommonDegree::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for CommonDegree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(CommonDegree::Finite(v)),
            Raw::Str(s) if s == "infinite" => Ok(CommonDegree::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad common degree {s:?}"))),
        }
    }
}

/// `δ(G)`.
pub fn min_degree(g: &Graph) -> Result<usize, StructureError> {
    (0..g.n()).map(|v| g.degree(v)).min().ok_or(StructureError::EmptyGraph)
}

/// `δ₂(G)`, scanning every non-adjacent pair, including pairs in different
/// components.
pub fn min_common_degree(g: &Graph) -> Result<CommonDegree, StructureError> {
    if g.n() < 2 {
        return Err(StructureError::TooFewVertices { needed: 2, n: g.n() });
    }
    let mut best: Option<usize> = None;
    for u in 0..g.n() {
        let row = g.row(u);
        for v in u + 1..g.n() {
            if test_bit(row, v) {
                continue;
            }
            let c = g.common_count(u, v);
            if best.is_none_or(|b| c < b) {
                best = Some(c);
                if c == 0 {
                    return Ok(CommonDegree::Finite(0));
                }
            }
        }
    }
    Ok(best.map_or(VACUOUS_COMMON_DEGREE, CommonDegree::Finite))
}

/// Lexicographically least triangle `(u, v, w)` with `u < v < w`, if any.
pub fn find_triangle(g: &Graph) -> Option<[VertexId; 3]> {
    for u in 0..g.n() {
        for v in g.neighbor_iter(u).filter(|&v| v > u) {
            let common: Vec<u64> = g.row(u).iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
            if let Some(w) = Iter::new(&common).find(|&w| w > v) {
                return Some([u, v, w]);
            }
        }
    }
    None
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

/// Fails with the least triangle when `g` has one.
pub fn require_triangle_free(g: &Graph) -> Result<(), StructureError> {
    match find_triangle(g) {
        Some(t) => Err(StructureError::Triangle(t)),
        None => Ok(()),
    }
}

/// First non-edge `uv` (ascending `u`, then `v`) with no common neighbor,
/// i.e. one whose addition keeps `g` triangle-free.
pub fn find_addable_edge(g: &Graph) -> Result<Option<(VertexId, VertexId)>, StructureError> {
    require_triangle_free(g)?;
    for u in 0..g.n() {
        let row = g.row(u);
        for v in u + 1..g.n() {
            if !test_bit(row, v) && and_is_empty(row, g.row(v)) {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// Every non-edge has a common neighbor. Errors on input containing a triangle.
pub fn is_maximal_triangle_free(g: &Graph) -> Result<bool, StructureError> {
    Ok(find_addable_edge(g)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named::{complete, complete_bipartite, cycle, mobius_ladder, path};

    /// Independent triple loop.
    fn naive_delta2(g: &Graph) -> CommonDegree {
        let mut best = CommonDegree::Infinite;
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                if g.has_edge(x, y) {
                    continue;
                }
                let c = (0..g.n()).filter(|&z| g.has_edge(x, z) && g.has_edge(y, z)).count();
                best = best.min(CommonDegree::Finite(c));
            }
        }
        best
    }

    #[test]
    fn common_degree_ordering() {
        assert!(CommonDegree::Infinite > CommonDegree::Finite(usize::MAX));
        assert!(CommonDegree::Infinite.exceeds(1_000_000));
        assert!(!CommonDegree::Finite(2).exceeds(2));
        assert!(CommonDegree::Finite(3).at_least(3));
        assert_eq!(serde_json::to_string(&CommonDegree::Infinite).unwrap(), "\"infinite\"");
        let back: CommonDegree = serde_json::from_str("4").unwrap();
        assert_eq!(back, CommonDegree::Finite(4));
    }

    #[test]
    fn degrees_of_small_graphs() {
        assert_eq!(min_degree(&cycle(5).unwrap()).unwrap(), 2);
        assert!(min_degree(&Graph::empty(0).unwrap()).is_err());
        assert_eq!(min_common_degree(&complete(4).unwrap()).unwrap(), CommonDegree::Infinite);
        assert_eq!(min_common_degree(&mobius_ladder()).unwrap(), CommonDegree::Finite(1));
        assert_eq!(min_common_degree(&mobius_ladder()).unwrap(), naive_delta2(&mobius_ladder()));
        assert!(min_common_degree(&Graph::empty(1).unwrap()).is_err());
        // disconnected pairs count
        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(min_common_degree(&two_edges).unwrap(), CommonDegree::Finite(0));
    }

    #[test]
    fn triangles() {
        assert_eq!(find_triangle(&complete(3).unwrap()), Some([0, 1, 2]));
        assert!(is_triangle_free(&cycle(5).unwrap()));
        assert_eq!(find_triangle(&complete(5).unwrap()), Some([0, 1, 2]));
    }

    #[test]
    fn maximality() {
        assert!(is_maximal_triangle_free(&cycle(5).unwrap()).unwrap());
        assert!(is_maximal_triangle_free(&complete_bipartite(3, 3).unwrap()).unwrap());
        assert_eq!(find_addable_edge(&path(4).unwrap()).unwrap(), Some((0, 3)));
        assert!(matches!(
            is_maximal_triangle_free(&complete(3).unwrap()),
            Err(StructureError::Triangle(_))
        ));
    }
}
