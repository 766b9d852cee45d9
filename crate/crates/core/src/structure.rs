//! Decomposition of a triangle-free graph around an induced 5-cycle and the
//! explicit homomorphism to `C_5` built from it.
//!
//! For an induced cycle `v_0 .. v_4` the parts are
//! `D_i = N(v_{i-1}) ∩ N(v_{i+1})` (indices mod 5), so `v_i ∈ D_i`. A vertex
//! outside `D = ∪ D_i` joins `W_i` when the parts it sees are exactly
//! `D_{i-1}` and `D_{i+1}`. Above the `δ₂ > ⌊n/8⌋` threshold every outside
//! vertex is classified this way and `v ↦ i` on `D_i ∪ W_i` is a
//! homomorphism; below it the same procedure doubles as a detector that
//! labels each obstruction.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::cycles::{is_bipartite, shortest_odd_cycle, touches, Bipartiteness};
use crate::error::StructureError;
use crate::generators::named::cycle;
use crate::graph::{Graph, VertexId};
use crate::homomorphism::{verify_homomorphism, HomCheck, HomMap};
use crate::invariants::{min_common_degree, require_triangle_free};

/// Which step of the construction an obstruction breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimViolation {
    /// An outside vertex sees fewer than two of the parts `D_i`.
    FewerThanTwoParts,
    /// An outside vertex sees two consecutive parts `D_i`, `D_{i+1}`.
    ConsecutiveParts,
    /// An edge inside one class `W_i`.
    EdgeInsideClass,
    /// An edge between `W_i` and `W_{i+2}`.
    EdgeAcrossTwoClasses,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unclassified {
    pub vertex: VertexId,
    pub reason: ClaimViolation,
    /// Indices of the parts `D_i` the vertex has neighbors in.
    pub parts_seen: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct C5Decomposition {
    pub cycle: [VertexId; 5],
    pub d: [VertexSet; 5],
    pub w: [VertexSet; 5],
    pub unclassified: Vec<Unclassified>,
}

impl C5Decomposition {
    pub fn d_union(&self) -> VertexSet {
        let mut all = self.d[0].clone();
        for part in &self.d[1..] {
            all.union_with(part);
        }
        all
    }

    /// Block index (`D_i ∪ W_i`) of `v`, if classified.
    pub fn block_of(&self, v: VertexId) -> Option<usize> {
        (0..5).find(|&i| self.d[i].contains(v) || self.w[i].contains(v))
    }

    pub fn d_parts_pairwise_disjoint(&self) -> bool {
        (0..5).all(|i| (i + 1..5).all(|j| self.d[i].is_disjoint(&self.d[j])))
    }
}

/// Rotates and reflects a 5-cycle so the least vertex comes first and the
/// second entry is smaller than the last.
pub fn normalize_cycle(c: [VertexId; 5]) -> [VertexId; 5] {
    let start = (0..5).min_by_key(|&i| c[i]).expect("five entries");
    let fwd: [VertexId; 5] = std::array::from_fn(|k| c[(start + k) % 5]);
    if fwd[1] < fwd[4] {
        fwd
    } else {
        std::array::from_fn(|k| c[(start + 5 - k) % 5])
    }
}

fn check_induced_five_cycle(g: &Graph, c: [VertexId; 5]) -> Result<(), StructureError> {
    for &v in &c {
        g.check_vertex(v)?;
    }
    let distinct = (0..5).all(|i| (i + 1..5).all(|j| c[i] != c[j]));
    let ok = distinct && (0..5).all(|i| g.has_edge(c[i], c[(i + 1) % 5]) && !g.has_edge(c[i], c[(i + 2) % 5]));
    if ok {
        Ok(())
    } else {
        Err(StructureError::NotInducedFiveCycle(c))
    }
}

/// Builds `D_1..D_5`, `W_1..W_5` and labels vertices that fit no class.
pub fn c5_decomposition(g: &Graph, c: [VertexId; 5]) -> Result<C5Decomposition, StructureError> {
    require_triangle_free(g)?;
    check_induced_five_cycle(g, c)?;
    let d: [VertexSet; 5] = std::array::from_fn(|i| {
        g.common_neighbors(c[(i + 4) % 5], c[(i + 1) % 5])
            .expect("cycle vertices are valid and distinct")
    });
    let mut in_d = d[0].clone();
    for part in &d[1..] {
        in_d.union_with(part);
    }

    let mut w: [VertexSet; 5] = std::array::from_fn(|_| VertexSet::new(g.n()));
    let mut unclassified = Vec::new();
    for x in (0..g.n()).filter(|&x| !in_d.contains(x)) {
        let seen: Vec<usize> = (0..5).filter(|&i| touches(g, x, &d[i])).collect();
        let mask: u8 = seen.iter().map(|&i| 1 << i).sum();
        let consecutive = (0..5).any(|i| mask >> i & 1 == 1 && mask >> ((i + 1) % 5) & 1 == 1);
        let reason = if seen.len() < 2 {
            Some(ClaimViolation::FewerThanTwoParts)
        } else if consecutive {
            Some(ClaimViolation::ConsecutiveParts)
        } else {
            None
        };
        match reason {
            Some(reason) => unclassified.push(Unclassified {
                vertex: x,
                reason,
                parts_seen: seen,
            }),
            None => {
                // Two or more parts, none consecutive: exactly {i-1, i+1}.
                let i = (0..5)
                    .find(|&i| mask == (1 << ((i + 4) % 5)) | (1 << ((i + 1) % 5)))
                    .expect("non-consecutive pair of parts on a 5-cycle");
                w[i].insert(x);
            }
        }
    }
    Ok(C5Decomposition {
        cycle: c,
        d,
        w,
        unclassified,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstructionFailure {
    /// No 5-cycle to decompose around; the shortest odd cycle is longer.
    NoFiveCycle { odd_girth: usize },
    /// Some vertices fit no class.
    Unclassified { count: usize },
    /// The block map sends this edge to a non-edge.
    NonHomomorphicEdge {
        edge: (VertexId, VertexId),
        claim: Option<ClaimViolation>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum C5Outcome {
    /// Two-coloring sent onto the edge `0 1` of `C_5`.
    Bipartite { map: HomMap },
    /// Block map `D_i ∪ W_i -> i`.
    Blowup { map: HomMap, decomposition: C5Decomposition },
    Failed {
        failure: ConstructionFailure,
        decomposition: Option<C5Decomposition>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct C5Construction {
    /// `n >= 8` and `δ₂ > ⌊n/8⌋`.
    pub hypothesis: bool,
    pub outcome: C5Outcome,
}

impl C5Construction {
    pub fn map(&self) -> Option<&HomMap> {
        match &self.outcome {
            C5Outcome::Bipartite { map } | C5Outcome::Blowup { map, .. } => Some(map),
            C5Outcome::Failed { .. } => None,
        }
    }

    pub fn succeeded(&self) -> bool {
        self.map().is_some()
    }
}

/// `n >= 8` and `δ₂(g) > ⌊n/8⌋`.
pub fn c5_hom_hypothesis(g: &Graph) -> bool {
    g.n() >= 8 && min_common_degree(g).is_ok_and(|d| d.exceeds(g.n() / 8))
}

/// Builds an explicit homomorphism `g -> C_5` following the decomposition.
///
/// Bipartite graphs map onto one edge. Otherwise the shortest odd cycle is
/// used (normalized, least vertex first); when it has length five the block
/// map is built and verified. The attempt is made whatever `δ₂` is; the
/// `hypothesis` flag records whether the threshold holds.
pub fn construct_c5_homomorphism(g: &Graph) -> Result<C5Construction, StructureError> {
    require_triangle_free(g)?;
    let hypothesis = c5_hom_hypothesis(g);
    let outcome = match is_bipartite(g) {
        Bipartiteness::Bipartite(coloring) => C5Outcome::Bipartite {
            map: HomMap(coloring.into_iter().map(usize::from).collect()),
        },
        Bipartiteness::OddCycle(_) => build_block_map(g)?,
    };
    Ok(C5Construction { hypothesis, outcome })
}

fn build_block_map(g: &Graph) -> Result<C5Outcome, StructureError> {
    let odd = shortest_odd_cycle(g).expect("non-bipartite");
    if odd.len() != 5 {
        return Ok(C5Outcome::Failed {
            failure: ConstructionFailure::NoFiveCycle { odd_girth: odd.len() },
            decomposition: None,
        });
    }
    let c = normalize_cycle(odd.0.try_into().expect("length five"));
    let dec = c5_decomposition(g, c)?;
    if !dec.unclassified.is_empty() {
        return Ok(C5Outcome::Failed {
            failure: ConstructionFailure::Unclassified {
                count: dec.unclassified.len(),
            },
            decomposition: Some(dec),
        });
    }
    let map = HomMap(
        (0..g.n())
            .map(|v| dec.block_of(v).expect("every vertex classified"))
            .collect(),
    );
    let c5 = cycle(5).expect("five");
    match verify_homomorphism(g, &c5, &map).expect("targets are 0..5") {
        HomCheck::Valid => Ok(C5Outcome::Blowup { map, decomposition: dec }),
        HomCheck::Counterexample { edge } => {
            let in_w = |v: VertexId| dec.w.iter().position(|w| w.contains(v));
            let claim = match (in_w(edge.0), in_w(edge.1)) {
                (Some(a), Some(b)) if a == b => Some(ClaimViolation::EdgeInsideClass),
                (Some(a), Some(b)) if (a + 5 - b) % 5 == 2 || (b + 5 - a) % 5 == 2 => {
                    Some(ClaimViolation::EdgeAcrossTwoClasses)
                }
                _ => None,
            };
            Ok(C5Outcome::Failed {
                failure: ConstructionFailure::NonHomomorphicEdge { edge, claim },
                decomposition: Some(dec),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named::{complete, complete_bipartite, g2, mobius_ladder};
    use crate::homomorphism::{balanced_blow_up, find_homomorphism};

    fn c5() -> Graph {
        cycle(5).unwrap()
    }

    #[test]
    fn identity_decomposition_of_c5() {
        let dec = c5_decomposition(&c5(), [0, 1, 2, 3, 4]).unwrap();
        for i in 0..5 {
            assert_eq!(dec.d[i].to_vec(), vec![i]);
            assert!(dec.w[i].is_empty());
        }
        assert!(dec.unclassified.is_empty());
    }

    #[test]
    fn decomposition_of_balanced_blow_up() {
        let (g, parts) = balanced_blow_up(&c5(), 10).unwrap();
        let dec = c5_decomposition(&g, [0, 2, 4, 6, 8]).unwrap();
        for i in 0..5 {
            let want: Vec<usize> = (0..10).filter(|&v| parts[v] == i).collect();
            assert_eq!(dec.d[i].to_vec(), want);
            assert!(dec.w[i].is_empty());
        }
    }

    #[test]
    fn decomposition_of_g2() {
        let g = g2(7).unwrap();
        // parts: {0}, {1,2}, {3}, {4}, {5,6}
        let dec = c5_decomposition(&g, [0, 1, 3, 4, 5]).unwrap();
        let sizes: Vec<usize> = dec.d.iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![1, 2, 1, 1, 2]);
        assert!(dec.w.iter().all(VertexSet::is_empty) && dec.unclassified.is_empty());
    }

    #[test]
    fn decomposition_preconditions() {
        assert!(matches!(
            c5_decomposition(&c5(), [0, 1, 2, 4, 3]),
            Err(StructureError::NotInducedFiveCycle(_))
        ));
        assert!(matches!(
            c5_decomposition(&complete(5).unwrap(), [0, 1, 2, 3, 4]),
            Err(StructureError::Triangle(_))
        ));
        assert!(c5_decomposition(&c5(), [0, 1, 2, 3, 9]).is_err());
    }

    #[test]
    fn cycle_normalization() {
        assert_eq!(normalize_cycle([3, 4, 0, 1, 2]), [0, 1, 2, 3, 4]);
        assert_eq!(normalize_cycle([2, 1, 0, 4, 3]), [0, 1, 2, 3, 4]);
        assert_eq!(normalize_cycle([5, 9, 1, 7, 3]), [1, 7, 3, 5, 9]);
    }

    #[test]
    fn bipartite_branch() {
        let k44 = complete_bipartite(4, 4).unwrap();
        let out = construct_c5_homomorphism(&k44).unwrap();
        assert!(out.hypothesis);
        assert_eq!(out.outcome, C5Outcome::Bipartite { map: HomMap(vec![0, 0, 0, 0, 1, 1, 1, 1]) });
    }

    #[test]
    fn blow_up_branch() {
        let (g, parts) = balanced_blow_up(&c5(), 10).unwrap();
        let out = construct_c5_homomorphism(&g).unwrap();
        assert!(out.hypothesis);
        let map = out.map().unwrap();
        assert!(verify_homomorphism(&g, &c5(), map).unwrap().is_valid());
        assert_eq!(map.0, parts);
    }

    #[test]
    fn mobius_ladder_fails_below_threshold() {
        let hm = mobius_ladder();
        let out = construct_c5_homomorphism(&hm).unwrap();
        assert!(!out.hypothesis);
        assert!(!out.succeeded());
        assert!(find_homomorphism(&hm, &c5()).is_none());
    }

    #[test]
    fn long_odd_girth_is_reported() {
        let c7 = cycle(7).unwrap();
        let out = construct_c5_homomorphism(&c7).unwrap();
        assert!(matches!(
            out.outcome,
            C5Outcome::Failed { failure: ConstructionFailure::NoFiveCycle { odd_girth: 7 }, .. }
        ));
    }

    #[test]
    fn rejects_triangles() {
        assert!(matches!(
            construct_c5_homomorphism(&complete(3).unwrap()),
            Err(StructureError::Triangle([0, 1, 2]))
        ));
    }
}
