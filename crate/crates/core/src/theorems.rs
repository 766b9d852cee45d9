//! Checkable forms of the threshold theorems and their supporting lemmas.
//!
//! Every check returns a [`Verdict`]: whether the hypothesis holds, whether
//! the conclusion holds, and evidence for the latter. A verdict whose
//! hypothesis holds but whose conclusion fails is a violation. All threshold
//! comparisons are done in exact integer or rational arithmetic.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::cycles::{induced_five_cycles, is_bipartite, is_c5_free, odd_girth, Bipartiteness, Cycle};
use crate::embedding::contains_subgraph;
use crate::error::StructureError;
use crate::generators::canon::is_isomorphic;
use crate::generators::named::{cycle, mobius_ladder};
use crate::graph::{Graph, VertexId};
use crate::homomorphism::{find_homomorphism, recognize_blow_up, verify_homomorphism, HomMap, Recognition};
use crate::invariants::{find_triangle, is_maximal_triangle_free, min_common_degree, min_degree, CommonDegree};
use crate::structure::{c5_decomposition, construct_c5_homomorphism, C5Construction, C5Decomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statement {
    /// Triangle-free, `n >= 5`, `δ₂ > ⌊n/5⌋` implies bipartite.
    BipartiteThreshold,
    /// Triangle-free, `n >= 8`, `δ₂ > ⌊n/8⌋` implies homomorphic to `C_5`.
    C5HomThreshold,
    /// `C_5`-free, `n >= 5`, `δ₂ >= 3` implies bipartite.
    C5Free,
    /// Maximal triangle-free with `δ > (1/3 + α)n` implies `δ₂ > 3αn`.
    MinDegree,
    /// `δ₂ >= 1` and not bipartite implies odd girth 3 or 5.
    ShortOddCycle,
    /// `{C_3, C_5}`-free with `δ₂ >= 1` implies bipartite.
    C3C5Free,
    /// Common neighborhoods of two crossing non-edges are disjoint.
    DisjointCommonNeighborhoods,
    /// The parts `D_i` around any induced 5-cycle are disjoint and `G[D]`
    /// maps onto the cycle.
    DisjointParts,
    /// Triangle-free and containing the Möbius ladder implies `δ₂ <= ⌊n/8⌋`.
    MobiusBound,
}

impl Statement {
    pub const ALL: [Statement; 9] = [
        Statement::BipartiteThreshold,
        Statement::C5HomThreshold,
        Statement::C5Free,
        Statement::MinDegree,
        Statement::ShortOddCycle,
        Statement::C3C5Free,
        Statement::DisjointCommonNeighborhoods,
        Statement::DisjointParts,
        Statement::MobiusBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statement::BipartiteThreshold => "bipartite-threshold",
            Statement::C5HomThreshold => "c5-hom-threshold",
            Statement::C5Free => "c5-free",
            Statement::MinDegree => "min-degree",
            Statement::ShortOddCycle => "short-odd-cycle",
            Statement::C3C5Free => "c3c5-free",
            Statement::DisjointCommonNeighborhoods => "disjoint-common-neighborhoods",
            Statement::DisjointParts => "disjoint-parts",
            Statement::MobiusBound => "mobius-bound",
        }
    }

    /// Short alias accepted on the command line.
    pub fn alias(self) -> &'static str {
        match self {
            Statement::BipartiteThreshold => "main-i",
            Statement::C5HomThreshold => "main-ii",
            Statement::C5Free => "c5free",
            Statement::MinDegree => "lem-1",
            Statement::ShortOddCycle => "lem-2",
            Statement::C3C5Free => "cor-c3c5",
            Statement::DisjointCommonNeighborhoods => "lem-3",
            Statement::DisjointParts => "cor-2.5",
            Statement::MobiusBound => "lem-4",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statement {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statement::ALL
            .into_iter()
            .find(|t| t.name() == s || t.alias() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Statement::ALL.iter().map(|t| t.name()).collect();
                format!("unknown statement `{s}` (known: {})", known.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Coloring { coloring: Vec<u8> },
    OddCycle { cycle: Cycle },
    Triangle { vertices: [VertexId; 3] },
    /// `constructive` is false when only the backtracking search found it.
    HomMap { map: HomMap, constructive: bool },
    Construction { construction: C5Construction },
    Decomposition { decomposition: C5Decomposition },
    Intersection {
        x: (VertexId, VertexId),
        y: (VertexId, VertexId),
        common: VertexSet,
    },
    Embedding { embedding: Vec<VertexId> },
    CommonDegree { value: CommonDegree },
    CyclesChecked { count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub statement: Statement,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn is_violation(&self) -> bool {
        self.hypothesis && !self.conclusion
    }
}

/// `δ₂`, or `None` below two vertices where it is undefined.
fn common_degree(g: &Graph) -> Option<CommonDegree> {
    min_common_degree(g).ok()
}

fn coloring_or_cycle(b: Bipartiteness) -> Witness {
    match b {
        Bipartiteness::Bipartite(coloring) => Witness::Coloring { coloring },
        Bipartiteness::OddCycle(cycle) => Witness::OddCycle { cycle },
    }
}

pub fn check_bipartite_theorem(g: &Graph) -> Verdict {
    let hypothesis = find_triangle(g).is_none()
        && g.n() >= 5
        && common_degree(g).is_some_and(|d| d.exceeds(g.n() / 5));
    let b = is_bipartite(g);
    Verdict {
        statement: Statement::BipartiteThreshold,
        hypothesis,
        conclusion: b.is_bipartite(),
        witness: Some(coloring_or_cycle(b)),
    }
}

/// The conclusion holds when the explicit construction succeeds, or failing
/// that when the backtracking search finds a map. A verified map from the
/// search alone is still reported with `constructive: false`.
pub fn check_c5_hom_theorem(g: &Graph) -> Verdict {
    let statement = Statement::C5HomThreshold;
    let construction = match construct_c5_homomorphism(g) {
        Ok(c) => c,
        Err(_) => {
            let witness = find_triangle(g).map(|vertices| Witness::Triangle { vertices });
            return Verdict {
                statement,
                hypothesis: false,
                conclusion: false,
                witness,
            };
        }
    };
    let hypothesis = construction.hypothesis;
    let c5 = cycle(5).expect("five");
    if let Some(map) = construction.map() {
        let valid = verify_homomorphism(g, &c5, map).is_ok_and(|c| c.is_valid());
        if valid {
            return Verdict {
                statement,
                hypothesis,
                conclusion: true,
                witness: Some(Witness::HomMap {
                    map: map.clone(),
                    constructive: true,
                }),
            };
        }
    }
    match find_homomorphism(g, &c5) {
        Some(map) => Verdict {
            statement,
            hypothesis,
            conclusion: true,
            witness: Some(Witness::HomMap { map, constructive: false }),
        },
        None => Verdict {
            statement,
            hypothesis,
            conclusion: false,
            witness: Some(Witness::Construction { construction }),
        },
    }
}

pub fn check_c5free_theorem(g: &Graph) -> Verdict {
    let hypothesis = g.n() >= 5 && common_degree(g).is_some_and(|d| d.at_least(3)) && is_c5_free(g);
    let b = is_bipartite(g);
    Verdict {
        statement: Statement::C5Free,
        hypothesis,
        conclusion: b.is_bipartite(),
        witness: Some(coloring_or_cycle(b)),
    }
}

/// Maximal triangle-free with `δ > (1/3 + α)n` implies `δ₂ > 3αn`.
///
/// `alpha` must lie strictly between 0 and 2/3, and `g` must be
/// triangle-free with at least two vertices.
pub fn check_lemma_min_degree_implies_delta2(g: &Graph, alpha: Ratio<i64>) -> Result<Verdict, StructureError> {
    let zero = Ratio::from_integer(0);
    if alpha <= zero || alpha >= Ratio::new(2, 3) {
        return Err(StructureError::InvalidArgument(format!("alpha = {alpha} outside (0, 2/3)")));
    }
    if g.n() < 2 {
        return Err(StructureError::TooFewVertices { needed: 2, n: g.n() });
    }
    let maximal = is_maximal_triangle_free(g)?;
    let n = Ratio::from_integer(g.n() as i64);
    let delta = Ratio::from_integer(min_degree(g)? as i64);
    let hypothesis = maximal && delta > (Ratio::new(1, 3) + alpha) * n;
    let d2 = min_common_degree(g)?;
    let conclusion = match d2 {
        CommonDegree::Infinite => true,
        CommonDegree::Finite(d) => Ratio::from_integer(d as i64) > Ratio::from_integer(3) * alpha * n,
    };
    Ok(Verdict {
        statement: Statement::MinDegree,
        hypothesis,
        conclusion,
        witness: Some(Witness::CommonDegree { value: d2 }),
    })
}

/// `δ₂ >= 1` and not bipartite implies the shortest odd cycle has length 3 or 5.
pub fn check_short_odd_cycle_lemma(g: &Graph) -> Verdict {
    let hypothesis = common_degree(g).is_some_and(|d| d.at_least(1));
    let b = is_bipartite(g);
    let conclusion = match &b {
        Bipartiteness::Bipartite(_) => true,
        Bipartiteness::OddCycle(c) => c.len() == 3 || c.len() == 5,
    };
    Verdict {
        statement: Statement::ShortOddCycle,
        hypothesis,
        conclusion,
        witness: Some(coloring_or_cycle(b)),
    }
}

/// `{C_3, C_5}`-free with `δ₂ >= 1` implies bipartite.
pub fn check_c3c5_free_corollary(g: &Graph) -> Verdict {
    let hypothesis = common_degree(g).is_some_and(|d| d.at_least(1)) && !matches!(odd_girth(g), Some(3 | 5));
    let b = is_bipartite(g);
    Verdict {
        statement: Statement::C3C5Free,
        hypothesis,
        conclusion: b.is_bipartite(),
        witness: Some(coloring_or_cycle(b)),
    }
}

/// Outcome of the disjointness check for one quadruple of vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DisjointnessVerdict {
    /// The inputs do not meet the lemma's requirements; nothing is asserted.
    Precondition { reason: String },
    Disjoint,
    Intersecting { common: VertexSet },
}

/// In a triangle-free graph with non-edges `x1 x2`, `y1 y2` and some edge
/// `x_i y_j`, the common neighborhoods of the two pairs are disjoint.
pub fn check_disjointness_lemma(
    g: &Graph,
    x1: VertexId,
    x2: VertexId,
    y1: VertexId,
    y2: VertexId,
) -> Result<DisjointnessVerdict, StructureError> {
    let pre = |reason: &str| Ok(DisjointnessVerdict::Precondition { reason: reason.to_string() });
    for v in [x1, x2, y1, y2] {
        g.check_vertex(v)?;
    }
    if x1 == x2 || y1 == y2 {
        return pre("pair with repeated vertex");
    }
    if let Some(t) = find_triangle(g) {
        return pre(&format!("graph contains the triangle {t:?}"));
    }
    if g.has_edge(x1, x2) || g.has_edge(y1, y2) {
        return pre("pairs must be non-adjacent");
    }
    if ![(x1, y1), (x1, y2), (x2, y1), (x2, y2)].iter().any(|&(a, b)| g.has_edge(a, b)) {
        return pre("no edge between the pairs");
    }
    let mut common = g.common_neighbors(x1, x2)?;
    common.intersect_with(g.common_neighbors(y1, y2)?.words());
    Ok(if common.is_empty() {
        DisjointnessVerdict::Disjoint
    } else {
        DisjointnessVerdict::Intersecting { common }
    })
}

/// Runs the disjointness check on every pair of non-edges joined by an edge
/// of a triangle-free graph. The hypothesis is that such a pair exists.
pub fn check_crossing_non_edges(g: &Graph) -> Verdict {
    let statement = Statement::DisjointCommonNeighborhoods;
    if let Some(vertices) = find_triangle(g) {
        return Verdict {
            statement,
            hypothesis: false,
            conclusion: true,
            witness: Some(Witness::Triangle { vertices }),
        };
    }
    let n = g.n();
    let non_edges: Vec<((VertexId, VertexId), VertexSet)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .map(|(u, v)| ((u, v), g.common_neighbors(u, v).expect("distinct valid vertices")))
        .collect();
    let mut hypothesis = false;
    for (i, &(x, ref cx)) in non_edges.iter().enumerate() {
        for &(y, ref cy) in &non_edges[i..] {
            let crossing = [(x.0, y.0), (x.0, y.1), (x.1, y.0), (x.1, y.1)]
                .iter()
                .any(|&(a, b)| g.has_edge(a, b));
            if !crossing {
                continue;
            }
            hypothesis = true;
            if !cx.is_disjoint(cy) {
                let mut common = cx.clone();
                common.intersect_with(cy.words());
                return Verdict {
                    statement,
                    hypothesis,
                    conclusion: false,
                    witness: Some(Witness::Intersection { x, y, common }),
                };
            }
        }
    }
    Verdict {
        statement,
        hypothesis,
        conclusion: true,
        witness: None,
    }
}

/// The parts `D_i` are pairwise disjoint independent sets and every edge
/// of `G[D]` joins consecutive parts.
pub fn decomposition_parts_ok(g: &Graph, dec: &C5Decomposition) -> bool {
    if !dec.d_parts_pairwise_disjoint() {
        return false;
    }
    let d = dec.d_union();
    d.iter().all(|u| {
        let i = dec.block_of(u).expect("u is in D");
        g.neighbor_iter(u).filter(|&v| d.contains(v)).all(|v| {
            let j = dec.d.iter().position(|p| p.contains(v)).expect("v is in D");
            (i + 1) % 5 == j || (j + 1) % 5 == i
        })
    })
}

/// Runs [`decomposition_parts_ok`] around every induced 5-cycle of a
/// triangle-free graph. The hypothesis is that at least one such cycle exists.
pub fn check_disjoint_parts(g: &Graph) -> Verdict {
    let statement = Statement::DisjointParts;
    if let Some(vertices) = find_triangle(g) {
        return Verdict {
            statement,
            hypothesis: false,
            conclusion: true,
            witness: Some(Witness::Triangle { vertices }),
        };
    }
    let cycles = induced_five_cycles(g);
    for &c in &cycles {
        let dec = c5_decomposition(g, c).expect("triangle-free and induced");
        if !decomposition_parts_ok(g, &dec) {
            return Verdict {
                statement,
                hypothesis: true,
                conclusion: false,
                witness: Some(Witness::Decomposition { decomposition: dec }),
            };
        }
    }
    Verdict {
        statement,
        hypothesis: !cycles.is_empty(),
        conclusion: true,
        witness: Some(Witness::CyclesChecked { count: cycles.len() }),
    }
}

/// Triangle-free and containing the Möbius ladder as a subgraph implies
/// `δ₂ <= ⌊n/8⌋`.
pub fn check_mobius_bound(g: &Graph) -> Verdict {
    let statement = Statement::MobiusBound;
    let embedding = if find_triangle(g).is_none() && g.n() >= 8 {
        contains_subgraph(g, &mobius_ladder())
    } else {
        None
    };
    let d2 = common_degree(g);
    let conclusion = d2.is_some_and(|d| !d.exceeds(g.n() / 8));
    Verdict {
        statement,
        hypothesis: embedding.is_some(),
        conclusion,
        witness: match embedding {
            Some(embedding) => Some(Witness::Embedding { embedding }),
            None => d2.map(|value| Witness::CommonDegree { value }),
        },
    }
}

/// Runs the check for `statement` on a whole graph.
///
/// Returns `None` for [`Statement::MinDegree`], which also needs `α`.
pub fn check_statement(statement: Statement, g: &Graph) -> Option<Verdict> {
    Some(match statement {
        Statement::BipartiteThreshold => check_bipartite_theorem(g),
        Statement::C5HomThreshold => check_c5_hom_theorem(g),
        Statement::C5Free => check_c5free_theorem(g),
        Statement::ShortOddCycle => check_short_odd_cycle_lemma(g),
        Statement::C3C5Free => check_c3c5_free_corollary(g),
        Statement::DisjointParts => check_disjoint_parts(g),
        Statement::MobiusBound => check_mobius_bound(g),
        Statement::DisjointCommonNeighborhoods => check_crossing_non_edges(g),
        Statement::MinDegree => return None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum EqualityCase {
    /// `5 | n`, `δ₂ = n/5`, not bipartite. `confirmed` is whether the graph
    /// is recognized as a balanced `C_5` blow-up.
    BalancedC5 { confirmed: bool, recognition: Recognition },
    /// `8 | n`, `δ₂ = n/8`, no homomorphism to `C_5`. `confirmed` is whether
    /// the graph is recognized as a balanced Möbius ladder blow-up.
    BalancedMobius { confirmed: bool, recognition: Recognition },
    /// `8 | n` and `δ₂ = n/8`, but the graph maps to `C_5`. The Möbius
    /// classification does not apply to such graphs (a `C_5` blow-up whose
    /// smallest part has `n/8` vertices is one).
    HomomorphicAtEighth { map: HomMap },
    NotEqualityCase,
}

impl EqualityCase {
    /// True unless the graph is an equality case whose structure does not
    /// match the expected balanced blow-up.
    pub fn is_consistent(&self) -> bool {
        match self {
            EqualityCase::BalancedC5 { confirmed, .. } | EqualityCase::BalancedMobius { confirmed, .. } => *confirmed,
            _ => true,
        }
    }
}

fn is_balanced_blow_up_of(r: &Recognition, pattern: &Graph) -> bool {
    r.spec.is_balanced()
        && r.spec.sizes.iter().all(|&s| s == r.spec.sizes[0])
        && is_isomorphic(&r.spec.pattern, pattern)
}

/// Classifies triangle-free graphs sitting exactly at the `n/5` or `n/8`
/// threshold.
pub fn check_equality_case(g: &Graph) -> Result<EqualityCase, StructureError> {
    crate::invariants::require_triangle_free(g)?;
    let n = g.n();
    let Some(CommonDegree::Finite(d2)) = common_degree(g) else {
        return Ok(EqualityCase::NotEqualityCase);
    };
    if n >= 5 && n % 5 == 0 && d2 == n / 5 && !is_bipartite(g).is_bipartite() {
        let recognition = recognize_blow_up(g);
        let confirmed = is_balanced_blow_up_of(&recognition, &cycle(5).expect("five"));
        return Ok(EqualityCase::BalancedC5 { confirmed, recognition });
    }
    if n >= 8 && n % 8 == 0 && d2 == n / 8 {
        return Ok(match find_homomorphism(g, &cycle(5).expect("five")) {
            Some(map) => EqualityCase::HomomorphicAtEighth { map },
            None => {
                let recognition = recognize_blow_up(g);
                let confirmed = is_balanced_blow_up_of(&recognition, &mobius_ladder());
                EqualityCase::BalancedMobius { confirmed, recognition }
            }
        });
    }
    Ok(EqualityCase::NotEqualityCase)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named::{complete, complete_bipartite, g2};
    use crate::homomorphism::{balanced_blow_up, blow_up, BlowupSpec};

    fn c5() -> Graph {
        cycle(5).unwrap()
    }

    #[test]
    fn statement_names_round_trip() {
        for s in Statement::ALL {
            assert_eq!(s.name().parse::<Statement>().unwrap(), s);
            assert_eq!(s.alias().parse::<Statement>().unwrap(), s);
        }
        assert!("lem-9".parse::<Statement>().is_err());
    }

    #[test]
    fn bipartite_threshold_examples() {
        let v = check_bipartite_theorem(&complete_bipartite(5, 5).unwrap());
        assert!(v.hypothesis && v.conclusion);
        let (b10, _) = balanced_blow_up(&c5(), 10).unwrap();
        let v = check_bipartite_theorem(&b10);
        assert!(!v.hypothesis && !v.conclusion && !v.is_violation());
        assert!(!check_bipartite_theorem(&c5()).hypothesis);
    }

    #[test]
    fn c5_hom_threshold_examples() {
        let (b10, parts) = balanced_blow_up(&c5(), 10).unwrap();
        let v = check_c5_hom_theorem(&b10);
        assert!(v.hypothesis && v.conclusion);
        assert_eq!(
            v.witness,
            Some(Witness::HomMap {
                map: HomMap(parts),
                constructive: true
            })
        );
        let v = check_c5_hom_theorem(&mobius_ladder());
        assert!(!v.hypothesis && !v.conclusion);
        let v = check_c5_hom_theorem(&complete_bipartite(4, 4).unwrap());
        assert!(v.hypothesis && v.conclusion);
        let v = check_c5_hom_theorem(&complete(4).unwrap());
        assert!(!v.hypothesis && matches!(v.witness, Some(Witness::Triangle { .. })));
    }

    #[test]
    fn c5free_examples() {
        let v = check_c5free_theorem(&complete_bipartite(3, 3).unwrap());
        assert!(v.hypothesis && v.conclusion);
        assert!(!check_c5free_theorem(&complete(4).unwrap()).hypothesis);
        assert!(!check_c5free_theorem(&c5()).hypothesis);
    }

    #[test]
    fn min_degree_lemma_examples() {
        let a = Ratio::new(1, 15);
        let v = check_lemma_min_degree_implies_delta2(&c5(), a).unwrap();
        assert!(!v.hypothesis);
        let v = check_lemma_min_degree_implies_delta2(&complete_bipartite(5, 5).unwrap(), a).unwrap();
        assert!(v.hypothesis && v.conclusion);
        let p4 = crate::generators::named::path(4).unwrap();
        assert!(!check_lemma_min_degree_implies_delta2(&p4, a).unwrap().hypothesis);
        assert!(check_lemma_min_degree_implies_delta2(&c5(), Ratio::new(2, 3)).is_err());
        assert!(check_lemma_min_degree_implies_delta2(&c5(), Ratio::new(0, 1)).is_err());
        assert!(check_lemma_min_degree_implies_delta2(&complete(3).unwrap(), a).is_err());
    }

    #[test]
    fn disjointness_examples() {
        // C5 with (0,2) and (1,3): common neighborhoods {1} and {2}.
        assert_eq!(check_disjointness_lemma(&c5(), 0, 2, 1, 3).unwrap(), DisjointnessVerdict::Disjoint);
        assert_eq!(
            check_disjointness_lemma(&mobius_ladder(), 0, 2, 1, 3).unwrap(),
            DisjointnessVerdict::Disjoint
        );
        assert!(matches!(
            check_disjointness_lemma(&c5(), 0, 1, 2, 4).unwrap(),
            DisjointnessVerdict::Precondition { .. }
        ));
        // With a triangle the sets can meet, so the triangle is reported instead.
        let k4 = complete(4).unwrap();
        assert!(matches!(
            check_disjointness_lemma(&k4, 0, 1, 2, 3).unwrap(),
            DisjointnessVerdict::Precondition { .. }
        ));
    }

    #[test]
    fn crossing_non_edges_whole_graph() {
        for g in [c5(), mobius_ladder(), g2(14).unwrap()] {
            let v = check_crossing_non_edges(&g);
            assert!(v.hypothesis && v.conclusion);
        }
        assert!(check_crossing_non_edges(&complete_bipartite(3, 3).unwrap()).hypothesis);
        assert!(!check_crossing_non_edges(&Graph::empty(4).unwrap()).hypothesis);
        let v = check_crossing_non_edges(&complete(4).unwrap());
        assert!(!v.hypothesis && !v.is_violation());
    }

    #[test]
    fn disjoint_parts_on_blow_ups() {
        let v = check_disjoint_parts(&g2(7).unwrap());
        assert!(v.hypothesis && v.conclusion);
        assert_eq!(v.witness, Some(Witness::CyclesChecked { count: 4 }));
        let v = check_disjoint_parts(&complete_bipartite(3, 3).unwrap());
        assert!(!v.hypothesis);
    }

    #[test]
    fn mobius_bound_examples() {
        let v = check_mobius_bound(&mobius_ladder());
        assert!(v.hypothesis && v.conclusion);
        let (b16, _) = balanced_blow_up(&mobius_ladder(), 16).unwrap();
        let v = check_mobius_bound(&b16);
        assert!(v.hypothesis && v.conclusion);
        assert!(!check_mobius_bound(&complete_bipartite(4, 4).unwrap()).hypothesis);
    }

    #[test]
    fn equality_cases() {
        let (b10, _) = balanced_blow_up(&c5(), 10).unwrap();
        assert!(matches!(
            check_equality_case(&b10).unwrap(),
            EqualityCase::BalancedC5 { confirmed: true, .. }
        ));
        let (b16, _) = balanced_blow_up(&mobius_ladder(), 16).unwrap();
        assert!(matches!(
            check_equality_case(&b16).unwrap(),
            EqualityCase::BalancedMobius { confirmed: true, .. }
        ));
        assert_eq!(
            check_equality_case(&complete_bipartite(4, 4).unwrap()).unwrap(),
            EqualityCase::NotEqualityCase
        );
        // C5 blow-up with smallest part n/8: δ₂ = n/8 but it maps to C5.
        let (g, _) = blow_up(&BlowupSpec::new(c5(), vec![1, 3, 1, 1, 2]).unwrap()).unwrap();
        assert_eq!(min_common_degree(&g).unwrap(), CommonDegree::Finite(1));
        assert!(matches!(
            check_equality_case(&g).unwrap(),
            EqualityCase::HomomorphicAtEighth { .. }
        ));
    }
}
