//! Per-graph invariant summary used by `analyze` and `search`.

use serde::Serialize;

use codegree_core::generators::{cycle, CorpusItem, Provenance};
use codegree_core::structure::ConstructionFailure;
use codegree_core::theorems::{check_c3c5_free_corollary, check_short_odd_cycle_lemma};
use codegree_core::{
    check_bipartite_theorem, check_c5_hom_theorem, check_c5free_theorem, check_equality_case,
    construct_c5_homomorphism, find_homomorphism, is_bipartite, is_c5_free, is_maximal_triangle_free,
    is_triangle_free, min_common_degree, min_degree, odd_girth, recognize_blow_up, to_graph6, C5Outcome,
    CommonDegree, EqualityCase, HomMap, Statement, Verdict,
};

#[derive(Debug, Clone, Serialize)]
pub struct HomC5 {
    /// `bipartite`, `blowup`, `failed`, or `not_triangle_free`.
    pub construction: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<ConstructionFailure>,
    pub oracle_used: bool,
    pub exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<HomMap>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlowupSummary {
    /// graph6 of the twin quotient.
    pub pattern: String,
    pub sizes: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EqualitySummary {
    pub case: &'static str,
    pub consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictSummary {
    pub statement: Statement,
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl From<&Verdict> for VerdictSummary {
    fn from(v: &Verdict) -> Self {
        Self {
            statement: v.statement,
            hypothesis: v.hypothesis,
            conclusion: v.conclusion,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub graph6: String,
    pub provenance: Provenance,
    pub n: usize,
    pub edges: usize,
    pub min_degree: Option<usize>,
    pub common_degree: Option<CommonDegree>,
    pub triangle_free: bool,
    pub odd_girth: Option<usize>,
    pub bipartite: bool,
    pub c5_free: bool,
    pub maximal_triangle_free: Option<bool>,
    pub hom_c5: HomC5,
    pub blow_up: BlowupSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_case: Option<EqualitySummary>,
    pub verdicts: Vec<VerdictSummary>,
    pub violations: Vec<Verdict>,
}

fn hom_c5(item: &CorpusItem, triangle_free: bool) -> HomC5 {
    let g = &item.graph;
    if !triangle_free {
        return HomC5 {
            construction: "not_triangle_free",
            failure: None,
            oracle_used: false,
            exists: false,
            map: None,
        };
    }
    let outcome = construct_c5_homomorphism(g).expect("triangle-free").outcome;
    let (construction, failure, map) = match outcome {
        C5Outcome::Bipartite { map } => ("bipartite", None, Some(map)),
        C5Outcome::Blowup { map, .. } => ("blowup", None, Some(map)),
        C5Outcome::Failed { failure, .. } => ("failed", Some(failure), None),
    };
    if map.is_some() {
        return HomC5 {
            construction,
            failure,
            oracle_used: false,
            exists: true,
            map,
        };
    }
    let map = find_homomorphism(g, &cycle(5).expect("five"));
    HomC5 {
        construction,
        failure,
        oracle_used: true,
        exists: map.is_some(),
        map,
    }
}

pub fn analyze(item: &CorpusItem) -> Analysis {
    let g = &item.graph;
    let triangle_free = is_triangle_free(g);
    let r = recognize_blow_up(g);
    let equality_case = if triangle_free {
        match check_equality_case(g).expect("triangle-free") {
            EqualityCase::NotEqualityCase => None,
            case => Some(EqualitySummary {
                consistent: case.is_consistent(),
                case: match case {
                    EqualityCase::BalancedC5 { .. } => "balanced_c5",
                    EqualityCase::BalancedMobius { .. } => "balanced_mobius",
                    EqualityCase::HomomorphicAtEighth { .. } => "homomorphic_at_eighth",
                    EqualityCase::NotEqualityCase => unreachable!(),
                },
            }),
        }
    } else {
        None
    };
    let verdicts = [
        check_bipartite_theorem(g),
        check_c5_hom_theorem(g),
        check_c5free_theorem(g),
        check_short_odd_cycle_lemma(g),
        check_c3c5_free_corollary(g),
    ];
    Analysis {
        graph6: to_graph6(g),
        provenance: item.provenance.clone(),
        n: g.n(),
        edges: g.edge_count(),
        min_degree: min_degree(g).ok(),
        common_degree: min_common_degree(g).ok(),
        triangle_free,
        odd_girth: odd_girth(g),
        bipartite: is_bipartite(g).is_bipartite(),
        c5_free: is_c5_free(g),
        maximal_triangle_free: triangle_free.then(|| is_maximal_triangle_free(g).expect("triangle-free")),
        hom_c5: hom_c5(item, triangle_free),
        blow_up: BlowupSummary {
            pattern: to_graph6(&r.spec.pattern),
            sizes: r.spec.sizes,
        },
        equality_case,
        verdicts: verdicts.iter().map(VerdictSummary::from).collect(),
        violations: verdicts.into_iter().filter(Verdict::is_violation).collect(),
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

/// Human-readable block for `--format text`.
pub fn render_text(a: &Analysis) -> String {
    let mut lines = vec![
        format!("graph {}", a.graph6),
        format!("  n = {}, e = {}, min degree = {}, common degree = {}", a.n, a.edges, opt(&a.min_degree), opt(&a.common_degree)),
        format!(
            "  triangle-free: {}, bipartite: {}, C5-free: {}, odd girth: {}, maximal: {}",
            a.triangle_free,
            a.bipartite,
            a.c5_free,
            opt(&a.odd_girth),
            opt(&a.maximal_triangle_free)
        ),
        format!(
            "  hom to C5: {} (construction: {}{})",
            if a.hom_c5.exists { "yes" } else { "none" },
            a.hom_c5.construction,
            if a.hom_c5.oracle_used { ", search used" } else { "" }
        ),
        format!("  twin quotient {} with part sizes {:?}", a.blow_up.pattern, a.blow_up.sizes),
    ];
    if let Some(e) = &a.equality_case {
        lines.push(format!("  equality case: {} (consistent: {})", e.case, e.consistent));
    }
    for v in &a.verdicts {
        let status = match (v.hypothesis, v.conclusion) {
            (true, true) => "holds",
            (true, false) => "VIOLATED",
            (false, _) => "hypothesis not satisfied",
        };
        lines.push(format!("  {}: {status}", v.statement));
    }
    lines.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use codegree_core::generators::{g2, mobius_ladder};

    #[test]
    fn mobius_ladder_summary() {
        let a = analyze(&CorpusItem::new(mobius_ladder(), Provenance::Named("mobius_ladder".into())));
        assert_eq!(a.common_degree, Some(CommonDegree::Finite(1)));
        assert!(a.triangle_free);
        assert_eq!(a.odd_girth, Some(5));
        assert!(!a.hom_c5.exists && a.hom_c5.oracle_used);
        assert!(a.violations.is_empty());
        assert!(render_text(&a).contains("hom to C5: none"));
    }

    #[test]
    fn g2_summary() {
        let a = analyze(&CorpusItem::new(g2(7).unwrap(), Provenance::Named("G2(7)".into())));
        assert_eq!((a.min_degree, a.common_degree), (Some(2), Some(CommonDegree::Finite(1))));
        assert_eq!(a.hom_c5.construction, "blowup");
        assert!(a.hom_c5.exists);
        assert_eq!(a.blow_up.sizes, vec![1, 1, 2, 1, 2]);
    }
}
