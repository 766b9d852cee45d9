use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use codegree_core::generators::{cycle, CorpusItem, Family, Provenance};
use codegree_core::{
    check_lemma_min_degree_implies_delta2, check_statement, find_homomorphism, to_graph6, Statement, Verdict, Witness,
};

use crate::analysis::{analyze, render_text, Analysis};
use crate::predicate::Predicate;
use crate::report::Report;
use crate::source::{parse_n_range, Source};
use crate::CliError;

pub const DEFAULT_ALPHAS: [&str; 2] = ["1/24", "1/15"];

/// Corpus used by `verify` when none is given.
pub fn default_corpus(statement: Statement) -> Source {
    let tf = |ns: std::ops::RangeInclusive<usize>| Source::enumerated(Family::TriangleFree, ns.collect());
    match statement {
        Statement::BipartiteThreshold => tf(5..=9),
        Statement::C5HomThreshold => tf(8..=9),
        Statement::C5Free => Source::enumerated(Family::All, (5..=8).collect()),
        Statement::MinDegree => Source::Random {
            family: codegree_core::generators::RandomFamily::Maximal,
            ns: (10..=60).collect(),
            count: 1000,
            p: None,
        },
        Statement::ShortOddCycle | Statement::C3C5Free => tf(2..=9),
        Statement::DisjointCommonNeighborhoods => tf(4..=9),
        Statement::DisjointParts => tf(5..=9),
        Statement::MobiusBound => tf(8..=9),
    }
}

pub fn parse_alphas(s: &str) -> Result<Vec<Ratio<i64>>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Ratio<i64>>()
                .map_err(|_| CliError::Usage(format!("bad rational `{t}` (write it as p/q)")))
        })
        .collect()
}

/// Builds the corpus from `--corpus`, `--input` and `--n`.
pub fn resolve_corpus(
    corpus: Option<&str>,
    input: Option<&std::path::Path>,
    n: Option<&str>,
    default: Source,
) -> Result<Source, CliError> {
    let source = match (corpus, input) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give either --corpus or --input, not both".into())),
        (Some(c), None) => c.parse()?,
        (None, Some(p)) => Source::File(p.to_path_buf()),
        (None, None) => default,
    };
    match n {
        Some(n) => source.with_ns(parse_n_range(n)?),
        None => Ok(source),
    }
}

#[derive(Debug, Serialize)]
struct VerdictRecord {
    statement: Statement,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<String>,
    hypothesis: bool,
    conclusion: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
}

#[derive(Debug, Serialize)]
struct VerifyRecord {
    graph6: String,
    provenance: Provenance,
    verdicts: Vec<VerdictRecord>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    construction_failed: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    oracle_disagrees: bool,
}

impl VerdictRecord {
    fn from_verdict(v: Verdict, alpha: Option<String>, keep_witness: bool) -> Self {
        let keep = keep_witness || v.is_violation();
        Self {
            statement: v.statement,
            alpha,
            hypothesis: v.hypothesis,
            conclusion: v.conclusion,
            witness: if keep { v.witness } else { None },
            skipped: None,
        }
    }

    fn is_violation(&self) -> bool {
        self.hypothesis && !self.conclusion
    }
}

fn verify_one(statement: Statement, item: &CorpusItem, alphas: &[Ratio<i64>], witnesses: bool) -> VerifyRecord {
    let g = &item.graph;
    let mut construction_failed = false;
    let mut oracle_disagrees = false;
    let verdicts = match statement {
        Statement::MinDegree => alphas
            .iter()
            .map(|&a| match check_lemma_min_degree_implies_delta2(g, a) {
                Ok(v) => VerdictRecord::from_verdict(v, Some(a.to_string()), witnesses),
                Err(e) => VerdictRecord {
                    statement,
                    alpha: Some(a.to_string()),
                    hypothesis: false,
                    conclusion: false,
                    witness: None,
                    skipped: Some(e.to_string()),
                },
            })
            .collect(),
        _ => {
            let v = check_statement(statement, g).expect("graph-only statement");
            if statement == Statement::C5HomThreshold && v.hypothesis {
                let constructive = matches!(v.witness, Some(Witness::HomMap { constructive: true, .. }));
                construction_failed = !constructive;
                oracle_disagrees = constructive && find_homomorphism(g, &cycle(5).expect("five")).is_none();
            }
            let keep = witnesses || construction_failed || oracle_disagrees;
            vec![VerdictRecord::from_verdict(v, None, keep)]
        }
    };
    VerifyRecord {
        graph6: to_graph6(g),
        provenance: item.provenance.clone(),
        verdicts,
        construction_failed,
        oracle_disagrees,
    }
}

pub fn verify(
    statement: Statement,
    corpus: &Source,
    alphas: &[Ratio<i64>],
    witnesses: bool,
    seed: u64,
) -> Result<Report, CliError> {
    let items = corpus.load(seed)?;
    let records: Vec<VerifyRecord> = items
        .par_iter()
        .map(|item| verify_one(statement, item, alphas, witnesses))
        .collect();

    let mut arguments = json!({
        "statement": statement.name(),
        "corpus": corpus.to_string(),
        "seed": seed,
        "witnesses": witnesses,
    });
    if statement == Statement::MinDegree {
        arguments["alpha"] = json!(alphas.iter().map(|a| a.to_string()).collect::<Vec<_>>());
    }
    let mut report = Report::new("verify", arguments);
    let agg = &mut report.aggregate;
    agg.graphs_scanned = records.len();
    for r in &records {
        agg.hypothesis_satisfied += r.verdicts.iter().filter(|v| v.hypothesis).count();
        let bad = r.verdicts.iter().filter(|v| v.is_violation()).count();
        agg.violations += bad;
        if bad > 0 || r.construction_failed || r.oracle_disagrees {
            agg.violating_graphs.push(r.graph6.clone());
        }
    }
    if statement == Statement::C5HomThreshold {
        agg.construction_failures = Some(records.iter().filter(|r| r.construction_failed).count());
        agg.oracle_disagreements = Some(records.iter().filter(|r| r.oracle_disagrees).count());
    }
    report.records = records
        .iter()
        .map(|r| serde_json::to_value(r).expect("record serializes"))
        .collect();
    Ok(report)
}

fn fill_from_analyses(report: &mut Report, analyses: &[Analysis]) {
    let agg = &mut report.aggregate;
    for a in analyses {
        agg.hypothesis_satisfied += a.verdicts.iter().filter(|v| v.hypothesis).count();
        agg.violations += a.violations.len();
        if !a.violations.is_empty() {
            agg.violating_graphs.push(a.graph6.clone());
        }
    }
    report.records = analyses
        .iter()
        .map(|a| serde_json::to_value(a).expect("analysis serializes"))
        .collect();
}

pub fn analyze_sources(sources: &[Source], seed: u64) -> Result<(Report, Vec<Analysis>), CliError> {
    let mut items = Vec::new();
    for s in sources {
        items.extend(s.load(seed)?);
    }
    let analyses: Vec<Analysis> = items.par_iter().map(analyze).collect();
    let names: Vec<String> = sources.iter().map(Source::to_string).collect();
    let mut report = Report::new("analyze", json!({ "sources": names, "seed": seed }));
    report.aggregate.graphs_scanned = analyses.len();
    fill_from_analyses(&mut report, &analyses);
    Ok((report, analyses))
}

pub fn search(
    predicate: &Predicate,
    corpus: &Source,
    budget: Option<usize>,
    seed: u64,
) -> Result<(Report, Vec<Analysis>), CliError> {
    let items = corpus.load(seed)?;
    let limit = budget.map_or(items.len(), |b| b.min(items.len()));
    let analyses: Vec<Analysis> = items[..limit]
        .par_iter()
        .filter(|item| predicate.matches(&item.graph))
        .map(analyze)
        .collect();
    let mut report = Report::new(
        "search",
        json!({
            "predicate": predicate.to_string(),
            "corpus": corpus.to_string(),
            "budget": budget,
            "seed": seed,
        }),
    );
    report.aggregate.graphs_scanned = limit;
    report.aggregate.matched = Some(analyses.len());
    report.aggregate.budget_exhausted = Some(limit < items.len());
    fill_from_analyses(&mut report, &analyses);
    report.aggregate.hypothesis_satisfied = analyses.len();
    Ok((report, analyses))
}

/// graph6 lines, one per generated graph.
pub fn generate(source: &Source, seed: u64) -> Result<String, CliError> {
    let items = source.load(seed)?;
    Ok(items.iter().map(|i| to_graph6(&i.graph) + "\n").collect())
}

pub fn render_verify_text(report: &Report) -> String {
    let a = &report.aggregate;
    let mut out = format!(
        "{} over {}: {} graphs scanned, {} hypothesis-satisfying, {} violations\n",
        report.arguments["statement"].as_str().unwrap_or("?"),
        report.arguments["corpus"].as_str().unwrap_or("?"),
        a.graphs_scanned,
        a.hypothesis_satisfied,
        a.violations
    );
    if let (Some(c), Some(o)) = (a.construction_failures, a.oracle_disagreements) {
        out += &format!("construction failures: {c}, search disagreements: {o}\n");
    }
    for g in &a.violating_graphs {
        out += &format!("VIOLATION {g}\n");
    }
    out
}

pub fn render_analyses_text(report: &Report, analyses: &[Analysis]) -> String {
    let mut out: Vec<String> = analyses.iter().map(render_text).collect();
    let a = &report.aggregate;
    let mut summary = format!("{} graphs, {} violations", a.graphs_scanned, a.violations);
    if let Some(m) = a.matched {
        summary += &format!(", {m} matched");
    }
    if a.budget_exhausted == Some(true) {
        summary += ", budget exhausted";
    }
    out.push(summary);
    out.join("\n\n") + "\n"
}
