use serde::Serialize;

pub const SCHEMA: &str = "codegree-report/1";

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Aggregate {
    pub graphs_scanned: usize,
    /// Verdicts (or, for `search`, graphs) whose hypothesis held.
    pub hypothesis_satisfied: usize,
    pub violations: usize,
    /// graph6 of every graph with a violation.
    pub violating_graphs: Vec<String>,
    /// Hypothesis held but the explicit `C_5` construction did not produce
    /// the map (the theorem itself may still hold via the search).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction_failures: Option<usize>,
    /// Hypothesis held, construction succeeded, but the backtracking search
    /// found no map.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_disagreements: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_exhausted: Option<bool>,
}

impl Aggregate {
    /// Anything that should make the run exit with status 1.
    pub fn has_failures(&self) -> bool {
        self.violations > 0
            || self.construction_failures.unwrap_or(0) > 0
            || self.oracle_disagreements.unwrap_or(0) > 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub arguments: serde_json::Value,
    pub records: Vec<serde_json::Value>,
    pub aggregate: Aggregate,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(command: &'static str, arguments: serde_json::Value) -> Self {
        Self {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            command,
            arguments,
            records: Vec::new(),
            aggregate: Aggregate::default(),
            wall_time_ms: 0,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
