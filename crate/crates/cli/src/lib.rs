//! `codegree` command-line tool: analyze graphs, verify the threshold
//! statements over corpora, search corpora with invariant predicates and
//! generate graph6 files.
//!
//! Exit status: 0 when nothing failed, 1 when a statement was violated (or
//! the explicit `C_5` construction failed above its threshold), 2 on usage
//! or input errors.

pub mod analysis;
pub mod commands;
pub mod predicate;
pub mod report;
pub mod source;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use codegree_core::generators::Family;
use codegree_core::{GeneratorError, Statement};

use crate::commands::{default_corpus, parse_alphas, resolve_corpus, DEFAULT_ALPHAS};
use crate::predicate::Predicate;
use crate::source::Source;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot access {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error(transparent)]
    Generator(#[from] GeneratorError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Trianglefree,
    All,
}

#[derive(Debug, Parser)]
#[command(name = "codegree", version, about = "Minimum common degree analysis and verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report (or generated graphs) here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for random corpora.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants, homomorphism to C5, blow-up structure and verdicts per graph.
    Analyze {
        /// Graph sources such as `named:mobius_ladder` or `blowup:C5:[2,2,2,2,2]`.
        sources: Vec<String>,
        /// Graph file (graph6 lines, edge list or adjacency JSON).
        #[arg(long)]
        input: Vec<PathBuf>,
    },
    /// Check one statement over a corpus.
    Verify {
        /// Statement name or alias, e.g. `main-i`, `c5-hom-threshold`, `lem-1`.
        statement: String,
        /// Corpus source (default depends on the statement).
        #[arg(long)]
        corpus: Option<String>,
        /// Corpus file; same as `--corpus file:PATH`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Vertex counts, e.g. `5..9` (inclusive) or `5,10`.
        #[arg(long)]
        n: Option<String>,
        /// Comma-separated values of alpha for `min-degree`.
        #[arg(long)]
        alpha: Option<String>,
        /// Keep witnesses for every graph, not only failures.
        #[arg(long)]
        witnesses: bool,
    },
    /// List corpus graphs satisfying a predicate, e.g. "triangle-free & d2 = n/8 & !homC5".
    Search {
        predicate: String,
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Vertex counts for the enumerated corpus.
        #[arg(long, default_value = "1..8")]
        n: String,
        #[arg(long, value_enum, default_value_t = FamilyArg::Trianglefree)]
        family: FamilyArg,
        /// Maximum number of corpus graphs to scan.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Write graph6 lines for a family, e.g. `enum:trianglefree:6` or `named:G1(8)`.
    Generate { family: String },
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "stdout".into(),
                    source,
                })
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    let start = Instant::now();
    let elapsed = || start.elapsed().as_millis() as u64;
    let status = |failed: bool| if failed { EXIT_VIOLATION } else { EXIT_OK };
    match &cli.command {
        Command::Analyze { sources, input } => {
            let mut parsed = sources.iter().map(|s| s.parse()).collect::<Result<Vec<Source>, _>>()?;
            parsed.extend(input.iter().map(|p| Source::File(p.clone())));
            if parsed.is_empty() {
                return Err(CliError::Usage("analyze needs a graph source or --input".into()));
            }
            let (mut report, analyses) = commands::analyze_sources(&parsed, cli.seed)?;
            report.wall_time_ms = elapsed();
            match cli.format {
                Format::Json => emit(cli, &report.to_json())?,
                Format::Text => emit(cli, &commands::render_analyses_text(&report, &analyses))?,
            }
            Ok(status(report.aggregate.has_failures()))
        }
        Command::Verify {
            statement,
            corpus,
            input,
            n,
            alpha,
            witnesses,
        } => {
            let statement: Statement = statement.parse().map_err(CliError::Usage)?;
            let corpus = resolve_corpus(corpus.as_deref(), input.as_deref(), n.as_deref(), default_corpus(statement))?;
            let alphas = parse_alphas(alpha.as_deref().unwrap_or(&DEFAULT_ALPHAS.join(",")))?;
            let mut report = commands::verify(statement, &corpus, &alphas, *witnesses, cli.seed)?;
            report.wall_time_ms = elapsed();
            match cli.format {
                Format::Json => emit(cli, &report.to_json())?,
                Format::Text => emit(cli, &commands::render_verify_text(&report))?,
            }
            Ok(status(report.aggregate.has_failures()))
        }
        Command::Search {
            predicate,
            corpus,
            input,
            n,
            family,
            budget,
        } => {
            let predicate: Predicate = predicate.parse()?;
            let family = match family {
                FamilyArg::Trianglefree => Family::TriangleFree,
                FamilyArg::All => Family::All,
            };
            let default = Source::enumerated(family, source::parse_n_range(n)?);
            let corpus = resolve_corpus(corpus.as_deref(), input.as_deref(), None, default)?;
            let (mut report, analyses) = commands::search(&predicate, &corpus, *budget, cli.seed)?;
            report.wall_time_ms = elapsed();
            match cli.format {
                Format::Json => emit(cli, &report.to_json())?,
                Format::Text => emit(cli, &commands::render_analyses_text(&report, &analyses))?,
            }
            Ok(status(report.aggregate.has_failures()))
        }
        Command::Generate { family } => {
            let source: Source = family.parse()?;
            emit(cli, &commands::generate(&source, cli.seed)?)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: &Cli) -> i32 {
    let result = match cli.jobs {
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| execute(cli)),
            Err(e) => Err(CliError::Usage(e.to_string())),
        },
        None => execute(cli),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
