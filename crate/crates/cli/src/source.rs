//! Graph sources shared by every subcommand.
//!
//! ```text
//! named:EXPR                      named_graph expression, e.g. named:G1(8)
//! blowup:PATTERN:[s1,s2,...]      blow-up with the given part sizes
//! balanced:PATTERN:NS             balanced blow-ups, one per n
//! random:trianglefree:NS:COUNT[:P]
//! random:gnp:NS:COUNT[:P]
//! random:maximal:NS:COUNT
//! enum:trianglefree:NS            every isomorphism class
//! enum:all:NS
//! file:PATH  or a bare path       graph6 lines, edge list or adjacency JSON
//! ```
//!
//! `NS` is a single count, an inclusive range `a..b` (or `a..=b`), or a
//! comma-separated list.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use codegree_core::generators::{
    enumerate_levels, named_graph, random_corpus, CorpusItem, Family, Provenance, RandomFamily, MAX_ALL_GRAPHS_N,
    MAX_TRIANGLE_FREE_N,
};
use codegree_core::io::{parse_edge_list, AdjacencyJson};
use codegree_core::{balanced_blow_up, blow_up, from_graph6, BlowupSpec, Graph};

use crate::CliError;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn parse_n_range(s: &str) -> Result<Vec<usize>, CliError> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("bad vertex count `{t}` in `{s}`")))
    };
    let ns: Vec<usize> = if let Some((a, b)) = s.split_once("..") {
        let (lo, hi) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
        if lo > hi {
            return Err(usage(format!("empty range `{s}`")));
        }
        (lo..=hi).collect()
    } else {
        s.split(',').map(num).collect::<Result<_, _>>()?
    };
    if ns.is_empty() {
        return Err(usage(format!("empty range `{s}`")));
    }
    Ok(ns)
}

fn format_ns(ns: &[usize]) -> String {
    let contiguous = ns.windows(2).all(|w| w[1] == w[0] + 1);
    match ns {
        [one] => one.to_string(),
        [first, .., last] if contiguous => format!("{first}..{last}"),
        _ => ns.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Named(String),
    Blowup { pattern: String, sizes: Vec<usize> },
    Balanced { pattern: String, ns: Vec<usize> },
    Random {
        family: RandomFamily,
        ns: Vec<usize>,
        count: usize,
        p: Option<f64>,
    },
    Enumerated { family: Family, ns: Vec<usize> },
    File(PathBuf),
}

impl Source {
    pub fn enumerated(family: Family, ns: Vec<usize>) -> Self {
        Source::Enumerated { family, ns }
    }

    /// Replaces the vertex counts of a generated source.
    pub fn with_ns(self, new: Vec<usize>) -> Result<Self, CliError> {
        Ok(match self {
            Source::Balanced { pattern, .. } => Source::Balanced { pattern, ns: new },
            Source::Random { family, count, p, .. } => Source::Random {
                family,
                ns: new,
                count,
                p,
            },
            Source::Enumerated { family, .. } => Source::Enumerated { family, ns: new },
            other => return Err(usage(format!("--n does not apply to `{other}`"))),
        })
    }

    pub fn load(&self, seed: u64) -> Result<Vec<CorpusItem>, CliError> {
        match self {
            Source::Named(expr) => Ok(vec![CorpusItem::new(named_graph(expr)?, Provenance::Named(expr.clone()))]),
            Source::Blowup { pattern, sizes } => {
                let spec = BlowupSpec::new(named_graph(pattern)?, sizes.clone()).map_err(|e| usage(e.to_string()))?;
                let (g, _) = blow_up(&spec).map_err(|e| usage(e.to_string()))?;
                Ok(vec![CorpusItem::new(g, Provenance::Blowup(self.to_string()))])
            }
            Source::Balanced { pattern, ns } => {
                let f = named_graph(pattern)?;
                ns.iter()
                    .map(|&n| {
                        let (g, _) = balanced_blow_up(&f, n).map_err(|e| usage(e.to_string()))?;
                        Ok(CorpusItem::new(g, Provenance::Blowup(format!("balanced:{pattern}:{n}"))))
                    })
                    .collect()
            }
            Source::Random { family, ns, count, p } => Ok(random_corpus(*family, ns, *count, *p, seed)?),
            Source::Enumerated { family, ns } => {
                let max = *ns.iter().max().expect("non-empty");
                let limit = match family {
                    Family::TriangleFree => MAX_TRIANGLE_FREE_N,
                    Family::All => MAX_ALL_GRAPHS_N,
                };
                if ns.contains(&0) || max > limit {
                    return Err(usage(format!("enumeration supports 1 <= n <= {limit}")));
                }
                let mut levels = enumerate_levels(*family, max)?;
                let mut out = Vec::new();
                for &n in ns {
                    out.append(&mut std::mem::take(&mut levels[n - 1]));
                }
                Ok(out)
            }
            Source::File(path) => load_file(path),
        }
    }
}

impl FromStr for Source {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        match kind {
            "named" => Ok(Source::Named(rest.to_string())),
            "blowup" => {
                let (pattern, sizes) = rest
                    .split_once(':')
                    .ok_or_else(|| usage("expected blowup:PATTERN:[sizes]"))?;
                let inner = sizes
                    .trim()
                    .strip_prefix('[')
                    .and_then(|t| t.strip_suffix(']'))
                    .ok_or_else(|| usage("blow-up sizes must be written [s1,s2,...]"))?;
                let sizes = inner
                    .split(',')
                    .map(|t| t.trim().parse().map_err(|_| usage(format!("bad part size `{t}`"))))
                    .collect::<Result<_, _>>()?;
                Ok(Source::Blowup {
                    pattern: pattern.to_string(),
                    sizes,
                })
            }
            "balanced" => {
                let (pattern, ns) = rest.rsplit_once(':').ok_or_else(|| usage("expected balanced:PATTERN:NS"))?;
                Ok(Source::Balanced {
                    pattern: pattern.to_string(),
                    ns: parse_n_range(ns)?,
                })
            }
            "random" => {
                let parts: Vec<&str> = rest.split(':').collect();
                let family = match parts.first().copied() {
                    Some("trianglefree") => RandomFamily::TriangleFree,
                    Some("gnp") => RandomFamily::Gnp,
                    Some("maximal") => RandomFamily::Maximal,
                    _ => return Err(usage("expected random:trianglefree|gnp|maximal:NS:COUNT[:P]")),
                };
                if !(3..=4).contains(&parts.len()) || (family == RandomFamily::Maximal && parts.len() == 4) {
                    return Err(usage(format!("malformed random source `{s}`")));
                }
                let count = parts[2].parse().map_err(|_| usage(format!("bad count `{}`", parts[2])))?;
                let p = match parts.get(3) {
                    Some(t) => {
                        let p: f64 = t.parse().map_err(|_| usage(format!("bad probability `{t}`")))?;
                        if !(0.0..=1.0).contains(&p) {
                            return Err(usage(format!("probability {p} outside [0, 1]")));
                        }
                        Some(p)
                    }
                    None => None,
                };
                Ok(Source::Random {
                    family,
                    ns: parse_n_range(parts[1])?,
                    count,
                    p,
                })
            }
            "enum" => {
                let (family, ns) = rest.split_once(':').ok_or_else(|| usage("expected enum:FAMILY:NS"))?;
                let family = match family {
                    "trianglefree" | "triangle-free" => Family::TriangleFree,
                    "all" => Family::All,
                    other => return Err(usage(format!("unknown enumeration family `{other}`"))),
                };
                Ok(Source::Enumerated {
                    family,
                    ns: parse_n_range(ns)?,
                })
            }
            "file" => Ok(Source::File(PathBuf::from(rest))),
            _ if Path::new(s).exists() => Ok(Source::File(PathBuf::from(s))),
            _ => Err(usage(format!("unrecognized graph source `{s}`"))),
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Named(e) => write!(f, "named:{e}"),
            Source::Blowup { pattern, sizes } => {
                let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
                write!(f, "blowup:{pattern}:[{}]", sizes.join(","))
            }
            Source::Balanced { pattern, ns } => write!(f, "balanced:{pattern}:{}", format_ns(ns)),
            Source::Random { family, ns, count, p } => {
                let kind = match family {
                    RandomFamily::TriangleFree => "trianglefree",
                    RandomFamily::Gnp => "gnp",
                    RandomFamily::Maximal => "maximal",
                };
                write!(f, "random:{kind}:{}:{count}", format_ns(ns))?;
                match p {
                    Some(p) => write!(f, ":{p}"),
                    None => Ok(()),
                }
            }
            Source::Enumerated { family, ns } => {
                let kind = match family {
                    Family::TriangleFree => "trianglefree",
                    Family::All => "all",
                };
                write!(f, "enum:{kind}:{}", format_ns(ns))
            }
            Source::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// Reads adjacency JSON (`.json`), an edge list (lines with spaces) or graph6
/// lines. Blank lines and `#` comments are ignored; an empty file yields no
/// graphs.
pub fn load_file(path: &Path) -> Result<Vec<CorpusItem>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let bad = |message: String| CliError::Input {
        path: path.display().to_string(),
        message,
    };
    let content: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if content.is_empty() {
        return Ok(Vec::new());
    }
    let file = |line| Provenance::File { line };

    if path.extension().is_some_and(|e| e == "json") || content[0].1.starts_with(['{', '[']) {
        let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
        let objects = match value {
            serde_json::Value::Array(items) => items,
            single => vec![single],
        };
        return objects
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                let adj: AdjacencyJson = serde_json::from_value(v).map_err(|e| bad(e.to_string()))?;
                let g = Graph::try_from(&adj).map_err(|e| bad(e.to_string()))?;
                Ok(CorpusItem::new(g, file(i + 1)))
            })
            .collect();
    }
    if content.iter().any(|(_, l)| l.contains(char::is_whitespace)) {
        let g = parse_edge_list(&text).map_err(|e| bad(e.to_string()))?;
        return Ok(vec![CorpusItem::new(g, file(content[0].0))]);
    }
    content
        .into_iter()
        .map(|(line, l)| {
            let g = from_graph6(l).map_err(|e| bad(format!("line {line}: {e}")))?;
            Ok(CorpusItem::new(g, file(line)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_n_range("5..9").unwrap(), vec![5, 6, 7, 8, 9]);
        assert_eq!(parse_n_range("5..=6").unwrap(), vec![5, 6]);
        assert_eq!(parse_n_range("5,10").unwrap(), vec![5, 10]);
        assert_eq!(parse_n_range("8").unwrap(), vec![8]);
        assert!(parse_n_range("9..5").is_err());
        assert!(parse_n_range("x").is_err());
    }

    #[test]
    fn sources_round_trip_through_display() {
        for s in [
            "named:G1(8)",
            "blowup:C5:[2,2,2,2,2]",
            "balanced:mobius_ladder:8,16,24",
            "random:trianglefree:10..60:1000",
            "random:gnp:5..9:10:0.3",
            "random:maximal:12:5",
            "enum:trianglefree:5..9",
            "enum:all:8",
        ] {
            assert_eq!(s.parse::<Source>().unwrap().to_string(), s);
        }
        assert!("blowup:C5:2,2".parse::<Source>().is_err());
        assert!("random:maximal:12:5:0.5".parse::<Source>().is_err());
        assert!("enum:bipartite:5".parse::<Source>().is_err());
        assert!("nonsense".parse::<Source>().is_err());
    }

    #[test]
    fn loading() {
        let items = "blowup:C5:[2,2,2,2,2]".parse::<Source>().unwrap().load(0).unwrap();
        assert_eq!(items.len(), 1);
        assert_eq!(items[0].graph.n(), 10);
        assert_eq!("enum:trianglefree:6".parse::<Source>().unwrap().load(0).unwrap().len(), 38);
        assert_eq!("enum:trianglefree:1..4".parse::<Source>().unwrap().load(0).unwrap().len(), 13);
        assert!("enum:trianglefree:11".parse::<Source>().unwrap().load(0).is_err());
        assert!("named:G1(12)".parse::<Source>().unwrap().load(0).is_err());
    }
}
