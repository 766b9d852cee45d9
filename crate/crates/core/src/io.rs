//! Text formats besides graph6: plain edge lists, graph6 line files and a
//! JSON adjacency form used in reports.

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Graph, GraphBuilder};
use crate::graph6::{from_graph6, to_graph6};

/// Parses `"n m"` followed by `m` lines of `"u v"`. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let err = |line: usize, message: &str| GraphError::EdgeList {
        line,
        message: message.to_string(),
    };
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing \"n m\" header"))?;
    let (n, m) = parse_pair(header).ok_or_else(|| err(hline, "header must be two integers \"n m\""))?;

    let mut b = GraphBuilder::new(n)?;
    let mut seen = 0usize;
    for (line, text) in lines {
        let (u, v) = parse_pair(text).ok_or_else(|| err(line, "expected two vertex indices \"u v\""))?;
        b.add_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(GraphError::EdgeList {
            line: 1,
            message: format!("header announces {m} edges, found {seen}"),
        });
    }
    Ok(b.build())
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let mut it = s.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One graph per non-blank line. Errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, GraphError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| from_graph6(l.trim()).map_err(|e| (i + 1, e)))
        .collect()
}

pub fn write_graph6_lines<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&to_graph6(g));
        out.push('\n');
    }
    out
}

/// Adjacency lists keyed by vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyJson {
    pub n: usize,
    pub adjacency: Vec<Vec<usize>>,
}

impl From<&Graph> for AdjacencyJson {
    fn from(g: &Graph) -> Self {
        Self {
            n: g.n(),
            adjacency: (0..g.n()).map(|v| g.neighbor_iter(v).collect()).collect(),
        }
    }
}

impl TryFrom<&AdjacencyJson> for Graph {
    type Error = GraphError;

    fn try_from(a: &AdjacencyJson) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(a.n)?;
        for (u, nbrs) in a.adjacency.iter().enumerate() {
            for &v in nbrs {
                b.add_edge(u, v)?;
            }
        }
        Ok(b.build())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 1\n0 0\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(GraphError::EdgeList { line: 2, .. })
        ));
        assert!(parse_edge_list("# comment\n2 1\n\n0 1\n").is_ok());
    }

    #[test]
    fn graph6_lines() {
        let gs = parse_graph6_lines("Dhc\n\nD~{\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(write_graph6_lines(&gs), "Dhc\nD~{\n");
        assert_eq!(parse_graph6_lines("Dhc\nD~\n").unwrap_err().0, 2);
    }

    #[test]
    fn json_adjacency() {
        let g = Graph::from_edge_list(3, &[(0, 2)]).unwrap();
        let a = AdjacencyJson::from(&g);
        assert_eq!(a.adjacency, vec![vec![2], vec![], vec![0]]);
        assert_eq!(Graph::try_from(&a).unwrap(), g);
    }
}
