//! Named graph families.

use crate::error::GeneratorError;
use crate::graph::Graph;
use crate::homomorphism::{blow_up, BlowupSpec};

fn bad(family: &'static str, requirement: &'static str, value: impl ToString) -> GeneratorError {
    GeneratorError::BadParameter {
        family,
        requirement,
        value: value.to_string(),
    }
}

/// `C_k`, vertices `0..k` in cyclic order.
pub fn cycle(k: usize) -> Result<Graph, GeneratorError> {
    if k < 3 {
        return Err(bad("cycle", "k >= 3", k));
    }
    Ok(Graph::from_fn(k, |u, v| v == u + 1 || (u == 0 && v == k - 1))?)
}

pub fn path(k: usize) -> Result<Graph, GeneratorError> {
    Ok(Graph::from_fn(k, |u, v| v == u + 1)?)
}

pub fn complete(k: usize) -> Result<Graph, GeneratorError> {
    Ok(Graph::from_fn(k, |_, _| true)?)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GeneratorError> {
    Ok(Graph::from_fn(a + b, |u, v| (u < a) != (v < a))?)
}

/// `T_r(n)`: complete `r`-partite, class sizes `⌊n/r⌋` or `⌈n/r⌉`, larger classes first.
pub fn turan(n: usize, r: usize) -> Result<Graph, GeneratorError> {
    if r == 0 || r > n.max(1) {
        return Err(bad("turan", "1 <= r <= n", r));
    }
    let class_of = |v: usize| {
        let (q, rem) = (n / r, n % r);
        let big = rem * (q + 1);
        if v < big {
            v / (q + 1)
        } else {
            rem + (v - big) / q
        }
    };
    Ok(Graph::from_fn(n, |u, v| class_of(u) != class_of(v))?)
}

/// Möbius ladder `H_M` (Wagner graph): the 8-cycle plus the chords `v_i v_{i+4}`.
pub fn mobius_ladder() -> Graph {
    Graph::from_fn(8, |u, v| matches!(v - u, 1 | 4 | 7)).expect("eight vertices")
}

/// `C_4` blow-up with parts `n/8, 3n/8, n/8, 3n/8`. Requires `8 | n`.
pub fn g1(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 || n % 8 != 0 {
        return Err(bad("G1", "n divisible by 8", n));
    }
    let u = n / 8;
    Ok(blow_up(&BlowupSpec::new(cycle(4)?, vec![u, 3 * u, u, 3 * u])?)?.0)
}

/// `C_5` blow-up with parts `n/7, 2n/7, n/7, n/7, 2n/7`. Requires `7 | n`.
pub fn g2(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 || n % 7 != 0 {
        return Err(bad("G2", "n divisible by 7", n));
    }
    let u = n / 7;
    Ok(blow_up(&BlowupSpec::new(cycle(5)?, vec![u, 2 * u, u, u, 2 * u])?)?.0)
}

/// Parses expressions such as `mobius_ladder`, `G1(8)`, `cycle(7)`,
/// `complete_bipartite(3,3)` or `turan(10,2)`. Short forms `C5`, `K4`,
/// `P4` and `K3,3` are accepted too.
pub fn named_graph(expr: &str) -> Result<Graph, GeneratorError> {
    let expr = expr.trim();
    let unknown = || GeneratorError::UnknownFamily(expr.to_string());
    let (name, args) = match expr.find('(') {
        Some(open) => {
            let inner = expr[open + 1..].strip_suffix(')').ok_or_else(unknown)?;
            let args = inner
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<usize>().map_err(|_| unknown()))
                .collect::<Result<Vec<_>, _>>()?;
            (&expr[..open], args)
        }
        None => (expr, Vec::new()),
    };
    let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(unknown()) };

    match name.to_ascii_lowercase().as_str() {
        "mobius_ladder" | "mobius" | "wagner" | "h_m" | "hm" => {
            arity(0)?;
            Ok(mobius_ladder())
        }
        "cycle" => arity(1).and_then(|_| cycle(args[0])),
        "path" => arity(1).and_then(|_| path(args[0])),
        "complete" => arity(1).and_then(|_| complete(args[0])),
        "empty" | "edgeless" => arity(1).and_then(|_| Ok(Graph::empty(args[0])?)),
        "complete_bipartite" => arity(2).and_then(|_| complete_bipartite(args[0], args[1])),
        "turan" => arity(2).and_then(|_| turan(args[0], args[1])),
        "g1" => arity(1).and_then(|_| g1(args[0])),
        "g2" => arity(1).and_then(|_| g2(args[0])),
        short if args.is_empty() => short_form(short).ok_or_else(unknown)?,
        _ => Err(unknown()),
    }
}

fn short_form(s: &str) -> Option<Result<Graph, GeneratorError>> {
    let (head, rest) = s.split_at(1.min(s.len()));
    if let Some((a, b)) = rest.split_once(',') {
        if head == "k" {
            return Some(complete_bipartite(a.parse().ok()?, b.parse().ok()?));
        }
        return None;
    }
    let k: usize = rest.parse().ok()?;
    match head {
        "c" => Some(cycle(k)),
        "k" => Some(complete(k)),
        "p" => Some(path(k)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{min_common_degree, min_degree, CommonDegree};

    #[test]
    fn mobius_ladder_is_cubic() {
        let hm = mobius_ladder();
        assert_eq!((hm.n(), hm.edge_count()), (8, 12));
        assert!((0..8).all(|v| hm.degree(v) == 3));
        assert!(hm.has_edge(0, 4) && hm.has_edge(3, 7) && hm.has_edge(0, 7));
    }

    #[test]
    fn turan_graphs() {
        let t = turan(10, 2).unwrap();
        assert_eq!(t.edge_count(), 25);
        assert_eq!(t, complete_bipartite(5, 5).unwrap());
        assert_eq!(turan(7, 3).unwrap().edge_count(), 16);
    }

    #[test]
    fn g1_g2_degrees() {
        let g = g1(8).unwrap();
        assert_eq!(min_degree(&g).unwrap(), 2);
        assert_eq!(min_common_degree(&g).unwrap(), CommonDegree::Finite(2));
        let g = g2(7).unwrap();
        assert_eq!(min_degree(&g).unwrap(), 2);
        assert_eq!(min_common_degree(&g).unwrap(), CommonDegree::Finite(1));
    }

    #[test]
    fn divisibility_guards() {
        assert!(matches!(g1(12), Err(GeneratorError::BadParameter { family: "G1", .. })));
        assert!(g2(8).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn parses_expressions() {
        assert_eq!(named_graph("mobius_ladder").unwrap(), mobius_ladder());
        assert_eq!(named_graph("G2(7)").unwrap(), g2(7).unwrap());
        assert_eq!(named_graph("C5").unwrap(), cycle(5).unwrap());
        assert_eq!(named_graph("K3,3").unwrap(), complete_bipartite(3, 3).unwrap());
        assert_eq!(named_graph("complete_bipartite(2, 6)").unwrap(), complete_bipartite(2, 6).unwrap());
        assert!(named_graph("G1(12)").is_err());
        assert!(named_graph("petersen").is_err());
        assert!(named_graph("cycle(5").is_err());
    }
}
