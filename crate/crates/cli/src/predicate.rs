//! Search predicates: a conjunction of invariant flags and comparisons.
//!
//! ```text
//! predicate  := atom (AND atom)*          AND is `&`, `&&`, `∧` or `and`
//! atom       := [NOT] flag | quantity OP rhs
//! NOT        := `!` | `¬` | `not `
//! flag       := triangle-free | bipartite | c5-free | maximal | homC5
//! quantity   := d2 | delta | n | e | oddgirth
//! OP         := = | == | != | ≠ | < | <= | ≤ | > | >= | ≥
//! rhs        := INT | [A]n[/B] | floor([A]n/B) | ⌊[A]n/B⌋
//! ```
//!
//! `d2 = n/8` compares exactly (`8·d2 = n`); `d2 > floor(n/8)` compares with
//! the rounded-down value. An infinite `δ₂` (complete graphs) and the odd
//! girth of a bipartite graph compare greater than every number. Where a
//! quantity is undefined (`δ₂` below two vertices, `δ` of the empty graph)
//! every comparison is false.

use std::cell::OnceCell;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use codegree_core::generators::cycle;
use codegree_core::{
    construct_c5_homomorphism, find_homomorphism, is_bipartite, is_c5_free, is_maximal_triangle_free,
    is_triangle_free, min_common_degree, min_degree, odd_girth, CommonDegree, Graph,
};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flag {
    TriangleFree,
    Bipartite,
    C5Free,
    Maximal,
    HomC5,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Quantity {
    CommonDegree,
    MinDegree,
    Order,
    Size,
    OddGirth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rhs {
    Const(i64),
    /// `num·n/den`
    Fraction { num: i64, den: i64 },
    /// `⌊num·n/den⌋`
    Floor { num: i64, den: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Atom {
    Flag { flag: Flag, negated: bool },
    Compare { lhs: Quantity, op: Op, rhs: Rhs },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicate {
    atoms: Vec<Atom>,
    text: String,
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

fn normalize(s: &str) -> String {
    s.trim()
        .to_lowercase()
        .replace('₂', "2")
        .replace('₅', "5")
        .replace(['_', ' '], "")
}

fn parse_flag(s: &str) -> Option<Flag> {
    Some(match normalize(s).as_str() {
        "triangle-free" | "trianglefree" | "tf" | "c3-free" => Flag::TriangleFree,
        "bipartite" => Flag::Bipartite,
        "c5-free" | "c5free" => Flag::C5Free,
        "maximal" | "maximal-triangle-free" | "mtf" => Flag::Maximal,
        "homc5" | "hom-c5" | "hom(c5)" => Flag::HomC5,
        _ => return None,
    })
}

fn parse_quantity(s: &str) -> Option<Quantity> {
    Some(match normalize(s).as_str() {
        "d2" | "δ2" | "delta2" | "codegree" => Quantity::CommonDegree,
        "delta" | "δ" | "mindeg" => Quantity::MinDegree,
        "n" => Quantity::Order,
        "e" | "m" | "edges" => Quantity::Size,
        "oddgirth" | "odd-girth" | "og" => Quantity::OddGirth,
        _ => return None,
    })
}

/// `A n / B`, `A*n/B`, `n/B`, `n`, `A n`.
fn parse_linear(s: &str) -> Option<(i64, i64)> {
    let (num_part, den) = match s.split_once('/') {
        Some((a, b)) => (a, b.parse::<i64>().ok().filter(|&d| d > 0)?),
        None => (s, 1),
    };
    let coef = num_part.strip_suffix('n')?.trim_end_matches('*');
    let num = if coef.is_empty() { 1 } else { coef.parse().ok()? };
    Some((num, den))
}

fn parse_rhs(s: &str) -> Option<Rhs> {
    let s = normalize(s);
    if let Ok(k) = s.parse::<i64>() {
        return Some(Rhs::Const(k));
    }
    let floor_inner = s
        .strip_prefix("floor(")
        .and_then(|t| t.strip_suffix(')'))
        .or_else(|| s.strip_prefix('⌊').and_then(|t| t.strip_suffix('⌋')));
    if let Some(inner) = floor_inner {
        let (num, den) = parse_linear(inner)?;
        return Some(Rhs::Floor { num, den });
    }
    let (num, den) = parse_linear(&s)?;
    Some(Rhs::Fraction { num, den })
}

const OPS: [(&str, Op); 10] = [
    ("<=", Op::Le),
    (">=", Op::Ge),
    ("!=", Op::Ne),
    ("==", Op::Eq),
    ("≤", Op::Le),
    ("≥", Op::Ge),
    ("≠", Op::Ne),
    ("=", Op::Eq),
    ("<", Op::Lt),
    (">", Op::Gt),
];

fn parse_atom(s: &str) -> Result<Atom, CliError> {
    let err = || CliError::Usage(format!("cannot parse predicate term `{}`", s.trim()));
    let t = s.trim();
    for (sym, op) in OPS {
        if let Some((l, r)) = t.split_once(sym) {
            let lhs = parse_quantity(l).ok_or_else(err)?;
            let rhs = parse_rhs(r).ok_or_else(err)?;
            return Ok(Atom::Compare { lhs, op, rhs });
        }
    }
    let (negated, rest) = if let Some(r) = t.strip_prefix('!').or_else(|| t.strip_prefix('¬')) {
        (true, r)
    } else if let Some(r) = t.strip_prefix("not ") {
        (true, r)
    } else {
        (false, t)
    };
    let flag = parse_flag(rest).ok_or_else(err)?;
    Ok(Atom::Flag { flag, negated })
}

impl FromStr for Predicate {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let unified = s.replace("&&", "&").replace('∧', "&").replace(" and ", "&").replace(" AND ", "&");
        let atoms = unified
            .split('&')
            .filter(|t| !t.trim().is_empty())
            .map(parse_atom)
            .collect::<Result<Vec<_>, _>>()?;
        if atoms.is_empty() {
            return Err(CliError::Usage("empty predicate".into()));
        }
        Ok(Predicate {
            atoms,
            text: s.trim().to_string(),
        })
    }
}

/// Lazily computed invariants of one graph.
struct Facts<'a> {
    g: &'a Graph,
    triangle_free: OnceCell<bool>,
    hom_c5: OnceCell<bool>,
}

impl Facts<'_> {
    fn triangle_free(&self) -> bool {
        *self.triangle_free.get_or_init(|| is_triangle_free(self.g))
    }

    fn flag(&self, flag: Flag) -> bool {
        let g = self.g;
        match flag {
            Flag::TriangleFree => self.triangle_free(),
            Flag::Bipartite => is_bipartite(g).is_bipartite(),
            Flag::C5Free => is_c5_free(g),
            Flag::Maximal => self.triangle_free() && is_maximal_triangle_free(g).unwrap_or(false),
            Flag::HomC5 => *self.hom_c5.get_or_init(|| {
                self.triangle_free()
                    && (construct_c5_homomorphism(g).is_ok_and(|c| c.succeeded())
                        || find_homomorphism(g, &cycle(5).expect("five")).is_some())
            }),
        }
    }

    fn quantity(&self, q: Quantity) -> Value {
        let g = self.g;
        let finite = |v: usize| Value::Finite(v as i64);
        match q {
            Quantity::CommonDegree => match min_common_degree(g) {
                Ok(CommonDegree::Finite(d)) => finite(d),
                Ok(CommonDegree::Infinite) => Value::Infinite,
                Err(_) => Value::Undefined,
            },
            Quantity::MinDegree => min_degree(g).map_or(Value::Undefined, finite),
            Quantity::Order => finite(g.n()),
            Quantity::Size => finite(g.edge_count()),
            Quantity::OddGirth => odd_girth(g).map_or(Value::Infinite, finite),
        }
    }
}

enum Value {
    Finite(i64),
    Infinite,
    Undefined,
}

fn compare(value: Value, rhs: Rhs, n: i64) -> Option<Ordering> {
    let v = match value {
        Value::Finite(v) => v,
        Value::Infinite => return Some(Ordering::Greater),
        Value::Undefined => return None,
    };
    Some(match rhs {
        Rhs::Const(k) => v.cmp(&k),
        Rhs::Fraction { num, den } => (v * den).cmp(&(num * n)),
        Rhs::Floor { num, den } => v.cmp(&(num * n).div_euclid(den)),
    })
}

impl Predicate {
    pub fn matches(&self, g: &Graph) -> bool {
        let facts = Facts {
            g,
            triangle_free: OnceCell::new(),
            hom_c5: OnceCell::new(),
        };
        self.atoms.iter().all(|atom| match *atom {
            Atom::Flag { flag, negated } => facts.flag(flag) != negated,
            Atom::Compare { lhs, op, rhs } => {
                let Some(ord) = compare(facts.quantity(lhs), rhs, g.n() as i64) else {
                    return false;
                };
                match op {
                    Op::Eq => ord == Ordering::Equal,
                    Op::Ne => ord != Ordering::Equal,
                    Op::Lt => ord == Ordering::Less,
                    Op::Le => ord != Ordering::Greater,
                    Op::Gt => ord == Ordering::Greater,
                    Op::Ge => ord != Ordering::Less,
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use codegree_core::generators::{complete, complete_bipartite, mobius_ladder};
    use codegree_core::balanced_blow_up;

    fn p(s: &str) -> Predicate {
        s.parse().unwrap()
    }

    #[test]
    fn parses_both_notations() {
        let ascii = p("triangle-free & d2 = n/8 & !homC5");
        let unicode = p("triangle-free ∧ δ₂ = n/8 ∧ ¬homC₅");
        assert_eq!(ascii.atoms, unicode.atoms);
        assert_eq!(
            p("d2 > floor(n/8)").atoms,
            vec![Atom::Compare {
                lhs: Quantity::CommonDegree,
                op: Op::Gt,
                rhs: Rhs::Floor { num: 1, den: 8 }
            }]
        );
        assert_eq!(p("delta >= 2n/5").atoms, p("δ ≥ 2*n/5").atoms);
        assert_eq!(p("d2 > ⌊n/5⌋").atoms, p("d2 > floor(n/5)").atoms);
        for bad in ["", "d2 ~ 3", "colorful", "d2 = n/0", "q = 3"] {
            assert!(bad.parse::<Predicate>().is_err(), "{bad}");
        }
    }

    #[test]
    fn evaluates() {
        let hm = mobius_ladder();
        assert!(p("triangle-free & d2 = n/8 & !homC5").matches(&hm));
        assert!(!p("bipartite").matches(&hm));
        assert!(p("oddgirth = 5 & e = 12 & delta = 3").matches(&hm));
        let (b10, _) = balanced_blow_up(&cycle(5).unwrap(), 10).unwrap();
        assert!(p("triangle-free ∧ δ₂ = n/5 ∧ ¬bipartite ∧ homC5").matches(&b10));
        assert!(!p("d2 > floor(n/5)").matches(&b10));
        // Infinite δ₂ exceeds everything.
        let k4 = complete(4).unwrap();
        assert!(p("d2 > n").matches(&k4));
        assert!(!p("d2 = 3").matches(&k4));
        assert!(!p("d2 > n").matches(&complete_bipartite(3, 3).unwrap()));
        assert!(p("maximal").matches(&complete_bipartite(3, 3).unwrap()));
        let k1 = Graph::empty(1).unwrap();
        assert!(!p("d2 > n").matches(&k1) && !p("d2 != 0").matches(&k1));
    }
}
