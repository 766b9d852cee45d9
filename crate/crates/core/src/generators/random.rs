//! Seeded random graphs.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a seed reproduces the same graph on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::and_is_empty;
use crate::error::{GeneratorError, StructureError};
use crate::generators::enumerate::{CorpusItem, Provenance};
use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};
use crate::generators::named::{complete, cycle, mobius_ladder};
use crate::invariants::require_triangle_free;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Scans all vertex pairs in a shuffled order and inserts each with
/// probability `p` unless it would close a triangle.
pub fn random_triangle_free(n: usize, p: f64, seed: u64) -> Result<Graph, StructureError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(StructureError::InvalidArgument(format!("probability {p} outside [0, 1]")));
    }
    let mut rng = rng(seed);
    let mut pairs = all_pairs(n);
    pairs.shuffle(&mut rng);
    let mut b = GraphBuilder::new(n)?;
    for (u, v) in pairs {
        if rng.gen_bool(p) && and_is_empty(b.row(u), b.row(v)) {
            b.set(u, v);
        }
    }
    Ok(b.build())
}

/// Adds uniformly chosen admissible non-edges until no admissible one is left.
///
/// Admissibility only ever shrinks as edges are added, so walking a single
/// shuffled list of non-edges and taking each one that is still admissible
/// picks every next edge uniformly among the admissible ones.
pub fn complete_to_maximal_triangle_free(g: &Graph, seed: u64) -> Result<Graph, StructureError> {
    require_triangle_free(g)?;
    let mut rng = rng(seed);
    let mut pairs: Vec<_> = all_pairs(g.n()).into_iter().filter(|&(u, v)| !g.has_edge(u, v)).collect();
    pairs.shuffle(&mut rng);
    let mut b = GraphBuilder::from_graph(g);
    for (u, v) in pairs {
        if and_is_empty(b.row(u), b.row(v)) {
            b.set(u, v);
        }
    }
    Ok(b.build())
}

/// Random maximal triangle-free graph on `n` vertices.
///
/// Completing from the empty graph almost always ends far below the
/// interesting minimum-degree range, so the starting graph is drawn from a
/// mix: a sparse random triangle-free graph, or a random spanning subgraph
/// of a complete bipartite graph, a `C_5` blow-up or a Möbius ladder
/// blow-up with random part sizes. The result is then completed with
/// [`complete_to_maximal_triangle_free`].
pub fn random_maximal_triangle_free(n: usize, seed: u64) -> Result<Graph, StructureError> {
    let mut rng = rng(seed);
    let keep = rng.gen_range(0.5..1.0);
    let sub_seed = rng.gen::<u64>();
    let start = match rng.gen_range(0..4) {
        0 => random_triangle_free(n, rng.gen_range(0.0..0.3), sub_seed)?,
        kind => {
            let pattern = match kind {
                1 => complete(2).expect("two"),
                2 => cycle(5).expect("five"),
                _ => mobius_ladder(),
            };
            if n < pattern.n() {
                random_triangle_free(n, 0.5, sub_seed)?
            } else {
                let base = random_blow_up(&pattern, n, &mut rng);
                random_spanning_subgraph(&base, keep, sub_seed)?
            }
        }
    };
    complete_to_maximal_triangle_free(&start, rng.gen())
}

/// Blow-up of `pattern` on `n` vertices with uniformly random positive part
/// sizes, vertices in shuffled order.
fn random_blow_up(pattern: &Graph, n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let k = pattern.n();
    let mut part: Vec<usize> = (0..k).collect();
    part.extend((k..n).map(|_| rng.gen_range(0..k)));
    part.shuffle(rng);
    Graph::from_fn(n, |u, v| pattern.has_edge(part[u], part[v])).expect("n is small")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomFamily {
    /// [`random_triangle_free`]
    TriangleFree,
    /// [`random_gnp`]
    Gnp,
    /// [`random_maximal_triangle_free`]
    Maximal,
}

/// `count` random graphs. A master stream seeded with `seed` picks each
/// graph's vertex count from `ns`, its edge probability (unless `p` is
/// given) and its own seed, which is recorded in the provenance.
pub fn random_corpus(
    family: RandomFamily,
    ns: &[usize],
    count: usize,
    p: Option<f64>,
    seed: u64,
) -> Result<Vec<CorpusItem>, GeneratorError> {
    if ns.is_empty() {
        return Err(GeneratorError::OutOfRange { n: 0, min: 1, max: MAX_VERTICES });
    }
    let mut master = rng(seed);
    let plan: Vec<(usize, f64, u64)> = (0..count)
        .map(|_| {
            let n = ns[master.gen_range(0..ns.len())];
            let p = p.unwrap_or_else(|| master.gen_range(0.05..0.95));
            (n, p, master.gen())
        })
        .collect();
    plan.into_iter()
        .map(|(n, p, sub)| {
            let g = match family {
                RandomFamily::TriangleFree => random_triangle_free(n, p, sub)?,
                RandomFamily::Gnp => random_gnp(n, p, sub)?,
                RandomFamily::Maximal => random_maximal_triangle_free(n, sub)?,
            };
            Ok(CorpusItem::new(g, Provenance::Random { seed: sub }))
        })
        .collect()
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, StructureError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(StructureError::InvalidArgument(format!("probability {p} outside [0, 1]")));
    }
    let mut rng = rng(seed);
    Ok(Graph::from_fn(n, |_, _| rng.gen_bool(p))?)
}

/// Uniform random permutation of `0..n`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng(seed));
    perm
}

/// Keeps each edge of `g` independently with probability `keep`.
pub fn random_spanning_subgraph(g: &Graph, keep: f64, seed: u64) -> Result<Graph, StructureError> {
    if !(0.0..=1.0).contains(&keep) {
        return Err(StructureError::InvalidArgument(format!("probability {keep} outside [0, 1]")));
    }
    let mut rng = rng(seed);
    let mut b = GraphBuilder::new(g.n())?;
    for (u, v) in g.edges() {
        if rng.gen_bool(keep) {
            b.set(u, v);
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named::path;
    use crate::graph6::to_graph6;
    use crate::invariants::{is_maximal_triangle_free, is_triangle_free};

    #[test]
    fn zero_probability_is_edgeless() {
        assert_eq!(random_triangle_free(9, 0.0, 3).unwrap().edge_count(), 0);
    }

    #[test]
    fn full_probability_is_maximal() {
        for seed in 0..20 {
            let g = random_triangle_free(5, 1.0, seed).unwrap();
            assert!(is_maximal_triangle_free(&g).unwrap());
        }
    }

    #[test]
    fn output_is_triangle_free_and_reproducible() {
        let g = random_triangle_free(30, 0.5, 42).unwrap();
        assert!(is_triangle_free(&g));
        assert_eq!(to_graph6(&g), to_graph6(&random_triangle_free(30, 0.5, 42).unwrap()));
        assert!(random_triangle_free(3, 1.5, 0).is_err());
    }

    #[test]
    fn maximal_completion() {
        let c5 = cycle(5).unwrap();
        assert_eq!(complete_to_maximal_triangle_free(&c5, 1).unwrap(), c5);
        let two = complete_to_maximal_triangle_free(&Graph::empty(2).unwrap(), 1).unwrap();
        assert_eq!(two, complete(2).unwrap());
        let p4 = path(4).unwrap();
        let m = complete_to_maximal_triangle_free(&p4, 9).unwrap();
        assert!(is_maximal_triangle_free(&m).unwrap());
        assert!(p4.edges().all(|(u, v)| m.has_edge(u, v)));
        assert!(complete_to_maximal_triangle_free(&complete(3).unwrap(), 0).is_err());
        let a = complete_to_maximal_triangle_free(&Graph::empty(20).unwrap(), 77).unwrap();
        let b = complete_to_maximal_triangle_free(&Graph::empty(20).unwrap(), 77).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn corpus_is_reproducible() {
        let a = random_corpus(RandomFamily::TriangleFree, &[5, 9], 30, None, 4).unwrap();
        let b = random_corpus(RandomFamily::TriangleFree, &[5, 9], 30, None, 4).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|i| [5, 9].contains(&i.graph.n()) && is_triangle_free(&i.graph)));
        assert!(random_corpus(RandomFamily::Gnp, &[], 3, None, 0).is_err());
    }

    #[test]
    fn mixed_maximal_graphs() {
        for seed in 0..40 {
            let g = random_maximal_triangle_free(10 + seed as usize, seed).unwrap();
            assert!(is_maximal_triangle_free(&g).unwrap());
            assert_eq!(g, random_maximal_triangle_free(10 + seed as usize, seed).unwrap());
        }
        assert!(is_maximal_triangle_free(&random_maximal_triangle_free(3, 1).unwrap()).unwrap());
    }
}
