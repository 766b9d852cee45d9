//! Cross-checks against deliberately naive reference implementations.

use std::collections::{BTreeMap, BTreeSet};

use codegree_core::generators::{
    canonical_form, cycle, enumerate_levels, mobius_ladder, random_gnp, random_triangle_free, Family,
};
use codegree_core::{
    contains_subgraph, find_homomorphism, is_bipartite, is_c5_free, min_common_degree, odd_girth, verify_homomorphism,
    CommonDegree, Graph,
};

fn naive_common_degree(g: &Graph) -> CommonDegree {
    let n = g.n();
    let mut best = CommonDegree::Infinite;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let mut c = 0;
            for w in 0..n {
                if g.has_edge(u, w) && g.has_edge(v, w) {
                    c += 1;
                }
            }
            best = best.min(CommonDegree::Finite(c));
        }
    }
    best
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut k = 0;
    Graph::from_fn(n, |_, _| {
        let bit = mask >> k & 1 == 1;
        k += 1;
        bit
    })
    .unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest adjacency bitmask over all relabelings.
fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let index = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        b * (b - 1) / 2 + a
    };
    perms
        .iter()
        .map(|p| edges.iter().fold(0u64, |m, &(u, v)| m | 1 << index(p[u], p[v])))
        .min()
        .unwrap_or(0)
}

fn has_triangle_naive(g: &Graph) -> bool {
    let n = g.n();
    (0..n).any(|a| (a + 1..n).any(|b| (b + 1..n).any(|c| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))))
}

#[test]
fn common_degree_matches_triple_loop() {
    for seed in 0..2000u64 {
        let n = 2 + (seed % 39) as usize;
        let p = [0.1, 0.3, 0.5, 0.8, 0.95][(seed % 5) as usize];
        let g = random_gnp(n, p, seed).unwrap();
        assert_eq!(min_common_degree(&g).unwrap(), naive_common_degree(&g), "seed {seed}");
    }
}

#[test]
fn enumeration_matches_labeled_brute_force() {
    // Every labeled graph on up to 6 vertices, grouped by the minimum bitmask
    // over all relabelings.
    let levels_tf = enumerate_levels(Family::TriangleFree, 6).unwrap();
    let levels_all = enumerate_levels(Family::All, 6).unwrap();
    for n in 1..=6usize {
        let perms = permutations(n);
        let bits = n * (n - 1) / 2;
        let mut classes_all: BTreeMap<u64, BTreeSet<String>> = BTreeMap::new();
        let mut classes_tf = BTreeSet::new();
        for mask in 0..1u64 << bits {
            let g = graph_from_mask(n, mask);
            let key = brute_canonical(&g, &perms);
            if !has_triangle_naive(&g) {
                classes_tf.insert(key);
            }
            classes_all.entry(key).or_default().insert(canonical_form(&g));
        }
        // canonical_form is constant on each class and distinct across classes.
        assert!(classes_all.values().all(|forms| forms.len() == 1), "n = {n}");
        let distinct: BTreeSet<&String> = classes_all.values().flatten().collect();
        assert_eq!(distinct.len(), classes_all.len());

        assert_eq!(levels_all[n - 1].len(), classes_all.len(), "all graphs, n = {n}");
        assert_eq!(levels_tf[n - 1].len(), classes_tf.len(), "triangle-free, n = {n}");
    }
}

#[test]
fn seven_vertex_enumeration_covers_every_sampled_graph() {
    let levels = enumerate_levels(Family::TriangleFree, 7).unwrap();
    let known: BTreeSet<&str> = levels[6].iter().map(|i| i.canonical.as_str()).collect();
    for seed in 0..500 {
        let g = random_triangle_free(7, 0.6, seed).unwrap();
        assert!(known.contains(canonical_form(&g).as_str()), "seed {seed}");
    }
}

fn brute_homomorphism_exists(g: &Graph, h: &Graph) -> bool {
    let (n, k) = (g.n(), h.n());
    let total = k.pow(n as u32);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0..total).any(|mut code| {
        let mut map = vec![0; n];
        for slot in map.iter_mut() {
            *slot = code % k;
            code /= k;
        }
        edges.iter().all(|&(u, v)| h.has_edge(map[u], map[v]))
    })
}

#[test]
fn homomorphism_search_matches_exhaustive_maps() {
    let targets = [cycle(5).unwrap(), Graph::from_edge_list(2, &[(0, 1)]).unwrap(), cycle(3).unwrap()];
    for seed in 0..300u64 {
        let n = 3 + (seed % 5) as usize;
        let g = random_gnp(n, 0.45, seed).unwrap();
        for h in &targets {
            let found = find_homomorphism(&g, h);
            assert_eq!(found.is_some(), brute_homomorphism_exists(&g, h), "seed {seed}");
            if let Some(m) = found {
                assert!(verify_homomorphism(&g, h, &m).unwrap().is_valid());
            }
        }
    }
}

fn brute_bipartite(g: &Graph) -> bool {
    (0..1u64 << g.n()).any(|c| g.edges().all(|(u, v)| (c >> u & 1) != (c >> v & 1)))
}

/// Shortest odd closed walk, found by iterating walk reachability.
fn walk_odd_girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut reach: Vec<Vec<bool>> = (0..n).map(|v| (0..n).map(|w| w == v).collect()).collect();
    for len in 1..=2 * n + 1 {
        reach = reach
            .iter()
            .map(|r| (0..n).map(|w| (0..n).any(|x| r[x] && g.has_edge(x, w))).collect())
            .collect();
        if len % 2 == 1 && (0..n).any(|v| reach[v][v]) {
            return Some(len);
        }
    }
    None
}

fn brute_has_five_cycle(g: &Graph) -> bool {
    let n = g.n();
    let perms = permutations(5);
    let mut pick = Vec::new();
    fn rec(n: usize, start: usize, pick: &mut Vec<usize>, g: &Graph, perms: &[Vec<usize>]) -> bool {
        if pick.len() == 5 {
            return perms
                .iter()
                .any(|p| (0..5).all(|i| g.has_edge(pick[p[i]], pick[p[(i + 1) % 5]])));
        }
        (start..n).any(|v| {
            pick.push(v);
            let r = rec(n, v + 1, pick, g, perms);
            pick.pop();
            r
        })
    }
    rec(n, 0, &mut pick, g, &perms)
}

#[test]
fn cycle_structure_matches_brute_force() {
    for seed in 0..400u64 {
        let n = 2 + (seed % 10) as usize;
        let g = random_gnp(n, [0.2, 0.35, 0.6][(seed % 3) as usize], seed).unwrap();
        let b = is_bipartite(&g);
        assert_eq!(b.is_bipartite(), brute_bipartite(&g), "seed {seed}");
        assert_eq!(odd_girth(&g), walk_odd_girth(&g), "seed {seed}");
        if let codegree_core::Bipartiteness::OddCycle(c) = b {
            assert!(c.is_cycle_in(&g));
            assert_eq!(Some(c.len()), odd_girth(&g));
        }
        assert_eq!(is_c5_free(&g), !brute_has_five_cycle(&g), "seed {seed}");
    }
}

fn brute_contains(g: &Graph, h: &Graph) -> bool {
    fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for v in 0..g.n() {
            if used[v] || (0..i).any(|j| h.has_edge(i, j) && !g.has_edge(v, map[j])) {
                continue;
            }
            used[v] = true;
            map.push(v);
            if rec(g, h, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
    rec(g, h, &mut Vec::new(), &mut vec![false; g.n()])
}

#[test]
fn subgraph_search_matches_brute_force() {
    let hm = mobius_ladder();
    let c5 = cycle(5).unwrap();
    let mut hits = 0;
    for seed in 0..60u64 {
        let g = random_gnp(9, 0.55 + 0.005 * seed as f64, seed).unwrap();
        let found = contains_subgraph(&g, &hm);
        assert_eq!(found.is_some(), brute_contains(&g, &hm), "seed {seed}");
        hits += usize::from(found.is_some());
        assert_eq!(contains_subgraph(&g, &c5).is_some(), brute_contains(&g, &c5));
    }
    assert!(hits > 0 && hits < 60, "sample should mix both outcomes, got {hits}");
}
