//! Brute-force oracles and seeded instance generators shared by the
//! integration suites. Every oracle here recomputes its answer from the
//! definition, independently of the library path it is used to check.

#![allow(dead_code)]

use hallnum::graph::{Graph, VertexSet};
use hallnum::list::{ColorId, ColorSet, ListAssignment};
use hallnum::solver::Coloring;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independence number by scanning all 2^n subsets.
pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    for mask in 0..(1u64 << n) {
        let set = VertexSet::from_bits(mask);
        let independent = set.iter().all(|v| g.neighbors(v).intersect(set).is_empty());
        if independent {
            best = best.max(set.len());
        }
    }
    best
}

/// Is there a proper coloring with at most k colors? Checks all k^n maps.
pub fn brute_k_colorable(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut colors = vec![0usize; n];
    loop {
        let proper = (0..n).all(|v| {
            g.neighbors(v)
                .iter()
                .all(|w| w <= v || colors[w] != colors[v])
        });
        if proper {
            return true;
        }
        // Increment the k-ary counter.
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Chromatic number from the definition.
pub fn brute_chromatic(g: &Graph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    (1..=g.vertex_count())
        .find(|&k| brute_k_colorable(g, k))
        .expect("n colors always suffice")
}

/// Searches every total list-respecting map for a proper coloring.
pub fn brute_list_colorable(l: &ListAssignment) -> bool {
    let g = l.graph();
    let n = g.vertex_count();
    let lists: Vec<Vec<ColorId>> = (0..n).map(|v| l.list(v).iter().collect()).collect();
    if lists.iter().any(|ls| ls.is_empty()) && n > 0 {
        return false;
    }
    if n == 0 {
        return true;
    }
    let mut idx = vec![0usize; n];
    loop {
        let mut c = Coloring::empty(n);
        for v in 0..n {
            c.set(v, lists[v][idx[v]]);
        }
        let proper = (0..n).all(|v| {
            g.neighbors(v)
                .iter()
                .all(|w| w <= v || c.get(w) != c.get(v))
        });
        if proper {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// SDR existence by exhaustive assignment with a used-set, i.e. permutation
/// search rather than matching.
pub fn brute_sdr_exists(sets: &[ColorSet]) -> bool {
    fn rec(sets: &[ColorSet], i: usize, used: u128) -> bool {
        if i == sets.len() {
            return true;
        }
        for c in sets[i].iter() {
            let bit = 1u128 << c.0;
            if used & bit == 0 && rec(sets, i + 1, used | bit) {
                return true;
            }
        }
        false
    }
    rec(sets, 0, 0)
}

/// Hall's condition from the definition: for every vertex subset, the sum of
/// brute-force independence numbers of the induced supports covers the subset.
pub fn brute_hall_satisfied(l: &ListAssignment) -> bool {
    brute_worst_margin(l) >= 0
}

pub fn brute_worst_margin(l: &ListAssignment) -> i64 {
    let g = l.graph();
    let n = g.vertex_count();
    let mut worst = i64::MAX;
    for mask in 0..(1u64 << n) {
        let h = VertexSet::from_bits(mask);
        let mut sum = 0i64;
        for c in l.palette().ids() {
            let support = l.support(c).intersect(h);
            let sub = g.induced_subgraph(support).unwrap();
            sum += brute_alpha(&sub) as i64;
        }
        worst = worst.min(sum - h.len() as i64);
    }
    worst
}

/// Margin of one subset, from the definition.
pub fn brute_margin(l: &ListAssignment, h: VertexSet) -> i64 {
    let g = l.graph();
    let mut sum = 0i64;
    for c in l.palette().ids() {
        let support = l.support(c).intersect(h);
        let sub = g.induced_subgraph(support).unwrap();
        sum += brute_alpha(&sub) as i64;
    }
    sum - h.len() as i64
}

/// Erdos-Renyi style random graph with edge probability 1/2.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random lists over the palette `g1..g<palette>`, sizes drawn uniformly
/// from `min_size..=max_size` per vertex.
pub fn random_assignment(
    rng: &mut ChaCha8Rng,
    g: Graph,
    palette: usize,
    min_size: usize,
    max_size: usize,
) -> ListAssignment {
    let names: Vec<String> = (1..=palette).map(|i| format!("g{i}")).collect();
    let n = g.vertex_count();
    let mut lists: Vec<Vec<String>> = Vec::with_capacity(n);
    for _ in 0..n {
        let size = rng.gen_range(min_size..=max_size.min(palette));
        let mut pool: Vec<usize> = (0..palette).collect();
        let mut chosen = Vec::with_capacity(size);
        for _ in 0..size {
            let at = rng.gen_range(0..pool.len());
            chosen.push(names[pool.swap_remove(at)].clone());
        }
        lists.push(chosen);
    }
    ListAssignment::new(g, &lists).unwrap()
}
