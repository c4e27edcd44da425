#![allow(dead_code)]

use beliefsim::model::{BeliefConfig, Discretization, InfluenceGraph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random valid graph: each off-diagonal entry is positive with a
/// per-graph probability, weights uniform in (0, 1].
pub fn random_graph(rng: &mut impl Rng, max_n: usize) -> InfluenceGraph {
    let n = rng.gen_range(1..=max_n);
    let density: f64 = rng.gen_range(0.05..=1.0);
    InfluenceGraph::from_fn(n, |_, _| {
        if rng.gen_bool(density) {
            1.0 - rng.gen::<f64>()
        } else {
            0.0
        }
    })
    .unwrap()
}

pub fn random_beliefs(rng: &mut impl Rng, n: usize) -> BeliefConfig {
    BeliefConfig::new((0..n).map(|_| rng.gen::<f64>()).collect()).unwrap()
}

pub fn random_radical(rng: &mut impl Rng, n: usize) -> BeliefConfig {
    BeliefConfig::new((0..n).map(|_| if rng.gen_bool(0.5) { 1.0 } else { 0.0 }).collect()).unwrap()
}

/// `k` bins with random interior boundaries.
pub fn random_bins(rng: &mut impl Rng) -> Discretization {
    let k = rng.gen_range(1..=8);
    let mut interior: Vec<f64> = (1..k).map(|_| rng.gen_range(0.01..0.99)).collect();
    interior.sort_by(f64::total_cmp);
    interior.dedup();
    let mut b = vec![0.0];
    b.extend(interior);
    b.push(1.0);
    Discretization::from_boundaries(b).unwrap()
}

/// Sum of random directed cycles, each edge weight at most 1 overall.
pub fn random_circulation(rng: &mut impl Rng, max_n: usize) -> InfluenceGraph {
    let n = rng.gen_range(2..=max_n);
    let mut w = vec![vec![0.0; n]; n];
    for _ in 0..rng.gen_range(1..=4) {
        let len = rng.gen_range(2..=n);
        let mut nodes: Vec<usize> = (0..n).collect();
        nodes.shuffle(rng);
        nodes.truncate(len);
        let weight = rng.gen_range(0.05..=0.25);
        for k in 0..len {
            w[nodes[k]][nodes[(k + 1) % len]] += weight;
        }
    }
    for (i, row) in w.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    InfluenceGraph::from_rows(w).unwrap()
}

/// Bin membership by explicit interval tests, independent of the library's
/// search.
pub fn bin_by_scan(b: f64, bins: &Discretization) -> usize {
    let k = bins.bins();
    (0..k)
        .find(|&m| {
            let (l, r) = bins.bin(m);
            l <= b && (b < r || (m == k - 1 && b <= r))
        })
        .expect("bins cover [0, 1]")
}

/// Directed reachability by repeated relaxation.
pub fn reachable(graph: &InfluenceGraph, from: usize) -> Vec<bool> {
    let n = graph.n();
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(i) = stack.pop() {
        for (j, s) in seen.iter_mut().enumerate() {
            if graph.weight(i, j) > 0.0 && !*s {
                *s = true;
                stack.push(j);
            }
        }
    }
    seen
}
