//! Library results checked against independent reference computations.

mod common;

use approx::assert_abs_diff_eq;
use beliefsim::analysis::{degroot_iterate, degroot_matrix, detect_convergence};
use beliefsim::prelude::*;

/// Polarization straight from per-agent bin labels: every agent pair
/// contributes through its bins' frequencies, no intermediate distribution.
fn polarization_reference(b: &[f64], bins: &Discretization, er: ErParams) -> f64 {
    let n = b.len() as f64;
    let label: Vec<usize> = b.iter().map(|&x| common::bin_by_scan(x, bins)).collect();
    let freq = |m: usize| label.iter().filter(|&&l| l == m).count() as f64 / n;
    let mut total = 0.0;
    for m in 0..bins.bins() {
        for q in 0..bins.bins() {
            let (pm, pq) = (freq(m), freq(q));
            if pm > 0.0 && pq > 0.0 {
                total += pm.powf(1.0 + er.alpha) * pq * (bins.midpoint(m) - bins.midpoint(q)).abs();
            }
        }
    }
    er.scale * total
}

#[test]
fn polarization_matches_reference() {
    let mut rng = common::rng(3);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..50);
        let b = common::random_beliefs(&mut rng, n);
        let bins = common::random_bins(&mut rng);
        let er = ErParams { scale: 10.0, alpha: 1.3 };
        let got = polarization(&b, &bins, er);
        let want = polarization_reference(b.as_slice(), &bins, er);
        assert_abs_diff_eq!(got, want, epsilon = 1e-12 * want.max(1.0));
    }
}

#[test]
fn extreme_thousand_agents() {
    let b = beliefs_extreme(1000).unwrap();
    let rho = polarization(&b, &Discretization::default(), ErParams::default());
    assert_abs_diff_eq!(rho, 2.0 * 0.5f64.powf(2.6) * 0.5 * 0.8 * 1000.0, epsilon = 1e-9);
    assert_abs_diff_eq!(rho, 131.95, epsilon = 5e-3);
}

#[test]
fn classical_matches_degroot_on_generators() {
    for kind in GraphKind::ALL {
        let g = kind.generate(13, 0.5).unwrap();
        let t = degroot_matrix(&g);
        let b0 = beliefs_tripolar(13).unwrap();
        let trace = evolve(&b0, &g, UpdateRule::Classical, 60, &Discretization::default(), ErParams::default());
        let mut f = b0.clone();
        for (k, (_, b, _)) in trace.iter().enumerate() {
            if k > 0 {
                f = degroot_iterate(&t, &f, 1);
            }
            for i in 0..13 {
                assert_abs_diff_eq!(b[i], f[i], epsilon = 1e-12);
            }
        }
        assert_eq!(degroot_iterate(&t, &b0, 60), f);
    }
}

#[test]
fn borderline_pair_is_symmetric() {
    let g = graph_clique(2, 0.5).unwrap();
    let b0 = BeliefConfig::new(vec![0.1, 0.9]).unwrap();
    let trace = evolve(&b0, &g, UpdateRule::ConfirmationBias, 200, &Discretization::uniform(2).unwrap(), ErParams::default());
    for (_, b, _) in trace.iter() {
        assert_abs_diff_eq!(b[0], 1.0 - b[1], epsilon = 1e-12);
        assert!(b[0] <= 0.5 && b[1] >= 0.5);
    }
}

#[test]
fn polarization_vanishes_once_everyone_shares_a_bin() {
    // converges to 0.496, well inside [0.4, 0.6)
    let g = graph_clique(40, 0.5).unwrap();
    let b0 = beliefs_mild(40).unwrap();
    let bins = Discretization::default();
    let trace = evolve(&b0, &g, UpdateRule::ConfirmationBias, 200, &bins, ErParams::default());
    let report = detect_convergence(&trace, 1e-9, 1e-9);
    let v = report.consensus_value.unwrap();
    assert!(bins.distance_to_borderline(v).unwrap() > 1e-3);
    let first = trace
        .iter()
        .position(|(_, b, _)| b.as_slice().iter().all(|&x| bin_index(x, &bins) == bin_index(v, &bins)))
        .unwrap();
    assert!(trace.polarization[first..].iter().all(|&r| r == 0.0));
    assert!(trace.polarization[..first].iter().all(|&r| r > 0.0));
}

#[test]
fn circular_classical_consensus_is_uniform_mean() {
    let n = 12;
    let g = graph_circular(n, 0.5).unwrap();
    let b0 = beliefs_uniform(n).unwrap();
    let trace = evolve_every(&b0, &g, UpdateRule::Classical, 3000, &Discretization::default(), ErParams::default(), 100);
    assert_abs_diff_eq!(predict_consensus(&g, &b0, UpdateRule::Classical).unwrap(), 0.5, epsilon = 1e-15);
    for &x in trace.last().as_slice() {
        assert_abs_diff_eq!(x, 0.5, epsilon = 1e-9);
    }
}

#[test]
fn unrelenting_influencers_never_move() {
    let n = 10;
    let g = graph_unrelenting(n).unwrap();
    let b0 = beliefs_extreme(n).unwrap();
    for rule in UpdateRule::ALL {
        let trace = evolve(&b0, &g, rule, 300, &Discretization::default(), ErParams::default());
        assert_eq!(trace.last()[0], b0[0]);
        assert_eq!(trace.last()[n - 1], b0[n - 1]);
        assert!(trace.final_polarization() > 0.0);
    }
}
