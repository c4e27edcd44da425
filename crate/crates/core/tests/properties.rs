mod common;

use beliefsim::analysis::{is_balanced, is_reciprocal, is_regular, StructureReport, is_strongly_connected};
use beliefsim::prelude::*;
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = InfluenceGraph> {
    (1usize..=12, proptest::collection::vec(0.0f64..=1.0, 144), proptest::collection::vec(any::<bool>(), 144)).prop_map(
        |(n, w, keep)| InfluenceGraph::from_fn(n, |i, j| if keep[i * 12 + j] { w[i * 12 + j] } else { 0.0 }).unwrap(),
    )
}

fn graph_and_beliefs() -> impl Strategy<Value = (InfluenceGraph, BeliefConfig)> {
    graph_strategy().prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(0.0f64..=1.0, n).prop_map(|v| BeliefConfig::new(v).unwrap()))
    })
}

fn rule_strategy() -> impl Strategy<Value = UpdateRule> {
    prop_oneof![Just(UpdateRule::ConfirmationBias), Just(UpdateRule::Classical)]
}

proptest! {
    #[test]
    fn neighbors_contain_self((g, _) in graph_and_beliefs()) {
        for i in 0..g.n() {
            let a = g.neighbors(i).unwrap();
            prop_assert!(a.contains(&i));
            for j in 0..g.n() {
                prop_assert_eq!(a.contains(&j), g.weight(j, i) > 0.0);
            }
        }
    }

    #[test]
    fn validate_is_pure((g, b) in graph_and_beliefs()) {
        prop_assert_eq!(validate(&g, &b), validate(&g, &b));
        prop_assert!(validate(&g, &b).is_ok());
    }

    #[test]
    fn step_stays_within_extremes((g, b) in graph_and_beliefs(), rule in rule_strategy()) {
        let next = step(&b, &g, rule);
        for &x in next.as_slice() {
            prop_assert!(b.min() <= x && x <= b.max());
        }
    }

    #[test]
    fn consensus_is_a_fixed_point(g in graph_strategy(), c in 0.0f64..=1.0, rule in rule_strategy()) {
        let b = BeliefConfig::new(vec![c; g.n()]).unwrap();
        prop_assert_eq!(step(&b, &g, rule), b);
    }

    #[test]
    fn cb_factor_symmetric_and_bounded(a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
        let f = cb_factor(a, b);
        prop_assert_eq!(f, cb_factor(b, a));
        prop_assert!((0.0..=1.0).contains(&f));
    }

    #[test]
    fn polarization_linear_in_scale(v in proptest::collection::vec(0.0f64..=1.0, 1..40), k in 0.5f64..5000.0) {
        let b = BeliefConfig::new(v).unwrap();
        let bins = Discretization::default();
        let one = polarization(&b, &bins, ErParams { scale: k, alpha: 1.6 });
        let two = polarization(&b, &bins, ErParams { scale: 2.0 * k, alpha: 1.6 });
        prop_assert_eq!(two, 2.0 * one);
    }

    #[test]
    fn esteban_ray_permutation_invariant(
        pairs in proptest::collection::vec((0.01f64..1.0, 0.0f64..=1.0), 1..8),
        rot in 0usize..8,
    ) {
        let total: f64 = pairs.iter().map(|p| p.0).sum();
        let weights: Vec<f64> = pairs.iter().map(|p| p.0 / total).collect();
        let positions: Vec<f64> = pairs.iter().map(|p| p.1).collect();
        let d = BinDistribution { weights: weights.clone(), positions: positions.clone() };
        let r = rot % weights.len();
        let mut w2 = weights.clone();
        let mut p2 = positions.clone();
        w2.rotate_left(r);
        p2.rotate_left(r);
        let rotated = BinDistribution { weights: w2, positions: p2 };
        let a = esteban_ray(&d, ErParams::default());
        let b = esteban_ray(&rotated, ErParams::default());
        prop_assert!((a - b).abs() <= 1e-12 * a.max(1.0));
    }

    #[test]
    fn bin_index_matches_scan(b in 0.0f64..=1.0, seed in any::<u64>()) {
        let bins = common::random_bins(&mut common::rng(seed));
        prop_assert_eq!(bin_index(b, &bins), common::bin_by_scan(b, &bins));
    }

    #[test]
    fn distribution_weights_sum_to_one(v in proptest::collection::vec(0.0f64..=1.0, 1..60)) {
        let d = to_distribution(&BeliefConfig::new(v).unwrap(), &Discretization::default());
        prop_assert!((d.weights.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        prop_assert!(d.weights.iter().all(|&w| w > 0.0));
    }

    #[test]
    fn structure_report_consistent(g in graph_strategy()) {
        let r = StructureReport::of(&g);
        if r.reciprocal { prop_assert!(r.balanced); }
        if r.balanced && r.weakly_connected { prop_assert!(r.strongly_connected); }
        if r.strongly_connected { prop_assert!(r.weakly_connected); }
    }

    #[test]
    fn strong_connectivity_matches_reachability(g in graph_strategy()) {
        let all = (0..g.n()).all(|i| common::reachable(&g, i).iter().all(|&x| x));
        prop_assert_eq!(is_strongly_connected(&g), all);
    }

    #[test]
    fn generators_produce_valid_output(n in 3usize..60, c in 0.01f64..=1.0) {
        for kind in BeliefKind::ALL {
            let b = kind.generate(n).unwrap();
            prop_assert_eq!(b.len(), n);
            for g in GraphKind::ALL {
                prop_assert!(validate(&g.generate(n, c).unwrap(), &b).is_ok());
            }
        }
    }

    #[test]
    fn symmetric_generators(n in 2usize..60) {
        for g in [graph_clique(n, 0.5).unwrap(), graph_faint(n).unwrap()] {
            prop_assert!(is_reciprocal(&g));
            prop_assert!(is_regular(&g));
        }
        prop_assert!(is_balanced(&graph_circular(n, 0.5).unwrap()));
        prop_assert!(is_regular(&graph_circular(n, 0.5).unwrap()));
    }

    #[test]
    fn uniform_mean_is_half(n in 2usize..2000) {
        prop_assert!((beliefs_uniform(n).unwrap().mean() - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn generated_belief_ranges(n in 3usize..500) {
        let h = n.div_ceil(2);
        let mild = beliefs_mild(n).unwrap();
        let extreme = beliefs_extreme(n).unwrap();
        for i in 0..n {
            if i < h {
                prop_assert!((0.2..0.4).contains(&mild[i]));
                prop_assert!((0.0..0.2).contains(&extreme[i]));
            } else {
                prop_assert!((0.6..0.8).contains(&mild[i]));
                prop_assert!((0.8..1.0).contains(&extreme[i]));
            }
        }
        prop_assert!(!is_radical(&extreme));
        let tri = beliefs_tripolar(n).unwrap();
        let (a, b) = (n / 3, (2 * n).div_ceil(3));
        for i in 0..n {
            let range = if i < a { 0.0..0.2 } else if i < b { 0.4..0.6 } else { 0.8..1.0 };
            prop_assert!(range.contains(&tri[i]), "tripolar[{}] = {}", i, tri[i]);
        }
    }

    #[test]
    fn evolve_is_deterministic((g, b) in graph_and_beliefs(), rule in rule_strategy()) {
        let bins = Discretization::default();
        let t1 = evolve(&b, &g, rule, 20, &bins, ErParams::default());
        let t2 = evolve(&b, &g, rule, 20, &bins, ErParams::default());
        prop_assert_eq!(&t1, &t2);
        for (k, (_, cfg, rho)) in t1.iter().enumerate() {
            prop_assert_eq!(rho, polarization(cfg, &bins, ErParams::default()));
            if k > 0 {
                prop_assert_eq!(cfg, &step(&t1.configs[k - 1], &g, rule));
            }
        }
    }
}

#[test]
fn min_cb_factor_never_drops_below_initial() {
    // no 0/1 pair initially, so the smallest pairwise factor is a floor for
    // the rest of the run
    let mut rng = common::rng(17);
    for _ in 0..100 {
        let g = common::random_graph(&mut rng, 12);
        let b0 = BeliefConfig::new(
            (0..g.n()).map(|_| 0.05 + 0.9 * rand::Rng::gen::<f64>(&mut rng)).collect(),
        )
        .unwrap();
        let min_factor = |b: &BeliefConfig| 1.0 - b.spread();
        let floor = min_factor(&b0);
        let trace = evolve(&b0, &g, UpdateRule::ConfirmationBias, 100, &Discretization::default(), ErParams::default());
        for (_, b, _) in trace.iter() {
            assert!(min_factor(b) >= floor - 1e-15);
        }
    }
}

#[test]
fn reciprocal_regular_cb_conserves_sum() {
    for n in [5, 17, 40] {
        for kind in BeliefKind::ALL {
            let b0 = kind.generate(n).unwrap();
            for g in [graph_clique(n, 0.5).unwrap(), graph_faint(n).unwrap(), graph_clique(n, 0.3).unwrap()] {
                let trace = evolve(&b0, &g, UpdateRule::ConfirmationBias, 50, &Discretization::default(), ErParams::default());
                for w in trace.configs.windows(2) {
                    assert!((w[1].sum() - w[0].sum()).abs() < 1e-12);
                }
            }
        }
    }
}
