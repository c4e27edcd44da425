//! Why polarization survives: disconnection, imbalance, radical agents and
//! borderline limits.

use beliefsim::prelude::*;

fn main() -> beliefsim::Result<()> {
    let n = 100;
    let bins = Discretization::default();
    let cases = [
        ("disconnected", graph_disconnected(n, 0.5)?, beliefs_extreme(n)?),
        ("unrelenting", graph_unrelenting(n)?, beliefs_extreme(n)?),
        ("radical clique", graph_clique(n, 0.5)?, BeliefConfig::new((0..n).map(|i| (i % 2) as f64).collect())?),
        ("clique", graph_clique(n, 0.5)?, beliefs_tripolar(n)?),
    ];
    for (label, g, b0) in cases {
        let trace = evolve_every(&b0, &g, UpdateRule::ConfirmationBias, 2_000, &bins, ErParams::default(), 100);
        let d = diagnose_persistence(&g, &b0, &trace, &bins, 1e-6);
        println!(
            "{label:<15} rho {:>8.3} -> {:>8.3}  persists = {:<5}  conditions = {:?}",
            trace.polarization[0],
            d.final_polarization,
            d.polarization_persists,
            d.conditions()
        );
    }
    Ok(())
}
