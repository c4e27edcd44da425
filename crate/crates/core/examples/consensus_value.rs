//! Predicted versus simulated consensus on a clique (confirmation bias) and
//! a ring (classical update).

use beliefsim::prelude::*;

fn main() -> beliefsim::Result<()> {
    let n = 50;
    let bins = Discretization::default();
    let cases = [
        (GraphKind::Clique, UpdateRule::ConfirmationBias, 2_000),
        (GraphKind::Circular, UpdateRule::Classical, 20_000),
    ];
    for (graph, rule, t_max) in cases {
        let g = graph.generate(n, 0.5)?;
        for kind in BeliefKind::ALL {
            let b0 = kind.generate(n)?;
            let predicted = predict_consensus(&g, &b0, rule).expect("structure admits a prediction");
            let trace = evolve_every(&b0, &g, rule, t_max, &bins, ErParams::default(), t_max);
            let last = trace.last();
            println!(
                "{:<9} {:<9} {:<17} predicted {:.9}  final mean {:.9}  spread {:.1e}",
                graph.name(),
                kind.name(),
                rule.name(),
                predicted,
                last.mean(),
                last.spread()
            );
        }
    }
    Ok(())
}
