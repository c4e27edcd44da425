//! Two agents meeting on a bin boundary: the measured polarization depends on
//! where the boundaries sit.

use beliefsim::prelude::*;

fn main() -> beliefsim::Result<()> {
    let g = graph_clique(2, 0.5)?;
    let b0 = BeliefConfig::new(vec![0.1, 0.9])?;
    for k in [2, 3] {
        let bins = Discretization::uniform(k)?;
        let trace = evolve(&b0, &g, UpdateRule::ConfirmationBias, 80, &bins, ErParams::default());
        println!("{k} bins {bins}");
        for (t, b, rho) in trace.iter().filter(|(t, _, _)| t % 8 == 0) {
            println!("  t={t:>3}  beliefs = ({:.17}, {:.17})  rho = {rho:.4}", b[0], b[1]);
        }
        let zero_at = trace.iter().find(|&(_, _, rho)| rho == 0.0).map(|(t, _, _)| t);
        println!("  first step with rho = 0: {zero_at:?}");
    }
    Ok(())
}
