//! Esteban-Ray polarization of the four generated belief configurations.

use beliefsim::prelude::*;

fn main() -> beliefsim::Result<()> {
    let bins = Discretization::default();
    let er = ErParams::default();
    println!("bins: {bins}");
    for kind in BeliefKind::ALL {
        let beliefs = kind.generate(1000)?;
        let dist = to_distribution(&beliefs, &bins);
        println!(
            "{:<9} rho = {:>8.3}   bin weights = {:?}",
            kind.name(),
            polarization(&beliefs, &bins, er),
            dist.weights.iter().map(|w| (w * 1000.0).round() / 1000.0).collect::<Vec<_>>()
        );
    }

    // everyone in a single bin means no polarization at all
    let together = BeliefConfig::new(vec![0.41, 0.45, 0.52, 0.59])?;
    println!("single bin rho = {}", polarization(&together, &bins, er));
    Ok(())
}
