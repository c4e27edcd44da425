//! The classical update is a DeGroot iteration with a row-stochastic matrix.

use beliefsim::prelude::*;

fn main() -> beliefsim::Result<()> {
    let g = graph_unrelenting(6)?;
    let t = degroot_matrix(&g);
    println!("transition matrix of the unrelenting graph (n = 6):");
    for i in 0..t.n() {
        let row: Vec<String> = t.row(i).iter().map(|x| format!("{x:.3}")).collect();
        println!("  [{}]  sum = {}", row.join(" "), t.row(i).iter().sum::<f64>());
    }

    let b0 = beliefs_extreme(6)?;
    let trace = evolve(&b0, &g, UpdateRule::Classical, 40, &Discretization::default(), ErParams::default());
    let via_matrix = degroot_iterate(&t, &b0, 40);
    let gap = trace
        .last()
        .as_slice()
        .iter()
        .zip(via_matrix.as_slice())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    println!("after 40 steps: {:?}", via_matrix.as_slice());
    println!("max difference to the simulated trace: {gap:e}");
    Ok(())
}
