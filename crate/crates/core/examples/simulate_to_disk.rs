//! Run one configured experiment and write trace.csv, summary.json and
//! trace.svg.

use beliefsim::cli::{run_single, RunOptions};
use beliefsim::config::ExperimentConfig;

fn main() -> beliefsim::Result<()> {
    let out = std::env::temp_dir().join("beliefsim-simulate");
    let mut config = ExperimentConfig::from_json(
        r#"{"n": 100, "belief_kind": "tripolar", "graph_kind": "faint", "t_max": 300, "record_every": 10}"#,
    )?;
    config.out_dir = Some(out.clone());
    let run = run_single(&config, RunOptions { svg: true })?;
    let s = &run.summary;
    println!("wrote {}", out.display());
    println!(
        "converged = {} at t = {:?}, final mean = {:.6}, predicted = {:?}, rho {:.2} -> {:.2}",
        s.convergence.converged,
        s.convergence.t_converged,
        s.final_mean,
        s.predicted_consensus,
        s.polarization_initial,
        s.polarization_final
    );
    Ok(())
}
