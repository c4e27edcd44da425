//! Sweep every belief generator against every topology in parallel.

use beliefsim::cli::{run_batch, BatchSpec, RunOptions};

fn main() -> beliefsim::Result<()> {
    let out = std::env::temp_dir().join("beliefsim-batch");
    let spec = BatchSpec::from_json(&format!(
        r#"{{"belief_kinds": ["uniform", "mild", "extreme", "tripolar"],
            "graph_kinds": ["clique", "circular", "disconnected", "unrelenting", "faint"],
            "n": 60, "t_max": 1000, "record_every": 50, "out_dir": {:?}}}"#,
        out
    ))?;
    let index = run_batch(&spec, RunOptions::default())?;
    println!("{:<26} {:>9} {:>10}", "cell", "converged", "final rho");
    for cell in &index.cells {
        match (cell.converged, cell.polarization_final) {
            (Some(c), Some(rho)) => println!("{:<26} {:>9} {:>10.3}", cell.name, c, rho),
            _ => println!("{:<26} error: {}", cell.name, cell.error.as_deref().unwrap_or("?")),
        }
    }
    println!("index written to {}", out.join("index.json").display());
    Ok(())
}
