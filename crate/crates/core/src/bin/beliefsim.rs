use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use beliefsim::cli::{self, GenTarget, RunOptions};

#[derive(Parser)]
#[command(name = "beliefsim", version, about = "Belief dynamics under confirmation bias")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment from a JSON config
    Simulate {
        #[arg(long)]
        config: PathBuf,
        /// Also write trace.svg
        #[arg(long)]
        svg: bool,
    },
    /// Run a grid of belief kinds x graph kinds
    Batch {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        svg: bool,
    },
    /// Write a generated graph (edge list) or belief configuration (CSV)
    Gen {
        #[arg(value_enum)]
        target: Target,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        /// Influence strength for clique, circular and disconnected graphs
        #[arg(long)]
        strength: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the structure report of a graph file as JSON
    Analyze {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Graph,
    Beliefs,
}

fn run(command: Command) -> beliefsim::Result<i32> {
    match command {
        Command::Simulate { config, svg } => {
            let out = cli::run_single(&cli::load_config(&config)?, RunOptions { svg })?;
            let s = &out.summary;
            println!(
                "converged={} final_mean={} rho_final={} conditions={:?}",
                s.convergence.converged, s.final_mean, s.polarization_final, s.persistence_conditions
            );
            Ok(0)
        }
        Command::Batch { spec, svg } => {
            let index = cli::run_batch(&cli::load_batch_spec(&spec)?, RunOptions { svg })?;
            for cell in &index.cells {
                match &cell.error {
                    None => println!("{}: ok", cell.name),
                    Some(e) => eprintln!("{}: {e}", cell.name),
                }
            }
            Ok(index.exit_code())
        }
        Command::Gen { target, kind, n, strength, out } => {
            let target = match target {
                Target::Graph => GenTarget::Graph,
                Target::Beliefs => GenTarget::Beliefs,
            };
            cli::gen(target, &kind, n, strength, &out)?;
            Ok(0)
        }
        Command::Analyze { graph } => {
            print!("{}", cli::analyze_json(&graph)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(2);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(args.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
