//! Steps to consensus under both update rules on the faint graph.

use beliefsim::analysis::detect_convergence;
use beliefsim::prelude::*;

fn main() -> beliefsim::Result<()> {
    let n = 50;
    let g = graph_faint(n)?;
    let bins = Discretization::default();
    for kind in BeliefKind::ALL {
        let b0 = kind.generate(n)?;
        let steps: Vec<String> = UpdateRule::ALL
            .iter()
            .map(|&rule| {
                let trace = evolve(&b0, &g, rule, 5_000, &bins, ErParams::default());
                match detect_convergence(&trace, 1e-3, 1e-3).t_converged {
                    Some(t) => format!("{}: {t}", rule.name()),
                    None => format!("{}: not within 5000", rule.name()),
                }
            })
            .collect();
        println!("{:<9} {}", kind.name(), steps.join("   "));
    }
    Ok(())
}
