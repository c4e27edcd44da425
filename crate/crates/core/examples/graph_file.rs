//! Load an influence graph from the text format and simulate it with
//! explicit initial beliefs.

use beliefsim::prelude::*;
use beliefsim::scenarios::{format_graph, parse_graph};

const GRAPH: &str = "\
# a small community around two opinion leaders
n=6
0 1 0.8
0 2 0.6
1 0 0.3
1 2 0.4
2 3 0.5
3 2 0.5
3 4 0.7
4 5 0.6
5 4 0.2
5 3 0.4
";

fn main() -> beliefsim::Result<()> {
    let g = parse_graph(GRAPH, "community.txt")?;
    let b0 = BeliefConfig::new(vec![0.95, 0.8, 0.6, 0.45, 0.2, 0.05])?;
    validate(&g, &b0)?;
    let report = StructureReport::of(&g);
    println!("neighbor counts {:?}, strongly connected = {}", report.neighbor_counts, report.strongly_connected);

    let bins = Discretization::default();
    for rule in UpdateRule::ALL {
        let trace = evolve(&b0, &g, rule, 300, &bins, ErParams::default());
        let last = trace.last();
        println!("{:<17} final beliefs {:.4?}  rho = {:.3}", rule.name(), last.as_slice(), trace.final_polarization());
    }

    print!("round trip:\n{}", format_graph(&g));
    Ok(())
}
