//! Structural properties of the generated topologies and flow across cuts.

use beliefsim::analysis::StructureReport;
use beliefsim::prelude::*;

fn main() -> beliefsim::Result<()> {
    let n = 12;
    println!("{:<13} {:>7} {:>6} {:>9} {:>11} {:>8}", "graph", "strong", "weak", "balanced", "reciprocal", "regular");
    for kind in GraphKind::ALL {
        let r = StructureReport::of(&kind.generate(n, 0.5)?);
        println!(
            "{:<13} {:>7} {:>6} {:>9} {:>11} {:>8}",
            kind.name(),
            r.strongly_connected,
            r.weakly_connected,
            r.balanced,
            r.reciprocal,
            r.regular
        );
    }

    // in a balanced graph the flow leaving any group equals the flow entering it
    let ring = graph_circular(n, 0.5)?;
    let (out, back) = group_flow_conservation(&ring, &[0, 3, 4, 9])?;
    println!("ring cut {{0, 3, 4, 9}}: out = {out}, back = {back}");
    let star = graph_unrelenting(n)?;
    let (out, back) = group_flow_conservation(&star, &[0])?;
    println!("unrelenting cut {{0}}: out = {out}, back = {back}");
    Ok(())
}
