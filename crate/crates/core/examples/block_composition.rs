// Genus of a graph assembled from its blocks: orientable genera add, and
// the crosscap number follows from the per-block values.

use std::fmt::Write as _;

use powergenus::genus::{blocks, compose_values, genus_by_blocks, kn_crosscap, kn_genus, GenusOptions};
use powergenus::graph::{apex_join, complete};

fn run_example() -> powergenus::Result<String> {
    let mut out = String::new();
    let k = |n: usize| (kn_genus(n), kn_crosscap(n));

    // Apex over three K4's: three K5 blocks sharing a vertex.
    let _ = writeln!(out, "K1+3K4: {:?}", compose_values(&[k(5), k(5), k(5)]));
    let _ = writeln!(out, "K1+(K7 u K4): {:?}", compose_values(&[k(8), k(5)]));
    let _ = writeln!(out, "K1+8K6: {:?}", compose_values(&[k(7); 8]));

    // The same through the engine on an actual graph.
    let g = apex_join(&[complete(4), complete(4)]);
    let _ = writeln!(out, "K1+2K4 has {} blocks", blocks(&g)?.len());
    let (genus, crosscap) = genus_by_blocks(&g, &GenusOptions::default())?;
    let _ = writeln!(out, "K1+2K4: {genus}; {crosscap}");
    Ok(out)
}

#[allow(dead_code)]
fn main() -> powergenus::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
