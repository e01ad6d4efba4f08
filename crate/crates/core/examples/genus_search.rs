// Exact genus and crosscap number by search, compared with the closed
// formulas for complete and complete bipartite graphs.

use std::fmt::Write as _;

use powergenus::genus::{crosscap_exact, genus_exact, kmn_crosscap, kmn_genus, kn_crosscap, kn_genus, GenusOptions};
use powergenus::graph::{complete, complete_bipartite};

fn run_example() -> powergenus::Result<String> {
    let search = GenusOptions::default().search_only();
    let mut out = String::new();
    for n in [4, 5, 6] {
        let g = genus_exact(&complete(n), &search)?;
        let c = crosscap_exact(&complete(n), &search)?;
        let _ = writeln!(
            out,
            "K{n}: {g} (formula {}); {c} (formula {})",
            kn_genus(n),
            kn_crosscap(n)
        );
    }
    for (m, n) in [(3, 3), (3, 4)] {
        let g = genus_exact(&complete_bipartite(m, n), &search)?;
        let _ = writeln!(
            out,
            "K{m},{n}: {g} (formula {}, crosscap formula {})",
            kmn_genus(m, n),
            kmn_crosscap(m, n)
        );
        for level in &g.levels {
            let _ = writeln!(
                out,
                "  level {}: {:?}, {} nodes",
                level.level, level.outcome, level.nodes
            );
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> powergenus::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
