// Power graphs and their text exports.

use std::fmt::Write as _;

use powergenus::graph::{hexagon_union_graph, power_graph, to_dot, to_edge_list};
use powergenus::FiniteGroup;

fn run_example() -> powergenus::Result<String> {
    let mut out = String::new();
    for (name, g) in [
        ("Z8", FiniteGroup::cyclic(8)?),
        ("Z6", FiniteGroup::cyclic(6)?),
        (
            "Z2xZ2",
            FiniteGroup::direct_product(&FiniteGroup::cyclic(2)?, &FiniteGroup::cyclic(2)?),
        ),
    ] {
        let p = power_graph(&g);
        let _ = writeln!(out, "{name}: {} vertices, {} edges", p.n(), p.m());
    }

    // The union of the three order-6 cyclic subgroups of Z2 x Z6.
    let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(2)?, &FiniteGroup::cyclic(6)?);
    let union = hexagon_union_graph(&g)?;
    let _ = writeln!(out, "three-hexagon union: {} vertices, {} edges", union.n(), union.m());
    let _ = write!(out, "{}", to_edge_list(&power_graph(&FiniteGroup::cyclic(4)?)));
    let _ = write!(out, "{}", to_dot(&power_graph(&FiniteGroup::cyclic(3)?), "z3"));
    Ok(out)
}

#[allow(dead_code)]
fn main() -> powergenus::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
