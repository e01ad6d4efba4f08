// Semidirect products from named actions, checked against named families
// up to isomorphism.

use std::fmt::Write as _;

use powergenus::group::{is_isomorphic, recipe::Recipe};
use powergenus::FiniteGroup;

fn run_example() -> powergenus::Result<String> {
    let cases = [
        ("semidirect(cyclic(3),cyclic(4),invert)", FiniteGroup::dicyclic(3)?),
        ("semidirect(cyclic(4),cyclic(2),invert)", FiniteGroup::dihedral(8)?),
        (
            "semidirect(cyclic(8),cyclic(2),power(3))",
            FiniteGroup::semidihedral(16)?,
        ),
        ("semidirect(cyclic(5),cyclic(2),trivial)", FiniteGroup::cyclic(10)?),
    ];
    let mut out = String::new();
    for (expr, expected) in cases {
        let recipe: Recipe = expr.parse()?;
        let g = recipe.build()?;
        let _ = writeln!(
            out,
            "{recipe}: order {}, orders {}, isomorphic to the named group: {}",
            g.order(),
            g.order_spectrum().set_string(),
            is_isomorphic(&g, &expected)?
        );
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> powergenus::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
