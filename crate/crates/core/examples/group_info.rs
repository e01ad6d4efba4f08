// Builds groups from catalog labels and recipe expressions and prints the
// invariants the classifier works with.

use std::fmt::Write as _;

use powergenus::catalog::Catalog;
use powergenus::cli::resolve_group;

fn run_example() -> powergenus::Result<String> {
    let catalog = Catalog::builtin();
    let mut out = String::new();
    for target in [
        "[16,9]",
        "cyclic(8)",
        "direct(cyclic(2),cyclic(6))",
        "semidirect(cyclic(3),cyclic(4),invert)",
    ] {
        let g = resolve_group(catalog, target)?;
        let _ = writeln!(
            out,
            "{target}: order {}, orders {}, six-profile {}, {} involutions, center of order {}",
            g.order(),
            g.order_spectrum().set_string(),
            g.six_profile(),
            g.count_involutions(),
            g.center().len()
        );
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> powergenus::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
