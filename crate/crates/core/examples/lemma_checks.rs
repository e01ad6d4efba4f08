// Runs the registered check behind a few of the classifier's rules.

use std::fmt::Write as _;

use powergenus::classifier::verify_lemma;

fn run_example() -> powergenus::Result<String> {
    let mut out = String::new();
    for id in [
        "no-two-hexagons",
        "planar-spectrum",
        "involution-parity",
        "prime-subgroup-congruence",
        "cyclic-genus-two",
    ] {
        let report = verify_lemma(id)?;
        let _ = writeln!(out, "{id}: {report}");
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> powergenus::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
