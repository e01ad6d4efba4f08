// Classifies every catalog group and replays each decision trail.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use powergenus::catalog::Catalog;
use powergenus::classifier::{replay_trail, ClassifyOptions};
use powergenus::cli::classify_catalog;

fn run_example() -> powergenus::Result<String> {
    let catalog = Catalog::builtin();
    let verdicts = classify_catalog(catalog, &ClassifyOptions::default())?;
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    for v in &verdicts {
        let o = v.orientable.as_ref().expect("both surfaces classified");
        *tally.entry(o.to_string()).or_default() += 1;
    }
    let mut out = format!("{} groups classified\n", verdicts.len());
    for (verdict, count) in tally {
        let _ = writeln!(out, "  genus {verdict}: {count}");
    }

    let groups = catalog.groups();
    let mut replayed = 0;
    for (entry, g) in &groups {
        let v = verdicts
            .iter()
            .find(|v| v.label.as_deref() == Some(entry.label.as_str()))
            .expect("every group has a verdict");
        if replay_trail(g, v)? {
            replayed += 1;
        }
    }
    let _ = writeln!(out, "{replayed} of {} trails replay", groups.len());
    Ok(out)
}

#[allow(dead_code)]
fn main() -> powergenus::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
