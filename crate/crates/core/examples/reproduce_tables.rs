// The genus-two table and the three-hexagon condition matrix, produced
// through the same code path as `powergenus report`.

use powergenus::cli::{run, Command, ReportKind, RunConfig};

fn run_example() -> powergenus::Result<String> {
    let config = RunConfig {
        timestamp: false,
        ..RunConfig::default()
    };
    let mut out = run(&config, &Command::Report(ReportKind::Table1))?.text;
    out.push('\n');
    out.push_str(&run(&config, &Command::Report(ReportKind::Table2))?.text);
    Ok(out)
}

#[allow(dead_code)]
fn main() -> powergenus::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
