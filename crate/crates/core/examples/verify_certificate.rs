// Writes an embedding certificate, checks it, then shows that a tampered
// claim is caught.

use std::fmt::Write as _;

use powergenus::genus::certificate::{verify, write_certificate};
use powergenus::genus::{crosscap_exact, GenusOptions};
use powergenus::graph::complete_bipartite;

fn run_example() -> powergenus::Result<String> {
    let g = complete_bipartite(3, 3);
    let result = crosscap_exact(&g, &GenusOptions::default().search_only())?;
    let embedding = result.embedding().expect("search returns an embedding");
    let text = write_certificate(&g, embedding);

    let mut out = String::new();
    let _ = writeln!(out, "{result}");
    let _ = writeln!(out, "{}", verify(&text)?);

    // Claim one face fewer than the rotation system produces.
    let tampered: String = text
        .lines()
        .map(|l| match l.strip_prefix("claim ") {
            Some(rest) => {
                let mut parts: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                let faces: usize = parts.last().and_then(|f| f.parse().ok()).unwrap_or(0);
                *parts.last_mut().unwrap() = (faces.saturating_sub(1)).to_string();
                format!("claim {}\n", parts.join(" "))
            }
            None => format!("{l}\n"),
        })
        .collect();
    let _ = writeln!(out, "{}", verify(&tampered)?);
    Ok(out)
}

#[allow(dead_code)]
fn main() -> powergenus::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
