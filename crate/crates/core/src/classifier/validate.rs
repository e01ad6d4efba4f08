//! Classifier verdicts checked against the genus engine.

use std::fmt;

use serde::Serialize;

use super::{classify, ClassifyOptions, Verdict};
use crate::error::Result;
use crate::genus::{genus_by_blocks, Budget, GenusOptions, GenusResult};
use crate::graph::power_graph;
use crate::group::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    /// The engine value is exact and the verdict admits it.
    Consistent,
    /// Engine bounds overlap the verdict but do not pin a value.
    ConsistentWith,
    Mismatch,
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Agreement::Consistent => "consistent",
            Agreement::ConsistentWith => "consistent-with",
            Agreement::Mismatch => "MISMATCH",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossValidation {
    pub verdict: Verdict,
    pub engine_genus: (usize, Option<usize>),
    pub engine_crosscap: (usize, Option<usize>),
    pub orientable: Agreement,
    pub nonorientable: Agreement,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.orientable != Agreement::Mismatch && self.nonorientable != Agreement::Mismatch
    }
}

fn show(range: (usize, Option<usize>)) -> String {
    match range {
        (l, Some(u)) if l == u => format!("{l}"),
        (l, Some(u)) => format!("[{l}, {u}]"),
        (l, None) => format!(">= {l}"),
    }
}

impl fmt::Display for CrossValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.verdict.label.as_deref().unwrap_or("group");
        let o = self.verdict.orientable.as_ref().expect("both verdicts present");
        let n = self.verdict.nonorientable.as_ref().expect("both verdicts present");
        writeln!(
            f,
            "{name}: genus engine {} vs verdict {o}: {}",
            show(self.engine_genus),
            self.orientable
        )?;
        write!(
            f,
            "{name}: crosscap engine {} vs verdict {n}: {}",
            show(self.engine_crosscap),
            self.nonorientable
        )
    }
}

fn agreement(engine: &GenusResult, verdict: (usize, Option<usize>), excluded: Option<usize>) -> Agreement {
    let lo = engine.lower.max(verdict.0);
    let hi = match (engine.upper, verdict.1) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    if hi.is_some_and(|h| lo > h) {
        return Agreement::Mismatch;
    }
    match engine.exact() {
        Some(v) if Some(v) == excluded => Agreement::Mismatch,
        Some(_) => Agreement::Consistent,
        None => Agreement::ConsistentWith,
    }
}

/// Classifies `g`, computes both genera of its power graph block by block
/// within `budget`, and compares. Bound-only engine results are reported as
/// consistent-with rather than failing.
pub fn cross_validate(g: &FiniteGroup, budget: Budget) -> Result<CrossValidation> {
    let verdict = classify(g, &ClassifyOptions::default())?;
    let (genus, crosscap) = genus_by_blocks(&power_graph(g), &GenusOptions::with_budget(budget))?;
    let o = verdict.orientable.as_ref().expect("classify fills both").range();
    let n = verdict.nonorientable.as_ref().expect("classify fills both").range();
    Ok(CrossValidation {
        orientable: agreement(&genus, o, None),
        nonorientable: agreement(&crosscap, n, Some(2)),
        engine_genus: (genus.lower, genus.upper),
        engine_crosscap: (crosscap.lower, crosscap.upper),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups_agree() {
        for g in [
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::cyclic(7).unwrap(),
            FiniteGroup::cyclic(8).unwrap(),
            FiniteGroup::cyclic(6).unwrap(),
        ] {
            let r = cross_validate(&g, Budget::default()).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(r.orientable, Agreement::Consistent, "{r}");
        }
        let r = cross_validate(&FiniteGroup::cyclic(7).unwrap(), Budget::default()).unwrap();
        assert_eq!(r.engine_genus, (1, Some(1)));
    }
}
