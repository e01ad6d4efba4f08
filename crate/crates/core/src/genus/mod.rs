//! Orientable genus and crosscap number of graphs.
//!
//! Exact values come from an increasing-level search ([`genus_exact`],
//! [`crosscap_exact`]) seeded by the best available lower bound. Every answer
//! carries certificates: the reason for the lower bound, and for the upper
//! bound an explicit embedding that can be written out and re-checked with
//! [`certificate::verify`].

pub mod blocks;
pub mod bounds;
pub mod certificate;
pub mod compose;
pub mod formula;
pub mod planarity;
pub mod rotation;
mod search;
pub mod simplify;

use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
pub use blocks::{blocks, cut_vertices, Block};
pub use bounds::{clique_number, euler_lower_bound};
pub use compose::{compose_blocks, compose_values, genus_by_blocks, orientable_genus_by_blocks};
pub use formula::{kmn_crosscap, kmn_genus, kn_crosscap, kn_genus};
pub use planarity::{is_planar, planar_embedding, KuratowskiKind, KuratowskiWitness, Planarity};
pub use rotation::{trace_faces, trace_signed_faces, FaceTrace, RotationSystem, SignedRotationSystem};
pub use search::Budget;
pub use simplify::{simplify, ReductionStep, Simplified};

use search::{search_level, Mode, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Surface {
    Orientable,
    Nonorientable,
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Surface::Orientable => "orientable",
            Surface::Nonorientable => "nonorientable",
        })
    }
}

/// A cellular embedding found by search or planarity testing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub system: SignedRotationSystem,
    /// Whether the certificate is written with edge signs.
    pub signed: bool,
    pub faces: usize,
    pub euler_genus: usize,
    pub orientable: bool,
}

impl Embedding {
    pub fn orientable(g: &Graph, rotation: RotationSystem) -> Result<Self> {
        Self::from_system(g, SignedRotationSystem::all_positive(g, rotation.normalized()), false)
    }

    pub fn signed(g: &Graph, system: SignedRotationSystem) -> Result<Self> {
        let system = SignedRotationSystem::new(g, system.rotation.normalized(), system.signs)?;
        Self::from_system(g, system, true)
    }

    fn from_system(g: &Graph, system: SignedRotationSystem, signed: bool) -> Result<Self> {
        let t = trace_signed_faces(g, &system)?;
        Ok(Embedding {
            system,
            signed,
            faces: t.face_count(),
            euler_genus: t.euler_genus,
            orientable: t.orientable,
        })
    }

    /// Genus (orientable) or crosscap number of the surface.
    pub fn surface_genus(&self) -> usize {
        if self.orientable {
            self.euler_genus / 2
        } else {
            self.euler_genus
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LowerCertificate {
    /// Nothing better than zero is known or needed.
    Trivial,
    /// Euler's formula with the girth bounding face lengths.
    EulerBound { girth: Option<usize> },
    /// Closed formula for a complete or complete bipartite graph.
    FormulaOracle { family: String },
    /// A subgraph with known genus, here the largest clique.
    SubgraphBound { subgraph: String },
    /// Every embedding below `level + 1` was ruled out by search.
    ExhaustiveSearch { level: usize, nodes: u64 },
    /// Combined from exact values of the blocks.
    BlockComposition { blocks: usize },
}

impl fmt::Display for LowerCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerCertificate::Trivial => f.write_str("trivial"),
            LowerCertificate::EulerBound { girth: Some(g) } => write!(f, "Euler bound (girth {g})"),
            LowerCertificate::EulerBound { girth: None } => f.write_str("Euler bound (forest)"),
            LowerCertificate::FormulaOracle { family } => write!(f, "formula for {family}"),
            LowerCertificate::SubgraphBound { subgraph } => write!(f, "contains {subgraph}"),
            LowerCertificate::ExhaustiveSearch { level, nodes } => {
                write!(f, "search excluded level {level} ({nodes} nodes)")
            }
            LowerCertificate::BlockComposition { blocks } => write!(f, "composed from {blocks} blocks"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UpperCertificate {
    Embedding(Embedding),
    FormulaOracle { family: String },
    BlockComposition { blocks: usize },
}

impl fmt::Display for UpperCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpperCertificate::Embedding(e) => write!(f, "embedding with {} faces", e.faces),
            UpperCertificate::FormulaOracle { family } => write!(f, "formula for {family}"),
            UpperCertificate::BlockComposition { blocks } => write!(f, "composed from {blocks} blocks"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelOutcome {
    Found,
    Exhausted,
    OutOfBudget,
}

/// One level of the search: is there an embedding at this genus?
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub level: usize,
    pub outcome: LevelOutcome,
    pub nodes: u64,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusResult {
    pub surface: Surface,
    pub lower: usize,
    /// `None` when no upper bound was established.
    pub upper: Option<usize>,
    pub lower_certificate: LowerCertificate,
    pub upper_certificate: Option<UpperCertificate>,
    pub levels: Vec<LevelReport>,
}

impl GenusResult {
    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower) && self.upper_certificate.is_some()
    }

    pub fn exact(&self) -> Option<usize> {
        self.is_exact().then_some(self.lower)
    }

    /// Whether `value` is consistent with the bounds.
    pub fn admits(&self, value: usize) -> bool {
        value >= self.lower && self.upper.is_none_or(|u| value <= u)
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        match &self.upper_certificate {
            Some(UpperCertificate::Embedding(e)) => Some(e),
            _ => None,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.levels.iter().map(|l| l.nodes).sum()
    }
}

impl fmt::Display for GenusResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.surface {
            Surface::Orientable => "genus",
            Surface::Nonorientable => "crosscap number",
        };
        match (self.exact(), self.upper) {
            (Some(v), _) => write!(f, "{name} = {v}")?,
            (None, Some(u)) => write!(f, "{name} in [{}, {u}]", self.lower)?,
            (None, None) => write!(f, "{name} >= {}", self.lower)?,
        }
        write!(f, "; lower: {}", self.lower_certificate)?;
        if let Some(u) = &self.upper_certificate {
            write!(f, "; upper: {u}")?;
        }
        Ok(())
    }
}

/// Knobs for the exact searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusOptions {
    /// Per-level limit.
    pub budget: Budget,
    /// Answer complete and complete bipartite graphs from the closed
    /// formulas instead of searching, and use them for clique bounds.
    pub use_formulas: bool,
}

impl Default for GenusOptions {
    fn default() -> Self {
        GenusOptions {
            budget: Budget::default(),
            use_formulas: true,
        }
    }
}

impl GenusOptions {
    pub fn with_budget(budget: Budget) -> Self {
        GenusOptions {
            budget,
            ..GenusOptions::default()
        }
    }

    /// Search only; closed formulas are not consulted.
    pub fn search_only(mut self) -> Self {
        self.use_formulas = false;
        self
    }

    pub fn max_time(mut self, t: Duration) -> Self {
        self.budget.max_time = t;
        self
    }
}

fn planar_result(g: &Graph, surface: Surface, rotation: RotationSystem) -> Result<GenusResult> {
    Ok(GenusResult {
        surface,
        lower: 0,
        upper: Some(0),
        lower_certificate: LowerCertificate::Trivial,
        upper_certificate: Some(UpperCertificate::Embedding(Embedding::orientable(g, rotation)?)),
        levels: Vec::new(),
    })
}

/// Best lower bound from Euler's formula and cliques, and optionally the
/// closed formula when the graph is a complete (bipartite) graph.
fn initial_lower(g: &Graph, surface: Surface, options: &GenusOptions) -> (usize, LowerCertificate, Option<String>) {
    let mut best = (
        euler_lower_bound(g, surface),
        LowerCertificate::EulerBound { girth: g.girth() },
    );
    let mut family = None;
    if options.use_formulas {
        let (w, clique) = bounds::clique_lower_bound(g, surface);
        if clique > best.0 {
            best = (
                clique,
                LowerCertificate::SubgraphBound {
                    subgraph: format!("K{w}"),
                },
            );
        }
        if let Some(f) = formula::recognize(g) {
            let value = match surface {
                Surface::Orientable => f.genus(),
                Surface::Nonorientable => f.crosscap(),
            };
            family = Some(f.to_string());
            if value >= best.0 {
                best = (value, LowerCertificate::FormulaOracle { family: f.to_string() });
            }
        }
    }
    (best.0, best.1, family)
}

fn check_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Orientable genus by increasing-level search.
pub fn genus_exact(g: &Graph, options: &GenusOptions) -> Result<GenusResult> {
    check_connected(g)?;
    if let Some(rot) = planar_embedding(g) {
        return planar_result(g, Surface::Orientable, rot);
    }
    let surface = Surface::Orientable;
    let (mut lower, mut lower_certificate, family) = initial_lower(g, surface, options);
    if let Some(family) = family {
        return Ok(GenusResult {
            surface,
            lower,
            upper: Some(lower),
            lower_certificate,
            upper_certificate: Some(UpperCertificate::FormulaOracle { family }),
            levels: Vec::new(),
        });
    }
    // One face is always possible: Euler genus at most m - n + 1.
    let ceiling = (g.m() + 1 - g.n()) / 2;
    let mut levels = Vec::new();
    let mut proven = true;
    for level in lower..=ceiling {
        let run = search_level(g, Mode::Orientable, 2 * level, options.budget);
        let report = |outcome| LevelReport {
            level,
            outcome,
            nodes: run.nodes,
            elapsed_ms: run.elapsed.as_millis(),
        };
        match run.outcome {
            Outcome::Found(system) => {
                levels.push(report(LevelOutcome::Found));
                let rotation = system.rotation;
                let embedding = Embedding::orientable(g, rotation)?;
                if embedding.euler_genus > 2 * level || embedding.euler_genus < 2 * lower || !embedding.orientable {
                    return Err(Error::InternalContradiction(format!(
                        "search returned Euler genus {} at level {level}",
                        embedding.euler_genus
                    )));
                }
                return Ok(GenusResult {
                    surface,
                    lower,
                    upper: Some(embedding.euler_genus / 2),
                    lower_certificate,
                    upper_certificate: Some(UpperCertificate::Embedding(embedding)),
                    levels,
                });
            }
            Outcome::Exhausted => {
                levels.push(report(LevelOutcome::Exhausted));
                if proven {
                    lower = level + 1;
                    lower_certificate = LowerCertificate::ExhaustiveSearch {
                        level,
                        nodes: levels.iter().map(|l| l.nodes).sum(),
                    };
                }
            }
            Outcome::OutOfBudget => {
                levels.push(report(LevelOutcome::OutOfBudget));
                proven = false;
            }
        }
    }
    Err(Error::InternalContradiction(
        "no embedding found up to the one-face ceiling".into(),
    ))
}

/// Crosscap number by increasing-level search over signed rotation systems.
/// Planar graphs get 0.
pub fn crosscap_exact(g: &Graph, options: &GenusOptions) -> Result<GenusResult> {
    check_connected(g)?;
    if let Some(rot) = planar_embedding(g) {
        return planar_result(g, Surface::Nonorientable, rot);
    }
    let surface = Surface::Nonorientable;
    let (lower, mut lower_certificate, family) = initial_lower(g, surface, options);
    let mut lower = lower.max(1);
    if let Some(family) = family {
        return Ok(GenusResult {
            surface,
            lower,
            upper: Some(lower),
            lower_certificate,
            upper_certificate: Some(UpperCertificate::FormulaOracle { family }),
            levels: Vec::new(),
        });
    }
    // A one-face orientable embedding plus a crosscap.
    let ceiling = g.m() + 2 - g.n();
    let mut levels = Vec::new();
    let mut proven = true;
    for level in lower..=ceiling {
        let run = search_level(g, Mode::Nonorientable, level, options.budget);
        let report = |outcome| LevelReport {
            level,
            outcome,
            nodes: run.nodes,
            elapsed_ms: run.elapsed.as_millis(),
        };
        match run.outcome {
            Outcome::Found(system) => {
                levels.push(report(LevelOutcome::Found));
                let embedding = Embedding::signed(g, system)?;
                if embedding.euler_genus > level || embedding.euler_genus < lower || embedding.orientable {
                    return Err(Error::InternalContradiction(format!(
                        "search returned Euler genus {} (orientable: {}) at level {level}",
                        embedding.euler_genus, embedding.orientable
                    )));
                }
                return Ok(GenusResult {
                    surface,
                    lower,
                    upper: Some(embedding.euler_genus),
                    lower_certificate,
                    upper_certificate: Some(UpperCertificate::Embedding(embedding)),
                    levels,
                });
            }
            Outcome::Exhausted => {
                levels.push(report(LevelOutcome::Exhausted));
                if proven {
                    lower = level + 1;
                    lower_certificate = LowerCertificate::ExhaustiveSearch {
                        level,
                        nodes: levels.iter().map(|l| l.nodes).sum(),
                    };
                }
            }
            Outcome::OutOfBudget => {
                levels.push(report(LevelOutcome::OutOfBudget));
                proven = false;
            }
        }
    }
    Err(Error::InternalContradiction(
        "no nonorientable embedding found up to the ceiling".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle};

    #[test]
    fn small_complete_graphs_by_search() {
        let opts = GenusOptions::default().search_only();
        for n in 3..=6 {
            let r = genus_exact(&complete(n), &opts).unwrap();
            assert_eq!(r.exact(), Some(kn_genus(n)), "K{n}");
            let r = crosscap_exact(&complete(n), &opts).unwrap();
            assert_eq!(r.exact(), Some(kn_crosscap(n)), "K{n}");
        }
    }

    #[test]
    fn formulas_short_circuit() {
        let r = genus_exact(&complete(9), &GenusOptions::default()).unwrap();
        assert_eq!(r.exact(), Some(3));
        assert!(matches!(
            r.upper_certificate,
            Some(UpperCertificate::FormulaOracle { .. })
        ));
    }

    #[test]
    fn planar_and_disconnected() {
        let r = crosscap_exact(&cycle(5), &GenusOptions::default()).unwrap();
        assert_eq!(r.exact(), Some(0));
        let two = crate::graph::disjoint_union(&[cycle(3), cycle(3)]);
        assert!(matches!(
            genus_exact(&two, &GenusOptions::default()),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn k33_crosscap_by_search() {
        let r = crosscap_exact(&complete_bipartite(3, 3), &GenusOptions::default().search_only()).unwrap();
        assert_eq!(r.exact(), Some(1));
        assert!(!r.embedding().unwrap().orientable);
    }
}
