//! Genus verdicts for power graphs straight from group structure.
//!
//! The decision trees follow the classification of groups whose power graph
//! has genus two or crosscap number two. Every verdict carries a trail of
//! [`CertificateStep`]s; each step names a rule from [`Rule`], the data it
//! consumed and what it concluded, and [`replay`] re-runs it.

mod registry;
mod rules;
mod validate;

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::genus::{GenusOptions, Surface};
use crate::group::{ElementSet, FiniteGroup, OrderSpectrum, SixProfile, ISO_ORDER_CAP};

pub use registry::{verify_lemma, verify_lemma_in, LemmaReport};
pub use rules::{cyclic_clique_chain, paired_pattern, Rule};
pub use validate::{cross_validate, Agreement, CrossValidation};

use rules::{blocks_input, conclude, gather, Finding};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OrientableVerdict {
    Planar,
    One,
    Two { table1_label: String },
    AtLeastThree { lower: usize },
    OtherWithBounds { lower: usize, upper: Option<usize> },
}

impl OrientableVerdict {
    /// Range of genus values compatible with the verdict.
    pub fn range(&self) -> (usize, Option<usize>) {
        match self {
            OrientableVerdict::Planar => (0, Some(0)),
            OrientableVerdict::One => (1, Some(1)),
            OrientableVerdict::Two { .. } => (2, Some(2)),
            OrientableVerdict::AtLeastThree { lower } => (*lower.max(&3), None),
            OrientableVerdict::OtherWithBounds { lower, upper } => (*lower, *upper),
        }
    }

    pub fn is_two(&self) -> bool {
        matches!(self, OrientableVerdict::Two { .. })
    }
}

impl fmt::Display for OrientableVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientableVerdict::Planar => f.write_str("planar"),
            OrientableVerdict::One => f.write_str("one"),
            OrientableVerdict::Two { table1_label } => write!(f, "two ({table1_label})"),
            OrientableVerdict::AtLeastThree { lower } => write!(f, "at least three (>= {lower})"),
            OrientableVerdict::OtherWithBounds { lower, upper: Some(u) } => {
                write!(f, "other, in [{lower}, {u}], not two")
            }
            OrientableVerdict::OtherWithBounds { lower, upper: None } => write!(f, "other, >= {lower}, not two"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonorientableVerdict {
    Planar,
    One,
    NotTwoWithReason { reason: Rule, lower: usize },
    Exact { value: usize },
}

impl NonorientableVerdict {
    /// Range of crosscap numbers compatible with the verdict; two is excluded
    /// by every variant.
    pub fn range(&self) -> (usize, Option<usize>) {
        match self {
            NonorientableVerdict::Planar => (0, Some(0)),
            NonorientableVerdict::One => (1, Some(1)),
            NonorientableVerdict::NotTwoWithReason { lower, .. } => (*lower, None),
            NonorientableVerdict::Exact { value } => (*value, Some(*value)),
        }
    }

    pub fn is_exact_two(&self) -> bool {
        matches!(self, NonorientableVerdict::Exact { value: 2 })
    }
}

impl fmt::Display for NonorientableVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonorientableVerdict::Planar => f.write_str("planar"),
            NonorientableVerdict::One => f.write_str("one"),
            NonorientableVerdict::NotTwoWithReason { reason, lower } => write!(f, "not two ({reason}, >= {lower})"),
            NonorientableVerdict::Exact { value } => write!(f, "exactly {value}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateStep {
    pub rule_id: String,
    pub surface: Surface,
    pub inputs: Value,
    pub conclusion: String,
}

impl fmt::Display for CertificateStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.rule_id, self.conclusion)
    }
}

/// A classification. Field order is the record layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub label: Option<String>,
    pub order: usize,
    pub spectrum: Vec<usize>,
    pub six_profile: SixProfile,
    pub orientable: Option<OrientableVerdict>,
    pub nonorientable: Option<NonorientableVerdict>,
    pub trail: Vec<CertificateStep>,
}

impl Verdict {
    fn new(g: &FiniteGroup) -> Self {
        Verdict {
            label: g.label().map(str::to_string),
            order: g.order(),
            spectrum: g.order_spectrum().orders(),
            six_profile: g.six_profile(),
            orientable: None,
            nonorientable: None,
            trail: Vec::new(),
        }
    }

    /// One JSON line, fields in declaration order.
    pub fn to_record(&self) -> String {
        serde_json::to_string(self).expect("verdicts serialize")
    }

    pub fn steps_for(&self, surface: Surface) -> impl Iterator<Item = &CertificateStep> {
        self.trail.iter().filter(move |s| s.surface == surface)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.label.as_deref().unwrap_or("group");
        let spectrum = OrderSpectrum::from_multiplicities(self.spectrum.iter().map(|&k| (k, 1)).collect());
        writeln!(
            f,
            "{name}: order {}, orders {}, six-profile {}",
            self.order,
            spectrum.set_string(),
            self.six_profile
        )?;
        if let Some(o) = &self.orientable {
            writeln!(f, "  genus: {o}")?;
        }
        if let Some(n) = &self.nonorientable {
            writeln!(f, "  crosscap number: {n}")?;
        }
        for step in &self.trail {
            writeln!(f, "  {} {step}", step.surface)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub order_cap: usize,
    /// Used when a reduction step evaluates its subgraph.
    pub engine: GenusOptions,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            order_cap: ISO_ORDER_CAP,
            engine: GenusOptions::default(),
        }
    }
}

/// Cyclic subgroups whose order is not 1, 2, 3 or 4.
pub fn reduction_subgroups(g: &FiniteGroup) -> Vec<ElementSet> {
    g.order_spectrum()
        .orders()
        .into_iter()
        .filter(|k| *k > 4)
        .flat_map(|k| g.cyclic_subgroups_of_order(k))
        .collect()
}

/// The union of [`reduction_subgroups`] and the identity. Every element
/// outside it has order 2, 3 or 4.
pub fn reduction_set(g: &FiniteGroup) -> ElementSet {
    let set = reduction_subgroups(g)
        .iter()
        .fold(g.cyclic_subgroup(g.identity()), |acc, h| acc.union(h));
    debug_assert!(OrderSpectrum::of_subset(g, &set.complement()).is_subset_of(&[2, 3, 4]));
    set
}

struct Trail<'a> {
    group: &'a FiniteGroup,
    surface: Surface,
    engine: GenusOptions,
    steps: Vec<CertificateStep>,
}

impl Trail<'_> {
    fn apply(&mut self, rule: Rule) -> Result<Finding> {
        let inputs = gather(rule, self.group, self.surface)?;
        self.record(rule, inputs)
    }

    fn compose(&mut self, complete: &[usize]) -> Result<Finding> {
        self.record(Rule::BlockComposition, blocks_input(complete))
    }

    fn record(&mut self, rule: Rule, inputs: Value) -> Result<Finding> {
        let (conclusion, finding) = conclude(rule, self.surface, &inputs, &self.engine)?;
        self.steps.push(CertificateStep {
            rule_id: rule.id().to_string(),
            surface: self.surface,
            inputs,
            conclusion,
        });
        Ok(finding)
    }
}

fn check_cap(g: &FiniteGroup, options: &ClassifyOptions) -> Result<()> {
    if g.order() > options.order_cap {
        return Err(Error::OrderCapExceeded {
            order: g.order(),
            cap: options.order_cap,
        });
    }
    Ok(())
}

fn lower_of(f: &Finding) -> usize {
    match f {
        Finding::Bounds { lower, .. } => *lower,
        _ => 0,
    }
}

/// Runs the reduction step; its bounds must admit `expect`.
fn reduced_bounds(trail: &mut Trail, expect: usize) -> Result<(usize, Option<usize>)> {
    match trail.apply(Rule::ReductionSet)? {
        Finding::Bounds { lower, upper } if lower <= expect && upper.is_none_or(|u| u >= expect) => Ok((lower, upper)),
        other => Err(Error::InternalContradiction(format!(
            "reduction gives {other:?}, expected {expect}"
        ))),
    }
}

fn orientable_tree(trail: &mut Trail) -> Result<OrientableVerdict> {
    let g = trail.group;
    let spectrum = g.order_spectrum();
    if trail.apply(Rule::PlanarSpectrum)? == Finding::Branch(true) {
        return Ok(OrientableVerdict::Planar);
    }
    let max = spectrum.max_order();
    if max >= 9 {
        let bound = lower_of(&trail.apply(Rule::CyclicGenusTwo)?);
        return Ok(OrientableVerdict::AtLeastThree { lower: bound });
    }
    if spectrum.contains(5) || spectrum.contains(7) {
        let bound = lower_of(&trail.apply(Rule::SylowFiveSeven)?);
        return Ok(OrientableVerdict::OtherWithBounds {
            lower: bound,
            upper: None,
        });
    }
    if max == 8 {
        trail.apply(Rule::CyclicGenusTwo)?;
        if let Finding::Bounds { lower, .. } = trail.apply(Rule::OrderEightBlocks)? {
            trail.compose(&[8, 5])?;
            return Ok(OrientableVerdict::AtLeastThree { lower });
        }
        if let Finding::Bounds { lower, .. } = trail.apply(Rule::OrderEightExcludesThree)? {
            return Ok(OrientableVerdict::AtLeastThree { lower });
        }
        let Finding::Label(label) = trail.apply(Rule::TwoGroupGenusTwo)? else {
            unreachable!("two-group rule yields a label or an error")
        };
        return match reduced_bounds(trail, 2)? {
            (2, Some(2)) => Ok(OrientableVerdict::Two { table1_label: label }),
            (lower, upper) => Ok(OrientableVerdict::OtherWithBounds { lower, upper }),
        };
    }
    // Orders now lie in {1,2,3,4,6} and include 6.
    trail.apply(Rule::NoTwoHexagons)?;
    let count = g.six_profile().count;
    match count {
        1 => {
            trail.apply(Rule::OneHexagon)?;
            Ok(match reduced_bounds(trail, 1)? {
                (1, Some(1)) => OrientableVerdict::One,
                (lower, upper) => OrientableVerdict::OtherWithBounds { lower, upper },
            })
        }
        3 => {
            if trail.apply(Rule::HexagonIntersectionSpread)? == Finding::Branch(true) {
                let Finding::Label(label) = trail.apply(Rule::ThreeHexagonGroups)? else {
                    unreachable!("table rule yields a label or an error")
                };
                trail.apply(Rule::ThreeHexagonsGenus)?;
                Ok(match reduced_bounds(trail, 2)? {
                    (2, Some(2)) => OrientableVerdict::Two { table1_label: label },
                    (lower, upper) => OrientableVerdict::OtherWithBounds { lower, upper },
                })
            } else {
                let lower = lower_of(&trail.apply(Rule::ThreeHexagonsGenus)?);
                trail.compose(&[5, 5, 5])?;
                Ok(OrientableVerdict::AtLeastThree { lower })
            }
        }
        4 => {
            trail.apply(Rule::FourHexagonImpossible)?;
            let lower = lower_of(&trail.apply(Rule::FourHexagonsGenus)?);
            Ok(OrientableVerdict::AtLeastThree { lower })
        }
        0 => Err(Error::InternalContradiction(
            "non-planar orders within {1,2,3,4,6} but no element of order 6".into(),
        )),
        _ => {
            let lower = lower_of(&trail.apply(Rule::FiveHexagonsGenus)?);
            Ok(OrientableVerdict::AtLeastThree { lower })
        }
    }
}

fn nonorientable_tree(trail: &mut Trail) -> Result<NonorientableVerdict> {
    let g = trail.group;
    let spectrum = g.order_spectrum();
    if trail.apply(Rule::PlanarSpectrum)? == Finding::Branch(true) {
        return Ok(NonorientableVerdict::Planar);
    }
    let not_two = |reason: Rule, lower: usize| NonorientableVerdict::NotTwoWithReason { reason, lower };
    if spectrum.max_order() >= 7 {
        let lower = lower_of(&trail.apply(Rule::CyclicCrosscap)?);
        return Ok(not_two(Rule::CyclicCrosscap, lower));
    }
    if spectrum.contains(5) {
        match trail.apply(Rule::SylowFiveSeven)? {
            Finding::Bounds { lower, .. } => {
                trail.compose(&vec![5; g.count_subgroups_of_prime_order(5)?])?;
                return Ok(not_two(Rule::SylowFiveSeven, lower));
            }
            _ => return reduced_verdict(trail),
        }
    }
    trail.apply(Rule::NoTwoHexagons)?;
    match g.six_profile().count {
        0 => Err(Error::InternalContradiction(
            "non-planar orders within {1,2,3,4,6} but no element of order 6".into(),
        )),
        1 => {
            trail.apply(Rule::OneHexagon)?;
            reduced_verdict(trail)
        }
        _ => {
            let lower = lower_of(&trail.apply(Rule::HexagonsCrosscap)?);
            Ok(not_two(Rule::HexagonsCrosscap, lower))
        }
    }
}

fn reduced_verdict(trail: &mut Trail) -> Result<NonorientableVerdict> {
    match trail.apply(Rule::ReductionSet)? {
        Finding::Bounds {
            lower: 1,
            upper: Some(1),
        } => Ok(NonorientableVerdict::One),
        Finding::Bounds {
            lower: 2,
            upper: Some(2),
        } => Err(Error::InternalContradiction(
            "reduced graph has crosscap number 2".into(),
        )),
        Finding::Bounds { lower, upper: Some(u) } if lower == u => Ok(NonorientableVerdict::Exact { value: u }),
        Finding::Bounds { lower, .. } => Ok(NonorientableVerdict::NotTwoWithReason {
            reason: Rule::ReductionSet,
            lower: lower.max(3),
        }),
        other => Err(Error::InternalContradiction(format!("reduction gave {other:?}"))),
    }
}

fn run<T>(
    g: &FiniteGroup,
    surface: Surface,
    options: &ClassifyOptions,
    tree: fn(&mut Trail) -> Result<T>,
) -> Result<(T, Vec<CertificateStep>)> {
    check_cap(g, options)?;
    let mut trail = Trail {
        group: g,
        surface,
        engine: options.engine,
        steps: Vec::new(),
    };
    let verdict = tree(&mut trail)?;
    Ok((verdict, trail.steps))
}

pub fn classify_orientable(g: &FiniteGroup) -> Result<Verdict> {
    classify_orientable_with(g, &ClassifyOptions::default())
}

pub fn classify_orientable_with(g: &FiniteGroup, options: &ClassifyOptions) -> Result<Verdict> {
    let (v, steps) = run(g, Surface::Orientable, options, orientable_tree)?;
    let mut out = Verdict::new(g);
    out.orientable = Some(v);
    out.trail = steps;
    Ok(out)
}

pub fn classify_nonorientable(g: &FiniteGroup) -> Result<Verdict> {
    classify_nonorientable_with(g, &ClassifyOptions::default())
}

pub fn classify_nonorientable_with(g: &FiniteGroup, options: &ClassifyOptions) -> Result<Verdict> {
    let (v, steps) = run(g, Surface::Nonorientable, options, nonorientable_tree)?;
    let mut out = Verdict::new(g);
    out.nonorientable = Some(v);
    out.trail = steps;
    Ok(out)
}

/// Both verdicts, orientable steps first.
pub fn classify(g: &FiniteGroup, options: &ClassifyOptions) -> Result<Verdict> {
    let o = classify_orientable_with(g, options)?;
    let n = classify_nonorientable_with(g, options)?;
    let mut out = o;
    out.nonorientable = n.nonorientable;
    out.trail.extend(n.trail);
    Ok(out)
}

/// Classifies many groups in parallel; results keep the input order.
pub fn classify_all(groups: &[FiniteGroup], options: &ClassifyOptions) -> Vec<Result<Verdict>> {
    groups.par_iter().map(|g| classify(g, options)).collect()
}

/// Re-runs one step on `g`: the inputs must be gathered again identically
/// and must yield the same conclusion.
pub fn replay(g: &FiniteGroup, step: &CertificateStep) -> Result<bool> {
    replay_with(g, step, &GenusOptions::default())
}

pub fn replay_with(g: &FiniteGroup, step: &CertificateStep, engine: &GenusOptions) -> Result<bool> {
    let rule: Rule = step.rule_id.parse()?;
    if rule != Rule::BlockComposition && gather(rule, g, step.surface)? != step.inputs {
        return Ok(false);
    }
    let (conclusion, _) = conclude(rule, step.surface, &step.inputs, engine)?;
    Ok(conclusion == step.conclusion)
}

/// Replays every step of a verdict's trail.
pub fn replay_trail(g: &FiniteGroup, verdict: &Verdict) -> Result<bool> {
    for step in &verdict.trail {
        if !replay(g, step)? {
            return Ok(false);
        }
    }
    Ok(true)
}
