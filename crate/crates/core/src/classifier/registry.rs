//! Desk-scale checks behind each rule, run over the catalog or over small
//! graph families.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::rules::{cyclic_clique_chain, paired_pattern, Rule};
use super::{classify_orientable, reduction_set, reduction_subgroups, OrientableVerdict};
use crate::catalog::{Catalog, CatalogEntry, TABLE2_LABELS, TABLE2_SPECTRA};
use crate::error::Result;
use crate::genus::{
    clique_number, compose_values, crosscap_exact, genus_by_blocks, genus_exact, is_planar, kmn_crosscap, kmn_genus,
    kn_crosscap, kn_genus, orientable_genus_by_blocks, Budget, GenusOptions,
};
use crate::graph::{
    apex_join, complete, complete_bipartite, disjoint_union, hexagon_pair_graphs, hexagon_union_graph, power_graph,
};
use crate::group::{is_prime, FiniteGroup, OrderSpectrum};

/// Outcome of [`verify_lemma`]: the rule passes when no witness was found.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub rule_id: String,
    pub statement: String,
    pub scanned: usize,
    pub unit: &'static str,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }

    fn new(rule: Rule, unit: &'static str) -> Self {
        LemmaReport {
            rule_id: rule.id().to_string(),
            statement: rule.statement().to_string(),
            scanned: 0,
            unit,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn scan<'a, I>(mut self, items: I, check: impl Fn(&FiniteGroup) -> Result<bool> + Sync) -> Result<Self>
    where
        I: IntoIterator<Item = &'a (&'a CatalogEntry, FiniteGroup)>,
    {
        let items: Vec<_> = items.into_iter().collect();
        self.scanned += items.len();
        let results: Vec<Result<Option<String>>> = items
            .par_iter()
            .map(|(e, g)| Ok((!check(g)?).then(|| e.label.clone())))
            .collect();
        for r in results {
            if let Some(label) = r? {
                self.witnesses.push(label);
            }
        }
        Ok(self)
    }

    fn expect(&mut self, what: impl Into<String>, ok: bool) {
        self.scanned += 1;
        let what = what.into();
        if ok {
            self.notes.push(format!("ok: {what}"));
        } else {
            self.witnesses.push(what);
        }
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status}: {} witnesses in {} {} scanned",
            self.witnesses.len(),
            self.scanned,
            self.unit
        )?;
        if !self.witnesses.is_empty() {
            write!(f, " ({})", self.witnesses.join(", "))?;
        }
        for note in &self.notes {
            write!(f, "\n  {note}")?;
        }
        Ok(())
    }
}

/// Runs the check registered for `rule_id` against the built-in catalog.
pub fn verify_lemma(rule_id: &str) -> Result<LemmaReport> {
    verify_lemma_in(rule_id, Catalog::builtin())
}

fn hexagonal(g: &FiniteGroup) -> bool {
    g.order_spectrum().is_subset_of(&[1, 2, 3, 4, 6])
}

fn budgeted(nodes: u64) -> GenusOptions {
    GenusOptions::with_budget(Budget::nodes(nodes))
}

fn three_hexagon_conditions(g: &FiniteGroup) -> bool {
    let p = g.six_profile();
    hexagonal(g) && p.count == 3 && p.any_pair(3)
}

pub fn verify_lemma_in(rule_id: &str, catalog: &Catalog) -> Result<LemmaReport> {
    let rule: Rule = rule_id.parse()?;
    let all = catalog.groups();
    let report = LemmaReport::new(rule, "groups");
    let with = |pred: &dyn Fn(&FiniteGroup) -> bool| -> Vec<&(&CatalogEntry, FiniteGroup)> {
        all.iter().filter(|(_, g)| pred(g)).collect()
    };
    Ok(match rule {
        Rule::PlanarSpectrum => report.scan(&all, |g| {
            Ok(is_planar(&power_graph(g)).is_planar() == g.order_spectrum().is_subset_of(&[1, 2, 3, 4]))
        })?,
        Rule::ReductionSet => report.scan(&all, |g| {
            let outside = OrderSpectrum::of_subset(g, &reduction_set(g).complement());
            Ok(outside.is_subset_of(&[2, 3, 4]) && reduction_subgroups(g).iter().all(|h| g.is_subgroup(h)))
        })?,
        Rule::NoTwoHexagons => {
            let items = catalog.complete_groups()?;
            report.scan(&items, |g| Ok(g.six_profile().count != 2))?
        }
        Rule::HexagonIntersectionSpread => {
            let items = with(&|g| hexagonal(g) && g.six_profile().count == 3);
            report.scan(items, |g| {
                let p = g.six_profile();
                Ok(!p.any_pair(3) || p.all_pairs(3))
            })?
        }
        Rule::ThreeHexagonGroups => {
            let mut report = report;
            report.scanned = all.len();
            let found: BTreeSet<&str> = all
                .iter()
                .filter(|(_, g)| three_hexagon_conditions(g))
                .map(|(e, _)| e.label.as_str())
                .collect();
            let expected: BTreeSet<&str> = TABLE2_LABELS.into_iter().collect();
            report
                .witnesses
                .extend(found.symmetric_difference(&expected).map(|l| l.to_string()));
            for (label, spectrum) in TABLE2_SPECTRA {
                let g = catalog.get(label)?;
                if g.order_spectrum().orders() != spectrum {
                    report.witnesses.push(format!("{label} spectrum"));
                }
            }
            report.notes.push(format!(
                "qualifying: {}",
                found.into_iter().collect::<Vec<_>>().join(" ")
            ));
            report
        }
        Rule::FourHexagonImpossible => {
            let items = with(&|g| hexagonal(g) && g.six_profile().count == 4);
            report.scan(items, |g| Ok(!paired_pattern(&g.six_profile().pairwise_intersections)))?
        }
        Rule::CyclicGenusTwo | Rule::CyclicCrosscap => {
            let mut report = LemmaReport::new(rule, "cyclic groups");
            for n in 1..=40usize {
                let z = FiniteGroup::cyclic(n)?;
                let graph = power_graph(&z);
                let (_, chain) = cyclic_clique_chain(n);
                report.scanned += 1;
                let ok = clique_number(&graph) == chain
                    && match rule {
                        Rule::CyclicGenusTwo if n >= 9 => kn_genus(chain) >= 3,
                        Rule::CyclicGenusTwo if n == 8 => kn_genus(chain) == 2,
                        Rule::CyclicGenusTwo => orientable_genus_by_blocks(&graph, &budgeted(1_000_000))?
                            .upper
                            .is_some_and(|u| u <= 1),
                        _ if n >= 7 => kn_crosscap(chain) >= 3,
                        _ => genus_by_blocks(&graph, &budgeted(1_000_000))?
                            .1
                            .upper
                            .is_some_and(|u| u <= 1),
                    };
                if !ok {
                    report.witnesses.push(format!("Z{n}"));
                }
            }
            report
                .notes
                .push("divisor-chain clique equals the brute-force clique number for n <= 40".into());
            report
        }
        Rule::TwoGroupGenusTwo => {
            let mut report = report;
            let two_groups: Vec<_> = all.iter().filter(|(_, g)| g.order().is_power_of_two()).collect();
            report.scanned = two_groups.len();
            let found: BTreeSet<&str> = two_groups
                .iter()
                .filter(|(_, g)| {
                    g.cyclic_subgroups_of_order(8).len() == 1 && g.order_spectrum().orders() == [1, 2, 4, 8]
                })
                .map(|(e, _)| e.label.as_str())
                .collect();
            let expected: BTreeSet<&str> = ["[8,1]", "[16,7]", "[16,8]", "[16,9]"].into_iter().collect();
            report
                .witnesses
                .extend(found.symmetric_difference(&expected).map(|l| l.to_string()));
            for label in &found {
                let genus = orientable_genus_by_blocks(&power_graph(&catalog.get(label)?), &GenusOptions::default())?;
                if genus.exact() != Some(2) {
                    report.witnesses.push(format!("{label}: engine genus {genus}"));
                }
            }
            report.notes.push(format!(
                "qualifying: {}",
                found.into_iter().collect::<Vec<_>>().join(" ")
            ));
            report
        }
        Rule::OrderEightBlocks => {
            let items = with(&|g| g.order_spectrum().contains(8));
            let mut report = report.scan(items, |g| {
                let octagons = g.cyclic_subgroups_of_order(8);
                let pairs_ok = octagons
                    .iter()
                    .enumerate()
                    .all(|(i, a)| octagons[i + 1..].iter().all(|b| a.intersection(b).len() <= 4));
                let six_ok = g
                    .cyclic_subgroups_of_order(6)
                    .iter()
                    .all(|h| octagons.iter().all(|a| a.intersection(h).len() <= 2));
                Ok(pairs_ok && six_ok)
            })?;
            let direct = genus_by_blocks(
                &apex_join(&[disjoint_union(&[complete(7), complete(4)])]),
                &GenusOptions::default(),
            )?;
            report.expect(
                "K1+(K7 u K4) has genus 3",
                direct.0.exact() == Some(3) && compose_values(&[(2, 4), (1, 1)]).0 == 3,
            );
            report
        }
        Rule::OrderEightExcludesThree => {
            let items = with(&|g| g.order() == 24);
            let mut report = report.scan(items, |g| Ok(g.order_spectrum().orders() != [1, 2, 3, 4, 8]))?;
            report.unit = "order-24 groups";
            report
                .notes
                .push("registry fact: no order-24 group has element orders {1,2,3,4,8}".into());
            report
        }
        Rule::SylowFiveSeven => {
            let items = with(&|g| g.order() % 5 == 0 || g.order() % 7 == 0);
            report.scan(items, |g| {
                for p in [5, 7] {
                    let k = g.count_subgroups_of_prime_order(p)?;
                    if g.order() % p == 0 && k % p != 1 {
                        return Ok(false);
                    }
                }
                // The engine only has a chance where no element order reaches 9.
                if g.order_spectrum().max_order() >= 9 {
                    return Ok(true);
                }
                let genus = orientable_genus_by_blocks(&power_graph(g), &budgeted(1_000_000))?;
                Ok(genus.exact() != Some(2))
            })?
        }
        Rule::OneHexagon => {
            let items = with(&|g| hexagonal(g) && g.six_profile().count == 1);
            report.scan(items, |g| {
                let (o, n) = genus_by_blocks(&power_graph(g), &GenusOptions::default())?;
                Ok(o.exact() == Some(1) && n.exact() == Some(1))
            })?
        }
        Rule::ThreeHexagonsGenus => {
            let mut report = LemmaReport::new(rule, "graphs");
            let union = hexagon_union_graph(&catalog.get("[12,5]")?)?;
            let r = genus_exact(&union, &GenusOptions::default())?;
            report.expect(
                format!("three-hexagon union ({} vertices, {} edges): {r}", union.n(), union.m()),
                r.exact() == Some(2),
            );
            let apex = apex_join(&[complete(4), complete(4), complete(4)]);
            let r = orientable_genus_by_blocks(&apex, &GenusOptions::default().search_only())?;
            report.expect(format!("K1+3K4 by search: {r}"), r.exact() == Some(3));
            report
        }
        Rule::FourHexagonsGenus | Rule::FiveHexagonsGenus => {
            let wanted = |c: usize| {
                if rule == Rule::FourHexagonsGenus {
                    c == 4
                } else {
                    c >= 5
                }
            };
            let items = with(&|g| hexagonal(g) && wanted(g.six_profile().count));
            let mut report = report.scan(items, |g| {
                let verdict = classify_orientable(g)?;
                let genus = orientable_genus_by_blocks(&power_graph(g), &budgeted(50_000))?;
                Ok(
                    matches!(verdict.orientable, Some(OrientableVerdict::AtLeastThree { .. }))
                        && genus.upper.is_none_or(|u| u >= 3),
                )
            })?;
            report
                .notes
                .push("no engine embedding of genus <= 2 found within 50000 nodes per level".into());
            report
        }
        Rule::HexagonsCrosscap => {
            let mut report = LemmaReport::new(rule, "graphs");
            let g = catalog.get("[12,5]")?;
            let (delta, b1) = hexagon_pair_graphs(&g)?;
            let opts = GenusOptions::default();
            let genus = genus_exact(&delta, &opts)?;
            let crosscap = crosscap_exact(&delta, &opts)?;
            report.expect(format!("two hexagons over Z3: {genus}"), genus.exact() == Some(1));
            report.expect(format!("two hexagons over Z3: {crosscap}"), crosscap.exact() == Some(2));
            let b1r = crosscap_exact(&b1, &opts)?;
            report.expect(format!("same without involutions: {b1r}"), b1r.lower >= 2);
            let union = hexagon_union_graph(&g)?;
            let r = crosscap_exact(&union, &opts)?;
            report.expect(format!("three-hexagon union: {r}"), r.exact() == Some(3));
            let (_, c) = compose_values(&[(1, 2), (1, 1)]);
            report.expect(format!("blocks (two hexagons, K5) compose to crosscap {c}"), c == 3);
            report
        }
        Rule::BlockComposition => {
            let mut report = LemmaReport::new(rule, "graphs");
            let k = |n| (kn_genus(n), kn_crosscap(n));
            report.expect("K1+3K4 genus 3", compose_values(&[k(5); 3]).0 == 3);
            report.expect("K1+(K7 u K4) genus 3", compose_values(&[k(8), k(5)]).0 == 3);
            report.expect("K1+8K6 genus 8", compose_values(&[k(7); 8]).0 == 8);
            report.expect("three K5 blocks crosscap 3", compose_values(&[k(5); 3]).1 == 3);
            // Whole-graph search on a small instance, without splitting into blocks.
            let apex = apex_join(&[complete(4), complete(4)]);
            let search = GenusOptions::default().search_only();
            let direct = (genus_exact(&apex, &search)?, crosscap_exact(&apex, &search)?);
            report.expect(
                format!("K1+2K4 searched whole: {} / {}", direct.0, direct.1),
                (direct.0.exact(), direct.1.exact()) == (Some(2), Some(2)) && compose_values(&[k(5); 2]) == (2, 2),
            );
            report
        }
        Rule::CompleteGraphGenus => {
            let mut report = LemmaReport::new(rule, "graphs");
            let search = GenusOptions::default().search_only();
            for n in 3..=7 {
                let r = genus_exact(&complete(n), &search)?;
                report.expect(format!("K{n}: {r}"), r.exact() == Some(kn_genus(n)));
            }
            for n in 3..=6 {
                let r = crosscap_exact(&complete(n), &search)?;
                report.expect(format!("K{n}: {r}"), r.exact() == Some(kn_crosscap(n)));
            }
            for (a, b) in [(3, 3), (3, 4), (3, 5), (3, 6), (4, 4)] {
                let r = genus_exact(&complete_bipartite(a, b), &search)?;
                report.expect(format!("K{a},{b}: {r}"), r.exact() == Some(kmn_genus(a, b)));
            }
            for (a, b) in [(3, 3), (3, 5)] {
                let r = crosscap_exact(&complete_bipartite(a, b), &search)?;
                report.expect(format!("K{a},{b}: {r}"), r.exact() == Some(kmn_crosscap(a, b)));
            }
            report
        }
        Rule::InvolutionParity => {
            let items = with(&|g| g.order() % 2 == 0);
            report.scan(items, |g| Ok(g.count_involutions() % 2 == 1))?
        }
        Rule::PrimeSubgroupCongruence => report.scan(&all, |g| {
            for p in (2..=g.order()).filter(|&p| is_prime(p) && g.order() % p == 0) {
                if g.count_subgroups_of_prime_order(p)? % p != 1 {
                    return Ok(false);
                }
            }
            Ok(true)
        })?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_hexagon_sweep_message() {
        let r = verify_lemma("no-two-hexagons").unwrap();
        assert_eq!(r.to_string(), "PASS: 0 witnesses in 24 groups scanned");
    }

    #[test]
    fn unknown_rule() {
        assert!(matches!(verify_lemma("L3.1"), Err(crate::error::Error::UnknownRule(_))));
    }
}
