//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach stdout; exits non-zero if any fails.
//!
//! Values pinned here: closed-form genus/crosscap formulas for complete and
//! complete bipartite graphs, the published genus-two and three-hexagon
//! group lists with their element orders, and the quoted values for the
//! two-hexagon union (genus 1, crosscap 2) and the block compositions.
//! All comparisons are exact integer or set equality.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use powergenus::catalog::{Catalog, TABLE1_LABELS, TABLE2_LABELS, TABLE2_SPECTRA};
use powergenus::classifier::{classify_nonorientable, classify_orientable, verify_lemma, OrientableVerdict};
use powergenus::cli::table2_groups;
use powergenus::genus::{
    blocks, compose_values, crosscap_exact, euler_lower_bound, genus_by_blocks, genus_exact, is_planar, kmn_crosscap,
    kmn_genus, kn_crosscap, kn_genus, Budget, GenusOptions, LevelOutcome, Surface,
};
use powergenus::graph::{
    apex_join, complete, complete_bipartite, disjoint_union, hexagon_pair_graphs, hexagon_union_graph, power_graph,
};
use powergenus::{FiniteGroup, Result};

/// Per-instance wall-clock limit for the formula-versus-search checks.
const INSTANCE_LIMIT: Duration = Duration::from_secs(600);
/// Extended budget for the three-hexagon union.
const STRETCH_LIMIT: Duration = Duration::from_secs(2 * 60 * 60);

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Result<Outcome> + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn criterion_1() -> Result<Outcome> {
    let search = GenusOptions::default().search_only().max_time(INSTANCE_LIMIT);
    let mut bad = Vec::new();
    let mut slowest = Duration::ZERO;
    let mut check = |name: String, run: &dyn Fn() -> Result<Option<usize>>, want: usize| -> Result<()> {
        let t = Instant::now();
        let got = run()?;
        let dt = t.elapsed();
        slowest = slowest.max(dt);
        if got != Some(want) || dt > INSTANCE_LIMIT {
            bad.push(format!("{name}: {got:?} vs {want} in {dt:.1?}"));
        }
        Ok(())
    };
    for n in 3..=7 {
        check(
            format!("genus K{n}"),
            &|| Ok(genus_exact(&complete(n), &search)?.exact()),
            kn_genus(n),
        )?;
    }
    for (m, n) in [(3, 3), (3, 4), (3, 5), (3, 6), (4, 4)] {
        let g = complete_bipartite(m, n);
        check(
            format!("genus K{m},{n}"),
            &|| Ok(genus_exact(&g, &search)?.exact()),
            kmn_genus(m, n),
        )?;
    }
    for n in 3..=6 {
        check(
            format!("crosscap K{n}"),
            &|| Ok(crosscap_exact(&complete(n), &search)?.exact()),
            kn_crosscap(n),
        )?;
    }
    for (m, n) in [(3, 3), (3, 5)] {
        let g = complete_bipartite(m, n);
        check(
            format!("crosscap K{m},{n}"),
            &|| Ok(crosscap_exact(&g, &search)?.exact()),
            kmn_crosscap(m, n),
        )?;
    }
    Ok(outcome(
        bad.is_empty(),
        if bad.is_empty() {
            format!("17 instances agree, slowest {slowest:.1?}")
        } else {
            bad.join("; ")
        },
    ))
}

fn criterion_2() -> Result<Outcome> {
    let opts = GenusOptions::default();
    let z2z6 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2)?, &FiniteGroup::cyclic(6)?);
    let (delta, b1) = hexagon_pair_graphs(&z2z6)?;
    let k36 = genus_exact(&complete_bipartite(3, 6), &opts)?.exact();
    let k38 = kmn_genus(3, 8);
    let dg = genus_exact(&delta, &opts)?.exact();
    let dc = crosscap_exact(&delta, &opts)?.exact();
    let b1c = crosscap_exact(&b1, &opts)?.lower;
    let pass = k36 == Some(1) && k38 == 2 && dg == Some(1) && dc == Some(2) && b1c >= 2;
    Ok(outcome(
        pass,
        format!(
            "genus K3,6 {k36:?}, genus K3,8 {k38}, two-hexagon union ({} vertices) genus {dg:?} crosscap {dc:?}, \
             B1 crosscap >= {b1c}",
            delta.n()
        ),
    ))
}

fn criterion_3() -> Result<Outcome> {
    let k = |n: usize| (kn_genus(n), kn_crosscap(n));
    let formula = [
        compose_values(&[k(5); 3]).0,
        compose_values(&[k(8), k(5)]).0,
        compose_values(&[k(7); 8]).0,
        compose_values(&[k(5); 3]).1,
    ];
    // The same values through the engine on the actual graphs.
    let opts = GenusOptions::default();
    let k4 = complete(4);
    let (a, _) = genus_by_blocks(&apex_join(&[k4.clone(), k4.clone(), k4.clone()]), &opts)?;
    let (b, _) = genus_by_blocks(&apex_join(&[disjoint_union(&[complete(7), k4.clone()])]), &opts)?;
    let (c, _) = genus_by_blocks(&apex_join(&vec![complete(6); 8]), &opts)?;
    let (_, d) = genus_by_blocks(&apex_join(&[k4.clone(), k4.clone(), k4]), &opts)?;
    let engine = [a.exact(), b.exact(), c.exact(), d.exact()];
    let want = [3, 3, 8, 3];
    let pass = formula == want && engine == want.map(Some);
    Ok(outcome(
        pass,
        format!("formula {formula:?}, engine {engine:?}, expected {want:?}"),
    ))
}

fn criterion_4(catalog: &Catalog) -> Result<Outcome> {
    let mut two = BTreeSet::new();
    for (e, g) in catalog.groups() {
        if classify_orientable(&g)?
            .orientable
            .as_ref()
            .is_some_and(OrientableVerdict::is_two)
        {
            two.insert(e.label.clone());
        }
    }
    let want: BTreeSet<String> = TABLE1_LABELS.iter().map(|s| s.to_string()).collect();
    Ok(outcome(
        two == want,
        format!(
            "{} of {} catalog groups classified two: {two:?}",
            two.len(),
            catalog.len()
        ),
    ))
}

fn criterion_5(catalog: &Catalog) -> Result<Outcome> {
    let rows = table2_groups(catalog);
    let labels: Vec<&str> = rows.iter().map(|(l, _)| l.as_str()).collect();
    let spectra_ok = rows.iter().all(|(l, g)| {
        TABLE2_SPECTRA
            .iter()
            .any(|(tl, s)| tl == l && g.order_spectrum().orders() == s.to_vec())
    });
    let set: BTreeSet<&str> = labels.iter().copied().collect();
    let want: BTreeSet<&str> = TABLE2_LABELS.iter().copied().collect();
    Ok(outcome(
        set == want && labels.len() == 7 && spectra_ok,
        format!(
            "{} groups meet all three conditions {labels:?}, spectra match: {spectra_ok}",
            labels.len()
        ),
    ))
}

fn criterion_6(catalog: &Catalog) -> Result<Outcome> {
    let mut scanned = 0;
    let mut witnesses = Vec::new();
    for order in [12, 18, 36] {
        for e in catalog.enumerate_complete(order)? {
            scanned += 1;
            if catalog.get(&e.label)?.six_profile().count == 2 {
                witnesses.push(e.label.clone());
            }
        }
    }
    Ok(outcome(
        scanned == 24 && witnesses.is_empty(),
        format!(
            "{} with exactly two order-6 cyclic subgroups among {scanned} groups",
            witnesses.len()
        ),
    ))
}

enum BlockCrosscap {
    Exact(usize),
    ExcludedByBound,
    Incomplete,
}

/// Crosscap number of the power graph from its blocks. A block whose Euler
/// bound is already 3 settles "not 2" by monotonicity; otherwise every
/// block is searched within a small budget and the values are composed.
fn composed_crosscap(g: &FiniteGroup) -> Result<BlockCrosscap> {
    let parts = blocks(&power_graph(g))?;
    if parts
        .iter()
        .any(|b| euler_lower_bound(&b.graph, Surface::Nonorientable) >= 3)
    {
        return Ok(BlockCrosscap::ExcludedByBound);
    }
    let opts = GenusOptions::with_budget(Budget {
        max_nodes: 200_000,
        max_time: Duration::from_secs(20),
    });
    let mut values = Vec::new();
    for b in &parts {
        let (o, n) = (genus_exact(&b.graph, &opts)?, crosscap_exact(&b.graph, &opts)?);
        match (o.exact(), n.exact()) {
            (Some(o), Some(n)) => values.push((o, n)),
            _ if n.lower >= 3 => return Ok(BlockCrosscap::ExcludedByBound),
            _ => return Ok(BlockCrosscap::Incomplete),
        }
    }
    Ok(BlockCrosscap::Exact(compose_values(&values).1))
}

fn criterion_7(catalog: &Catalog) -> Result<Outcome> {
    let groups = catalog.groups();
    let mut exact_two_verdicts = Vec::new();
    let (mut exact, mut bounded, mut incomplete) = (0, 0, 0);
    let mut engine_two = Vec::new();
    for (e, g) in &groups {
        let v = classify_nonorientable(g)?;
        if v.nonorientable.as_ref().is_some_and(|n| n.is_exact_two()) {
            exact_two_verdicts.push(e.label.clone());
        }
        match composed_crosscap(g)? {
            BlockCrosscap::Exact(2) => {
                exact += 1;
                engine_two.push(e.label.clone());
            }
            BlockCrosscap::Exact(_) => exact += 1,
            BlockCrosscap::ExcludedByBound => bounded += 1,
            BlockCrosscap::Incomplete => incomplete += 1,
        }
    }
    Ok(outcome(
        exact_two_verdicts.is_empty() && engine_two.is_empty(),
        format!(
            "{} groups: no exact-two verdict ({exact_two_verdicts:?}); engine exact for {exact}, \
             excluded by Euler bound {bounded}, incomplete {incomplete}; engine value 2 for {engine_two:?}",
            groups.len()
        ),
    ))
}

fn criterion_8(catalog: &Catalog) -> Result<Outcome> {
    let mut notes = Vec::new();
    let mut pass = true;
    for id in ["involution-parity", "prime-subgroup-congruence", "planar-spectrum"] {
        let r = verify_lemma(id)?;
        pass &= r.passed();
        notes.push(format!("{id} {}/{}", if r.passed() { "ok" } else { "FAIL" }, r.scanned));
    }
    let mismatched: Vec<String> = catalog
        .groups()
        .iter()
        .filter(|(_, g)| is_planar(&power_graph(g)).is_planar() != g.order_spectrum().is_subset_of(&[1, 2, 3, 4]))
        .map(|(e, _)| e.label.clone())
        .collect();
    pass &= mismatched.is_empty();
    notes.push(format!(
        "planarity iff orders within {{1,2,3,4}}: {} mismatches",
        mismatched.len()
    ));
    Ok(outcome(pass, notes.join(", ")))
}

fn criterion_9() -> Result<Outcome> {
    let z2z6 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2)?, &FiniteGroup::cyclic(6)?);
    let union = hexagon_union_graph(&z2z6)?;
    let opts = GenusOptions::with_budget(Budget {
        max_nodes: u64::MAX,
        max_time: STRETCH_LIMIT,
    });
    let t = Instant::now();
    let r = genus_exact(&union, &opts)?;
    let level1 = r.levels.iter().find(|l| l.level == 1).map(|l| l.outcome);
    let shape = format!("{} vertices, {} edges", union.n(), union.m());
    if r.exact() == Some(2) && level1 == Some(LevelOutcome::Exhausted) {
        Ok(outcome(
            true,
            format!(
                "three-hexagon union ({shape}) genus exact 2, torus level exhausted in {:.1?}",
                t.elapsed()
            ),
        ))
    } else {
        // Degraded result: bounds with the upper certificate, lower bound
        // taken from the published argument rather than the search.
        Ok(outcome(
            false,
            format!(
                "three-hexagon union ({shape}): bounds [{}, {:?}], torus level {level1:?}; lower bound 2 is asserted by the \
                 published argument, not machine-exhausted",
                r.lower, r.upper
            ),
        ))
    }
}

fn main() {
    let catalog = Catalog::builtin();
    let criteria: Vec<Criterion> = vec![
        ("1 formula oracle vs search", Box::new(criterion_1)),
        ("2 subgraph targets", Box::new(criterion_2)),
        ("3 block composition", Box::new(criterion_3)),
        ("4 genus-two table", Box::new(|| criterion_4(catalog))),
        ("5 three-hexagon table", Box::new(|| criterion_5(catalog))),
        ("6 two-hexagon sweep", Box::new(|| criterion_6(catalog))),
        ("7 crosscap never two", Box::new(|| criterion_7(catalog))),
        ("8 structural invariants", Box::new(|| criterion_8(catalog))),
        ("9 three-hexagon union genus", Box::new(criterion_9)),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        let o = run().unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        failed += usize::from(!o.pass);
        println!(
            "{} criterion {name}: {} [{:.1?}]",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
