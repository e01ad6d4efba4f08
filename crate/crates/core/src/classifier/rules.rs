//! The rule registry. Each rule gathers the data it needs from a group into a
//! JSON value, and a pure function of that value produces the conclusion.
//! Replaying a step re-gathers and re-concludes, so both halves are checked.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::genus::{
    compose_values, crosscap_exact, genus_by_blocks, kn_crosscap, kn_genus, orientable_genus_by_blocks, GenusOptions,
    GenusResult, Surface,
};
use crate::graph::{power_graph, Graph};
use crate::group::{euler_phi, is_isomorphic, FiniteGroup, OrderSpectrum};

use super::reduction_subgroups;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    PlanarSpectrum,
    ReductionSet,
    NoTwoHexagons,
    HexagonIntersectionSpread,
    ThreeHexagonGroups,
    FourHexagonImpossible,
    CyclicGenusTwo,
    TwoGroupGenusTwo,
    OrderEightBlocks,
    OrderEightExcludesThree,
    SylowFiveSeven,
    OneHexagon,
    ThreeHexagonsGenus,
    FourHexagonsGenus,
    FiveHexagonsGenus,
    CyclicCrosscap,
    HexagonsCrosscap,
    BlockComposition,
    CompleteGraphGenus,
    InvolutionParity,
    PrimeSubgroupCongruence,
}

impl Rule {
    pub const ALL: [Rule; 21] = [
        Rule::PlanarSpectrum,
        Rule::ReductionSet,
        Rule::NoTwoHexagons,
        Rule::HexagonIntersectionSpread,
        Rule::ThreeHexagonGroups,
        Rule::FourHexagonImpossible,
        Rule::CyclicGenusTwo,
        Rule::TwoGroupGenusTwo,
        Rule::OrderEightBlocks,
        Rule::OrderEightExcludesThree,
        Rule::SylowFiveSeven,
        Rule::OneHexagon,
        Rule::ThreeHexagonsGenus,
        Rule::FourHexagonsGenus,
        Rule::FiveHexagonsGenus,
        Rule::CyclicCrosscap,
        Rule::HexagonsCrosscap,
        Rule::BlockComposition,
        Rule::CompleteGraphGenus,
        Rule::InvolutionParity,
        Rule::PrimeSubgroupCongruence,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::PlanarSpectrum => "planar-spectrum",
            Rule::ReductionSet => "reduction-set",
            Rule::NoTwoHexagons => "no-two-hexagons",
            Rule::HexagonIntersectionSpread => "hexagon-intersection-spread",
            Rule::ThreeHexagonGroups => "three-hexagon-groups",
            Rule::FourHexagonImpossible => "four-hexagon-impossible",
            Rule::CyclicGenusTwo => "cyclic-genus-two",
            Rule::TwoGroupGenusTwo => "two-group-genus-two",
            Rule::OrderEightBlocks => "order-eight-blocks",
            Rule::OrderEightExcludesThree => "order-eight-excludes-three",
            Rule::SylowFiveSeven => "sylow-five-seven",
            Rule::OneHexagon => "one-hexagon",
            Rule::ThreeHexagonsGenus => "three-hexagons-genus",
            Rule::FourHexagonsGenus => "four-hexagons-genus",
            Rule::FiveHexagonsGenus => "five-hexagons-genus",
            Rule::CyclicCrosscap => "cyclic-crosscap",
            Rule::HexagonsCrosscap => "hexagons-crosscap",
            Rule::BlockComposition => "block-composition",
            Rule::CompleteGraphGenus => "complete-graph-genus",
            Rule::InvolutionParity => "involution-parity",
            Rule::PrimeSubgroupCongruence => "prime-subgroup-congruence",
        }
    }

    /// One-line statement of what the rule asserts.
    pub fn statement(self) -> &'static str {
        match self {
            Rule::PlanarSpectrum => "the power graph is planar iff every element order lies in {1,2,3,4}",
            Rule::ReductionSet => {
                "if S is a union of subgroups and every element outside S has order 2, 3 or 4, \
                 the power graph has the same genus and crosscap number as its restriction to S"
            }
            Rule::NoTwoHexagons => "no group has exactly two cyclic subgroups of order 6",
            Rule::HexagonIntersectionSpread => {
                "with exactly three cyclic subgroups of order 6 and orders in {1,2,3,4,6}, \
                 if two of them meet in order 3 then all pairs do"
            }
            Rule::ThreeHexagonGroups => {
                "orders in {1,2,3,4,6}, three cyclic subgroups of order 6, two meeting in order 3: \
                 the group is one of the seven tabulated groups"
            }
            Rule::FourHexagonImpossible => {
                "with four cyclic subgroups of order 6 they never split into two pairs that each meet in order 3"
            }
            Rule::CyclicGenusTwo => "the power graph of Z_n has genus 2 iff n = 8, and genus at least 3 for n >= 9",
            Rule::TwoGroupGenusTwo => "a 2-group has power graph genus 2 iff it is Z8, D16, Q16 or QD16",
            Rule::OrderEightBlocks => {
                "an element of order 8 together with a second cyclic subgroup of order 8 \
                 or an element of order 6 forces genus at least 3"
            }
            Rule::OrderEightExcludesThree => {
                "no group of order 24 has element orders {1,2,3,4,8}, so order 8 and order 3 \
                 together rule out genus 2"
            }
            Rule::SylowFiveSeven => "elements of order 5 or 7 rule out genus 2 and crosscap number 2",
            Rule::OneHexagon => "a unique cyclic subgroup of order 6 gives genus 1 and crosscap number 1",
            Rule::ThreeHexagonsGenus => {
                "three cyclic subgroups of order 6 give genus 2 when all pairs meet in order 3, \
                 and at least 3 when none do"
            }
            Rule::FourHexagonsGenus => {
                "four cyclic subgroups of order 6 give genus 2 only if they pair up with both pairs meeting in order 3"
            }
            Rule::FiveHexagonsGenus => "five or more cyclic subgroups of order 6 give genus at least 3",
            Rule::CyclicCrosscap => "an element of order n >= 7 gives crosscap number at least 3",
            Rule::HexagonsCrosscap => "three or more cyclic subgroups of order 6 give crosscap number above 2",
            Rule::BlockComposition => "genus is additive over blocks; crosscap number composes by the block formula",
            Rule::CompleteGraphGenus => "closed formulas for complete and complete bipartite graphs",
            Rule::InvolutionParity => "a group of even order has an odd number of involutions",
            Rule::PrimeSubgroupCongruence => "the number of subgroups of prime order p is 1 mod p",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rule::ALL
            .into_iter()
            .find(|r| r.id() == s)
            .ok_or_else(|| Error::UnknownRule(s.to_string()))
    }
}

/// What a rule established, in a form the decision tree can branch on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Finding {
    Branch(bool),
    Bounds { lower: usize, upper: Option<usize> },
    Label(String),
}

impl Finding {
    fn at_least(v: usize) -> Self {
        Finding::Bounds { lower: v, upper: None }
    }
}

fn contradiction(rule: Rule, what: String) -> Error {
    Error::InternalContradiction(format!("{rule}: {what}"))
}

/// Longest chain `1 | d1 | ... | n` weighted by Euler's phi. Its elements form
/// a clique in the power graph of `Z_n`, which is known to be a maximum one.
pub fn cyclic_clique_chain(n: usize) -> (Vec<usize>, usize) {
    let divisors: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut best: Vec<(usize, Option<usize>)> = Vec::with_capacity(divisors.len());
    for (i, &d) in divisors.iter().enumerate() {
        let prev = (0..i)
            .filter(|&j| d % divisors[j] == 0)
            .max_by_key(|&j| (best[j].0, std::cmp::Reverse(j)));
        let weight = euler_phi(d) + prev.map_or(0, |j| best[j].0);
        best.push((weight, prev));
    }
    let mut chain = Vec::new();
    let mut at = Some(divisors.len() - 1);
    while let Some(i) = at {
        chain.push(divisors[i]);
        at = best[i].1;
    }
    chain.reverse();
    (chain, best[divisors.len() - 1].0)
}

fn spectrum_of(value: &Value) -> Result<Vec<usize>> {
    usizes(&value["spectrum"])
}

fn usizes(value: &Value) -> Result<Vec<usize>> {
    value
        .as_array()
        .ok_or_else(|| Error::InvalidParameter(format!("expected an array, got {value}")))?
        .iter()
        .map(field_usize)
        .collect()
}

fn field_usize(value: &Value) -> Result<usize> {
    value
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| Error::InvalidParameter(format!("expected an integer, got {value}")))
}

fn get(value: &Value, key: &str) -> Result<usize> {
    field_usize(&value[key])
}

fn subset(values: &[usize], allowed: &[usize]) -> bool {
    values.iter().all(|v| allowed.contains(v))
}

fn set_string(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn surface_word(surface: Surface) -> &'static str {
    match surface {
        Surface::Orientable => "genus",
        Surface::Nonorientable => "crosscap number",
    }
}

/// Whether the pairwise intersection list of four subgroups (pairs in
/// lexicographic order) splits into two disjoint pairs of order 3.
pub fn paired_pattern(pairwise: &[usize]) -> bool {
    // (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
    pairwise.len() == 6
        && ((pairwise[0] == 3 && pairwise[5] == 3)
            || (pairwise[1] == 3 && pairwise[4] == 3)
            || (pairwise[2] == 3 && pairwise[3] == 3))
}

fn table_match(g: &FiniteGroup, tag: &str) -> Result<Value> {
    let cat = Catalog::builtin();
    for entry in cat.with_tag(tag).filter(|e| e.expected_order == g.order()) {
        if is_isomorphic(g, &cat.get(&entry.label)?)? {
            return Ok(json!(entry.label));
        }
    }
    Ok(Value::Null)
}

/// Collects the inputs of `rule` from `g`. Rules without group data
/// (block composition) receive their inputs from the caller instead.
pub(crate) fn gather(rule: Rule, g: &FiniteGroup, surface: Surface) -> Result<Value> {
    let spectrum = g.order_spectrum();
    let six = g.six_profile();
    Ok(match rule {
        Rule::PlanarSpectrum => json!({ "spectrum": spectrum.orders() }),
        Rule::CyclicGenusTwo | Rule::CyclicCrosscap => {
            let n = spectrum.max_order();
            let (chain, clique) = cyclic_clique_chain(n);
            json!({ "max_order": n, "chain": chain, "clique": clique })
        }
        Rule::SylowFiveSeven => json!({
            "spectrum": spectrum.orders(),
            "sylow5": g.count_subgroups_of_prime_order(5)?,
            "sylow7": g.count_subgroups_of_prime_order(7)?,
        }),
        Rule::OrderEightBlocks => json!({
            "octagons": g.cyclic_subgroups_of_order(8).len(),
            "has_six": spectrum.contains(6),
        }),
        Rule::OrderEightExcludesThree => json!({ "has_three": spectrum.contains(3) }),
        Rule::TwoGroupGenusTwo => json!({
            "order": g.order(),
            "spectrum": spectrum.orders(),
            "octagons": g.cyclic_subgroups_of_order(8).len(),
            "table1_match": table_match(g, "table1")?,
        }),
        Rule::ReductionSet => {
            let subgroups = reduction_subgroups(g);
            let set = subgroups
                .iter()
                .fold(g.cyclic_subgroup(g.identity()), |acc, h| acc.union(h));
            let outside = OrderSpectrum::of_subset(g, &set.complement());
            let reduced = power_graph(g).induced(set.members())?;
            let orders: Vec<usize> = subgroups.iter().map(|h| h.len()).collect();
            json!({
                "subgroup_orders": orders,
                "size": set.len(),
                "outside_orders": outside.orders(),
                "graph": { "n": reduced.n(), "edges": reduced.edges() },
            })
        }
        Rule::NoTwoHexagons | Rule::OneHexagon | Rule::FiveHexagonsGenus | Rule::FourHexagonsGenus => {
            json!({ "hexagons": six.count })
        }
        Rule::HexagonIntersectionSpread
        | Rule::ThreeHexagonsGenus
        | Rule::FourHexagonImpossible
        | Rule::HexagonsCrosscap => json!({
            "hexagons": six.count,
            "pairwise": six.pairwise_intersections,
        }),
        Rule::ThreeHexagonGroups => json!({
            "spectrum": spectrum.orders(),
            "hexagons": six.count,
            "pairwise": six.pairwise_intersections,
            "table2_match": table_match(g, "table2")?,
        }),
        Rule::BlockComposition | Rule::CompleteGraphGenus | Rule::InvolutionParity | Rule::PrimeSubgroupCongruence => {
            let _ = surface;
            return Err(Error::InvalidParameter(format!("{rule} takes no group inputs")));
        }
    })
}

/// Block list for the composition rule, e.g. `[["K", 8], ["K", 5]]`.
pub(crate) fn blocks_input(complete: &[usize]) -> Value {
    json!({ "blocks": complete.iter().map(|&n| json!(["K", n])).collect::<Vec<_>>() })
}

fn composed_value(inputs: &Value, surface: Surface) -> Result<(usize, String)> {
    let blocks = inputs["blocks"]
        .as_array()
        .ok_or_else(|| Error::InvalidParameter("missing blocks".into()))?;
    let mut values = Vec::new();
    let mut names = Vec::new();
    for b in blocks {
        let n = field_usize(&b[1])?;
        values.push((kn_genus(n), kn_crosscap(n)));
        names.push(format!("K{n}"));
    }
    let (genus, crosscap) = compose_values(&values);
    let v = match surface {
        Surface::Orientable => genus,
        Surface::Nonorientable => crosscap,
    };
    Ok((v, names.join(",")))
}

fn reduced_graph(inputs: &Value) -> Result<Graph> {
    let graph = &inputs["graph"];
    let n = get(graph, "n")?;
    let edges = graph["edges"]
        .as_array()
        .ok_or_else(|| Error::InvalidParameter("missing edges".into()))?
        .iter()
        .map(|e| Ok((field_usize(&e[0])?, field_usize(&e[1])?)))
        .collect::<Result<Vec<_>>>()?;
    Graph::from_edges(n, edges)
}

/// Engine value of the reduced graph for one surface.
pub(crate) fn reduced_value(g: &Graph, surface: Surface, engine: &GenusOptions) -> Result<GenusResult> {
    match surface {
        Surface::Orientable => orientable_genus_by_blocks(g, engine),
        Surface::Nonorientable if g.is_connected() => Ok(genus_by_blocks(g, engine)?.1),
        Surface::Nonorientable => crosscap_exact(g, engine),
    }
}

/// The conclusion of `rule` on `inputs`. Depends on nothing else, apart from
/// the engine options used when the reduction rule searches its subgraph.
pub(crate) fn conclude(
    rule: Rule,
    surface: Surface,
    inputs: &Value,
    engine: &GenusOptions,
) -> Result<(String, Finding)> {
    let word = surface_word(surface);
    Ok(match rule {
        Rule::PlanarSpectrum => {
            let spectrum = spectrum_of(inputs)?;
            let planar = subset(&spectrum, &[1, 2, 3, 4]);
            let text = if planar {
                format!("element orders {} lie in {{1,2,3,4}}: planar", set_string(&spectrum))
            } else {
                format!("element orders {} leave {{1,2,3,4}}: not planar", set_string(&spectrum))
            };
            (text, Finding::Branch(planar))
        }
        Rule::CyclicGenusTwo | Rule::CyclicCrosscap => {
            let n = get(inputs, "max_order")?;
            let chain = usizes(&inputs["chain"])?;
            let clique = get(inputs, "clique")?;
            let valid = chain.first() == Some(&1)
                && chain.last() == Some(&n)
                && chain.windows(2).all(|w| w[1] % w[0] == 0 && w[1] > w[0])
                && chain.iter().map(|&d| euler_phi(d)).sum::<usize>() == clique;
            if !valid {
                return Err(contradiction(
                    rule,
                    format!("chain {chain:?} is not a weighted divisor chain of {n}"),
                ));
            }
            let bound = match surface {
                Surface::Orientable => kn_genus(clique),
                Surface::Nonorientable => kn_crosscap(clique),
            };
            let chain: Vec<String> = chain.iter().map(|d| d.to_string()).collect();
            (
                format!(
                    "cyclic subgroup of order {n} holds a clique of size {clique} (divisor chain {}): {word} >= {bound}",
                    chain.join("|")
                ),
                Finding::at_least(bound),
            )
        }
        Rule::SylowFiveSeven => {
            let spectrum = spectrum_of(inputs)?;
            let (p5, p7) = (get(inputs, "sylow5")?, get(inputs, "sylow7")?);
            if (p5 > 0 && p5 % 5 != 1) || (p7 > 0 && p7 % 7 != 1) {
                return Err(contradiction(
                    rule,
                    format!("{p5} subgroups of order 5, {p7} of order 7"),
                ));
            }
            let mut blocks = vec![5; p5];
            blocks.extend(std::iter::repeat_n(7, p7));
            let (bound, names) = composed_value(&blocks_input(&blocks), surface)?;
            match surface {
                Surface::Orientable => (
                    format!(
                        "{p5} subgroups of order 5 and {p7} of order 7 give blocks {names} at the identity: \
                         genus >= {bound}, and not 2"
                    ),
                    Finding::at_least(bound),
                ),
                Surface::Nonorientable if p5 == 1 && p7 == 0 => {
                    if spectrum.contains(&6) {
                        return Err(contradiction(
                            rule,
                            "normal subgroup of order 5 next to an element of order 6 without order 15".into(),
                        ));
                    }
                    (
                        "unique subgroup of order 5 is normal and orders lie in {1,2,3,4,5}: reduce to it".to_string(),
                        Finding::Branch(true),
                    )
                }
                Surface::Nonorientable => (
                    format!(
                        "{p5} subgroups of order 5 give blocks {names} at the identity: crosscap number >= {bound}"
                    ),
                    Finding::at_least(bound),
                ),
            }
        }
        Rule::OrderEightBlocks => {
            let octagons = get(inputs, "octagons")?;
            let has_six = inputs["has_six"].as_bool().unwrap_or(false);
            if octagons >= 2 {
                (
                    format!("{octagons} cyclic subgroups of order 8 contain K1+(K7 u K4), blocks K8,K5: genus >= 3"),
                    Finding::at_least(3),
                )
            } else if has_six {
                (
                    "order 8 and order 6 subgroups meet in at most an involution: blocks K8,K5 at the identity, genus >= 3"
                        .to_string(),
                    Finding::at_least(3),
                )
            } else {
                (
                    "unique cyclic subgroup of order 8 and no element of order 6".to_string(),
                    Finding::Branch(false),
                )
            }
        }
        Rule::OrderEightExcludesThree => {
            if inputs["has_three"].as_bool().unwrap_or(false) {
                (
                    "orders 8 and 3 together would generate an order-24 group with orders {1,2,3,4,8}; \
                     none exists (registry fact, checked over the order-24 catalog only): genus >= 3"
                        .to_string(),
                    Finding::at_least(3),
                )
            } else {
                (
                    "no element of order 3: the group is a 2-group".to_string(),
                    Finding::Branch(false),
                )
            }
        }
        Rule::TwoGroupGenusTwo => {
            let order = get(inputs, "order")?;
            let spectrum = spectrum_of(inputs)?;
            let octagons = get(inputs, "octagons")?;
            if !order.is_power_of_two() || octagons != 1 || !subset(&spectrum, &[1, 2, 4, 8]) {
                return Err(contradiction(
                    rule,
                    format!("expected a 2-group with one Z8, got order {order}, {octagons} Z8, orders {spectrum:?}"),
                ));
            }
            match inputs["table1_match"].as_str() {
                Some(label) => (
                    format!(
                        "2-group of order {order} with a unique Z8 and orders {}: matches {label}",
                        set_string(&spectrum)
                    ),
                    Finding::Label(label.to_string()),
                ),
                None => {
                    return Err(contradiction(
                        rule,
                        format!("2-group of order {order} with a unique Z8 matches no tabulated group"),
                    ))
                }
            }
        }
        Rule::ReductionSet => {
            let orders = usizes(&inputs["subgroup_orders"])?;
            let outside = usizes(&inputs["outside_orders"])?;
            if !subset(&outside, &[2, 3, 4]) {
                return Err(contradiction(rule, format!("orders outside S are {outside:?}")));
            }
            let graph = reduced_graph(inputs)?;
            let result = reduced_value(&graph, surface, engine)?;
            let size = get(inputs, "size")?;
            let value = match result.exact() {
                Some(v) => format!("{word} = {v}"),
                None => match result.upper {
                    Some(u) => format!("{word} in [{}, {u}]", result.lower),
                    None => format!("{word} >= {}", result.lower),
                },
            };
            (
                format!(
                    "S = union of {} cyclic subgroups of orders {}, |S| = {size}; orders outside S {}; \
                     restriction to S ({} vertices, {} edges) has {value}",
                    orders.len(),
                    set_string(&orders),
                    set_string(&outside),
                    graph.n(),
                    graph.m(),
                ),
                Finding::Bounds {
                    lower: result.lower,
                    upper: result.upper,
                },
            )
        }
        Rule::NoTwoHexagons => {
            let count = get(inputs, "hexagons")?;
            if count == 2 {
                return Err(contradiction(rule, "exactly two cyclic subgroups of order 6".into()));
            }
            (
                format!("{count} cyclic subgroups of order 6 (not exactly two)"),
                Finding::Branch(true),
            )
        }
        Rule::OneHexagon => {
            let count = get(inputs, "hexagons")?;
            (
                format!("{count} cyclic subgroup of order 6: reduce to it"),
                Finding::Branch(count == 1),
            )
        }
        Rule::HexagonIntersectionSpread => {
            let pairwise = usizes(&inputs["pairwise"])?;
            let any = pairwise.contains(&3);
            let all = pairwise.iter().all(|&k| k == 3);
            if any && !all {
                return Err(contradiction(rule, format!("pairwise intersections {pairwise:?}")));
            }
            (
                format!(
                    "pairwise intersections {}: {}",
                    set_string(&pairwise),
                    if all { "all of order 3" } else { "none of order 3" }
                ),
                Finding::Branch(all),
            )
        }
        Rule::ThreeHexagonGroups => {
            let spectrum = spectrum_of(inputs)?;
            let count = get(inputs, "hexagons")?;
            let pairwise = usizes(&inputs["pairwise"])?;
            let holds = subset(&spectrum, &[1, 2, 3, 4, 6]) && count == 3 && pairwise.contains(&3);
            if !holds {
                return Err(contradiction(rule, "conditions do not hold".into()));
            }
            match inputs["table2_match"].as_str() {
                Some(label) => (
                    format!(
                        "orders {}, three hexagons meeting in order 3: matches {label}",
                        set_string(&spectrum)
                    ),
                    Finding::Label(label.to_string()),
                ),
                None => {
                    return Err(contradiction(
                        rule,
                        "conditions hold but no tabulated group matches".into(),
                    ))
                }
            }
        }
        Rule::ThreeHexagonsGenus => {
            let pairwise = usizes(&inputs["pairwise"])?;
            if pairwise.iter().all(|&k| k == 3) {
                (
                    "all three pairs meet in order 3: reduce to the union of the three subgroups".to_string(),
                    Finding::Branch(true),
                )
            } else {
                let (bound, _) = composed_value(&blocks_input(&[5, 5, 5]), Surface::Orientable)?;
                (
                    format!("no pair meets in order 3: K1+3K4 is a subgraph, genus >= {bound}"),
                    Finding::at_least(bound),
                )
            }
        }
        Rule::FourHexagonImpossible => {
            let pairwise = usizes(&inputs["pairwise"])?;
            if paired_pattern(&pairwise) {
                return Err(contradiction(rule, format!("paired pattern in {pairwise:?}")));
            }
            (
                format!(
                    "pairwise intersections {}: no split into two order-3 pairs",
                    set_string(&pairwise)
                ),
                Finding::Branch(false),
            )
        }
        Rule::FourHexagonsGenus => (
            "four cyclic subgroups of order 6 without the paired pattern: not genus 2; \
             three of them already force genus >= 2, so genus >= 3"
                .to_string(),
            Finding::at_least(3),
        ),
        Rule::FiveHexagonsGenus => {
            let count = get(inputs, "hexagons")?;
            (
                format!("{count} cyclic subgroups of order 6: genus >= 3"),
                Finding::at_least(3),
            )
        }
        Rule::HexagonsCrosscap => {
            let count = get(inputs, "hexagons")?;
            (
                format!("{count} cyclic subgroups of order 6: crosscap number >= 3"),
                Finding::at_least(3),
            )
        }
        Rule::BlockComposition => {
            let (bound, names) = composed_value(inputs, surface)?;
            (
                format!("subgraph with blocks {names} at one cut vertex: {word} >= {bound}"),
                Finding::at_least(bound),
            )
        }
        Rule::CompleteGraphGenus | Rule::InvolutionParity | Rule::PrimeSubgroupCongruence => {
            return Err(Error::InvalidParameter(format!(
                "{rule} is a registry check, not a trail step"
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for r in Rule::ALL {
            assert_eq!(r.id().parse::<Rule>().unwrap(), r);
        }
        assert!(matches!("L3.1".parse::<Rule>(), Err(Error::UnknownRule(_))));
    }

    #[test]
    fn divisor_chains() {
        assert_eq!(cyclic_clique_chain(8), (vec![1, 2, 4, 8], 8));
        assert_eq!(cyclic_clique_chain(12), (vec![1, 3, 6, 12], 9));
        assert_eq!(cyclic_clique_chain(7).1, 7);
        assert_eq!(cyclic_clique_chain(1), (vec![1], 1));
    }

    #[test]
    fn paired_patterns() {
        assert!(paired_pattern(&[3, 1, 1, 1, 1, 3]));
        assert!(paired_pattern(&[1, 1, 3, 3, 1, 1]));
        assert!(!paired_pattern(&[3, 3, 1, 1, 1, 1]));
    }
}
