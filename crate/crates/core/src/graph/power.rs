//! Power graphs: distinct elements are adjacent when one is a power of the other.

use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Names elements by order: `e` for the identity, `x1, x2, ...` for
/// involutions, `g*` for order 3, `h*` for order 4, `f*` for order 6 and
/// `o{k}_*` otherwise, numbered in index order.
pub fn element_labels(group: &FiniteGroup) -> Vec<String> {
    let mut counters: BTreeMap<usize, usize> = BTreeMap::new();
    (0..group.order())
        .map(|x| {
            let k = group.element_order(x);
            if k == 1 {
                return "e".to_string();
            }
            let c = counters.entry(k).or_insert(0);
            *c += 1;
            match k {
                2 => format!("x{c}"),
                3 => format!("g{c}"),
                4 => format!("h{c}"),
                6 => format!("f{c}"),
                _ => format!("o{k}_{c}"),
            }
        })
        .collect()
}

pub fn power_graph(group: &FiniteGroup) -> Graph {
    let mut edges = Vec::new();
    for x in group.elements() {
        for &y in group.cyclic_subgroup(x).members() {
            if y != x {
                edges.push((x, y));
            }
        }
    }
    Graph::from_edges(group.order(), edges)
        .expect("group elements are valid vertices")
        .with_labels(element_labels(group))
}

/// Power graph induced on the union of all cyclic subgroups of order 6.
pub fn hexagon_union_graph(group: &FiniteGroup) -> Result<Graph> {
    let hexagons = group.cyclic_subgroups_of_order(6);
    let union = hexagons
        .iter()
        .cloned()
        .reduce(|a, b| a.union(&b))
        .ok_or(Error::NoOrderSixSubgroup)?;
    power_graph(group).induced(union.members())
}

/// Power graph induced on the first two cyclic subgroups of order 6 that
/// meet in a subgroup of order 3, together with the same graph with the two
/// involutions of those subgroups removed.
pub fn hexagon_pair_graphs(group: &FiniteGroup) -> Result<(Graph, Graph)> {
    let hexagons = group.cyclic_subgroups_of_order(6);
    for (i, a) in hexagons.iter().enumerate() {
        for b in &hexagons[i + 1..] {
            if a.intersection(b).len() == 3 {
                let union = a.union(b);
                let full = power_graph(group).induced(union.members())?;
                let keep: Vec<usize> = union
                    .members()
                    .iter()
                    .copied()
                    .filter(|&x| group.element_order(x) != 2)
                    .collect();
                let reduced = power_graph(group).induced(&keep)?;
                return Ok((full, reduced));
            }
        }
    }
    Err(Error::NoOrderSixSubgroup)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, complete, star};

    #[test]
    fn small_power_graphs() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        assert_eq!(power_graph(&z8), complete(8).with_labels(element_labels(&z8)));
        assert_eq!(power_graph(&FiniteGroup::cyclic(6).unwrap()).m(), 13);
        let v4 = FiniteGroup::dihedral(4).unwrap();
        assert!(are_isomorphic(&power_graph(&v4), &star(3)));
    }

    #[test]
    fn hexagon_pairs() {
        let z2z6 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(6).unwrap());
        let (full, reduced) = hexagon_pair_graphs(&z2z6).unwrap();
        assert_eq!((full.n(), full.m()), (9, 23));
        assert_eq!((reduced.n(), reduced.m()), (7, 17));
        assert!(hexagon_pair_graphs(&FiniteGroup::cyclic(6).unwrap()).is_err());
    }

    #[test]
    fn labels_follow_orders() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let labels = element_labels(&z6);
        assert_eq!(labels[0], "e");
        assert_eq!(labels.iter().filter(|l| l.starts_with('f')).count(), 2);
        assert_eq!(labels.iter().filter(|l| l.starts_with('g')).count(), 2);
        assert_eq!(labels.iter().filter(|l| l.starts_with('x')).count(), 1);
    }

    #[test]
    fn hexagon_unions() {
        let z12 = FiniteGroup::cyclic(12).unwrap();
        let g = hexagon_union_graph(&z12).unwrap();
        assert_eq!((g.n(), g.m()), (6, 13));
        assert!(matches!(
            hexagon_union_graph(&FiniteGroup::symmetric(3).unwrap()),
            Err(Error::NoOrderSixSubgroup)
        ));
    }
}
