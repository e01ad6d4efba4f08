//! The exact search checked against brute force.

use std::collections::BTreeMap;

use powergenus::classifier::cyclic_clique_chain;
use powergenus::genus::{clique_number, genus_exact, trace_faces, GenusOptions, RotationSystem};
use powergenus::graph::{complete, power_graph, Graph};
use powergenus::FiniteGroup;

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Minimum genus over every rotation system, fixing the first neighbour of
/// each vertex (cyclic rotations of a vertex order give the same map).
fn brute_force_genus(g: &Graph) -> usize {
    let choices: Vec<Vec<Vec<usize>>> = (0..g.n())
        .map(|v| {
            let nbrs = g.neighbors(v);
            permutations(&nbrs[1..])
                .into_iter()
                .map(|mut p| {
                    p.insert(0, nbrs[0]);
                    p
                })
                .collect()
        })
        .collect();
    let mut best = usize::MAX;
    let mut idx = vec![0; g.n()];
    loop {
        let orders: Vec<Vec<usize>> = idx.iter().enumerate().map(|(v, &i)| choices[v][i].clone()).collect();
        let rot = RotationSystem::new(g, orders).unwrap();
        best = best.min(trace_faces(g, &rot).unwrap().genus().unwrap());
        let mut v = 0;
        loop {
            if v == g.n() {
                return best;
            }
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

#[test]
fn k5_over_all_rotations() {
    // 6^5 rotation systems.
    let g = complete(5);
    let want = brute_force_genus(&g);
    assert_eq!(want, 1);
    let got = genus_exact(&g, &GenusOptions::default().search_only()).unwrap();
    assert_eq!(got.exact(), Some(want));
}

#[test]
fn small_power_graphs_over_all_rotations() {
    for g in [
        FiniteGroup::cyclic(6).unwrap(),
        FiniteGroup::symmetric(3).unwrap(),
        FiniteGroup::dihedral(8).unwrap(),
    ] {
        let p = power_graph(&g);
        let got = genus_exact(&p, &GenusOptions::default().search_only()).unwrap();
        assert_eq!(got.exact(), Some(brute_force_genus(&p)));
    }
}

/// Frozen from `oracles/cyclic_cliques.py` (networkx clique enumeration on
/// the power graph built from subgroup containment).
#[test]
fn cyclic_clique_numbers() {
    let oracle: BTreeMap<String, usize> = serde_json::from_str(include_str!("data/cyclic_cliques.json")).unwrap();
    assert_eq!(oracle["12"], 9);
    for (n, want) in oracle {
        let n: usize = n.parse().unwrap();
        let g = power_graph(&FiniteGroup::cyclic(n).unwrap());
        assert_eq!(clique_number(&g), want, "Z{n}");
        assert_eq!(cyclic_clique_chain(n).1, want, "divisor chain for Z{n}");
    }
}
