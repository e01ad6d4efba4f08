//! Genus-preserving reductions: deleting leaves and smoothing degree-two
//! vertices whose neighbours are not adjacent.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReductionStep {
    RemoveLeaf { vertex: String },
    Smooth { vertex: String, between: (String, String) },
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionStep::RemoveLeaf { vertex } => write!(f, "remove leaf {vertex}"),
            ReductionStep::Smooth {
                vertex,
                between: (a, b),
            } => {
                write!(f, "smooth {vertex} into edge {a}-{b}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    pub graph: Graph,
    pub trace: Vec<ReductionStep>,
}

/// Applies reductions until none applies. Labels are kept.
pub fn simplify(g: &Graph) -> Simplified {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut left = n;
    let mut trace = Vec::new();
    let label = |v: usize| g.label(v).to_string();
    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive[v] || left <= 1 {
                continue;
            }
            match adj[v].len() {
                1 => {
                    let w = *adj[v].iter().next().expect("one neighbour");
                    adj[w].remove(&v);
                    adj[v].clear();
                    trace.push(ReductionStep::RemoveLeaf { vertex: label(v) });
                }
                2 => {
                    let mut it = adj[v].iter().copied();
                    let (a, b) = (it.next().expect("two"), it.next().expect("two"));
                    if adj[a].contains(&b) {
                        continue;
                    }
                    adj[a].remove(&v);
                    adj[b].remove(&v);
                    adj[a].insert(b);
                    adj[b].insert(a);
                    adj[v].clear();
                    trace.push(ReductionStep::Smooth {
                        vertex: label(v),
                        between: (label(a), label(b)),
                    });
                }
                _ => continue,
            }
            alive[v] = false;
            left -= 1;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in keep.iter().enumerate() {
        position[v] = i;
    }
    let edges = keep
        .iter()
        .flat_map(|&u| adj[u].iter().filter(move |&&w| u < w).map(move |&w| (u, w)))
        .map(|(u, w)| (position[u], position[w]));
    let graph = Graph::from_edges(keep.len(), edges.collect::<Vec<_>>())
        .expect("reduced edges are valid")
        .with_labels(keep.iter().map(|&v| label(v)).collect());
    Simplified { graph, trace }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path};

    #[test]
    fn subdivided_k5_reduces_to_k5() {
        // subdivide edge 0-1 of K5 twice and hang a path off vertex 2
        let mut edges: Vec<(usize, usize)> = complete(5).edges().iter().copied().filter(|&e| e != (0, 1)).collect();
        edges.extend([(0, 5), (5, 6), (6, 1), (2, 7), (7, 8)]);
        let g = Graph::from_edges(9, edges).unwrap();
        let s = simplify(&g);
        assert_eq!(s.graph.n(), 5);
        assert_eq!(s.graph.m(), 10);
        assert_eq!(s.trace.len(), 4);
    }

    #[test]
    fn triangles_and_trees() {
        // a triangle cannot be smoothed without a double edge
        assert_eq!(simplify(&cycle(3)).graph.n(), 3);
        assert_eq!(simplify(&cycle(6)).graph.n(), 3);
        assert_eq!(simplify(&path(5)).graph.n(), 1);
        assert_eq!(simplify(&complete_bipartite(3, 3)).graph.m(), 9);
    }
}
