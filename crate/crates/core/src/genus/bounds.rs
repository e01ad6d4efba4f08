//! Lower bounds: Euler's formula with girth, and cliques.

use super::formula::{kn_crosscap, kn_genus};
use super::Surface;
use crate::graph::Graph;

/// Euler genus lower bound `2c - V + E - floor(2E / girth)`, at least 0.
/// Forests give 0.
pub fn euler_genus_lower_bound(g: &Graph) -> usize {
    let Some(girth) = g.girth() else { return 0 };
    let c = g.components().len() as i64;
    let max_faces = (2 * g.m() / girth) as i64;
    (2 * c - g.n() as i64 + g.m() as i64 - max_faces).max(0) as usize
}

/// Euler lower bound on the genus (orientable) or crosscap number.
pub fn euler_lower_bound(g: &Graph, surface: Surface) -> usize {
    let eg = euler_genus_lower_bound(g);
    match surface {
        Surface::Orientable => eg.div_ceil(2),
        Surface::Nonorientable => eg,
    }
}

/// Clique number by branch and bound, pruning with a greedy colouring.
pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    let candidates: Vec<usize> = (0..g.n()).collect();
    expand(g, &mut Vec::new(), candidates, &mut best);
    best
}

fn expand(g: &Graph, clique: &mut Vec<usize>, mut candidates: Vec<usize>, best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(clique.len());
        return;
    }
    // Greedy colouring: vertices sorted by colour, so the colour of the last
    // candidate bounds the clique size reachable from the candidate set.
    let (order, colours) = colour_sort(g, &candidates);
    for i in (0..order.len()).rev() {
        if clique.len() + colours[i] <= *best {
            return;
        }
        let v = order[i];
        clique.push(v);
        let next: Vec<usize> = candidates.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        expand(g, clique, next, best);
        clique.pop();
        candidates.retain(|&w| w != v);
    }
}

fn colour_sort(g: &Graph, vs: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in vs {
        match classes.iter_mut().find(|c| c.iter().all(|&w| !g.has_edge(v, w))) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(vs.len());
    let mut colours = Vec::with_capacity(vs.len());
    for (k, c) in classes.into_iter().enumerate() {
        for v in c {
            order.push(v);
            colours.push(k + 1);
        }
    }
    (order, colours)
}

/// Lower bound from the largest clique `K_w` contained in `g`.
pub fn clique_lower_bound(g: &Graph, surface: Surface) -> (usize, usize) {
    let w = clique_number(g);
    let bound = match surface {
        Surface::Orientable => kn_genus(w),
        Surface::Nonorientable => kn_crosscap(w),
    };
    (w, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{apex_join, complete, complete_bipartite, cycle, disjoint_union};

    #[test]
    fn euler_bounds_match_known_values() {
        assert_eq!(euler_lower_bound(&complete(5), Surface::Orientable), 1);
        assert_eq!(euler_lower_bound(&complete(8), Surface::Orientable), 2);
        assert_eq!(euler_lower_bound(&complete(7), Surface::Nonorientable), 2);
        assert_eq!(euler_lower_bound(&complete_bipartite(3, 3), Surface::Orientable), 1);
        assert_eq!(euler_lower_bound(&complete_bipartite(4, 6), Surface::Nonorientable), 4);
        assert_eq!(euler_lower_bound(&cycle(7), Surface::Orientable), 0);
    }

    #[test]
    fn cliques() {
        assert_eq!(clique_number(&complete(7)), 7);
        assert_eq!(clique_number(&complete_bipartite(4, 5)), 2);
        assert_eq!(clique_number(&cycle(5)), 2);
        let g = apex_join(&[disjoint_union(&[complete(7), complete(4)])]);
        assert_eq!(clique_number(&g), 8);
        assert_eq!(clique_lower_bound(&g, Surface::Orientable), (8, 2));
    }
}
