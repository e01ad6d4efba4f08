use super::Graph;

/// Vertex invariant: degree plus the sorted degrees of the neighbours.
fn signature(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Backtracking graph isomorphism test, adequate for a few dozen vertices.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let sa: Vec<_> = (0..a.n()).map(|v| signature(a, v)).collect();
    let sb: Vec<_> = (0..b.n()).map(|v| signature(b, v)).collect();
    let mut xa = sa.clone();
    let mut xb = sb.clone();
    xa.sort();
    xb.sort();
    if xa != xb {
        return false;
    }
    // Map high-degree vertices first, following BFS order where possible so
    // adjacency constraints bite early.
    let mut order: Vec<usize> = Vec::with_capacity(a.n());
    let mut placed = vec![false; a.n()];
    while order.len() < a.n() {
        let next = (0..a.n())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = a.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (links, a.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; a.n()];
    let mut used = vec![false; b.n()];
    extend(a, b, &sa, &sb, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    sa: &[(usize, Vec<usize>)],
    sb: &[(usize, Vec<usize>)],
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    for w in 0..b.n() {
        if used[w] || sa[v] != sb[w] {
            continue;
        }
        let consistent = order[..k].iter().all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, sa, sb, order, k + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path};

    #[test]
    fn simple_cases() {
        let relabelled = Graph::from_edges(4, [(3, 2), (2, 0), (0, 1)]).unwrap();
        assert!(are_isomorphic(&path(4), &relabelled));
        assert!(!are_isomorphic(
            &cycle(6),
            &crate::graph::disjoint_union(&[cycle(3), cycle(3)])
        ));
        assert!(!are_isomorphic(&complete(4), &complete_bipartite(2, 2)));
    }
}
