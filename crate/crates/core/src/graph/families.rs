use super::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("valid edges")
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
    Graph::from_edges(m + n, edges).expect("valid edges")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid edges")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid edges")
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Graph {
    Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))).expect("valid edges")
}

/// Vertex-disjoint union, parts numbered consecutively.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut offset = 0;
    let mut edges = Vec::new();
    for g in parts {
        edges.extend(g.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
        offset += g.n();
    }
    Graph::from_edges(offset, edges).expect("valid edges")
}

/// `K_1 + (G_1 ∪ ... ∪ G_k)`: a new vertex 0 joined to every vertex of the
/// disjoint union.
pub fn apex_join(parts: &[Graph]) -> Graph {
    let union = disjoint_union(parts);
    let n = union.n() + 1;
    let edges = union
        .edges()
        .iter()
        .map(|&(u, v)| (u + 1, v + 1))
        .chain((1..n).map(|v| (0, v)));
    Graph::from_edges(n, edges).expect("valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(complete(8).m(), 28);
        assert_eq!(complete_bipartite(3, 6).m(), 18);
        let g = apex_join(&[complete(4), complete(4), complete(4)]);
        assert_eq!((g.n(), g.m()), (13, 3 * 6 + 12));
        assert_eq!(cycle(5).m(), 5);
        assert_eq!(path(1).m(), 0);
    }
}
