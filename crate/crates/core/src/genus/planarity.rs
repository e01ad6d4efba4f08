//! Planarity testing by face-by-face path embedding (Demoucron, Malgrange
//! and Pertuiset), one block at a time. Non-planar graphs yield a Kuratowski
//! subdivision found by greedy vertex then edge deletion.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use super::blocks::decompose;
use super::rotation::RotationSystem;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

impl fmt::Display for KuratowskiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KuratowskiKind::K5 => "K5",
            KuratowskiKind::K33 => "K3,3",
        })
    }
}

/// A subdivision of `K5` or `K3,3` inside the tested graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    /// Vertices of degree at least three in the subdivision.
    pub branch_vertices: Vec<usize>,
    /// Edges of the subdivision, as vertex pairs of the tested graph.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub enum Planarity {
    Planar(RotationSystem),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

/// Tests planarity, returning a planar rotation system or a Kuratowski
/// subdivision.
pub fn is_planar(g: &Graph) -> Planarity {
    match planar_embedding(g) {
        Some(rot) => Planarity::Planar(rot),
        None => Planarity::NonPlanar(kuratowski_witness(g)),
    }
}

/// Planar rotation system of `g`, if one exists. Block embeddings are merged
/// at cut vertices by concatenating their rotations.
pub fn planar_embedding(g: &Graph) -> Option<RotationSystem> {
    let mut rot = vec![Vec::new(); g.n()];
    for block in decompose(g).0 {
        let local = if block.is_bridge() {
            vec![vec![1], vec![0]]
        } else {
            embed_biconnected(&block.graph)?
        };
        for (i, r) in local.into_iter().enumerate() {
            rot[block.vertices[i]].extend(r.into_iter().map(|w| block.vertices[w]));
        }
    }
    Some(RotationSystem::new(g, rot).expect("merged block rotations cover all edges"))
}

/// Embeds a 2-connected graph with at least three vertices; returns the
/// local rotation of every vertex.
fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut in_h = vec![false; n];
    let mut edge_in_h = vec![false; g.m()];
    let cycle = initial_cycle(g);
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        edge_in_h[g.edge_index(v, w).expect("cycle edge")] = true;
    }
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect::<Vec<_>>()];
    let mut embedded = cycle.len();

    while embedded < g.m() {
        let fragments = fragments(g, &in_h, &edge_in_h);
        let members: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut m = vec![false; n];
                f.iter().for_each(|&v| m[v] = true);
                m
            })
            .collect();
        let mut choice = None;
        for (k, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|&a| members[f][a]))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((k, admissible[0]));
                    break;
                }
                _ if choice.is_none() => choice = Some((k, admissible[0])),
                _ => {}
            }
        }
        let (k, f) = choice.expect("at least one fragment remains");
        let path = fragment_path(g, &fragments[k], &in_h);
        for w in path.windows(2) {
            edge_in_h[g.edge_index(w[0], w[1]).expect("path edge")] = true;
            embedded += 1;
        }
        for &v in &path {
            in_h[v] = true;
        }
        let (a, b) = split_face(&faces[f], &path);
        faces[f] = a;
        faces.push(b);
    }

    // Consecutive vertices u, v, w on an oriented face make w follow u in
    // the rotation at v.
    let mut succ: Vec<Vec<usize>> = (0..n).map(|v| vec![usize::MAX; g.degree(v)]).collect();
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            let slot = g.neighbors(v).binary_search(&u).expect("face edge");
            succ[v][slot] = w;
        }
    }
    let mut rot = Vec::with_capacity(n);
    for v in 0..n {
        let start = g.neighbors(v)[0];
        let mut r = vec![start];
        let mut u = start;
        loop {
            let slot = g.neighbors(v).binary_search(&u).expect("neighbour");
            u = succ[v][slot];
            if u == start {
                break;
            }
            r.push(u);
        }
        debug_assert_eq!(r.len(), g.degree(v));
        rot.push(r);
    }
    Some(rot)
}

/// A cycle through vertex 0 and its first neighbour.
fn initial_cycle(g: &Graph) -> Vec<usize> {
    let w = g.neighbors(0)[0];
    // Shortest path from w back to 0 avoiding the edge {0, w}.
    let mut parent = vec![usize::MAX; g.n()];
    parent[w] = w;
    let mut queue = VecDeque::from([w]);
    while let Some(u) = queue.pop_front() {
        for &x in g.neighbors(u) {
            if (u == w && x == 0) || parent[x] != usize::MAX {
                continue;
            }
            parent[x] = u;
            if x == 0 {
                queue.clear();
                break;
            }
            queue.push_back(x);
        }
    }
    let mut cycle = vec![0];
    let mut x = parent[0];
    while x != w {
        cycle.push(x);
        x = parent[x];
    }
    cycle.push(w);
    cycle
}

struct Fragment {
    /// Interior vertices (empty for a chord).
    interior: Vec<usize>,
    attachments: Vec<usize>,
}

fn fragments(g: &Graph, in_h: &[bool], edge_in_h: &[bool]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !edge_in_h[e] && in_h[u] && in_h[v] {
            out.push(Fragment {
                interior: Vec::new(),
                attachments: vec![u, v],
            });
        }
    }
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        let mut i = 0;
        while i < interior.len() {
            let u = interior[i];
            i += 1;
            for &w in g.neighbors(u) {
                if in_h[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment { interior, attachments });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &Graph, frag: &Fragment, in_h: &[bool]) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let a = frag.attachments[0];
    let mut parent = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &x in g.neighbors(a) {
        if frag.interior.contains(&x) {
            parent[x] = a;
            queue.push_back(x);
        }
    }
    while let Some(u) = queue.pop_front() {
        if let Some(&b) = g.neighbors(u).iter().find(|&&b| in_h[b] && b != a) {
            let mut path = vec![b, u];
            let mut x = parent[u];
            while x != a {
                path.push(x);
                x = parent[x];
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &x in g.neighbors(u) {
            if !in_h[x] && parent[x] == usize::MAX {
                parent[x] = u;
                queue.push_back(x);
            }
        }
    }
    unreachable!("fragments of a 2-connected graph have two attachments")
}

/// Splits an oriented face along a path between two of its vertices; both
/// halves keep the orientation of the original.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (a, b) = (path[0], path[path.len() - 1]);
    let ia = face.iter().position(|&v| v == a).expect("attachment on face");
    let rotated: Vec<usize> = face[ia..].iter().chain(&face[..ia]).copied().collect();
    let ib = rotated.iter().position(|&v| v == b).expect("attachment on face");
    let inner = &path[1..path.len() - 1];
    let mut first: Vec<usize> = rotated[..=ib].to_vec();
    first.extend(inner.iter().rev());
    let mut second: Vec<usize> = rotated[ib..].to_vec();
    second.push(a);
    second.extend(inner);
    (first, second)
}

/// Edge-minimal non-planar subgraph of a non-planar graph, classified.
pub fn kuratowski_witness(g: &Graph) -> KuratowskiWitness {
    debug_assert!(planar_embedding(g).is_none());
    let mut h = g.clone();
    for v in 0..g.n() {
        if h.degree(v) == 0 {
            continue;
        }
        let incident: Vec<(usize, usize)> = h.neighbors(v).iter().map(|&w| (v, w)).collect();
        let smaller = h.remove_edges(&incident);
        if planar_embedding(&smaller).is_none() {
            h = smaller;
        }
    }
    for &(u, v) in g.edges() {
        if !h.has_edge(u, v) {
            continue;
        }
        let smaller = h.remove_edges(&[(u, v)]);
        if planar_embedding(&smaller).is_none() {
            h = smaller;
        }
    }
    let branch_vertices: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch_vertices.len() == 5 {
        KuratowskiKind::K5
    } else {
        debug_assert_eq!(branch_vertices.len(), 6);
        KuratowskiKind::K33
    };
    KuratowskiWitness {
        kind,
        branch_vertices,
        edges: h.edges().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::super::rotation::trace_faces;
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path};

    fn assert_planar(g: &Graph) {
        let Planarity::Planar(rot) = is_planar(g) else {
            panic!("{g:?} should be planar")
        };
        assert_eq!(trace_faces(g, &rot).unwrap().euler_genus, 0);
    }

    #[test]
    fn planar_graphs_get_genus_zero_rotations() {
        assert_planar(&complete(4));
        assert_planar(&cycle(6));
        assert_planar(&path(5));
        assert_planar(&complete_bipartite(2, 7));
        let octahedron = Graph::from_edges(
            6,
            (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| v != u + 3),
        )
        .unwrap();
        assert_eq!(octahedron.m(), 12);
        assert_planar(&octahedron);
    }

    #[test]
    fn kuratowski_graphs() {
        let Planarity::NonPlanar(w) = is_planar(&complete(5)) else {
            panic!()
        };
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert_eq!(w.edges.len(), 10);
        let Planarity::NonPlanar(w) = is_planar(&complete_bipartite(3, 3)) else {
            panic!()
        };
        assert_eq!(w.kind, KuratowskiKind::K33);
        let Planarity::NonPlanar(w) = is_planar(&complete(6)) else {
            panic!()
        };
        assert!(w.branch_vertices.len() == 5 || w.branch_vertices.len() == 6);
    }

    #[test]
    fn petersen_contains_k33_subdivision() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let petersen = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let Planarity::NonPlanar(w) = is_planar(&petersen) else {
            panic!()
        };
        assert_eq!(w.kind, KuratowskiKind::K33);
        assert!(w.edges.iter().all(|&(u, v)| petersen.has_edge(u, v)));
    }
}
