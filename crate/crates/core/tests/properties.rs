//! Randomised invariants of the genus engine on small graphs.

use proptest::prelude::*;

use powergenus::genus::{
    blocks, crosscap_exact, euler_lower_bound, genus_exact, is_planar, simplify, trace_faces, trace_signed_faces,
    GenusOptions, RotationSystem, SignedRotationSystem, Surface,
};
use powergenus::graph::Graph;

/// Connected graphs on up to `max_n` vertices: a random spanning tree plus
/// random extra edges.
fn connected_graph(max_n: usize, max_extra: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        let parents = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = proptest::collection::vec((0..n, 0..n), 0..=max_extra);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            edges.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph with a random rotation system and random edge signs.
fn rotated_graph() -> impl Strategy<Value = (Graph, Vec<Vec<usize>>, Vec<i8>)> {
    connected_graph(8, 14).prop_flat_map(|g| {
        let rots: Vec<_> = (0..g.n())
            .map(|v| Just(g.neighbors(v).to_vec()).prop_shuffle())
            .collect();
        let signs = proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], g.m());
        (Just(g), rots, signs)
    })
}

fn search() -> GenusOptions {
    GenusOptions::default().search_only()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orientable_traces_have_even_euler_genus((g, rot, _) in rotated_graph()) {
        let t = trace_faces(&g, &RotationSystem::new(&g, rot).unwrap()).unwrap();
        prop_assert!(t.orientable);
        prop_assert_eq!(t.euler_genus % 2, 0);
        prop_assert_eq!(t.faces.iter().map(Vec::len).sum::<usize>(), 2 * g.m());
    }

    #[test]
    fn signed_traces_cover_every_dart_once((g, rot, signs) in rotated_graph()) {
        let system = SignedRotationSystem::new(&g, RotationSystem::new(&g, rot).unwrap(), signs).unwrap();
        let t = trace_signed_faces(&g, &system).unwrap();
        prop_assert_eq!(t.faces.iter().map(Vec::len).sum::<usize>(), 2 * g.m());
        prop_assert_eq!(t.euler_characteristic(), 2 * t.components as i64 - t.euler_genus as i64);
    }

    #[test]
    fn euler_bound_never_exceeds_genus(g in connected_graph(7, 14)) {
        let genus = genus_exact(&g, &search()).unwrap();
        let crosscap = crosscap_exact(&g, &search()).unwrap();
        prop_assert!(euler_lower_bound(&g, Surface::Orientable) <= genus.exact().unwrap());
        prop_assert!(euler_lower_bound(&g, Surface::Nonorientable) <= crosscap.exact().unwrap());
        // Any orientable embedding of genus k gives a nonorientable one with 2k + 1 crosscaps.
        prop_assert!(crosscap.exact().unwrap() <= 2 * genus.exact().unwrap() + 1);
    }

    #[test]
    fn genus_adds_over_blocks(g in connected_graph(8, 12)) {
        let whole = genus_exact(&g, &search()).unwrap().exact().unwrap();
        let parts: usize = blocks(&g)
            .unwrap()
            .iter()
            .map(|b| genus_exact(&b.graph, &search()).unwrap().exact().unwrap())
            .sum();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn planar_iff_genus_zero(g in connected_graph(8, 16)) {
        let genus = genus_exact(&g, &search()).unwrap().exact().unwrap();
        prop_assert_eq!(is_planar(&g).is_planar(), genus == 0);
    }

    #[test]
    fn simplify_preserves_genus(g in connected_graph(9, 12)) {
        let s = simplify(&g);
        let before = genus_exact(&g, &search()).unwrap().exact();
        let after = if s.graph.m() == 0 { Some(0) } else { genus_exact(&s.graph, &search()).unwrap().exact() };
        prop_assert_eq!(before, after);
    }
}
