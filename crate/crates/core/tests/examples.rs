//! Every example under `examples/` runs and prints what it claims.

mod group_info {
    include!("../examples/group_info.rs");

    #[test]
    fn prints_invariants() {
        let out = run_example().unwrap();
        assert!(
            out.contains("[16,9]: order 16, orders {1,2,4,8}, six-profile (0; ), 1 involutions"),
            "{out}"
        );
        assert!(out.contains("cyclic(8): order 8, orders {1,2,4,8}"));
        assert!(out.contains("six-profile (3; 3,3,3)"));
    }
}

mod power_graph_export {
    include!("../examples/power_graph_export.rs");

    #[test]
    fn edge_counts() {
        let out = run_example().unwrap();
        for line in [
            "Z8: 8 vertices, 28 edges",
            "Z6: 6 vertices, 13 edges",
            "Z2xZ2: 4 vertices, 3 edges",
        ] {
            assert!(out.contains(line), "{out}");
        }
        assert!(out.contains("three-hexagon union: 12 vertices, 33 edges"));
        assert!(out.contains("graph \"z3\" {"));
    }
}

mod genus_search {
    include!("../examples/genus_search.rs");

    #[test]
    fn search_matches_formulas() {
        let out = run_example().unwrap();
        assert!(out.contains("K5: genus = 1;"), "{out}");
        assert!(out.contains("K6: genus = 1;"));
        assert!(out.contains("K3,3: genus = 1;"));
    }
}

mod block_composition {
    include!("../examples/block_composition.rs");

    #[test]
    fn composed_values() {
        let out = run_example().unwrap();
        assert!(out.contains("K1+3K4: (3, 3)"), "{out}");
        assert!(out.contains("K1+(K7 u K4): (3, 5)"));
        assert!(out.contains("K1+8K6: (8, 17)"));
        assert!(out.contains("K1+2K4: genus = 2;"));
    }
}

mod classify_catalog {
    include!("../examples/classify_catalog.rs");

    #[test]
    fn trails_replay() {
        let out = run_example().unwrap();
        assert!(out.starts_with("78 groups classified"), "{out}");
        assert!(out.contains("78 of 78 trails replay"));
    }
}

mod reproduce_tables {
    include!("../examples/reproduce_tables.rs");

    #[test]
    fn both_tables() {
        let out = run_example().unwrap();
        assert!(out.contains("[72,43]      72  {1,2,3,4,6}"), "{out}");
        assert_eq!(out.matches("matches").count(), 7);
    }
}

mod lemma_checks {
    include!("../examples/lemma_checks.rs");

    #[test]
    fn all_pass() {
        let out = run_example().unwrap();
        assert!(
            out.contains("no-two-hexagons: PASS: 0 witnesses in 24 groups scanned"),
            "{out}"
        );
        assert!(!out.contains("FAIL"));
    }
}

mod verify_certificate {
    include!("../examples/verify_certificate.rs");

    #[test]
    fn tampering_is_caught() {
        let out = run_example().unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert!(lines[1].starts_with("OK:"), "{out}");
        assert!(lines[2].starts_with("MISMATCH:"));
    }
}

mod semidirect_actions {
    include!("../examples/semidirect_actions.rs");

    #[test]
    fn named_groups_recovered() {
        let out = run_example().unwrap();
        assert_eq!(out.matches("isomorphic to the named group: true").count(), 4, "{out}");
    }
}
