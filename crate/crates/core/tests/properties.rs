mod common;

use proptest::prelude::*;
use sroman_core::formulas::integer_lower_bound;
use sroman_core::graph::{self, Family, FamilySpec, Graph};
use sroman_core::srdf::{parse_labeling, write_labeling, write_labeling_coords};
use sroman_core::{solve_branch_bound, solve_exhaustive, validate, Label, Labeling};

use common::naive_is_srdf;

fn arb_graph(max_vertices: usize) -> impl Strategy<Value = Graph> {
    (1..=max_vertices).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let count = pairs.len();
        proptest::collection::vec(any::<bool>(), count).prop_map(move |keep| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_label() -> impl Strategy<Value = Label> {
    prop_oneof![Just(Label::MinusOne), Just(Label::One), Just(Label::Two)]
}

fn arb_graph_with_labeling(max_vertices: usize) -> impl Strategy<Value = (Graph, Labeling)> {
    arb_graph(max_vertices).prop_flat_map(|g| {
        let n = g.vertex_count();
        (
            Just(g),
            proptest::collection::vec(arb_label(), n).prop_map(Labeling::new),
        )
    })
}

fn arb_family_spec() -> impl Strategy<Value = FamilySpec> {
    let families = prop_oneof![
        Just(Family::Path),
        Just(Family::Cycle),
        Just(Family::Complete),
        Just(Family::Ladder),
        Just(Family::CircularLadder),
        Just(Family::LadderComplement),
        Just(Family::CircularLadderComplement),
    ];
    (families, 0usize..30)
        .prop_map(|(family, k)| FamilySpec::new(family, family.min_n() + k).unwrap())
}

proptest! {
    #[test]
    fn family_graphs_are_simple_with_expected_sizes(spec in arb_family_spec()) {
        let g = graph::family(spec).unwrap();
        prop_assert!(g.check_invariants().is_ok());
        let n = spec.n;
        let (vertices, edges) = match spec.family {
            Family::Path => (n, n - 1),
            Family::Cycle => (n, n),
            Family::Complete => (n, n * (n - 1) / 2),
            Family::Ladder => (2 * n, 3 * n - 2),
            Family::CircularLadder => (2 * n, 3 * n),
            Family::LadderComplement => (2 * n, 2 * n * (2 * n - 1) / 2 - (3 * n - 2)),
            Family::CircularLadderComplement => (2 * n, 2 * n * (2 * n - 1) / 2 - 3 * n),
        };
        prop_assert_eq!(g.vertex_count(), vertices);
        prop_assert_eq!(g.edge_count(), edges);
        prop_assert_eq!(spec.vertex_count(), vertices);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        let c = graph::complement(&g);
        prop_assert!(c.check_invariants().is_ok());
        prop_assert_eq!(g.edge_count() + c.edge_count(), g.vertex_count() * (g.vertex_count() - 1) / 2);
        prop_assert_eq!(graph::complement(&c), g);
    }

    #[test]
    fn product_has_expected_counts(a in arb_graph(6), b in arb_graph(6)) {
        let p = graph::cartesian_product(&a, &b);
        prop_assert!(p.check_invariants().is_ok());
        prop_assert_eq!(p.vertex_count(), a.vertex_count() * b.vertex_count());
        prop_assert_eq!(
            p.edge_count(),
            a.edge_count() * b.vertex_count() + b.edge_count() * a.vertex_count()
        );
    }

    #[test]
    fn edge_list_round_trips(g in arb_graph(15)) {
        let text = graph::write_edge_list(&g);
        prop_assert_eq!(graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn family_edge_list_keeps_its_tag(spec in arb_family_spec()) {
        let g = graph::family(spec).unwrap();
        let parsed = graph::parse_edge_list(&graph::write_edge_list(&g)).unwrap();
        prop_assert_eq!(parsed.family(), Some(spec));
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn weight_equals_partition_identity(labels in proptest::collection::vec(arb_label(), 0..40)) {
        let l = Labeling::new(labels);
        let c = l.partition_counts();
        prop_assert_eq!(l.weight(), 2 * c.two as i64 + c.one as i64 - c.minus_one as i64);
        prop_assert_eq!(c.total(), l.len());
    }

    #[test]
    fn validate_agrees_with_reference((g, l) in arb_graph_with_labeling(10)) {
        let report = validate(&g, &l).unwrap();
        prop_assert_eq!(report.is_valid(), naive_is_srdf(&g, &l.values()));
        for v in 0..g.vertex_count() {
            let expected = l.get(v).value()
                + g.neighbors(v).iter().map(|&u| l.get(u).value()).sum::<i64>();
            prop_assert_eq!(report.closed_sums[v], expected);
        }
    }

    #[test]
    fn raising_a_label_keeps_validity((g, l) in arb_graph_with_labeling(10), pick in any::<prop::sample::Index>()) {
        prop_assume!(validate(&g, &l).unwrap().is_valid());
        let v = pick.index(g.vertex_count());
        let mut raised = l.clone();
        raised.set(v, match l.get(v) {
            Label::MinusOne => Label::One,
            _ => Label::Two,
        });
        // Raising -1 to 1 or 1 to 2 only increases closed sums and only adds
        // +2 guards.
        prop_assert!(validate(&g, &raised).unwrap().is_valid());
    }

    #[test]
    fn labeling_text_round_trips(labels in proptest::collection::vec(arb_label(), 1..30)) {
        let l = Labeling::new(labels);
        prop_assert_eq!(parse_labeling(&write_labeling(&l)).unwrap(), l.clone());
        prop_assert_eq!(parse_labeling(&write_labeling_coords(&l)).unwrap(), l);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn optimum_respects_bounds(g in arb_graph(9)) {
        let cert = solve_exhaustive(&g).unwrap();
        prop_assert!(cert.weight >= integer_lower_bound(&g).unwrap());
        prop_assert!(cert.weight <= g.vertex_count() as i64);
        prop_assert!(naive_is_srdf(&g, &cert.labeling.values()));
        let bb = solve_branch_bound(&g).unwrap();
        prop_assert_eq!(bb.weight, cert.weight);
        prop_assert_eq!(bb.labeling, cert.labeling);
    }
}
