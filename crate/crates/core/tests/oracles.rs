//! Solver outputs against independent reference computations and frozen
//! tables produced by them.

mod common;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sroman_core::constructions::construct_lg;
use sroman_core::graph::{self, Family, FamilySpec, Graph};
use sroman_core::{
    lower_bound_degree, lower_bound_size, solve_branch_bound, solve_branch_bound_with,
    solve_circular_ladder_dp, solve_exhaustive, solve_ladder_dp, BranchBoundOptions, Rational,
    SizeBound,
};

use common::{naive_gamma, naive_is_srdf, window_circular_ladder, window_ladder};

/// Ladder optima for n = 2..=29.
const LADDER: [i64; 28] = [
    3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11, 11, 12, 12, 13, 13, 14, 14, 15, 15, 16,
    16,
];

/// Circular ladder optima for n = 3..=39.
const CIRCULAR_LADDER: [i64; 37] = [
    3, 2, 4, 4, 5, 4, 7, 6, 7, 6, 9, 8, 9, 8, 11, 10, 11, 10, 13, 12, 13, 12, 15, 14, 15, 14, 17,
    16, 17, 16, 19, 18, 19, 18, 21, 20, 21,
];

/// Ladder complement optima for n = 2..=7.
const LADDER_COMPLEMENT: [i64; 6] = [2, 3, 2, 2, 2, 2];

/// Circular ladder complement optima for n = 3..=7.
const CIRCULAR_LADDER_COMPLEMENT: [i64; 5] = [4, 4, 3, 2, 3];

fn family(family: Family, n: usize) -> Graph {
    graph::family(FamilySpec::new(family, n).unwrap()).unwrap()
}

#[test]
fn window_oracle_reproduces_ladder_table() {
    for (i, &expected) in LADDER.iter().enumerate() {
        assert_eq!(window_ladder(i + 2), expected, "n = {}", i + 2);
    }
}

#[test]
fn window_oracle_reproduces_circular_ladder_table() {
    for (i, &expected) in CIRCULAR_LADDER.iter().enumerate() {
        assert_eq!(window_circular_ladder(i + 3), expected, "n = {}", i + 3);
    }
}

#[test]
fn ladder_dp_matches_table() {
    for (i, &expected) in LADDER.iter().enumerate() {
        let n = i + 2;
        let cert = solve_ladder_dp(n).unwrap();
        assert_eq!(cert.weight, expected, "n = {n}");
        assert!(naive_is_srdf(
            &family(Family::Ladder, n),
            &cert.labeling.values()
        ));
    }
}

#[test]
fn circular_ladder_dp_matches_table() {
    for (i, &expected) in CIRCULAR_LADDER.iter().enumerate() {
        let n = i + 3;
        let cert = solve_circular_ladder_dp(n).unwrap();
        assert_eq!(cert.weight, expected, "n = {n}");
        assert!(naive_is_srdf(
            &family(Family::CircularLadder, n),
            &cert.labeling.values()
        ));
    }
}

#[test]
fn naive_enumeration_reproduces_complement_tables() {
    for (i, &expected) in LADDER_COMPLEMENT.iter().enumerate().take(5) {
        assert_eq!(
            naive_gamma(&family(Family::LadderComplement, i + 2)).0,
            expected
        );
    }
    for (i, &expected) in CIRCULAR_LADDER_COMPLEMENT.iter().enumerate().take(4) {
        assert_eq!(
            naive_gamma(&family(Family::CircularLadderComplement, i + 3)).0,
            expected
        );
    }
}

#[test]
fn branch_bound_matches_complement_tables() {
    for (i, &expected) in LADDER_COMPLEMENT.iter().enumerate() {
        let g = family(Family::LadderComplement, i + 2);
        assert_eq!(
            solve_branch_bound(&g).unwrap().weight,
            expected,
            "n = {}",
            i + 2
        );
    }
    for (i, &expected) in CIRCULAR_LADDER_COMPLEMENT.iter().enumerate() {
        let g = family(Family::CircularLadderComplement, i + 3);
        assert_eq!(
            solve_branch_bound(&g).unwrap().weight,
            expected,
            "n = {}",
            i + 3
        );
    }
}

#[test]
fn exhaustive_matches_naive_on_small_family_graphs() {
    let specs = [
        (Family::Path, 1..=10),
        (Family::Cycle, 3..=10),
        (Family::Complete, 1..=8),
        (Family::Ladder, 2..=5),
        (Family::CircularLadder, 3..=5),
        (Family::LadderComplement, 2..=5),
        (Family::CircularLadderComplement, 3..=5),
    ];
    for (fam, range) in specs {
        for n in range {
            let g = family(fam, n);
            let (weight, witness) = naive_gamma(&g);
            let cert = solve_exhaustive(&g).unwrap();
            assert_eq!(cert.weight, weight, "{fam} {n}");
            assert_eq!(cert.labeling.values(), witness, "{fam} {n}");
            let bb = solve_branch_bound(&g).unwrap();
            assert_eq!(bb.labeling, cert.labeling, "{fam} {n}");
        }
    }
}

fn random_connected(rng: &mut StdRng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let p = rng.gen_range(0.1..0.7);
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn branch_bound_matches_naive_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for trial in 0..60 {
        let n = rng.gen_range(5..=9);
        let g = random_connected(&mut rng, n);
        let (weight, witness) = naive_gamma(&g);
        let bb = solve_branch_bound(&g).unwrap();
        assert_eq!(bb.weight, weight, "trial {trial}");
        assert_eq!(bb.labeling.values(), witness, "trial {trial}");
        let parallel = solve_branch_bound_with(&g, &BranchBoundOptions::parallel(3)).unwrap();
        assert_eq!(parallel.weight, weight, "trial {trial}");
        assert!(naive_is_srdf(&g, &parallel.labeling.values()));
    }
}

#[test]
fn degree_bound_values() {
    // LG_2 is the 4-cycle, so the ladder degree pattern starts at n = 3.
    for n in [3, 5, 11, 40] {
        assert_eq!(
            lower_bound_degree(&family(Family::Ladder, n)).unwrap(),
            Rational::new(2 * n as i64, 11)
        );
    }
    // Cubic graphs: the bound is a quarter of the order.
    for n in [3, 4, 9] {
        let g = family(Family::CircularLadder, n);
        assert_eq!(
            lower_bound_degree(&g).unwrap(),
            Rational::new(2 * n as i64, 4)
        );
    }
    assert_eq!(
        lower_bound_degree(&family(Family::Complete, 4)).unwrap(),
        Rational::from(1)
    );
}

#[test]
fn size_bound_values() {
    assert_eq!(
        lower_bound_size(&family(Family::Cycle, 6)),
        SizeBound::Value(Rational::from(-3))
    );
    for n in [2, 3, 10] {
        assert_eq!(
            lower_bound_size(&family(Family::Ladder, n)),
            SizeBound::Value(Rational::from(4 - 3 * n as i64))
        );
    }
    assert_eq!(
        lower_bound_size(&family(Family::Path, 2)),
        SizeBound::Value(Rational::from(1))
    );
    assert_eq!(
        solve_exhaustive(&family(Family::Path, 2)).unwrap().weight,
        1
    );
    assert_eq!(
        lower_bound_size(&Graph::from_edges(3, &[(0, 1)]).unwrap()),
        SizeBound::Inapplicable
    );
}

#[test]
fn ladder_construction_weight_matches_dp() {
    let sizes = (2..=300).chain((301..=10_000).step_by(97)).chain([10_000]);
    for n in sizes {
        let built = construct_lg(n).unwrap();
        assert_eq!(
            built.weight(),
            solve_ladder_dp(n).unwrap().weight,
            "n = {n}"
        );
    }
}

#[test]
fn circular_and_linear_ladders_stay_close() {
    for n in 3..=400 {
        let linear = solve_ladder_dp(n).unwrap().weight;
        let circular = solve_circular_ladder_dp(n).unwrap().weight;
        assert!(circular <= linear + 4, "n = {n}: {circular} vs {linear}");
        assert!(
            (circular - linear).abs() <= 4,
            "n = {n}: {circular} vs {linear}"
        );
    }
}
