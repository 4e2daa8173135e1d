//! Walk oracles: dense-matrix equivalence, radial-reduction equivalence,
//! and unitarity properties on random graphs.

use num::complex::Complex64;
use num::BigRational;
use proptest::prelude::*;
use schemewalk_core::ifs::{stratify, truncated_tree, Graph};
use schemewalk_core::walks::{
    dense_unitary, grover_walk_run, line_walk_run, split_step_run, Amplitude, ArcSpace, ArcState,
    CoinSpec, LineState, RadialTreeWalk,
};

/// Maps each arc of the BFS-ordered truncated tree to its orbit under the
/// stabilizer of the arc (0, 1): (main branch?, level, outgoing?).
fn arc_orbit(graph: &Graph, arc: (usize, usize)) -> (bool, usize, bool) {
    let strat = stratify(graph, 0).unwrap();
    let depth_of = |v: usize| strat.stratum_of[v].unwrap();
    // the main branch is everything under vertex 1
    let mut branch = vec![false; graph.vertex_count()];
    branch[1] = true;
    let mut order: Vec<usize> = (0..graph.vertex_count()).collect();
    order.sort_by_key(|&v| depth_of(v));
    for &v in &order {
        if depth_of(v) == 0 {
            continue;
        }
        let parent = graph.neighbors(v).find(|&u| depth_of(u) + 1 == depth_of(v)).unwrap();
        if v != 1 {
            branch[v] = branch[parent];
        }
    }
    let (u, v) = arc;
    if depth_of(v) == depth_of(u) + 1 {
        (branch[v], depth_of(u), true)
    } else {
        (branch[u], depth_of(v), false)
    }
}

#[test]
fn radial_walk_equals_dense_walk_exactly() {
    for degree in [3usize, 4] {
        let depth = 5;
        let steps = 4;
        let graph = truncated_tree(degree, depth).unwrap();
        let space = ArcSpace::new(&graph);
        let initial = ArcState::<BigRational>::delta(&space, (0, 1)).unwrap();
        let dense_snaps = grover_walk_run(&space, &initial, steps).unwrap();

        let radial = RadialTreeWalk::new(degree, depth).unwrap();
        let radial_snaps = radial.run::<BigRational>(steps);

        for (t, (dense, reduced)) in dense_snaps.iter().zip(&radial_snaps).enumerate() {
            for (idx, &arc) in space.arcs().iter().enumerate() {
                let (main, level, out) = arc_orbit(&graph, arc);
                let expect = match (main, out) {
                    (true, true) => &reduced.main_out[level],
                    (true, false) => &reduced.main_in[level],
                    (false, true) => &reduced.side_out[level],
                    (false, false) => &reduced.side_in[level],
                };
                assert_eq!(
                    &dense.amplitudes[idx], expect,
                    "step {t} arc {arc:?} degree {degree}"
                );
            }
            // weighted norm agrees too
            let norm = radial.norm_sqr(reduced);
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn dense_oracle_small_graphs_five_steps() {
    // explicit U = SC matrix applied repeatedly, graphs with ≤ 30 arcs
    let graphs = vec![
        schemewalk_core::ifs::cycle(4).unwrap(),
        schemewalk_core::ifs::cycle(7).unwrap(),
        schemewalk_core::ifs::complete(4).unwrap(),
        truncated_tree(3, 2).unwrap(),
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap(),
    ];
    for graph in &graphs {
        let space = ArcSpace::new(graph);
        assert!(space.arc_count() <= 30);
        let u = dense_unitary(&space);
        for start in [0, space.arc_count() / 2] {
            let initial =
                ArcState::<Complex64>::delta(&space, space.arcs()[start]).unwrap();
            let snaps = grover_walk_run(&space, &initial, 5).unwrap();
            let mut vec = nalgebra::DMatrix::<f64>::zeros(space.arc_count(), 1);
            vec[(start, 0)] = 1.0;
            for snap in &snaps {
                for (idx, amp) in snap.amplitudes.iter().enumerate() {
                    assert!((amp.re - vec[(idx, 0)]).abs() < 1e-12);
                }
                vec = &u * vec;
            }
        }
    }
}

#[test]
fn deep_tree_hundred_steps_is_fast_and_unitary() {
    let start = std::time::Instant::now();
    let walk = RadialTreeWalk::new(3, 102).unwrap();
    let snaps = walk.run::<Complex64>(100);
    let drift: f64 = snaps
        .windows(2)
        .map(|w| (walk.norm_sqr(&w[1]) - walk.norm_sqr(&w[0])).abs())
        .sum();
    assert!(drift < 1e-9);
    assert!(start.elapsed().as_secs() < 30);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Norm conservation of the Grover walk on random connected graphs.
    #[test]
    fn prop_grover_walk_preserves_norm(
        n in 2usize..9,
        extra in proptest::collection::vec((0usize..9, 0usize..9), 0..12),
        steps in 0usize..12,
    ) {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        edges.extend(extra.into_iter().map(|(u, v)| (u % n, v % n)).filter(|&(u, v)| u != v));
        let graph = Graph::from_edges(n, &edges).unwrap();
        let space = ArcSpace::new(&graph);
        let initial = ArcState::<Complex64>::delta(&space, space.arcs()[0]).unwrap();
        let snaps = grover_walk_run(&space, &initial, steps).unwrap();
        for snap in &snaps {
            prop_assert!((snap.norm_sqr() - 1.0).abs() < 1e-12);
        }
    }

    /// Line walks stay normalized for arbitrary rotation coins.
    #[test]
    fn prop_line_walk_preserves_norm(theta in -3.2f64..3.2, steps in 0usize..30) {
        let snaps = line_walk_run(
            &CoinSpec::Rotation(theta),
            &LineState::localized(0, 0),
            steps,
        ).unwrap();
        for snap in &snaps {
            prop_assert!((snap.total_probability() - 1.0).abs() < 1e-12);
        }
    }

    /// Split-step walks stay normalized for arbitrary angle pairs.
    #[test]
    fn prop_split_step_preserves_norm(
        t1 in -3.2f64..3.2,
        t2 in -3.2f64..3.2,
        steps in 0usize..20,
    ) {
        let snaps = split_step_run(t1, t2, &LineState::localized(0, 1), steps).unwrap();
        for snap in &snaps {
            prop_assert!((snap.total_probability() - 1.0).abs() < 1e-12);
        }
    }

    /// Exact rational normalization after two Grover steps from any arc.
    #[test]
    fn prop_double_step_rational_norm(seed in 0usize..20) {
        let graph = truncated_tree(3, 3).unwrap();
        let space = ArcSpace::new(&graph);
        let arc = space.arcs()[seed % space.arc_count()];
        let initial = ArcState::<BigRational>::delta(&space, arc).unwrap();
        let snaps = grover_walk_run(&space, &initial, 2).unwrap();
        let total = snaps[2]
            .amplitudes
            .iter()
            .fold(BigRational::from_ratio(0, 1), |acc, a| acc.add(&a.mul(a)));
        prop_assert_eq!(total, BigRational::from_ratio(1, 1));
    }
}
