//! Scheme constructors checked against independent brute-force oracles.

mod common;

use common::{brute_force_intersection, complete_scheme, cycle_scheme, cyclic_table, s3_table};
use schemewalk_core::matrix::IntMatrix;
use schemewalk_core::scheme::{
    build_grassmann, build_group_scheme, build_johnson, intersection_numbers,
    primitive_idempotents, verify_scheme, AssociationScheme, ClassMatrix, OrbitMode,
};

/// Independent Johnson construction: enumerate k-subsets as sorted vectors
/// and classify pairs by intersection size directly.
fn johnson_oracle(v: usize, k: usize) -> Vec<IntMatrix> {
    fn subsets(v: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 0..v {
            for mut rest in subsets(v, k - 1) {
                if rest.iter().all(|&x| x > first) {
                    let mut s = vec![first];
                    s.append(&mut rest);
                    out.push(s);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
    let sets = subsets(v, k);
    let n = sets.len();
    let d = k.min(v - k);
    (0..=d)
        .map(|class| {
            IntMatrix::from_fn(n, n, |a, b| {
                let inter = sets[a].iter().filter(|x| sets[b].contains(x)).count();
                i64::from(k - inter == class)
            })
        })
        .collect()
}

#[test]
fn johnson_4_2_matches_enumeration_oracle() {
    let scheme = build_johnson(4, 2).unwrap();
    assert_eq!(scheme.vertex_count(), 6);
    assert_eq!(scheme.class_count(), 2);
    assert_eq!(scheme.valencies(), &[1, 4, 1]);
    for (j, oracle) in johnson_oracle(4, 2).iter().enumerate() {
        assert_eq!(scheme.class(j), oracle);
    }
}

#[test]
fn johnson_5_2_triangle_count() {
    let scheme = build_johnson(5, 2).unwrap();
    assert_eq!(scheme.vertex_count(), 10);
    let tensor = intersection_numbers(&scheme).unwrap();
    // brute-force triangle count on the class-1 graph
    let a1 = scheme.class(1);
    let n = scheme.vertex_count();
    let (x, y) = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| a1[(x, y)] == 1)
        .unwrap();
    let triangles = (0..n).filter(|&z| a1[(x, z)] == 1 && a1[(z, y)] == 1).count() as i64;
    assert_eq!(triangles, 3);
    assert_eq!(tensor.p[(1, 1, 1)], 3);
}

#[test]
fn grassmann_f2_families() {
    let lines_plane = build_grassmann(2, 2, 1).unwrap();
    assert_eq!(lines_plane.vertex_count(), 3);
    assert_eq!(lines_plane.class(1), &IntMatrix::from_fn(3, 3, |r, c| i64::from(r != c)));

    let lines_space = build_grassmann(2, 3, 1).unwrap();
    assert_eq!(lines_space.vertex_count(), 7);
    assert_eq!(lines_space.class_count(), 1);

    let planes = build_grassmann(2, 4, 2).unwrap();
    assert_eq!(planes.vertex_count(), 35);
    assert_eq!(planes.class_count(), 2);
    // q-analog valencies: [2 choose 1]_2 · [2 choose 1]_2 · 2 = 18 pairs meet
    // in a line, 16 meet trivially
    assert_eq!(planes.valencies(), &[1, 18, 16]);
}

#[test]
fn grassmann_f3_lines() {
    let scheme = build_grassmann(3, 3, 1).unwrap();
    assert_eq!(scheme.vertex_count(), 13);
    assert_eq!(scheme.class_count(), 1);
}

#[test]
fn group_scheme_z2() {
    let scheme = build_group_scheme(&cyclic_table(2), OrbitMode::Conjugation).unwrap();
    assert_eq!(scheme.vertex_count(), 2);
    assert_eq!(scheme.class(1), &IntMatrix::from_fn(2, 2, |r, c| i64::from(r != c)));
}

#[test]
fn group_scheme_s3_conjugacy_classes() {
    let scheme = build_group_scheme(&s3_table(), OrbitMode::Conjugation).unwrap();
    assert_eq!(scheme.vertex_count(), 6);
    assert_eq!(scheme.class_count(), 2);
    let mut sizes: Vec<i64> = scheme.valencies().to_vec();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 2, 3]);
    assert!(scheme.commutative());
    // independent conjugacy oracle: transpositions form one class, the two
    // 3-cycles the other; y·x^{-1} classification is symmetric here
    for j in 1..=2 {
        assert!(scheme.class(j).is_symmetric());
    }
}

#[test]
fn group_scheme_s3_regular_representation_not_commutative() {
    let scheme = build_group_scheme(&s3_table(), OrbitMode::Trivial).unwrap();
    assert_eq!(scheme.class_count(), 5);
    assert!(!scheme.commutative());
    assert!(matches!(
        primitive_idempotents(&scheme),
        Err(schemewalk_core::scheme::SchemeError::NonCommutative)
    ));
}

#[test]
fn six_cycle_distance_matrices_verify() {
    let scheme = cycle_scheme(6);
    assert_eq!(scheme.class_count(), 3);
    let report = verify_scheme(scheme.classes()).unwrap();
    assert!(report.all_passed());
    assert!(report.commutative);
}

#[test]
fn intersection_equals_brute_force_everywhere() {
    let schemes: Vec<AssociationScheme> = vec![
        build_johnson(5, 2).unwrap(),
        build_johnson(4, 2).unwrap(),
        cycle_scheme(6),
        build_group_scheme(&s3_table(), OrbitMode::Conjugation).unwrap(),
        complete_scheme(2),
        build_grassmann(2, 4, 2).unwrap(),
    ];
    for scheme in &schemes {
        assert!(scheme.vertex_count() <= 40);
        let fast = intersection_numbers(scheme).unwrap();
        let brute = brute_force_intersection(scheme);
        assert_eq!(fast.p, brute);
    }
}

#[test]
fn valency_weighted_sum_rule() {
    for scheme in [
        build_johnson(6, 3).unwrap(),
        cycle_scheme(7),
        build_group_scheme(&cyclic_table(5), OrbitMode::Trivial).unwrap(),
    ] {
        let t = intersection_numbers(&scheme).unwrap();
        let ks = scheme.valencies();
        let d1 = scheme.class_count() + 1;
        for i in 0..d1 {
            for j in 0..d1 {
                let lhs: i64 = (0..d1).map(|k| t.p[(k, i, j)] * ks[k]).sum();
                assert_eq!(lhs, ks[i] * ks[j]);
            }
        }
    }
}

#[test]
fn constructed_schemes_pass_all_axioms() {
    let schemes = vec![
        build_johnson(2, 1).unwrap(),
        build_johnson(5, 2).unwrap(),
        build_johnson(6, 2).unwrap(),
        build_grassmann(2, 4, 2).unwrap(),
        build_grassmann(3, 3, 1).unwrap(),
        build_group_scheme(&s3_table(), OrbitMode::Conjugation).unwrap(),
        build_group_scheme(&cyclic_table(4), OrbitMode::Explicit(vec![vec![1, 3], vec![2]]))
            .unwrap(),
    ];
    for scheme in &schemes {
        let report = verify_scheme(scheme.classes()).unwrap();
        assert!(report.all_passed(), "{report:?}");
    }
}

#[test]
fn z4_explicit_orbits_match_cycle_scheme() {
    let group = build_group_scheme(&cyclic_table(4), OrbitMode::Explicit(vec![vec![1, 3], vec![2]]))
        .unwrap();
    let distance = cycle_scheme(4);
    for j in 0..=2 {
        assert_eq!(group.class(j), distance.class(j));
    }
}

#[test]
fn johnson_rejects_above_vertex_cap() {
    // C(30, 15) = 155117520 blows the default 10k cap
    assert!(build_johnson(30, 15).is_err());
}

#[test]
fn verify_reports_non_scheme() {
    // {I, A} where A is a path's adjacency matrix: partition fails
    let i = ClassMatrix::new(IntMatrix::identity(3)).unwrap();
    let a = ClassMatrix::new(IntMatrix::from_rows(vec![
        vec![0, 1, 0],
        vec![1, 0, 1],
        vec![0, 1, 0],
    ]))
    .unwrap();
    let report = verify_scheme(&[i, a]).unwrap();
    assert!(!report.partition.passed);
    assert_eq!(report.partition.witness.as_ref().unwrap().entry, (0, 2));
}
