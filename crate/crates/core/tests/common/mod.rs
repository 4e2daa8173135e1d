//! Shared fixtures and independent oracles for the integration tests.

use schemewalk_core::matrix::{IntMatrix, Tensor3};
use schemewalk_core::scheme::{AssociationScheme, ClassMatrix};

/// Cayley table of Z_n.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Cayley table of S_3 over the six permutations of {0,1,2} in
/// lexicographic order; table[i][j] = p_i ∘ p_j with (p∘q)(x) = p(q(x)).
pub fn s3_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> =
        vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
    perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let composed = [p[q[0]], p[q[1]], p[q[2]]];
                    index(&composed)
                })
                .collect()
        })
        .collect()
}

/// The complete-graph scheme {I, J − I} on n vertices.
pub fn complete_scheme(n: usize) -> AssociationScheme {
    let i = ClassMatrix::new(IntMatrix::identity(n)).unwrap();
    let a = ClassMatrix::new(IntMatrix::from_fn(n, n, |r, c| i64::from(r != c))).unwrap();
    AssociationScheme::from_classes(vec![i, a]).unwrap()
}

/// Distance matrices of the n-cycle computed by BFS on the cycle graph,
/// assembled into a scheme. This is an independent construction path from
/// any closed-form class formula.
pub fn cycle_scheme(n: usize) -> AssociationScheme {
    let graph = schemewalk_core::ifs::cycle(n).unwrap();
    let mut dist = vec![vec![usize::MAX; n]; n];
    for start in 0..n {
        let strat = schemewalk_core::ifs::stratify(&graph, start).unwrap();
        for (level, stratum) in strat.strata.iter().enumerate() {
            for &v in stratum {
                dist[start][v] = level;
            }
        }
    }
    let d = *dist.iter().flatten().max().unwrap();
    let classes = (0..=d)
        .map(|k| {
            ClassMatrix::new(IntMatrix::from_fn(n, n, |r, c| i64::from(dist[r][c] == k))).unwrap()
        })
        .collect();
    AssociationScheme::from_classes(classes).unwrap()
}

/// Brute-force intersection numbers: for every class-k pair (x, y), count
/// z with (x, z) in class i and (z, y) in class j. Panics if the count is
/// not constant over the class-k pairs, which is itself part of the oracle.
pub fn brute_force_intersection(scheme: &AssociationScheme) -> Tensor3<i64> {
    let n = scheme.vertex_count();
    let d1 = scheme.class_count() + 1;
    Tensor3::from_fn(d1, |k, i, j| {
        let mut value: Option<i64> = None;
        for x in 0..n {
            for y in 0..n {
                if scheme.class_of_pair(x, y) != k {
                    continue;
                }
                let count = (0..n)
                    .filter(|&z| {
                        scheme.class_of_pair(x, z) == i && scheme.class_of_pair(z, y) == j
                    })
                    .count() as i64;
                match value {
                    None => value = Some(count),
                    Some(v) => assert_eq!(
                        v, count,
                        "triple count not constant over class-{k} pairs at ({i}, {j})"
                    ),
                }
            }
        }
        value.unwrap_or(0)
    })
}
