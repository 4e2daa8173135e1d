//! Vacuum moment sequences: ⟨δ_base, A^m δ_base⟩ counts closed m-walks.

use super::graph::Graph;
use super::jacobi::{tridiagonal_from_jacobi, JacobiSequences};
use super::IfsError;

/// Exact integer moments m = 0..m_max. When a 64-bit overflow would occur,
/// `values` stops at the last exact moment and `overflow_at` records the
/// first moment that could not be computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VacuumMoments {
    pub values: Vec<i64>,
    pub overflow_at: Option<usize>,
}

pub fn vacuum_moments(graph: &Graph, base: usize, m_max: usize) -> Result<VacuumMoments, IfsError> {
    let n = graph.vertex_count();
    if base >= n {
        return Err(IfsError::VertexOutOfRange { vertex: base, vertex_count: n });
    }
    let mut vec = vec![0i64; n];
    vec[base] = 1;
    let mut values = vec![1i64];
    for m in 1..=m_max {
        match graph.adjacency().apply_checked(&vec) {
            Some(next) => {
                vec = next;
                values.push(vec[base]);
            }
            None => return Ok(VacuumMoments { values, overflow_at: Some(m) }),
        }
    }
    Ok(VacuumMoments { values, overflow_at: None })
}

/// Moments from the Jacobi data: the (0,0) entry of T^m for the
/// tridiagonal matrix T. Requires depth > m_max/2 so that truncation
/// cannot reach the measured entries.
pub fn moments_from_jacobi(jac: &JacobiSequences, m_max: usize) -> Result<Vec<f64>, IfsError> {
    let depth = jac.alpha.len().min(jac.omega.len() + 1);
    if 2 * depth <= m_max {
        return Err(IfsError::InsufficientDepth { requested: m_max / 2 + 1, available: depth });
    }
    let t = tridiagonal_from_jacobi(jac, depth)?;
    let mut v = vec![0.0; depth];
    v[0] = 1.0;
    let mut out = vec![1.0];
    for _ in 1..=m_max {
        v = t.apply(&v);
        out.push(v[0]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ifs::graph::{complete, path, truncated_tree, Graph};
    use crate::ifs::jacobi::jacobi_coefficients;
    use crate::ifs::stratify::stratify;

    /// Brute-force closed-walk count by recursive enumeration, independent
    /// of the matrix-power path.
    fn walk_count(graph: &Graph, from: usize, to: usize, steps: usize) -> u64 {
        if steps == 0 {
            return u64::from(from == to);
        }
        graph.neighbors(from).map(|next| walk_count(graph, next, to, steps - 1)).sum()
    }

    #[test]
    fn bernoulli_alternation() {
        let g = path(2).unwrap();
        let m = vacuum_moments(&g, 0, 20).unwrap();
        assert!(m.overflow_at.is_none());
        for (i, &v) in m.values.iter().enumerate() {
            assert_eq!(v, i64::from(i % 2 == 0));
        }
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let m = vacuum_moments(&g, 0, 5).unwrap();
        assert_eq!(m.values, vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn tree_moments_match_enumeration() {
        let g = truncated_tree(3, 3).unwrap();
        let m = vacuum_moments(&g, 0, 4).unwrap();
        assert_eq!(m.values, vec![1, 0, 3, 0, 15]);
        for step in 0..=4 {
            assert_eq!(m.values[step], walk_count(&g, 0, 0, step) as i64);
        }
    }

    #[test]
    fn overflow_reports_partial_sequence() {
        let g = complete(40).unwrap();
        let m = vacuum_moments(&g, 0, 64).unwrap();
        let stop = m.overflow_at.expect("39^m must overflow before m = 64");
        assert_eq!(m.values.len(), stop);
        // everything kept must match the brute-force count (checked at small m)
        assert_eq!(m.values[2], 39);
    }

    #[test]
    fn bosonic_moments_are_gaussian() {
        // ω_n = n, α_n = 0 gives the standard Gaussian moments 1, 0, 1, 0, 3
        let jac = JacobiSequences::new((1..=8).map(f64::from).collect(), vec![0.0; 9]).unwrap();
        let m = moments_from_jacobi(&jac, 4).unwrap();
        let expect = [1.0, 0.0, 1.0, 0.0, 3.0];
        for (a, b) in m.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn jacobi_moments_match_graph_moments() {
        for (graph, base) in [
            (truncated_tree(3, 7).unwrap(), 0),
            (path(2).unwrap(), 0),
            (complete(6).unwrap(), 2),
            (crate::ifs::graph::cycle(8).unwrap(), 3),
        ] {
            let strat = stratify(&graph, base).unwrap();
            let jac = jacobi_coefficients(&graph, &strat).unwrap();
            let exact = vacuum_moments(&graph, base, 10).unwrap();
            let m_max = exact.values.len().min(2 * strat.depth() + 1) - 1;
            let approx = moments_from_jacobi(&jac, m_max).unwrap();
            for (a, b) in exact.values.iter().zip(&approx) {
                assert!((*a as f64 - b).abs() < 1e-9, "graph moments {exact:?} vs {approx:?}");
            }
        }
    }

    #[test]
    fn insufficient_depth_rejected() {
        let jac = JacobiSequences::new(vec![1.0], vec![0.0, 0.0]).unwrap();
        assert!(matches!(
            moments_from_jacobi(&jac, 4),
            Err(IfsError::InsufficientDepth { .. })
        ));
    }
}
