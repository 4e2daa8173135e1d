//! Intersection numbers p^k_ij: A_i A_j = Σ_k p^k_ij A_k.

use super::{AssociationScheme, SchemeError};
use crate::matrix::Tensor3;

/// Exact integer structure constants in the adjacency basis, indexed
/// `p[(k, i, j)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTensor {
    pub p: Tensor3<i64>,
}

impl IntersectionTensor {
    pub fn dim(&self) -> usize {
        self.p.dim()
    }
}

/// Computes the full tensor. For each (i, j) the coefficient p^k_ij is
/// read from one support position of A_k and the identity
/// A_i A_j = Σ_k p^k_ij A_k is validated entrywise.
pub fn intersection_numbers(
    scheme: &AssociationScheme,
) -> Result<IntersectionTensor, SchemeError> {
    let d1 = scheme.class_count() + 1;
    let n = scheme.vertex_count();
    let supports: Vec<(usize, usize)> = scheme
        .classes()
        .iter()
        .map(|c| c.first_support().expect("scheme classes are nonempty"))
        .collect();

    let mut p = Tensor3::new(d1);
    for i in 0..d1 {
        for j in 0..d1 {
            let prod = scheme.class(i).matmul(scheme.class(j));
            for (k, &(x, y)) in supports.iter().enumerate() {
                p[(k, i, j)] = prod[(x, y)];
            }
            // validate against the full product
            for x in 0..n {
                for y in 0..n {
                    let k = scheme.class_of_pair(x, y);
                    if prod[(x, y)] != p[(k, i, j)] {
                        return Err(SchemeError::ProductNotInSpan { i, j });
                    }
                }
            }
        }
    }
    Ok(IntersectionTensor { p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{build_johnson, AssociationScheme, ClassMatrix};
    use crate::matrix::IntMatrix;

    fn complete_scheme(n: usize) -> AssociationScheme {
        let i = ClassMatrix::new(IntMatrix::identity(n)).unwrap();
        let a = ClassMatrix::new(IntMatrix::from_fn(n, n, |r, c| i64::from(r != c))).unwrap();
        AssociationScheme::from_classes(vec![i, a]).unwrap()
    }

    #[test]
    fn complete_graph_constants() {
        // (J-I)^2 = (n-1) I + (n-2)(J-I)
        for n in [2, 3, 5, 8] {
            let t = intersection_numbers(&complete_scheme(n)).unwrap();
            assert_eq!(t.p[(0, 1, 1)], (n - 1) as i64);
            assert_eq!(t.p[(1, 1, 1)], (n - 2) as i64);
        }
    }

    #[test]
    fn unit_class_acts_as_delta() {
        let scheme = build_johnson(5, 2).unwrap();
        let t = intersection_numbers(&scheme).unwrap();
        let d1 = t.dim();
        for k in 0..d1 {
            for j in 0..d1 {
                assert_eq!(t.p[(k, 0, j)], i64::from(k == j));
                assert_eq!(t.p[(k, j, 0)], i64::from(k == j));
            }
        }
    }

    #[test]
    fn johnson_5_2_values() {
        let t = intersection_numbers(&build_johnson(5, 2).unwrap()).unwrap();
        assert_eq!(t.p[(1, 1, 1)], 3);
        assert_eq!(t.p[(2, 1, 1)], 4);
    }

    #[test]
    fn valency_sum_rule() {
        // Σ_k p^k_ij k_k = k_i k_j
        for scheme in [build_johnson(5, 2).unwrap(), build_johnson(6, 3).unwrap()] {
            let t = intersection_numbers(&scheme).unwrap();
            let ks = scheme.valencies();
            let d1 = t.dim();
            for i in 0..d1 {
                for j in 0..d1 {
                    let lhs: i64 = (0..d1).map(|k| t.p[(k, i, j)] * ks[k]).sum();
                    assert_eq!(lhs, ks[i] * ks[j]);
                }
            }
        }
    }
}
