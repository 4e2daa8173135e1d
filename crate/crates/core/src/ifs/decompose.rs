//! Quantum decomposition A = B⁺ + B⁻ + B∘ (+ residual) by stratum shift.

use super::graph::Graph;
use super::stratify::Stratification;
use super::IfsError;
use crate::matrix::IntMatrix;

/// The adjacency matrix split by how an edge moves between strata: entry
/// A[x][y] lands in `raising` when stratum(x) = stratum(y) + 1, in
/// `lowering` for −1, in `diagonal` for 0, and in `residual` otherwise.
/// Distance stratifications always have zero residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumDecomposition {
    pub raising: IntMatrix,
    pub lowering: IntMatrix,
    pub diagonal: IntMatrix,
    pub residual: IntMatrix,
}

impl QuantumDecomposition {
    /// Exact reassembly B⁺ + B⁻ + B∘ + residual.
    pub fn reassemble(&self) -> IntMatrix {
        self.raising.add(&self.lowering).add(&self.diagonal).add(&self.residual)
    }
}

pub fn quantum_decompose(
    graph: &Graph,
    strat: &Stratification,
) -> Result<QuantumDecomposition, IfsError> {
    let n = graph.vertex_count();
    if strat.stratum_of.len() != n {
        return Err(IfsError::InconsistentStratification(
            "stratification covers a different vertex count".into(),
        ));
    }
    let a = graph.adjacency();
    let mut raising = IntMatrix::zeros(n, n);
    let mut lowering = IntMatrix::zeros(n, n);
    let mut diagonal = IntMatrix::zeros(n, n);
    let mut residual = IntMatrix::zeros(n, n);
    for x in 0..n {
        for y in 0..n {
            if a[(x, y)] == 0 {
                continue;
            }
            match (strat.stratum_of[x], strat.stratum_of[y]) {
                (Some(sx), Some(sy)) => {
                    let target = match sx as i64 - sy as i64 {
                        1 => &mut raising,
                        -1 => &mut lowering,
                        0 => &mut diagonal,
                        _ => &mut residual,
                    };
                    target[(x, y)] = 1;
                }
                // edges touching unreachable vertices cannot occur for a
                // stratification of this graph
                _ => {
                    return Err(IfsError::InconsistentStratification(format!(
                        "edge ({x}, {y}) touches a vertex outside the stratification"
                    )))
                }
            }
        }
    }
    Ok(QuantumDecomposition { raising, lowering, diagonal, residual })
}
