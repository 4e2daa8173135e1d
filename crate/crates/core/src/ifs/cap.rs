//! Creation/annihilation/preservation operators per scheme class:
//! a⁺_j = Σ_n P_{n+1} A_j P_n and friends, with the strata taken from the
//! scheme classes of the base row (V_n = {x : (base, x) ∈ C_n}).

use super::IfsError;
use crate::matrix::IntMatrix;
use crate::scheme::AssociationScheme;

/// The three shift components of one class matrix, plus everything the
/// shifts |s| ≥ 2 carry. The five pieces partition the entries of A_j, so
/// their sum reassembles it exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct CapOperators {
    pub raising: IntMatrix,
    pub lowering: IntMatrix,
    pub diagonal: IntMatrix,
    pub residual: IntMatrix,
    /// Frobenius norm of P_{n+s} A_j P_n summed over n, per shift |s| ≥ 2
    pub shift_residual_norms: Vec<(i64, f64)>,
}

impl CapOperators {
    pub fn reassemble(&self) -> IntMatrix {
        self.raising.add(&self.lowering).add(&self.diagonal).add(&self.residual)
    }
}

#[derive(Debug, Clone)]
pub struct CapFamily {
    pub base: usize,
    /// V_0..V_d from the scheme classes of the base row
    pub strata: Vec<Vec<usize>>,
    pub per_class: Vec<CapOperators>,
}

pub fn cap_operators(scheme: &AssociationScheme, base: usize) -> Result<CapFamily, IfsError> {
    let n = scheme.vertex_count();
    if base >= n {
        return Err(IfsError::VertexOutOfRange { vertex: base, vertex_count: n });
    }
    if !scheme.commutative() {
        return Err(IfsError::NonCommutativeScheme);
    }
    let d1 = scheme.class_count() + 1;
    let stratum_of: Vec<usize> = (0..n).map(|x| scheme.class_of_pair(base, x)).collect();
    let mut strata = vec![Vec::new(); d1];
    for (x, &s) in stratum_of.iter().enumerate() {
        strata[s].push(x);
    }

    let per_class = (0..d1)
        .map(|j| {
            let a = scheme.class(j);
            let mut raising = IntMatrix::zeros(n, n);
            let mut lowering = IntMatrix::zeros(n, n);
            let mut diagonal = IntMatrix::zeros(n, n);
            let mut residual = IntMatrix::zeros(n, n);
            let mut shift_sq: Vec<f64> = vec![0.0; 2 * d1 + 1];
            for x in 0..n {
                for y in 0..n {
                    if a[(x, y)] == 0 {
                        continue;
                    }
                    let shift = stratum_of[x] as i64 - stratum_of[y] as i64;
                    match shift {
                        1 => raising[(x, y)] = 1,
                        -1 => lowering[(x, y)] = 1,
                        0 => diagonal[(x, y)] = 1,
                        s => {
                            residual[(x, y)] = 1;
                            shift_sq[(s + d1 as i64) as usize] += 1.0;
                        }
                    }
                }
            }
            let shift_residual_norms = shift_sq
                .iter()
                .enumerate()
                .filter(|&(_, &sq)| sq > 0.0)
                .map(|(idx, &sq)| (idx as i64 - d1 as i64, sq.sqrt()))
                .collect();
            CapOperators { raising, lowering, diagonal, residual, shift_residual_norms }
        })
        .collect();

    Ok(CapFamily { base, strata, per_class })
}
