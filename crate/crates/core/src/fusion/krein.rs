//! Krein parameters as candidate fusion rules.
//!
//! Whether the raw q^k_ij are literally fusion multiplicities is an open
//! normalization question, so two tensors are tested for nonnegative
//! integrality: the raw one and the rescaled q̃^k_ij = q^k_ij·m_k/(m_i·m_j).
//! A ring is built (and verified) from the raw tensor when it passes; no
//! silent rescaling or rounding is applied otherwise.

use super::ring::{verify_fusion_ring, FusionReport, FusionRing};
use super::FusionError;
use crate::matrix::Tensor3;
use crate::scheme::KreinTensor;

/// Integrality verdict for one normalization of the tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralityVerdict {
    pub integral: bool,
    /// (k, i, j, value) for every entry that is not a nonnegative integer
    /// within the tolerance
    pub violations: Vec<(usize, usize, usize, f64)>,
}

fn check_integrality(values: &Tensor3<f64>, tol: f64) -> IntegralityVerdict {
    let mut violations = Vec::new();
    for ((k, i, j), &v) in values.iter_indexed() {
        let nearest = v.round();
        if (v - nearest).abs() > tol || nearest < -tol {
            violations.push((k, i, j, v));
        }
    }
    IntegralityVerdict { integral: violations.is_empty(), violations }
}

#[derive(Debug, Clone)]
pub struct KreinFusionOutcome {
    pub raw: IntegralityVerdict,
    pub rescaled: IntegralityVerdict,
    /// ring from the raw tensor (N^c_ab = q^c_ab), present when raw passes
    pub ring: Option<FusionRing>,
    /// axiom report for that ring
    pub report: Option<FusionReport>,
}

impl KreinFusionOutcome {
    pub fn accepted(&self) -> bool {
        self.raw.integral && self.report.as_ref().is_some_and(FusionReport::all_passed)
    }
}

pub fn fusion_ring_from_krein(
    krein: &KreinTensor,
    multiplicities: &[usize],
    tol: f64,
) -> Result<KreinFusionOutcome, FusionError> {
    let d1 = krein.dim();
    if multiplicities.len() != d1 {
        return Err(FusionError::KreinDimensionMismatch {
            krein: d1,
            multiplicities: multiplicities.len(),
        });
    }

    let raw = check_integrality(&krein.q, tol);

    let rescaled_values = Tensor3::from_fn(d1, |k, i, j| {
        krein.q[(k, i, j)] * multiplicities[k] as f64
            / (multiplicities[i] as f64 * multiplicities[j] as f64)
    });
    let rescaled = check_integrality(&rescaled_values, tol);

    let (ring, report) = if raw.integral {
        let n = Tensor3::from_fn(d1, |a, b, c| krein.q[(c, a, b)].round() as u64);
        let labels = (0..d1).map(|i| format!("E{i}")).collect();
        match FusionRing::with_inferred_dual(labels, n) {
            Ok(ring) => {
                let report = verify_fusion_ring(&ring);
                (Some(ring), Some(report))
            }
            Err(_) => (None, None),
        }
    } else {
        (None, None)
    };

    Ok(KreinFusionOutcome { raw, rescaled, ring, report })
}
