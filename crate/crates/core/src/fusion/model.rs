//! Anyon model data (S-matrix, twists, quantum dimensions) and the Ising
//! model (1, σ, ψ).

use super::ring::FusionRing;
use super::FusionError;
use crate::matrix::Tensor3;
use nalgebra::DMatrix;
use num::complex::Complex64;

/// A fusion ring with its modular-style data. The S-matrix is stored in
/// the unnormalized convention; S/D is unitary, D = √(Σ_a d_a²).
#[derive(Debug, Clone)]
pub struct AnyonModelData {
    pub ring: FusionRing,
    pub s_matrix: DMatrix<f64>,
    pub twists: Vec<Complex64>,
    pub qdims: Vec<f64>,
}

impl AnyonModelData {
    pub fn total_dimension(&self) -> f64 {
        self.qdims.iter().map(|d| d * d).sum::<f64>().sqrt()
    }
}

/// The Ising anyon model: σ×σ = 1 + ψ, σ×ψ = σ, ψ×ψ = 1, with
/// S = [[1, √2, 1], [√2, 0, −√2], [1, −√2, 1]], θ_σ = e^{iπ/8}, θ_ψ = −1.
pub fn ising_model() -> AnyonModelData {
    let labels = vec!["1".to_string(), "σ".to_string(), "ψ".to_string()];
    let (one, sigma, psi) = (0usize, 1usize, 2usize);
    let mut n = Tensor3::new(3);
    for a in 0..3 {
        n[(0, a, a)] = 1;
        n[(a, 0, a)] = 1;
    }
    n[(sigma, sigma, one)] = 1;
    n[(sigma, sigma, psi)] = 1;
    n[(sigma, psi, sigma)] = 1;
    n[(psi, sigma, sigma)] = 1;
    n[(psi, psi, one)] = 1;
    let ring = FusionRing::new(labels, n, vec![0, 1, 2]).expect("ising ring is well formed");

    let r2 = 2.0_f64.sqrt();
    let s_matrix = DMatrix::from_row_slice(3, 3, &[1.0, r2, 1.0, r2, 0.0, -r2, 1.0, -r2, 1.0]);
    let theta_sigma = Complex64::from_polar(1.0, std::f64::consts::PI / 8.0);
    let twists = vec![Complex64::new(1.0, 0.0), theta_sigma, Complex64::new(-1.0, 0.0)];
    let qdims = vec![1.0, r2, 1.0];
    AnyonModelData { ring, s_matrix, twists, qdims }
}

/// The one-anyon model over the trivial ring, S = [1].
pub fn trivial_model() -> AnyonModelData {
    AnyonModelData {
        ring: FusionRing::trivial(),
        s_matrix: DMatrix::from_row_slice(1, 1, &[1.0]),
        twists: vec![Complex64::new(1.0, 0.0)],
        qdims: vec![1.0],
    }
}

/// Verlinde consistency report: whether the S-matrix reproduces the fusion
/// tensor via N^c_ab = Σ_x S_ax S_bx S̄_cx / (D² S_0x), and whether each S
/// column is an eigenvector of every fusion matrix.
#[derive(Debug, Clone)]
pub struct VerlindeReport {
    /// max |S·Sᵀ/D² − I| entry
    pub s_unitary_deviation: f64,
    pub n_max_deviation: f64,
    pub n_reproduced: bool,
    /// (a, b, c, computed, expected) for the first entry off by > 1e-9
    pub first_mismatch: Option<(usize, usize, usize, f64, u64)>,
    pub eigenvector_max_deviation: f64,
    pub eigenvectors_ok: bool,
}

impl VerlindeReport {
    pub fn passed(&self) -> bool {
        self.n_reproduced && self.eigenvectors_ok
    }
}

pub fn verlinde_check(model: &AnyonModelData) -> Result<VerlindeReport, FusionError> {
    let r = model.ring.rank();
    let s = &model.s_matrix;
    let d_total = model.total_dimension();
    let d_sq = d_total * d_total;

    let ss_t = s * s.transpose() / d_sq;
    let s_unitary_deviation = (ss_t - DMatrix::<f64>::identity(r, r))
        .iter()
        .fold(0.0f64, |acc, x| acc.max(x.abs()));

    for x in 0..r {
        if s[(0, x)].abs() < 1e-12 {
            return Err(FusionError::VanishingVacuumEntry(x));
        }
    }

    let mut n_max_deviation: f64 = 0.0;
    let mut first_mismatch = None;
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let computed: f64 = (0..r)
                    .map(|x| s[(a, x)] * s[(b, x)] * s[(c, x)] / (d_sq * s[(0, x)]))
                    .sum();
                let expected = model.ring.n(a, b, c);
                let dev = (computed - expected as f64).abs();
                n_max_deviation = n_max_deviation.max(dev);
                if dev > 1e-9 && first_mismatch.is_none() {
                    first_mismatch = Some((a, b, c, computed, expected));
                }
            }
        }
    }

    let mut eigenvector_max_deviation: f64 = 0.0;
    for a in 0..r {
        let n_a = model.ring.fusion_matrix(a);
        for x in 0..r {
            let col = s.column(x);
            let image = &n_a * col;
            let eigenvalue = s[(a, x)] / s[(0, x)];
            for i in 0..r {
                eigenvector_max_deviation =
                    eigenvector_max_deviation.max((image[i] - eigenvalue * col[i]).abs());
            }
        }
    }

    Ok(VerlindeReport {
        s_unitary_deviation,
        n_max_deviation,
        n_reproduced: first_mismatch.is_none(),
        first_mismatch,
        eigenvector_max_deviation,
        eigenvectors_ok: eigenvector_max_deviation <= 1e-9,
    })
}

/// The paper's qutrit encoding in six σ anyons: three σ-pair charges
/// (x_1, x_2, x_3) with x_1 × x_2 × x_3 containing the vacuum.
/// Returns the three encoded states |0⟩, |1⟩, |2⟩ as pair-charge triples
/// (indices into the Ising labels).
pub fn ising_qutrit_states() -> [[usize; 3]; 3] {
    let (one, psi) = (0, 2);
    [[one, one, one], [one, psi, psi], [psi, psi, one]]
}
