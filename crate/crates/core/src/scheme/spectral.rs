//! Primitive idempotents and Krein parameters of a commutative scheme.
//!
//! The maximal common eigenspaces of A_0..A_d are separated by spectrally
//! decomposing a single generic combination M = Σ_j c_j A_j with seeded
//! pseudo-random coefficients; a generic combination separates the common
//! eigenspaces with probability 1, and failed separations are detected and
//! retried with a fresh seed.

use super::{AssociationScheme, SchemeError};
use crate::matrix::Tensor3;
use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Knobs for the eigenspace-separation procedure.
#[derive(Debug, Clone)]
pub struct SpectralConfig {
    /// Seed for the random combination coefficients.
    pub seed: u64,
    /// Two eigenvalues of M within this distance share a cluster.
    pub cluster_tol: f64,
    /// Reseeded retries before giving up.
    pub max_attempts: usize,
    /// Tolerance for the P·Q = |X|·I and reconstruction checks.
    pub validation_tol: f64,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        Self { seed: 0xA55C, cluster_tol: 1e-8, max_attempts: 5, validation_tol: 1e-8 }
    }
}

/// The idempotent basis E_0..E_d with multiplicities and both
/// eigenmatrices: A_j = Σ_i P[i][j] E_i and E_j = (1/|X|) Σ_i Q[i][j] A_i.
#[derive(Debug, Clone)]
pub struct BoseMesnerSpectral {
    pub idempotents: Vec<DMatrix<f64>>,
    pub multiplicities: Vec<usize>,
    pub eigenmatrix_p: DMatrix<f64>,
    pub dual_eigenmatrix_q: DMatrix<f64>,
}

impl BoseMesnerSpectral {
    pub fn vertex_count(&self) -> usize {
        self.idempotents[0].nrows()
    }

    pub fn class_count(&self) -> usize {
        self.idempotents.len() - 1
    }
}

pub fn primitive_idempotents(
    scheme: &AssociationScheme,
) -> Result<BoseMesnerSpectral, SchemeError> {
    primitive_idempotents_with(scheme, &SpectralConfig::default())
}

pub fn primitive_idempotents_with(
    scheme: &AssociationScheme,
    config: &SpectralConfig,
) -> Result<BoseMesnerSpectral, SchemeError> {
    if !scheme.commutative() {
        return Err(SchemeError::NonCommutative);
    }
    if let Some(j) = (0..=scheme.class_count()).find(|&j| !scheme.class(j).is_symmetric()) {
        return Err(SchemeError::NonSymmetricClass(j));
    }

    for attempt in 0..config.max_attempts {
        let seed = config.seed.wrapping_add(attempt as u64);
        if let Some(spectral) = try_separation(scheme, seed, config) {
            return Ok(spectral);
        }
    }
    Err(SchemeError::SeparationFailed(config.max_attempts))
}

fn try_separation(
    scheme: &AssociationScheme,
    seed: u64,
    config: &SpectralConfig,
) -> Option<BoseMesnerSpectral> {
    let n = scheme.vertex_count();
    let d1 = scheme.class_count() + 1;
    let class_f64: Vec<DMatrix<f64>> =
        (0..d1).map(|j| scheme.class(j).to_f64()).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<f64> = (0..d1).map(|_| 0.5 + rng.random::<f64>()).collect();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for (c, a) in coeffs.iter().zip(&class_f64) {
        m += a * *c;
    }

    let eigen = SymmetricEigen::new(m);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eigen.eigenvalues[a].total_cmp(&eigen.eigenvalues[b]));

    // cluster eigenvalues; members of a common eigenspace coincide to
    // solver precision, well inside cluster_tol
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &idx in &order {
        match clusters.last_mut() {
            Some(cluster)
                if (eigen.eigenvalues[idx]
                    - eigen.eigenvalues[*cluster.last().unwrap()])
                .abs()
                    <= config.cluster_tol =>
            {
                cluster.push(idx);
            }
            _ => clusters.push(vec![idx]),
        }
    }
    if clusters.len() != d1 {
        return None;
    }

    let mut idempotents: Vec<DMatrix<f64>> = Vec::with_capacity(d1);
    for cluster in &clusters {
        let mut basis = DMatrix::<f64>::zeros(n, cluster.len());
        for (col, &idx) in cluster.iter().enumerate() {
            basis.set_column(col, &eigen.eigenvectors.column(idx));
        }
        idempotents.push(&basis * basis.transpose());
    }
    let mut multiplicities: Vec<usize> = clusters.iter().map(Vec::len).collect();

    // the vacuum idempotent is the one carrying the all-ones vector
    let ones = DMatrix::<f64>::from_element(n, 1, 1.0);
    let vacuum = (0..d1)
        .max_by(|&a, &b| {
            let qa = (ones.transpose() * &idempotents[a] * &ones)[(0, 0)];
            let qb = (ones.transpose() * &idempotents[b] * &ones)[(0, 0)];
            qa.total_cmp(&qb)
        })
        .unwrap();
    idempotents.swap(0, vacuum);
    multiplicities.swap(0, vacuum);
    let j_over_n = DMatrix::<f64>::from_element(n, n, 1.0 / n as f64);
    if max_abs(&(&idempotents[0] - &j_over_n)) > config.validation_tol {
        return None;
    }

    // order the rest by descending eigenvalue of A_1 (identity scheme: no rest)
    let eigval = |e: &DMatrix<f64>, mult: usize, a: &DMatrix<f64>| (a * e).trace() / mult as f64;
    if d1 > 2 {
        let mut rest: Vec<(DMatrix<f64>, usize)> =
            idempotents.drain(1..).zip(multiplicities.drain(1..)).collect();
        rest.sort_by(|x, y| {
            eigval(&y.0, y.1, &class_f64[1]).total_cmp(&eigval(&x.0, x.1, &class_f64[1]))
        });
        for (e, m) in rest {
            idempotents.push(e);
            multiplicities.push(m);
        }
    }

    // eigenmatrix P and reconstruction check A_j = Σ_i P_ij E_i
    let mut p = DMatrix::<f64>::zeros(d1, d1);
    for i in 0..d1 {
        for j in 0..d1 {
            p[(i, j)] = eigval(&idempotents[i], multiplicities[i], &class_f64[j]);
        }
    }
    for j in 0..d1 {
        let mut recon = DMatrix::<f64>::zeros(n, n);
        for i in 0..d1 {
            recon += &idempotents[i] * p[(i, j)];
        }
        if max_abs(&(recon - &class_f64[j])) > config.validation_tol {
            return None;
        }
    }

    // dual eigenmatrix read off class supports: E_j entries are constant on
    // each class and equal Q_ij / |X|
    let mut q = DMatrix::<f64>::zeros(d1, d1);
    for i in 0..d1 {
        let class = scheme.class(i);
        let valency = scheme.valencies()[i] as f64;
        for j in 0..d1 {
            let mut sum = 0.0;
            for x in 0..n {
                for y in 0..n {
                    if class[(x, y)] == 1 {
                        sum += idempotents[j][(x, y)];
                    }
                }
            }
            q[(i, j)] = sum / valency;
        }
    }
    let pq = &p * &q;
    let qp = &q * &p;
    let n_id = DMatrix::<f64>::identity(d1, d1) * n as f64;
    if max_abs(&(pq - &n_id)) > config.validation_tol * n as f64
        || max_abs(&(qp - &n_id)) > config.validation_tol * n as f64
    {
        return None;
    }

    Some(BoseMesnerSpectral {
        idempotents,
        multiplicities,
        eigenmatrix_p: p,
        dual_eigenmatrix_q: q,
    })
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |acc, &x| acc.max(x.abs()))
}

/// Krein parameters q^k_ij: E_i ∘ E_j = (1/|X|) Σ_k q^k_ij E_k.
///
/// Raw values are reported unrounded; [`KreinTensor::integrality`] gives
/// the companion view flagging entries within `integral_tol` of an
/// integer.
#[derive(Debug, Clone)]
pub struct KreinTensor {
    pub q: Tensor3<f64>,
    pub integral_tol: f64,
}

/// Rounded companion view of a Krein tensor.
#[derive(Debug, Clone)]
pub struct KreinIntegrality {
    pub rounded: Tensor3<i64>,
    pub integral: Tensor3<bool>,
    pub all_integral: bool,
    /// most negative raw entry (Krein condition wants ≥ 0)
    pub min_entry: f64,
}

impl KreinTensor {
    pub fn dim(&self) -> usize {
        self.q.dim()
    }

    pub fn integrality(&self) -> KreinIntegrality {
        let dim = self.q.dim();
        let rounded = Tensor3::from_fn(dim, |k, i, j| self.q[(k, i, j)].round() as i64);
        let integral = Tensor3::from_fn(dim, |k, i, j| {
            (self.q[(k, i, j)] - self.q[(k, i, j)].round()).abs() <= self.integral_tol
        });
        let all_integral = integral.iter_indexed().all(|(_, &f)| f);
        let min_entry = self
            .q
            .iter_indexed()
            .fold(f64::INFINITY, |acc, (_, &v)| acc.min(v));
        KreinIntegrality { rounded, integral, all_integral, min_entry }
    }
}

/// q^k_ij = |X| · tr((E_i ∘ E_j) · E_k) / m_k.
pub fn krein_parameters(spectral: &BoseMesnerSpectral) -> Result<KreinTensor, SchemeError> {
    let d1 = spectral.idempotents.len();
    let n = spectral.vertex_count();
    if let Some(k) = (0..d1).find(|&k| spectral.multiplicities[k] == 0) {
        return Err(SchemeError::ZeroRankIdempotent(k));
    }
    // idempotents are symmetric, so tr((E_i ∘ E_j) E_k) = Σ_xy E_i E_j E_k entrywise
    let q = Tensor3::from_fn(d1, |k, i, j| {
        let (ei, ej, ek) =
            (&spectral.idempotents[i], &spectral.idempotents[j], &spectral.idempotents[k]);
        let mut tr = 0.0;
        for x in 0..n {
            for y in 0..n {
                tr += ei[(x, y)] * ej[(x, y)] * ek[(x, y)];
            }
        }
        n as f64 * tr / spectral.multiplicities[k] as f64
    });
    Ok(KreinTensor { q, integral_tol: 1e-6 })
}
