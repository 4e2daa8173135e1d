//! Jacobi sequences {ω_n}, {α_n} of a stratified graph and the associated
//! tridiagonal matrix.

use super::graph::Graph;
use super::stratify::Stratification;
use super::IfsError;
use serde::{Deserialize, Serialize};

/// Jacobi sequences: ω_1..ω_D (off-diagonal, nonnegative with a zero tail
/// once any ω vanishes) and α_1..α_{D+1} (diagonal).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JacobiSequences {
    pub omega: Vec<f64>,
    pub alpha: Vec<f64>,
}

impl JacobiSequences {
    /// Validates ω_n ≥ 0 and the tail condition ω_m = 0 ⇒ ω_n = 0 for n ≥ m.
    pub fn new(omega: Vec<f64>, alpha: Vec<f64>) -> Result<Self, IfsError> {
        if let Some(idx) = omega.iter().position(|&w| w < 0.0) {
            return Err(IfsError::NegativeOmega { index: idx + 1, value: omega[idx] });
        }
        if let Some(zero) = omega.iter().position(|&w| w == 0.0) {
            if let Some(bad) = (zero..omega.len()).find(|&i| omega[i] != 0.0) {
                return Err(IfsError::BrokenJacobiTail { zero_at: zero + 1, nonzero_at: bad + 1 });
            }
        }
        Ok(Self { omega, alpha })
    }
}

/// Residual diagnostics for a non-tridiagonal stratified action.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectedJacobi {
    pub sequences: JacobiSequences,
    /// per-stratum leakage norm ‖AΦ_n − (projection onto Φ_{n±1,n})‖
    pub leakage: Vec<f64>,
}

/// Reads ω_{n+1} = ⟨Φ_{n+1}, AΦ_n⟩² and α_{n+1} = ⟨Φ_n, AΦ_n⟩ from the
/// stratified adjacency action.
///
/// The action is tridiagonal exactly when, for each pair of strata at
/// distance ≤ 1, every vertex of one stratum has the same number of
/// neighbors in the other; this integer condition is checked exactly and
/// any violation fails with the offending stratum and its leakage norm.
pub fn jacobi_coefficients(
    graph: &Graph,
    strat: &Stratification,
) -> Result<JacobiSequences, IfsError> {
    let counts = StratumCounts::measure(graph, strat)?;
    if let Some((stratum, leakage)) = counts.first_violation() {
        return Err(IfsError::NotTridiagonal { stratum, leakage });
    }
    Ok(counts.sequences())
}

/// Best tridiagonal approximation regardless of leakage, with per-stratum
/// leakage norms reported instead of failing.
pub fn jacobi_coefficients_projected(
    graph: &Graph,
    strat: &Stratification,
) -> Result<ProjectedJacobi, IfsError> {
    let counts = StratumCounts::measure(graph, strat)?;
    let leakage = (0..=strat.depth()).map(|n| counts.leakage_norm(n)).collect();
    Ok(ProjectedJacobi { sequences: counts.sequences(), leakage })
}

/// Neighbor counts deg(x, V_m) for each vertex x and each stratum m at
/// distance ≤ 1 from the stratum of x. BFS strata guarantee no edges skip
/// a level, so these counts carry the whole adjacency action.
struct StratumCounts {
    /// per stratum n: (up counts into V_{n+1}, within counts, down counts)
    /// for each x ∈ V_n, in stratum order
    per_stratum: Vec<Vec<(usize, usize, usize)>>,
    sizes: Vec<usize>,
}

impl StratumCounts {
    fn measure(graph: &Graph, strat: &Stratification) -> Result<Self, IfsError> {
        if strat.stratum_of.len() != graph.vertex_count() {
            return Err(IfsError::InconsistentStratification(
                "stratification covers a different vertex count".into(),
            ));
        }
        let mut per_stratum = Vec::with_capacity(strat.strata.len());
        for (n, stratum) in strat.strata.iter().enumerate() {
            let mut counts = Vec::with_capacity(stratum.len());
            for &x in stratum {
                let (mut up, mut within, mut down) = (0, 0, 0);
                for y in graph.neighbors(x) {
                    match strat.stratum_of[y] {
                        Some(m) if m == n + 1 => up += 1,
                        Some(m) if m == n => within += 1,
                        Some(m) if m + 1 == n => down += 1,
                        _ => {
                            return Err(IfsError::InconsistentStratification(format!(
                                "edge ({x}, {y}) skips strata"
                            )))
                        }
                    }
                }
                counts.push((up, within, down));
            }
            per_stratum.push(counts);
        }
        let sizes = strat.strata.iter().map(Vec::len).collect();
        Ok(Self { per_stratum, sizes })
    }

    /// deg(x, V_toward) constant over x ∈ V_from, for |from − toward| ≤ 1.
    fn constant_toward(&self, from: usize, toward: usize) -> bool {
        let comp = |c: &(usize, usize, usize)| match toward {
            t if t == from + 1 => c.0,
            t if t == from => c.1,
            _ => c.2,
        };
        let counts = &self.per_stratum[from];
        let first = comp(&counts[0]);
        counts.iter().all(|c| comp(c) == first)
    }

    /// First n for which AΦ_n leaves span{Φ_{n−1}, Φ_n, Φ_{n+1}}, i.e. the
    /// counts toward V_n vary inside some adjacent stratum.
    fn first_violation(&self) -> Option<(usize, f64)> {
        let depth = self.sizes.len() - 1;
        for n in 0..=depth {
            let ok = (n == 0 || self.constant_toward(n - 1, n))
                && self.constant_toward(n, n)
                && (n == depth || self.constant_toward(n + 1, n));
            if !ok {
                return Some((n, self.leakage_norm(n)));
            }
        }
        None
    }

    /// ‖AΦ_n − √ω_{n+1}Φ_{n+1} − α_{n+1}Φ_n − √ω_n Φ_{n−1}‖ for the means
    /// read from this stratification.
    fn leakage_norm(&self, n: usize) -> f64 {
        let size_n = self.sizes[n] as f64;
        let mut norm_sq = 0.0;
        // AΦ_n has, at x ∈ V_m, the value deg(x, V_n)/√|V_n|; subtract the
        // projection (mean value on the stratum) and accumulate the rest
        for m in [n.wrapping_sub(1), n, n + 1] {
            if m >= self.sizes.len() {
                continue;
            }
            let toward_n = |c: &(usize, usize, usize)| match m {
                m if m == n + 1 => c.2,
                m if m == n => c.1,
                _ => c.0,
            };
            let counts = &self.per_stratum[m];
            let mean =
                counts.iter().map(|c| toward_n(c) as f64).sum::<f64>() / counts.len() as f64;
            for c in counts {
                let dev = toward_n(c) as f64 - mean;
                norm_sq += dev * dev / size_n;
            }
        }
        norm_sq.sqrt()
    }

    fn sequences(&self) -> JacobiSequences {
        let depth = self.sizes.len() - 1;
        let mut omega = Vec::with_capacity(depth);
        let mut alpha = Vec::with_capacity(depth + 1);
        for n in 0..=depth {
            let counts = &self.per_stratum[n];
            let within_total: usize = counts.iter().map(|c| c.1).sum();
            alpha.push(within_total as f64 / self.sizes[n] as f64);
            if n < depth {
                // ω_{n+1} = ⟨Φ_{n+1}, AΦ_n⟩² = e(V_n, V_{n+1})² / (|V_n||V_{n+1}|),
                // an exact ratio of integers
                let edges: usize = counts.iter().map(|c| c.0).sum();
                let e = edges as f64;
                omega.push(e * e / (self.sizes[n] as f64 * self.sizes[n + 1] as f64));
            }
        }
        JacobiSequences { omega, alpha }
    }
}

/// Symmetric tridiagonal matrix with diagonal α_1..α_depth and
/// off-diagonal √ω_1..√ω_{depth−1}.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiagonal {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = self.dim();
        let mut out = vec![0.0; n];
        for i in 0..n {
            let mut acc = self.diag[i] * v[i];
            if i > 0 {
                acc += self.off[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                acc += self.off[i] * v[i + 1];
            }
            out[i] = acc;
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.dim();
        let mut m = vec![vec![0.0; n]; n];
        for i in 0..n {
            m[i][i] = self.diag[i];
            if i + 1 < n {
                m[i][i + 1] = self.off[i];
                m[i + 1][i] = self.off[i];
            }
        }
        m
    }
}

pub fn tridiagonal_from_jacobi(
    jac: &JacobiSequences,
    depth: usize,
) -> Result<SymTridiagonal, IfsError> {
    if depth > jac.alpha.len() || depth > jac.omega.len() + 1 {
        return Err(IfsError::InsufficientDepth {
            requested: depth,
            available: jac.alpha.len().min(jac.omega.len() + 1),
        });
    }
    if let Some(idx) = jac.omega.iter().take(depth.saturating_sub(1)).position(|&w| w < 0.0) {
        return Err(IfsError::NegativeOmega { index: idx + 1, value: jac.omega[idx] });
    }
    Ok(SymTridiagonal {
        diag: jac.alpha[..depth].to_vec(),
        off: jac.omega[..depth.saturating_sub(1)].iter().map(|w| w.sqrt()).collect(),
    })
}
