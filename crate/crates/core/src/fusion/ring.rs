//! Fusion rings: nonnegative-integer structure constants N^c_ab with a
//! vacuum unit and duality.

use super::FusionError;
use crate::matrix::Tensor3;
use nalgebra::DMatrix;

/// A fusion ring over an ordered label set, label 0 being the vacuum.
/// `n[(a, b, c)]` stores N^c_ab, and `dual` is the involution with
/// N^0_{a a*} ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    labels: Vec<String>,
    n: Tensor3<u64>,
    dual: Vec<usize>,
}

impl FusionRing {
    pub fn new(
        labels: Vec<String>,
        n: Tensor3<u64>,
        dual: Vec<usize>,
    ) -> Result<Self, FusionError> {
        let rank = labels.len();
        if rank == 0 || n.dim() != rank || dual.len() != rank {
            return Err(FusionError::ShapeMismatch {
                labels: rank,
                tensor: n.dim(),
                dual: dual.len(),
            });
        }
        if let Some(&bad) = dual.iter().find(|&&d| d >= rank) {
            return Err(FusionError::BadDual(format!("dual index {bad} out of range")));
        }
        if let Some(a) = (0..rank).find(|&a| dual[dual[a]] != a) {
            return Err(FusionError::BadDual(format!("dual is not an involution at {a}")));
        }
        Ok(Self { labels, n, dual })
    }

    /// Builds the dual map from the tensor itself: a* is the unique b with
    /// N^0_ab ≥ 1.
    pub fn with_inferred_dual(labels: Vec<String>, n: Tensor3<u64>) -> Result<Self, FusionError> {
        let rank = labels.len();
        let mut dual = Vec::with_capacity(rank);
        for a in 0..rank {
            let partners: Vec<usize> = (0..rank).filter(|&b| n[(a, b, 0)] >= 1).collect();
            match partners.as_slice() {
                [b] => dual.push(*b),
                _ => {
                    return Err(FusionError::BadDual(format!(
                        "label {a} has {} vacuum partners",
                        partners.len()
                    )))
                }
            }
        }
        Self::new(labels, n, dual)
    }

    /// The one-label ring {1}.
    pub fn trivial() -> Self {
        let mut n = Tensor3::new(1);
        n[(0, 0, 0)] = 1;
        Self { labels: vec!["1".to_string()], n, dual: vec![0] }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize, FusionError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| FusionError::LabelNotFound(label.to_string()))
    }

    pub fn tensor(&self) -> &Tensor3<u64> {
        &self.n
    }

    pub fn n(&self, a: usize, b: usize, c: usize) -> u64 {
        self.n[(a, b, c)]
    }

    pub fn dual(&self) -> &[usize] {
        &self.dual
    }

    /// The fusion matrix N_a with entries (N_a)[b][c] = N^c_ab.
    pub fn fusion_matrix(&self, a: usize) -> DMatrix<f64> {
        let r = self.rank();
        DMatrix::from_fn(r, r, |b, c| self.n[(a, b, c)] as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionCheck {
    pub passed: bool,
    /// indices of the first counterexample, axiom-specific
    pub counterexample: Option<Vec<usize>>,
}

impl FusionCheck {
    fn pass() -> Self {
        Self { passed: true, counterexample: None }
    }

    fn fail(idx: Vec<usize>) -> Self {
        Self { passed: false, counterexample: Some(idx) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionReport {
    pub unit: FusionCheck,
    pub associativity: FusionCheck,
    pub duality: FusionCheck,
    /// measured, not required
    pub commutative: bool,
}

impl FusionReport {
    pub fn all_passed(&self) -> bool {
        self.unit.passed && self.associativity.passed && self.duality.passed
    }
}

/// Checks the ring axioms exactly in integer arithmetic.
pub fn verify_fusion_ring(ring: &FusionRing) -> FusionReport {
    let r = ring.rank();

    let mut unit = FusionCheck::pass();
    'unit: for b in 0..r {
        for c in 0..r {
            let expect = u64::from(b == c);
            if ring.n(0, b, c) != expect {
                unit = FusionCheck::fail(vec![0, b, c]);
                break 'unit;
            }
            if ring.n(b, 0, c) != u64::from(b == c) {
                unit = FusionCheck::fail(vec![b, 0, c]);
                break 'unit;
            }
        }
    }

    let mut associativity = FusionCheck::pass();
    'assoc: for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                for d in 0..r {
                    let lhs: u64 = (0..r).map(|e| ring.n(a, b, e) * ring.n(e, c, d)).sum();
                    let rhs: u64 = (0..r).map(|f| ring.n(b, c, f) * ring.n(a, f, d)).sum();
                    if lhs != rhs {
                        associativity = FusionCheck::fail(vec![a, b, c, d]);
                        break 'assoc;
                    }
                }
            }
        }
    }

    let mut duality = FusionCheck::pass();
    'dual: for a in 0..r {
        for b in 0..r {
            let expect = u64::from(b == ring.dual()[a]);
            if ring.n(a, b, 0) != expect {
                duality = FusionCheck::fail(vec![a, b, 0]);
                break 'dual;
            }
        }
    }

    let commutative = (0..r).all(|a| {
        (0..r).all(|b| (0..r).all(|c| ring.n(a, b, c) == ring.n(b, a, c)))
    });

    FusionReport { unit, associativity, duality, commutative }
}

/// Quantum dimensions: d_a is the Perron-Frobenius eigenvalue of the
/// fusion matrix N_a.
///
/// All N_a share the positive Perron vector (d_0, …, d_{r−1}) with
/// N_a·d = d_a·d; that vector is the Perron vector of M = Σ_a N_a, found
/// here by power iteration on M + I (strictly positive diagonal, so no
/// periodicity). The result is validated against d_a·d_b = Σ_c N^c_ab·d_c
/// within 1e-12; a reducible or degenerate tensor fails the validation and
/// is reported rather than guessed.
pub fn quantum_dimensions(ring: &FusionRing) -> Result<Vec<f64>, FusionError> {
    let r = ring.rank();
    let mut m = DMatrix::<f64>::identity(r, r);
    for a in 0..r {
        m += ring.fusion_matrix(a);
    }
    let mut v = DMatrix::<f64>::from_element(r, 1, 1.0);
    for _ in 0..20_000 {
        let next = &m * &v;
        let scaled = &next / next[(0, 0)];
        let delta = (&scaled - &v).abs().max();
        v = scaled;
        if delta < 1e-15 {
            break;
        }
    }
    // v is normalized with v[0] = 1, so d_a = (N_a v)[0]
    let dims: Vec<f64> = (0..r).map(|a| (ring.fusion_matrix(a) * &v)[(0, 0)]).collect();

    let mut max_dev: f64 = 0.0;
    for a in 0..r {
        for b in 0..r {
            let rhs: f64 = (0..r).map(|c| ring.n(a, b, c) as f64 * dims[c]).sum();
            max_dev = max_dev.max((dims[a] * dims[b] - rhs).abs());
        }
    }
    if max_dev > 1e-12 {
        return Err(FusionError::DegenerateDimensions { max_dev });
    }
    Ok(dims)
}

/// n-fold fusion power of a label, as exact multiplicities per label.
pub fn fusion_power(
    ring: &FusionRing,
    label: usize,
    n: usize,
) -> Result<Vec<u64>, FusionError> {
    if label >= ring.rank() {
        return Err(FusionError::LabelNotFound(format!("index {label}")));
    }
    if n == 0 {
        return Err(FusionError::BadPower);
    }
    let r = ring.rank();
    let mut mult = vec![0u64; r];
    mult[label] = 1;
    for _ in 1..n {
        let mut next = vec![0u64; r];
        for e in 0..r {
            if mult[e] == 0 {
                continue;
            }
            for c in 0..r {
                let add = mult[e]
                    .checked_mul(ring.n(e, label, c))
                    .ok_or(FusionError::Overflow)?;
                next[c] = next[c].checked_add(add).ok_or(FusionError::Overflow)?;
            }
        }
        mult = next;
    }
    Ok(mult)
}

/// The space of left-associated fusion trees taking `inputs` to `total`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionTreeSpace {
    pub inputs: Vec<usize>,
    pub total: usize,
    pub dimension: u64,
    /// free internal charges e_1..e_{n−2} with the multiplicity product of
    /// the tree (the final fusion into `total` is not free)
    pub basis: Vec<(Vec<usize>, u64)>,
}

pub fn fusion_tree_space(
    ring: &FusionRing,
    inputs: &[usize],
    total: usize,
) -> Result<FusionTreeSpace, FusionError> {
    if total >= ring.rank() {
        return Err(FusionError::LabelNotFound(format!("index {total}")));
    }
    if inputs.is_empty() {
        return Err(FusionError::EmptyInputs);
    }
    if let Some(&bad) = inputs.iter().find(|&&l| l >= ring.rank()) {
        return Err(FusionError::LabelNotFound(format!("index {bad}")));
    }

    let mut basis = Vec::new();
    let mut stack = vec![(1usize, inputs[0], 1u64, Vec::<usize>::new())];
    while let Some((idx, charge, mult, internal)) = stack.pop() {
        if idx == inputs.len() {
            if charge == total {
                basis.push((internal, mult));
            }
            continue;
        }
        for next in 0..ring.rank() {
            let m = ring.n(charge, inputs[idx], next);
            if m == 0 {
                continue;
            }
            let mult = mult.checked_mul(m).ok_or(FusionError::Overflow)?;
            let mut internal = internal.clone();
            if idx < inputs.len() - 1 {
                internal.push(next);
            }
            stack.push((idx + 1, next, mult, internal));
        }
    }
    basis.sort();
    let dimension = basis.iter().map(|(_, m)| m).sum();
    Ok(FusionTreeSpace { inputs: inputs.to_vec(), total, dimension, basis })
}
