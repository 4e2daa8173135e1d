//! Axiom verification, exact in integer arithmetic.

use super::{ClassMatrix, SchemeError};
use crate::matrix::IntMatrix;

/// Site of the first failure of an axiom: the class pair involved and the
/// matrix entry that witnesses the violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomWitness {
    pub i: usize,
    pub j: usize,
    pub entry: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub passed: bool,
    pub witness: Option<AxiomWitness>,
}

impl AxiomCheck {
    fn pass() -> Self {
        Self { passed: true, witness: None }
    }

    fn fail(i: usize, j: usize, entry: (usize, usize)) -> Self {
        Self { passed: false, witness: Some(AxiomWitness { i, j, entry }) }
    }
}

/// One pass/fail entry per axiom, plus the measured commutativity flag.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    /// d, i.e. the list holds d+1 classes
    pub class_count: usize,
    /// axiom 1: A_0 = I
    pub identity: AxiomCheck,
    /// axiom 2: sum A_j = J
    pub partition: AxiomCheck,
    /// axiom 3: transposes stay in the set
    pub transpose_closed: AxiomCheck,
    /// axiom 4: products stay in the integer span
    pub product_closed: AxiomCheck,
    /// axiom 5 (measured, not required): all products commute
    pub commutative: bool,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.identity.passed
            && self.partition.passed
            && self.transpose_closed.passed
            && self.product_closed.passed
    }

    pub fn failure_summary(&self) -> String {
        let mut parts = Vec::new();
        for (name, check) in [
            ("identity", &self.identity),
            ("partition", &self.partition),
            ("transpose-closure", &self.transpose_closed),
            ("product-closure", &self.product_closed),
        ] {
            if !check.passed {
                let w = check.witness.as_ref().unwrap();
                parts.push(format!(
                    "{name} fails for classes ({}, {}) at entry {:?}",
                    w.i, w.j, w.entry
                ));
            }
        }
        parts.join("; ")
    }
}

/// Checks the scheme axioms on a candidate class list.
///
/// Axiom 4 is checked exactly: candidate coefficients p^k_ij are read off
/// one support position of each A_k, then A_i A_j = Σ_k p^k_ij A_k is
/// confirmed as a full integer matrix identity.
///
/// Returns an error only for malformed input (empty list, non-binary
/// entries, unequal dimensions); axiom violations land in the report.
pub fn verify_scheme(candidate: &[ClassMatrix]) -> Result<VerificationReport, SchemeError> {
    if candidate.is_empty() {
        return Err(SchemeError::EmptyClassList);
    }
    let n = candidate[0].size();
    for (idx, c) in candidate.iter().enumerate() {
        if c.size() != n {
            return Err(SchemeError::DimensionMismatch(idx, c.size(), c.size()));
        }
    }
    let d1 = candidate.len();

    // axiom 1
    let identity = {
        let id = IntMatrix::identity(n);
        match first_diff(candidate[0].matrix(), &id) {
            None => AxiomCheck::pass(),
            Some(entry) => AxiomCheck::fail(0, 0, entry),
        }
    };

    // axiom 2
    let mut sum = IntMatrix::zeros(n, n);
    for c in candidate {
        sum = sum.add(c.matrix());
    }
    let partition = match first_diff(&sum, &IntMatrix::ones(n, n)) {
        None => AxiomCheck::pass(),
        Some(entry) => AxiomCheck::fail(0, 0, entry),
    };

    // axiom 3
    let mut transpose_closed = AxiomCheck::pass();
    for (j, c) in candidate.iter().enumerate() {
        let t = c.matrix().transpose();
        if !candidate.iter().any(|other| *other.matrix() == t) {
            // witness: a position where the transpose is 1
            let entry = c
                .first_support()
                .map(|(r, c)| (c, r))
                .unwrap_or((0, 0));
            transpose_closed = AxiomCheck::fail(j, j, entry);
            break;
        }
    }

    // axiom 4 + commutativity. pair_class is only total if axiom 2 holds;
    // positions outside every class must then carry a zero product entry.
    let mut pair_class = vec![usize::MAX; n * n];
    for (idx, c) in candidate.iter().enumerate() {
        for (p, &v) in c.matrix().data().iter().enumerate() {
            if v == 1 {
                pair_class[p] = idx;
            }
        }
    }
    let supports: Vec<Option<(usize, usize)>> =
        candidate.iter().map(ClassMatrix::first_support).collect();

    let mut product_closed = AxiomCheck::pass();
    let mut commutative = true;
    let mut products: Vec<Vec<Option<IntMatrix>>> = vec![vec![None; d1]; d1];
    'outer: for i in 0..d1 {
        for j in 0..d1 {
            let prod = candidate[i].matrix().matmul(candidate[j].matrix());
            // coefficient per class from one representative position
            let mut coeff = vec![0i64; d1];
            for (k, support) in supports.iter().enumerate() {
                if let Some((x, y)) = *support {
                    coeff[k] = prod[(x, y)];
                }
            }
            for p in 0..n * n {
                let expect = match pair_class[p] {
                    usize::MAX => 0,
                    k => coeff[k],
                };
                if prod.data()[p] != expect {
                    product_closed = AxiomCheck::fail(i, j, (p / n, p % n));
                    break 'outer;
                }
            }
            products[i][j] = Some(prod);
            if i > j {
                if let (Some(a), Some(b)) = (&products[i][j], &products[j][i]) {
                    if a != b {
                        commutative = false;
                    }
                }
            }
        }
    }

    Ok(VerificationReport {
        class_count: d1 - 1,
        identity,
        partition,
        transpose_closed,
        product_closed,
        commutative,
    })
}

fn first_diff(a: &IntMatrix, b: &IntMatrix) -> Option<(usize, usize)> {
    let n = a.rows();
    (0..n * n)
        .find(|&p| a.data()[p] != b.data()[p])
        .map(|p| (p / n, p % n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;

    fn cm(rows: Vec<Vec<i64>>) -> ClassMatrix {
        ClassMatrix::new(IntMatrix::from_rows(rows)).unwrap()
    }

    #[test]
    fn single_identity_passes() {
        let report = verify_scheme(&[cm(vec![vec![1]])]).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.class_count, 0);
        assert!(report.commutative);
    }

    #[test]
    fn complete_graph_scheme_passes() {
        let n = 3;
        let i = ClassMatrix::new(IntMatrix::identity(n)).unwrap();
        let a = cm(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let report = verify_scheme(&[i, a]).unwrap();
        assert!(report.all_passed());
        assert!(report.commutative);
    }

    #[test]
    fn missing_identity_fails_axiom_one() {
        let a = cm(vec![vec![0, 1], vec![1, 0]]);
        let i = cm(vec![vec![1, 0], vec![0, 1]]);
        let report = verify_scheme(&[a, i]).unwrap();
        assert!(!report.identity.passed);
        assert_eq!(report.identity.witness.as_ref().unwrap().entry, (0, 0));
    }

    #[test]
    fn overlapping_classes_fail_partition() {
        let i = cm(vec![vec![1, 0], vec![0, 1]]);
        let j = cm(vec![vec![1, 1], vec![1, 1]]);
        let report = verify_scheme(&[i, j]).unwrap();
        assert!(!report.partition.passed);
    }

    #[test]
    fn non_binary_entry_rejected() {
        let m = IntMatrix::from_rows(vec![vec![1, 0], vec![0, 2]]);
        assert!(matches!(
            ClassMatrix::new(m),
            Err(SchemeError::NonBinaryEntry { value: 2, .. })
        ));
    }
}
