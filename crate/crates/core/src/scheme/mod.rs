//! Association schemes and their Bose-Mesner algebra.
//!
//! A scheme is a partition of X×X into 0/1 class matrices A_0..A_d with
//! A_0 = I, closed under transpose and under matrix products within their
//! span. This module builds the classical families (Johnson, Grassmann,
//! group schemes), verifies the axioms exactly in integer arithmetic, and
//! computes the structure constants in both bases: intersection numbers
//! p^k_ij (adjacency basis, exact integers) and Krein parameters q^k_ij
//! (idempotent basis, floats).

mod grassmann;
mod group;
mod intersection;
pub mod io;
mod johnson;
mod spectral;
mod verify;

pub use grassmann::build_grassmann;
pub use group::{build_group_scheme, OrbitMode};
pub use intersection::{intersection_numbers, IntersectionTensor};
pub use johnson::build_johnson;
pub use spectral::{
    krein_parameters, primitive_idempotents, primitive_idempotents_with, BoseMesnerSpectral,
    KreinTensor, SpectralConfig,
};
pub use verify::{verify_scheme, AxiomCheck, AxiomWitness, VerificationReport};

use crate::matrix::IntMatrix;
use thiserror::Error;

/// Default bound on |X|; dense |X|² storage is the limiting resource.
pub const DEFAULT_VERTEX_CAP: usize = 10_000;

#[derive(Debug, Error)]
pub enum SchemeError {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("vertex cap exceeded: {vertices} vertices > cap {cap}")]
    VertexCapExceeded { vertices: usize, cap: usize },
    #[error("unsupported field size q = {0} (supported: 2, 3)")]
    UnsupportedFieldSize(u64),
    #[error("matrix entry {value} at ({row}, {col}) of class {class} is not 0/1")]
    NonBinaryEntry { class: usize, row: usize, col: usize, value: i64 },
    #[error("class {0} has dimensions {1}x{2}; classes must be square and equal-sized")]
    DimensionMismatch(usize, usize, usize),
    #[error("empty class list")]
    EmptyClassList,
    #[error("axioms failed: {0}")]
    AxiomsFailed(String),
    #[error("product A_{i} A_{j} is not in the span of the classes")]
    ProductNotInSpan { i: usize, j: usize },
    #[error("cayley table is not a group: {0}")]
    NotAGroup(String),
    #[error("explicit orbits invalid: {0}")]
    InvalidOrbits(String),
    #[error("scheme is not commutative")]
    NonCommutative,
    #[error("scheme has a non-symmetric class ({0}); real symmetric idempotents unavailable")]
    NonSymmetricClass(usize),
    #[error("eigenspace separation failed after {0} seeded attempts")]
    SeparationFailed(usize),
    #[error("idempotent {0} has zero rank")]
    ZeroRankIdempotent(usize),
}

/// A 0/1 relation matrix, one class of a scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMatrix(IntMatrix);

impl ClassMatrix {
    /// Validates that `m` is square with entries in {0, 1}.
    pub fn new(m: IntMatrix) -> Result<Self, SchemeError> {
        Self::new_indexed(m, 0)
    }

    fn new_indexed(m: IntMatrix, class: usize) -> Result<Self, SchemeError> {
        if !m.is_square() {
            return Err(SchemeError::DimensionMismatch(class, m.rows(), m.cols()));
        }
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let v = m[(r, c)];
                if v != 0 && v != 1 {
                    return Err(SchemeError::NonBinaryEntry { class, row: r, col: c, value: v });
                }
            }
        }
        Ok(Self(m))
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    /// First (row-major) position carrying a 1, if any.
    pub fn first_support(&self) -> Option<(usize, usize)> {
        let n = self.size();
        (0..n * n).find(|&p| self.0.data()[p] == 1).map(|p| (p / n, p % n))
    }
}

/// Metadata describing which constructor produced a scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchemeFamily {
    Johnson { v: u64, k: u64 },
    Grassmann { q: u64, v: u64, dsub: u64 },
    Group { order: usize, orbit_mode: String },
}

/// A verified association scheme.
///
/// Construction through [`AssociationScheme::from_classes`] runs the full
/// axiom verification; every value of this type satisfies axioms (1)-(4),
/// and `commutative()` reports axiom (5).
#[derive(Debug, Clone)]
pub struct AssociationScheme {
    vertex_count: usize,
    classes: Vec<ClassMatrix>,
    valencies: Vec<i64>,
    commutative: bool,
    /// class index of each ordered pair, row-major
    pair_class: Vec<usize>,
    family: Option<SchemeFamily>,
}

impl AssociationScheme {
    pub fn from_classes(classes: Vec<ClassMatrix>) -> Result<Self, SchemeError> {
        Self::from_classes_with_family(classes, None)
    }

    pub(crate) fn from_classes_with_family(
        classes: Vec<ClassMatrix>,
        family: Option<SchemeFamily>,
    ) -> Result<Self, SchemeError> {
        let report = verify::verify_scheme(&classes)?;
        if !report.all_passed() {
            return Err(SchemeError::AxiomsFailed(report.failure_summary()));
        }
        let n = classes[0].size();
        let mut pair_class = vec![usize::MAX; n * n];
        for (idx, class) in classes.iter().enumerate() {
            for (p, &v) in class.matrix().data().iter().enumerate() {
                if v == 1 {
                    pair_class[p] = idx;
                }
            }
        }
        let valencies = classes.iter().map(|c| c.matrix().row_sum(0)).collect();
        Ok(Self {
            vertex_count: n,
            commutative: report.commutative,
            classes,
            valencies,
            pair_class,
            family,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of nontrivial classes d (the list has d+1 matrices).
    pub fn class_count(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn classes(&self) -> &[ClassMatrix] {
        &self.classes
    }

    pub fn class(&self, j: usize) -> &IntMatrix {
        self.classes[j].matrix()
    }

    /// Valencies k_0..k_d (constant row sums).
    pub fn valencies(&self) -> &[i64] {
        &self.valencies
    }

    pub fn commutative(&self) -> bool {
        self.commutative
    }

    pub fn family(&self) -> Option<&SchemeFamily> {
        self.family.as_ref()
    }

    /// The class index of the ordered pair (x, y).
    pub fn class_of_pair(&self, x: usize, y: usize) -> usize {
        self.pair_class[x * self.vertex_count + y]
    }

    pub fn is_symmetric(&self) -> bool {
        self.classes.iter().all(|c| c.matrix().is_symmetric())
    }
}
