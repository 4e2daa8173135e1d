//! Fusion rings and anyon models: axioms, quantum dimensions, fusion
//! powers and tree spaces, Verlinde consistency, and the bridge from Krein
//! parameters to candidate fusion rules.

pub mod io;
pub mod krein;
pub mod model;
pub mod ring;

pub use krein::{fusion_ring_from_krein, IntegralityVerdict, KreinFusionOutcome};
pub use model::{
    ising_model, ising_qutrit_states, trivial_model, verlinde_check, AnyonModelData,
    VerlindeReport,
};
pub use ring::{
    fusion_power, fusion_tree_space, quantum_dimensions, verify_fusion_ring, FusionCheck,
    FusionReport, FusionRing, FusionTreeSpace,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FusionError {
    #[error("shape mismatch: {labels} labels, tensor dim {tensor}, dual len {dual}")]
    ShapeMismatch { labels: usize, tensor: usize, dual: usize },
    #[error("invalid dual map: {0}")]
    BadDual(String),
    #[error("label {0} not in the ring")]
    LabelNotFound(String),
    #[error("tensor entry {value} at {index:?} is negative")]
    NegativeEntry { index: (usize, usize, usize), value: i64 },
    #[error("ragged tensor in JSON input")]
    RaggedTensor,
    #[error("fusion multiplicities overflow u64")]
    Overflow,
    #[error("fusion power requires n >= 1")]
    BadPower,
    #[error("no tree inputs given")]
    EmptyInputs,
    #[error("quantum dimensions do not satisfy d_a·d_b = Σ N^c_ab·d_c (max deviation {max_dev:.3e})")]
    DegenerateDimensions { max_dev: f64 },
    #[error("S[0][{0}] vanishes; Verlinde formula undefined")]
    VanishingVacuumEntry(usize),
    #[error("krein tensor dim {krein} does not match {multiplicities} multiplicities")]
    KreinDimensionMismatch { krein: usize, multiplicities: usize },
}
