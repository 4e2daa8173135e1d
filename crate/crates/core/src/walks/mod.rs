//! Quantum walks: the Grover walk on the arc space of a graph, its
//! symmetric-sector reduction on homogeneous trees, and coined/split-step
//! walks on the integer line.

pub mod amplitude;
pub mod arc;
pub mod grover;
pub mod io;
pub mod line;
pub mod radial;

pub use amplitude::{Amplitude, RealParts};
pub use arc::{ArcSpace, ArcState};
pub use grover::{dense_unitary, grover_coin, grover_step, grover_walk_run, position_distribution};
pub use line::{line_walk_run, split_step_run, CoinSpec, LineState};
pub use radial::{RadialState, RadialTreeWalk};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum WalkError {
    #[error("coin degree must be at least 1")]
    ZeroDegree,
    #[error("initial state has squared norm {norm_sqr}, expected 1")]
    UnnormalizedInitial { norm_sqr: f64 },
    #[error("({from}, {to}) is not an arc of the graph")]
    ArcNotFound { from: usize, to: usize },
    #[error("amplitude vector has length {actual}, arc space has {expected}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("coin is not unitary (deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },
    #[error("{0}")]
    BadParameter(String),
}
