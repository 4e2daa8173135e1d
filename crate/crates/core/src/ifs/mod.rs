//! Interacting Fock spaces on stratified graphs: quantum decomposition,
//! Jacobi sequences, vacuum moments, and per-class ladder operators.

pub mod cap;
pub mod decompose;
pub mod graph;
pub mod jacobi;
pub mod moments;
pub mod stratify;

pub use cap::{cap_operators, CapFamily, CapOperators};
pub use decompose::{quantum_decompose, QuantumDecomposition};
pub use graph::{complete, cycle, path, truncated_tree, GeneratorJson, Graph, GraphJson};
pub use jacobi::{
    jacobi_coefficients, jacobi_coefficients_projected, tridiagonal_from_jacobi, JacobiSequences,
    ProjectedJacobi, SymTridiagonal,
};
pub use moments::{moments_from_jacobi, vacuum_moments, VacuumMoments};
pub use stratify::{stratify, Stratification};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum IfsError {
    #[error("empty graph")]
    EmptyGraph,
    #[error("vertex {vertex} out of range (vertex count {vertex_count})")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("bad generator: {0}")]
    BadGenerator(String),
    #[error("stratification inconsistent with graph: {0}")]
    InconsistentStratification(String),
    #[error(
        "adjacency action is not tridiagonal at stratum {stratum} (leakage norm {leakage:.6}); \
         the graph is not distance-regular around the base"
    )]
    NotTridiagonal { stratum: usize, leakage: f64 },
    #[error("omega[{index}] = {value} is negative")]
    NegativeOmega { index: usize, value: f64 },
    #[error("omega[{zero_at}] = 0 but omega[{nonzero_at}] != 0 breaks the Jacobi tail condition")]
    BrokenJacobiTail { zero_at: usize, nonzero_at: usize },
    #[error("sequences too short: need depth {requested}, have {available}")]
    InsufficientDepth { requested: usize, available: usize },
    #[error("scheme is not commutative")]
    NonCommutativeScheme,
}
