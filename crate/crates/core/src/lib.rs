//! Association schemes, interacting Fock spaces, quantum walks, and anyon
//! fusion rings.
//!
//! The pipeline runs in two dual directions. In the adjacency basis,
//! [`scheme`] builds association schemes and their exact intersection
//! numbers, [`ifs`] stratifies the underlying graphs into interacting Fock
//! spaces (quantum decomposition, Jacobi sequences, vacuum moments), and
//! [`walks`] evolves Grover and coined walks on them. In the idempotent
//! basis, [`scheme`] computes Krein parameters and [`fusion`] treats them
//! as candidate fusion rules of an anyon model, with the Ising system
//! (1, σ, ψ) built in.

pub mod matrix;

pub mod fusion;
pub mod ifs;
pub mod scheme;
pub mod walks;
