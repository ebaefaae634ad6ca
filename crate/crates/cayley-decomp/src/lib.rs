//! Cayley graphs of finite groups and finite commutative rings: homogeneous
//! sets, primality tests, wreath-product decompositions with certified
//! isomorphisms, and the ring-theoretic primality criteria (Paley and unitary
//! graphs included), with brute-force oracles cross-checking every fast path
//! at desk scale.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod graph;
pub mod group;
pub mod oracle;
pub mod ring;
pub mod ring_graphs;
pub mod spectral;

pub use error::{Error, Result};
