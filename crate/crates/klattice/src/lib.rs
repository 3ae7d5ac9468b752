//! Lattices of bounded partitions with their cores, affine words, alcove
//! geometry, and cyclic symmetries.

pub mod affine;
pub mod checks;
pub mod cores;
pub mod error;
pub mod geometry;
pub mod lattice;
pub mod nilcoxeter;
pub mod partition;
pub mod symmetry;

pub use cores::Core;
pub use error::{Error, Result};
pub use partition::Partition;
