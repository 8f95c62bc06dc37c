//! Exact computational engine for wreath products Γ ≀ S_n: class functions,
//! the multi-alphabet Fock space, lattice vertex operators, character tables,
//! and the McKay correspondence for finite subgroups of SU(2).

#![allow(clippy::needless_range_loop)]

pub mod chartable;
pub mod error;
pub mod fock;
pub mod forms;
pub mod group;
pub mod lattice;
pub mod linalg;
pub mod mckay;
pub mod partitions;
pub mod scalar;
pub mod symfun;
pub mod verify;
pub mod vertex;
pub mod wreath;

pub use error::Error;
pub use scalar::{Cyclo, Rational};
