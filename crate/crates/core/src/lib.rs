//! Exact invariants of irreducible plane curve germs and separatrix families
//! of dicritical foliations.

pub mod branch;
pub mod catalog;
pub mod cli;
pub mod curvering;
pub mod dicritical;
pub mod error;
pub mod graph;
pub mod json;
pub mod kernel;
pub mod oneform;
pub mod selftest;
pub mod semiroot;

pub use error::{Error, Result};
