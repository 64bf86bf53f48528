//! Finite p-groups given by consistent power-commutator presentations.

pub mod analysis;
pub mod bilinear;
pub mod commutators;
pub mod constructions;
pub mod error;
pub mod fp;
pub mod pc;
pub mod pcp;
pub mod report;
pub mod structure;
pub mod verifier;

pub use error::{Error, Result};
