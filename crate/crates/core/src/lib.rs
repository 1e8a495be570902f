//! Pomset block metric spaces over `Z_m` and exhaustive analysis of block
//! codes under that metric.
//!
//! Labels (blocks) are zero-based throughout the Rust API; JSON documents
//! and `Display` output use one-based labels.

pub mod chain;
pub mod code;
pub mod error;
pub mod mset;
pub mod oracle;
pub mod pomset;
pub mod space;
pub mod verify;

pub use chain::ChainContext;
pub use code::{BlockCode, CodeJson, Combine, SingletonReport, Systematic};
pub use error::{Error, ErrorKind, Result};
pub use mset::Mset;
pub use pomset::{Ideal, IdealFilter, Pomset};
pub use space::{lee_weight, BlockVector, ConfigJson, SpaceConfig, DEFAULT_MAX_SPACE};
