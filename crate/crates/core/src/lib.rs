//! Partition of the n-variable Boolean functions into `2^(n+1)` classes of
//! equal size, each holding exactly one affine function.
//!
//! A class is identified by the function's bits at `n + 1` fixed truth-table
//! positions. The crate provides the truth-table primitives, both partition
//! constructions, Hamming-distance sub-classes, XOR and carry-value tables,
//! CSV/JSON exchange formats and embedded reference data.

pub mod analysis;
pub mod anf;
mod bits;
pub mod classifier;
pub mod config;
pub mod error;
pub mod format;
pub mod golden;
pub mod truth_table;
pub mod verify;

pub use anf::AnfPolynomial;
pub use classifier::{classify, ClassIndex, ClassPartition, FixedPositions, Signature};
pub use config::{Limits, OutputFormat, RunConfig};
pub use error::{Error, Result};
pub use truth_table::{AffineSpec, CarryValue, TruthTable};
