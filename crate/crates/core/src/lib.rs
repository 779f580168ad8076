//! Exact structure constants of Chevalley bases for the finite root systems.
//!
//! The pipeline is [`root_data`] (positive roots in the regular ordering),
//! [`pairs`] (special and extraspecial pairs), [`quartets`] (classification),
//! [`constants`] (recursive fill) and [`verify`] (independent oracles).

pub mod constants;
pub mod error;
pub mod export;
pub mod pairs;
pub mod quartets;
pub mod rational;
pub mod report;
pub mod root_data;
pub mod verify;

pub use constants::{compute_all_positive, n_any, ConstantMatrix, QuartetFormula, SignedRoot};
pub use error::{Error, Result};
pub use root_data::{Diagram, Kind, Root, RootSystem};
