//! Exact computations with universal characters, vertex operators on the
//! polynomial ring in two banks of variables, a two-chain phase model, and
//! MacMahon-type generating functions.

pub mod error;
pub mod macmahon;
pub mod partitions;
pub mod phase;
pub mod polyring;
pub mod report;
pub mod scalars;
pub mod symfunc;
pub mod vertex;

pub use error::{Error, Result};
