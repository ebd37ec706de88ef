pub mod automorphisms;
pub mod chevgroup;
pub mod dsl;
pub mod error;
pub mod group;
pub mod intmatrix;
pub mod liealgebra;
pub mod matrix;
pub mod report;
pub mod rootsystem;
pub mod scalars;
pub mod torusfixed;
pub mod twisted;
pub mod verify;

pub use error::{Error, Result};
