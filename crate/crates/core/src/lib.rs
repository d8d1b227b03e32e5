//! Young tableau bijections computed on Gelfand-Tsetlin patterns, together with an
//! interpreter for cost-accounted reduction circuits between them.

pub mod bench;
pub mod bijections;
pub mod bk;
pub mod circuits;
pub mod error;
pub mod matrix;
pub mod oracles;
pub mod ops;
pub mod partition;
pub mod sample;
pub mod size;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use partition::{Partition, SkewShape, Word};
pub use tableau::Tableau;
