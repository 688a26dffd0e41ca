pub mod combinat;
pub mod error;

pub use error::{Error, ErrorKind, Result};
pub mod graph;
pub mod imm;
pub mod matrix;
pub mod orient;
pub mod poset;
pub mod shift;

pub use graph::Graph;
pub use matrix::IntMatrix;
