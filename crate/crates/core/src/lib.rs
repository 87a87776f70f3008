pub mod error;
pub mod graph;
pub mod classify;
pub mod cutideal;
pub mod poly;
pub mod polytope;

pub use error::{Error, Result};
