pub mod error;
pub mod exactmath;

pub use error::{Error, Result};
pub mod poset;
pub mod quiver;
pub mod rep;
pub mod lattice;
pub mod mobius;
pub mod finiteness;
pub mod cli;
