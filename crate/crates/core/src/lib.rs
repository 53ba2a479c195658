pub mod error;
pub mod lattice;
pub mod number;
pub mod rootsys;
pub mod slice;

pub use error::{Error, Result};
pub mod repdim;
pub mod nilorbit;
pub mod pipeline;
pub mod cli;
