pub mod classes;
pub mod classical;
pub mod cli;
pub mod config;
pub mod error;
pub mod exactalg;
pub mod noncross;
pub mod partition;
pub mod rootsys;
pub mod trees;

pub use error::{Error, Result};
