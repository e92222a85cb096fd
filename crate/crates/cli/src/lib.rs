//! File formats, caching, parallel drivers and the command line for
//! [`phi_descent_core`].

pub mod acceptance;
pub mod cache;
pub mod cli;
pub mod render;
pub mod scan;

pub use cache::{ClassGroupCache, GaussCache};
pub use cli::{execute, run, Cli, CliError};
