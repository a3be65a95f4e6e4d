//! Library behind the `ohl` command: structure files, the checker
//! dispatch, demo generators and reports.

pub mod app;
pub mod bounds;
pub mod check;
pub mod codec;
pub mod demo;
pub mod error;
pub mod report;
pub mod schema;

pub use error::{CliError, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};
