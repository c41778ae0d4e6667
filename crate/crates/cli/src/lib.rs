//! Session files, bundled fixtures and the `cotor` command dispatcher.

pub mod bundled;
pub mod commands;
pub mod report;
pub mod session;

pub use commands::{run, Outcome};
