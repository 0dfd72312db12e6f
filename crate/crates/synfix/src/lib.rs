//! Command line and HTTP front ends for the repair workbench.

pub mod diff;
pub mod lex;
pub mod server;
pub mod workflow;
