//! Command-line front end for the `z2z4` library: code files, report
//! rendering and the structural audit.

pub mod audit;
pub mod codefile;
pub mod commands;
pub mod reference;
