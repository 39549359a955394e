//! Instance files, JSON reports, random fixture generation and the
//! command-line front end for `leonard-core`.

pub mod cli;
pub mod generate;
pub mod instance;
pub mod report;
