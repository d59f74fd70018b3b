//! Harness for inverse domination experiments: per-graph reports, corpus
//! sweeps, certificate construction and random search. The `invdom` binary
//! is a thin argument parser over [`commands`].

pub mod commands;
pub mod corpus;
pub mod report;
pub mod suites;

pub use report::{analyze, Check, Checks, GraphReport};
