//! Companion crate to `ll-core`: analytic oracles, flat-space
//! Levy-Leblond checks, the Crank-Nicolson Schrödinger-limit solver, file
//! formats and the verification suites behind the `ll-cli` binary.

// Indexed loops mirror the tensor index notation; `!(x > 0)` guards reject NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod config;
pub mod csvio;
pub mod flat;
pub mod report;
pub mod solver;
pub mod suites;
