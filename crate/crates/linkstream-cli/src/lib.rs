//! Implementation of the `linkstream` command-line tool.
//!
//! The binary in `main.rs` only parses arguments and wires files; the
//! randomized cross-checking and benchmarking logic lives here so tests
//! can drive it in-process.

pub mod bench;
pub mod check;
