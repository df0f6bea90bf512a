use thiserror::Error;

use crate::time::Time;

/// Errors produced while building, transforming or serializing streams.
#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop link on node {label:?}")]
    SelfLoop { label: String },

    #[error("interval begins after it ends: [{begin}, {end}]")]
    InvertedInterval { begin: Time, end: Time },

    #[error("link [{begin}, {end}] lies outside the declared horizon [{horizon_begin}, {horizon_end}]")]
    OutsideHorizon {
        begin: Time,
        end: Time,
        horizon_begin: Time,
        horizon_end: Time,
    },

    #[error("timestamp arithmetic overflowed the time domain")]
    TimeOverflow,

    #[error("delta {delta} out of range [0, {max}]")]
    DeltaOutOfRange { delta: i64, max: i64 },

    #[error("shifted interval is empty: begin {begin} exceeds end {end}")]
    EmptyShiftedInterval { begin: Time, end: Time },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("instance too large for exhaustive search: {what} is {actual}, limit {limit}")]
    LimitsExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid generator parameters: {reason}")]
    InvalidParams { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
