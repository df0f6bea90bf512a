//! Analysis of link streams: sequences of node interactions over time.
//!
//! A link stream records, over a time horizon `[α, ω]`, which pairs of
//! nodes are linked during which closed intervals. A clique is a node set
//! together with an interval on which all its pairs are continuously
//! linked; this crate enumerates all maximal such cliques. For streams of
//! instantaneous contacts it also computes maximal Δ-cliques (node sets
//! whose pairs all interact at least every `Δ` time units across an
//! interval) by reducing them to the duration case.
//!
//! The main entry points are [`LinkStream::build`], [`InstantStream::build`],
//! [`enumerate_maximal_cliques`] and [`enumerate_maximal_delta_cliques`].
//! The [`oracle`] module has brute-force counterparts used for randomized
//! cross-checking, and [`io`] covers the text formats and random instance
//! generation.

mod clique;
mod enumerate;
mod error;
mod instant;
mod node;
mod stream;
mod time;
mod transform;

pub mod io;
pub mod oracle;

#[cfg(test)]
mod testutil;

pub use clique::Clique;
pub use enumerate::{
    enumerate_from, enumerate_maximal_cliques, enumerate_maximal_cliques_ordered,
    init_candidates, node_extensions, right_extension_bound, EnumState, WorkOrder,
};
pub use error::{Error, Result};
pub use instant::{Delta, InstantStream};
pub use node::{NodeId, NodeTable};
pub use stream::{Link, LinkStream, StreamStats};
pub use time::{checked_shift, Interval, Time};
pub use transform::{
    enumerate_maximal_delta_cliques, pair_availability, shift_clique, transform, ShiftDirection,
};
