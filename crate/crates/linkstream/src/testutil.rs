//! Shared fixtures for the unit tests.

use crate::clique::Clique;
use crate::node::NodeId;
use crate::stream::LinkStream;
use crate::time::{Interval, Time};

pub(crate) fn iv(b: Time, e: Time) -> Interval {
    Interval::new(b, e).unwrap()
}

/// The running four-node example: horizon [0, 20], five links.
pub(crate) fn example_stream() -> LinkStream {
    LinkStream::build(
        [
            (2, 10, "a", "b"),
            (4, 16, "b", "c"),
            (6, 12, "a", "c"),
            (8, 16, "c", "d"),
            (13, 17, "b", "d"),
        ],
        Some(iv(0, 20)),
    )
    .unwrap()
}

pub(crate) fn ids(stream: &LinkStream, labels: &[&str]) -> Vec<NodeId> {
    labels
        .iter()
        .map(|l| stream.nodes().id(l).unwrap())
        .collect()
}

pub(crate) fn clique(stream: &LinkStream, labels: &[&str], b: Time, e: Time) -> Clique {
    Clique::new(ids(stream, labels), iv(b, e))
}
