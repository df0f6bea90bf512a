//! Reduction of Δ-clique search on an instantaneous stream to maximal
//! clique search on a derived stream with durations.
//!
//! For an instant stream over `[α, ω]` and a parameter `Δ`, each pair's
//! availability is the union of the closed windows `[t, t + Δ]` over its
//! event times `t`. Restricting those unions to the shrunk horizon
//! `[α + Δ, ω]` yields the links of the derived stream. A set `X` is a
//! Δ-clique over `[x, y]` in the original stream exactly when it is a
//! clique over `[x + Δ, y]` in the derived one, and maximality carries over
//! both ways, so shifting intervals back by `Δ` after enumeration gives all
//! maximal Δ-cliques.

use std::collections::BTreeMap;

use crate::clique::Clique;
use crate::enumerate::enumerate_maximal_cliques;
use crate::error::{Error, Result};
use crate::instant::{Delta, InstantStream};
use crate::node::NodeId;
use crate::stream::LinkStream;
use crate::time::{checked_shift, Interval, Time};

/// The maximal intervals of `⋃ [t, t + Δ]` over the given event times,
/// which must be strictly increasing. Two windows merge exactly when the
/// next event falls at or before the end of the previous window.
pub fn pair_availability(events: &[Time], delta: Delta) -> Result<Vec<Interval>> {
    debug_assert!(events.windows(2).all(|w| w[0] < w[1]));
    let mut merged: Vec<Interval> = Vec::new();
    for &t in events {
        let window = Interval::raw(t, checked_shift(t, delta.value())?);
        match merged.last_mut() {
            Some(last) if window.begin() <= last.end() => {
                *last = Interval::raw(last.begin(), window.end());
            }
            _ => merged.push(window),
        }
    }
    Ok(merged)
}

/// Build the derived duration stream for `instant` and `delta`.
///
/// Requires `0 ≤ Δ ≤ ω − α`; the derived horizon `[α + Δ, ω]` would be
/// empty otherwise. The node table is carried over unchanged, so node ids
/// mean the same thing in both streams. Pairs whose availability misses the
/// shrunk horizon entirely contribute no links.
pub fn transform(instant: &InstantStream, delta: Delta) -> Result<LinkStream> {
    let h = instant.horizon();
    let span = h.end().checked_sub(h.begin()).ok_or(Error::TimeOverflow)?;
    if delta.value() > span {
        return Err(Error::DeltaOutOfRange { delta: delta.value(), max: span });
    }
    let horizon = Interval::raw(checked_shift(h.begin(), delta.value())?, h.end());

    let mut pairs: BTreeMap<(NodeId, NodeId), Vec<Interval>> = BTreeMap::new();
    for (key, events) in instant.pairs() {
        let clipped: Vec<Interval> = pair_availability(events, delta)?
            .into_iter()
            .filter_map(|window| window.intersection(horizon))
            .collect();
        if !clipped.is_empty() {
            pairs.insert(key, clipped);
        }
    }

    Ok(LinkStream::from_sorted_parts(horizon, instant.nodes().clone(), pairs))
}

/// Which way to move a clique's interval between the two streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftDirection {
    /// From the original stream into the derived one: `[x, y] → [x + Δ, y]`.
    ToDerived,
    /// From the derived stream back: `[x, y] → [x − Δ, y]`.
    ToOriginal,
}

/// Move a clique's interval across the reduction, keeping its node set.
///
/// Shifting towards the derived stream fails with
/// [`Error::EmptyShiftedInterval`] when the interval is shorter than `Δ`.
pub fn shift_clique(c: &Clique, delta: Delta, direction: ShiftDirection) -> Result<Clique> {
    let q = c.interval();
    let begin = match direction {
        ShiftDirection::ToDerived => checked_shift(q.begin(), delta.value())?,
        ShiftDirection::ToOriginal => checked_shift(q.begin(), -delta.value())?,
    };
    if begin > q.end() {
        return Err(Error::EmptyShiftedInterval { begin, end: q.end() });
    }
    Ok(c.with_interval(Interval::raw(begin, q.end())))
}

/// All maximal Δ-cliques (on two or more nodes) of an instantaneous stream:
/// node sets `X` with an interval `[x, y]` of length at least `Δ` such that
/// every pair of `X` interacts in every length-`Δ` sub-interval of `[x, y]`,
/// maximal under extending the node set or the interval.
pub fn enumerate_maximal_delta_cliques(
    instant: &InstantStream,
    delta: Delta,
) -> Result<Vec<Clique>> {
    let derived = transform(instant, delta)?;
    enumerate_maximal_cliques(&derived)
        .into_iter()
        .map(|c| shift_clique(&c, delta, ShiftDirection::ToOriginal))
        .collect()
}
