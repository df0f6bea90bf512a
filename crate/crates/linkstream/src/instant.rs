//! Instantaneous link streams: timestamped contacts `(t, u, v)` with no
//! duration, plus the `Δ` parameter used to turn them into durations.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::node::{pair_key, NodeId, NodeTable};
use crate::time::{Interval, Time};

/// The relaxation parameter for Δ-cliques. Always non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Delta(Time);

impl Delta {
    pub fn new(value: Time) -> Result<Self> {
        if value < 0 {
            return Err(Error::InvalidParams {
                reason: format!("delta must be non-negative, got {value}"),
            });
        }
        Ok(Delta(value))
    }

    pub fn value(self) -> Time {
        self.0
    }
}

impl std::fmt::Display for Delta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An instantaneous link stream over a time horizon `[α, ω]`.
///
/// Events are stored per unordered node pair as strictly increasing
/// timestamp lists; duplicate `(t, u, v)` records collapse.
#[derive(Debug, Clone)]
pub struct InstantStream {
    horizon: Interval,
    nodes: NodeTable,
    pairs: BTreeMap<(NodeId, NodeId), Vec<Time>>,
    event_count: usize,
}

impl InstantStream {
    /// Build a stream from `(t, u, v)` records. Node labels are interned in
    /// first-appearance order (`u` before `v` within a record). With no
    /// explicit horizon the smallest and largest timestamps are used, or
    /// `[0, 0]` when there are no records. Records outside the declared
    /// horizon and self-loops are rejected.
    pub fn build<I, S>(events: I, horizon: Option<Interval>) -> Result<Self>
    where
        I: IntoIterator<Item = (Time, S, S)>,
        S: AsRef<str>,
    {
        let mut nodes = NodeTable::default();
        let mut records: Vec<(Time, NodeId, NodeId)> = Vec::new();

        for (t, u, v) in events {
            let (u, v) = (u.as_ref(), v.as_ref());
            if u == v {
                return Err(Error::SelfLoop { label: u.to_string() });
            }
            if let Some(h) = horizon {
                if t < h.begin() || t > h.end() {
                    return Err(Error::OutsideHorizon {
                        begin: t,
                        end: t,
                        horizon_begin: h.begin(),
                        horizon_end: h.end(),
                    });
                }
            }
            let u = nodes.intern(u);
            let v = nodes.intern(v);
            records.push((t, u, v));
        }

        let horizon = match horizon {
            Some(h) => h,
            None => {
                let lo = records.iter().map(|r| r.0).min().unwrap_or(0);
                let hi = records.iter().map(|r| r.0).max().unwrap_or(0);
                Interval::new(lo, hi)?
            }
        };

        let mut pairs: BTreeMap<(NodeId, NodeId), Vec<Time>> = BTreeMap::new();
        for (t, u, v) in records {
            pairs.entry(pair_key(u, v)).or_default().push(t);
        }
        for times in pairs.values_mut() {
            times.sort_unstable();
            times.dedup();
        }
        let event_count = pairs.values().map(Vec::len).sum();

        Ok(InstantStream { horizon, nodes, pairs, event_count })
    }

    pub fn horizon(&self) -> Interval {
        self.horizon
    }

    pub fn nodes(&self) -> &NodeTable {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of distinct `(t, u, v)` events.
    pub fn event_count(&self) -> usize {
        self.event_count
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Timestamps of the pair `{u, v}`, strictly increasing. Empty if the
    /// pair never interacts.
    pub fn pair_events(&self, u: NodeId, v: NodeId) -> &[Time] {
        self.pairs
            .get(&pair_key(u, v))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Pairs with at least one event, in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = ((NodeId, NodeId), &[Time])> {
        self.pairs.iter().map(|(&k, v)| (k, v.as_slice()))
    }
}
