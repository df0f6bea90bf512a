//! Link streams with durations: the data model and clique-membership
//! predicates.
//!
//! A link stream records, over a global time horizon, which unordered node
//! pairs are continuously linked over which closed intervals. Streams are
//! kept *simple*: per pair, the indexed intervals are sorted and pairwise
//! disjoint. Non-simple input is repaired during construction by merging
//! every two intervals whose closed sets intersect (including intervals that
//! touch at a single point) into their union.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::node::{pair_key, NodeId, NodeTable};
use crate::time::{Interval, Time};

/// One link: an unordered node pair active over a closed interval.
///
/// Canonical form keeps `u < v`; there is no distinction between
/// `(b, e, u, v)` and `(b, e, v, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Link {
    pub interval: Interval,
    pub u: NodeId,
    pub v: NodeId,
}

/// Simple undirected link stream with durations.
///
/// Immutable once built; all query methods take `&self` and the structure is
/// safe to share across threads.
#[derive(Debug, Clone)]
pub struct LinkStream {
    horizon: Interval,
    nodes: NodeTable,
    /// Per canonical pair, intervals sorted by begin and pairwise disjoint.
    pairs: BTreeMap<(NodeId, NodeId), Vec<Interval>>,
    link_count: usize,
}

/// Summary counters for a stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamStats {
    pub node_count: usize,
    pub link_count: usize,
    pub horizon: Interval,
    pub pair_count: usize,
    pub total_link_duration: i64,
}

impl LinkStream {
    /// Build a stream from raw `(begin, end, label_u, label_v)` links.
    ///
    /// Input need not be simple: per pair, intersecting intervals are merged
    /// into their union `(min(b, b'), max(e, e'))`. When `horizon` is omitted
    /// it is inferred as `[min begin, max end]` over the links (`[0, 0]` for
    /// an empty link set); when given, every link must lie inside it.
    pub fn build<I, S>(links: I, horizon: Option<Interval>) -> Result<Self>
    where
        I: IntoIterator<Item = (Time, Time, S, S)>,
        S: AsRef<str>,
    {
        let mut nodes = NodeTable::new();
        let mut pairs: BTreeMap<(NodeId, NodeId), Vec<Interval>> = BTreeMap::new();
        let mut seen_span: Option<(Time, Time)> = None;

        for (begin, end, lu, lv) in links {
            let (lu, lv) = (lu.as_ref(), lv.as_ref());
            if lu == lv {
                return Err(Error::SelfLoop {
                    label: lu.to_owned(),
                });
            }
            let interval = Interval::new(begin, end)?;
            if let Some(h) = horizon {
                if !h.contains_interval(interval) {
                    return Err(Error::OutsideHorizon {
                        begin,
                        end,
                        horizon_begin: h.begin(),
                        horizon_end: h.end(),
                    });
                }
            }
            seen_span = Some(match seen_span {
                None => (begin, end),
                Some((lo, hi)) => (lo.min(begin), hi.max(end)),
            });
            let key = pair_key(nodes.intern(lu), nodes.intern(lv));
            pairs.entry(key).or_default().push(interval);
        }

        let horizon = match (horizon, seen_span) {
            (Some(h), _) => h,
            (None, Some((lo, hi))) => Interval::raw(lo, hi),
            (None, None) => Interval::point(0),
        };

        let mut link_count = 0;
        for intervals in pairs.values_mut() {
            merge_in_place(intervals);
            link_count += intervals.len();
        }

        Ok(Self {
            horizon,
            nodes,
            pairs,
            link_count,
        })
    }

    /// Assemble a stream whose per-pair lists are already sorted and disjoint.
    pub(crate) fn from_sorted_parts(
        horizon: Interval,
        nodes: NodeTable,
        pairs: BTreeMap<(NodeId, NodeId), Vec<Interval>>,
    ) -> Self {
        let link_count = pairs.values().map(Vec::len).sum();
        let stream = Self {
            horizon,
            nodes,
            pairs,
            link_count,
        };
        debug_assert!(stream.check_invariants().is_ok());
        stream
    }

    pub fn horizon(&self) -> Interval {
        self.horizon
    }

    pub fn nodes(&self) -> &NodeTable {
        &self.nodes
    }

    /// Number of distinct nodes appearing in links.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of indexed links (post-merge).
    pub fn link_count(&self) -> usize {
        self.link_count
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Sorted disjoint intervals of the pair `{u, v}` (empty if never linked).
    pub fn pair_intervals(&self, u: NodeId, v: NodeId) -> &[Interval] {
        self.pairs
            .get(&pair_key(u, v))
            .map_or(&[], Vec::as_slice)
    }

    /// All pairs with at least one link, in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = ((NodeId, NodeId), &[Interval])> {
        self.pairs.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    /// All links in canonical (pair, begin) order.
    pub fn links(&self) -> impl Iterator<Item = Link> + '_ {
        self.pairs.iter().flat_map(|(&(u, v), intervals)| {
            intervals.iter().map(move |&interval| Link { interval, u, v })
        })
    }

    /// The unique indexed interval of `{u, v}` containing `q`, if any.
    ///
    /// Uniqueness holds because per-pair intervals are disjoint and `q` is
    /// nonempty. Binary search on the sorted per-pair list.
    pub fn covering_interval(&self, u: NodeId, v: NodeId, q: Interval) -> Option<Interval> {
        let intervals = self.pair_intervals(u, v);
        // Last interval starting at or before q.begin is the only candidate.
        let idx = intervals.partition_point(|iv| iv.begin() <= q.begin());
        if idx == 0 {
            return None;
        }
        let candidate = intervals[idx - 1];
        candidate.contains_interval(q).then_some(candidate)
    }

    /// Whether every pair of `nodes` has a link covering `q`.
    ///
    /// Vacuously true for fewer than two nodes; callers interested in cliques
    /// pass node sets of size two or more.
    pub fn is_clique(&self, nodes: &[NodeId], q: Interval) -> bool {
        nodes
            .iter()
            .tuple_combinations()
            .all(|(&u, &v)| self.covering_interval(u, v, q).is_some())
    }

    pub fn stats(&self) -> StreamStats {
        let total_link_duration = self
            .pairs
            .values()
            .flatten()
            .fold(0i64, |acc, iv| acc.saturating_add(iv.length()));
        StreamStats {
            node_count: self.node_count(),
            link_count: self.link_count,
            horizon: self.horizon,
            pair_count: self.pairs.len(),
            total_link_duration,
        }
    }

    /// Verify the structural invariants; used by tests and debug assertions.
    pub fn check_invariants(&self) -> Result<()> {
        let mut counted = 0;
        for (&(u, v), intervals) in &self.pairs {
            if u >= v {
                return Err(Error::InvalidParams {
                    reason: format!("pair ({u}, {v}) not in canonical order"),
                });
            }
            for &iv in intervals {
                if !self.horizon.contains_interval(iv) {
                    return Err(Error::OutsideHorizon {
                        begin: iv.begin(),
                        end: iv.end(),
                        horizon_begin: self.horizon.begin(),
                        horizon_end: self.horizon.end(),
                    });
                }
            }
            for w in intervals.windows(2) {
                // Strict disjointness: closed intervals may not even touch.
                if w[0].end() >= w[1].begin() {
                    return Err(Error::InvalidParams {
                        reason: format!("pair ({u}, {v}) intervals {} and {} not disjoint", w[0], w[1]),
                    });
                }
            }
            counted += intervals.len();
        }
        if counted != self.link_count {
            return Err(Error::InvalidParams {
                reason: format!("link count {} != indexed {}", self.link_count, counted),
            });
        }
        Ok(())
    }
}

/// Sort intervals by begin and merge every intersecting (or touching) run
/// into its union.
fn merge_in_place(intervals: &mut Vec<Interval>) {
    if intervals.len() <= 1 {
        return;
    }
    intervals.sort();
    let mut merged: Vec<Interval> = Vec::with_capacity(intervals.len());
    for &iv in intervals.iter() {
        match merged.last_mut() {
            Some(last) if iv.begin() <= last.end() => {
                *last = Interval::raw(last.begin(), last.end().max(iv.end()));
            }
            _ => merged.push(iv),
        }
    }
    *intervals = merged;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{example_stream, ids, iv};

    #[test]
    fn build_example() {
        let s = example_stream();
        assert_eq!(s.node_count(), 4);
        assert_eq!(s.link_count(), 5);
        let [a, b, c, d] = [
            s.nodes().id("a").unwrap(),
            s.nodes().id("b").unwrap(),
            s.nodes().id("c").unwrap(),
            s.nodes().id("d").unwrap(),
        ];
        assert_eq!(s.pair_intervals(a, b), &[iv(2, 10)]);
        assert_eq!(s.pair_intervals(b, c), &[iv(4, 16)]);
        assert_eq!(s.pair_intervals(a, c), &[iv(6, 12)]);
        assert_eq!(s.pair_intervals(c, d), &[iv(8, 16)]);
        assert_eq!(s.pair_intervals(b, d), &[iv(13, 17)]);
        assert_eq!(s.pair_intervals(a, d), &[] as &[Interval]);
        s.check_invariants().unwrap();
    }

    #[test]
    fn build_single_link() {
        let s = LinkStream::build([(0, 5, "a", "b")], None).unwrap();
        assert_eq!(s.node_count(), 2);
        assert_eq!(s.link_count(), 1);
        assert_eq!(s.horizon(), iv(0, 5));
        let (a, b) = (s.nodes().id("a").unwrap(), s.nodes().id("b").unwrap());
        assert_eq!(s.pair_intervals(a, b), &[iv(0, 5)]);
    }

    #[test]
    fn build_merges_touching_intervals() {
        // [0,4] and [4,9] share the point 4, hence merge; [20,25] stays apart.
        let s = LinkStream::build(
            [(0, 4, "a", "b"), (4, 9, "a", "b"), (20, 25, "a", "b")],
            None,
        )
        .unwrap();
        let (a, b) = (s.nodes().id("a").unwrap(), s.nodes().id("b").unwrap());
        assert_eq!(s.pair_intervals(a, b), &[iv(0, 9), iv(20, 25)]);
        assert_eq!(s.link_count(), 2);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            LinkStream::build([(0, 5, "a", "a")], None),
            Err(Error::SelfLoop { .. })
        ));
        assert!(matches!(
            LinkStream::build([(5, 0, "a", "b")], None),
            Err(Error::InvertedInterval { .. })
        ));
        assert!(matches!(
            LinkStream::build([(0, 25, "a", "b")], Some(iv(0, 20))),
            Err(Error::OutsideHorizon { .. })
        ));
    }

    #[test]
    fn build_is_idempotent() {
        let s = LinkStream::build(
            [(3, 7, "x", "y"), (0, 4, "x", "y"), (9, 9, "y", "z")],
            None,
        )
        .unwrap();
        let raw: Vec<(Time, Time, String, String)> = s
            .links()
            .map(|l| {
                (
                    l.interval.begin(),
                    l.interval.end(),
                    s.nodes().label(l.u).to_owned(),
                    s.nodes().label(l.v).to_owned(),
                )
            })
            .collect();
        let rebuilt = LinkStream::build(raw, Some(s.horizon())).unwrap();
        assert_eq!(rebuilt.link_count(), s.link_count());
        for ((pa, ia), (pb, ib)) in s.pairs().zip(rebuilt.pairs()) {
            assert_eq!(pa, pb);
            assert_eq!(ia, ib);
        }
    }

    #[test]
    fn covering_interval_examples() {
        let s = example_stream();
        let (a, b) = (s.nodes().id("a").unwrap(), s.nodes().id("b").unwrap());
        assert_eq!(s.covering_interval(a, b, iv(6, 10)), Some(iv(2, 10)));
        assert_eq!(s.covering_interval(a, b, iv(6, 12)), None);

        let single = LinkStream::build([(0, 5, "a", "b")], None).unwrap();
        let (a, b) = (
            single.nodes().id("a").unwrap(),
            single.nodes().id("b").unwrap(),
        );
        assert_eq!(single.covering_interval(a, b, iv(3, 3)), Some(iv(0, 5)));
    }

    #[test]
    fn covering_interval_between_links() {
        let s = LinkStream::build([(0, 4, "a", "b"), (10, 14, "a", "b")], None).unwrap();
        let (a, b) = (s.nodes().id("a").unwrap(), s.nodes().id("b").unwrap());
        assert_eq!(s.covering_interval(a, b, iv(6, 7)), None);
        assert_eq!(s.covering_interval(a, b, iv(3, 5)), None);
        assert_eq!(s.covering_interval(a, b, iv(10, 14)), Some(iv(10, 14)));
    }

    #[test]
    fn is_clique_examples() {
        let s = example_stream();
        assert!(s.is_clique(&ids(&s, &["a", "b", "c"]), iv(6, 10)));
        assert!(!s.is_clique(&ids(&s, &["a", "b", "c", "d"]), iv(8, 10)));
        assert!(s.is_clique(&ids(&s, &["b", "c"]), iv(4, 16)));
    }

    #[test]
    fn stats_examples() {
        let s = example_stream();
        let st = s.stats();
        assert_eq!(st.node_count, 4);
        assert_eq!(st.link_count, 5);
        assert_eq!(st.horizon, iv(0, 20));
        assert_eq!(st.pair_count, 5);
        assert_eq!(st.total_link_duration, 8 + 12 + 6 + 8 + 4);

        let empty = LinkStream::build(Vec::<(Time, Time, &str, &str)>::new(), Some(iv(0, 0))).unwrap();
        let st = empty.stats();
        assert_eq!(st.node_count, 0);
        assert_eq!(st.link_count, 0);

        let merged = LinkStream::build([(0, 4, "a", "b"), (4, 9, "a", "b")], None).unwrap();
        assert_eq!(merged.stats().link_count, 1);
    }
}
