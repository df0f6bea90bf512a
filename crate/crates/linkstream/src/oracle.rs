//! Exhaustive reference implementations for small instances.
//!
//! These recompute maximal cliques and maximal Δ-cliques from their
//! definitions, sharing no code with the fast enumerators, and exist to
//! cross-check them in tests and in the `check` command. Costs grow
//! exponentially in the node count, so both entry points enforce explicit
//! size limits.

use std::collections::BTreeSet;

use crate::clique::Clique;
use crate::error::{Error, Result};
use crate::instant::{Delta, InstantStream};
use crate::node::NodeId;
use crate::stream::LinkStream;
use crate::time::{Interval, Time};

/// Size caps for the exhaustive searches.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    /// Maximum number of distinct nodes.
    pub max_nodes: usize,
    /// Maximum number of links (or events, for instantaneous streams).
    pub max_links: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_nodes: 12, max_links: 64 }
    }
}

fn check_limits(limits: OracleLimits, nodes: usize, links: usize, what: &'static str) -> Result<()> {
    // Node subsets are enumerated as 32-bit masks.
    debug_assert!(limits.max_nodes <= 25, "oracle limits are not meant to scale");
    if nodes > limits.max_nodes {
        return Err(Error::LimitsExceeded {
            what: "nodes",
            actual: nodes,
            limit: limits.max_nodes,
        });
    }
    if links > limits.max_links {
        return Err(Error::LimitsExceeded { what, actual: links, limit: limits.max_links });
    }
    Ok(())
}

/// Intersection of two sorted lists of pairwise disjoint intervals.
fn intersect_lists(a: &[Interval], b: &[Interval]) -> Vec<Interval> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if let Some(overlap) = a[i].intersection(b[j]) {
            out.push(overlap);
        }
        if a[i].end() <= b[j].end() {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}

fn mask_nodes(mask: u32) -> Vec<NodeId> {
    (0..32)
        .filter(|&b| mask & (1 << b) != 0)
        .map(NodeId)
        .collect()
}

/// The maximal intervals over which every pair of `nodes` is covered by a
/// link; empty when some pair never interacts.
fn clique_intervals(stream: &LinkStream, nodes: &[NodeId]) -> Vec<Interval> {
    let mut acc = vec![stream.horizon()];
    for (k, &u) in nodes.iter().enumerate() {
        for &v in &nodes[k + 1..] {
            acc = intersect_lists(&acc, stream.pair_intervals(u, v));
            if acc.is_empty() {
                return acc;
            }
        }
    }
    acc
}

/// Brute-force enumeration of all maximal cliques on two or more nodes.
///
/// Every node subset is tried; a subset's candidate intervals are the
/// maximal intervals over which it is a clique, and a candidate survives
/// unless some strict superset is a clique over a containing interval.
pub fn oracle_maximal_cliques(stream: &LinkStream, limits: OracleLimits) -> Result<Vec<Clique>> {
    check_limits(limits, stream.node_count(), stream.link_count(), "links")?;
    let n = stream.node_count();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };

    // Candidate intervals per node subset, indexed by bitmask.
    let mut intervals: Vec<Vec<Interval>> = vec![Vec::new(); 1 << n];
    for mask in 0..=full {
        if mask.count_ones() >= 2 {
            intervals[mask as usize] = clique_intervals(stream, &mask_nodes(mask));
        }
    }

    let mut results = BTreeSet::new();
    for mask in 0..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        'candidate: for &j in &intervals[mask as usize] {
            // Walk every strict superset by extending with submasks of the
            // complement.
            let complement = full & !mask;
            let mut extra = complement;
            while extra != 0 {
                let superset = (mask | extra) as usize;
                if intervals[superset].iter().any(|&k| k.contains_interval(j)) {
                    continue 'candidate;
                }
                extra = (extra - 1) & complement;
            }
            results.insert(Clique::new(mask_nodes(mask), j));
        }
    }
    Ok(results.into_iter().collect())
}

/// Whether `(nodes, interval)` is a Δ-clique of `instant`: the interval
/// lies in the horizon, lasts at least `Δ`, and every pair of `nodes`
/// interacts in every sub-interval of duration `Δ`. Node sets of fewer than
/// two nodes are not considered cliques.
pub fn is_delta_clique(
    instant: &InstantStream,
    nodes: &[NodeId],
    interval: Interval,
    delta: Delta,
) -> bool {
    debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]), "nodes must be sorted and distinct");
    if nodes.len() < 2
        || !instant.horizon().contains_interval(interval)
        || interval.length() < delta.value()
    {
        return false;
    }
    let (x, y) = (interval.begin(), interval.end());
    let d = delta.value();
    for (k, &u) in nodes.iter().enumerate() {
        for &v in &nodes[k + 1..] {
            let events = instant.pair_events(u, v);
            let lo = events.partition_point(|&t| t < x);
            let hi = events.partition_point(|&t| t <= y);
            let inside = &events[lo..hi];
            let sub_interval_misses = match (inside.first(), inside.last()) {
                (Some(&first), Some(&last)) => {
                    first > x + d
                        || last < y - d
                        || inside.windows(2).any(|w| w[1] - w[0] > d)
                }
                _ => true,
            };
            if sub_interval_misses {
                return false;
            }
        }
    }
    true
}

/// Whether a Δ-clique can be grown in time (by one unit either way, which
/// suffices for integer event times) or by adding a node.
fn is_maximal_delta_clique(
    instant: &InstantStream,
    nodes: &[NodeId],
    interval: Interval,
    delta: Delta,
) -> bool {
    if !is_delta_clique(instant, nodes, interval, delta) {
        return false;
    }
    let h = instant.horizon();
    let (x, y) = (interval.begin(), interval.end());
    if x > h.begin() && is_delta_clique(instant, nodes, Interval::raw(x - 1, y), delta) {
        return false;
    }
    if y < h.end() && is_delta_clique(instant, nodes, Interval::raw(x, y + 1), delta) {
        return false;
    }
    for v in instant.nodes().ids() {
        if nodes.binary_search(&v).is_ok() {
            continue;
        }
        let mut grown = nodes.to_vec();
        grown.insert(grown.partition_point(|&u| u < v), v);
        if is_delta_clique(instant, &grown, interval, delta) {
            return false;
        }
    }
    true
}

fn keep_maximal_candidates(
    instant: &InstantStream,
    delta: Delta,
    nodes: &[NodeId],
    begins: &BTreeSet<Time>,
    ends: &BTreeSet<Time>,
    results: &mut BTreeSet<Clique>,
) {
    for &x in begins {
        for &y in ends.iter().filter(|&&y| y - x >= delta.value()) {
            let interval = Interval::raw(x, y);
            if is_maximal_delta_clique(instant, nodes, interval, delta) {
                results.insert(Clique::new(nodes.to_vec(), interval));
            }
        }
    }
}

/// Brute-force enumeration of all maximal Δ-cliques on two or more nodes.
///
/// For each node subset, candidate interval endpoints come from the events
/// of its own pairs: pushing an endpoint any further would leave some pair
/// without an event in the outermost length-`Δ` sub-interval, so a maximal
/// Δ-clique starts `Δ` before one of those events (or at the horizon begin)
/// and ends `Δ` after one (or at the horizon end). Every candidate is then
/// checked for Δ-cliqueness and for node and time maximality directly.
pub fn oracle_maximal_delta_cliques(
    instant: &InstantStream,
    delta: Delta,
    limits: OracleLimits,
) -> Result<Vec<Clique>> {
    check_limits(limits, instant.node_count(), instant.event_count(), "events")?;
    let h = instant.horizon();
    let n = instant.node_count();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };

    let mut results = BTreeSet::new();
    for mask in 0..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        let nodes = mask_nodes(mask);
        let mut begins: BTreeSet<Time> = BTreeSet::from([h.begin()]);
        let mut ends: BTreeSet<Time> = BTreeSet::from([h.end()]);
        let mut connected = true;
        'pairs: for (k, &u) in nodes.iter().enumerate() {
            for &v in &nodes[k + 1..] {
                let events = instant.pair_events(u, v);
                if events.is_empty() {
                    connected = false;
                    break 'pairs;
                }
                for &t in events {
                    begins.insert((t - delta.value()).max(h.begin()));
                    ends.insert((t + delta.value()).min(h.end()));
                }
            }
        }
        if connected {
            keep_maximal_candidates(instant, delta, &nodes, &begins, &ends, &mut results);
        }
    }
    Ok(results.into_iter().collect())
}

/// Like [`oracle_maximal_delta_cliques`] but trying every integer interval
/// inside the horizon. Quadratic in the horizon length; only for checking
/// the candidate derivation itself on tiny instances.
pub fn oracle_maximal_delta_cliques_exhaustive(
    instant: &InstantStream,
    delta: Delta,
    limits: OracleLimits,
) -> Result<Vec<Clique>> {
    check_limits(limits, instant.node_count(), instant.event_count(), "events")?;
    let h = instant.horizon();
    let n = instant.node_count();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let all: BTreeSet<Time> = (h.begin()..=h.end()).collect();

    let mut results = BTreeSet::new();
    for mask in 0..=full {
        if mask.count_ones() >= 2 {
            keep_maximal_candidates(instant, delta, &mask_nodes(mask), &all, &all, &mut results);
        }
    }
    Ok(results.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{clique, example_stream, ids, iv};

    fn delta(v: Time) -> Delta {
        Delta::new(v).unwrap()
    }

    #[test]
    fn intersect_lists_examples() {
        assert_eq!(
            intersect_lists(&[iv(0, 5), iv(8, 12)], &[iv(3, 9)]),
            vec![iv(3, 5), iv(8, 9)]
        );
        assert_eq!(intersect_lists(&[iv(0, 5)], &[iv(5, 9)]), vec![iv(5, 5)]);
        assert_eq!(intersect_lists(&[iv(0, 3)], &[iv(4, 9)]), Vec::<Interval>::new());
        assert_eq!(intersect_lists(&[], &[iv(0, 1)]), Vec::<Interval>::new());
    }

    #[test]
    fn clique_intervals_examples() {
        let s = example_stream();
        assert_eq!(clique_intervals(&s, &ids(&s, &["a", "b", "c"])), vec![iv(6, 10)]);
        assert_eq!(clique_intervals(&s, &ids(&s, &["a", "d"])), Vec::<Interval>::new());
        assert_eq!(clique_intervals(&s, &ids(&s, &["b", "c"])), vec![iv(4, 16)]);
    }

    #[test]
    fn oracle_cliques_example_stream() {
        let s = example_stream();
        let expected: BTreeSet<Clique> = [
            clique(&s, &["a", "b"], 2, 10),
            clique(&s, &["b", "c"], 4, 16),
            clique(&s, &["a", "c"], 6, 12),
            clique(&s, &["c", "d"], 8, 16),
            clique(&s, &["b", "d"], 13, 17),
            clique(&s, &["a", "b", "c"], 6, 10),
            clique(&s, &["b", "c", "d"], 13, 16),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Clique> = oracle_maximal_cliques(&s, OracleLimits::default())
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn oracle_cliques_disjoint_pairs() {
        let s = LinkStream::build([(0, 5, "a", "b"), (10, 15, "c", "d")], None).unwrap();
        let got = oracle_maximal_cliques(&s, OracleLimits::default()).unwrap();
        assert_eq!(
            got.into_iter().collect::<BTreeSet<_>>(),
            [clique(&s, &["a", "b"], 0, 5), clique(&s, &["c", "d"], 10, 15)]
                .into_iter()
                .collect()
        );
    }

    #[test]
    fn oracle_respects_limits() {
        let s = example_stream();
        assert!(matches!(
            oracle_maximal_cliques(&s, OracleLimits { max_nodes: 3, max_links: 64 }),
            Err(Error::LimitsExceeded { actual: 4, limit: 3, .. })
        ));
        assert!(matches!(
            oracle_maximal_cliques(&s, OracleLimits { max_nodes: 12, max_links: 4 }),
            Err(Error::LimitsExceeded { actual: 5, limit: 4, .. })
        ));
    }

    #[test]
    fn is_delta_clique_examples() {
        let s = InstantStream::build(
            [(1, "a", "b"), (3, "a", "b"), (8, "a", "b")],
            Some(iv(0, 10)),
        )
        .unwrap();
        let ab = ids_of(&s, &["a", "b"]);
        assert!(is_delta_clique(&s, &ab, iv(0, 5), delta(2)));
        assert!(is_delta_clique(&s, &ab, iv(6, 10), delta(2)));
        assert!(is_delta_clique(&s, &ab, iv(1, 3), delta(2)));
        // The gap between events 3 and 8 exceeds Δ = 2.
        assert!(!is_delta_clique(&s, &ab, iv(0, 10), delta(2)));
        assert!(!is_delta_clique(&s, &ab, iv(0, 6), delta(2)));
        // Too short, outside horizon, or below two nodes.
        assert!(!is_delta_clique(&s, &ab, iv(1, 2), delta(2)));
        assert!(!is_delta_clique(&s, &ab, iv(-1, 4), delta(2)));
        assert!(!is_delta_clique(&s, &ab[..1], iv(0, 5), delta(2)));
    }

    #[test]
    fn is_delta_clique_gap_exactly_delta() {
        let s = InstantStream::build([(0, "a", "b"), (2, "a", "b")], Some(iv(0, 2))).unwrap();
        let ab = ids_of(&s, &["a", "b"]);
        // A gap equal to Δ is fine…
        assert!(is_delta_clique(&s, &ab, iv(0, 2), delta(2)));
        // …but one unit more is not: the open slack between the events
        // contains a Δ-long sub-interval with no event.
        let s = InstantStream::build([(0, "a", "b"), (3, "a", "b")], Some(iv(0, 3))).unwrap();
        let ab = ids_of(&s, &["a", "b"]);
        assert!(!is_delta_clique(&s, &ab, iv(0, 3), delta(2)));
    }

    #[test]
    fn oracle_delta_cliques_single_pair() {
        let s = InstantStream::build(
            [(1, "a", "b"), (3, "a", "b"), (8, "a", "b")],
            Some(iv(0, 10)),
        )
        .unwrap();
        let got: BTreeSet<Clique> =
            oracle_maximal_delta_cliques(&s, delta(2), OracleLimits::default())
                .unwrap()
                .into_iter()
                .collect();
        let expected: BTreeSet<Clique> = [
            Clique::new(ids_of(&s, &["a", "b"]), iv(0, 5)),
            Clique::new(ids_of(&s, &["a", "b"]), iv(6, 10)),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn oracle_delta_matches_exhaustive_scan() {
        let s = InstantStream::build(
            [(1, "a", "b"), (4, "a", "b"), (2, "b", "c"), (5, "b", "c"), (3, "a", "c")],
            Some(iv(0, 8)),
        )
        .unwrap();
        for d in 0..=4 {
            let fast = oracle_maximal_delta_cliques(&s, delta(d), OracleLimits::default()).unwrap();
            let slow =
                oracle_maximal_delta_cliques_exhaustive(&s, delta(d), OracleLimits::default())
                    .unwrap();
            assert_eq!(fast, slow, "delta {d}");
        }
    }

    #[test]
    fn oracle_delta_respects_limits() {
        let s = InstantStream::build([(1, "a", "b")], None).unwrap();
        assert!(matches!(
            oracle_maximal_delta_cliques(&s, delta(0), OracleLimits { max_nodes: 1, max_links: 9 }),
            Err(Error::LimitsExceeded { .. })
        ));
    }

    fn ids_of(s: &InstantStream, labels: &[&str]) -> Vec<NodeId> {
        let mut v: Vec<NodeId> = labels.iter().map(|l| s.nodes().id(l).unwrap()).collect();
        v.sort_unstable();
        v
    }
}
