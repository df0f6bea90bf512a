//! Enumeration of all maximal cliques (on two or more nodes) of a simple
//! undirected link stream with durations.
//!
//! The search grows cliques from one trivial seed per link: `({u, v}, [b, b])`
//! for each link `(b, e, u, v)`. A work list holds cliques still to process;
//! a seen set keeps every clique pushed so far so nothing enters the work
//! list twice. Processing a clique `(X, [x, y])` tries every node extension
//! `(X ∪ {v}, [x, y])` and the right time extension `(X, [x, l])`, where `l`
//! is the smallest end among the links covering `[x, y]` on pairs of `X`.
//! A clique with no extension of either kind is maximal. Extending the
//! interval to the left is never needed: every clique in the work list
//! starts at the begin of some link, so its interval cannot grow leftwards.
//!
//! The work list may be consumed in LIFO or FIFO order; the result set is
//! the same either way.

use std::collections::{HashSet, VecDeque};

use itertools::Itertools;

use crate::clique::Clique;
use crate::stream::LinkStream;
use crate::time::{Interval, Time};

/// Order in which the candidate work list is consumed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WorkOrder {
    /// Depth-first; keeps the work list small.
    #[default]
    Lifo,
    /// Breadth-first.
    Fifo,
}

/// Mutable state of one enumeration run.
#[derive(Debug, Clone, Default)]
pub struct EnumState {
    /// Work list of cliques still to process.
    pub candidates: VecDeque<Clique>,
    /// Every clique ever pushed to the work list.
    pub seen: HashSet<Clique>,
    /// Maximal cliques found so far.
    pub results: Vec<Clique>,
}

impl EnumState {
    fn push(&mut self, clique: Clique) {
        // Work-list entries are always mirrored in `seen`.
        self.candidates.push_back(clique.clone());
        self.seen.insert(clique);
    }

    fn pop(&mut self, order: WorkOrder) -> Option<Clique> {
        match order {
            WorkOrder::Lifo => self.candidates.pop_back(),
            WorkOrder::Fifo => self.candidates.pop_front(),
        }
    }
}

/// Seed the work list with one trivial clique `({u, v}, [b, b])` per indexed
/// link. Single-node cliques are never considered.
pub fn init_candidates(stream: &LinkStream) -> EnumState {
    let mut state = EnumState::default();
    for link in stream.links() {
        state.push(Clique::new(
            vec![link.u, link.v],
            Interval::point(link.interval.begin()),
        ));
    }
    state
}

/// All cliques `(X ∪ {v}, [x, y])` for nodes `v ∉ X`, in canonical node
/// order. A non-empty result means `c` is not node-maximal.
pub fn node_extensions(stream: &LinkStream, c: &Clique) -> Vec<Clique> {
    let q = c.interval();
    stream
        .nodes()
        .ids()
        .filter(|&v| !c.contains(v))
        .filter(|&v| {
            c.nodes()
                .iter()
                .all(|&u| stream.covering_interval(u, v, q).is_some())
        })
        .map(|v| c.with_node(v))
        .collect()
}

/// The largest `l` such that `(X, [x, l])` is still a clique: the minimum,
/// over pairs of `X`, of the end of the link covering `[x, y]`.
///
/// Panics if `c` is not a clique of `stream`; callers only reach this with
/// cliques taken from the work list.
pub fn right_extension_bound(stream: &LinkStream, c: &Clique) -> Time {
    let q = c.interval();
    c.nodes()
        .iter()
        .tuple_combinations()
        .map(|(&u, &v)| {
            stream
                .covering_interval(u, v, q)
                .expect("right_extension_bound requires a clique")
                .end()
        })
        .min()
        .expect("cliques have at least one pair")
}

/// Run the search to exhaustion, invoking `on_maximal` for each maximal
/// clique as it is found, and return the final state (results included).
pub fn enumerate_from(
    stream: &LinkStream,
    mut state: EnumState,
    order: WorkOrder,
    mut on_maximal: impl FnMut(&Clique),
) -> EnumState {
    #[cfg(debug_assertions)]
    let mut emitted: HashSet<Clique> = HashSet::new();

    while let Some(clique) = state.pop(order) {
        let mut is_max = true;

        for extension in node_extensions(stream, &clique) {
            is_max = false;
            if !state.seen.contains(&extension) {
                state.push(extension);
            }
        }

        let bound = right_extension_bound(stream, &clique);
        if bound != clique.interval().end() {
            is_max = false;
            let extended = clique.with_interval(Interval::raw(clique.interval().begin(), bound));
            if !state.seen.contains(&extended) {
                state.push(extended);
            }
        }

        if is_max {
            #[cfg(debug_assertions)]
            debug_assert!(emitted.insert(clique.clone()), "duplicate maximal clique {clique}");
            on_maximal(&clique);
            state.results.push(clique);
        }
    }
    state
}

/// All maximal cliques of `stream` involving at least two nodes.
pub fn enumerate_maximal_cliques(stream: &LinkStream) -> Vec<Clique> {
    enumerate_maximal_cliques_ordered(stream, WorkOrder::default())
}

/// Same as [`enumerate_maximal_cliques`] with an explicit work-list order.
pub fn enumerate_maximal_cliques_ordered(stream: &LinkStream, order: WorkOrder) -> Vec<Clique> {
    enumerate_from(stream, init_candidates(stream), order, |_| {}).results
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::testutil::{clique, example_stream, iv};

    fn as_set(cliques: &[Clique]) -> BTreeSet<Clique> {
        cliques.iter().cloned().collect()
    }

    #[test]
    fn init_candidates_seeds_one_clique_per_link() {
        let s = example_stream();
        let state = init_candidates(&s);
        let expected: BTreeSet<Clique> = [
            clique(&s, &["a", "b"], 2, 2),
            clique(&s, &["b", "c"], 4, 4),
            clique(&s, &["a", "c"], 6, 6),
            clique(&s, &["c", "d"], 8, 8),
            clique(&s, &["b", "d"], 13, 13),
        ]
        .into_iter()
        .collect();
        assert_eq!(as_set(state.candidates.as_slices().0), expected);
        assert_eq!(state.seen.len(), 5);
        assert!(state.results.is_empty());
    }

    #[test]
    fn init_candidates_empty_stream() {
        let s = LinkStream::build(Vec::<(Time, Time, &str, &str)>::new(), Some(iv(0, 0))).unwrap();
        let state = init_candidates(&s);
        assert!(state.candidates.is_empty());
        assert!(state.seen.is_empty());
    }

    #[test]
    fn init_candidates_after_merge() {
        let s = LinkStream::build([(0, 4, "a", "b"), (4, 9, "a", "b")], None).unwrap();
        let state = init_candidates(&s);
        assert_eq!(
            as_set(state.candidates.as_slices().0),
            [clique(&s, &["a", "b"], 0, 0)].into_iter().collect()
        );
    }

    #[test]
    fn node_extensions_examples() {
        let s = example_stream();
        assert_eq!(
            node_extensions(&s, &clique(&s, &["a", "b"], 6, 10)),
            vec![clique(&s, &["a", "b", "c"], 6, 10)]
        );
        // d is not linked to a over [6, 10].
        assert!(node_extensions(&s, &clique(&s, &["a", "b", "c"], 6, 10)).is_empty());

        let single = LinkStream::build([(0, 5, "a", "b")], None).unwrap();
        assert!(node_extensions(&single, &clique(&single, &["a", "b"], 0, 0)).is_empty());
    }

    #[test]
    fn right_extension_bound_examples() {
        let s = example_stream();
        assert_eq!(right_extension_bound(&s, &clique(&s, &["a", "b", "c"], 6, 6)), 10);
        assert_eq!(right_extension_bound(&s, &clique(&s, &["b", "c"], 4, 4)), 16);

        let single = LinkStream::build([(0, 5, "a", "b")], None).unwrap();
        assert_eq!(right_extension_bound(&single, &clique(&single, &["a", "b"], 0, 0)), 5);
    }

    #[test]
    #[should_panic(expected = "requires a clique")]
    fn right_extension_bound_rejects_non_clique() {
        let s = example_stream();
        // (a, d) never link, so {a, d} is not a clique over any interval.
        right_extension_bound(&s, &clique(&s, &["a", "d"], 6, 6));
    }

    #[test]
    fn enumerate_example_stream() {
        let s = example_stream();
        let expected: BTreeSet<Clique> = [
            clique(&s, &["a", "b", "c"], 6, 10),
            clique(&s, &["b", "c", "d"], 13, 16),
            clique(&s, &["a", "b"], 2, 10),
            clique(&s, &["b", "c"], 4, 16),
            clique(&s, &["a", "c"], 6, 12),
            clique(&s, &["c", "d"], 8, 16),
            clique(&s, &["b", "d"], 13, 17),
        ]
        .into_iter()
        .collect();
        assert_eq!(as_set(&enumerate_maximal_cliques(&s)), expected);
    }

    #[test]
    fn enumerate_single_link() {
        let s = LinkStream::build([(0, 5, "a", "b")], None).unwrap();
        assert_eq!(
            as_set(&enumerate_maximal_cliques(&s)),
            [clique(&s, &["a", "b"], 0, 5)].into_iter().collect()
        );
    }

    #[test]
    fn enumerate_triangle_dominates_pairs() {
        let s = LinkStream::build(
            [(0, 10, "a", "b"), (0, 10, "b", "c"), (0, 10, "a", "c")],
            None,
        )
        .unwrap();
        assert_eq!(
            as_set(&enumerate_maximal_cliques(&s)),
            [clique(&s, &["a", "b", "c"], 0, 10)].into_iter().collect()
        );
    }

    #[test]
    fn lifo_and_fifo_agree() {
        let s = example_stream();
        assert_eq!(
            as_set(&enumerate_maximal_cliques_ordered(&s, WorkOrder::Lifo)),
            as_set(&enumerate_maximal_cliques_ordered(&s, WorkOrder::Fifo)),
        );
    }

    #[test]
    fn every_seen_clique_starts_at_a_link_begin() {
        let s = example_stream();
        let state = enumerate_from(&s, init_candidates(&s), WorkOrder::Lifo, |_| {});
        let begins: BTreeSet<Time> = s.links().map(|l| l.interval.begin()).collect();
        for c in &state.seen {
            assert!(begins.contains(&c.interval().begin()), "{c} starts off-link");
        }
    }
}
