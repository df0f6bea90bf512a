//! Cliques: a node set together with a closed time interval.

use crate::node::NodeId;
use crate::time::Interval;

/// A node set `X` (at least two nodes, strictly increasing ids) and an
/// interval over which every pair in `X` is continuously linked.
///
/// The sorted node list is the canonical form: equality and hashing treat
/// the nodes as a set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique {
    nodes: Vec<NodeId>,
    interval: Interval,
}

impl Clique {
    /// Canonicalize `nodes` (sort, drop duplicates) and attach `interval`.
    pub fn new(mut nodes: Vec<NodeId>, interval: Interval) -> Self {
        nodes.sort_unstable();
        nodes.dedup();
        debug_assert!(nodes.len() >= 2, "cliques involve at least two nodes");
        Self { nodes, interval }
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, node: NodeId) -> bool {
        self.nodes.binary_search(&node).is_ok()
    }

    /// New clique with `node` added, over the same interval.
    pub(crate) fn with_node(&self, node: NodeId) -> Self {
        debug_assert!(!self.contains(node));
        let mut nodes = Vec::with_capacity(self.nodes.len() + 1);
        let split = self.nodes.partition_point(|&n| n < node);
        nodes.extend_from_slice(&self.nodes[..split]);
        nodes.push(node);
        nodes.extend_from_slice(&self.nodes[split..]);
        Self {
            nodes,
            interval: self.interval,
        }
    }

    /// Same node set over a different interval.
    pub(crate) fn with_interval(&self, interval: Interval) -> Self {
        Self {
            nodes: self.nodes.clone(),
            interval,
        }
    }
}

impl std::fmt::Display for Clique {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({{")?;
        for (i, n) in self.nodes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}, {})", self.interval)
    }
}
