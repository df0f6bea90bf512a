//! Node identifiers and the label table mapping them to input strings.

use std::collections::HashMap;

/// Dense node index. Ids are assigned in first-appearance order while a
/// stream is built; comparisons on `NodeId` define the canonical node order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for NodeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bijective map between node labels (arbitrary input strings) and dense ids.
#[derive(Debug, Clone, Default)]
pub struct NodeTable {
    labels: Vec<String>,
    ids: HashMap<String, NodeId>,
}

impl NodeTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Id for `label`, allocating the next dense id on first sight.
    pub fn intern(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = NodeId(self.labels.len() as u32);
        self.labels.push(label.to_owned());
        self.ids.insert(label.to_owned(), id);
        id
    }

    pub fn id(&self, label: &str) -> Option<NodeId> {
        self.ids.get(label).copied()
    }

    pub fn label(&self, id: NodeId) -> &str {
        &self.labels[id.index()]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// All ids in canonical order.
    pub fn ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.labels.len() as u32).map(NodeId)
    }
}

/// Unordered node pair in canonical `(low, high)` form.
pub(crate) fn pair_key(a: NodeId, b: NodeId) -> (NodeId, NodeId) {
    debug_assert_ne!(a, b, "self-loop pair");
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}
