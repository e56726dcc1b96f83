use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{reverse_edge, Component, EdgeId, QuotientGraph};
use crate::term::{Perm, TypeIndex};

/// Breadth-first spanning tree of one component.
///
/// Neighbours are visited in (vertex index, relation id) order, so the tree
/// depends only on the graph and the root. `potential(v)` is the label
/// product along the tree path from the root to `v`.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    root: TypeIndex,
    parent: HashMap<TypeIndex, EdgeId>,
    potential: HashMap<TypeIndex, Perm>,
}

impl SpanningTree {
    pub fn new(g: &QuotientGraph, c: &Component, root: TypeIndex) -> Result<SpanningTree> {
        if !c.contains(root) {
            return Err(Error::VertexNotInComponent { vertex: root.0, component: c.id });
        }
        let mut parent = HashMap::new();
        let mut potential = HashMap::from([(root, Perm::identity(g.degree()))]);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &e in g.out_edges(v) {
                let edge = g.edge(e);
                if !potential.contains_key(&edge.dst) {
                    let p = potential[&v].then(&edge.perm);
                    potential.insert(edge.dst, p);
                    parent.insert(edge.dst, e);
                    queue.push_back(edge.dst);
                }
            }
        }
        debug_assert_eq!(potential.len(), c.vertex_count());
        Ok(SpanningTree { root, parent, potential })
    }

    pub fn root(&self) -> TypeIndex {
        self.root
    }

    pub fn potential(&self, v: TypeIndex) -> &Perm {
        &self.potential[&v]
    }

    pub fn is_tree_relation(&self, g: &QuotientGraph, rel: usize) -> bool {
        let e = g.edge(2 * rel);
        self.parent.get(&e.dst) == Some(&(2 * rel)) || self.parent.get(&e.src) == Some(&(2 * rel + 1))
    }

    /// Directed edges from the root down to `v`.
    pub fn path_from_root(&self, g: &QuotientGraph, v: TypeIndex) -> Vec<EdgeId> {
        let mut out = Vec::new();
        let mut here = v;
        while let Some(&e) = self.parent.get(&here) {
            out.push(e);
            here = g.edge(e).src;
        }
        out.reverse();
        out
    }

    /// Directed edges from `v` back up to the root.
    pub fn path_to_root(&self, g: &QuotientGraph, v: TypeIndex) -> Vec<EdgeId> {
        self.path_from_root(g, v).into_iter().rev().map(reverse_edge).collect()
    }
}
