//! The quotient graph `G(n)`: association types joined by permutation-labelled
//! edge pairs, one pair per normalized relation.

mod cache;
mod components;
mod export;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rewrite::{all_moves, relations_of, Move, NormalizedRelation, Redex};
use crate::term::{Monomial, Perm, ShapeTable, TypeIndex};

pub use cache::{cache_file, load_or_build, read_cache, write_cache, CacheOutcome, CACHE_VERSION};
pub use components::{Component, ComponentSummary, Decomposition};
pub use export::{write_dot, write_json};

/// Position of a directed edge in [`QuotientGraph::edges`].
///
/// Relation `k` owns edges `2k` (left to right, label `σ`) and `2k + 1`
/// (right to left, label `σ⁻¹`).
pub type EdgeId = usize;

pub fn reverse_edge(e: EdgeId) -> EdgeId {
    e ^ 1
}

/// A directed edge together with a redex on its source type that realizes it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub src: TypeIndex,
    pub dst: TypeIndex,
    pub perm: Perm,
    pub relation: usize,
    pub redex: Redex,
}

#[derive(Debug)]
pub struct QuotientGraph {
    table: ShapeTable,
    relations: Vec<NormalizedRelation>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<EdgeId>>,
    decomposition: OnceLock<Decomposition>,
}

impl PartialEq for QuotientGraph {
    fn eq(&self, other: &Self) -> bool {
        self.degree() == other.degree() && self.relations == other.relations && self.edges == other.edges
    }
}

impl Eq for QuotientGraph {}

/// Builds `G(n)` from redex enumeration on the current rayon pool.
pub fn build_quotient_graph(n: usize) -> Result<QuotientGraph> {
    if !(2..=10).contains(&n) {
        return Err(Error::InvalidDegree { degree: n, reason: "the quotient graph is built for degrees 2..=10" });
    }
    let table = ShapeTable::new(n)?;
    let moves = all_moves(&table);
    let relations = relations_of(&moves);
    let edges = edges_from_moves(&relations, &moves)?;
    QuotientGraph::from_parts(table, edges)
}

/// Assigns each move to the directed edge it realizes; the first move in
/// enumeration order wins.
fn edges_from_moves(relations: &[NormalizedRelation], moves: &[Move]) -> Result<Vec<Edge>> {
    let mut slots: Vec<Option<Redex>> = vec![None; 2 * relations.len()];
    for mv in moves {
        let rel = mv.relation();
        let k = relations.binary_search(&rel).expect("relation was generated from this move");
        let forward = mv.source == rel.left && mv.perm == rel.perm;
        let backward = mv.source == rel.right && mv.perm == rel.perm.inverse();
        for (hit, e) in [(forward, 2 * k), (backward, 2 * k + 1)] {
            if hit && slots[e].is_none() {
                slots[e] = Some(mv.redex.clone());
            }
        }
    }
    let mut edges = Vec::with_capacity(slots.len());
    for (e, slot) in slots.into_iter().enumerate() {
        let rel = &relations[e / 2];
        let redex = slot.ok_or_else(|| Error::InvalidRedex(format!("no redex realizes edge {e}")))?;
        let (src, dst, perm) = if e % 2 == 0 {
            (rel.left, rel.right, rel.perm.clone())
        } else {
            (rel.right, rel.left, rel.perm.inverse())
        };
        edges.push(Edge { src, dst, perm, relation: e / 2, redex });
    }
    Ok(edges)
}

impl QuotientGraph {
    /// Assembles a graph from its directed edges, checking pairing and labels.
    pub fn from_parts(table: ShapeTable, edges: Vec<Edge>) -> Result<QuotientGraph> {
        let bad = |msg: String| Error::Cache(msg);
        if edges.len() % 2 != 0 {
            return Err(bad("odd number of directed edges".into()));
        }
        let mut relations = Vec::with_capacity(edges.len() / 2);
        for (k, pair) in edges.chunks(2).enumerate() {
            let (f, r) = (&pair[0], &pair[1]);
            if f.relation != k || r.relation != k || f.src != r.dst || f.dst != r.src || r.perm != f.perm.inverse() {
                return Err(bad(format!("edge pair {k} is not a relation and its reverse")));
            }
            if f.src.0 == 0 || f.src.slot() >= table.len() || f.dst.0 == 0 || f.dst.slot() >= table.len() {
                return Err(bad(format!("edge pair {k} leaves the vertex set")));
            }
            if f.perm.degree() != table.degree() {
                return Err(bad(format!("edge pair {k} has a label of the wrong degree")));
            }
            relations.push(NormalizedRelation { left: f.src, right: f.dst, perm: f.perm.clone() });
        }
        if relations.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("relations are not strictly sorted".into()));
        }
        let mut adjacency = vec![Vec::new(); table.len()];
        for (e, edge) in edges.iter().enumerate() {
            adjacency[edge.src.slot()].push(e);
        }
        for list in &mut adjacency {
            list.sort_by_key(|&e| (edges[e].dst, edges[e].relation, e));
        }
        Ok(QuotientGraph { table, relations, edges, adjacency, decomposition: OnceLock::new() })
    }

    pub fn degree(&self) -> usize {
        self.table.degree()
    }

    pub fn table(&self) -> &ShapeTable {
        &self.table
    }

    pub fn vertex_count(&self) -> usize {
        self.table.len()
    }

    pub fn relations(&self) -> &[NormalizedRelation] {
        &self.relations
    }

    pub fn edge_pair_count(&self) -> usize {
        self.relations.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    /// Outgoing edges of a vertex, ordered by (destination, relation id).
    pub fn out_edges(&self, v: TypeIndex) -> &[EdgeId] {
        &self.adjacency[v.slot()]
    }

    /// The edge from `a` to `b` with the smallest relation id, if any.
    pub fn edge_between(&self, a: TypeIndex, b: TypeIndex) -> Option<EdgeId> {
        self.out_edges(a).iter().copied().find(|&e| self.edges[e].dst == b)
    }

    /// The walk through consecutive vertices, taking [`Self::edge_between`] at each step.
    pub fn walk_through(&self, vertices: &[TypeIndex]) -> Result<Vec<EdgeId>> {
        vertices
            .windows(2)
            .enumerate()
            .map(|(i, w)| self.edge_between(w[0], w[1]).ok_or(Error::NotIncident { step: i }))
            .collect()
    }

    pub fn decomposition(&self) -> &Decomposition {
        self.decomposition.get_or_init(|| Decomposition::new(self))
    }

    pub fn components(&self) -> &[Component] {
        &self.decomposition().components
    }

    pub fn component(&self, id: usize) -> Result<&Component> {
        id.checked_sub(1).and_then(|i| self.components().get(i)).ok_or(Error::UnknownComponent(id))
    }

    /// The component containing `v`, or `None` for an isolated vertex.
    pub fn component_of(&self, v: TypeIndex) -> Option<&Component> {
        self.decomposition().component_of(v).map(|id| &self.components()[id - 1])
    }

    /// Product of edge labels along a walk, checking incidence.
    pub fn path_permutation(&self, path: &[EdgeId]) -> Result<Perm> {
        let mut total = Perm::identity(self.degree());
        for (i, &e) in path.iter().enumerate() {
            let edge = self.edges.get(e).ok_or(Error::NotIncident { step: i })?;
            if i > 0 && self.edges[path[i - 1]].dst != edge.src {
                return Err(Error::NotIncident { step: i });
            }
            total = total.then(&edge.perm);
        }
        Ok(total)
    }

    /// Lifts a walk to the monomial graph starting at `start`.
    ///
    /// Returns the monomial reached and the product of the labels, so that
    /// `end = start.apply_permutation(sigma)` with the end vertex's type.
    pub fn lift_path(&self, path: &[EdgeId], start: &Monomial) -> Result<(Monomial, Perm)> {
        let Some(&first) = path.first() else {
            return Ok((start.clone(), Perm::identity(start.degree())));
        };
        let here = self.table.index_of(start.shape()).ok_or(Error::UnknownType(self.degree()))?;
        if self.edges.get(first).map(|e| e.src) != Some(here) {
            return Err(Error::NotIncident { step: 0 });
        }
        let sigma = self.path_permutation(path)?;
        let end_type = self.edges[*path.last().unwrap()].dst;
        let end = Monomial::new(self.table.shape(end_type).clone(), start.decoration().compose(&sigma)?)?;
        Ok((end, sigma))
    }

    /// Isolated vertices plus components: the number of distinct monomials
    /// of each permutation class in the free double semigroup.
    pub fn count_free_monomials(&self) -> usize {
        let d = self.decomposition();
        d.isolated + d.components.len()
    }

    pub fn component_summary(&self) -> ComponentSummary {
        ComponentSummary::new(self)
    }
}
