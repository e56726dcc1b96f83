use crate::cycles::{canonical_cycle_basis, fundamental_cycle_basis, SpanningTree};
use crate::error::{Error, Result};
use crate::graph::{reverse_edge, Component, EdgeId, QuotientGraph};
use crate::term::{Monomial, TypeIndex};
use crate::witness::identity::CommutativityIdentity;
use crate::witness::proof::Proof;

/// Cancels adjacent traversals of an edge and its reverse.
fn free_reduce(walk: Vec<EdgeId>) -> Vec<EdgeId> {
    let mut out: Vec<EdgeId> = Vec::with_capacity(walk.len());
    for e in walk {
        if out.last() == Some(&reverse_edge(e)) {
            out.pop();
        } else {
            out.push(e);
        }
    }
    out
}

/// A closed walk at `at` whose label product is not the identity.
///
/// Takes the first row of the canonical cycle basis with a nontrivial
/// product (falling back to the fundamental cycles) and conjugates it to
/// `at` along the spanning tree.
pub fn nontrivial_walk(g: &QuotientGraph, c: &Component, at: TypeIndex) -> Result<Vec<EdgeId>> {
    if !c.contains(at) {
        return Err(Error::VertexNotInComponent { vertex: at.0, component: c.id });
    }
    let fundamental = fundamental_cycle_basis(g, c);
    let canonical = canonical_cycle_basis(g, c, &fundamental);
    let cycle = canonical
        .cycles
        .iter()
        .chain(&fundamental.cycles)
        .find(|x| g.path_permutation(&x.walk).is_ok_and(|p| !p.is_identity()))
        .ok_or(Error::TrivialComponent(c.id))?;
    let tree = SpanningTree::new(g, c, c.min_vertex())?;
    let mut walk = tree.path_to_root(g, at);
    walk.extend(&cycle.walk);
    walk.extend(tree.path_from_root(g, at));
    Ok(free_reduce(walk))
}

/// A commutativity identity at type `at` and a proof of it by single
/// interchanges, read off a nontrivial cycle through `at`.
pub fn extract_identity(g: &QuotientGraph, c: &Component, at: TypeIndex) -> Result<(CommutativityIdentity, Proof)> {
    let walk = nontrivial_walk(g, c, at)?;
    let start = Monomial::identity(g.table().shape(at).clone());
    let proof = Proof::from_redexes(start, walk.iter().map(|&e| g.edge(e).redex.clone()))?;
    let id = CommutativityIdentity::new(proof.start.clone(), proof.end.clone())?;
    Ok((id, proof))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_quotient_graph;

    #[test]
    fn free_reduction() {
        assert_eq!(free_reduce(vec![0, 2, 3, 1, 4, 5, 4]), vec![4]);
        assert_eq!(free_reduce(vec![0, 2, 4]), vec![0, 2, 4]);
        assert_eq!(free_reduce(vec![6, 7]), Vec::<usize>::new());
    }

    #[test]
    fn trivial_components_have_no_identity() {
        let g = build_quotient_graph(6).unwrap();
        let c = g.components().iter().find(|c| c.circuit_rank() > 0).unwrap();
        assert!(matches!(extract_identity(&g, c, c.min_vertex()), Err(Error::TrivialComponent(_))));
        let outside = TypeIndex(1);
        assert!(matches!(extract_identity(&g, c, outside), Err(Error::VertexNotInComponent { .. })));
    }
}
