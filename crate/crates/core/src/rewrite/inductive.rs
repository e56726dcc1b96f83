use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rewrite::relations::NormalizedRelation;
use crate::term::{Monomial, Op, ShapeTable, Term, Tree};

/// Consequences of the interchange law built by induction on the degree.
#[derive(Clone, Debug)]
pub struct InductiveConsequences {
    /// Relations generated, with repetition.
    pub count: u128,
    /// Distinct normal forms, sorted.
    pub normalized: Vec<NormalizedRelation>,
}

/// Replaces leaf `var` by `var op fresh`, re-flattening on the way up.
fn substitute(t: &Term, var: u8, op: Op, fresh: u8) -> Term {
    match t {
        Tree::Leaf(v) if *v == var => Tree::Node(op, vec![Tree::Leaf(var), Tree::Leaf(fresh)]),
        Tree::Leaf(v) => Tree::Leaf(*v),
        Tree::Node(o, ch) => Tree::join(*o, ch.iter().map(|c| substitute(c, var, op, fresh)).collect()),
    }
}

/// The relations of degree `k + 1` derived from one relation of degree `k`:
/// `2k` substitutions followed by multiplication by the new variable on
/// either side with either operation.
fn successors(l: &Term, r: &Term, k: usize) -> Vec<(Term, Term)> {
    let fresh = k as u8;
    let mut out = Vec::with_capacity(2 * k + 4);
    for var in 0..fresh {
        for op in [Op::H, Op::V] {
            out.push((substitute(l, var, op, fresh), substitute(r, var, op, fresh)));
        }
    }
    for op in [Op::H, Op::V] {
        let x = Tree::Leaf(fresh);
        out.push((Tree::join(op, vec![l.clone(), x.clone()]), Tree::join(op, vec![r.clone(), x.clone()])));
        out.push((Tree::join(op, vec![x.clone(), l.clone()]), Tree::join(op, vec![x, r.clone()])));
    }
    out
}

fn descend(table: &ShapeTable, l: &Term, r: &Term, k: usize, seen: &mut HashSet<NormalizedRelation>, count: &mut u128) {
    if k == table.degree() {
        *count += 1;
        let a = Monomial::from_term(l).expect("multilinear");
        let b = Monomial::from_term(r).expect("multilinear");
        seen.insert(NormalizedRelation::from_monomials(table, &a, &b).expect("types are listed"));
        return;
    }
    for (l2, r2) in successors(l, r, k) {
        descend(table, &l2, &r2, k + 1, seen, count);
    }
}

/// Expands the degree-4 interchange law `(a•b)∘(c•d) ≡ (a∘c)•(b∘d)` up to
/// degree `n` and normalizes. Independent of redex enumeration, so it serves
/// as a cross-check on [`super::generate_relations`].
pub fn generate_consequences_inductive(n: usize) -> Result<InductiveConsequences> {
    if !(4..=9).contains(&n) {
        return Err(Error::InvalidDegree { degree: n, reason: "the inductive generator covers degrees 4..=9" });
    }
    let table = ShapeTable::new(n)?;
    let leaf = |v: u8| Tree::Leaf(v);
    let law = (
        Tree::Node(Op::H, vec![Tree::Node(Op::V, vec![leaf(0), leaf(1)]), Tree::Node(Op::V, vec![leaf(2), leaf(3)])]),
        Tree::Node(Op::V, vec![Tree::Node(Op::H, vec![leaf(0), leaf(2)]), Tree::Node(Op::H, vec![leaf(1), leaf(3)])]),
    );

    // split the tree at a shallow level so the leaves can run in parallel
    let split = n.min(6);
    let mut frontier = vec![law];
    for k in 4..split {
        frontier = frontier.iter().flat_map(|(l, r)| successors(l, r, k)).collect();
    }
    let parts: Vec<(HashSet<NormalizedRelation>, u128)> = frontier
        .par_iter()
        .map(|(l, r)| {
            let mut seen = HashSet::new();
            let mut count = 0;
            descend(&table, l, r, split, &mut seen, &mut count);
            (seen, count)
        })
        .collect();
    let mut all = HashSet::new();
    let mut count = 0;
    for (seen, c) in parts {
        count += c;
        all.extend(seen);
    }
    let mut normalized: Vec<_> = all.into_iter().collect();
    normalized.sort_unstable();
    Ok(InductiveConsequences { count, normalized })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::generate_relations;

    /// `2^(n+1) (n+1)! / (2^5 5!)`
    fn closed_form(n: u128) -> u128 {
        let fact = |k: u128| (1..=k).product::<u128>();
        (1u128 << (n + 1)) * fact(n + 1) / ((1 << 5) * fact(5))
    }

    #[test]
    fn counts_follow_the_closed_form() {
        for n in 4..=7 {
            let c = generate_consequences_inductive(n).unwrap();
            assert_eq!(c.count, closed_form(n as u128), "degree {n}");
        }
        assert_eq!(closed_form(6), 168);
        assert_eq!(closed_form(9), 967680);
    }

    #[test]
    fn degree_four_is_the_law() {
        let c = generate_consequences_inductive(4).unwrap();
        assert_eq!(c.count, 1);
        assert_eq!(c.normalized, generate_relations(4).unwrap());
    }

    #[test]
    fn agrees_with_redex_enumeration_up_to_seven() {
        for n in 5..=7 {
            let c = generate_consequences_inductive(n).unwrap();
            assert_eq!(c.normalized, generate_relations(n).unwrap(), "degree {n}");
        }
    }

    #[test]
    fn substitution_flattens() {
        let t: Term = Tree::Node(Op::H, vec![Tree::Leaf(0), Tree::Leaf(1)]);
        let s = substitute(&t, 1, Op::H, 2);
        assert_eq!(s, Tree::Node(Op::H, vec![Tree::Leaf(0), Tree::Leaf(1), Tree::Leaf(2)]));
    }

    #[test]
    fn out_of_range_degrees() {
        assert!(generate_consequences_inductive(3).is_err());
        assert!(generate_consequences_inductive(10).is_err());
    }
}
