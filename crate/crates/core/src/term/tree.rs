use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// One of the two associative operations.
///
/// `H` is horizontal composition `∘`, `V` is vertical composition `•`.
/// The derived order `H < V` is the root-operation rule of the total order
/// on association types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Op {
    H,
    V,
}

impl Op {
    pub fn other(self) -> Op {
        match self {
            Op::H => Op::V,
            Op::V => Op::H,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Op::H => '∘',
            Op::V => '•',
        }
    }
}

/// A planar rooted tree whose internal nodes carry an operation.
///
/// Trees built through [`Tree::join`] are canonical: every internal node has
/// at least two children and no child repeats its parent's operation, so
/// each associative product is stored as one flat n-ary node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree<L> {
    Leaf(L),
    Node(Op, Vec<Tree<L>>),
}

/// A labelled term; leaves hold 0-based variable numbers.
pub type Term = Tree<u8>;

impl<L: Clone> Tree<L> {
    /// Canonicalizing product: flattens same-operation children and
    /// collapses a single factor to itself.
    pub fn join(op: Op, factors: Vec<Tree<L>>) -> Tree<L> {
        assert!(!factors.is_empty(), "empty product");
        let mut flat = Vec::with_capacity(factors.len());
        for f in factors {
            match f {
                Tree::Node(o, ch) if o == op => flat.extend(ch),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            Tree::Node(op, flat)
        }
    }

    pub fn transpose(&self) -> Tree<L> {
        match self {
            Tree::Leaf(l) => Tree::Leaf(l.clone()),
            Tree::Node(op, ch) => Tree::Node(op.other(), ch.iter().map(Tree::transpose).collect()),
        }
    }

    pub fn map_leaves<M, F: FnMut(&L) -> M>(&self, f: &mut F) -> Tree<M> {
        match self {
            Tree::Leaf(l) => Tree::Leaf(f(l)),
            Tree::Node(op, ch) => Tree::Node(*op, ch.iter().map(|c| c.map_leaves(f)).collect()),
        }
    }

    /// The underlying association type.
    pub fn shape(&self) -> Tree<()> {
        self.map_leaves(&mut |_| ())
    }
}

impl<L> Tree<L> {
    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(_, ch) => ch.iter().map(Tree::degree).sum(),
        }
    }

    pub fn root_op(&self) -> Option<Op> {
        match self {
            Tree::Leaf(_) => None,
            Tree::Node(op, _) => Some(*op),
        }
    }

    pub fn children(&self) -> &[Tree<L>] {
        match self {
            Tree::Leaf(_) => &[],
            Tree::Node(_, ch) => ch,
        }
    }

    /// Leaf labels from left to right.
    pub fn leaves(&self) -> Vec<&L> {
        fn walk<'a, L>(t: &'a Tree<L>, out: &mut Vec<&'a L>) {
            match t {
                Tree::Leaf(l) => out.push(l),
                Tree::Node(_, ch) => ch.iter().for_each(|c| walk(c, out)),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// Checks arity ≥ 2 and alternation at every node.
    pub fn is_canonical(&self) -> bool {
        match self {
            Tree::Leaf(_) => true,
            Tree::Node(op, ch) => ch.len() >= 2 && ch.iter().all(|c| c.root_op() != Some(*op) && c.is_canonical()),
        }
    }

    /// Prefix encoding of the shape: `0` for a leaf, then `(op, arity)` pairs.
    /// Unambiguous for canonical trees and independent of leaf labels.
    pub fn key(&self) -> ShapeKey {
        fn walk<L>(t: &Tree<L>, out: &mut Vec<u8>) {
            match t {
                Tree::Leaf(_) => out.push(0),
                Tree::Node(op, ch) => {
                    out.push(match op {
                        Op::H => 1,
                        Op::V => 2,
                    });
                    out.push(ch.len() as u8);
                    ch.iter().for_each(|c| walk(c, out));
                }
            }
        }
        let mut out = Vec::with_capacity(2 * self.degree());
        walk(self, &mut out);
        ShapeKey(out)
    }

    pub(crate) fn at_path(&self, path: &[usize]) -> Option<&Tree<L>> {
        let mut t = self;
        for &i in path {
            t = t.children().get(i)?;
        }
        Some(t)
    }
}

/// Canonical hash key of an association type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeKey(pub(crate) Vec<u8>);

/// A view of a tree in right-justified binary form: a flat node
/// `op(c1, ..., ck)` factors uniquely as `c1 op (c2 op (... ck))`.
#[derive(Clone, Copy)]
enum Binary<'a, L> {
    Leaf,
    Chain(Op, &'a [Tree<L>]),
}

impl<'a, L> Binary<'a, L> {
    fn of(t: &'a Tree<L>) -> Self {
        match t {
            Tree::Leaf(_) => Binary::Leaf,
            Tree::Node(op, ch) => Binary::Chain(*op, ch),
        }
    }

    fn degree(&self) -> usize {
        match self {
            Binary::Leaf => 1,
            Binary::Chain(_, ch) => ch.iter().map(Tree::degree).sum(),
        }
    }

    fn split(&self) -> Option<(Op, Binary<'a, L>, Binary<'a, L>)> {
        match *self {
            Binary::Leaf => None,
            Binary::Chain(op, ch) => {
                let left = Binary::of(&ch[0]);
                let right = if ch.len() == 2 { Binary::of(&ch[1]) } else { Binary::Chain(op, &ch[1..]) };
                Some((op, left, right))
            }
        }
    }
}

/// The total order on association types: degree first, then root operation
/// with `∘ ≺ •`, then recursively the left and right factors of the
/// right-justified binary form. Leaf labels are ignored.
pub fn compare_shapes<L, M>(a: &Tree<L>, b: &Tree<M>) -> Ordering {
    compare_binary(Binary::of(a), Binary::of(b))
}

fn compare_binary<L, M>(a: Binary<'_, L>, b: Binary<'_, M>) -> Ordering {
    let by_degree = a.degree().cmp(&b.degree());
    if by_degree != Ordering::Equal {
        return by_degree;
    }
    match (a.split(), b.split()) {
        (None, None) => Ordering::Equal,
        (Some((op1, l1, r1)), Some((op2, l2, r2))) => {
            op1.cmp(&op2).then_with(|| compare_binary(l1, l2)).then_with(|| compare_binary(r1, r2))
        }
        _ => unreachable!(),
    }
}

impl PartialOrd for Tree<()> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tree<()> {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_binary(Binary::of(self), Binary::of(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf() -> Tree<()> {
        Tree::Leaf(())
    }

    #[test]
    fn join_flattens_and_collapses() {
        let ab = Tree::join(Op::H, vec![leaf(), leaf()]);
        let abc = Tree::join(Op::H, vec![ab.clone(), leaf()]);
        assert_eq!(abc, Tree::Node(Op::H, vec![leaf(), leaf(), leaf()]));
        assert_eq!(Tree::join(Op::V, vec![ab.clone()]), ab);
        assert!(abc.is_canonical());
        assert!(!Tree::Node(Op::H, vec![ab, leaf()]).is_canonical());
    }

    #[test]
    fn leaves_are_equal_and_degree_orders_first() {
        assert_eq!(leaf().cmp(&leaf()), Ordering::Equal);
        let two = Tree::join(Op::V, vec![leaf(), leaf()]);
        let three = Tree::join(Op::H, vec![leaf(), leaf(), leaf()]);
        assert_eq!(two.cmp(&three), Ordering::Less);
    }

    #[test]
    fn root_operation_horizontal_first() {
        let h = Tree::join(Op::H, vec![leaf(), leaf()]);
        let v = Tree::join(Op::V, vec![leaf(), leaf()]);
        assert!(h < v);
    }

    #[test]
    fn transpose_is_an_involution() {
        let t = Tree::join(Op::H, vec![Tree::join(Op::V, vec![leaf(), leaf()]), leaf()]);
        assert_ne!(t.transpose(), t);
        assert_eq!(t.transpose().transpose(), t);
    }

    #[test]
    fn key_ignores_labels() {
        let a: Term = Tree::join(Op::H, vec![Tree::Leaf(0), Tree::Leaf(1)]);
        let b: Term = Tree::join(Op::H, vec![Tree::Leaf(1), Tree::Leaf(0)]);
        assert_eq!(a.key(), b.key());
        assert_ne!(a.key(), a.transpose().key());
    }
}
