use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::term::{Monomial, Op, Term, Tree};

/// Which side of the interchange law the redex matches.
///
/// `Forward` rewrites `(w•x)∘(y•z)` to `(w∘y)•(x∘z)` and sits at a `∘` node;
/// `Backward` is the reverse rewrite at a `•` node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "fwd")]
    Forward,
    #[serde(rename = "bwd")]
    Backward,
}

impl Direction {
    pub fn at(op: Op) -> Direction {
        match op {
            Op::H => Direction::Forward,
            Op::V => Direction::Backward,
        }
    }

    pub fn op(self) -> Op {
        match self {
            Direction::Forward => Op::H,
            Direction::Backward => Op::V,
        }
    }
}

/// One place where a single interchange applies.
///
/// `path` walks child indices (0-based) from the root to a node `P`;
/// children `pair` and `pair + 1` of `P` both carry the other operation.
/// The first of them is cut after its `left_split`-th factor and the second
/// after its `right_split`-th, giving four blocks `B1 B2 | B3 B4` read left
/// to right. The rewrite replaces the two children by `(B1 P B3) Q (B2 P B4)`
/// where `Q` is the other operation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Redex {
    pub path: Vec<usize>,
    pub pair: usize,
    #[serde(rename = "p")]
    pub left_split: usize,
    #[serde(rename = "q")]
    pub right_split: usize,
    #[serde(rename = "dir")]
    pub direction: Direction,
}

/// All redexes of a tree, ordered by path (preorder), pair, then splits.
pub fn find_redexes<L>(t: &Tree<L>) -> Vec<Redex> {
    fn walk<L>(t: &Tree<L>, path: &mut Vec<usize>, out: &mut Vec<Redex>) {
        let Tree::Node(op, ch) = t else { return };
        for (i, pair) in ch.windows(2).enumerate() {
            let (Tree::Node(o1, a), Tree::Node(o2, b)) = (&pair[0], &pair[1]) else { continue };
            debug_assert!(*o1 != *op && *o2 != *op);
            for p in 1..a.len() {
                for q in 1..b.len() {
                    out.push(Redex {
                        path: path.clone(),
                        pair: i,
                        left_split: p,
                        right_split: q,
                        direction: Direction::at(*op),
                    });
                }
            }
        }
        for (i, c) in ch.iter().enumerate() {
            path.push(i);
            walk(c, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    walk(t, &mut Vec::new(), &mut out);
    out
}

fn block<L: Clone>(op: Op, factors: &[Tree<L>]) -> Tree<L> {
    if factors.len() == 1 {
        factors[0].clone()
    } else {
        Tree::Node(op, factors.to_vec())
    }
}

fn invalid(r: &Redex, why: &str) -> Error {
    Error::InvalidRedex(format!("{why} (path {:?}, pair {}, p {}, q {})", r.path, r.pair, r.left_split, r.right_split))
}

/// Inner operation and the children of the left and right factors.
type Factors<'a, L> = (Op, &'a [Tree<L>], &'a [Tree<L>]);

/// The two children the redex acts on, with both operations, after validation.
fn locate<'a, L>(t: &'a Tree<L>, r: &Redex) -> Result<Factors<'a, L>> {
    let node = t.at_path(&r.path).ok_or_else(|| invalid(r, "path leaves the tree"))?;
    let Tree::Node(op, ch) = node else { return Err(invalid(r, "path ends at a leaf")) };
    if Direction::at(*op) != r.direction {
        return Err(invalid(r, "direction does not match the node's operation"));
    }
    let (Some(Tree::Node(_, a)), Some(Tree::Node(_, b))) = (ch.get(r.pair), ch.get(r.pair + 1)) else {
        return Err(invalid(r, "pair is not two adjacent products"));
    };
    if r.left_split == 0 || r.left_split >= a.len() || r.right_split == 0 || r.right_split >= b.len() {
        return Err(invalid(r, "split is not proper"));
    }
    Ok((*op, a, b))
}

/// The four blocks `B1..B4` in left-to-right order.
pub fn redex_blocks<L: Clone>(t: &Tree<L>, r: &Redex) -> Result<[Tree<L>; 4]> {
    let (op, a, b) = locate(t, r)?;
    let inner = op.other();
    let (p, q) = (r.left_split, r.right_split);
    Ok([block(inner, &a[..p]), block(inner, &a[p..]), block(inner, &b[..q]), block(inner, &b[q..])])
}

/// Applies a redex and returns the canonical result.
pub fn apply_redex_tree<L: Clone>(t: &Tree<L>, r: &Redex) -> Result<Tree<L>> {
    let [b1, b2, b3, b4] = redex_blocks(t, r)?;
    fn rebuild<L: Clone>(t: &Tree<L>, path: &[usize], r: &Redex, new_pair: &Tree<L>) -> Tree<L> {
        let Tree::Node(op, ch) = t else { unreachable!("validated path") };
        match path.split_first() {
            None => {
                let mut out = Vec::with_capacity(ch.len() - 1);
                out.extend_from_slice(&ch[..r.pair]);
                out.push(new_pair.clone());
                out.extend_from_slice(&ch[r.pair + 2..]);
                Tree::join(*op, out)
            }
            Some((&i, rest)) => {
                let mut out = ch.clone();
                out[i] = rebuild(&ch[i], rest, r, new_pair);
                Tree::join(*op, out)
            }
        }
    }
    let outer = r.direction.op();
    let inner = outer.other();
    let new_pair = Tree::join(inner, vec![Tree::join(outer, vec![b1, b3]), Tree::join(outer, vec![b2, b4])]);
    Ok(rebuild(t, &r.path, r, &new_pair))
}

/// Applies a redex to a monomial; leaf variables travel with their leaves.
pub fn apply_redex(m: &Monomial, r: &Redex) -> Result<Monomial> {
    let t: Term = apply_redex_tree(&m.to_term(), r)?;
    Monomial::from_term(&t)
}
