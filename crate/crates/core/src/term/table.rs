use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::term::monomial::Shape;
use crate::term::notation::{self, MAX_LETTERS};
use crate::term::tree::{Op, ShapeKey, Tree};

/// 1-based position of an association type in the total order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TypeIndex(pub u32);

impl TypeIndex {
    pub fn slot(self) -> usize {
        self.0 as usize - 1
    }

    pub fn from_slot(slot: usize) -> TypeIndex {
        TypeIndex(slot as u32 + 1)
    }
}

impl fmt::Display for TypeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All association types of one degree, sorted by the total order.
#[derive(Clone, Debug)]
pub struct ShapeTable {
    degree: usize,
    shapes: Vec<Shape>,
    index: HashMap<ShapeKey, TypeIndex>,
}

/// Association types of every degree `1..=n`, each list already sorted.
///
/// A product of degree `n` with root `op` is `left op right` where `left` is
/// its first factor (a leaf or rooted in the other operation) and `right` is
/// anything of the remaining degree. Iterating `op`, then `left` in order
/// (degree first), then `right` in order emits the types already sorted.
fn enumerate_all(n: usize) -> Vec<Vec<Shape>> {
    let mut by_degree: Vec<Vec<Shape>> = vec![Vec::new(), vec![Tree::Leaf(())]];
    for d in 2..=n {
        let mut out = Vec::new();
        for op in [Op::H, Op::V] {
            for k in 1..d {
                for left in by_degree[k].iter().filter(|s| s.root_op() != Some(op)) {
                    for right in &by_degree[d - k] {
                        out.push(Tree::join(op, vec![left.clone(), right.clone()]));
                    }
                }
            }
        }
        by_degree.push(out);
    }
    by_degree
}

impl ShapeTable {
    pub fn new(degree: usize) -> Result<ShapeTable> {
        if degree == 0 {
            return Err(Error::InvalidDegree { degree, reason: "degree must be at least 1" });
        }
        if degree > MAX_LETTERS {
            return Err(Error::InvalidDegree { degree, reason: "degree must be at most 25" });
        }
        let shapes = enumerate_all(degree).swap_remove(degree);
        let index = shapes.iter().enumerate().map(|(i, s)| (s.key(), TypeIndex::from_slot(i))).collect();
        Ok(ShapeTable { degree, shapes, index })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    pub fn get(&self, index: TypeIndex) -> Option<&Shape> {
        self.shapes.get(index.slot())
    }

    pub fn shape(&self, index: TypeIndex) -> &Shape {
        &self.shapes[index.slot()]
    }

    /// Index of any tree with this shape, ignoring leaf labels.
    pub fn index_of<L>(&self, tree: &Tree<L>) -> Option<TypeIndex> {
        self.index.get(&tree.key()).copied()
    }

    pub fn index_of_key(&self, key: &ShapeKey) -> Option<TypeIndex> {
        self.index.get(key).copied()
    }

    /// Index of a type written in text notation, e.g. `(a•b)∘(c•d)`.
    pub fn index_of_text(&self, text: &str) -> Result<TypeIndex> {
        let t = notation::parse_letters(text)?;
        self.index_of(&t).ok_or(Error::UnknownType(self.degree))
    }

    pub fn type_string(&self, index: TypeIndex) -> String {
        notation::print_shape(self.shape(index))
    }

    pub fn iter(&self) -> impl Iterator<Item = (TypeIndex, &Shape)> {
        self.shapes.iter().enumerate().map(|(i, s)| (TypeIndex::from_slot(i), s))
    }
}
