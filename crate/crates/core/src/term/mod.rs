//! Association types, multilinear monomials and permutations of positions.

mod monomial;
pub mod notation;
pub(crate) mod perm;
mod schroeder;
mod table;
mod tree;

pub use monomial::{parse_monomial, print_monomial, Monomial, Shape};
pub use notation::{parse_term, print_shape, print_term};
pub use perm::Perm;
pub use schroeder::schroeder_large;
pub use table::{ShapeTable, TypeIndex};
pub use tree::{compare_shapes, Op, ShapeKey, Term, Tree};

/// Builds the table of all association types of degree `n`.
pub fn enumerate_shapes(n: usize) -> crate::Result<ShapeTable> {
    ShapeTable::new(n)
}
