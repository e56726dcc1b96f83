//! Single applications of the interchange law and the relations they generate.

mod inductive;
mod redex;
mod relations;

pub use inductive::{generate_consequences_inductive, InductiveConsequences};
pub use redex::{apply_redex, apply_redex_tree, find_redexes, redex_blocks, Direction, Redex};
pub use relations::{all_moves, generate_relations, relations_of, Move, NormalizedRelation};
