//! Cycle spaces of the components of `G(n)` and the permutations read
//! around their cycles.

mod basis;
mod monodromy;
mod tree;

pub use basis::{
    canonical_cycle_basis, cycle_permutation, fundamental_cycle_basis, fundamental_cycle_basis_at, row_canonical_form,
    walk_support, AnchoredCycle, CycleBasis,
};
pub use monodromy::{
    analyze, find_nontrivial_components, group_order, monodromy_group, monodromy_group_at, AnalysisReport,
    ComponentReport, MonodromyReport, GROUP_CAP,
};
pub use tree::SpanningTree;
