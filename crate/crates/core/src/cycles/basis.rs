use std::collections::BTreeMap;

use serde::Serialize;

use crate::cycles::tree::SpanningTree;
use crate::error::{Error, Result};
use crate::graph::{Component, EdgeId, QuotientGraph};
use crate::term::{Perm, TypeIndex};

/// A closed walk at `base` and its edge set over GF(2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnchoredCycle {
    pub base: TypeIndex,
    pub walk: Vec<EdgeId>,
    /// Positions in the component's edge order traversed an odd number of
    /// times, ascending.
    pub support: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleBasis {
    pub component: usize,
    /// Relation ids of the component, ascending; column `j` of the cycle
    /// matrix is relation `edge_order[j]`.
    pub edge_order: Vec<usize>,
    pub cycles: Vec<AnchoredCycle>,
}

impl CycleBasis {
    /// The cycle matrix: entry `(i, j)` is set iff cycle `i` contains edge `j`.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        self.cycles
            .iter()
            .map(|c| {
                let mut row = vec![false; self.edge_order.len()];
                c.support.iter().for_each(|&j| row[j] = true);
                row
            })
            .collect()
    }
}

/// Edge positions a walk uses an odd number of times.
pub fn walk_support(g: &QuotientGraph, c: &Component, walk: &[EdgeId]) -> Vec<usize> {
    let mut odd = vec![false; c.edge_count()];
    for &e in walk {
        let j = c.edge_position(g.edge(e).relation).expect("walk stays in its component");
        odd[j] = !odd[j];
    }
    (0..odd.len()).filter(|&j| odd[j]).collect()
}

pub fn fundamental_cycle_basis(g: &QuotientGraph, c: &Component) -> CycleBasis {
    fundamental_cycle_basis_at(g, c, c.min_vertex()).expect("the minimal vertex is in the component")
}

/// One cycle per non-tree relation `u → v`: down the tree to `u`, across,
/// and back up from `v`.
pub fn fundamental_cycle_basis_at(g: &QuotientGraph, c: &Component, base: TypeIndex) -> Result<CycleBasis> {
    let tree = SpanningTree::new(g, c, base)?;
    let cycles = c
        .relations
        .iter()
        .filter(|&&k| !tree.is_tree_relation(g, k))
        .map(|&k| {
            let e = 2 * k;
            let mut walk = tree.path_from_root(g, g.edge(e).src);
            walk.push(e);
            walk.extend(tree.path_to_root(g, g.edge(e).dst));
            let support = walk_support(g, c, &walk);
            AnchoredCycle { base, walk, support }
        })
        .collect();
    Ok(CycleBasis { component: c.id, edge_order: c.relations.clone(), cycles })
}

type Row = Vec<u64>;

fn to_row(support: &[usize], width: usize) -> Row {
    let mut row = vec![0u64; width.div_ceil(64)];
    for &j in support {
        row[j / 64] |= 1 << (j % 64);
    }
    row
}

fn from_row(row: &Row, width: usize) -> Vec<usize> {
    (0..width).filter(|&j| row[j / 64] >> (j % 64) & 1 == 1).collect()
}

fn bit(row: &Row, j: usize) -> bool {
    row[j / 64] >> (j % 64) & 1 == 1
}

/// Gauss-Jordan elimination over GF(2); zero rows are dropped and the
/// remaining rows are ordered by pivot column.
pub fn row_canonical_form(supports: &[Vec<usize>], width: usize) -> Vec<Vec<usize>> {
    let mut rows: Vec<Row> = supports.iter().map(|s| to_row(s, width)).collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&i| bit(&rows[i], col)) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && bit(row, col) {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows.iter().map(|r| from_row(r, width)).collect()
}

/// Turns an even edge set into one closed walk at the tree's root: an Euler
/// circuit of each connected piece, reached and left along tree paths.
fn reanchor(g: &QuotientGraph, c: &Component, tree: &SpanningTree, support: &[usize]) -> Vec<EdgeId> {
    let rels: Vec<usize> = support.iter().map(|&j| c.relations[j]).collect();
    let mut adj: BTreeMap<TypeIndex, Vec<(TypeIndex, usize)>> = BTreeMap::new();
    for &k in &rels {
        let e = g.edge(2 * k);
        adj.entry(e.src).or_default().push((e.dst, k));
        if e.src != e.dst {
            adj.entry(e.dst).or_default().push((e.src, k));
        }
    }
    adj.values_mut().for_each(|l| l.sort_unstable());
    let mut used: BTreeMap<usize, bool> = rels.iter().map(|&k| (k, false)).collect();
    let mut next: BTreeMap<TypeIndex, usize> = BTreeMap::new();
    let mut walk = Vec::new();
    let starts: Vec<TypeIndex> = adj.keys().copied().collect();
    for start in starts {
        if adj[&start].iter().all(|&(_, k)| used[&k]) {
            continue;
        }
        // Hierholzer
        let mut stack: Vec<(TypeIndex, Option<EdgeId>)> = vec![(start, None)];
        let mut circuit = Vec::new();
        while let Some(&(v, _)) = stack.last() {
            let list = &adj[&v];
            let ptr = next.entry(v).or_insert(0);
            while *ptr < list.len() && used[&list[*ptr].1] {
                *ptr += 1;
            }
            if let Some(&(w, k)) = list.get(*ptr) {
                used.insert(k, true);
                let e = if g.edge(2 * k).src == v { 2 * k } else { 2 * k + 1 };
                stack.push((w, Some(e)));
            } else {
                let (_, e) = stack.pop().unwrap();
                circuit.extend(e);
            }
        }
        circuit.reverse();
        walk.extend(tree.path_from_root(g, start));
        walk.extend(circuit);
        walk.extend(tree.path_to_root(g, start));
    }
    walk
}

/// Row-reduces the cycle matrix of `b` and re-anchors every row as a closed
/// walk at the component's minimal vertex.
pub fn canonical_cycle_basis(g: &QuotientGraph, c: &Component, b: &CycleBasis) -> CycleBasis {
    let tree = SpanningTree::new(g, c, c.min_vertex()).expect("minimal vertex is in the component");
    let supports: Vec<Vec<usize>> = b.cycles.iter().map(|x| x.support.clone()).collect();
    let cycles = row_canonical_form(&supports, c.edge_count())
        .into_iter()
        .map(|support| {
            let walk = reanchor(g, c, &tree, &support);
            debug_assert_eq!(walk_support(g, c, &walk), support);
            AnchoredCycle { base: c.min_vertex(), walk, support }
        })
        .collect();
    CycleBasis { component: c.id, edge_order: c.relations.clone(), cycles }
}

/// Label product around a closed walk at `base`.
pub fn cycle_permutation(g: &QuotientGraph, walk: &[EdgeId], base: TypeIndex) -> Result<Perm> {
    let (Some(&first), Some(&last)) = (walk.first(), walk.last()) else {
        return Ok(Perm::identity(g.degree()));
    };
    if g.edge(first).src != base || g.edge(last).dst != base {
        return Err(Error::NotClosed);
    }
    g.path_permutation(walk)
}
