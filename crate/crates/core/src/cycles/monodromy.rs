use std::collections::HashSet;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::basis::fundamental_cycle_basis_at;
use crate::error::{Error, Result};
use crate::graph::{Component, QuotientGraph};
use crate::term::{Perm, TypeIndex};

pub const GROUP_CAP: usize = 1_000_000;

/// Order of the group generated by `gens`, by closure under right
/// multiplication. Fails beyond `cap` elements.
pub fn group_order(gens: &[Perm], degree: usize, cap: usize) -> Result<usize> {
    let gens: Vec<&Perm> = gens.iter().filter(|p| !p.is_identity()).collect();
    let id = Perm::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                frontier.push(y);
            }
        }
    }
    Ok(seen.len())
}

/// Monodromy of one component at a base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonodromyReport {
    pub component: usize,
    pub base: TypeIndex,
    /// One per fundamental cycle of the spanning tree rooted at `base`.
    pub generators: Vec<Perm>,
    pub group_order: usize,
    pub nontrivial: bool,
    /// First nontrivial generator.
    pub sample: Option<Perm>,
}

pub fn monodromy_group(g: &QuotientGraph, c: &Component) -> Result<MonodromyReport> {
    monodromy_group_at(g, c, c.min_vertex())
}

pub fn monodromy_group_at(g: &QuotientGraph, c: &Component, base: TypeIndex) -> Result<MonodromyReport> {
    let basis = fundamental_cycle_basis_at(g, c, base)?;
    let generators = basis.cycles.iter().map(|x| g.path_permutation(&x.walk)).collect::<Result<Vec<_>>>()?;
    let group_order = group_order(&generators, g.degree(), GROUP_CAP)?;
    let sample = generators.iter().find(|p| !p.is_identity()).cloned();
    Ok(MonodromyReport { component: c.id, base, generators, group_order, nontrivial: group_order > 1, sample })
}

/// One line of the per-degree monodromy report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub id: usize,
    pub v: usize,
    pub e: usize,
    pub r: usize,
    pub base: TypeIndex,
    pub base_type: String,
    pub group_order: usize,
    pub nontrivial: bool,
    pub sample_perm: Option<Perm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub degree: usize,
    pub components: Vec<ComponentReport>,
}

impl AnalysisReport {
    pub fn nontrivial(&self) -> impl Iterator<Item = &ComponentReport> {
        self.components.iter().filter(|c| c.nontrivial)
    }

    pub fn write_json<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{{\"degree\":{},\"components\":[", self.degree)?;
        for (i, c) in self.components.iter().enumerate() {
            writeln!(w, "{}{}", if i > 0 { "," } else { "" }, serde_json::to_string(c)?)?;
        }
        writeln!(w, "]}}")
    }

    /// Same columns as the JSON; `sample_perm` in cycle notation.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "id,v,e,r,base,base_type,group_order,nontrivial,sample_perm")?;
        for c in &self.components {
            let sample = c.sample_perm.as_ref().map(ToString::to_string).unwrap_or_default();
            writeln!(
                w,
                "{},{},{},{},{},{},{},{},{}",
                c.id, c.v, c.e, c.r, c.base, c.base_type, c.group_order, c.nontrivial, sample
            )?;
        }
        Ok(())
    }
}

/// Monodromy of every component, in component order.
pub fn analyze(g: &QuotientGraph) -> Result<AnalysisReport> {
    let components = g
        .components()
        .par_iter()
        .map(|c| {
            let m = monodromy_group(g, c)?;
            Ok(ComponentReport {
                id: c.id,
                v: c.vertex_count(),
                e: c.edge_count(),
                r: c.circuit_rank(),
                base: m.base,
                base_type: g.table().type_string(m.base),
                group_order: m.group_order,
                nontrivial: m.nontrivial,
                sample_perm: m.sample,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AnalysisReport { degree: g.degree(), components })
}

/// Components with nontrivial monodromy: id, v, e, r, minimal vertex and its type.
pub fn find_nontrivial_components(g: &QuotientGraph) -> Result<Vec<ComponentReport>> {
    Ok(analyze(g)?.components.into_iter().filter(|c| c.nontrivial).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::basis::{canonical_cycle_basis, fundamental_cycle_basis, walk_support};
    use crate::cycles::tree::SpanningTree;
    use crate::graph::build_quotient_graph;
    use rand::{Rng, SeedableRng};

    #[test]
    fn closure_orders() {
        let p = |s: &str| Perm::parse_cycles(s, 5).unwrap();
        assert_eq!(group_order(&[], 5, 10).unwrap(), 1);
        assert_eq!(group_order(&[p("(12)")], 5, 10).unwrap(), 2);
        assert_eq!(group_order(&[p("(12)"), p("(12345)")], 5, 1000).unwrap(), 120);
        assert_eq!(group_order(&[p("(123)"), p("(345)")], 5, 1000).unwrap(), 60);
        assert!(matches!(group_order(&[p("(12)"), p("(12345)")], 5, 50), Err(Error::GroupTooLarge { cap: 50 })));
    }

    #[test]
    fn everything_trivial_below_eight() {
        for n in 4..=7 {
            let g = build_quotient_graph(n).unwrap();
            let report = analyze(&g).unwrap();
            assert_eq!(report.components.len(), g.components().len());
            assert!(report.components.iter().all(|c| c.group_order == 1 && !c.nontrivial));
        }
    }

    #[test]
    fn symmetric_differences_stay_in_the_group() {
        let g = build_quotient_graph(7).unwrap();
        for c in g.components().iter().filter(|c| c.circuit_rank() >= 2) {
            let b = canonical_cycle_basis(&g, c, &fundamental_cycle_basis(&g, c));
            let m = monodromy_group(&g, c).unwrap();
            let x: Vec<usize> = b.cycles[0].support.clone();
            let y: Vec<usize> = b.cycles[1].support.clone();
            let sum: Vec<usize> = (0..c.edge_count()).filter(|j| x.contains(j) != y.contains(j)).collect();
            let one = canonical_cycle_basis(
                &g,
                c,
                &crate::cycles::CycleBasis {
                    component: c.id,
                    edge_order: c.relations.clone(),
                    cycles: vec![crate::cycles::AnchoredCycle { base: c.min_vertex(), walk: vec![], support: sum }],
                },
            );
            let p = g.path_permutation(&one.cycles[0].walk).unwrap();
            let mut gens = m.generators.clone();
            gens.push(p);
            assert_eq!(group_order(&gens, 7, 100).unwrap(), m.group_order);
        }
    }

    #[test]
    fn random_closed_walks_are_trivial_in_degree_seven() {
        let g = build_quotient_graph(7).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for c in g.components().iter().filter(|c| c.circuit_rank() > 0) {
            let tree = SpanningTree::new(&g, c, c.min_vertex()).unwrap();
            for _ in 0..20 {
                let mut walk = Vec::new();
                let mut here = c.min_vertex();
                for _ in 0..rng.gen_range(1..30) {
                    let out = g.out_edges(here);
                    let e = out[rng.gen_range(0..out.len())];
                    walk.push(e);
                    here = g.edge(e).dst;
                }
                walk.extend(tree.path_to_root(&g, here));
                assert!(g.path_permutation(&walk).unwrap().is_identity());
                let _ = walk_support(&g, c, &walk);
            }
        }
    }

    #[test]
    fn report_formats() {
        let g = build_quotient_graph(5).unwrap();
        let r = analyze(&g).unwrap();
        let mut json = Vec::new();
        r.write_json(&mut json).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&json).unwrap();
        assert_eq!(v["components"].as_array().unwrap().len(), 8);
        assert_eq!(v["components"][0]["sample_perm"], serde_json::Value::Null);
        let mut csv = Vec::new();
        r.write_csv(&mut csv).unwrap();
        let csv = String::from_utf8(csv).unwrap();
        assert_eq!(csv.lines().count(), 9);
        assert!(csv.lines().nth(1).unwrap().starts_with("1,2,1,0,"));
    }
}
