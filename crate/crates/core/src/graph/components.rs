use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::QuotientGraph;
use crate::term::TypeIndex;

/// A connected component with at least one edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// 1-based position after sorting by size, then by minimal vertex.
    pub id: usize,
    /// Ascending.
    pub vertices: Vec<TypeIndex>,
    /// Relation ids, ascending. This is the canonical edge order.
    pub relations: Vec<usize>,
}

impl Component {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.relations.len()
    }

    /// `e - v + 1`
    pub fn circuit_rank(&self) -> usize {
        self.relations.len() + 1 - self.vertices.len()
    }

    pub fn min_vertex(&self) -> TypeIndex {
        self.vertices[0]
    }

    pub fn contains(&self, v: TypeIndex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Position of `rel` in the canonical edge order.
    pub fn edge_position(&self, rel: usize) -> Option<usize> {
        self.relations.binary_search(&rel).ok()
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub components: Vec<Component>,
    pub isolated: usize,
    /// Component id per vertex slot, 0 for isolated vertices.
    membership: Vec<u32>,
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

impl Decomposition {
    pub(crate) fn new(g: &QuotientGraph) -> Decomposition {
        let n = g.vertex_count();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        for rel in g.relations() {
            let a = find(&mut parent, rel.left.slot() as u32);
            let b = find(&mut parent, rel.right.slot() as u32);
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
        let mut groups: BTreeMap<u32, Component> = BTreeMap::new();
        for (k, rel) in g.relations().iter().enumerate() {
            let root = find(&mut parent, rel.left.slot() as u32);
            groups.entry(root).or_insert_with(|| Component { id: 0, vertices: Vec::new(), relations: Vec::new() });
            groups.get_mut(&root).unwrap().relations.push(k);
        }
        for v in 0..n as u32 {
            let root = find(&mut parent, v);
            if let Some(c) = groups.get_mut(&root) {
                c.vertices.push(TypeIndex::from_slot(v as usize));
            }
        }
        let mut components: Vec<Component> = groups.into_values().collect();
        components.sort_by_key(|c| (c.vertices.len(), c.vertices[0]));
        let mut membership = vec![0u32; n];
        let mut covered = 0;
        for (i, c) in components.iter_mut().enumerate() {
            c.id = i + 1;
            covered += c.vertices.len();
            for v in &c.vertices {
                membership[v.slot()] = c.id as u32;
            }
        }
        Decomposition { components, isolated: n - covered, membership }
    }

    pub fn component_of(&self, v: TypeIndex) -> Option<usize> {
        match self.membership.get(v.slot()) {
            Some(&id) if id > 0 => Some(id as usize),
            _ => None,
        }
    }
}

/// Census of a quotient graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub degree: usize,
    pub vertices: usize,
    pub edge_pairs: usize,
    pub isolated: usize,
    pub components: usize,
    pub free_monomials: usize,
    /// Component size → number of components.
    pub sizes: BTreeMap<usize, usize>,
    /// Circuit rank → number of components.
    pub ranks: BTreeMap<usize, usize>,
}

impl ComponentSummary {
    pub(crate) fn new(g: &QuotientGraph) -> ComponentSummary {
        let d = g.decomposition();
        let mut sizes = BTreeMap::new();
        let mut ranks = BTreeMap::new();
        for c in &d.components {
            *sizes.entry(c.vertex_count()).or_insert(0) += 1;
            *ranks.entry(c.circuit_rank()).or_insert(0) += 1;
        }
        ComponentSummary {
            degree: g.degree(),
            vertices: g.vertex_count(),
            edge_pairs: g.edge_pair_count(),
            isolated: d.isolated,
            components: d.components.len(),
            free_monomials: d.isolated + d.components.len(),
            sizes,
            ranks,
        }
    }
}
