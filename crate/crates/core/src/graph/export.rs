use std::io::{self, Write};

use serde::Serialize;

use crate::graph::{Component, QuotientGraph};
use crate::term::{Perm, TypeIndex};

#[derive(Serialize)]
struct VertexRecord<'a> {
    index: TypeIndex,
    #[serde(rename = "type")]
    type_string: &'a str,
}

#[derive(Serialize)]
struct EdgeRecord<'a> {
    src: TypeIndex,
    dst: TypeIndex,
    perm: &'a Perm,
    relation_id: usize,
}

/// Streams the graph, or one component of it, as JSON.
///
/// Vertices are listed in index order and directed edges in edge-id order,
/// one record per line, so output is stable across runs.
pub fn write_json<W: Write>(g: &QuotientGraph, component: Option<&Component>, mut w: W) -> io::Result<()> {
    let vertices: Box<dyn Iterator<Item = TypeIndex>> = match component {
        Some(c) => Box::new(c.vertices.iter().copied()),
        None => Box::new((1..=g.vertex_count() as u32).map(TypeIndex)),
    };
    let edges: Box<dyn Iterator<Item = usize>> = match component {
        Some(c) => Box::new(c.relations.iter().flat_map(|&k| [2 * k, 2 * k + 1])),
        None => Box::new(0..g.edges().len()),
    };
    writeln!(w, "{{\"degree\":{},\"vertices\":[", g.degree())?;
    for (i, v) in vertices.enumerate() {
        let s = g.table().type_string(v);
        let rec = VertexRecord { index: v, type_string: &s };
        writeln!(w, "{}{}", if i > 0 { "," } else { "" }, serde_json::to_string(&rec)?)?;
    }
    writeln!(w, "],\"edges\":[")?;
    for (i, e) in edges.enumerate() {
        let edge = g.edge(e);
        let rec = EdgeRecord { src: edge.src, dst: edge.dst, perm: &edge.perm, relation_id: edge.relation };
        writeln!(w, "{}{}", if i > 0 { "," } else { "" }, serde_json::to_string(&rec)?)?;
    }
    writeln!(w, "]}}")
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One digraph per component. Each relation is drawn once, from its smaller
/// type to its larger one, labelled by its permutation; the reverse edge
/// carries the inverse label and is implied.
pub fn write_dot<W: Write>(g: &QuotientGraph, components: &[Component], mut w: W) -> io::Result<()> {
    for c in components {
        writeln!(w, "digraph component_{} {{", c.id)?;
        for &v in &c.vertices {
            let label = format!("{v}\\n{}", dot_escape(&g.table().type_string(v)));
            writeln!(w, "  v{v} [label=\"{label}\"];")?;
        }
        for &k in &c.relations {
            let edge = g.edge(2 * k);
            writeln!(w, "  v{} -> v{} [label=\"{}\"];", edge.src, edge.dst, edge.perm)?;
        }
        writeln!(w, "}}")?;
    }
    Ok(())
}
