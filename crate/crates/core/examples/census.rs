//! Prints the census of `G(n)` and its nontrivial components.
//!
//! `cargo run --release -p interchange --example census -- 9`

use std::time::Instant;

use interchange::cycles::find_nontrivial_components;
use interchange::graph::build_quotient_graph;

fn main() -> interchange::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let start = Instant::now();
    let g = build_quotient_graph(n)?;
    let s = g.component_summary();
    println!(
        "degree {n}: {} vertices, {} edge pairs, {} isolated, {} components",
        s.vertices, s.edge_pairs, s.isolated, s.components
    );
    println!("sizes {:?}", s.sizes);
    println!("ranks {:?}", s.ranks);
    for row in find_nontrivial_components(&g)? {
        println!(
            "{} v={} e={} r={} min={} {} order={} {:?}",
            row.id,
            row.v,
            row.e,
            row.r,
            row.base,
            row.base_type,
            row.group_order,
            row.sample_perm.map(|p| p.to_string())
        );
    }
    eprintln!("{:.1?}", start.elapsed());
    Ok(())
}
