use std::time::Instant;

use interchange::graph::{build_quotient_graph, load_or_build, CacheOutcome};
use interchange::rewrite::apply_redex;
use interchange::term::{enumerate_shapes, schroeder_large, Monomial, Perm};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

#[test]
fn enumeration_agrees_with_the_closed_form() {
    let counts = schroeder_large(10).unwrap();
    for n in 1..=9 {
        assert_eq!(enumerate_shapes(n).unwrap().len() as u128, counts[n - 1], "degree {n}");
    }
}

#[test]
fn census_sums() {
    for n in 4..=8 {
        let g = build_quotient_graph(n).unwrap();
        let s = g.component_summary();
        let covered: usize = s.sizes.iter().map(|(size, count)| size * count).sum();
        assert_eq!(covered + s.isolated, g.vertex_count());
        let ranks: usize = g.components().iter().map(|c| c.circuit_rank()).sum();
        let edges: usize = g.components().iter().map(|c| c.edge_count()).sum();
        assert_eq!(edges, s.edge_pairs);
        assert_eq!(ranks + g.vertex_count() - s.isolated, edges + s.components);
    }
}

/// Random walks lift consistently: rewriting the monomial step by step
/// lands where the product of labels says.
#[test]
fn lifting_matches_rewriting() {
    let g = build_quotient_graph(7).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let perms: Vec<Perm> = (0..20)
        .map(|_| {
            let mut images: Vec<usize> = (1..=7).collect();
            images.shuffle(&mut rng);
            Perm::from_images(&images).unwrap()
        })
        .collect();
    for (k, c) in g.components().iter().enumerate() {
        let mut v = c.vertices[rng.gen_range(0..c.vertices.len())];
        let start = Monomial::new(g.table().shape(v).clone(), perms[k % perms.len()].clone()).unwrap();
        let mut here = start.clone();
        let mut walk = Vec::new();
        for _ in 0..12 {
            let out = g.out_edges(v);
            let e = out[rng.gen_range(0..out.len())];
            here = apply_redex(&here, &g.edge(e).redex).unwrap();
            walk.push(e);
            v = g.edge(e).dst;
        }
        let (lifted, _) = g.lift_path(&walk, &start).unwrap();
        assert_eq!(lifted, here);
    }
}

#[test]
fn degree_nine_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let t0 = Instant::now();
    let (built, outcome) = load_or_build(9, dir.path()).unwrap();
    let build_time = t0.elapsed();
    assert_eq!(outcome, CacheOutcome::Built);
    let t1 = Instant::now();
    let (loaded, outcome) = load_or_build(9, dir.path()).unwrap();
    let load_time = t1.elapsed();
    assert_eq!(outcome, CacheOutcome::Hit);
    assert_eq!(loaded, built);
    assert_eq!(loaded.components(), built.components());
    assert!(load_time < build_time, "load {load_time:?} vs build {build_time:?}");
}
