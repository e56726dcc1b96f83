use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde_json::json;

use interchange::cycles::analyze as analyze_graph;
use interchange::graph::{write_dot, write_json, QuotientGraph};
use interchange::rewrite::{generate_consequences_inductive, generate_relations};
use interchange::term::{enumerate_shapes, schroeder_large, TypeIndex};
use interchange::witness::kock::{degree_nine_identity, kock_identity, DEGREE_NINE_LEFT};
use interchange::witness::{
    extract_identity, kock_derivation_check, transcribe as read_transcript, verify_proof, CommutativityIdentity,
    IdentityFile, Proof,
};

use crate::{cache, output, Format, Global, VerificationFailed};

/// Largest degree whose type list is printed; beyond it only counts make sense.
const MAX_LISTED_DEGREE: usize = 11;

fn formats(g: &Global, allowed: &[Format]) -> anyhow::Result<Format> {
    if !allowed.contains(&g.format) {
        bail!("--format {:?} is not available for this command", g.format);
    }
    Ok(g.format)
}

fn finish(mut w: Box<dyn Write>) -> anyhow::Result<()> {
    w.flush()?;
    Ok(())
}

fn component_of(graph: &QuotientGraph, vertex: u32) -> anyhow::Result<&interchange::graph::Component> {
    if vertex == 0 || vertex as usize > graph.vertex_count() {
        bail!("vertex {vertex} out of range 1..={}", graph.vertex_count());
    }
    graph.component_of(TypeIndex(vertex)).with_context(|| format!("type {vertex} is isolated"))
}

pub fn schroeder(g: &Global, degree: usize) -> anyhow::Result<()> {
    let fmt = formats(g, &[Format::Text, Format::Json, Format::Csv])?;
    let counts = schroeder_large(degree)?;
    let mut w = output(&g.out)?;
    match fmt {
        Format::Json => {
            let rows: Vec<_> =
                counts.iter().enumerate().map(|(i, t)| json!({"n": i + 1, "count": t.to_string()})).collect();
            serde_json::to_writer(&mut w, &rows)?;
            writeln!(w)?;
        }
        Format::Csv => {
            writeln!(w, "n,count")?;
            for (i, t) in counts.iter().enumerate() {
                writeln!(w, "{},{t}", i + 1)?;
            }
        }
        _ => {
            for (i, t) in counts.iter().enumerate() {
                writeln!(w, "{}\t{t}", i + 1)?;
            }
        }
    }
    finish(w)
}

pub fn types(g: &Global, degree: usize, vertex: Option<u32>) -> anyhow::Result<()> {
    let fmt = formats(g, &[Format::Text, Format::Json, Format::Csv])?;
    if degree > MAX_LISTED_DEGREE {
        bail!("types are listed up to degree {MAX_LISTED_DEGREE}");
    }
    let table = enumerate_shapes(degree)?;
    let indices: Vec<TypeIndex> = match vertex {
        Some(v) if v == 0 || v as usize > table.len() => bail!("vertex {v} out of range 1..={}", table.len()),
        Some(v) => vec![TypeIndex(v)],
        None => (1..=table.len() as u32).map(TypeIndex).collect(),
    };
    let mut w = output(&g.out)?;
    if fmt == Format::Csv {
        writeln!(w, "index,type")?;
    }
    for i in indices {
        let s = table.type_string(i);
        match fmt {
            Format::Json => writeln!(w, "{}", json!({"index": i, "type": s}))?,
            Format::Csv => writeln!(w, "{i},{s}")?,
            _ => writeln!(w, "{i}\t{s}")?,
        }
    }
    finish(w)
}

/// JSON goes out as one relation per line; with `--out`, the type strings
/// go to a sidecar `<out>.types.json` in the same line format.
pub fn relations(g: &Global, degree: usize, check_inductive: bool) -> anyhow::Result<()> {
    let fmt = formats(g, &[Format::Text, Format::Json, Format::Csv])?;
    if degree > 10 {
        bail!("relations are generated up to degree 10");
    }
    let rels = generate_relations(degree)?;
    let table = enumerate_shapes(degree)?;
    let mut w = output(&g.out)?;
    match fmt {
        Format::Json => {
            for r in &rels {
                writeln!(w, "{}", serde_json::to_string(r)?)?;
            }
            if let Some(out) = &g.out {
                let mut side = output(&Some(sidecar(out)))?;
                for i in (1..=table.len() as u32).map(TypeIndex) {
                    writeln!(side, "{}", json!({"index": i, "type": table.type_string(i)}))?;
                }
                finish(side)?;
            }
        }
        Format::Csv => {
            writeln!(w, "left,right,perm")?;
            for r in &rels {
                let images: Vec<String> = r.perm.images().iter().map(ToString::to_string).collect();
                writeln!(w, "{},{},{}", r.left, r.right, images.join(" "))?;
            }
        }
        _ => {
            writeln!(w, "# {} normalized relations in degree {degree}", rels.len())?;
            for r in &rels {
                writeln!(
                    w,
                    "{}\t{}\t{}\t{} ≡ {}",
                    r.left,
                    r.right,
                    r.perm,
                    table.type_string(r.left),
                    table.type_string(r.right)
                )?;
            }
        }
    }
    finish(w)?;
    if check_inductive {
        let ind = generate_consequences_inductive(degree)?;
        let same = ind.normalized == rels;
        eprintln!(
            "inductive: {} consequences, {} normalized, {}",
            ind.count,
            ind.normalized.len(),
            if same { "equal to the redex enumeration" } else { "DIFFERENT from the redex enumeration" }
        );
        if !same {
            return Err(VerificationFailed("inductive and redex-generated relations differ".into()).into());
        }
    }
    Ok(())
}

fn sidecar(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".types.json");
    PathBuf::from(name)
}

pub fn graph(g: &Global, degree: usize, component: Option<usize>) -> anyhow::Result<()> {
    let fmt = formats(g, &[Format::Text, Format::Json, Format::Dot])?;
    let graph = cache::graph(g, degree)?;
    let selected = component.map(|id| graph.component(id)).transpose()?;
    let mut w = output(&g.out)?;
    match fmt {
        Format::Json => write_json(&graph, selected, &mut w)?,
        Format::Dot => match selected {
            Some(c) => write_dot(&graph, std::slice::from_ref(c), &mut w)?,
            None => write_dot(&graph, graph.components(), &mut w)?,
        },
        _ => {
            let rels: Vec<usize> = match selected {
                Some(c) => c.relations.clone(),
                None => (0..graph.edge_pair_count()).collect(),
            };
            writeln!(w, "# relation\tsrc\tdst\tperm")?;
            for k in rels {
                let e = graph.edge(2 * k);
                writeln!(w, "{}\t{}\t{}\t{}", k, e.src, e.dst, e.perm)?;
            }
        }
    }
    finish(w)
}

pub fn components(g: &Global, degree: usize) -> anyhow::Result<()> {
    let fmt = formats(g, &[Format::Text, Format::Json, Format::Csv])?;
    let graph = cache::graph(g, degree)?;
    let s = graph.component_summary();
    let mut w = output(&g.out)?;
    match fmt {
        Format::Json => {
            serde_json::to_writer(&mut w, &s)?;
            writeln!(w)?;
        }
        Format::Csv => {
            writeln!(w, "histogram,key,count")?;
            for (k, v) in &s.sizes {
                writeln!(w, "size,{k},{v}")?;
            }
            for (k, v) in &s.ranks {
                writeln!(w, "rank,{k},{v}")?;
            }
        }
        _ => {
            writeln!(w, "degree {}", s.degree)?;
            writeln!(w, "vertices {}", s.vertices)?;
            writeln!(w, "edge pairs {}", s.edge_pairs)?;
            writeln!(w, "isolated {}", s.isolated)?;
            writeln!(w, "components {}", s.components)?;
            writeln!(w, "free monomials {}", s.free_monomials)?;
            writeln!(w, "\nsize\tcount")?;
            for (k, v) in &s.sizes {
                writeln!(w, "{k}\t{v}")?;
            }
            writeln!(w, "\nrank\tcount")?;
            for (k, v) in &s.ranks {
                writeln!(w, "{k}\t{v}")?;
            }
        }
    }
    finish(w)
}

pub fn analyze(g: &Global, degree: usize) -> anyhow::Result<()> {
    let fmt = formats(g, &[Format::Text, Format::Json, Format::Csv])?;
    let graph = cache::graph(g, degree)?;
    let report = analyze_graph(&graph)?;
    let mut w = output(&g.out)?;
    match fmt {
        Format::Json => report.write_json(&mut w)?,
        Format::Csv => report.write_csv(&mut w)?,
        _ => {
            let rows: Vec<_> = report.nontrivial().collect();
            writeln!(w, "{} nontrivial components", rows.len())?;
            if !rows.is_empty() {
                writeln!(w, "index\tv\te\tr\tv_min\tt_min\torder\tsample")?;
            }
            for c in rows {
                let sample = c.sample_perm.as_ref().map(ToString::to_string).unwrap_or_default();
                writeln!(
                    w,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    c.id, c.v, c.e, c.r, c.base, c.base_type, c.group_order, sample
                )?;
            }
        }
    }
    finish(w)
}

pub fn identity(
    g: &Global,
    degree: usize,
    component: Option<usize>,
    vertex: Option<u32>,
    identity_out: Option<PathBuf>,
) -> anyhow::Result<()> {
    let fmt = formats(g, &[Format::Text, Format::Json])?;
    let graph = cache::graph(g, degree)?;
    let c = match (component, vertex) {
        (Some(id), _) => graph.component(id)?,
        (None, Some(v)) => component_of(&graph, v)?,
        (None, None) => bail!("give --component or --vertex"),
    };
    let at = vertex.map_or(c.min_vertex(), TypeIndex);
    let (id, proof) = extract_identity(&graph, c, at)?;
    verify_proof(&proof).map_err(|f| VerificationFailed(format!("extracted proof does not replay: {f}")))?;
    if let Some(path) = identity_out {
        let mut f = output(&Some(path))?;
        serde_json::to_writer(&mut f, &IdentityFile::new(&id))?;
        writeln!(f)?;
        finish(f)?;
    }
    let mut w = output(&g.out)?;
    match fmt {
        Format::Json => w.write_all(proof.to_json().as_bytes())?,
        _ => {
            writeln!(w, "component {} at type {at}: {}", c.id, graph.table().type_string(at))?;
            writeln!(w, "{id}")?;
            writeln!(w, "pi = {}  exchanges {}", id.pi(), letters(&id))?;
            writeln!(w, "\n{}", proof.to_prose())?;
        }
    }
    finish(w)
}

fn letters(id: &CommutativityIdentity) -> String {
    id.moved_letters().iter().map(char::to_string).collect::<Vec<_>>().join(", ")
}

fn load_proof(file: &Path) -> anyhow::Result<Proof> {
    let text = std::fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    let proof = if text.trim_start().starts_with('{') { Proof::from_json(&text) } else { read_transcript(&text) };
    proof.with_context(|| format!("cannot parse {}", file.display()))
}

pub fn verify(g: &Global, file: &Path) -> anyhow::Result<()> {
    let fmt = formats(g, &[Format::Text, Format::Json])?;
    let proof = load_proof(file)?;
    let result = verify_proof(&proof);
    let mut w = output(&g.out)?;
    match fmt {
        Format::Json => {
            let failure = result.as_ref().err().map(|f| json!({"step": f.step, "reason": f.reason}));
            let rec = json!({"valid": result.is_ok(), "steps": proof.steps.len(), "start": proof.start.to_string(),
                "end": proof.end.to_string(), "failure": failure});
            writeln!(w, "{rec}")?;
        }
        _ => match &result {
            Ok(()) => writeln!(w, "ok: {} steps, {} ≡ {}", proof.steps.len(), proof.start, proof.end)?,
            Err(f) => writeln!(w, "invalid: {f}")?,
        },
    }
    finish(w)?;
    result.map_err(|f| VerificationFailed(format!("{}: {f}", file.display())).into())
}

pub fn transcribe(g: &Global, file: &Path) -> anyhow::Result<()> {
    formats(g, &[Format::Text, Format::Json])?;
    let text = std::fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    let proof = read_transcript(&text).with_context(|| format!("cannot transcribe {}", file.display()))?;
    let mut w = output(&g.out)?;
    w.write_all(proof.to_json().as_bytes())?;
    finish(w)
}

pub fn kock(g: &Global, builtin: bool) -> anyhow::Result<()> {
    let fmt = formats(g, &[Format::Text, Format::Json])?;
    let source = if builtin {
        degree_nine_identity()
    } else {
        let graph = cache::graph(g, 9)?;
        let at = graph.table().index_of_text(DEGREE_NINE_LEFT)?;
        let c = component_of(&graph, at.0)?;
        let (id, proof) = extract_identity(&graph, c, at)?;
        verify_proof(&proof).map_err(|f| VerificationFailed(format!("extracted proof does not replay: {f}")))?;
        id
    };
    let report = kock_derivation_check(&source)?;
    let target = kock_identity();
    let mut w = output(&g.out)?;
    match fmt {
        Format::Json => {
            let renaming = report.renaming.as_ref().map(|r| json!({"rho": r.rho, "sides_swapped": r.sides_swapped}));
            let rec = json!({
                "success": report.success(),
                "source": [report.source.left().to_string(), report.source.right().to_string()],
                "derived": [report.derived.left().to_string(), report.derived.right().to_string()],
                "transposed": [report.transposed.left().to_string(), report.transposed.right().to_string()],
                "target": [target.left().to_string(), target.right().to_string()],
                "renaming": renaming,
            });
            serde_json::to_writer_pretty(&mut w, &rec)?;
            writeln!(w)?;
        }
        _ => {
            writeln!(w, "source:     {}", report.source)?;
            writeln!(w, "derived:    {}", report.derived)?;
            writeln!(w, "transposed: {}", report.transposed)?;
            writeln!(w, "target:     {target}")?;
            match &report.renaming {
                Some(r) => writeln!(w, "renaming:   {r}\nsuccess")?,
                None => writeln!(w, "no renaming matches\nfailure")?,
            }
        }
    }
    finish(w)?;
    if !report.success() {
        return Err(VerificationFailed("the derived identity is not the target up to renaming".into()).into());
    }
    Ok(())
}

pub fn count_monomials(g: &Global, degree: usize) -> anyhow::Result<()> {
    let fmt = formats(g, &[Format::Text, Format::Json])?;
    let graph = cache::graph(g, degree)?;
    let n = graph.count_free_monomials();
    let mut w = output(&g.out)?;
    match fmt {
        Format::Json => writeln!(w, "{}", json!({"degree": degree, "free_monomials": n}))?,
        _ => writeln!(w, "{n}")?,
    }
    finish(w)
}
