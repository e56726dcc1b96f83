//! On-disk cache of a built quotient graph.
//!
//! A cache file is one JSON header line followed by a JSON body holding the
//! directed edges (with their redexes). The header records the format
//! version, degree, counts and the SHA-256 of the body; any mismatch makes
//! the loader rebuild.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{build_quotient_graph, Edge, QuotientGraph};
use crate::term::ShapeTable;

pub const CACHE_VERSION: u32 = 1;
const FORMAT: &str = "interchange-quotient-graph";

#[derive(Debug, PartialEq, Eq, Serialize, Deserialize)]
struct Header {
    format: String,
    version: u32,
    degree: usize,
    vertices: usize,
    edge_pairs: usize,
    sha256: String,
}

pub fn cache_file(dir: &Path, degree: usize) -> PathBuf {
    dir.join(format!("graph-degree-{degree}.v{CACHE_VERSION}.cache"))
}

/// Writes the cache atomically (temporary file, then rename).
pub fn write_cache(g: &QuotientGraph, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let body = serde_json::to_vec(g.edges())?;
    let header = Header {
        format: FORMAT.into(),
        version: CACHE_VERSION,
        degree: g.degree(),
        vertices: g.vertex_count(),
        edge_pairs: g.edge_pair_count(),
        sha256: hex::encode(Sha256::digest(&body)),
    };
    let path = cache_file(dir, g.degree());
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        serde_json::to_writer(&mut f, &header)?;
        f.write_all(b"\n")?;
        f.write_all(&body)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, &path)?;
    Ok(path)
}

pub fn read_cache(dir: &Path, degree: usize) -> Result<QuotientGraph> {
    let bytes = fs::read(cache_file(dir, degree))?;
    let split = bytes.iter().position(|&b| b == b'\n').ok_or_else(|| Error::Cache("missing header line".into()))?;
    let header: Header =
        serde_json::from_slice(&bytes[..split]).map_err(|e| Error::Cache(format!("unreadable header: {e}")))?;
    let body = &bytes[split + 1..];
    if header.format != FORMAT || header.version != CACHE_VERSION {
        return Err(Error::Cache(format!("format {} v{} is not supported", header.format, header.version)));
    }
    if header.degree != degree {
        return Err(Error::Cache(format!("file holds degree {}, wanted {degree}", header.degree)));
    }
    if hex::encode(Sha256::digest(body)) != header.sha256 {
        return Err(Error::Cache("checksum mismatch".into()));
    }
    let table = ShapeTable::new(degree)?;
    if header.vertices != table.len() {
        return Err(Error::Cache(format!("vertex count {} disagrees with the type table", header.vertices)));
    }
    let edges: Vec<Edge> = serde_json::from_slice(body).map_err(|e| Error::Cache(format!("unreadable body: {e}")))?;
    if edges.len() != 2 * header.edge_pairs {
        return Err(Error::Cache("edge count disagrees with header".into()));
    }
    QuotientGraph::from_parts(table, edges)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    Hit,
    Built,
    /// The cache existed but could not be used.
    Rebuilt {
        reason: String,
    },
}

/// Loads `G(degree)` from the cache directory, building and storing it if
/// the file is missing or unusable.
pub fn load_or_build(degree: usize, dir: &Path) -> Result<(QuotientGraph, CacheOutcome)> {
    let outcome = match read_cache(dir, degree) {
        Ok(g) => return Ok((g, CacheOutcome::Hit)),
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::NotFound => CacheOutcome::Built,
        Err(e) => CacheOutcome::Rebuilt { reason: e.to_string() },
    };
    let g = build_quotient_graph(degree)?;
    write_cache(&g, dir)?;
    Ok((g, outcome))
}
