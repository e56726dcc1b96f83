use std::env;
use std::path::PathBuf;

use interchange::graph::{build_quotient_graph, load_or_build, CacheOutcome, QuotientGraph};

use crate::Global;

/// `--cache-dir`, then `$XDG_CACHE_HOME/interchange`, then
/// `~/.cache/interchange`.
fn cache_dir(g: &Global) -> Option<PathBuf> {
    if g.no_cache {
        return None;
    }
    if let Some(dir) = &g.cache_dir {
        return Some(dir.clone());
    }
    let base = env::var_os("XDG_CACHE_HOME")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("interchange"))
}

pub fn graph(g: &Global, degree: usize) -> anyhow::Result<QuotientGraph> {
    let Some(dir) = cache_dir(g) else {
        return Ok(build_quotient_graph(degree)?);
    };
    if let Err(e) = std::fs::create_dir_all(&dir) {
        eprintln!("warning: cache directory {} unusable ({e}); building without it", dir.display());
        return Ok(build_quotient_graph(degree)?);
    }
    let (graph, outcome) = load_or_build(degree, &dir)?;
    if let CacheOutcome::Rebuilt { reason } = outcome {
        eprintln!("warning: cached graph for degree {degree} discarded ({reason}); rebuilt");
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Format;

    fn global(cache_dir: Option<&str>, no_cache: bool) -> Global {
        Global { format: Format::Text, out: None, cache_dir: cache_dir.map(PathBuf::from), no_cache, workers: None }
    }

    #[test]
    fn explicit_directory_wins_and_no_cache_disables() {
        assert_eq!(cache_dir(&global(Some("/tmp/x"), false)), Some(PathBuf::from("/tmp/x")));
        assert_eq!(cache_dir(&global(Some("/tmp/x"), true)), None);
    }

    #[test]
    fn unusable_directory_falls_back_to_building() {
        let file = tempfile::NamedTempFile::new().unwrap();
        let g = global(Some(file.path().join("sub").to_str().unwrap()), false);
        assert_eq!(graph(&g, 4).unwrap().edge_pair_count(), 1);
    }
}
