//! On-disk memo of final coloring values `D_{s,c}`, keyed by `(m, n, c)`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::coeffring::{parse_coefrat, CoefRat};
use crate::error::{Error, Result};
use crate::sweep::{recursion_dp, Coloring};
use crate::symfunc::Partition;
use crate::vkspace::VElem;

/// Directory holding cache files; caching is off when unset.
pub const CACHE_ENV: &str = "DYCK_TOWER_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct StoredTerm {
    partition: Vec<u8>,
    y: Vec<u8>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct StoredEntry {
    coloring: Coloring,
    k: usize,
    cap: usize,
    terms: Vec<StoredTerm>,
}

#[derive(Serialize, Deserialize)]
struct StoredTable {
    m: usize,
    n: usize,
    entries: Vec<StoredEntry>,
}

pub type ColoringTable = BTreeMap<Coloring, VElem<CoefRat>>;

#[derive(Clone, Debug, Default)]
pub struct ColoringCache {
    dir: Option<PathBuf>,
}

impl ColoringCache {
    pub fn from_env() -> Self {
        ColoringCache { dir: std::env::var_os(CACHE_ENV).map(PathBuf::from) }
    }

    pub fn in_dir(dir: impl AsRef<Path>) -> Self {
        ColoringCache { dir: Some(dir.as_ref().to_path_buf()) }
    }

    pub fn disabled() -> Self {
        ColoringCache { dir: None }
    }

    fn file(&self, m: usize, n: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("colorings_{m}x{n}.json")))
    }

    pub fn load(&self, m: usize, n: usize) -> Result<Option<ColoringTable>> {
        let Some(path) = self.file(m, n) else { return Ok(None) };
        if !path.exists() {
            return Ok(None);
        }
        let stored: StoredTable =
            serde_json::from_str(&fs::read_to_string(&path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        if (stored.m, stored.n) != (m, n) {
            return Err(Error::Parse(format!("{} holds ({},{})", path.display(), stored.m, stored.n)));
        }
        let mut out = BTreeMap::new();
        for e in stored.entries {
            let mut v = VElem::zero(e.k, e.cap);
            for t in e.terms {
                if t.y.len() != e.k {
                    return Err(Error::Parse(format!("term with {} exponents in V_{}", t.y.len(), e.k)));
                }
                v.push((Partition::new(t.partition), t.y), parse_coefrat(&t.coef)?);
            }
            out.insert(e.coloring, v);
        }
        Ok(Some(out))
    }

    pub fn store(&self, m: usize, n: usize, table: &ColoringTable) -> Result<()> {
        let Some(path) = self.file(m, n) else { return Ok(()) };
        if let Some(d) = path.parent() {
            fs::create_dir_all(d)?;
        }
        let entries = table
            .iter()
            .map(|(c, v)| StoredEntry {
                coloring: c.clone(),
                k: v.k(),
                cap: v.cap(),
                terms: v
                    .terms()
                    .iter()
                    .map(|((l, y), c)| StoredTerm { partition: l.parts().to_vec(), y: y.clone(), coef: c.to_string() })
                    .collect(),
            })
            .collect();
        let text = serde_json::to_string(&StoredTable { m, n, entries }).map_err(|e| Error::Io(e.to_string()))?;
        fs::write(path, text)?;
        Ok(())
    }

    /// Final-line values of the coloring recursion, read from the cache when present.
    pub fn final_values(&self, m: usize, n: usize) -> Result<ColoringTable> {
        if let Some(t) = self.load(m, n)? {
            return Ok(t);
        }
        let t = recursion_dp::<CoefRat>(m, n, false)?.last;
        self.store(m, n, &t)?;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = std::env::temp_dir().join(format!("dyck_tower_cache_{}", std::process::id()));
        let cache = ColoringCache::in_dir(&dir);
        let fresh = cache.final_values(2, 3).unwrap();
        assert!(cache.load(2, 3).unwrap().is_some());
        assert_eq!(cache.final_values(2, 3).unwrap(), fresh);
        assert!(ColoringCache::disabled().load(2, 3).unwrap().is_none());
        fs::remove_dir_all(dir).unwrap();
    }
}
