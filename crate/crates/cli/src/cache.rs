//! On-disk LR-coefficient cache. Purely a warm-start convenience: loading a
//! cache must never change any computed result.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use socle_core::{schur, Partition};

pub const CACHE_VERSION: &str = "lr-cache/1";

#[derive(Debug, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: String,
    /// Canonical triple "eta|mu|nu" (parts comma-separated) to coefficient.
    pub entries: BTreeMap<String, u64>,
}

fn key_of(eta: &Partition, mu: &Partition, nu: &Partition) -> String {
    let fmt = |p: &Partition| {
        p.parts()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("{}|{}|{}", fmt(eta), fmt(mu), fmt(nu))
}

fn parse_key(key: &str) -> Result<(Partition, Partition, Partition), String> {
    let mut parts = key.split('|');
    let mut next = || -> Result<Partition, String> {
        let tok = parts.next().ok_or_else(|| format!("bad cache key {key:?}"))?;
        if tok.is_empty() {
            return Ok(Partition::empty());
        }
        let raw: Vec<i64> = tok
            .split(',')
            .map(|x| x.parse().map_err(|_| format!("bad cache key {key:?}")))
            .collect::<Result<_, _>>()?;
        Partition::parse(&raw).map_err(|e| e.to_string())
    };
    let eta = next()?;
    let mu = next()?;
    let nu = next()?;
    Ok((eta, mu, nu))
}

/// Load a cache file and preload the LR memo table.
pub fn load(path: &Path) -> Result<(), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read cache {}: {e}", path.display()))?;
    let file: CacheFile = serde_json::from_str(&text)
        .map_err(|e| format!("corrupted cache {}: {e}", path.display()))?;
    if file.version != CACHE_VERSION {
        return Err(format!(
            "unknown cache version {:?} in {} (expected {:?})",
            file.version,
            path.display(),
            CACHE_VERSION
        ));
    }
    let mut entries = Vec::with_capacity(file.entries.len());
    for (key, value) in &file.entries {
        let (eta, mu, nu) = parse_key(key)?;
        entries.push((schur::canonical_lr_key(&eta, &mu, &nu), *value));
    }
    schur::preload_lr_memo(entries);
    Ok(())
}

/// Write the current LR memo table back to disk.
pub fn save(path: &Path) -> Result<(), String> {
    let mut entries = BTreeMap::new();
    for ((eta, mu, nu), value) in schur::lr_memo_snapshot() {
        entries.insert(key_of(&eta, &mu, &nu), value);
    }
    let file = CacheFile {
        version: CACHE_VERSION.to_string(),
        entries,
    };
    let text = serde_json::to_string_pretty(&file).expect("cache serializes");
    std::fs::write(path, text).map_err(|e| format!("cannot write cache {}: {e}", path.display()))
}
