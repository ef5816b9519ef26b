//! Process-wide store of Macdonald and Green tables.
//!
//! Each `(kind, degree, binding)` key owns a once-cell, so concurrent requests
//! for the same table build it once. The whole store can be written to and
//! read from a versioned JSON file; a file with a different version is
//! ignored in full.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Arc;

use once_cell::sync::{Lazy, OnceCell};
use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::macdonald::{GreenTable, MacTable};
use crate::symfunc::Binding;

pub const CACHE_VERSION: &str = "macsym-cache-v1";

type Cell<T> = Arc<OnceCell<Arc<T>>>;

#[derive(Default)]
struct Store {
    mac: RwLock<HashMap<(usize, String), Cell<MacTable>>>,
    green: RwLock<HashMap<usize, Cell<GreenTable>>>,
}

static STORE: Lazy<Store> = Lazy::new(Store::default);

fn cell<K: std::hash::Hash + Eq + Clone, T>(map: &RwLock<HashMap<K, Cell<T>>>, key: &K) -> Cell<T> {
    if let Some(c) = map.read().get(key) {
        return c.clone();
    }
    map.write().entry(key.clone()).or_default().clone()
}

pub(crate) fn mac_table(n: usize, binding: &Binding) -> Result<Arc<MacTable>> {
    let c = cell(&STORE.mac, &(n, binding.key().to_string()));
    c.get_or_try_init(|| MacTable::build(n, binding).map(Arc::new))
        .cloned()
}

pub(crate) fn green_table(n: usize) -> Result<Arc<GreenTable>> {
    let c = cell(&STORE.green, &n);
    c.get_or_try_init(|| GreenTable::build(n).map(Arc::new)).cloned()
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: String,
    mac: Vec<MacTable>,
    green: Vec<GreenTable>,
}

/// Number of tables currently held.
pub fn len() -> usize {
    STORE.mac.read().values().filter(|c| c.get().is_some()).count()
        + STORE.green.read().values().filter(|c| c.get().is_some()).count()
}

/// Drops every table.
pub fn clear() {
    STORE.mac.write().clear();
    STORE.green.write().clear();
}

/// Writes all built tables, sorted by key so the file is reproducible.
pub fn save(path: &Path) -> Result<()> {
    let mac: BTreeMap<(usize, String), Arc<MacTable>> = STORE
        .mac
        .read()
        .iter()
        .filter_map(|(k, c)| c.get().map(|t| (k.clone(), t.clone())))
        .collect();
    let green: BTreeMap<usize, Arc<GreenTable>> = STORE
        .green
        .read()
        .iter()
        .filter_map(|(k, c)| c.get().map(|t| (*k, t.clone())))
        .collect();
    let file = CacheFile {
        version: CACHE_VERSION.to_string(),
        mac: mac.into_values().map(|t| (*t).clone()).collect(),
        green: green.into_values().map(|t| (*t).clone()).collect(),
    };
    let s = serde_json::to_string(&file).map_err(|e| Error::Parse(e.to_string()))?;
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, s).map_err(|e| Error::Parse(format!("{}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Loads tables from `path`. Returns the number loaded; a missing file or a
/// version mismatch loads nothing.
pub fn load(path: &Path) -> Result<usize> {
    let Ok(s) = std::fs::read_to_string(path) else {
        return Ok(0);
    };
    let v: serde_json::Value = match serde_json::from_str(&s) {
        Ok(v) => v,
        Err(_) => return Ok(0),
    };
    if v.get("version").and_then(|x| x.as_str()) != Some(CACHE_VERSION) {
        return Ok(0);
    }
    let file: CacheFile = match serde_json::from_value(v) {
        Ok(f) => f,
        Err(_) => return Ok(0),
    };
    let mut count = 0;
    for t in file.mac {
        let c = cell(&STORE.mac, &(t.degree, t.binding.key().to_string()));
        if c.set(Arc::new(t)).is_ok() {
            count += 1;
        }
    }
    for t in file.green {
        let c = cell(&STORE.green, &t.degree);
        if c.set(Arc::new(t)).is_ok() {
            count += 1;
        }
    }
    Ok(count)
}
