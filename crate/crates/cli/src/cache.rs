//! JSON-lines cache for coefficient families.
//!
//! Line 1 is a header `{"cherlink_cache": VERSION}`; every other line is a
//! [`CacheRecord`]. Bad lines are skipped with a warning and recomputed on
//! demand; a header with a different version discards the whole file.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Family {
    Lr,
    Ccoeff,
    Kf,
    Mnchar,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Lr => "LR",
            Family::Ccoeff => "CCOEFF",
            Family::Kf => "KF",
            Family::Mnchar => "MNCHAR",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub version: u32,
    pub family: Family,
    pub key: String,
    pub value: Value,
    pub hash: String,
}

#[derive(Serialize, Deserialize)]
struct Header {
    cherlink_cache: u32,
}

/// sha256 over family, key and the canonical (sorted-key) value.
pub fn record_hash(family: Family, key: &str, value: &Value) -> String {
    let canonical = serde_json::to_string(value).expect("json value serializes");
    let mut h = Sha256::new();
    h.update(format!("{family}\n{key}\n{canonical}").as_bytes());
    hex::encode(h.finalize())
}

impl CacheRecord {
    pub fn new(family: Family, key: String, value: Value) -> Self {
        let hash = record_hash(family, &key, &value);
        CacheRecord { version: SCHEMA_VERSION, family, key, value, hash }
    }

    pub fn is_valid(&self) -> bool {
        self.version == SCHEMA_VERSION && self.hash == record_hash(self.family, &self.key, &self.value)
    }
}

#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    entries: BTreeMap<(Family, String), Value>,
    /// The file needs a fresh header before the next append.
    rewrite: bool,
    warnings: Vec<String>,
    hits: usize,
    misses: usize,
}

impl Cache {
    /// In-memory only.
    pub fn disabled() -> Self {
        Cache::default()
    }

    /// Loads `path`; any problem degrades to a cold start with a warning.
    pub fn open(path: &Path) -> Self {
        let mut cache = Cache { path: Some(path.to_path_buf()), ..Cache::default() };
        let file = match File::open(path) {
            Ok(f) => f,
            Err(e) => {
                if e.kind() != std::io::ErrorKind::NotFound {
                    cache.warnings.push(format!("cache {} unreadable ({e}); starting cold", path.display()));
                }
                cache.rewrite = true;
                return cache;
            }
        };
        let mut lines = BufReader::new(file).lines();
        match lines.next() {
            Some(Ok(first)) => match serde_json::from_str::<Header>(&first) {
                Ok(h) if h.cherlink_cache == SCHEMA_VERSION => {}
                Ok(h) => {
                    cache.warnings.push(format!(
                        "cache schema version {} differs from {SCHEMA_VERSION}; ignoring stale cache",
                        h.cherlink_cache
                    ));
                    cache.rewrite = true;
                    return cache;
                }
                Err(_) => {
                    cache.warnings.push("cache header missing or malformed; starting cold".into());
                    cache.rewrite = true;
                    return cache;
                }
            },
            Some(Err(e)) => {
                cache.warnings.push(format!("cache {} unreadable ({e}); starting cold", path.display()));
                cache.rewrite = true;
                return cache;
            }
            None => {
                cache.rewrite = true;
                return cache;
            }
        }
        for (lineno, line) in lines.enumerate() {
            let Ok(line) = line else {
                cache.warnings.push(format!("cache line {} unreadable; skipped", lineno + 2));
                continue;
            };
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<CacheRecord>(&line) {
                Ok(r) if r.is_valid() => {
                    cache.entries.insert((r.family, r.key), r.value);
                }
                _ => cache.warnings.push(format!("cache line {} failed validation; will recompute", lineno + 2)),
            }
        }
        cache
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn stats(&self) -> (usize, usize) {
        (self.hits, self.misses)
    }

    pub fn get(&self, family: Family, key: &str) -> Option<&Value> {
        self.entries.get(&(family, key.to_string()))
    }

    /// Records a value in memory and appends it to the file.
    pub fn store(&mut self, family: Family, key: &str, value: Value) -> std::io::Result<()> {
        let record = CacheRecord::new(family, key.to_string(), value.clone());
        self.entries.insert((family, key.to_string()), value);
        let Some(path) = &self.path else {
            return Ok(());
        };
        let file = if self.rewrite {
            OpenOptions::new().create(true).write(true).truncate(true).open(path)?
        } else {
            OpenOptions::new().create(true).append(true).open(path)?
        };
        file.lock()?;
        let mut w = &file;
        if self.rewrite {
            writeln!(w, "{}", serde_json::to_string(&Header { cherlink_cache: SCHEMA_VERSION })?)?;
            // keep everything already known in memory
            for ((f, k), v) in &self.entries {
                if (*f, k.as_str()) != (family, key) {
                    writeln!(w, "{}", serde_json::to_string(&CacheRecord::new(*f, k.clone(), v.clone()))?)?;
                }
            }
            self.rewrite = false;
        }
        writeln!(w, "{}", serde_json::to_string(&record)?)?;
        file.unlock()?;
        Ok(())
    }

    /// Cached value for `(family, key)`, computing and storing it on a miss.
    /// Errors from `compute` are not cached; a failed write only produces a warning.
    pub fn get_or_compute<T, E, F>(&mut self, family: Family, key: &str, compute: F) -> Result<T, E>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T, E>,
    {
        if let Some(v) = self.get(family, key) {
            if let Ok(t) = serde_json::from_value::<T>(v.clone()) {
                self.hits += 1;
                return Ok(t);
            }
        }
        self.misses += 1;
        let t = compute()?;
        let v = serde_json::to_value(&t).expect("cache values serialize");
        if let Err(e) = self.store(family, key, v) {
            self.warnings.push(format!("cache write failed: {e}"));
        }
        Ok(t)
    }
}
