//! File-backed result cache, one JSON entry per request key.
//!
//! Entries are written atomically (unique temp file, then rename), so
//! concurrent runs can share a directory.  A version bump invalidates
//! silently; a corrupt entry warns on stderr and recomputes.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct CacheEntry {
    pub key: String,
    pub engine_version: String,
    pub created_at: u64,
    pub payload: String,
}

pub struct CacheStore {
    dir: PathBuf,
    enabled: bool,
}

fn default_dir() -> PathBuf {
    if let Ok(d) = std::env::var("BHLAB_CACHE_DIR") {
        return PathBuf::from(d);
    }
    if let Ok(d) = std::env::var("XDG_CACHE_HOME") {
        return Path::new(&d).join("bhlab");
    }
    if let Ok(d) = std::env::var("HOME") {
        return Path::new(&d).join(".cache").join("bhlab");
    }
    std::env::temp_dir().join("bhlab-cache")
}

impl CacheStore {
    pub fn open(no_cache: bool) -> Self {
        CacheStore {
            dir: default_dir(),
            enabled: !no_cache,
        }
    }

    pub fn at(dir: PathBuf) -> Self {
        CacheStore { dir, enabled: true }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn entry_path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", key))
    }

    pub fn get(&self, key: &str) -> Option<CacheEntry> {
        if !self.enabled {
            return None;
        }
        let path = self.entry_path(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return None,
            Err(e) => {
                eprintln!("warning: unreadable cache entry {}: {}", path.display(), e);
                return None;
            }
        };
        let entry: CacheEntry = match serde_json::from_str(&text) {
            Ok(e) => e,
            Err(e) => {
                eprintln!(
                    "warning: corrupt cache entry {}: {}; recomputing",
                    path.display(),
                    e
                );
                return None;
            }
        };
        if entry.key != key {
            eprintln!(
                "warning: cache entry {} holds key {}; recomputing",
                path.display(),
                entry.key
            );
            return None;
        }
        if entry.engine_version != bhlab_core::ENGINE_VERSION {
            return None;
        }
        Some(entry)
    }

    pub fn put(&self, key: &str, payload: String) {
        if !self.enabled {
            return;
        }
        let entry = CacheEntry {
            key: key.to_string(),
            engine_version: bhlab_core::ENGINE_VERSION.to_string(),
            created_at: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            payload,
        };
        if let Err(e) = self.put_entry(&entry) {
            eprintln!("warning: could not write cache entry {}: {}", key, e);
        }
    }

    fn put_entry(&self, entry: &CacheEntry) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!(
            "{}.tmp.{}.{}",
            entry.key,
            std::process::id(),
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.subsec_nanos())
                .unwrap_or(0)
        ));
        let text = serde_json::to_string(entry).expect("cache entry serialization cannot fail");
        fs::write(&tmp, text)?;
        fs::rename(&tmp, self.entry_path(&entry.key))
    }

    /// All parseable entries, sorted by key.
    pub fn entries(&self) -> Vec<CacheEntry> {
        if !self.enabled {
            return Vec::new();
        }
        let mut out = Vec::new();
        let dir = match fs::read_dir(&self.dir) {
            Ok(d) => d,
            Err(_) => return out,
        };
        for item in dir.flatten() {
            let path = item.path();
            if path.extension().and_then(|e| e.to_str()) != Some("json") {
                continue;
            }
            if let Ok(text) = fs::read_to_string(&path) {
                if let Ok(entry) = serde_json::from_str::<CacheEntry>(&text) {
                    out.push(entry);
                }
            }
        }
        out.sort_by(|a, b| a.key.cmp(&b.key));
        out
    }

    pub fn clear(&self) -> io::Result<usize> {
        let mut removed = 0;
        let dir = match fs::read_dir(&self.dir) {
            Ok(d) => d,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e),
        };
        for item in dir {
            let path = item?.path();
            if path.extension().and_then(|e| e.to_str()) == Some("json") {
                fs::remove_file(&path)?;
                removed += 1;
            }
        }
        Ok(removed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn store() -> (tempfile::TempDir, CacheStore) {
        let dir = tempfile::tempdir().unwrap();
        let store = CacheStore::at(dir.path().to_path_buf());
        (dir, store)
    }

    #[test]
    fn round_trip() {
        let (_guard, store) = store();
        assert!(store.get("abc").is_none());
        store.put("abc", "payload".into());
        let entry = store.get("abc").unwrap();
        assert_eq!(entry.payload, "payload");
        assert_eq!(entry.engine_version, bhlab_core::ENGINE_VERSION);
    }

    #[test]
    fn corrupt_entries_miss_and_warn() {
        let (_guard, store) = store();
        store.put("abc", "payload".into());
        fs::write(store.entry_path("abc"), "not json at all").unwrap();
        assert!(store.get("abc").is_none());
    }

    #[test]
    fn version_mismatch_misses_silently() {
        let (_guard, store) = store();
        store.put("abc", "payload".into());
        let path = store.entry_path("abc");
        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, text.replace(bhlab_core::ENGINE_VERSION, "0.0.0-old")).unwrap();
        assert!(store.get("abc").is_none());
    }

    #[test]
    fn key_mismatch_is_treated_as_corrupt() {
        let (_guard, store) = store();
        store.put("abc", "payload".into());
        fs::rename(store.entry_path("abc"), store.entry_path("def")).unwrap();
        assert!(store.get("def").is_none());
    }

    #[test]
    fn disabled_store_neither_reads_nor_writes() {
        let dir = tempfile::tempdir().unwrap();
        let mut store = CacheStore::at(dir.path().to_path_buf());
        store.enabled = false;
        store.put("abc", "payload".into());
        assert!(store.get("abc").is_none());
        assert!(store.entries().is_empty());
    }

    #[test]
    fn concurrent_writers_leave_one_valid_entry() {
        let (_guard, store) = store();
        std::thread::scope(|s| {
            for i in 0..8 {
                let store = &store;
                s.spawn(move || {
                    store.put("shared", format!("payload-{}", i));
                });
            }
        });
        let entry = store.get("shared").unwrap();
        assert!(entry.payload.starts_with("payload-"));
        assert_eq!(store.entries().len(), 1);
    }

    #[test]
    fn clear_reports_the_number_removed() {
        let (_guard, store) = store();
        store.put("a", "1".into());
        store.put("b", "2".into());
        assert_eq!(store.clear().unwrap(), 2);
        assert!(store.entries().is_empty());
        assert_eq!(store.clear().unwrap(), 0);
    }
}
