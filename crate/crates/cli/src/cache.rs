//! On-disk cache of multiplication tables and Green's structures, one
//! gzip-compressed JSON file per key.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use flate2::read::GzDecoder;
use flate2::write::GzEncoder;
use flate2::Compression;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use twistkit_core::semigroup::GreenStructure;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
const SUFFIX: &str = ".json.gz";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Payload {
    pub table: Vec<u32>,
    pub green: GreenStructure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub schema_version: u32,
    pub tool_version: String,
    pub key: String,
    pub payload: Payload,
    /// SHA-256 of the JSON payload, hex.
    pub checksum: String,
}

impl CacheEntry {
    pub fn new(key: &str, payload: Payload) -> Self {
        CacheEntry {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            key: key.to_string(),
            checksum: checksum(&payload),
            payload,
        }
    }
}

fn checksum(payload: &Payload) -> String {
    let json = serde_json::to_vec(payload).expect("payload serializes");
    hex::encode(Sha256::digest(json))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stats {
    pub entries: usize,
    pub bytes: u64,
}

/// A cache rooted at a directory; `None` means caching is disabled.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// `--cache-dir`, then `TWISTKIT_CACHE`, then the platform data directory.
    pub fn resolve(flag: Option<PathBuf>, disabled: bool) -> Self {
        if disabled {
            return Cache { dir: None };
        }
        let dir = flag
            .or_else(|| std::env::var_os("TWISTKIT_CACHE").map(PathBuf::from))
            .or_else(|| dirs::data_dir().map(|d| d.join("twistkit")));
        Cache::at(dir)
    }

    /// Creates the directory if needed; disables the cache with a warning
    /// when that fails.
    pub fn at(dir: Option<PathBuf>) -> Self {
        let dir = dir.and_then(|d| match fs::create_dir_all(&d) {
            Ok(()) => Some(d),
            Err(e) => {
                eprintln!("warning: cache disabled, cannot use {}: {e}", d.display());
                None
            }
        });
        Cache { dir }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        let name = hex::encode(Sha256::digest(key.as_bytes()));
        self.dir.as_ref().map(|d| d.join(format!("{name}{SUFFIX}")))
    }

    /// A hit only when the entry decodes, matches key, schema and tool
    /// version, and its checksum validates. Corrupt files warn.
    pub fn load(&self, key: &str) -> Option<Payload> {
        let path = self.path(key)?;
        let file = fs::File::open(&path).ok()?;
        let mut text = String::new();
        let entry: CacheEntry = match GzDecoder::new(file)
            .read_to_string(&mut text)
            .map_err(|e| e.to_string())
            .and_then(|_| serde_json::from_str(&text).map_err(|e| e.to_string()))
        {
            Ok(entry) => entry,
            Err(e) => {
                eprintln!("warning: ignoring corrupt cache entry {}: {e}", path.display());
                return None;
            }
        };
        if entry.schema_version != SCHEMA_VERSION || entry.tool_version != TOOL_VERSION || entry.key != key {
            return None;
        }
        if checksum(&entry.payload) != entry.checksum {
            eprintln!("warning: ignoring cache entry {} with a bad checksum", path.display());
            return None;
        }
        Some(entry.payload)
    }

    /// Writes to a temporary file and renames it into place. Failures only
    /// warn.
    pub fn store(&self, key: &str, payload: &Payload) {
        let Some(path) = self.path(key) else { return };
        if let Err(e) = self.write_entry(&path, &CacheEntry::new(key, payload.clone())) {
            eprintln!("warning: cannot write cache entry {}: {e}", path.display());
        }
    }

    pub fn write_entry(&self, path: &Path, entry: &CacheEntry) -> std::io::Result<()> {
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        let result = (|| {
            let mut enc = GzEncoder::new(fs::File::create(&tmp)?, Compression::default());
            enc.write_all(&serde_json::to_vec(entry)?)?;
            enc.finish()?.sync_all()?;
            fs::rename(&tmp, path)
        })();
        if result.is_err() {
            let _ = fs::remove_file(&tmp);
        }
        result
    }

    fn entries(&self) -> std::io::Result<Vec<PathBuf>> {
        let Some(dir) = &self.dir else { return Ok(Vec::new()) };
        let mut out = Vec::new();
        for e in fs::read_dir(dir)? {
            let path = e?.path();
            if path.to_string_lossy().ends_with(SUFFIX) {
                out.push(path);
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn stats(&self) -> std::io::Result<Stats> {
        let entries = self.entries()?;
        let mut bytes = 0;
        for p in &entries {
            bytes += fs::metadata(p)?.len();
        }
        Ok(Stats {
            entries: entries.len(),
            bytes,
        })
    }

    /// Removes all entries; returns how many.
    pub fn clear(&self) -> std::io::Result<usize> {
        let entries = self.entries()?;
        for p in &entries {
            fs::remove_file(p)?;
        }
        Ok(entries.len())
    }

    #[cfg(test)]
    pub fn entry_path(&self, key: &str) -> Option<PathBuf> {
        self.path(key)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use twistkit_core::semigroup::{green_structure, FiniteSemigroup};

    fn payload() -> Payload {
        let s = FiniteSemigroup::build(vec![0u8, 1, 2], |a, b| (*a).max(*b), true).unwrap();
        Payload {
            table: s.table().to_vec(),
            green: green_structure(&s).unwrap(),
        }
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(Some(dir.path().to_path_buf()));
        assert_eq!(cache.load("k"), None);
        cache.store("k", &payload());
        assert_eq!(cache.load("k"), Some(payload()));
        assert_eq!(cache.stats().unwrap().entries, 1);
        assert_eq!(cache.clear().unwrap(), 1);
        assert_eq!(cache.load("k"), None);
    }

    #[test]
    fn version_bump_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(Some(dir.path().to_path_buf()));
        let mut entry = CacheEntry::new("k", payload());
        entry.tool_version = "0.0.0-old".into();
        cache.write_entry(&cache.entry_path("k").unwrap(), &entry).unwrap();
        assert_eq!(cache.load("k"), None);
    }

    #[test]
    fn tampered_payload_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::at(Some(dir.path().to_path_buf()));
        let mut entry = CacheEntry::new("k", payload());
        entry.payload.table[0] = 2;
        cache.write_entry(&cache.entry_path("k").unwrap(), &entry).unwrap();
        assert_eq!(cache.load("k"), None);
        fs::write(cache.entry_path("k").unwrap(), b"not gzip").unwrap();
        assert_eq!(cache.load("k"), None);
    }

    #[test]
    fn unwritable_dir_disables() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("plain");
        fs::write(&file, b"x").unwrap();
        let cache = Cache::at(Some(file.join("sub")));
        assert!(cache.dir().is_none());
        cache.store("k", &payload());
        assert_eq!(cache.load("k"), None);
    }
}
