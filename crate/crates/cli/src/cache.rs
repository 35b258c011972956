//! On-disk cache of rendered `expand` output.
//!
//! One JSON file per key; the file name is a SHA-256 of the key fields. Reads
//! check every key field and the fingerprint, so a stale or foreign file is a
//! miss. Writes go to a temporary file in the same directory and are renamed.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Changes whenever cached output could change.
pub const FINGERPRINT: &str = concat!("modq-", env!("CARGO_PKG_VERSION"), "/expand-v1");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Key {
    pub name: String,
    pub order: String,
    pub variable: String,
    pub format: String,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    fingerprint: String,
    key: Key,
    output: String,
}

pub struct Cache {
    dir: PathBuf,
}

impl Key {
    fn file_name(&self) -> String {
        let mut h = Sha256::new();
        for part in [FINGERPRINT, &self.name, &self.order, &self.variable, &self.format] {
            h.update(part.as_bytes());
            h.update([0]);
        }
        let digest: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
        format!("{}.json", &digest[..32])
    }
}

/// `$XDG_CACHE_HOME/modq`, else `$HOME/.cache/modq`, else the temp dir.
pub fn default_dir() -> PathBuf {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME").filter(|v| !v.is_empty()) {
        return PathBuf::from(x).join("modq");
    }
    if let Some(h) = std::env::var_os("HOME").filter(|v| !v.is_empty()) {
        return PathBuf::from(h).join(".cache").join("modq");
    }
    std::env::temp_dir().join("modq")
}

impl Cache {
    pub fn new(dir: PathBuf) -> Cache {
        Cache { dir }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn get(&self, key: &Key) -> Option<String> {
        let text = fs::read_to_string(self.dir.join(key.file_name())).ok()?;
        let e: Entry = serde_json::from_str(&text).ok()?;
        (e.fingerprint == FINGERPRINT && &e.key == key).then_some(e.output)
    }

    pub fn put(&self, key: &Key, output: &str) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let e = Entry { fingerprint: FINGERPRINT.to_string(), key: key.clone(), output: output.to_string() };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(serde_json::to_string(&e)?.as_bytes())?;
        tmp.persist(self.dir.join(key.file_name())).map_err(|e| e.error)?;
        Ok(())
    }

    fn entry_files(&self) -> io::Result<Vec<PathBuf>> {
        match fs::read_dir(&self.dir) {
            Ok(rd) => Ok(rd
                .filter_map(|d| d.ok().map(|d| d.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect()),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(Vec::new()),
            Err(e) => Err(e),
        }
    }

    /// Valid entries for this build, sorted by key.
    pub fn list(&self) -> io::Result<Vec<(Key, u64)>> {
        let mut v = Vec::new();
        for p in self.entry_files()? {
            let Ok(text) = fs::read_to_string(&p) else { continue };
            if let Ok(e) = serde_json::from_str::<Entry>(&text) {
                if e.fingerprint == FINGERPRINT {
                    v.push((e.key, text.len() as u64));
                }
            }
        }
        v.sort_by(|a, b| {
            (&a.0.name, &a.0.variable, &a.0.order, &a.0.format).cmp(&(&b.0.name, &b.0.variable, &b.0.order, &b.0.format))
        });
        Ok(v)
    }

    /// Removes every cache file, including ones from other builds.
    pub fn clear(&self) -> io::Result<usize> {
        let files = self.entry_files()?;
        for p in &files {
            fs::remove_file(p)?;
        }
        Ok(files.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(order: &str) -> Key {
        Key { name: "eta".into(), order: order.into(), variable: "q".into(), format: "json".into() }
    }

    #[test]
    fn round_trip_and_clear() {
        let d = tempfile::tempdir().unwrap();
        let c = Cache::new(d.path().join("c"));
        assert!(c.get(&key("5")).is_none());
        assert!(c.list().unwrap().is_empty());
        c.put(&key("5"), "out\n").unwrap();
        assert_eq!(c.get(&key("5")).as_deref(), Some("out\n"));
        assert!(c.get(&key("6")).is_none());
        assert_eq!(c.list().unwrap().len(), 1);
        assert_eq!(c.clear().unwrap(), 1);
        assert!(c.list().unwrap().is_empty());
    }

    #[test]
    fn foreign_fingerprint_is_a_miss() {
        let d = tempfile::tempdir().unwrap();
        let c = Cache::new(d.path().to_path_buf());
        c.put(&key("5"), "out").unwrap();
        let path = d.path().join(key("5").file_name());
        let text = fs::read_to_string(&path).unwrap().replace(FINGERPRINT, "other");
        fs::write(&path, text).unwrap();
        assert!(c.get(&key("5")).is_none());
    }
}
