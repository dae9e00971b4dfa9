//! Content-addressed on-disk cache of reports.
//!
//! Entries are keyed by a digest of everything that determines a report, so a
//! stale entry can never be served. Failures to read or write are ignored.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use crate::report::{sha256_hex, Report};

pub const CACHE_DIR_ENV: &str = "KNOTRACE_CACHE_DIR";

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$KNOTRACE_CACHE_DIR`, else `$XDG_CACHE_HOME/knotrace`, else `~/.cache/knotrace`.
    pub fn from_env() -> Option<Self> {
        if let Some(dir) = std::env::var_os(CACHE_DIR_ENV) {
            return Some(Cache::new(dir));
        }
        if let Some(xdg) = std::env::var_os("XDG_CACHE_HOME") {
            return Some(Cache::new(Path::new(&xdg).join("knotrace")));
        }
        std::env::var_os("HOME").map(|h| Cache::new(Path::new(&h).join(".cache").join("knotrace")))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Digest of the ordered key parts, with a separator that cannot occur in them.
    pub fn key(parts: &[&str]) -> String {
        let mut buf = Vec::new();
        for p in parts {
            buf.extend_from_slice(&(p.len() as u64).to_le_bytes());
            buf.extend_from_slice(p.as_bytes());
        }
        sha256_hex(&buf)
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<Report> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Writes via a temporary file and an atomic rename, so concurrent writers
    /// of the same key leave one complete entry.
    pub fn put(&self, key: &str, report: &Report) {
        let _ = self.try_put(key, report);
    }

    fn try_put(&self, key: &str, report: &Report) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(report.to_json().as_bytes())?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}
