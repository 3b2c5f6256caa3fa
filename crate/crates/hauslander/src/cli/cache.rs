//! On-disk cache under `HA_CACHE_DIR`, keyed by `(n, d, item, version)`.
//! Misses and unreadable entries fall back to recomputation.

use std::path::PathBuf;

use serde::de::DeserializeOwned;
use serde::Serialize;

use super::VERSION;

pub const ENV: &str = "HA_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn from_env() -> Self {
        Cache { dir: std::env::var_os(ENV).filter(|s| !s.is_empty()).map(PathBuf::from) }
    }

    fn path(&self, item: &str, n: usize, d: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|dir| dir.join(format!("{item}-n{n}-d{d}-v{VERSION}.json")))
    }

    pub fn load<T: DeserializeOwned>(&self, item: &str, n: usize, d: usize) -> Option<T> {
        let text = std::fs::read_to_string(self.path(item, n, d)?).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Best effort; a failed write only costs a recomputation later.
    pub fn store<T: Serialize>(&self, item: &str, n: usize, d: usize, value: &T) -> Result<(), String> {
        let Some(p) = self.path(item, n, d) else { return Ok(()) };
        if let Some(parent) = p.parent() {
            std::fs::create_dir_all(parent).map_err(|e| e.to_string())?;
        }
        let text = serde_json::to_string(value).map_err(|e| e.to_string())?;
        std::fs::write(&p, text).map_err(|e| format!("{}: {e}", p.display()))
    }
}
