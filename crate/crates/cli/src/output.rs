//! All-or-nothing output staging: files are rendered in memory first and
//! persisted together, so a failing run leaves no partial outputs behind.

use anyhow::{Context, Result};
use std::path::{Path, PathBuf};

pub struct OutputSet {
    dir: PathBuf,
    files: Vec<(String, Vec<u8>)>,
}

impl OutputSet {
    pub fn new(dir: &Path) -> Self {
        Self {
            dir: dir.to_path_buf(),
            files: Vec::new(),
        }
    }

    pub fn add(&mut self, name: &str, bytes: impl Into<Vec<u8>>) {
        self.files.push((name.to_string(), bytes.into()));
    }

    /// Write every staged file; on any failure remove what was already
    /// written and report the error.
    pub fn persist(self) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating output directory {}", self.dir.display()))?;
        let mut written = Vec::new();
        for (name, bytes) in &self.files {
            let path = self.dir.join(name);
            match std::fs::write(&path, bytes) {
                Ok(()) => written.push(path),
                Err(e) => {
                    for w in &written {
                        let _ = std::fs::remove_file(w);
                    }
                    return Err(e)
                        .with_context(|| format!("writing {}", self.dir.join(name).display()));
                }
            }
        }
        Ok(written)
    }
}
