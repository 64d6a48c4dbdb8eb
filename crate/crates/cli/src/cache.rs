//! On-disk cache of report bodies, keyed by a hash of the canonical group
//! description, the analysis options and the tool version.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};
use crate::groupfile::GroupDescriptionFile;
use crate::report::{OptionsJson, ReportBody, SCHEMA_VERSION, TOOL_VERSION};

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> CliResult<Self> {
        fs::create_dir_all(dir).map_err(|e| cache_error(dir, e))?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    pub fn key(input: &GroupDescriptionFile, options: &OptionsJson) -> String {
        let mut h = Sha256::new();
        for part in [
            TOOL_VERSION.as_bytes(),
            SCHEMA_VERSION.as_bytes(),
            &serde_json::to_vec(input).expect("plain data"),
            &serde_json::to_vec(options).expect("plain data"),
        ] {
            h.update((part.len() as u64).to_le_bytes());
            h.update(part);
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A cached body for exactly this input and these options. Unreadable or
    /// mismatching entries count as misses.
    pub fn load(&self, key: &str, input: &GroupDescriptionFile, options: &OptionsJson) -> Option<ReportBody> {
        let bytes = fs::read(self.path(key)).ok()?;
        let body: ReportBody = serde_json::from_slice(&bytes).ok()?;
        let matches = body.input == *input
            && body.options == *options
            && body.tool_version == TOOL_VERSION
            && body.schema_version == SCHEMA_VERSION;
        matches.then_some(body)
    }

    /// Writes to a temporary file in the cache directory, then renames it
    /// into place.
    pub fn store(&self, key: &str, body: &ReportBody) -> CliResult<()> {
        let target = self.path(key);
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        let write = || -> std::io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&body.canonical_bytes())?;
            f.sync_all()?;
            fs::rename(&tmp, &target)
        };
        write().map_err(|e| {
            let _ = fs::remove_file(&tmp);
            cache_error(&target, e)
        })
    }
}

fn cache_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::Cache { path: path.to_path_buf(), message: e.to_string() }
}
