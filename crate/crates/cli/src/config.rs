//! `key = value` run files. Keys are flag names without the leading dashes
//! (`q-min` and `q_min` are the same key); `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};

#[derive(Debug, Default)]
pub struct ConfigFile {
    path: Option<PathBuf>,
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    /// Loads `path`, rejecting keys outside `allowed`. No path gives an empty file.
    pub fn load(path: Option<&Path>, allowed: &[&str]) -> Result<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        let values = parse(&text).with_context(|| format!("in config {}", path.display()))?;
        if let Some(key) = values.keys().find(|k| !allowed.contains(&k.as_str())) {
            bail!("{}: unknown key `{key}` (expected one of: {})", path.display(), allowed.join(", "));
        }
        Ok(Self { path: Some(path.to_path_buf()), values })
    }

    /// The flag value if given, otherwise the file's value for `key`.
    pub fn merge<T>(&self, flag: Option<T>, key: &str) -> Result<Option<T>>
    where
        T: FromStr,
        T::Err: Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.values.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse().map(Some).map_err(|e| {
                let file = self.path.as_deref().map(|p| p.display().to_string()).unwrap_or_default();
                anyhow!("{file}: bad value `{raw}` for `{key}`: {e}")
            }),
        }
    }

    /// Boolean switches: a set flag wins; otherwise `true`/`false` from the file.
    pub fn merge_flag(&self, flag: bool, key: &str) -> Result<bool> {
        Ok(flag || self.merge::<bool>(None, key)?.unwrap_or(false))
    }
}

fn parse(text: &str) -> Result<BTreeMap<String, String>> {
    let mut values = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| anyhow!("line {}: expected key = value", n + 1))?;
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        if values.insert(key.clone(), value.trim().to_string()).is_some() {
            bail!("line {}: duplicate key `{key}`", n + 1);
        }
    }
    Ok(values)
}
