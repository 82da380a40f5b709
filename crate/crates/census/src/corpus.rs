//! Corpus manifests: which groups the suites run over.

use grr_core::group::{Descriptor, GroupSource};
use grr_core::GroupTable;

use crate::error::{CensusError, Result};

/// The checked-in default corpus.
pub const DEFAULT_MANIFEST: &str = include_str!("../../../corpus/default.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub version: Option<u32>,
    pub entries: Vec<String>,
}

/// Parse a manifest: `#` starts a comment, blank lines are ignored, an
/// optional `version N` line may precede the entries, and every other line
/// is one group source. Descriptors are validated here; `.gtab` paths are
/// only checked when loaded.
pub fn parse_manifest(text: &str) -> Result<Manifest> {
    let mut version = None;
    let mut entries: Vec<String> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |msg: String| CensusError::Manifest { line, msg };
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(v) = body.strip_prefix("version") {
            if !v.starts_with(char::is_whitespace) {
                return Err(err(format!("unknown directive {body:?}")));
            }
            if version.is_some() || !entries.is_empty() {
                return Err(err("version must come first and only once".into()));
            }
            version = Some(v.trim().parse().map_err(|_| err(format!("bad version {:?}", v.trim())))?);
            continue;
        }
        if body.contains(char::is_whitespace) {
            return Err(err(format!("entry {body:?} contains whitespace")));
        }
        let entry = if body.ends_with(".gtab") {
            body.to_string()
        } else {
            let d: Descriptor = body.parse().map_err(|e: grr_core::Error| err(e.to_string()))?;
            d.to_string()
        };
        if entries.contains(&entry) {
            return Err(err(format!("duplicate entry {entry}")));
        }
        entries.push(entry);
    }
    Ok(Manifest { version, entries })
}

impl Manifest {
    pub fn default_corpus() -> Self {
        parse_manifest(DEFAULT_MANIFEST).expect("default manifest parses")
    }

    /// Load every entry of order at most `max_order`, in manifest order.
    /// Builtins are filtered before construction; files are loaded first.
    pub fn load(&self, max_order: usize) -> Result<Vec<GroupTable>> {
        let mut out = Vec::new();
        for entry in &self.entries {
            let source: GroupSource = entry.parse()?;
            if let GroupSource::Builtin(d) = &source {
                if d.order() > max_order {
                    continue;
                }
            }
            let g = source.load()?;
            if g.order() <= max_order {
                out.push(g);
            }
        }
        Ok(out)
    }
}
