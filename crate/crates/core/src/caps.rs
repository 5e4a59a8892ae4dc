//! Limits on the exhaustive searches.

use crate::error::{Error, Result};

/// Bounds for enumeration. Every exhaustive procedure checks the relevant
/// field and reports [`Error::Cap`] instead of degrading silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of semipaths produced by one enumeration.
    pub semipaths: usize,
    /// Maximum number of inner edges for subset enumeration of cutsets.
    pub inner_edges: usize,
    /// Maximum list length for permutation searches.
    pub perm: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { semipaths: 1_000_000, inner_edges: 12, perm: 9 }
    }
}

impl Caps {
    /// Reads overrides from `JUNCTA_CAPS`, formatted as
    /// `semipaths=N,inner_edges=N,perm=N` (any subset, any order).
    pub fn from_env() -> Result<Self> {
        match std::env::var("JUNCTA_CAPS") {
            Ok(spec) => Caps::default().with_overrides(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }

    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("cap override `{part}` lacks `=`")))?;
            let n: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("cap value `{value}` is not a number")))?;
            match key.trim() {
                "semipaths" => self.semipaths = n,
                "inner_edges" => self.inner_edges = n,
                "perm" => self.perm = n,
                other => return Err(Error::Parse(format!("unknown cap `{other}`"))),
            }
        }
        Ok(self)
    }

    /// A configuration without practical limits, for callers that bound
    /// instance size themselves.
    pub fn unbounded() -> Self {
        Caps { semipaths: usize::MAX, inner_edges: 64, perm: usize::MAX }
    }
}
