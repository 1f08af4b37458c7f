//! The constants catalogue: every numeric constant used by the bound
//! evaluators and lemma checks, keyed by a stable label and tagged with the
//! statement it belongs to.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../data/constants.csv");

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CatalogueEntry {
    pub label: String,
    pub value: f64,
    pub anchor: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Catalogue {
    entries: Vec<CatalogueEntry>,
    index: HashMap<String, usize>,
}

impl Catalogue {
    /// The catalogue shipped with the crate.
    pub fn builtin() -> &'static Catalogue {
        static CELL: OnceLock<Catalogue> = OnceLock::new();
        CELL.get_or_init(|| Catalogue::parse(BUILTIN).expect("builtin catalogue is well formed"))
    }

    /// Parses `label,value,anchor` records. The first line is a header; blank
    /// lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut index = HashMap::new();
        for (lineno, line) in text.lines().enumerate().skip(1) {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            let [label, value, anchor] = fields[..] else {
                return Err(Error::Catalogue(format!(
                    "line {}: expected 3 fields, found {}",
                    lineno + 1,
                    fields.len()
                )));
            };
            let value: f64 = value.parse().map_err(|_| {
                Error::Catalogue(format!("line {}: bad value `{value}`", lineno + 1))
            })?;
            if !value.is_finite() {
                return Err(Error::Catalogue(format!(
                    "line {}: non-finite value",
                    lineno + 1
                )));
            }
            if index.insert(label.to_string(), entries.len()).is_some() {
                return Err(Error::Catalogue(format!(
                    "line {}: duplicate label `{label}`",
                    lineno + 1
                )));
            }
            entries.push(CatalogueEntry {
                label: label.to_string(),
                value,
                anchor: anchor.to_string(),
            });
        }
        Ok(Self { entries, index })
    }

    pub fn entries(&self) -> &[CatalogueEntry] {
        &self.entries
    }

    pub fn try_get(&self, label: &str) -> Option<f64> {
        self.index.get(label).map(|&i| self.entries[i].value)
    }

    /// Value of `label`.
    ///
    /// # Panics
    /// If the label is absent. Labels are fixed in code, so a miss is a
    /// programming error rather than an input error.
    pub fn get(&self, label: &str) -> f64 {
        self.try_get(label)
            .unwrap_or_else(|| panic!("constant `{label}` missing from catalogue"))
    }

    /// A copy with one constant replaced.
    pub fn with_override(&self, label: &str, value: f64) -> Result<Self> {
        let &i = self
            .index
            .get(label)
            .ok_or_else(|| Error::Catalogue(format!("unknown label `{label}`")))?;
        let mut out = self.clone();
        out.entries[i].value = value;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses_with_unique_labels() {
        let c = Catalogue::builtin();
        assert!(c.entries().len() > 150);
        assert_eq!(c.get("largerho.x423log"), 14.712);
        assert_eq!(c.get("pi.const"), -237.934);
        assert_eq!(c.get("r1.break_large"), 1e29);
    }

    #[test]
    fn override_replaces_one_value() {
        let c = Catalogue::builtin();
        let d = c.with_override("lemma423log.rhs", 10.0).unwrap();
        assert_eq!(d.get("lemma423log.rhs"), 10.0);
        assert_eq!(d.get("largerho.x423log"), 14.712);
        assert!(c.with_override("no.such", 1.0).is_err());
    }

    #[test]
    fn malformed_records_rejected() {
        assert!(Catalogue::parse("h\na,1,x\na,2,y\n").is_err());
        assert!(Catalogue::parse("h\na,zz,x\n").is_err());
        assert!(Catalogue::parse("h\na,1\n").is_err());
        assert!(Catalogue::parse("h\n# note\n\na,1,x\n").is_ok());
    }
}
