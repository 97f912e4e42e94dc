//! Check results shared by every verifier.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not be evaluated (rewriting or representation error).
    Error,
}

/// One row of a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub axiom: String,
    pub word: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deviation: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CheckEntry {
    /// Exact comparison of two printed values.
    pub fn compare<T: PartialEq + Display>(axiom: &str, word: impl Display, lhs: &T, rhs: &T) -> Self {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        CheckEntry {
            axiom: axiom.to_string(),
            word: word.to_string(),
            status,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            context: None,
            deviation: None,
            tolerance: None,
            error: None,
        }
    }

    /// Numerical comparison: passes when `deviation <= tolerance`.
    pub fn numeric(axiom: &str, word: impl Display, deviation: f64, tolerance: f64) -> Self {
        let status = if deviation <= tolerance { Status::Pass } else { Status::Fail };
        CheckEntry {
            axiom: axiom.to_string(),
            word: word.to_string(),
            status,
            lhs: format!("{deviation:.3e}"),
            rhs: "0".to_string(),
            context: None,
            deviation: Some(deviation),
            tolerance: Some(tolerance),
            error: None,
        }
    }

    pub fn error(axiom: &str, word: impl Display, err: impl Display) -> Self {
        CheckEntry {
            axiom: axiom.to_string(),
            word: word.to_string(),
            status: Status::Error,
            lhs: String::new(),
            rhs: String::new(),
            context: None,
            deviation: None,
            tolerance: None,
            error: Some(err.to_string()),
        }
    }

    /// Fold a fallible exact comparison into an entry.
    pub fn from_result<T: PartialEq + Display, E: Display>(
        axiom: &str,
        word: impl Display,
        sides: Result<(T, T), E>,
    ) -> Self {
        match sides {
            Ok((l, r)) => Self::compare(axiom, word, &l, &r),
            Err(e) => Self::error(axiom, word, e),
        }
    }

    pub fn with_context(mut self, context: impl Into<String>) -> Self {
        self.context = Some(context.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, e: CheckEntry) {
        self.entries.push(e);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(CheckEntry::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(passed, total)` per axiom name.
    pub fn summary(&self) -> BTreeMap<String, (usize, usize)> {
        let mut out: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        for e in &self.entries {
            let slot = out.entry(e.axiom.clone()).or_default();
            slot.0 += e.passed() as usize;
            slot.1 += 1;
        }
        out
    }

    /// Tag every entry that has no context yet.
    pub fn with_context(mut self, context: &str) -> Self {
        for e in &mut self.entries {
            if e.context.is_none() {
                e.context = Some(context.to_string());
            }
        }
        self
    }

    pub fn max_deviation(&self) -> Option<f64> {
        self.entries.iter().filter_map(|e| e.deviation).reduce(f64::max)
    }
}

impl FromIterator<CheckEntry> for Report {
    fn from_iter<I: IntoIterator<Item = CheckEntry>>(iter: I) -> Self {
        Report { entries: iter.into_iter().collect() }
    }
}

impl rayon::iter::FromParallelIterator<CheckEntry> for Report {
    fn from_par_iter<I>(iter: I) -> Self
    where
        I: rayon::iter::IntoParallelIterator<Item = CheckEntry>,
    {
        // indexed collection keeps the input order
        Report { entries: Vec::from_par_iter(iter) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses_and_summary() {
        let mut r = Report::new();
        r.push(CheckEntry::compare("a", "B+1", &1, &1));
        r.push(CheckEntry::compare("a", "B-1", &1, &2));
        r.push(CheckEntry::numeric("b", "I", 1e-12, 1e-10));
        assert!(!r.all_passed());
        assert_eq!(r.summary()["a"], (1, 2));
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.max_deviation(), Some(1e-12));
    }

    #[test]
    fn optional_fields_are_omitted() {
        let e = CheckEntry::compare("counit", "I", &"I", &"I").with_context("pbg");
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, r#"{"axiom":"counit","word":"I","status":"pass","lhs":"I","rhs":"I","context":"pbg"}"#);
    }
}
