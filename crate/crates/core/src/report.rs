//! Outcome records for exhaustive checks.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMode {
    Exhaustive,
    /// Random sample with a fixed seed; never a proof.
    Sampled,
}

/// An alternative considered while searching for a witness, with its value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alternative {
    pub element: usize,
    pub label: String,
    pub value: i64,
}

/// The offending elements of a failed check.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Witness {
    /// Element indices, in the order the check names them.
    pub elements: Vec<usize>,
    pub labels: Vec<String>,
    /// Values involved (twisting values, ranks, ...), check-specific.
    pub values: Vec<i64>,
    /// Candidates that were tried and rejected, where relevant.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub alternatives: Vec<Alternative>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

/// Result of one named check. `pass == false` exactly when a witness is
/// present; a skipped check passes vacuously and says why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub pass: bool,
    pub witness: Option<Witness>,
    pub pairs_checked: u64,
    pub triples_checked: u64,
    pub mode: CheckMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, witness: Option<Witness>) -> Self {
        VerificationReport {
            check: check.into(),
            pass: witness.is_none(),
            witness,
            pairs_checked: 0,
            triples_checked: 0,
            mode: CheckMode::Exhaustive,
            skipped: None,
        }
    }

    pub fn skipped(check: impl Into<String>, reason: impl Into<String>) -> Self {
        VerificationReport {
            skipped: Some(reason.into()),
            ..Self::new(check, None)
        }
    }

    pub fn with_counts(mut self, pairs: u64, triples: u64) -> Self {
        self.pairs_checked = pairs;
        self.triples_checked = triples;
        self
    }

    pub fn sampled(mut self) -> Self {
        self.mode = CheckMode::Sampled;
        self
    }

    /// `PASS`, `FAIL`, `SAMPLED-PASS` or `SKIPPED`.
    pub fn status(&self) -> &'static str {
        match (self.pass, self.mode, &self.skipped) {
            (_, _, Some(_)) => "SKIPPED",
            (true, CheckMode::Sampled, _) => "SAMPLED-PASS",
            (true, _, _) => "PASS",
            (false, _, _) => "FAIL",
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.status())?;
        if let Some(reason) = &self.skipped {
            write!(f, " ({reason})")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {}", w.labels.join(", "))?;
            if !w.values.is_empty() {
                write!(f, "\n  values: {:?}", w.values)?;
            }
            for alt in &w.alternatives {
                write!(f, "\n  alternative {} -> {}", alt.label, alt.value)?;
            }
            if !w.note.is_empty() {
                write!(f, "\n  {}", w.note)?;
            }
        }
        Ok(())
    }
}
