//! Check results and their text / JSON renderings.

use serde::Serialize;

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    PassModIdeal,
    Fail,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::PassModIdeal => "pass-mod-ideal",
            Status::Fail => "fail",
        }
    }

    pub fn is_pass(self) -> bool {
        self != Status::Fail
    }
}

/// The two sides of a failed identity and `residual = rhs - lhs`.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
}

/// One product `coefficient · left · relation · right` of a membership
/// certificate. For tensors, `slot` is the tensor slot the ideal element sits
/// in and `context` the pure tensor around it (`_` marks the slot).
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct CertificateRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slot: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub context: Option<String>,
    pub left: String,
    pub relation: usize,
    pub right: String,
    pub coefficient: String,
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub scenario: String,
    pub check: String,
    pub element: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<CertificateRecord>>,
    pub degree_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckEntry {
    pub fn new(scenario: &str, check: &str, element: &str, status: Status, degree_bound: usize) -> CheckEntry {
        CheckEntry {
            scenario: scenario.to_string(),
            check: check.to_string(),
            element: element.to_string(),
            status,
            witness: None,
            certificate: None,
            degree_bound,
            note: None,
        }
    }

    /// A yes/no fact (such as an expected refusal) rather than an identity.
    pub fn assertion(scenario: &str, check: &str, element: &str, holds: bool, note: impl Into<String>) -> CheckEntry {
        let status = if holds { Status::Pass } else { Status::Fail };
        let mut e = CheckEntry::new(scenario, check, element, status, 0);
        e.note = Some(note.into());
        e
    }

    pub fn with_note(mut self, note: impl Into<String>) -> CheckEntry {
        self.note = Some(note.into());
        self
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Summary {
    pub scenarios: Vec<String>,
    pub checks: usize,
    pub passed: usize,
    pub passed_mod_ideal: usize,
    pub failed: usize,
    pub elapsed_ms: Option<u64>,
}

#[derive(Serialize, Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub scenarios: Vec<String>,
    pub entries: Vec<CheckEntry>,
    #[serde(skip)]
    pub elapsed_ms: Option<u64>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    entries: &'a [CheckEntry],
    summary: Summary,
}

impl Report {
    pub fn new(scenario: &str) -> Report {
        Report { scenarios: vec![scenario.to_string()], entries: Vec::new(), elapsed_ms: None }
    }

    pub fn push(&mut self, e: CheckEntry) {
        self.entries.push(e);
    }

    pub fn extend(&mut self, es: impl IntoIterator<Item = CheckEntry>) {
        self.entries.extend(es);
    }

    /// Appends another report's scenarios and entries.
    pub fn merge(&mut self, other: Report) {
        self.scenarios.extend(other.scenarios);
        self.entries.extend(other.entries);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status.is_pass())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    /// Entries of one check name.
    pub fn of_check<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a CheckEntry> + 'a {
        self.entries.iter().filter(move |e| e.check == check)
    }

    pub fn summary(&self) -> Summary {
        let count = |s| self.entries.iter().filter(|e| e.status == s).count();
        Summary {
            scenarios: self.scenarios.clone(),
            checks: self.entries.len(),
            passed: count(Status::Pass),
            passed_mod_ideal: count(Status::PassModIdeal),
            failed: count(Status::Fail),
            elapsed_ms: self.elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        let r = JsonReport { entries: &self.entries, summary: self.summary() };
        serde_json::to_string_pretty(&r).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!(
                "[{}] {} / {} / {}",
                e.status.label(),
                e.scenario,
                e.check,
                e.element
            ));
            if let Some(n) = &e.note {
                out.push_str(&format!("  ({n})"));
            }
            out.push('\n');
            if let Some(w) = &e.witness {
                out.push_str(&format!("    lhs:      {}\n    rhs:      {}\n    residual: {}\n", w.lhs, w.rhs, w.residual));
            }
            if let Some(c) = &e.certificate {
                out.push_str(&format!("    certificate: {} relation products\n", c.len()));
            }
        }
        let s = self.summary();
        out.push_str(&format!(
            "{} checks: {} pass, {} pass-mod-ideal, {} fail",
            s.checks, s.passed, s.passed_mod_ideal, s.failed
        ));
        if let Some(ms) = s.elapsed_ms {
            out.push_str(&format!(" ({ms} ms)"));
        }
        out.push('\n');
        out
    }
}
