//! The JSON report printed by every subcommand except `fixtures`.

use std::collections::BTreeMap;

use lcoalg::coalgebra::{AxiomReport, Verdict, Witness};
use serde::Serialize;
use serde_json::Value;

/// Witnesses kept per record; `witness_count` is always the full count.
pub const WITNESS_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub axiom: String,
    pub bindings: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub checked: usize,
    pub witness_count: usize,
    pub witnesses: Vec<Witness>,
}

impl From<&AxiomReport> for Record {
    fn from(r: &AxiomReport) -> Self {
        Record {
            axiom: r.axiom().to_string(),
            bindings: r.bindings().clone(),
            verdict: r.verdict(),
            checked: r.checked(),
            witness_count: r.witnesses().len(),
            witnesses: r.witnesses().iter().take(WITNESS_LIMIT).cloned().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    pub records: Vec<Record>,
    /// Command-specific output such as ranks, bracket tables or graph sizes.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.into(), passed: true, records: Vec::new(), data: BTreeMap::new() }
    }

    pub fn push(&mut self, r: &AxiomReport) {
        self.passed &= r.passed();
        self.records.push(r.into());
    }

    pub fn set(&mut self, key: &str, v: impl Serialize) {
        self.data.insert(key.into(), serde_json::to_value(v).expect("plain data"));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    /// A record by axiom id.
    pub fn record(&self, axiom: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.axiom == axiom)
    }
}
