use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Outcome of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// One failing instance: where an equation was evaluated and the two sides
/// that disagreed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub equation: String,
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

/// The result of evaluating an identity exhaustively.
///
/// The verdict is derived from the witness list and cannot disagree with it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    axiom: String,
    bindings: BTreeMap<String, String>,
    verdict: Verdict,
    checked: usize,
    witnesses: Vec<Witness>,
}

impl AxiomReport {
    pub fn new(axiom: impl Into<String>) -> Self {
        AxiomReport { axiom: axiom.into(), bindings: BTreeMap::new(), verdict: Verdict::Pass, checked: 0, witnesses: Vec::new() }
    }

    pub fn with_bindings<I, K, V>(mut self, bindings: I) -> Self
    where
        I: IntoIterator<Item = (K, V)>,
        K: Into<String>,
        V: Into<String>,
    {
        self.bindings = bindings.into_iter().map(|(k, v)| (k.into(), v.into())).collect();
        self
    }

    /// Records one evaluated instance, failing when the sides differ.
    pub fn record<T: PartialEq + fmt::Display>(&mut self, equation: &str, at: impl fmt::Display, lhs: &T, rhs: &T) {
        self.checked += 1;
        if lhs != rhs {
            self.fail(Witness { equation: equation.to_string(), at: at.to_string(), lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
    }

    /// Records a passing instance that has no two-sided form.
    pub fn record_ok(&mut self) {
        self.checked += 1;
    }

    pub fn fail(&mut self, w: Witness) {
        self.witnesses.push(w);
        self.verdict = Verdict::Fail;
    }

    /// Appends the instances and witnesses of another report.
    pub fn absorb(&mut self, other: AxiomReport) {
        self.checked += other.checked;
        for w in other.witnesses {
            self.fail(w);
        }
    }

    pub fn axiom(&self) -> &str {
        &self.axiom
    }

    pub fn bindings(&self) -> &BTreeMap<String, String> {
        &self.bindings
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn checked(&self) -> usize {
        self.checked
    }

    pub fn witnesses(&self) -> &[Witness] {
        &self.witnesses
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{} {}: {} instances", v, self.axiom, self.checked)?;
        for w in &self.witnesses {
            write!(f, "\n  {} at {}: {} != {}", w.equation, w.at, w.lhs, w.rhs)?;
        }
        Ok(())
    }
}
