use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Verdict {
        if ok { Verdict::Pass } else { Verdict::Fail }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Computed,
    AssumedByCitation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub index: usize,
    pub name: String,
    pub claim: String,
    /// The published statement this check reproduces.
    pub anchor: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub provenance: Provenance,
}

/// A hypothesis taken from the literature rather than computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Citation {
    pub statement: String,
    pub used_by: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub checks: Vec<Check>,
    pub assumed_by_citation: Vec<Citation>,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn new(checks: Vec<Check>, assumed_by_citation: Vec<Citation>) -> Certificate {
        let ok = checks.iter().all(|c| c.verdict == Verdict::Pass) && !assumed_by_citation.is_empty();
        Certificate { checks, assumed_by_citation, verdict: Verdict::from_bool(ok) }
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.verdict == Verdict::Pass).count()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.verdict == Verdict::Fail)
    }

    /// JSON report with a generation time, the only field that varies between
    /// runs on the same input.
    pub fn to_json(&self, generated_at_unix: u64) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("certificate serializes");
        v["generated_at_unix"] = generated_at_unix.into();
        v
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{:>2}] {}  {}", c.index, c.verdict, c.name)?;
            writeln!(f, "     claim:  {}", c.claim)?;
            writeln!(f, "     anchor: {}", c.anchor)?;
            for (k, v) in &c.inputs {
                writeln!(f, "     in   {k} = {v}")?;
            }
            for (k, v) in &c.outputs {
                writeln!(f, "     out  {k} = {v}")?;
            }
        }
        writeln!(f)?;
        writeln!(f, "assumed by citation (not computed):")?;
        for a in &self.assumed_by_citation {
            writeln!(f, "  - {} [used by: {}]", a.statement, a.used_by.join(", "))?;
        }
        writeln!(f)?;
        write!(f, "result: {} ({}/{} checks passed)", self.verdict, self.passed(), self.checks.len())?;
        if let Some(c) = self.first_failure() {
            write!(f, "; first failure: check {} {}", c.index, c.name)?;
        }
        Ok(())
    }
}
