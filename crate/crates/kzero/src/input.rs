//! The JSON dataset read by `kzero verify`.

use std::fs;
use std::path::Path;

use kzero_core::weil::NewformDatum;
use kzero_core::{maximal_order, FracIdeal, Integer, IntPoly, QuadElement, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{location}: {message}")]
    Invalid { location: String, message: String },
}

fn invalid(location: impl Into<String>, message: impl ToString) -> InputError {
    InputError::Invalid { location: location.into(), message: message.to_string() }
}

/// One Hecke eigenvalue `a_p = a₀/a₁ + (a₂/a₃)·√d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigenvalueEntry {
    pub p: u64,
    pub a: [i64; 4],
}

/// `q⁻¹·(a, b + ω)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    pub a: i64,
    pub b: i64,
    pub q: i64,
}

/// The file exactly as written.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawInput {
    pub level: u64,
    pub hecke_field_d: i64,
    pub expected_dim: u32,
    pub eigenvalues: Vec<EigenvalueEntry>,
    pub ideal: IdealSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paper_charpoly: Option<[i64; 5]>,
}

/// A validated dataset.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub raw: RawInput,
    pub datum: NewformDatum,
    /// The two eigenvalue primes in file order.
    pub primes: [u64; 2],
    pub ideal: FracIdeal,
    pub paper_charpoly: Option<IntPoly>,
}

impl Dataset {
    pub fn load(path: &Path) -> Result<Dataset, InputError> {
        let text = fs::read_to_string(path)
            .map_err(|source| InputError::Io { path: path.display().to_string(), source })?;
        Dataset::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Dataset, InputError> {
        let raw: RawInput = serde_json::from_str(text).map_err(|e| InputError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Dataset::from_raw(raw)
    }

    pub fn from_raw(raw: RawInput) -> Result<Dataset, InputError> {
        if raw.level == 0 {
            return Err(invalid("level", "must be positive"));
        }
        let order = maximal_order(raw.hecke_field_d).map_err(|e| invalid("hecke_field_d", e))?;
        if !order.is_real() {
            return Err(invalid("hecke_field_d", "the Hecke field must be real quadratic"));
        }
        if raw.eigenvalues.len() != 2 {
            return Err(invalid(
                "eigenvalues",
                format!("expected eigenvalues at exactly two primes, found {}", raw.eigenvalues.len()),
            ));
        }
        let mut entries = Vec::new();
        for (i, e) in raw.eigenvalues.iter().enumerate() {
            let loc = format!("eigenvalues[{i}]");
            let [an, ad, bn, bd] = e.a;
            if ad == 0 || bd == 0 {
                return Err(invalid(format!("{loc}.a"), "zero denominator"));
            }
            let a = QuadElement::new(
                raw.hecke_field_d,
                Rational::new(an.into(), ad.into()),
                Rational::new(bn.into(), bd.into()),
            )
            .map_err(|err| invalid(format!("{loc}.a"), err))?;
            if entries.iter().any(|(p, _)| *p == e.p) {
                return Err(invalid(format!("{loc}.p"), format!("duplicate prime {}", e.p)));
            }
            NewformDatum::new(raw.level, raw.hecke_field_d, raw.expected_dim, [(e.p, a.clone())])
                .map_err(|err| invalid(loc, err))?;
            entries.push((e.p, a));
        }
        let primes = [entries[0].0, entries[1].0];
        let datum = NewformDatum::new(raw.level, raw.hecke_field_d, raw.expected_dim, entries)
            .map_err(|e| invalid("eigenvalues", e))?;
        let IdealSpec { a, b, q } = raw.ideal;
        let ideal = FracIdeal::new(order, a.into(), b.into(), q.into()).map_err(|e| invalid("ideal", e))?;
        let paper_charpoly = raw.paper_charpoly.map(|c| IntPoly::new(c.iter().map(|&x| Integer::from(x)).collect()));
        Ok(Dataset { raw, datum, primes, ideal, paper_charpoly })
    }

    pub fn eigenvalue(&self, p: u64) -> &QuadElement {
        &self.datum.eigenvalues[&p]
    }
}
