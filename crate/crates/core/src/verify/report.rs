use std::fmt;
use std::time::Duration;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::grid::{Grid, Params};
use crate::error::{Error, Result};
use crate::ExactInt;

pub(crate) fn decimal<S: Serializer, T: fmt::Display>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn decimals<S: Serializer>(v: &[ExactInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn decimal_opt<S: Serializer>(v: &Option<ExactInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Divisible,
    NotDivisible,
}

/// Outcome of dividing `value` by a positive `modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    #[serde(serialize_with = "decimal")]
    pub value: ExactInt,
    #[serde(serialize_with = "decimal")]
    pub modulus: ExactInt,
    /// Euclidean remainder, `0 <= remainder < modulus`.
    #[serde(serialize_with = "decimal")]
    pub remainder: ExactInt,
    #[serde(serialize_with = "decimal_opt")]
    pub quotient: Option<ExactInt>,
    pub verdict: Verdict,
}

impl DivisibilityReport {
    pub fn is_divisible(&self) -> bool {
        self.verdict == Verdict::Divisible
    }
}

pub fn check_divisibility(value: &ExactInt, modulus: &ExactInt) -> Result<DivisibilityReport> {
    if !modulus.is_positive() {
        return Err(Error::invalid(format!(
            "modulus must be positive, got {modulus}"
        )));
    }
    // floor division by a positive modulus gives the Euclidean remainder
    let (q, rem) = value.div_mod_floor(modulus);
    let divisible = rem.is_zero();
    Ok(DivisibilityReport {
        value: value.clone(),
        modulus: modulus.clone(),
        remainder: rem,
        quotient: divisible.then_some(q),
        verdict: if divisible {
            Verdict::Divisible
        } else {
            Verdict::NotDivisible
        },
    })
}

/// What a single check asserts about its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    /// `modulus | value`
    Divisible,
    /// `modulus | value` and the quotient has the given parity
    QuotientParity(u8),
    /// `value = 0`
    Zero,
    /// `value > 0`
    Positive,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expectation::Divisible => f.write_str("divisible"),
            Expectation::QuotientParity(1) => f.write_str("odd quotient"),
            Expectation::QuotientParity(_) => f.write_str("even quotient"),
            Expectation::Zero => f.write_str("zero"),
            Expectation::Positive => f.write_str("positive"),
        }
    }
}

impl Serialize for Expectation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One evaluated assertion at a grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    /// Distinguishes several assertions made at the same point.
    pub label: &'static str,
    pub value: ExactInt,
    pub modulus: ExactInt,
    pub expect: Expectation,
}

impl Check {
    pub fn divisible(label: &'static str, value: ExactInt, modulus: ExactInt) -> Self {
        Self {
            label,
            value,
            modulus,
            expect: Expectation::Divisible,
        }
    }

    pub fn holds(&self) -> Result<(bool, DivisibilityReport)> {
        let report = check_divisibility(&self.value, &self.modulus)?;
        let ok = match self.expect {
            Expectation::Divisible => report.is_divisible(),
            Expectation::QuotientParity(p) => report
                .quotient
                .as_ref()
                .is_some_and(|q| q.is_odd() == (p % 2 == 1)),
            Expectation::Zero => self.value.is_zero(),
            Expectation::Positive => self.value.is_positive(),
        };
        Ok((ok, report))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: Params,
    #[serde(skip_serializing_if = "str::is_empty")]
    pub check: &'static str,
    pub expected: Expectation,
    pub report: DivisibilityReport,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    Theorem,
    Corollary,
    Conjecture,
}

impl ClaimKind {
    pub fn falsifiable(self) -> bool {
        self == ClaimKind::Conjecture
    }
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimKind::Theorem => "theorem",
            ClaimKind::Corollary => "corollary",
            ClaimKind::Conjecture => "conjecture",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Every check passed.
    Held,
    /// A proved statement failed: a bug somewhere.
    Violated,
    /// A conjecture failed: a finding.
    Counterexample,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Held => "held",
            Status::Violated => "violated",
            Status::Counterexample => "counterexample",
        })
    }
}

/// Result of sweeping one claim over a grid.
#[derive(Debug, Clone, Serialize)]
pub struct GridReport {
    pub claim: &'static str,
    pub kind: ClaimKind,
    pub grid: Grid,
    pub points: u64,
    pub checked: u64,
    /// Points left out because the claim's hypothesis fails there.
    pub skipped: u64,
    /// Distinct moduli used, ascending.
    #[serde(serialize_with = "decimals")]
    pub moduli: Vec<ExactInt>,
    pub counterexamples: Vec<Counterexample>,
    pub status: Status,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl GridReport {
    pub fn held(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn status_for(kind: ClaimKind, counterexamples: &[Counterexample]) -> Status {
        match (counterexamples.is_empty(), kind.falsifiable()) {
            (true, _) => Status::Held,
            (false, true) => Status::Counterexample,
            (false, false) => Status::Violated,
        }
    }
}
