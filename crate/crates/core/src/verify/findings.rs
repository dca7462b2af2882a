//! Line-delimited JSON records, one per counterexample.

use std::io::{self, Write};

use serde::Serialize;

use super::grid::Params;
use super::report::{decimal, Expectation, GridReport};
use crate::ExactInt;

#[derive(Debug, Clone, Serialize)]
pub struct Finding<'a> {
    pub claim: &'static str,
    pub params: &'a Params,
    #[serde(skip_serializing_if = "str::is_empty")]
    pub check: &'static str,
    pub expected: Expectation,
    #[serde(serialize_with = "decimal")]
    pub value: &'a ExactInt,
    #[serde(serialize_with = "decimal")]
    pub modulus: &'a ExactInt,
    #[serde(serialize_with = "decimal")]
    pub remainder: &'a ExactInt,
}

pub fn findings(report: &GridReport) -> impl Iterator<Item = Finding<'_>> {
    report.counterexamples.iter().map(move |c| Finding {
        claim: report.claim,
        params: &c.params,
        check: c.check,
        expected: c.expected,
        value: &c.report.value,
        modulus: &c.report.modulus,
        remainder: &c.report.remainder,
    })
}

/// Appends one JSON line per counterexample; returns how many were written.
pub fn write_findings<W: Write>(report: &GridReport, mut out: W) -> io::Result<usize> {
    let mut n = 0;
    for finding in findings(report) {
        serde_json::to_writer(&mut out, &finding)?;
        out.write_all(b"\n")?;
        n += 1;
    }
    Ok(n)
}
