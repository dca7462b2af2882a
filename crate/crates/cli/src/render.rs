use std::fmt::Write as _;

use anyhow::Result;
use congruence_lab::verify::findings::findings;
use congruence_lab::verify::{
    Grid, GridReport, IdentityReport, PrimeChainEntry, SearchSummary, Table1Row,
};
use serde::Serialize;

use crate::args::Format;

pub fn json<T: Serialize + ?Sized>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn csv_rows<I, R>(rows: I) -> Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn grid_text(g: &Grid) -> String {
    let sign = g.sign.map_or("both".to_string(), |s| s.to_string());
    format!(
        "m={}..{} n={}..{} r<={} s<={} a<={} sign={sign}",
        g.m_min, g.m_max, g.n_min, g.n_max, g.r_max, g.s_max, g.a_max
    )
}

pub fn grid_report(r: &GridReport, format: Format) -> Result<String> {
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let header = [
                "claim",
                "params",
                "check",
                "expected",
                "value",
                "modulus",
                "remainder",
            ]
            .map(String::from);
            let rows = findings(r).map(|f| {
                [
                    f.claim.to_string(),
                    f.params.to_string(),
                    f.check.to_string(),
                    f.expected.to_string(),
                    f.value.to_string(),
                    f.modulus.to_string(),
                    f.remainder.to_string(),
                ]
            });
            csv_rows(std::iter::once(header).chain(rows))
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "claim    {} ({})", r.claim, r.kind)?;
            writeln!(s, "grid     {}", grid_text(&r.grid))?;
            writeln!(s, "points   {}", r.points)?;
            writeln!(s, "checked  {}", r.checked)?;
            writeln!(s, "skipped  {}", r.skipped)?;
            if r.moduli.len() <= 8 {
                let ms: Vec<String> = r.moduli.iter().map(ToString::to_string).collect();
                writeln!(s, "moduli   {}", ms.join(" "))?;
            } else {
                writeln!(s, "moduli   {} distinct", r.moduli.len())?;
            }
            writeln!(s, "status   {}", r.status)?;
            for f in findings(r) {
                let check = if f.check.is_empty() {
                    String::new()
                } else {
                    format!(" [{}]", f.check)
                };
                writeln!(
                    s,
                    "  {}{check}: expected {}, value {} mod {} = {}",
                    f.params, f.expected, f.value, f.modulus, f.remainder
                )?;
            }
            Ok(s)
        }
    }
}

pub fn identity_report(r: &IdentityReport, format: Format) -> Result<String> {
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let header = ["identity", "params", "lhs", "rhs"].map(String::from);
            let rows = r.mismatches.iter().map(|m| {
                [
                    r.identity.to_string(),
                    m.params.to_string(),
                    m.lhs.clone(),
                    m.rhs.clone(),
                ]
            });
            csv_rows(std::iter::once(header).chain(rows))
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "identity {}", r.identity)?;
            writeln!(s, "grid     {}", grid_text(&r.config.grid))?;
            if let Some(a) = r.config.alpha {
                writeln!(s, "alpha    {a}")?;
            }
            if let Some(b) = r.config.beta {
                writeln!(s, "beta     {b}")?;
            }
            writeln!(s, "degree   {}", r.config.degree)?;
            writeln!(s, "checked  {}", r.checked)?;
            writeln!(s, "status   {}", if r.held() { "held" } else { "mismatch" })?;
            for m in &r.mismatches {
                writeln!(s, "  {}: lhs {} rhs {}", m.params, m.lhs, m.rhs)?;
            }
            Ok(s)
        }
    }
}

pub fn search_summary(r: &SearchSummary, format: Format) -> Result<String> {
    match format {
        Format::Json => json(r),
        Format::Csv => csv_rows(
            std::iter::once("n".to_string())
                .chain(r.hits.iter().map(u64::to_string))
                .map(|v| [v]),
        ),
        Format::Text => {
            let hits: Vec<String> = r.hits.iter().map(u64::to_string).collect();
            Ok(format!(
                "{}: {} hits for n <= {}\n{}\n",
                r.condition,
                r.count,
                r.bound,
                hits.join(" ")
            ))
        }
    }
}

pub fn prime_chain(entries: &[PrimeChainEntry], format: Format) -> Result<String> {
    match format {
        Format::Json => json(entries),
        Format::Csv => {
            let header = ["p", "q", "n", "condition"].map(String::from);
            let rows = entries.iter().map(|e| {
                [
                    e.p.to_string(),
                    e.q.to_string(),
                    e.n.to_string(),
                    e.condition.to_string(),
                ]
            });
            csv_rows(std::iter::once(header).chain(rows))
        }
        Format::Text => {
            let mut s = String::new();
            for e in entries {
                let mark = if e.condition { "" } else { "  condition fails" };
                writeln!(s, "p={} q={} n={}{mark}", e.p, e.q, e.n)?;
            }
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct ChainCount {
    primes: usize,
    count: u64,
}

pub fn prime_chain_count(primes: usize, count: u64, format: Format) -> Result<String> {
    match format {
        Format::Json => json(&ChainCount { primes, count }),
        Format::Csv => csv_rows([
            ["primes", "count"].map(String::from),
            [primes.to_string(), count.to_string()],
        ]),
        Format::Text => Ok(format!(
            "{count} of the first {primes} primes are odd with p^2-p+1 prime\n"
        )),
    }
}

pub fn table(rows: &[Table1Row], format: Format) -> Result<String> {
    let line = |label: &str, f: fn(&Table1Row) -> u64| {
        std::iter::once(label.to_string())
            .chain(rows.iter().map(|r| f(r).to_string()))
            .collect::<Vec<_>>()
    };
    let lines = [
        line("n", |r| r.x),
        line("f(n)", |r| r.f),
        line("g(n)", |r| r.g),
    ];
    match format {
        Format::Json => json(rows),
        Format::Csv => csv_rows(lines),
        Format::Text => {
            let widths: Vec<usize> = (0..lines[0].len())
                .map(|i| lines.iter().map(|l| l[i].len()).max().unwrap_or(0))
                .collect();
            let mut s = String::new();
            for l in &lines {
                let cells: Vec<String> = l
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                writeln!(s, "{}", cells.join("  "))?;
            }
            Ok(s)
        }
    }
}
