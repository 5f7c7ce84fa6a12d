//! Rendering of [`OutputRecord`] as JSON, CSV or a markdown table.
//!
//! JSON keeps every value at full precision; the tabular formats print nine
//! significant digits.

use std::io::{self, Write};

use crate::args::Format;
use crate::record::{Outcome, OutputRecord, TableRow};

/// `x` with nine significant digits; fixed notation unless `|x| < 1e-4`.
pub fn sig9(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    if exponent < -4 {
        return format!("{x:.8e}");
    }
    let decimals = (8 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// Header and rows of the tabular view.
fn tabular(rec: &OutputRecord) -> (Vec<&'static str>, Vec<Vec<String>>) {
    let i = &rec.inputs;
    match &rec.result {
        Outcome::Alpha0 {
            alpha0,
            collision_gap,
            collision_x,
        } => (
            vec!["command", "n", "m", "alpha0", "collision_gap", "collision_x"],
            vec![vec![
                rec.command.clone(),
                opt(i.n),
                opt(i.m),
                sig9(*alpha0),
                sig9(*collision_gap),
                sig9(*collision_x),
            ]],
        ),
        Outcome::Value { value, modulus } => (
            vec!["command", "n", "m", "k", "value", "modulus"],
            vec![vec![
                rec.command.clone(),
                opt(i.n),
                opt(i.m),
                opt(i.k),
                sig9(*value),
                sig9(*modulus),
            ]],
        ),
        Outcome::Trace { rows } => (
            vec!["alpha", "re_x", "im_x", "beta"],
            rows.iter()
                .map(|r| vec![sig9(r.alpha), sig9(r.re_x), sig9(r.im_x), sig9(r.beta)])
                .collect(),
        ),
        Outcome::Table { rows } if rows.iter().all(|r| r.k.is_none()) => (
            vec!["2n", "2m", "alpha0", "cs"],
            rows.iter()
                .map(|r| {
                    vec![
                        (2 * r.n).to_string(),
                        (2 * r.m).to_string(),
                        opt(r.alpha0.map(sig9)),
                        sig9(r.value),
                    ]
                })
                .collect(),
        ),
        Outcome::Table { rows } => (
            vec!["2n", "2m", "k", "cs_orbifold", "cs_cover"],
            rows.iter()
                .map(|r| {
                    vec![
                        (2 * r.n).to_string(),
                        (2 * r.m).to_string(),
                        opt(r.k),
                        sig9(r.value),
                        opt(r.cover.map(sig9)),
                    ]
                })
                .collect(),
        ),
    }
}

fn md_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    writeln!(out, "| {} |", header.join(" | "))?;
    writeln!(out, "|{}", "---|".repeat(header.len()))?;
    for r in rows {
        writeln!(out, "| {} |", r.join(" | "))?;
    }
    Ok(())
}

/// Orbifold tables print as one block per knot.
fn md_blocks(out: &mut dyn Write, rows: &[TableRow]) -> io::Result<()> {
    let mut first = true;
    for chunk in rows.chunk_by(|a, b| (a.n, a.m) == (b.n, b.m)) {
        if !first {
            writeln!(out)?;
        }
        first = false;
        let (n, m) = (chunk[0].n, chunk[0].m);
        writeln!(out, "### J({}, -{})", 2 * n, 2 * m)?;
        writeln!(out)?;
        let body: Vec<Vec<String>> = chunk
            .iter()
            .map(|r| vec![opt(r.k), sig9(r.value), opt(r.cover.map(sig9))])
            .collect();
        md_table(out, &["k", "cs(X(2pi/k))", "cs(M_k)"], &body)?;
    }
    Ok(())
}

pub fn render(rec: &OutputRecord, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rec)?;
            writeln!(out)
        }
        Format::Csv => {
            let (header, rows) = tabular(rec);
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&header)?;
            for r in rows {
                w.write_record(&r)?;
            }
            w.flush()
        }
        Format::Md => match &rec.result {
            Outcome::Table { rows } if rows.iter().any(|r| r.k.is_some()) => md_blocks(out, rows),
            _ => {
                let (header, rows) = tabular(rec);
                md_table(out, &header, &rows)
            }
        },
    }
}
