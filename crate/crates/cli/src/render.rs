use std::io::Write;

use anyhow::Result;
use golden_pascal::{Check, GoldenNumber, IntMatrix, Report, Spectrum};
use serde::Serialize;

use crate::Format;

fn subscript(k: usize) -> String {
    k.to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

/// Ten significant digits, display only.
fn decimal(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let magnitude = v.abs().log10().floor() as i32;
    if (-5..10).contains(&magnitude) {
        let places = (9 - magnitude).max(0) as usize;
        format!("{v:.places$}")
    } else {
        format!("{v:.9e}")
    }
}

fn json_line(value: &impl Serialize, out: &mut dyn Write) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn counterexample_fields(check: &Check) -> [String; 3] {
    match &check.counterexample {
        Some(cx) => [cx.location.clone(), cx.left.clone(), cx.right.clone()],
        None => Default::default(),
    }
}

fn pretty_failures(report: &Report, out: &mut dyn Write) -> Result<()> {
    for check in report.failures() {
        let [location, left, right] = counterexample_fields(check);
        writeln!(out, "  {}: {location}", check.name)?;
        writeln!(out, "    left:  {left}")?;
        writeln!(out, "    right: {right}")?;
    }
    Ok(())
}

pub(crate) fn verify(reports: &[Report], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Pretty => {
            for report in reports {
                let n = report.n.unwrap_or_default();
                let total = report.checks.len();
                if report.pass {
                    writeln!(out, "n={n}: {total} check groups passed")?;
                } else {
                    let failed = total - report.passed_count();
                    writeln!(out, "n={n}: FAILED {failed} of {total} check groups")?;
                    pretty_failures(report, out)?;
                }
            }
        }
        Format::Json => {
            for report in reports {
                json_line(report, out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "check", "pass", "location", "left", "right"])?;
            for report in reports {
                let n = report.n.unwrap_or_default().to_string();
                for check in &report.checks {
                    let [location, left, right] = counterexample_fields(check);
                    w.write_record([
                        n.as_str(),
                        &check.name,
                        &check.pass.to_string(),
                        &location,
                        &left,
                        &right,
                    ])?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub(crate) fn spectrum(spectra: &[Spectrum], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Pretty => {
            for s in spectra {
                writeln!(out, "n={}", s.n)?;
                let texts: Vec<String> = s.eigenvalues.iter().map(ToString::to_string).collect();
                let width = texts.iter().map(|t| t.chars().count()).max().unwrap_or(0);
                for (j, (text, value)) in texts.iter().zip(&s.eigenvalues).enumerate() {
                    writeln!(
                        out,
                        "  λ{} = {text:<width$}  ≈ {}",
                        subscript(j + 1),
                        decimal(value.approx_f64())
                    )?;
                }
                writeln!(out, "  U (column j is u_j):")?;
                for row in s.eigenvector_matrix.rows() {
                    let row: Vec<String> = row.iter().map(ToString::to_string).collect();
                    writeln!(out, "    [{}]", row.join(", "))?;
                }
            }
        }
        Format::Json => {
            for s in spectra {
                json_line(s, out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "kind", "i", "j", "x", "y"])?;
            let mut record = |n: usize, kind: &str, i: &str, j: usize, v: &GoldenNumber| {
                w.write_record([
                    n.to_string().as_str(),
                    kind,
                    i,
                    &j.to_string(),
                    &v.x().to_string(),
                    &v.y().to_string(),
                ])
            };
            for s in spectra {
                for (j, v) in s.eigenvalues.iter().enumerate() {
                    record(s.n, "eigenvalue", "", j + 1, v)?;
                }
                for (i, row) in s.eigenvector_matrix.rows().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        record(s.n, "eigenvector", &(i + 1).to_string(), j + 1, v)?;
                    }
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PowerRecord<'a> {
    n: usize,
    m: u32,
    matrix: &'a IntMatrix,
}

pub(crate) fn power(
    powers: &[(usize, IntMatrix)],
    m: u32,
    format: Format,
    out: &mut dyn Write,
) -> Result<()> {
    match format {
        Format::Pretty => {
            for (n, p) in powers {
                writeln!(out, "n={n} m={m}: {p}")?;
            }
        }
        Format::Json => {
            for (n, matrix) in powers {
                json_line(&PowerRecord { n: *n, m, matrix }, out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "m", "i", "j", "value"])?;
            for (n, p) in powers {
                for (i, row) in p.rows().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        w.write_record([
                            n.to_string(),
                            m.to_string(),
                            (i + 1).to_string(),
                            (j + 1).to_string(),
                            v.to_string(),
                        ])?;
                    }
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub(crate) fn identities(report: &Report, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Pretty => {
            for check in &report.checks {
                if check.pass {
                    writeln!(out, "PASS  {}", check.name)?;
                } else {
                    let [_, left, right] = counterexample_fields(check);
                    writeln!(out, "FAIL  {}: {left} != {right}", check.name)?;
                }
            }
            writeln!(
                out,
                "{} of {} identities passed",
                report.passed_count(),
                report.checks.len()
            )?;
        }
        Format::Json => json_line(report, out)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["check", "pass", "location", "left", "right"])?;
            for check in &report.checks {
                let [location, left, right] = counterexample_fields(check);
                w.write_record([
                    check.name.as_str(),
                    &check.pass.to_string(),
                    &location,
                    &left,
                    &right,
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
