use crate::config::Format;
use modxi::identities::IdentityReport;
use serde::Serialize;
use std::io::{self, Write};

#[derive(Debug, Serialize)]
struct MemberRecord<'a> {
    member_label: &'a str,
    value_re: f64,
    value_im: f64,
    err: f64,
}

#[derive(Debug, Serialize)]
struct Diagnostics {
    terms: usize,
    nodes: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    runtime_ms: Option<f64>,
}

/// One JSON line per check; field names follow the CSV columns.
#[derive(Debug, Serialize)]
struct CheckRecord<'a> {
    id: &'a str,
    alpha: f64,
    z_re: f64,
    z_im: f64,
    tol: f64,
    members: Vec<MemberRecord<'a>>,
    max_abs_diff: f64,
    max_rel_diff: f64,
    pass: bool,
    converged: bool,
    exploratory: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    fitted_constant: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<&'a str>,
    diagnostics: Diagnostics,
}

#[derive(Debug, Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    alpha: f64,
    z_re: f64,
    z_im: f64,
    member_label: &'a str,
    value_re: f64,
    value_im: f64,
    err: f64,
    max_abs_diff: f64,
    pass: bool,
}

pub fn write_reports<W: Write>(w: W, format: Format, reports: &[IdentityReport], timings: bool) -> io::Result<()> {
    match format {
        Format::Json => write_json(w, reports, timings),
        Format::Csv => write_csv(w, reports),
    }
}

fn write_json<W: Write>(mut w: W, reports: &[IdentityReport], timings: bool) -> io::Result<()> {
    for r in reports {
        let rec = CheckRecord {
            id: r.id.name(),
            alpha: r.params.alpha,
            z_re: r.params.z_re,
            z_im: r.params.z_im,
            tol: r.params.tol,
            members: r
                .members
                .iter()
                .map(|m| MemberRecord { member_label: &m.label, value_re: m.value.re, value_im: m.value.im, err: m.err })
                .collect(),
            max_abs_diff: r.max_abs_diff,
            max_rel_diff: r.max_rel_diff,
            pass: r.pass,
            converged: r.converged,
            exploratory: r.exploratory,
            fitted_constant: r.fitted_constant,
            note: r.note.as_deref(),
            failure: r.failure.as_deref(),
            diagnostics: Diagnostics {
                terms: r.diagnostics.terms,
                nodes: r.diagnostics.nodes,
                runtime_ms: if timings { r.diagnostics.runtime_ms } else { None },
            },
        };
        serde_json::to_writer(&mut w, &rec)?;
        w.write_all(b"\n")?;
    }
    w.flush()
}

fn write_csv<W: Write>(w: W, reports: &[IdentityReport]) -> io::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    if reports.is_empty() {
        out.write_record([
            "id", "alpha", "z_re", "z_im", "member_label", "value_re", "value_im", "err", "max_abs_diff", "pass",
        ])?;
    }
    for r in reports {
        for m in &r.members {
            out.serialize(CsvRow {
                id: r.id.name(),
                alpha: r.params.alpha,
                z_re: r.params.z_re,
                z_im: r.params.z_im,
                member_label: &m.label,
                value_re: m.value.re,
                value_im: m.value.im,
                err: m.err,
                max_abs_diff: r.max_abs_diff,
                pass: r.pass,
            })
            .map_err(io::Error::other)?;
        }
    }
    out.flush()
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub exploratory: usize,
    pub non_converged: usize,
}

impl Tally {
    pub fn of(reports: &[IdentityReport]) -> Self {
        let mut t = Tally::default();
        for r in reports {
            if r.exploratory {
                t.exploratory += 1;
            } else if r.non_converged() {
                t.non_converged += 1;
                t.failed += 1;
            } else if r.pass {
                t.passed += 1;
            } else {
                t.failed += 1;
            }
        }
        t
    }

    pub fn summary(&self) -> String {
        format!("passed {} / failed {} / exploratory {}", self.passed, self.failed, self.exploratory)
    }

    /// 0 all pass, 1 a genuine disagreement, 3 only non-convergence.
    pub fn exit_code(&self) -> u8 {
        if self.failed > self.non_converged {
            1
        } else if self.non_converged > 0 {
            3
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use modxi::identities::{run_check, CheckParams, IdentityId};
    use modxi::C64;

    fn report() -> IdentityReport {
        run_check(IdentityId::Jacobi, &CheckParams::new(1.5, C64::new(0.0, 0.0))).unwrap()
    }

    #[test]
    fn exit_codes_follow_the_worst_outcome() {
        let ok = report();
        let mut bad = ok.clone();
        bad.pass = false;
        let mut stuck = ok.clone();
        stuck.pass = false;
        stuck.converged = false;
        let mut explore = bad.clone();
        explore.exploratory = true;
        assert_eq!(Tally::of(&[ok.clone(), explore.clone()]).exit_code(), 0);
        assert_eq!(Tally::of(&[ok.clone(), stuck.clone()]).exit_code(), 3);
        assert_eq!(Tally::of(&[bad.clone(), stuck]).exit_code(), 1);
        let t = Tally::of(&[ok, bad, explore]);
        assert_eq!(t.summary(), "passed 1 / failed 1 / exploratory 1");
    }

    #[test]
    fn csv_rows_per_member() {
        let mut buf = Vec::new();
        write_reports(&mut buf, Format::Csv, &[report()], false).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 4);
    }
}
