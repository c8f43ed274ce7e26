use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::CampaignReport;
use crate::bounds::BoundReport;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(ReportFormat::Table),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            _ => Err(Error::parse(s, "expected table, csv or json")),
        }
    }
}

#[derive(Serialize)]
struct Summary<'a> {
    kind: &'static str,
    groups_checked: usize,
    instances_checked: u64,
    violations: usize,
    equality_count: u64,
    sumset_checks: u64,
    sumset_violations: usize,
    oracle_checks: u64,
    oracle_mismatches: usize,
    witness_checks: u64,
    witness_failures: usize,
    profiles_checked: u64,
    case_counts: &'a std::collections::BTreeMap<crate::witness::CaseTag, u64>,
    complete: bool,
}

#[derive(Serialize)]
struct Tagged<'a, T: Serialize> {
    kind: &'static str,
    #[serde(flatten)]
    record: &'a T,
}

impl CampaignReport {
    /// Renders the report. Wall time is left out so equal campaigns render
    /// identically.
    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Table => self.render_table(),
            ReportFormat::Csv => self.render_csv(),
            ReportFormat::Json => self.render_json(),
        }
    }

    fn summary(&self) -> Summary<'_> {
        Summary {
            kind: "summary",
            groups_checked: self.groups_checked,
            instances_checked: self.instances_checked,
            violations: self.violations.len(),
            equality_count: self.equality_count,
            sumset_checks: self.sumset_checks,
            sumset_violations: self.sumset_violations.len(),
            oracle_checks: self.oracle_checks,
            oracle_mismatches: self.oracle_mismatches.len(),
            witness_checks: self.witness_checks,
            witness_failures: self.witness_failures.len(),
            profiles_checked: self.profiles_checked,
            case_counts: &self.case_counts,
            complete: self.complete,
        }
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "groups checked      {}", self.groups_checked);
        let _ = writeln!(out, "instances checked   {}", self.instances_checked);
        let _ = writeln!(out, "bound violations    {}", self.violations.len());
        let _ = writeln!(out, "equality cases      {}", self.equality_count);
        if self.sumset_checks > 0 {
            let _ = writeln!(
                out,
                "sumset checks       {} ({} violations)",
                self.sumset_checks,
                self.sumset_violations.len()
            );
        }
        if self.oracle_checks > 0 {
            let _ = writeln!(
                out,
                "oracle checks       {} ({} mismatches)",
                self.oracle_checks,
                self.oracle_mismatches.len()
            );
        }
        if self.witness_checks > 0 {
            let _ = writeln!(
                out,
                "witness checks      {} ({} failures)",
                self.witness_checks,
                self.witness_failures.len()
            );
            for (case, n) in &self.case_counts {
                let _ = writeln!(out, "  {:<18}{n}", format!("{case:?}"));
            }
        }
        if !self.complete {
            let _ = writeln!(out, "time budget exhausted; results are partial");
        }
        if !self.violations.is_empty() {
            let _ = writeln!(out, "\nviolations:");
            table_rows(&mut out, &self.violations);
        }
        for v in &self.sumset_violations {
            let _ = writeln!(
                out,
                "sumset violation in {}: {} has {} < {}",
                v.group,
                v.parts.join(" + "),
                v.actual,
                v.bound
            );
        }
        for m in &self.oracle_mismatches {
            let _ = writeln!(out, "oracle mismatch in {}: {} k={}", m.group, m.set, m.k);
        }
        for f in &self.witness_failures {
            let checks: Vec<&str> = f.failures.iter().map(|x| x.check.as_str()).collect();
            let _ = writeln!(
                out,
                "witness failure in {}: {} k={} [{}]",
                f.group,
                f.set,
                f.k,
                checks.join(",")
            );
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(BoundReport::CSV_HEADER)
            .expect("in-memory write");
        for r in self.violations.iter().chain(&self.equality_cases) {
            w.write_record(r.csv_record()).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 csv")
    }

    fn render_json(&self) -> String {
        let mut out = String::new();
        let line = |out: &mut String, v: String| {
            out.push_str(&v);
            out.push('\n');
        };
        line(
            &mut out,
            serde_json::to_string(&self.summary()).expect("serializable"),
        );
        for r in &self.violations {
            line(&mut out, tagged("violation", r));
        }
        for r in &self.equality_cases {
            line(&mut out, tagged("equality", r));
        }
        for r in &self.sumset_violations {
            line(&mut out, tagged("sumset_violation", r));
        }
        for r in &self.oracle_mismatches {
            line(&mut out, tagged("oracle_mismatch", r));
        }
        for r in &self.witness_failures {
            line(&mut out, tagged("witness_failure", r));
        }
        out
    }
}

fn tagged<T: Serialize>(kind: &'static str, record: &T) -> String {
    serde_json::to_string(&Tagged { kind, record }).expect("serializable")
}

fn table_rows(out: &mut String, rows: &[BoundReport]) {
    let _ = writeln!(
        out,
        "{:<12} {:>3} {:>6} {:>6}  set",
        "group", "k", "bound", "actual"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:<12} {:>3} {:>6} {:>6}  {}",
            r.group.to_string(),
            r.k,
            r.bound,
            r.actual,
            r.set
        );
    }
}
