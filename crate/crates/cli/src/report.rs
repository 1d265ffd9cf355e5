use std::io::Write;

use serde::Serialize;

use qnarayana::polyarith::Degree;
use qnarayana::verify::{CaseSpec, Outcome, Verdict};

use crate::sweep::SpecEcho;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Jsonl,
    Csv,
    Text,
}

pub const CSV_HEADER: [&str; 12] = [
    "statement",
    "n",
    "r",
    "j",
    "ns",
    "f",
    "shift",
    "divisible",
    "quotient_nonneg",
    "in_theorem_range",
    "sum_degree",
    "quotient",
];

#[derive(Debug, Clone)]
pub enum Entry {
    Verdict { verdict: Verdict, outcome: Outcome },
    Error { case: CaseSpec, message: String },
}

impl Entry {
    pub fn case(&self) -> &CaseSpec {
        match self {
            Entry::Verdict { verdict, .. } => &verdict.case,
            Entry::Error { case, .. } => case,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportHeader {
    pub version: String,
    pub spec: SpecEcho,
}

/// Run-dependent metadata. Rendered on a single line of its own, which is
/// the only part of a report that differs between identical runs.
#[derive(Debug, Clone, Serialize)]
pub struct RunInfo {
    pub timestamp: String,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub pass: usize,
    pub finding: usize,
    pub falsified: usize,
    pub error: usize,
    /// Largest sum degree seen; -1 when no nonzero sum was built.
    pub max_degree: i64,
}

impl Summary {
    pub fn tally(entries: &[Entry]) -> Self {
        let mut s = Summary {
            cases: entries.len(),
            max_degree: -1,
            ..Summary::default()
        };
        for e in entries {
            match e {
                Entry::Verdict { verdict, outcome } => {
                    match outcome {
                        Outcome::Pass => s.pass += 1,
                        Outcome::Finding => s.finding += 1,
                        Outcome::Falsified => s.falsified += 1,
                    }
                    s.max_degree = s.max_degree.max(degree_number(verdict.sum_degree));
                }
                Entry::Error { .. } => s.error += 1,
            }
        }
        s
    }

    /// 0: every theorem-class case passed; 2: a finding was recorded;
    /// 1: a theorem-class falsification or an error.
    pub fn exit_code(&self) -> i32 {
        if self.falsified > 0 || self.error > 0 {
            1
        } else if self.finding > 0 {
            2
        } else {
            0
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub header: ReportHeader,
    pub run: RunInfo,
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

/// Zero polynomial maps to -1.
pub fn degree_number(d: Degree) -> i64 {
    d.finite().map_or(-1, |d| d as i64)
}

#[derive(Serialize)]
struct CaseFields<'a> {
    statement: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ns: Option<&'a [i64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<&'a [i64]>,
}

impl<'a> CaseFields<'a> {
    fn of(case: &'a CaseSpec) -> Self {
        CaseFields {
            statement: case.statement.id(),
            n: case.n,
            r: case.r,
            j: case.j,
            ns: case.ns.as_deref(),
            f: case.f.as_ref().map(|f| f.coeffs()),
        }
    }
}

#[derive(Serialize)]
struct VerdictLine<'a> {
    #[serde(flatten)]
    case: CaseFields<'a>,
    shift: usize,
    divisible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient_nonneg: Option<bool>,
    in_theorem_range: bool,
    sum_degree: i64,
    outcome: Outcome,
}

#[derive(Serialize)]
struct ErrorLine<'a> {
    #[serde(flatten)]
    case: CaseFields<'a>,
    error: &'a str,
    outcome: &'static str,
}

#[derive(Serialize)]
#[serde(tag = "record", rename_all = "lowercase")]
enum MetaLine<'a> {
    Header(&'a ReportHeader),
    Run(&'a RunInfo),
    Summary(&'a Summary),
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(std::io::Error::from)?;
    out.write_all(b"\n")?;
    Ok(())
}

/// One JSON object for a single report entry.
pub fn entry_json(entry: &Entry) -> String {
    match entry {
        Entry::Verdict {
            verdict: v,
            outcome,
        } => serde_json::to_string(&VerdictLine {
            case: CaseFields::of(&v.case),
            shift: v.shift,
            divisible: v.divisible,
            quotient: v.quotient.as_ref().map(|q| q.to_string()),
            quotient_nonneg: v.quotient_nonneg,
            in_theorem_range: v.in_theorem_range,
            sum_degree: degree_number(v.sum_degree),
            outcome: *outcome,
        }),
        Entry::Error { case, message } => serde_json::to_string(&ErrorLine {
            case: CaseFields::of(case),
            error: message,
            outcome: "error",
        }),
    }
    .expect("report lines serialize")
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(";")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Writes the report. `jsonl` emits header, run-info, one line per entry,
/// then the summary; `csv` emits only the fixed-column table; `text` is a
/// padded table framed by `#` comment lines.
pub fn emit_report(
    report: &Report,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        ReportFormat::Jsonl => {
            json_line(out, &MetaLine::Header(&report.header))?;
            json_line(out, &MetaLine::Run(&report.run))?;
            for e in &report.entries {
                out.write_all(entry_json(e).as_bytes())?;
                out.write_all(b"\n")?;
            }
            json_line(out, &MetaLine::Summary(&report.summary))?;
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(CSV_HEADER)?;
            for e in &report.entries {
                let c = e.case();
                let mut row = vec![
                    c.statement.id().to_string(),
                    opt(c.n),
                    opt(c.r),
                    opt(c.j),
                    c.ns.as_deref().map(join).unwrap_or_default(),
                    c.f.as_ref().map(|f| join(f.coeffs())).unwrap_or_default(),
                ];
                match e {
                    Entry::Verdict { verdict: v, .. } => row.extend([
                        v.shift.to_string(),
                        v.divisible.to_string(),
                        opt(v.quotient_nonneg),
                        v.in_theorem_range.to_string(),
                        degree_number(v.sum_degree).to_string(),
                        opt(v.quotient.as_ref()),
                    ]),
                    Entry::Error { message, .. } => row.extend([
                        String::new(),
                        String::new(),
                        String::new(),
                        c.in_theorem_range().to_string(),
                        String::new(),
                        format!("error: {message}"),
                    ]),
                }
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        ReportFormat::Text => write_text(report, out)?,
    }
    Ok(())
}

fn write_text(report: &Report, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = serde_json::to_string(&report.header.spec).expect("spec echo serializes");
    writeln!(out, "# qnarayana {} sweep {}", report.header.version, spec)?;
    writeln!(
        out,
        "# run: timestamp={} wall_time_ms={}",
        report.run.timestamp, report.run.wall_time_ms
    )?;
    let labels: Vec<String> = report
        .entries
        .iter()
        .map(|e| e.case().to_string())
        .collect();
    let width = labels.iter().map(String::len).max().unwrap_or(4).max(4);
    writeln!(
        out,
        "{:<width$}  {:>5}  {:<5}  {:<6}  {:<5}  {:>6}  {:<9}  quotient",
        "case", "shift", "div", "nonneg", "range", "degree", "outcome"
    )?;
    for (e, label) in report.entries.iter().zip(&labels) {
        match e {
            Entry::Verdict {
                verdict: v,
                outcome,
            } => {
                let outcome = match outcome {
                    Outcome::Pass => "pass",
                    Outcome::Finding => "FINDING",
                    Outcome::Falsified => "FALSIFIED",
                };
                writeln!(
                    out,
                    "{:<width$}  {:>5}  {:<5}  {:<6}  {:<5}  {:>6}  {:<9}  {}",
                    label,
                    v.shift,
                    yes_no(Some(v.divisible)),
                    yes_no(v.quotient_nonneg),
                    if v.in_theorem_range { "in" } else { "out" },
                    degree_number(v.sum_degree),
                    outcome,
                    v.quotient
                        .as_ref()
                        .map_or("-".to_string(), |q| q.to_string()),
                )?;
            }
            Entry::Error { message, .. } => {
                writeln!(out, "{:<width$}  ERROR: {}", label, message)?;
            }
        }
    }
    let s = &report.summary;
    writeln!(
        out,
        "# summary: cases={} pass={} finding={} falsified={} error={} max_degree={}",
        s.cases, s.pass, s.finding, s.falsified, s.error, s.max_degree
    )?;
    Ok(())
}

fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}
