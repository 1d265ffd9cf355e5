use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use qnarayana::sums::FPoly;
use qnarayana::verify::{
    verify_case, CaseSpec, ClassPolicy, Outcome, Statement, StatementClass, Verdict,
};

use crate::report::{Entry, Report, ReportFormat, ReportHeader, RunInfo, Summary};
use crate::CliError;

/// Inclusive integer range; empty when `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        IntRange { lo, hi }
    }

    pub fn single(v: i64) -> Self {
        IntRange { lo: v, hi: v }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// `A`, `A..B` or `A..=B`, both ends inclusive.
impl FromStr for IntRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad range bound {t:?}: {e}"))
        };
        match s.split_once("..") {
            None => parse(s).map(IntRange::single),
            Some((a, b)) => Ok(IntRange::new(
                parse(a)?,
                parse(b.strip_prefix('=').unwrap_or(b))?,
            )),
        }
    }
}

/// How the weight parameter `j` is enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "mode")]
pub enum JMode {
    /// `0..=2r-1` for thm12/conj32, `0..=2m-1` for conj33, `0..=m-1` for gjz.
    Theorem,
    /// `0..=j_max`, regardless of the theorem's bound.
    Extended { j_max: i64 },
    /// An explicit inclusive range.
    Range { lo: i64, hi: i64 },
}

impl JMode {
    fn values(self, theorem_max: i64) -> std::ops::RangeInclusive<i64> {
        match self {
            JMode::Theorem => 0..=theorem_max,
            JMode::Extended { j_max } => 0..=j_max,
            JMode::Range { lo, hi } => lo..=hi,
        }
    }
}

/// `k^2`, `2k^2 + k`, `k^3`, `k^4 - k` and the zero weight.
pub fn default_f_suite() -> Vec<FPoly> {
    vec![
        FPoly::zero(),
        FPoly::new(vec![0, 0, 1]),
        FPoly::new(vec![0, 1, 2]),
        FPoly::new(vec![0, 0, 0, 1]),
        FPoly::new(vec![0, -1, 0, 0, 1]),
    ]
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub statement: Statement,
    pub n: IntRange,
    pub r: IntRange,
    /// Number of indices `m` for the multi-index statements.
    pub m: IntRange,
    /// Range each `n_i` runs over.
    pub ni: IntRange,
    pub j_mode: JMode,
    pub f_suite: Vec<FPoly>,
    pub class_override: Option<StatementClass>,
    pub format: ReportFormat,
    pub jobs: usize,
    pub out: Option<PathBuf>,
}

impl SweepSpec {
    pub fn new(statement: Statement) -> Self {
        SweepSpec {
            statement,
            n: IntRange::new(1, 5),
            r: IntRange::new(1, 3),
            m: IntRange::new(1, 3),
            ni: IntRange::new(1, 3),
            j_mode: JMode::Theorem,
            f_suite: default_f_suite(),
            class_override: None,
            format: ReportFormat::Text,
            jobs: 1,
            out: None,
        }
    }

    pub fn policy(&self) -> ClassPolicy {
        match self.class_override {
            Some(c) => ClassPolicy::default().with_override(self.statement, c),
            None => ClassPolicy::default(),
        }
    }

    /// Every `n_1..n_m` with `m` ascending, then tuples in lexicographic
    /// order.
    fn index_tuples(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        if self.ni.lo > self.ni.hi {
            return out;
        }
        for m in self.m.iter().filter(|&m| m >= 1) {
            let mut tuple = vec![self.ni.lo; m as usize];
            loop {
                out.push(tuple.clone());
                match tuple.iter().rposition(|&t| t < self.ni.hi) {
                    None => break,
                    Some(pos) => {
                        tuple[pos] += 1;
                        for t in &mut tuple[pos + 1..] {
                            *t = self.ni.lo;
                        }
                    }
                }
            }
        }
        out
    }

    /// Expands into cases in a fixed order: by `n` (or by `m` then the
    /// tuple `n_1..n_m`), then `r`, then `j`, then the index into the
    /// f-suite.
    pub fn expand(&self) -> Vec<CaseSpec> {
        let st = self.statement;
        let mut cases = Vec::new();
        match st {
            Statement::Thm11 => {
                for n in self.n.iter() {
                    for r in self.r.iter() {
                        cases.push(CaseSpec::thm11(n, r));
                    }
                }
            }
            Statement::Thm12 | Statement::Conj32 => {
                for n in self.n.iter() {
                    for r in self.r.iter() {
                        for j in self.j_mode.values(2 * r - 1) {
                            cases.push(if st == Statement::Thm12 {
                                CaseSpec::thm12(n, r, j)
                            } else {
                                CaseSpec::conj32(n, r, j)
                            });
                        }
                    }
                }
            }
            Statement::Conj31 => {
                cases.extend(self.index_tuples().into_iter().map(CaseSpec::conj31));
            }
            Statement::Conj33 | Statement::Gjz => {
                for ns in self.index_tuples() {
                    let m = ns.len() as i64;
                    let bound = if st == Statement::Conj33 {
                        2 * m - 1
                    } else {
                        m - 1
                    };
                    for j in self.j_mode.values(bound) {
                        cases.push(if st == Statement::Conj33 {
                            CaseSpec::conj33(ns.clone(), j)
                        } else {
                            CaseSpec::gjz(ns.clone(), j)
                        });
                    }
                }
            }
            Statement::Conj34 => {
                for ns in self.index_tuples() {
                    for f in &self.f_suite {
                        cases.push(CaseSpec::conj34(ns.clone(), f.clone()));
                    }
                }
            }
        }
        cases
    }

    pub(crate) fn echo(&self) -> SpecEcho {
        let st = self.statement;
        let uses_j = matches!(
            st,
            Statement::Thm12 | Statement::Conj32 | Statement::Conj33 | Statement::Gjz
        );
        SpecEcho {
            statement: st,
            n: (!st.uses_ns()).then_some(self.n),
            r: (!st.uses_ns()).then_some(self.r),
            m: st.uses_ns().then_some(self.m),
            ni: st.uses_ns().then_some(self.ni),
            j_mode: uses_j.then_some(self.j_mode),
            f_suite: (st == Statement::Conj34)
                .then(|| self.f_suite.iter().map(|f| f.coeffs().to_vec()).collect()),
            class: self.policy().class_of(st),
        }
    }
}

/// The content-determining part of a sweep spec, echoed into reports.
/// Execution settings (jobs, output) are left out so that serial and
/// parallel runs produce the same report.
#[derive(Debug, Clone, Serialize)]
pub struct SpecEcho {
    pub statement: Statement,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<IntRange>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<IntRange>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<IntRange>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ni: Option<IntRange>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j_mode: Option<JMode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_suite: Option<Vec<Vec<i64>>>,
    pub class: StatementClass,
}

fn evaluate(case: &CaseSpec, policy: &ClassPolicy) -> Entry {
    match verify_case(case) {
        Ok(v) => {
            let outcome = v.outcome(policy);
            Entry::Verdict {
                verdict: v,
                outcome,
            }
        }
        Err(e) => Entry::Error {
            case: case.clone(),
            message: e.to_string(),
        },
    }
}

/// Evaluates every expanded case once. Entries come back in expansion
/// order whatever the parallelism width.
pub fn run_sweep(spec: &SweepSpec) -> Result<Report, CliError> {
    let start = Instant::now();
    let cases = spec.expand();
    let policy = spec.policy();
    let entries: Vec<Entry> = if spec.jobs <= 1 {
        cases.iter().map(|c| evaluate(c, &policy)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(spec.jobs)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", spec.jobs)))?;
        pool.install(|| cases.par_iter().map(|c| evaluate(c, &policy)).collect())
    };
    let summary = Summary::tally(&entries);
    Ok(Report {
        header: ReportHeader {
            version: env!("CARGO_PKG_VERSION").to_string(),
            spec: spec.echo(),
        },
        run: RunInfo {
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true),
            wall_time_ms: start.elapsed().as_millis() as u64,
        },
        entries,
        summary,
    })
}

/// Verdicts that were recorded with a given outcome.
pub fn verdicts_with(report: &Report, outcome: Outcome) -> Vec<&Verdict> {
    report
        .entries
        .iter()
        .filter_map(|e| match e {
            Entry::Verdict {
                verdict,
                outcome: o,
            } if *o == outcome => Some(verdict),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse() {
        assert_eq!("3".parse::<IntRange>().unwrap(), IntRange::single(3));
        assert_eq!("1..4".parse::<IntRange>().unwrap(), IntRange::new(1, 4));
        assert_eq!("1..=4".parse::<IntRange>().unwrap(), IntRange::new(1, 4));
        assert!("a..4".parse::<IntRange>().is_err());
    }

    #[test]
    fn tuples_in_order() {
        let mut spec = SweepSpec::new(Statement::Conj31);
        spec.m = IntRange::new(1, 2);
        spec.ni = IntRange::new(1, 2);
        let got: Vec<Vec<i64>> = spec.index_tuples();
        assert_eq!(
            got,
            vec![
                vec![1],
                vec![2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 1],
                vec![2, 2]
            ]
        );
        spec.ni = IntRange::new(2, 1);
        assert!(spec.index_tuples().is_empty());
    }

    #[test]
    fn expansion_counts() {
        let mut spec = SweepSpec::new(Statement::Thm12);
        spec.n = IntRange::new(1, 3);
        spec.r = IntRange::new(1, 2);
        assert_eq!(spec.expand().len(), 18);

        let mut spec = SweepSpec::new(Statement::Gjz);
        spec.m = IntRange::new(1, 2);
        spec.ni = IntRange::new(1, 2);
        // m = 1: 2 tuples x 1 j; m = 2: 4 tuples x 2 j
        assert_eq!(spec.expand().len(), 10);

        let mut spec = SweepSpec::new(Statement::Conj34);
        spec.m = IntRange::single(1);
        spec.ni = IntRange::new(1, 2);
        assert_eq!(spec.expand().len(), 10);
    }

    #[test]
    fn extended_j_mode() {
        let mut spec = SweepSpec::new(Statement::Conj32);
        spec.n = IntRange::single(1);
        spec.r = IntRange::single(1);
        spec.j_mode = JMode::Extended { j_max: 2 };
        let js: Vec<i64> = spec.expand().iter().map(|c| c.j.unwrap()).collect();
        assert_eq!(js, vec![0, 1, 2]);
    }
}
