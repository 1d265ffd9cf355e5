//! Rendering of single polynomials and proof traces.

use std::io::Write;

use serde::Serialize;

use qnarayana::polyarith::{format_poly, PolyStyle};
use qnarayana::sums::NormalizedSum;
use qnarayana::verify::{ProofCheck, ProofTrace};
use qnarayana::IntPoly;

use crate::report::ReportFormat;
use crate::CliError;

/// `text`: the polynomial grammar; `jsonl`: `{"coeffs": [...]}`;
/// `csv`: one `exponent,coefficient` row per nonzero term.
pub fn write_poly(
    poly: &IntPoly,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        ReportFormat::Text => writeln!(out, "{poly}")?,
        ReportFormat::Jsonl => writeln!(out, "{}", format_poly(poly, PolyStyle::Json))?,
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["exponent", "coefficient"])?;
            for (e, c) in poly.coeffs().iter().enumerate() {
                if c.sign() != num_bigint::Sign::NoSign {
                    w.write_record([e.to_string(), c.to_string()])?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ShiftedJson {
    coeffs: Vec<String>,
    shift: usize,
}

pub fn write_normalized(
    sum: &NormalizedSum,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        ReportFormat::Jsonl => {
            let v = ShiftedJson {
                coeffs: sum.poly.coeffs().iter().map(|c| c.to_string()).collect(),
                shift: sum.shift,
            };
            writeln!(out, "{}", serde_json::to_string(&v).expect("serializes"))?;
        }
        ReportFormat::Text => {
            if sum.shift > 0 {
                writeln!(
                    out,
                    "# multiplied by q^{} to clear negative exponents",
                    sum.shift
                )?;
            }
            writeln!(out, "{}", sum.poly)?;
        }
        ReportFormat::Csv => write_poly(&sum.poly, format, out)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct TraceJson<'a> {
    n: i64,
    r: i64,
    j: i64,
    s: String,
    modulus: String,
    power_odd: String,
    power_even: String,
    gjz_alternating: Option<String>,
    gjz_blocked: Option<String>,
    gcd: String,
    bezout_u: String,
    bezout_v: String,
    quotient_via_bezout: Option<String>,
    quotient: Option<String>,
    all_hold: bool,
    checks: &'a [ProofCheck],
}

pub fn write_trace(
    t: &ProofTrace,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let s = |p: &IntPoly| p.to_string();
    match format {
        ReportFormat::Jsonl => {
            let v = TraceJson {
                n: t.n,
                r: t.r,
                j: t.j,
                s: s(&t.s),
                modulus: s(&t.modulus),
                power_odd: s(&t.power_odd),
                power_even: s(&t.power_even),
                gjz_alternating: t.gjz_alternating.as_ref().map(s),
                gjz_blocked: t.gjz_blocked.as_ref().map(s),
                gcd: t.gcd.to_string(),
                bezout_u: t.bezout_u.to_string(),
                bezout_v: t.bezout_v.to_string(),
                quotient_via_bezout: t.quotient_via_bezout.as_ref().map(|p| p.to_string()),
                quotient: t.quotient.as_ref().map(s),
                all_hold: t.all_hold(),
                checks: &t.checks,
            };
            writeln!(out, "{}", serde_json::to_string(&v).expect("serializes"))?;
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["check", "holds", "detail"])?;
            for c in &t.checks {
                w.write_record([
                    c.name,
                    if c.holds { "true" } else { "false" },
                    c.detail.as_str(),
                ])?;
            }
            w.flush()?;
        }
        ReportFormat::Text => {
            let opt = |p: Option<String>| p.unwrap_or_else(|| "-".into());
            writeln!(out, "proof replay n={} r={} j={}", t.n, t.r, t.j)?;
            writeln!(out, "  S            = {}", t.s)?;
            writeln!(out, "  modulus      = {}", t.modulus)?;
            writeln!(out, "  A = [2n+1]^(r-1) = {}", t.power_odd)?;
            writeln!(out, "  B = [2n+2]^(r-1) = {}", t.power_even)?;
            writeln!(
                out,
                "  G_alt        = {}",
                opt(t.gjz_alternating.as_ref().map(s))
            )?;
            writeln!(
                out,
                "  G_blk        = {}",
                opt(t.gjz_blocked.as_ref().map(s))
            )?;
            writeln!(out, "  gcd(A, B)    = {}", t.gcd)?;
            writeln!(out, "  u            = {}", t.bezout_u)?;
            writeln!(out, "  v            = {}", t.bezout_v)?;
            writeln!(out, "  R            = {}", opt(t.quotient.as_ref().map(s)))?;
            for c in &t.checks {
                let mark = if c.holds { "ok" } else { "FAIL" };
                writeln!(out, "  [{mark}] {}: {}", c.name, c.detail)?;
            }
        }
    }
    Ok(())
}
