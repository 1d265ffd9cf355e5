use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qnarayana::qobjects::{q_binomial, q_catalan, q_narayana};
use qnarayana::sums::{cyclic_sum, gjz_sum, thm12_sum, FPoly};
use qnarayana::verify::{replay_proof, Statement, StatementClass};
use qnarayana_cli::output::{write_normalized, write_poly, write_trace};
use qnarayana_cli::{emit_report, run_sweep, CliError, IntRange, JMode, ReportFormat, SweepSpec};

/// Exact q-Narayana / q-Catalan polynomials and congruence sweeps.
#[derive(Parser)]
#[command(name = "qnarayana", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gaussian binomial [N choose K].
    Qbinom {
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// q-Narayana polynomial N_q(N, K).
    Qnarayana {
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// q-Catalan polynomial C_N(q).
    Qcatalan {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Build one alternating sum.
    #[command(subcommand)]
    Sum(SumCommand),
    /// Sweep a statement over parameter ranges.
    Verify(VerifyArgs),
    /// Replay the Bezout argument for one (n, r, j).
    Proof {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        j: i64,
    },
}

#[derive(Subcommand)]
enum SumCommand {
    /// Narayana-power sum weighted by q^(j k^2 + C(k,2)).
    Thm12 {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        j: i64,
    },
    /// Cyclic product sum with weight f(k), given as ascending coefficients.
    Cyclic {
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<i64>,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        f: FPoly,
    },
    /// Open-chain sum with n_{m+1} = 0.
    Gjz {
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<i64>,
        #[arg(long)]
        j: i64,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// thm11, thm12, conj31, conj32, conj33, conj34 or gjz.
    statement: Statement,
    /// Range for n, as `A` or `A..B` (inclusive).
    #[arg(long, default_value = "1..5")]
    n: IntRange,
    #[arg(long, default_value = "1..3")]
    r: IntRange,
    /// Number of indices n_1..n_m.
    #[arg(long, default_value = "1..3")]
    m: IntRange,
    /// Range for each n_i.
    #[arg(long, default_value = "1..3")]
    ni: IntRange,
    /// Run j over 0..=J instead of the theorem range.
    #[arg(long, conflicts_with = "j")]
    j_max: Option<i64>,
    /// Explicit j range.
    #[arg(long)]
    j: Option<IntRange>,
    /// Weight f(k) for conj34; repeat for several. Defaults to a fixed suite.
    #[arg(long, allow_hyphen_values = true)]
    f: Vec<FPoly>,
    /// Reclassify the statement as theorem or conjecture.
    #[arg(long)]
    class: Option<StatementClass>,
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let mut out = open_output(&cli.out)?;
    let format = cli.format;
    let code = match cli.command {
        Command::Qbinom { n, k } => {
            write_poly(&q_binomial(n, k)?, format, &mut out)?;
            0
        }
        Command::Qnarayana { n, k } => {
            write_poly(&q_narayana(n, k)?, format, &mut out)?;
            0
        }
        Command::Qcatalan { n } => {
            write_poly(&q_catalan(n)?, format, &mut out)?;
            0
        }
        Command::Sum(SumCommand::Thm12 { n, r, j }) => {
            write_poly(&thm12_sum(n, r, j)?, format, &mut out)?;
            0
        }
        Command::Sum(SumCommand::Cyclic { ns, f }) => {
            write_normalized(&cyclic_sum(&ns, &f)?, format, &mut out)?;
            0
        }
        Command::Sum(SumCommand::Gjz { ns, j }) => {
            write_poly(&gjz_sum(&ns, j)?, format, &mut out)?;
            0
        }
        Command::Verify(args) => {
            let mut spec = SweepSpec::new(args.statement);
            spec.n = args.n;
            spec.r = args.r;
            spec.m = args.m;
            spec.ni = args.ni;
            spec.j_mode = match (args.j_max, args.j) {
                (Some(j_max), _) => JMode::Extended { j_max },
                (None, Some(r)) => JMode::Range { lo: r.lo, hi: r.hi },
                (None, None) => JMode::Theorem,
            };
            if !args.f.is_empty() {
                spec.f_suite = args.f;
            }
            spec.class_override = args.class;
            spec.format = format;
            spec.jobs = cli.jobs;
            spec.out = cli.out.clone();
            let report = run_sweep(&spec)?;
            emit_report(&report, format, &mut out)?;
            report.summary.exit_code()
        }
        Command::Proof { n, r, j } => {
            let trace = replay_proof(n, r, j)?;
            write_trace(&trace, format, &mut out)?;
            if trace.all_hold() {
                0
            } else {
                1
            }
        }
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    // Exit code 2 is reserved for findings, so usage errors map to 1.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("qnarayana: {e}");
            ExitCode::from(1)
        }
    }
}
