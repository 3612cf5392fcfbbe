//! Command-line front end: per-problem factor reports, reducibility
//! classification, pole matrices, holomorphy certificates, parameter sweeps
//! and numeric cross-checks.
//!
//! Exit codes: 0 success / certificate pass, 1 computation-level failure
//! (pole evaluation, certificate fail), 2 usage, 3 I/O.

use std::fs::File;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use speh_core::sweep::{SweepFilter, SweepRow, SweepSpec};
use speh_core::{
    alpha, beta, c_psi, candidate_points, certify_discrete, certify_supercuspidal, classify,
    exceptional_points, gamma, pole_matrix, InductionProblem, MatrixKind,
};

const EXIT_COMPUTE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "speh",
    about = "Exact reducibility calculator for induced products of two Speh representations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ProblemArgs {
    /// Segment length of the first factor
    #[arg(long)]
    a: u32,
    /// Segment length of the second factor
    #[arg(long)]
    b: u32,
    /// Speh height of the first factor
    #[arg(long)]
    c: u32,
    /// Speh height of the second factor
    #[arg(long)]
    d: u32,
    /// Rank of the underlying supercuspidal (metadata only)
    #[arg(long, default_value_t = 1)]
    tau_rank: u32,
}

impl ProblemArgs {
    fn problem(&self) -> Result<InductionProblem, CliError> {
        if self.a < 1 || self.b < 1 || self.c < 1 || self.d < 1 || self.tau_rank < 1 {
            return Err(CliError::usage("parameters must be >= 1"));
        }
        Ok(InductionProblem::new(self.a, self.b, self.c, self.d).with_tau_rank(self.tau_rank))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixFormat {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Coords {
    W,
    S,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Alpha,
    Beta,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normalization factors and their pole parts
    Factors {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Classify the candidate reducibility points
    Classify {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Coordinate for displayed points: w = 2s (default) or s
        #[arg(long, value_enum, default_value_t = Coords::W)]
        coords: Coords,
    },
    /// Render the alpha or beta pole matrix with shared poles flagged
    Matrix {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
        format: MatrixFormat,
    },
    /// Emit the holomorphy certificate; exit 0 iff the verdict is true
    Certify {
        #[command(flatten)]
        problem: ProblemArgs,
    },
    /// Evaluate a grid of problems and write one row per problem
    Sweep {
        /// Shorthand: use [1, MAX] for every parameter range
        #[arg(long)]
        max: Option<u32>,
        #[arg(long, default_value_t = 1)]
        a_min: u32,
        #[arg(long)]
        a_max: Option<u32>,
        #[arg(long, default_value_t = 1)]
        b_min: u32,
        #[arg(long)]
        b_max: Option<u32>,
        #[arg(long, default_value_t = 1)]
        c_min: u32,
        #[arg(long)]
        c_max: Option<u32>,
        #[arg(long, default_value_t = 1)]
        d_min: u32,
        #[arg(long)]
        d_max: Option<u32>,
        /// Output file path
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
        format: SweepFormat,
        /// Keep only problems failing the co-primality closed form
        #[arg(long, conflicts_with = "only_exceptional")]
        only_noncoprime: bool,
        /// Keep only problems with theorem-only points
        #[arg(long)]
        only_exceptional: bool,
    },
    /// Numerically evaluate alpha, beta, gamma at (q, s) and cross-check
    Eval {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Residual field cardinality (any real > 1)
        #[arg(long)]
        q: f64,
        /// Evaluation point in the s coordinate (w = 2s)
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: msg.into(),
        }
    }
    fn compute(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_COMPUTE,
            message: msg.into(),
        }
    }
    fn io(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_IO,
            message: msg.into(),
        }
    }
}

fn cmd_factors(p: &InductionProblem, format: ReportFormat) -> Result<u8, CliError> {
    let a = alpha(p);
    let b = beta(p);
    let g = gamma(p);
    match format {
        ReportFormat::Text => {
            println!("alpha = {}", a);
            println!("beta = {}", b);
            println!("gamma = {}", g);
            println!("alpha poles: {}", a.pole_part());
            println!("beta poles: {}", b.pole_part());
            if let Ok(cp) = c_psi(p) {
                println!("c_psi = {}", cp);
                println!("c_psi poles: {}", cp.poles());
                println!("c_psi zeros: {}", cp.zeros());
            }
        }
        ReportFormat::Json => {
            let mut report = json!({
                "problem": p.to_json(),
                "alpha": a.to_json(),
                "beta": b.to_json(),
                "gamma": g.to_json(),
                "poles": {
                    "alpha": a.pole_part().to_json(),
                    "beta": b.pole_part().to_json(),
                },
            });
            if let Ok(cp) = c_psi(p) {
                report["c_psi"] = cp.to_json();
            }
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
    }
    Ok(0)
}

fn cmd_classify(p: &InductionProblem, format: ReportFormat, coords: Coords) -> Result<u8, CliError> {
    let verdicts = classify(p);
    let exceptional = exceptional_points(p);
    match format {
        ReportFormat::Text => {
            for v in &verdicts {
                // negative representative first, then its mirror
                for (point, aord, dord) in [
                    (v.point, v.alpha_order, v.dual_alpha_order),
                    (-v.point, v.dual_alpha_order, v.alpha_order),
                ] {
                    let coord = match coords {
                        Coords::W => format!("w={}", point),
                        Coords::S => format!("s={}", point.halved_string()),
                    };
                    println!(
                        "{}  beta_order={} alpha_order={} dual_alpha_order={}  {}  {}",
                        coord,
                        v.beta_order,
                        aord,
                        dord,
                        if v.reducible { "reducible" } else { "irreducible" },
                        v.tier
                    );
                }
            }
            let pts: Vec<String> = exceptional
                .iter()
                .map(|w| match coords {
                    Coords::W => w.to_string(),
                    Coords::S => w.halved_string(),
                })
                .collect();
            println!("exceptional: {{{}}}", pts.join(", "));
        }
        ReportFormat::Json => {
            let report = json!({
                "problem": p.to_json(),
                "verdicts": verdicts.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
                "candidates": candidate_points(p).to_json(),
                "exceptional": exceptional.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
    }
    Ok(0)
}

fn cmd_matrix(p: &InductionProblem, which: Which, format: MatrixFormat) -> Result<u8, CliError> {
    let kind = match which {
        Which::Alpha => MatrixKind::Alpha,
        Which::Beta => MatrixKind::Beta,
    };
    let m = pole_matrix(p, kind);
    match format {
        MatrixFormat::Text => print!("{}", m.render_text()),
        MatrixFormat::Latex => print!("{}", m.render_latex()),
        MatrixFormat::Json => println!("{}", serde_json::to_string_pretty(&m.to_json()).unwrap()),
    }
    Ok(0)
}

fn cmd_certify(p: &InductionProblem) -> Result<u8, CliError> {
    let discrete = certify_discrete(p);
    let mut verdict = discrete.verdict;
    let mut report = discrete.to_json();
    if p.a == 1 && p.b == 1 {
        let sc = certify_supercuspidal(p.c, p.d);
        verdict = verdict && sc.verdict;
        report["supercuspidal"] = sc.to_json();
    }
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(if verdict { 0 } else { EXIT_COMPUTE })
}

fn cmd_sweep(spec: SweepSpec, out: &PathBuf, format: SweepFormat) -> Result<u8, CliError> {
    spec.validate().map_err(CliError::usage)?;
    let rows = speh_core::sweep_rows(&spec);
    let mut file = File::create(out).map_err(|e| CliError::io(format!("{}: {}", out.display(), e)))?;
    let res = match format {
        SweepFormat::Csv => {
            let mut buf = String::with_capacity(rows.len() * 32);
            buf.push_str(SweepRow::CSV_HEADER);
            buf.push('\n');
            for r in &rows {
                buf.push_str(&r.csv_line());
                buf.push('\n');
            }
            file.write_all(buf.as_bytes())
        }
        SweepFormat::Json => {
            let v = serde_json::Value::Array(rows.iter().map(|r| r.to_json()).collect());
            file.write_all(serde_json::to_string_pretty(&v).unwrap().as_bytes())
                .and_then(|_| file.write_all(b"\n"))
        }
    };
    res.map_err(|e| CliError::io(format!("{}: {}", out.display(), e)))?;
    eprintln!("wrote {} rows to {}", rows.len(), out.display());
    Ok(0)
}

fn cmd_eval(p: &InductionProblem, q: f64, s: f64) -> Result<u8, CliError> {
    if q.is_nan() || q <= 1.0 {
        return Err(CliError::usage("q must be a real number > 1"));
    }
    if !s.is_finite() {
        return Err(CliError::usage("s must be finite"));
    }
    let w = 2.0 * s;
    let named = [("alpha", alpha(p)), ("beta", beta(p)), ("gamma", gamma(p))];
    let mut values = Vec::new();
    for (name, prod) in &named {
        let v = prod
            .eval(q, w)
            .map_err(|e| CliError::compute(format!("{}: {}", name, e)))?;
        println!("{} = {:.12e}", name, v);
        values.push(v);
    }
    let rel = (values[2] - values[0] / values[1]).abs() / values[2].abs().max(1e-300);
    println!("gamma vs alpha/beta relative discrepancy = {:.3e}", rel);
    if rel >= 1e-10 {
        return Err(CliError::compute(format!(
            "cross-check failed: relative discrepancy {:.3e} >= 1e-10",
            rel
        )));
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Factors { problem, format } => cmd_factors(&problem.problem()?, format),
        Command::Classify {
            problem,
            format,
            coords,
        } => cmd_classify(&problem.problem()?, format, coords),
        Command::Matrix {
            problem,
            which,
            format,
        } => cmd_matrix(&problem.problem()?, which, format),
        Command::Certify { problem } => cmd_certify(&problem.problem()?),
        Command::Sweep {
            max,
            a_min,
            a_max,
            b_min,
            b_max,
            c_min,
            c_max,
            d_min,
            d_max,
            out,
            format,
            only_noncoprime,
            only_exceptional,
        } => {
            let hi = |explicit: Option<u32>| explicit.or(max);
            let range = |lo: u32, explicit: Option<u32>| -> Result<(u32, u32), CliError> {
                match hi(explicit) {
                    Some(h) => Ok((lo, h)),
                    None => Err(CliError::usage(
                        "no upper bound given: pass --max or the per-parameter --*-max flags",
                    )),
                }
            };
            let filter = if only_noncoprime {
                SweepFilter::OnlyNonCoprime
            } else if only_exceptional {
                SweepFilter::OnlyExceptional
            } else {
                SweepFilter::All
            };
            let spec = SweepSpec {
                a: range(a_min, a_max)?,
                b: range(b_min, b_max)?,
                c: range(c_min, c_max)?,
                d: range(d_min, d_max)?,
                filter,
            };
            cmd_sweep(spec, &out, format)
        }
        Command::Eval { problem, q, s } => cmd_eval(&problem.problem()?, q, s),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
