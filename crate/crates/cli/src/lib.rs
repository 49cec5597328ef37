//! Command-line front end for `sharpmean-core`.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use sharpmean_core::constants::{lambda_sharp, mu_sharp, prior_constants, theorem_constants};
use sharpmean_core::curve::{self, CurveSample};
use sharpmean_core::means::{self, PositivePair, Weight};
use sharpmean_core::proof;
use sharpmean_core::{decimal, CertInterval, Error, Precision};

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sharpmean", version)]
#[command(about = "Neuman-Sandor mean, its sharp quadratic-mean bounds, and their certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate A, M, T and S for one pair.
    Means {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        /// Also print certified enclosures at this many bits.
        #[arg(long)]
        precision: Option<u32>,
    },
    /// Print the sharp weights and the constants of earlier bounds.
    Constants {
        /// Significant digits.
        #[arg(long, default_value_t = 20)]
        digits: usize,
    },
    /// Write the equality-weight curve as CSV.
    Curve {
        #[arg(long)]
        t_min: f64,
        #[arg(long)]
        t_max: f64,
        #[arg(long)]
        samples: usize,
        /// Space the ratios evenly in ln t.
        #[arg(long)]
        log: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run every certificate; exit 0 only if all of them hold.
    Certify {
        #[arg(long, default_value_t = 256)]
        precision: u32,
        /// Write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Find where the bound fails for a weight on the wrong side of a constant.
    Witness {
        #[arg(long)]
        p: f64,
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long, default_value_t = 256)]
        precision: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    /// Ratios just above 1, for weights below mu.
    NearOne,
    /// Large ratios, for weights above lambda.
    Infinity,
}

/// How a command failed: bad input (exit 2) or a failed computation or
/// I/O operation (exit 1).
#[derive(Debug, PartialEq)]
pub enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidPair { .. } | Error::InvalidPrecision { .. } | Error::InvalidArgument(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Failed(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Failed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Means { a, b, precision } => {
            let prec = precision.map(Precision::new).transpose()?;
            print_means(PositivePair::new(a, b)?, prec, out)?;
            Ok(EXIT_OK)
        }
        Command::Constants { digits } => {
            if digits == 0 || digits > 1000 {
                return Err(Failure::Usage(format!("--digits must be in 1..=1000, got {digits}")));
            }
            print_constants(digits, out)?;
            Ok(EXIT_OK)
        }
        Command::Curve { t_min, t_max, samples, log, out: path } => {
            let rows = emit_curve(t_min, t_max, samples, log, &path)?;
            writeln!(out, "wrote {rows} rows to {}", path.display())?;
            Ok(EXIT_OK)
        }
        Command::Certify { precision, report } => certify(Precision::new(precision)?, report.as_deref(), out),
        Command::Witness { p, side, precision } => {
            witness(p, side, Precision::new(precision)?, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn print_means(pair: PositivePair, prec: Option<Precision>, out: &mut dyn Write) -> Result<(), Failure> {
    let rows: [(&str, f64); 4] = [
        ("A", means::arithmetic_mean(pair)),
        ("M", means::neuman_sandor(pair)),
        ("T", means::second_seiffert(pair)),
        ("S", means::root_mean_square(pair)),
    ];
    for (name, v) in rows {
        writeln!(out, "{name}={}", fmt_shortest(v))?;
    }
    if let Some(prec) = prec {
        let enclosures = [
            ("A", means::arithmetic_mean_enclosure(pair, prec)),
            ("M", means::neuman_sandor_enclosure(pair, prec)),
            ("T", means::second_seiffert_enclosure(pair, prec)),
            ("S", means::root_mean_square_enclosure(pair, prec)),
        ];
        writeln!(out, "enclosures at {prec}:")?;
        for (name, v) in enclosures {
            writeln!(out, "{name} in [{}, {}]", v.lower_decimal(40), v.upper_decimal(40))?;
        }
    }
    Ok(())
}

/// Bits needed for `digits` correct decimal digits, with guard bits.
fn bits_for_digits(digits: usize) -> Result<Precision, Error> {
    let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32;
    Precision::new(bits.clamp(Precision::MIN_BITS, Precision::MAX_BITS))
}

fn print_constants(digits: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let prec = bits_for_digits(digits)?;
    for c in theorem_constants(prec).iter().chain(prior_constants(prec).iter()) {
        writeln!(out, "{}={}  # {}", c.name, nearest_decimal(&c.value, digits), c.closed_form)?;
    }
    Ok(())
}

/// Writes the curve CSV and returns the number of data rows.
pub fn emit_curve(t_min: f64, t_max: f64, samples: usize, log: bool, path: &Path) -> Result<usize, Failure> {
    let grid = curve::ratio_grid(t_min, t_max, samples, log)?;
    let prec = Precision::CERTIFY;
    let lam = Weight::new(lambda_sharp(prec).to_f64())?;
    let mu = Weight::new(mu_sharp(prec).to_f64())?;
    let rows = grid
        .iter()
        .map(|&t| curve::curve_sample(t, prec))
        .collect::<Result<Vec<CurveSample>, Error>>()?;

    let io_err = |e: &dyn std::fmt::Display| Failure::Failed(format!("{}: {e}", path.display()));
    let file = File::create(path).map_err(|e| io_err(&e))?;
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(file);
    w.write_record(["t", "p_eq", "M", "S_lambda", "S_mu", "residual"])
        .map_err(|e| io_err(&e))?;
    for r in &rows {
        let pair = PositivePair::new(r.t, 1.0)?;
        w.write_record([
            fmt_shortest(r.t),
            fmt_shortest(r.p_eq),
            fmt_shortest(r.m_value),
            fmt_shortest(means::weighted_rms(pair, lam)),
            fmt_shortest(means::weighted_rms(pair, mu)),
            fmt_shortest(r.residual),
        ])
        .map_err(|e| io_err(&e))?;
    }
    w.flush().map_err(|e| io_err(&e))?;
    Ok(rows.len())
}

fn certify(prec: Precision, report_path: Option<&Path>, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = proof::certify(prec)?;
    if let Some(path) = report_path {
        std::fs::write(path, report.to_json() + "\n")?;
    }
    let certified = report
        .records
        .iter()
        .filter(|r| r.status == proof::report::Status::Certified)
        .count();
    let checks = report.checks.iter().filter(|c| c.passed).count();
    writeln!(out, "sign certificates: {certified}/{} certified", report.records.len())?;
    writeln!(out, "exact and structural checks: {checks}/{} passed", report.checks.len())?;
    for root in &report.roots {
        writeln!(out, "{} in [{}, {}]", root.name, root.lower, root.upper)?;
    }
    for f in report.failures() {
        writeln!(out, "FAILED {f}")?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILURE })
}

fn witness(p: f64, side: Side, prec: Precision, out: &mut dyn Write) -> Result<(), Failure> {
    match side {
        Side::Infinity => {
            let w = curve::lambda_witness(p, prec)?;
            writeln!(out, "p={}", fmt_shortest(w.p))?;
            writeln!(out, "T0={}", fmt_shortest(w.t0))?;
            writeln!(out, "crossing in [{}, {}]", fmt_shortest(w.below), fmt_shortest(w.t0))?;
            for (t, s) in &w.checks {
                writeln!(out, "sign(S_p - M) at t={} is {s}", fmt_shortest(*t))?;
            }
        }
        Side::NearOne => {
            let w = curve::mu_witness(p, prec)?;
            writeln!(out, "p={}", fmt_shortest(w.p))?;
            writeln!(out, "delta={}", fmt_shortest(w.delta))?;
            writeln!(out, "M - S_p >= {:e} at t={}", w.margin_lower, fmt_shortest(1.0 + w.delta / 2.0))?;
            writeln!(out, "6p^2-6p+1={}", fmt_shortest(w.quadratic))?;
        }
    }
    Ok(())
}

/// Shortest decimal that reads back as the same double.
fn fmt_shortest(x: f64) -> String {
    format!("{x:?}")
}

/// Midpoint of `v` to `digits` significant digits, rounded to nearest.
fn nearest_decimal(v: &CertInterval, digits: usize) -> String {
    decimal::positional_nearest(&v.midpoint(), digits)
}
