//! Command-line surface for exact sphere spectral counting.
//!
//! Subcommands: `scan` (per-index table with exact signs and certified
//! crossing midpoints), `regime` (exceptional-set report), `plot` (SVG of
//! N and w), `geometry-check` (ball/sphere volume identities), and `box`
//! (Dirichlet rectangular-box baseline).  Exit codes: 0 success, 1 usage,
//! 2 I/O, 3 resource budget.

mod scan;
mod svg;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};
use serde::Serialize;

use sphere_weyl::boxes::{polya_report, weyl_node_parts, BoxDomain, DEFAULT_ENUM_BUDGET};
use sphere_weyl::decimal::{format_pi_power_sqrt, format_sqrt};
use sphere_weyl::exact::{Integer, Rational};
use sphere_weyl::geometry::{ball_volume, product_identity_check, sphere_volume};
use sphere_weyl::spectrum::SphereDim;
use sphere_weyl::weyl::{regime_report, ComparisonSign};

const THREADS_ENV: &str = "SPHERE_WEYL_THREADS";

#[derive(Parser)]
#[command(
    name = "sphere-weyl",
    version,
    about = "Exact eigenvalue counting versus the Weyl function on round spheres",
    propagate_version = true
)]
struct Cli {
    /// Worker threads (default 1; SPHERE_WEYL_THREADS overrides the default)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum JsonOnly {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SvgOnly {
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoxFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate v_k, multiplicity, N, w, exact signs, and crossing midpoints
    Scan {
        /// Sphere dimension n (n >= 1)
        #[arg(long)]
        dim: u32,
        /// Largest eigenvalue index k to scan
        #[arg(long)]
        kmax: u64,
        /// Enclosure width for crossing localization (rational, e.g. 1/1000)
        #[arg(long, default_value = "1/1000")]
        tol: String,
        /// Decimal digits for rounded columns
        #[arg(long, default_value_t = 6)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = ScanFormat::Csv)]
        format: ScanFormat,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report the exceptional set where N(v_k) >= w(v_(k+1))
    Regime {
        /// Sphere dimension n (n >= 1)
        #[arg(long)]
        dim: u32,
        /// Largest k to scan; must exceed the proven threshold bound
        #[arg(long)]
        scan_limit: u64,
        #[arg(long, value_enum, default_value_t = JsonOnly::Json)]
        format: JsonOnly,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw N and w as a self-contained SVG
    Plot {
        /// Sphere dimension n (n >= 1)
        #[arg(long)]
        dim: u32,
        /// Largest eigenvalue index k to draw
        #[arg(long)]
        kmax: u64,
        #[arg(long, value_enum, default_value_t = SvgOnly::Svg)]
        format: SvgOnly,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the ball/sphere volume product identity per dimension
    GeometryCheck {
        /// Check every dimension from 0 through this one
        #[arg(long)]
        dim: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dirichlet eigenvalue counting on a rectangular box versus Weyl
    #[command(name = "box")]
    BoxCmd {
        /// Comma-separated side lengths (rationals, e.g. 1,3/2,2)
        #[arg(long, value_delimiter = ',', required = true)]
        sides: Vec<String>,
        /// Count eigenvalues pi^2 q with q <= qmax
        #[arg(long)]
        qmax: String,
        /// Cap on enumerated lattice points
        #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u64,
        /// Decimal digits for the Weyl column
        #[arg(long, default_value_t = 6)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = BoxFormat::Text)]
        format: BoxFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum AppError {
    Usage(String),
    Io(String),
    Budget(String),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 1,
            Self::Io(_) => 2,
            Self::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Self::Usage(m) | Self::Io(m) | Self::Budget(m) => m,
        }
    }
}

impl From<sphere_weyl::Error> for AppError {
    fn from(err: sphere_weyl::Error) -> Self {
        match err {
            sphere_weyl::Error::BudgetExceeded { .. }
            | sphere_weyl::Error::PrecisionExceeded { .. } => Self::Budget(err.to_string()),
            _ => Self::Usage(err.to_string()),
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(err: std::io::Error) -> Self {
        Self::Io(err.to_string())
    }
}

fn parse_rational(text: &str) -> Result<Rational, AppError> {
    let bad = || AppError::Usage(format!("invalid rational value '{text}'"));
    let t = text.trim();
    if let Some((num, den)) = t.split_once('/') {
        let num: Integer = num.trim().parse().map_err(|_| bad())?;
        let den: Integer = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(AppError::Usage(format!("zero denominator in '{text}'")));
        }
        Ok(Rational::new(num, den))
    } else if let Some((int_part, frac_part)) = t.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        let int: Integer = if int_digits.is_empty() {
            Integer::zero()
        } else {
            int_digits.parse().map_err(|_| bad())?
        };
        let scale = num_traits::Pow::pow(&Integer::from(10), frac_part.len() as u32);
        let frac: Integer = frac_part.parse().map_err(|_| bad())?;
        let magnitude = int * &scale + frac;
        let numer = if negative { -magnitude } else { magnitude };
        Ok(Rational::new(numer, scale))
    } else {
        let num: Integer = t.parse().map_err(|_| bad())?;
        Ok(Rational::from_integer(num))
    }
}

fn write_output(out: Option<&PathBuf>, content: &str) -> Result<(), AppError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| AppError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle.write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct RegimeJson {
    dim: u32,
    scan_limit: u64,
    exceptional_set: Vec<u64>,
    stable_threshold: u64,
    paper_bound: u64,
}

#[derive(Serialize)]
struct BoxNodeJson {
    q: String,
    count: String,
    w: String,
    sign: i8,
}

#[derive(Serialize)]
struct BoxJson {
    sides: Vec<String>,
    dim: u32,
    volume: String,
    q_max: String,
    verdict: bool,
    all_strictly_below: bool,
    nodes: Vec<BoxNodeJson>,
}

// The Weyl value at a box node as a correctly rounded decimal.  With parts
// (A, p, r) meaning A pi^p sqrt(r): for p = 0 the root is folded into an
// integer radicand, otherwise the certified pi formatter does the work.
fn box_weyl_decimal(parts: &(Rational, u32, Rational), digits: u32) -> Result<String, AppError> {
    let (a, power, radicand) = parts;
    if *power == 0 {
        let scale = a / Rational::from_integer(radicand.denom().clone());
        let integer_radicand = radicand.numer() * radicand.denom();
        Ok(format_sqrt(&scale, &integer_radicand, digits))
    } else {
        Ok(format_pi_power_sqrt(a, *power, radicand, digits)?)
    }
}

fn sign_phrase(sign: ComparisonSign) -> &'static str {
    match sign {
        ComparisonSign::Below => "N < w",
        ComparisonSign::Equal => "N = w",
        ComparisonSign::Above => "N > w",
    }
}

fn run_scan(
    dim: u32,
    kmax: u64,
    tol: &str,
    digits: u32,
    format: ScanFormat,
    out: Option<&PathBuf>,
) -> Result<(), AppError> {
    let dim = SphereDim::new(dim)?;
    let tol = parse_rational(tol)?;
    if !tol.is_positive() {
        return Err(AppError::Usage(format!(
            "--tol must be positive, got {tol}"
        )));
    }
    let rows = scan::scan_rows(dim, kmax, &tol, digits)?;
    let rendered = match format {
        ScanFormat::Csv => scan::rows_to_csv(&rows),
        ScanFormat::Json => scan::rows_to_json(&rows),
    };
    write_output(out, &rendered)
}

fn run_regime(dim: u32, scan_limit: u64, out: Option<&PathBuf>) -> Result<(), AppError> {
    let dim = SphereDim::new(dim)?;
    let report = regime_report(dim, scan_limit)?;
    let json = RegimeJson {
        dim: report.dim.get(),
        scan_limit: report.scan_limit,
        exceptional_set: report.exceptional_set,
        stable_threshold: report.stable_threshold,
        paper_bound: report.proven_bound,
    };
    let mut rendered = serde_json::to_string_pretty(&json).expect("report serializes");
    rendered.push('\n');
    write_output(out, &rendered)
}

fn run_plot(dim: u32, kmax: u64, out: Option<&PathBuf>) -> Result<(), AppError> {
    let dim = SphereDim::new(dim)?;
    let rendered = svg::plot_svg(dim, kmax);
    write_output(out, &rendered)
}

fn run_geometry_check(max_dim: u32, out: Option<&PathBuf>) -> Result<(), AppError> {
    let mut rendered = String::new();
    let mut failures = 0u32;
    for d in 0..=max_dim {
        let ok = product_identity_check(d);
        if !ok {
            failures += 1;
        }
        rendered.push_str(&format!(
            "dim {d}: {}  omega = {}, s = {}\n",
            if ok { "ok" } else { "FAIL" },
            ball_volume(d).value,
            sphere_volume(d).value
        ));
    }
    rendered.push_str(&format!(
        "{} of {} product identities hold\n",
        max_dim + 1 - failures,
        max_dim + 1
    ));
    write_output(out, &rendered)?;
    if failures > 0 {
        return Err(AppError::Usage(format!(
            "{failures} product identities failed"
        )));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_box(
    sides: &[String],
    qmax: &str,
    budget: u64,
    digits: u32,
    format: BoxFormat,
    out: Option<&PathBuf>,
) -> Result<(), AppError> {
    let sides: Vec<Rational> = sides
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<_, _>>()?;
    let domain = BoxDomain::new(sides)?;
    let q_max = parse_rational(qmax)?;
    let report = polya_report(&domain, &q_max, budget)?;

    let mut nodes = Vec::with_capacity(report.nodes.len());
    for node in &report.nodes {
        let parts = weyl_node_parts(&domain, &node.q);
        nodes.push(BoxNodeJson {
            q: node.q.to_string(),
            count: node.count.to_string(),
            w: box_weyl_decimal(&parts, digits)?,
            sign: node.sign.as_i8(),
        });
    }

    match format {
        BoxFormat::Json => {
            let json = BoxJson {
                sides: domain.sides().iter().map(|s| s.to_string()).collect(),
                dim: domain.dim(),
                volume: domain.volume().to_string(),
                q_max: q_max.to_string(),
                verdict: report.verdict,
                all_strictly_below: report.all_strictly_below,
                nodes,
            };
            let mut rendered = serde_json::to_string_pretty(&json).expect("report serializes");
            rendered.push('\n');
            write_output(out, &rendered)
        }
        BoxFormat::Text => {
            let mut rendered = format!(
                "box: sides = [{}], dim = {}, volume = {}\n",
                domain
                    .sides()
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
                domain.dim(),
                domain.volume()
            );
            rendered.push_str(&format!(
                "levels with q <= {}: {} distinct\n",
                q_max,
                report.nodes.len()
            ));
            for (node, rendered_node) in report.nodes.iter().zip(&nodes) {
                rendered.push_str(&format!(
                    "q = {}\tN = {}\tw = {}\t{}\n",
                    rendered_node.q,
                    rendered_node.count,
                    rendered_node.w,
                    sign_phrase(node.sign)
                ));
            }
            rendered.push_str(&format!(
                "verdict: every node satisfies N <= w: {}\n",
                report.verdict
            ));
            rendered.push_str(&format!(
                "strict inequality at every node: {}\n",
                report.all_strictly_below
            ));
            write_output(out, &rendered)
        }
    }
}

fn thread_count(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
    })
    .unwrap_or(1)
    .max(1)
}

fn run(cli: Cli) -> Result<(), AppError> {
    let threads = thread_count(cli.threads);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| AppError::Usage(format!("cannot build thread pool: {e}")))?;
    pool.install(|| match &cli.command {
        Command::Scan {
            dim,
            kmax,
            tol,
            digits,
            format,
            out,
        } => run_scan(*dim, *kmax, tol, *digits, *format, out.as_ref()),
        Command::Regime {
            dim,
            scan_limit,
            format: JsonOnly::Json,
            out,
        } => run_regime(*dim, *scan_limit, out.as_ref()),
        Command::Plot {
            dim,
            kmax,
            format: SvgOnly::Svg,
            out,
        } => run_plot(*dim, *kmax, out.as_ref()),
        Command::GeometryCheck { dim, out } => run_geometry_check(*dim, out.as_ref()),
        Command::BoxCmd {
            sides,
            qmax,
            budget,
            digits,
            format,
            out,
        } => run_box(sides, qmax, *budget, *digits, *format, out.as_ref()),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
