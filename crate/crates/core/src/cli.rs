//! Command-line front end.
//!
//! Exit codes: `0` success (for `audit`, every evaluated check holds), `1` at
//! least one nonzero residual, `2` usage or precondition error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::appell::{bernoulli_number, bernoulli_poly, euler_number, euler_poly};
use crate::audit::{registry, sweep, ParamGrid};
use crate::numeric::Rational;
use crate::periodic::euler_function;
use crate::report::{format_rational, render, OutputFormat};
use crate::sums::{dc_sum, dedekind_sum, gen_dedekind_sum};
use crate::umbral::{scaled_pair_power, theorem9_rhs, umbral_power, UmbralTerm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RESIDUAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable capping the audit worker count (`0` or unset: default).
pub const THREADS_ENV: &str = "DCSUM_THREADS";

#[derive(Debug, Parser)]
#[command(name = "dcsum", version, about = "Exact Euler numbers, Dedekind and DC sums, and identity audits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Euler number E_n
    Eulernum { n: usize },
    /// Bernoulli number B_n
    Bernoullinum { n: usize },
    /// Euler polynomial E_n(x)
    Eulerpoly { n: usize },
    /// Bernoulli polynomial B_n(x)
    Bernoullipoly { n: usize },
    /// Euler function: E_p on [0,1), extended by Ebar_p(x+1) = -Ebar_p(x)
    Eulerfn {
        p: usize,
        #[arg(allow_hyphen_values = true)]
        x: Rational,
    },
    /// Classical Dedekind sum S(h,k)
    Dedekind { h: u64, k: u64 },
    /// Generalized Dedekind sum S_p(h,k)
    Gendedekind { p: usize, h: u64, k: u64 },
    /// DC sum T_p(h,k)
    Dcsum { p: usize, h: u64, k: u64 },
    /// Evaluate a fixed umbral form
    Umbral(UmbralArgs),
    /// List registered identity checks
    Checks,
    /// Evaluate identity checks over a parameter grid
    Audit(AuditArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum UmbralForm {
    /// (hE + kE')^p
    #[value(name = "hEkE")]
    HeKe,
    /// (E + x)^p
    #[value(name = "shifted")]
    Shifted,
    /// right-hand side of the odd-p DC reciprocity formula
    #[value(name = "thm9")]
    Thm9,
}

#[derive(Debug, Args)]
struct UmbralArgs {
    #[arg(long, value_enum)]
    form: UmbralForm,
    #[arg(long)]
    p: usize,
    #[arg(long, default_value_t = 1)]
    h: u64,
    #[arg(long, default_value_t = 1)]
    k: u64,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    x: Rational,
}

#[derive(Debug, Args)]
struct AuditArgs {
    /// Comma-separated check ids (default: all)
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// Use the standard grid: p in {3,5,7}, odd coprime h,k <= 15, odd m <= 15,
    /// n <= 20, l <= 10, s <= 10
    #[arg(long, conflicts_with_all = [
        "p", "pmax", "h", "hmax", "k", "kmax", "m", "mmax", "n", "nmax", "l", "lmax", "s", "smax",
        "odd_only", "coprime_only",
    ])]
    standard: bool,
    /// Explicit p values; overrides --pmax
    #[arg(long = "p", value_delimiter = ',')]
    p: Vec<i64>,
    #[arg(long, default_value_t = 7)]
    pmax: i64,
    #[arg(long = "h", value_delimiter = ',')]
    h: Vec<i64>,
    #[arg(long, default_value_t = 15)]
    hmax: i64,
    #[arg(long = "k", value_delimiter = ',')]
    k: Vec<i64>,
    #[arg(long, default_value_t = 15)]
    kmax: i64,
    #[arg(long = "m", value_delimiter = ',')]
    m: Vec<i64>,
    #[arg(long, default_value_t = 15)]
    mmax: i64,
    #[arg(long = "n", value_delimiter = ',')]
    n: Vec<i64>,
    #[arg(long, default_value_t = 20)]
    nmax: i64,
    #[arg(long = "l", value_delimiter = ',')]
    l: Vec<i64>,
    #[arg(long, default_value_t = 10)]
    lmax: i64,
    #[arg(long = "s", value_delimiter = ',')]
    s: Vec<i64>,
    #[arg(long, default_value_t = 10)]
    smax: i64,
    /// Drop tuples with even h or k
    #[arg(long)]
    odd_only: bool,
    /// Drop tuples with gcd(h, k) != 1
    #[arg(long)]
    coprime_only: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn pick(explicit: &[i64], lo: i64, max: i64) -> Vec<i64> {
    if explicit.is_empty() {
        (lo..=max).collect()
    } else {
        explicit.to_vec()
    }
}

impl AuditArgs {
    fn grid(&self) -> ParamGrid {
        if self.standard {
            return ParamGrid::standard();
        }
        ParamGrid {
            p: pick(&self.p, 1, self.pmax),
            h: pick(&self.h, 1, self.hmax),
            k: pick(&self.k, 1, self.kmax),
            m: pick(&self.m, 1, self.mmax),
            n: pick(&self.n, 1, self.nmax),
            l: pick(&self.l, 0, self.lmax),
            s: pick(&self.s, 0, self.smax),
            odd_only: self.odd_only,
            coprime_only: self.coprime_only,
        }
        .normalized()
    }
}

/// Parse `argv` (including the program name) and run. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    let value = match command {
        Command::Eulernum { n } => format_rational(&euler_number(n)),
        Command::Bernoullinum { n } => format_rational(&bernoulli_number(n)),
        Command::Eulerpoly { n } => euler_poly(n).to_string(),
        Command::Bernoullipoly { n } => bernoulli_poly(n).to_string(),
        Command::Eulerfn { p, x } => format_rational(&euler_function(p, &x)),
        Command::Dedekind { h, k } => format_rational(&dedekind_sum(h, k).map_err(|e| e.to_string())?),
        Command::Gendedekind { p, h, k } => {
            format_rational(&gen_dedekind_sum(p, h, k).map_err(|e| e.to_string())?)
        }
        Command::Dcsum { p, h, k } => format_rational(&dc_sum(p, h, k)),
        Command::Umbral(a) => {
            let v = match a.form {
                UmbralForm::HeKe => scaled_pair_power(a.p, a.h, a.k),
                UmbralForm::Shifted => {
                    let t = [UmbralTerm::new(Rational::one(), a.x.clone(), 0)];
                    umbral_power(&t, a.p).map_err(|e| e.to_string())?
                }
                UmbralForm::Thm9 => theorem9_rhs(a.p, a.h, a.k).map_err(|e| e.to_string())?,
            };
            format_rational(&v)
        }
        Command::Checks => {
            let mut s = String::new();
            for c in registry() {
                s.push_str(&format!(
                    "{:<17} ({}) [{}] {}\n",
                    c.id,
                    c.params.join(","),
                    c.hypotheses,
                    c.claim
                ));
            }
            let _ = out.write_all(s.as_bytes());
            return Ok(EXIT_OK);
        }
        Command::Audit(a) => return audit(a, out),
    };
    writeln!(out, "{value}").map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}

fn worker_count() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

fn audit(a: AuditArgs, out: &mut dyn Write) -> Result<i32, String> {
    let ids: Vec<String> = if a.checks.is_empty() {
        registry().iter().map(|c| c.id.to_string()).collect()
    } else {
        a.checks.iter().map(|s| s.trim().to_string()).collect()
    };
    let id_refs: Vec<&str> = ids.iter().map(String::as_str).collect();
    let grid = a.grid();
    let run = || sweep(&id_refs, &grid);
    let report = match worker_count() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| e.to_string())?
            .install(run),
        None => run(),
    }
    .map_err(|e| e.to_string())?;
    let text = render(&report, a.format);
    match &a.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string())?,
    }
    Ok(if report.all_hold() { EXIT_OK } else { EXIT_RESIDUAL })
}
