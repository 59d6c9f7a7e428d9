//! The `gggr` command-line front end.
//!
//! Exit codes: 0 success / verification passed, 1 verification failed,
//! 2 usage error, 3 size cap exceeded.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use crate::error::Error;
use crate::green::{green_table, GREEN_CAP};
use crate::grouporders::{centralizer_dim, GroupKind};
use crate::kawanaka::{endo_dim, gggr_character, verify_theorem, VerificationReport, KAWANAKA_CAP};
use crate::oracle::{self, prime_power};
use crate::partitions::{partitions_of, Partition};
use crate::polyring::{LaurentPoly, RationalPoly, Sign};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Environment variable overriding the worker-thread count.
pub const THREADS_ENV: &str = "GGGR_THREADS";

/// Default cap for the Kawanaka commands, per twist; `--allow-large` lifts
/// both to [`KAWANAKA_CAP`].
pub fn default_cap(eps: Sign) -> usize {
    match eps {
        Sign::Plus => 5,
        Sign::Minus => 4,
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "gggr",
    version,
    about = "Generalised Gelfand-Graev characters of GL_n(q) and GU_n(q)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dump the Green polynomials Q_rho^lambda(eps q)
    Green(Common),
    /// Dump gamma_mu(lambda) for every unipotent class lambda
    Gggr {
        #[command(flatten)]
        common: Common,
        /// GGGR label, comma separated, e.g. 2,1
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
    /// Dump <gamma_mu, gamma_mu> for every mu
    Endo(Common),
    /// Check that every <gamma_mu, gamma_mu> is monic of degree n + 2n(mu)
    Verify(Common),
    /// Brute-force the group over F_q and compare with the symbolic results
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long)]
    pub n: usize,
    /// +1 for GL_n, -1 for GU_n
    #[arg(long, default_value = "+1", allow_hyphen_values = true, value_parser = parse_sign)]
    pub eps: Sign,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Prime powers at which to evaluate polynomials
    #[arg(long = "q-samples", value_delimiter = ',', default_value = "2,3,4,5", value_parser = parse_prime_power)]
    pub q_samples: Vec<u64>,
    /// Permit n = 6 in the Kawanaka commands
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+1" | "1" | "+" => Ok(Sign::Plus),
        "-1" | "-" => Ok(Sign::Minus),
        _ => Err(format!("expected +1 or -1, got {s:?}")),
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_prime_power(s: &str) -> Result<u64, String> {
    let q: u64 = s.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
    prime_power(q)
        .map(|_| q)
        .ok_or_else(|| format!("{q} is not a prime power"))
}

/// Failure modes of a run, mapped onto exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Cap(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::GroupTooLarge(_) => Failure::Cap(e.to_string()),
            Error::NotPrimePower(_) | Error::SizeMismatch(..) | Error::InvalidPartition(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Other(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

fn samples(poly: &LaurentPoly, qs: &[u64]) -> Result<BTreeMap<u64, String>, Failure> {
    qs.iter()
        .map(|&q| {
            let v = poly.eval(&BigRational::from_integer(q.into()))?;
            Ok((q, v.to_string()))
        })
        .collect()
}

fn check_n(c: &Common, cap: usize) -> Result<(), Failure> {
    if c.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    if c.n > cap {
        return Err(Failure::Cap(format!("n = {} exceeds the cap {cap}", c.n)));
    }
    Ok(())
}

fn kawanaka_cap(c: &Common) -> usize {
    if c.allow_large {
        KAWANAKA_CAP
    } else {
        default_cap(c.eps)
    }
}

#[derive(Serialize)]
struct ValueJson {
    lambda: Partition,
    poly: LaurentPoly,
    samples: BTreeMap<u64, String>,
}

#[derive(Serialize)]
struct GggrJson {
    n: usize,
    eps: i64,
    mu: Partition,
    values: Vec<ValueJson>,
}

#[derive(Serialize)]
struct EndoRecord {
    mu: Partition,
    poly: RationalPoly,
    degree: Option<usize>,
    target_degree: usize,
    samples: BTreeMap<u64, String>,
}

#[derive(Serialize)]
struct EndoJson {
    n: usize,
    eps: i64,
    results: Vec<EndoRecord>,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Renders output and the exit code for one parsed command.
fn execute(cmd: &Command) -> Result<(String, i32), Failure> {
    match cmd {
        Command::Green(c) => {
            check_n(c, GREEN_CAP)?;
            let table = green_table(c.n)?;
            let dump = table.to_json(c.eps);
            let text = match c.format {
                Format::Json => json(&dump),
                Format::Csv => {
                    let mut s = String::from("rho,lambda,poly\n");
                    for row in &dump.rows {
                        for cell in &row.cols {
                            s +=
                                &format!("\"{}\",\"{}\",\"{}\"\n", row.rho, cell.lambda, cell.poly);
                        }
                    }
                    s
                }
                Format::Pretty => {
                    let mut s = format!(
                        "Green polynomials Q_rho^lambda(eps q), n = {}, eps = {}\n",
                        c.n, c.eps
                    );
                    for row in &dump.rows {
                        for cell in &row.cols {
                            s += &format!(
                                "rho = {:<12} lambda = {:<12} {}\n",
                                row.rho.to_string(),
                                cell.lambda.to_string(),
                                cell.poly
                            );
                        }
                    }
                    s
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Gggr { common: c, mu } => {
            if mu.size() != c.n {
                return Err(Failure::Usage(format!(
                    "--mu {mu} is not a partition of {}",
                    c.n
                )));
            }
            check_n(c, kawanaka_cap(c))?;
            let chi = gggr_character(mu, c.eps)?;
            let values = chi
                .values
                .iter()
                .map(|(lambda, poly)| {
                    Ok(ValueJson {
                        lambda: lambda.clone(),
                        poly: poly.clone(),
                        samples: samples(poly, &c.q_samples)?,
                    })
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            // classes in canonical partition order
            let order = partitions_of(c.n);
            let mut values = values;
            values.sort_by_key(|v| order.iter().position(|l| *l == v.lambda));
            let out = GggrJson {
                n: c.n,
                eps: c.eps.value(),
                mu: mu.clone(),
                values,
            };
            let text = match c.format {
                Format::Json => json(&out),
                Format::Csv => {
                    let mut s = String::from("mu,lambda,poly\n");
                    for v in &out.values {
                        s += &format!("\"{}\",\"{}\",\"{}\"\n", mu, v.lambda, v.poly);
                    }
                    s
                }
                Format::Pretty => {
                    let mut s = format!("gamma_{mu} on unipotent classes, eps = {}\n", c.eps);
                    for v in &out.values {
                        s += &format!("lambda = {:<12} {}\n", v.lambda.to_string(), v.poly);
                    }
                    s
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Endo(c) => {
            check_n(c, kawanaka_cap(c))?;
            let results = partitions_of(c.n)
                .into_iter()
                .map(|mu| {
                    let poly = endo_dim(&mu, c.eps)?;
                    Ok(EndoRecord {
                        degree: poly.degree(),
                        target_degree: centralizer_dim(&mu),
                        samples: samples(&poly.to_laurent(), &c.q_samples)?,
                        poly,
                        mu,
                    })
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            let out = EndoJson {
                n: c.n,
                eps: c.eps.value(),
                results,
            };
            let text = match c.format {
                Format::Json => json(&out),
                Format::Csv => {
                    let mut s = String::from("mu,degree,target_degree,poly\n");
                    for r in &out.results {
                        s += &format!(
                            "\"{}\",{},{},\"{}\"\n",
                            r.mu,
                            r.degree.map_or(String::new(), |d| d.to_string()),
                            r.target_degree,
                            r.poly
                        );
                    }
                    s
                }
                Format::Pretty => {
                    let mut s = format!("dim End(Gamma_mu), n = {}, eps = {}\n", c.n, c.eps);
                    for r in &out.results {
                        s += &format!("mu = {:<12} {}\n", r.mu.to_string(), r.poly);
                    }
                    s
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Verify(c) => {
            check_n(c, kawanaka_cap(c))?;
            let report = verify_theorem(c.n, c.eps)?;
            let code = if report.pass { EXIT_OK } else { EXIT_FAIL };
            Ok((render_report(&report, c.format), code))
        }
        Command::Oracle { common: c, q } => {
            if c.n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            prime_power(*q).ok_or_else(|| Failure::Usage(format!("{q} is not a prime power")))?;
            let report = oracle::run(GroupKind::new(c.n, c.eps), *q)?;
            let code = if report.pass { EXIT_OK } else { EXIT_FAIL };
            let text = match c.format {
                Format::Json => json(&report),
                Format::Csv => {
                    let mut s = String::from("check,oracle,symbolic,pass\n");
                    for cmp in &report.comparisons {
                        s += &format!(
                            "\"{}\",{},{},{}\n",
                            cmp.name, cmp.oracle, cmp.symbolic, cmp.pass
                        );
                    }
                    s
                }
                Format::Pretty => {
                    let mut s = format!(
                        "{}({}) has order {}\n",
                        GroupKind::new(c.n, c.eps).name(),
                        q,
                        report.group_order
                    );
                    for cmp in &report.comparisons {
                        s += &format!(
                            "{:<28} oracle {:>10}  symbolic {:>10}  {}\n",
                            cmp.name,
                            cmp.oracle,
                            cmp.symbolic,
                            if cmp.pass { "ok" } else { "MISMATCH" }
                        );
                    }
                    s
                }
            };
            Ok((text, code))
        }
    }
}

fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Csv => {
            let mut s = String::from("mu,degree,monic,pass\n");
            for r in &report.results {
                s += &format!(
                    "\"{}\",{},{},{}\n",
                    r.mu,
                    r.degree.map_or(String::new(), |d| d.to_string()),
                    r.monic,
                    r.pass
                );
            }
            s
        }
        Format::Pretty => {
            let mut s = format!("n = {}, eps = {}\n", report.n, report.eps);
            for r in &report.results {
                let poly = r
                    .poly
                    .as_ref()
                    .map_or_else(|| "-".to_string(), ToString::to_string);
                s += &format!(
                    "{} mu = {:<12} degree {:>3} / {:<3} {}\n",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.mu.to_string(),
                    r.degree.map_or("-".to_string(), |d| d.to_string()),
                    r.target_degree,
                    poly
                );
            }
            s += if report.pass {
                "overall: PASS\n"
            } else {
                "overall: FAIL\n"
            };
            s
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

/// Parses `args` (including the program name), runs the command, writes
/// data to `stdout` (or `--output`) and diagnostics to `stderr`, and
/// returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = write!(stderr, "{e}");
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    configure_threads();
    let output = match &cli.command {
        Command::Green(c) | Command::Endo(c) | Command::Verify(c) => c.output.clone(),
        Command::Gggr { common, .. } | Command::Oracle { common, .. } => common.output.clone(),
    };
    let result = execute(&cli.command).and_then(|(text, code)| {
        match output {
            Some(path) => File::create(path)?.write_all(text.as_bytes())?,
            None => stdout.write_all(text.as_bytes())?,
        }
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Cap(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_CAP
        }
        Err(Failure::Other(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAIL
        }
    }
}
