//! Command-line front end.
//!
//! Exit codes: `0` success, `1` a reported violation or failed validation,
//! `2` usage or parse errors. Results go to stdout and diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::bounds::{check_instance, iterated_bound, restricted_bound, BoundReport};
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::sets::{iterated_sumset, restricted_sumset, ElementSet};
use crate::verify::{
    bench_kernels, extremal_search, run_campaign, CampaignConfig, Checks, GroupFilter,
    ReportFormat, MAX_EXHAUSTIVE_ORDER,
};
use crate::witness::{build_witness, validate_certificate, Certificate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "rsumset",
    version,
    about = "Sumsets and restricted sumsets in finite abelian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// A_1 + ... + A_n (repeat --set).
    Sumset {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long = "set", required = true)]
        sets: Vec<String>,
    },
    /// k^A, sums of k distinct elements.
    Rsumset(Instance),
    /// Evaluate a lower bound from sizes alone.
    Bound {
        #[arg(long)]
        group: GroupSpec,
        /// |A| for the restricted bound (with --k).
        #[arg(long, requires = "k", conflicts_with = "sizes")]
        size: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated part sizes for the (iterated) sumset bound.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
    },
    /// Compare |k^A| with its lower bound.
    Check {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, default_value = "table")]
        format: ReportFormat,
    },
    /// Build a witness certificate.
    Witness {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a certificate against an instance.
    Validate {
        #[command(flatten)]
        instance: Instance,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Run a verification campaign.
    Verify(Campaign),
    /// List equality instances up to translation.
    Extremal(Campaign),
    /// Time restricted_sumset on random subsets of Z_n.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "1024,4096")]
        orders: Vec<usize>,
        #[arg(long, default_value_t = 0.1)]
        density: f64,
        #[arg(long, default_value_t = 8)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct Instance {
    #[arg(long)]
    group: GroupSpec,
    #[arg(long)]
    set: String,
    #[arg(long)]
    k: usize,
}

impl Instance {
    fn parse_set(&self) -> Result<ElementSet> {
        ElementSet::parse(&self.group, &self.set)
    }
}

#[derive(Args, Debug)]
struct Campaign {
    #[arg(long, default_value_t = 16)]
    max_order: usize,
    #[arg(long, default_value_t = 2)]
    min_order: usize,
    /// Enumerate every subset of every group.
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    /// Sample this many subsets per group instead of enumerating.
    #[arg(long)]
    samples: Option<usize>,
    /// Enumerate every subset of groups up to this order.
    #[arg(long)]
    exhaustive_threshold: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest k, or `all`.
    #[arg(long, default_value = "all")]
    k_max: String,
    /// Comma-separated: theorem, pair, iterated, witness, oracle, all.
    #[arg(long, default_value = "theorem")]
    checks: String,
    #[arg(long, conflicts_with_all = ["prime_only"])]
    composite_only: bool,
    #[arg(long)]
    prime_only: bool,
    /// Stop scheduling work after this many seconds.
    #[arg(long)]
    time_budget: Option<f64>,
    #[arg(long, default_value = "table")]
    format: ReportFormat,
}

impl Campaign {
    fn config(&self) -> Result<CampaignConfig> {
        let defaults = CampaignConfig::default();
        let exhaustive_threshold = match (self.exhaustive_threshold, self.exhaustive, self.samples)
        {
            (Some(t), _, _) => t,
            (None, true, _) => self.max_order,
            (None, false, Some(_)) => 0,
            (None, false, None) => defaults.exhaustive_threshold,
        };
        if self.exhaustive && self.max_order > MAX_EXHAUSTIVE_ORDER {
            return Err(Error::Range(format!(
                "--exhaustive supports --max-order up to {MAX_EXHAUSTIVE_ORDER}"
            )));
        }
        let k_max = if self.k_max.eq_ignore_ascii_case("all") {
            None
        } else {
            Some(self.k_max.parse::<usize>().map_err(|_| {
                Error::parse(&self.k_max, "expected a non-negative integer or `all`")
            })?)
        };
        let time_budget = match self.time_budget {
            Some(s) if !(s >= 0.0 && s.is_finite()) => {
                return Err(Error::parse(
                    s.to_string(),
                    "time budget must be a non-negative number",
                ))
            }
            Some(s) => Some(Duration::from_secs_f64(s)),
            None => None,
        };
        Ok(CampaignConfig {
            min_order: self.min_order,
            max_order: self.max_order,
            exhaustive_threshold,
            samples_per_group: self.samples.unwrap_or(defaults.samples_per_group),
            k_max,
            seed: self.seed,
            checks: Checks::parse(&self.checks)?,
            groups: if self.prime_only {
                GroupFilter::PrimeOrder
            } else if self.composite_only {
                GroupFilter::CompositeOrder
            } else {
                GroupFilter::All
            },
            time_budget,
            ..defaults
        })
    }
}

/// Parses `argv` (including the program name) and runs it, writing to the
/// given streams. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
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
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Construction { .. } | Error::CaseRouting(_) => EXIT_FAILURE,
                _ => EXIT_USAGE,
            }
        }
    }
}

/// [`run`] against the process streams.
pub fn parse_and_run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(argv, &mut stdout.lock(), &mut stderr.lock())
}

fn io(e: std::io::Error) -> Error {
    Error::Format(e.to_string())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Sumset { group, sets } => {
            let parts = sets
                .iter()
                .map(|s| ElementSet::parse(&group, s))
                .collect::<Result<Vec<_>>>()?;
            let s = iterated_sumset(&group, &parts)?;
            writeln!(out, "{s}").map_err(io)?;
            writeln!(out, "size {}", s.len()).map_err(io)?;
        }
        Command::Rsumset(inst) => {
            let a = inst.parse_set()?;
            let s = restricted_sumset(&a, inst.k);
            writeln!(out, "{s}").map_err(io)?;
            writeln!(out, "size {}", s.len()).map_err(io)?;
        }
        Command::Bound {
            group,
            size,
            k,
            sizes,
        } => {
            let bound = match (size, k, sizes) {
                (Some(n), Some(k), None) => restricted_bound(&group, n, k),
                (None, _, Some(sizes)) => iterated_bound(&group, &sizes)?,
                _ => {
                    return Err(Error::Precondition(
                        "give --size with --k, or --sizes".into(),
                    ))
                }
            };
            writeln!(out, "{bound}").map_err(io)?;
        }
        Command::Check { instance, format } => {
            let a = instance.parse_set()?;
            let report = check_instance(&a, instance.k)?;
            write_bound_report(out, &report, format)?;
            if !report.satisfied {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Witness {
            instance,
            out: path,
        } => {
            let a = instance.parse_set()?;
            let cert = build_witness(&a, instance.k)?;
            let text = cert.to_json();
            match path {
                Some(p) => {
                    std::fs::write(&p, format!("{text}\n")).map_err(io)?;
                    writeln!(
                        out,
                        "wrote {} ({:?}, total {})",
                        p.display(),
                        cert.case,
                        cert.total()
                    )
                    .map_err(io)?;
                }
                None => writeln!(out, "{text}").map_err(io)?,
            }
        }
        Command::Validate { instance, cert } => {
            let a = instance.parse_set()?;
            let text = std::fs::read_to_string(&cert)
                .map_err(|e| Error::parse(cert.display().to_string(), e.to_string()))?;
            let cert = Certificate::from_json(&text)?;
            let report = validate_certificate(&instance.group, &a, instance.k, &cert);
            if report.ok {
                writeln!(
                    out,
                    "ok: {:?} certificate, total {} against bound {}",
                    cert.case, report.total, report.bound
                )
                .map_err(io)?;
            } else {
                writeln!(out, "invalid certificate").map_err(io)?;
                for f in &report.failures {
                    writeln!(out, "  {}: {}", f.check, f.detail).map_err(io)?;
                }
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Verify(c) => {
            let report = run_campaign(&c.config()?)?;
            write!(out, "{}", report.render(c.format)).map_err(io)?;
            if !report.is_clean() {
                return Ok(EXIT_FAILURE);
            }
        }
        Command::Extremal(c) => {
            let found = extremal_search(&c.config()?)?;
            match c.format {
                ReportFormat::Json => {
                    for i in &found {
                        writeln!(
                            out,
                            "{}",
                            serde_json::to_string(i).map_err(|e| Error::Format(e.to_string()))?
                        )
                        .map_err(io)?;
                    }
                }
                ReportFormat::Csv => {
                    writeln!(out, "group,set,k").map_err(io)?;
                    for i in &found {
                        writeln!(out, "{},\"{}\",{}", i.group, i.set, i.k).map_err(io)?;
                    }
                }
                ReportFormat::Table => {
                    for i in &found {
                        writeln!(out, "{:<12} k={:<3} {}", i.group.to_string(), i.k, i.set)
                            .map_err(io)?;
                    }
                    writeln!(out, "{} extremal instances", found.len()).map_err(io)?;
                }
            }
        }
        Command::Bench {
            orders,
            density,
            k,
            seed,
        } => {
            writeln!(
                out,
                "{:>8} {:>8} {:>4} {:>12}",
                "order", "|A|", "k", "micros"
            )
            .map_err(io)?;
            for row in bench_kernels(&orders, density, k, seed)? {
                writeln!(
                    out,
                    "{:>8} {:>8} {:>4} {:>12.1}",
                    row.order, row.set_size, row.k, row.micros
                )
                .map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn write_bound_report(out: &mut dyn Write, r: &BoundReport, format: ReportFormat) -> Result<()> {
    match format {
        ReportFormat::Table => {
            writeln!(out, "group     {}", r.group).map_err(io)?;
            writeln!(out, "set       {}", r.set).map_err(io)?;
            writeln!(out, "k         {}", r.k).map_err(io)?;
            writeln!(out, "p(G)      {}", r.p_of_g).map_err(io)?;
            writeln!(out, "bound     {}", r.bound).map_err(io)?;
            writeln!(out, "actual    {}", r.actual).map_err(io)?;
            let verdict = match (r.satisfied, r.equality) {
                (true, true) => "satisfied (equality)",
                (true, false) => "satisfied",
                (false, _) => "VIOLATED",
            };
            writeln!(out, "{verdict}").map_err(io)?;
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(BoundReport::CSV_HEADER)
                .map_err(|e| Error::Format(e.to_string()))?;
            w.write_record(r.csv_record())
                .map_err(|e| Error::Format(e.to_string()))?;
            out.write_all(&w.into_inner().map_err(|e| Error::Format(e.to_string()))?)
                .map_err(io)?;
        }
        ReportFormat::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string(r).map_err(|e| Error::Format(e.to_string()))?
            )
            .map_err(io)?;
        }
    }
    Ok(())
}
