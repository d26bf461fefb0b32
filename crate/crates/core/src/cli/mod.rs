//! Command-line front end. Each subcommand emits the dataset behind one
//! analysis as CSV (default) or JSON.

pub mod emit;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::conjecture::{
    condition_primes, primes_from_records, scan, twin_pairs, twin_scan, GapSeries, WindowMode,
    DEFAULT_MIN_MIDPOINT,
};
use crate::primes::{sieve, PrimeTable};
use crate::sap::{extrapolate_k, sap_coefficients, verify_shift_identity, SampleWindow};
use crate::stats::{compare_distributions, DEFAULT_BINS};
use crate::Error;

use emit::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "saplab",
    version,
    about = "Polynomial extrapolation and prime window experiments"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    /// Sieve limit; every consecutive pair of primes up to here is scanned.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub limit: u64,
    #[arg(long, value_enum, default_value_t = WindowMode::Strict)]
    pub mode: WindowMode,
    /// Smallest window midpoint that is scanned.
    #[arg(long, default_value_t = DEFAULT_MIN_MIDPOINT)]
    pub threshold: u64,
    /// Worker threads for the scan (defaults to rayon's choice).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Continue equally spaced samples of a polynomial.
    Extrapolate {
        #[arg(long)]
        degree: usize,
        /// Comma-separated samples, oldest first. Integers or fractions like 1/3.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        values: Vec<BigRational>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        steps: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check the binomial shift identity for one (n, x, y).
    VerifyIdentity {
        #[arg(long)]
        degree: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: BigRational,
        #[arg(long, allow_hyphen_values = true)]
        y: BigRational,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List all primes up to a limit.
    Sieve {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        limit: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate the window around 2p' - p for each consecutive prime pair.
    Scan {
        #[command(flatten)]
        scan: ScanArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Differences between successive primes found by the scan.
    Gaps {
        #[command(flatten)]
        scan: ScanArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Each prime with its successor, their difference, and the window verdict.
    Twins {
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(2..))]
        limit: u64,
        #[arg(long, default_value_t = 3)]
        range_min: u64,
        /// Defaults to the limit.
        #[arg(long)]
        range_max: Option<u64>,
        #[arg(long, value_enum, default_value_t = WindowMode::Strict)]
        mode: WindowMode,
        /// Emit every consecutive pair, not only those two apart.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Shared-edge histograms of scan primes against all primes.
    Histogram {
        #[command(flatten)]
        scan: ScanArgs,
        #[arg(long, default_value_t = DEFAULT_BINS, value_parser = parse_bins)]
        bins: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn parse_bins(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Extrapolate { out, .. }
            | Command::VerifyIdentity { out, .. }
            | Command::Sieve { out, .. }
            | Command::Scan { out, .. }
            | Command::Gaps { out, .. }
            | Command::Twins { out, .. }
            | Command::Histogram { out, .. } => out,
        }
    }
}

fn with_threads<T: Send>(
    threads: Option<u64>,
    f: impl FnOnce() -> Result<T, Error> + Send,
) -> Result<T, Error> {
    match threads {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?
            .install(f),
    }
}

fn table_and_scan(args: &ScanArgs) -> Result<(PrimeTable, crate::conjecture::ScanOutcome), Error> {
    let table = sieve(args.limit)?;
    let outcome = with_threads(args.threads, || {
        Ok(scan(&table, args.mode, args.threshold)?)
    })?;
    Ok((table, outcome))
}

/// Runs the command, writing its dataset to `out`.
///
/// Returns a one-line note for the diagnostic stream when the command has
/// one (the scan summary in CSV mode).
pub fn execute(command: &Command, out: &mut dyn Write) -> Result<Option<String>, Error> {
    let format = command.output().format;
    match command {
        Command::Extrapolate {
            degree,
            values,
            steps,
            ..
        } => {
            let window = SampleWindow::new(values.clone(), *degree)?;
            let results = extrapolate_k(&window, *steps as usize)?;
            match format {
                OutputFormat::Csv => extrapolate_csv(out, &results)?,
                OutputFormat::Json => json(
                    out,
                    &ExtrapolateReport::new(&sap_coefficients(*degree), values, &results),
                )?,
            }
        }
        Command::VerifyIdentity { degree, x, y, .. } => {
            let check = verify_shift_identity(*degree, x, y);
            let report = IdentityReport::new(*degree, x, y, &check);
            match format {
                OutputFormat::Csv => identity_csv(out, &report)?,
                OutputFormat::Json => json(out, &report)?,
            }
        }
        Command::Sieve { limit, .. } => {
            let table = sieve(*limit)?;
            match format {
                OutputFormat::Csv => sieve_csv(out, &table)?,
                OutputFormat::Json => json(out, &SieveReport::from(&table))?,
            }
        }
        Command::Scan { scan: args, .. } => {
            let (_, outcome) = table_and_scan(args)?;
            match format {
                OutputFormat::Csv => {
                    scan_csv(out, &outcome.records)?;
                    let s = &outcome.summary;
                    return Ok(Some(format!(
                        "mode={} pairs={} hits={} misses={} hit_rate={}",
                        s.mode, s.total_pairs, s.hits, s.misses, s.hit_rate
                    )));
                }
                OutputFormat::Json => scan_json(out, &outcome)?,
            }
        }
        Command::Gaps { scan: args, .. } => {
            let (_, outcome) = table_and_scan(args)?;
            let series = GapSeries::from_primes(&primes_from_records(&outcome.records))?;
            match format {
                OutputFormat::Csv => gaps_csv(out, &series)?,
                OutputFormat::Json => json(
                    out,
                    &GapsReport {
                        mode: args.mode,
                        min_midpoint: args.threshold,
                        series,
                    },
                )?,
            }
        }
        Command::Twins {
            limit,
            range_min,
            range_max,
            mode,
            all,
            ..
        } => {
            let table = sieve(*limit)?;
            let range_max = range_max.unwrap_or(*limit);
            let mut records = twin_scan(&table, *range_min, range_max, *mode)?;
            if !*all {
                records = twin_pairs(&records);
            }
            match format {
                OutputFormat::Csv => twins_csv(out, &records)?,
                OutputFormat::Json => json(
                    out,
                    &TwinsReport {
                        mode: *mode,
                        range_min: *range_min,
                        range_max,
                        records,
                    },
                )?,
            }
        }
        Command::Histogram {
            scan: args, bins, ..
        } => {
            let table = sieve(args.limit)?;
            let found = with_threads(args.threads, || {
                Ok(condition_primes(&table, args.mode, args.threshold)?)
            })?;
            let to_i64 = |v: &[u64]| v.iter().map(|&p| p as i64).collect::<Vec<_>>();
            let comparison =
                compare_distributions(&to_i64(&found), &to_i64(table.primes()), *bins)?;
            match format {
                OutputFormat::Csv => histogram_csv(out, &comparison)?,
                OutputFormat::Json => json(
                    out,
                    &HistogramReport {
                        mode: args.mode,
                        min_midpoint: args.threshold,
                        bins: *bins,
                        comparison,
                    },
                )?,
            }
        }
    }
    Ok(None)
}

/// Executes `config`, writing to `--output` or stdout, and the diagnostic
/// note (if any) to stderr.
pub fn run(config: &RunConfig) -> Result<(), Error> {
    let note = match &config.command.output().output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            let note = execute(&config.command, &mut w)?;
            w.flush()?;
            note
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            let note = execute(&config.command, &mut w)?;
            w.flush()?;
            note
        }
    };
    if let Some(note) = note {
        eprintln!("{note}");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<String, Error> {
        let cfg = RunConfig::try_parse_from(std::iter::once("saplab").chain(args.iter().copied()))
            .expect("parse");
        let mut buf = Vec::new();
        execute(&cfg.command, &mut buf)?;
        Ok(String::from_utf8(buf).unwrap())
    }

    #[test]
    fn extrapolate_linear() {
        let out = exec(&[
            "extrapolate",
            "--degree",
            "1",
            "--values",
            "5,8",
            "--steps",
            "3",
        ])
        .unwrap();
        assert_eq!(out, "step,value\n1,11\n2,14\n3,17\n");
    }

    #[test]
    fn extrapolate_negative_and_fractional() {
        let out = exec(&["extrapolate", "--degree", "1", "--values", "-3,1/2"]).unwrap();
        assert_eq!(out, "step,value\n1,4\n");
    }

    #[test]
    fn sieve_ten() {
        assert_eq!(
            exec(&["sieve", "--limit", "10"]).unwrap(),
            "prime\n2\n3\n5\n7\n"
        );
    }

    #[test]
    fn identity_row() {
        let out = exec(&["verify-identity", "--degree", "3", "--x", "2", "--y", "5"]).unwrap();
        assert_eq!(out, "n,x,y,lhs,rhs,holds\n3,2,5,343,343,true\n");
    }

    #[test]
    fn scan_contains_counterexample() {
        let out = exec(&["scan", "--limit", "2000", "--mode", "interval"]).unwrap();
        assert!(out.lines().any(|l| l == "1327,1361,1395,interval,,false"));
    }

    #[test]
    fn usage_errors() {
        for args in [
            vec!["saplab", "sieve", "--limit", "1"],
            vec!["saplab", "histogram", "--limit", "100", "--bins", "0"],
            vec!["saplab", "scan", "--limit", "100", "--mode", "loose"],
            vec!["saplab", "frobnicate"],
        ] {
            let err = RunConfig::try_parse_from(args).unwrap_err();
            assert_eq!(err.exit_code(), 2);
        }
    }

    #[test]
    fn domain_errors_surface() {
        assert!(matches!(
            exec(&["extrapolate", "--degree", "3", "--values", "1,2"]),
            Err(Error::Sap(_))
        ));
        assert!(matches!(
            exec(&["twins", "--limit", "100", "--range-max", "200"]),
            Err(Error::Lab(_))
        ));
    }
}
