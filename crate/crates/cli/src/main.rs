mod config;
mod transform;

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bargmann::verify::{self, Suite};
use clap::{Parser, Subcommand};

use crate::config::ConfigArgs;
use crate::transform::TransformName;

/// Numerical verification of Segal-Bargmann type transforms.
#[derive(Debug, Parser)]
#[command(name = "bargmann", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run verification suites and write a JSON report.
    Verify {
        #[command(flatten)]
        config: ConfigArgs,
        /// Report destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a named transform to a coefficient document.
    Transform {
        /// b1, b1inv, b2, b2inv, g, r, bh, bhinv, i, j, t1-, t1+, t2-, t2+, fourier-, fourier+, gk
        name: TransformName,
        /// Input coefficient document (JSON).
        input: PathBuf,
        /// Overrides the nu recorded in the input document.
        #[arg(long, allow_negative_numbers = true)]
        nu: Option<f64>,
        /// Level of the gk transform.
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep quadrature nodes or truncation for one suite and emit CSV.
    Convergence {
        #[arg(long)]
        suite: Suite,
        /// Strictly increasing values, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        sweep: Vec<usize>,
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Identity,
}

impl From<bargmann::Error> for Failure {
    fn from(e: bargmann::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn sink(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { config, out } => {
            let cfg = config.resolve()?;
            let report = verify::run(&cfg)?;
            writeln!(sink(out.as_deref())?, "{}", report.to_json_string())?;
            let failed = report.reports.iter().filter(|r| !r.pass).count();
            eprintln!(
                "{} identities, {} failed, {:.2}s",
                report.reports.len(),
                failed,
                report.wall_time_seconds
            );
            for f in &report.flags {
                eprintln!("flag: {f}");
            }
            if report.pass {
                Ok(())
            } else {
                Err(Failure::Identity)
            }
        }
        Command::Transform {
            name,
            input,
            nu,
            k,
            out,
        } => {
            let mut doc = bargmann::spaces::CoeffDocument::read(&input)?;
            if let Some(nu) = nu {
                doc.nu = nu;
            }
            let result = transform::apply(name, &doc, k)?;
            writeln!(sink(out.as_deref())?, "{}", result.to_json_string()?)?;
            Ok(())
        }
        Command::Convergence {
            suite,
            sweep,
            config,
            out,
        } => {
            let cfg = config.resolve()?;
            let rows = verify::convergence(suite, &sweep, &cfg)?;
            let mut w = csv::Writer::from_writer(sink(out.as_deref())?);
            w.write_record(["parameter", "residual"])
                .map_err(|e| Failure::Usage(e.to_string()))?;
            for (p, r) in rows {
                w.write_record([p.to_string(), format!("{r:e}")])
                    .map_err(|e| Failure::Usage(e.to_string()))?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
