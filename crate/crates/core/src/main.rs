use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use capdetect::detect::{detect_capacity, is_prime, DetectionConfig};
use capdetect::error::{Error, Result};
use capdetect::figures::{reproduce_figure, Figure};
use capdetect::format::{parse_custom_bases, parse_transition_csv, Grid, OutputFormat};
use capdetect::infotheory::{binary_capacity, blahut_arimoto, BaOptions, DEFAULT_MAX_ITER, DEFAULT_TOL_BITS};
use capdetect::qcore::{is_cptp, KrausChannel, CPTP_TOL};
use capdetect::sim::{detect_from_samples, sample_bases, shot_records_csv, DEFAULT_RESAMPLES};
use capdetect::spec::{parse_channel_spec, parse_channel_spec_unvalidated, ChannelSpec};

/// Measurement-based lower bounds on the classical capacity of quantum channels.
#[derive(Parser)]
#[command(name = "capdetect", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Detected capacity of a channel over a family of bases.
    Bound {
        #[command(flatten)]
        channel: ChannelArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blahut–Arimoto on a transition matrix given as CSV (outputs as rows).
    Ba {
        matrix: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Capacity of the binary channel with P(1|0) = EPS0 and P(0|1) = EPS1.
    Binary {
        #[arg(allow_negative_numbers = true)]
        eps0: f64,
        #[arg(allow_negative_numbers = true)]
        eps1: f64,
    },
    /// Finite-shot estimate of the detected capacity with a bootstrap interval.
    Simulate {
        #[command(flatten)]
        channel: ChannelArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, default_value_t = 10_000)]
        shots: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_RESAMPLES)]
        resamples: usize,
        /// Also write the raw counts as CSV.
        #[arg(long)]
        counts: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Complete positivity and trace preservation of a channel spec.
    CheckCp {
        #[arg(long)]
        channel: PathBuf,
    },
    /// Data behind one of the figures: fig1, fig2, fig3, fig4, suppl_stretched.
    Figure {
        name: String,
        /// Override a sweep, e.g. gamma=0:1:0.05 (repeatable).
        #[arg(long = "grid")]
        grids: Vec<String>,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ChannelArgs {
    /// JSON channel specification.
    #[arg(long)]
    channel: PathBuf,
    /// pauli, weyl, or custom:<path>. Defaults to pauli for qubits and weyl
    /// for other prime dimensions.
    #[arg(long)]
    bases: Option<String>,
}

#[derive(Args)]
struct SolverArgs {
    /// Blahut–Arimoto stopping tolerance in bits.
    #[arg(long, default_value_t = DEFAULT_TOL_BITS)]
    tol: f64,
    #[arg(long = "max-iter", default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
}

impl SolverArgs {
    fn options(&self) -> BaOptions {
        BaOptions {
            tol_bits: self.tol,
            max_iter: self.max_iter,
            initial_prior: None,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("results serialize");
    s.push('\n');
    s
}

fn load_channel(args: &ChannelArgs, solver: &SolverArgs) -> Result<(KrausChannel, DetectionConfig)> {
    let spec = parse_channel_spec(&read(&args.channel)?)?;
    let channel = spec.build()?;
    let d = channel.dim();
    let config = match args.bases.as_deref() {
        Some("pauli") => DetectionConfig::pauli(),
        Some("weyl") => DetectionConfig::weyl(d)?,
        Some(other) => match other.strip_prefix("custom:") {
            Some(path) => DetectionConfig::new(parse_custom_bases(&read(Path::new(path))?)?)?,
            None => return Err(Error::param("bases", format!("expected pauli, weyl or custom:<path>, got `{other}`"))),
        },
        None if d == 2 => DetectionConfig::pauli(),
        None if is_prime(d) => DetectionConfig::weyl(d)?,
        None => {
            return Err(Error::param(
                "bases",
                format!("no default family in composite dimension {d}; pass --bases custom:<path>"),
            ))
        }
    };
    Ok((channel, config.with_tolerance(solver.tol, solver.max_iter)))
}

#[derive(Serialize)]
struct CpVerdict<'a> {
    kind: &'a str,
    dim: usize,
    cptp: bool,
    trace_deviation: f64,
    min_choi_eigenvalue: f64,
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Bound { channel, solver, out } => {
            let (ch, config) = load_channel(&channel, &solver)?;
            emit(&json(&detect_capacity(&ch, &config)?), out.as_deref())?;
        }
        Command::Ba { matrix, solver, out } => {
            let t = parse_transition_csv(&read(&matrix)?)?;
            emit(&json(&blahut_arimoto(&t, &solver.options())?), out.as_deref())?;
        }
        Command::Binary { eps0, eps1 } => {
            emit(&json(&binary_capacity(eps0, eps1)?), None)?;
        }
        Command::Simulate {
            channel,
            solver,
            shots,
            seed,
            resamples,
            counts,
            out,
        } => {
            let (ch, config) = load_channel(&channel, &solver)?;
            let est = detect_from_samples(&ch, &config, shots, seed, resamples)?;
            if let Some(path) = counts {
                emit(&shot_records_csv(&sample_bases(&ch, &config, shots, seed)?), Some(&path))?;
            }
            emit(&json(&est), out.as_deref())?;
        }
        Command::CheckCp { channel } => {
            let spec: ChannelSpec = parse_channel_spec_unvalidated(&read(&channel)?)?;
            let ch = spec.build_unchecked()?;
            let report = is_cptp(&ch, CPTP_TOL);
            emit(
                &json(&CpVerdict {
                    kind: spec.kind(),
                    dim: ch.dim(),
                    cptp: report.cptp,
                    trace_deviation: report.trace_deviation,
                    min_choi_eigenvalue: report.min_choi_eigenvalue,
                }),
                None,
            )?;
            if !report.cptp {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Figure {
            name,
            grids,
            format,
            out,
        } => {
            let figure: Figure = name.parse()?;
            let format: OutputFormat = format.parse()?;
            let grids = grids.iter().map(|g| g.parse()).collect::<Result<Vec<Grid>>>()?;
            let table = reproduce_figure(figure, &grids)?;
            let text = match format {
                OutputFormat::Csv => table.to_csv(),
                OutputFormat::Json => table.to_json(),
            };
            emit(&text, out.as_deref())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("CAPDETECT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // an already-initialized pool is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
