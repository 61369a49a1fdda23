use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use diskpoly::closed_forms::{delta_area, DeltaProfile, RingProfile};
use diskpoly::duality::dual;
use diskpoly::verification::{
    local_search, local_search_min_area, perimeter_probe, run_suite, Objective, SearchConfig,
    SuiteConfig,
};
use diskpoly::{DiskPolygon, MeasureReport, Point, Tolerance};
use serde::{Deserialize, Serialize};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "diskpoly",
    version,
    about = "Measure, dualize and verify disk-polygons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct Output {
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(clap::Args)]
struct Input {
    /// JSON file with `{"centers": [[x, y], ...]}`; `-` reads stdin.
    #[arg(long)]
    centers: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Metric report of the disk-polygon generated by a center set.
    Measure {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Dual center set and the reports of both polygons.
    Dual {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Closed-form profile over a grid of d values.
    Forms {
        #[arg(long, default_value_t = 1.0)]
        d_min: f64,
        #[arg(long, default_value_t = 1.7)]
        d_max: f64,
        /// Number of grid points.
        #[arg(long, default_value_t = 8)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run every applicable check on random instances; exits 1 on any failure.
    Verify {
        #[arg(long)]
        d: f64,
        /// Largest number of centers per instance.
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write one JSON line per check result here.
        #[arg(long)]
        results: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Multi-start area minimization at parameter d. CSV output is the trace.
    Search {
        #[arg(long)]
        d: f64,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        restarts: usize,
        /// Steps per restart.
        #[arg(long, default_value_t = 2000)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Perimeter minimization compared against the conjectured bound.
    Probe {
        #[arg(long)]
        d: f64,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for one center-set JSON file per flagged instance.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug)]
enum CliError {
    Core(diskpoly::Error),
    Io(String),
    Input(String),
    Usage(String),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io(_) => "io",
            CliError::Input(_) => "invalid_input",
            CliError::Usage(_) => "usage",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(m) | CliError::Input(m) | CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<diskpoly::Error> for CliError {
    fn from(e: diskpoly::Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Deserialize)]
#[serde(untagged)]
enum CenterFile {
    Wrapped { centers: Vec<Point> },
    Bare(Vec<Point>),
}

#[derive(Serialize)]
struct CenterSet<'a> {
    centers: &'a [Point],
}

fn read_centers(path: &Path) -> CliResult<Vec<Point>> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    match serde_json::from_str(&text) {
        Ok(CenterFile::Wrapped { centers }) | Ok(CenterFile::Bare(centers)) => Ok(centers),
        Err(e) => Err(CliError::Input(format!("{}: {e}", path.display()))),
    }
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

fn pretty(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output always serializes");
    s.push('\n');
    s
}

fn json_only(format: Format, command: &str) -> CliResult<()> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(CliError::Usage(format!("{command} has no CSV output"))),
    }
}

fn measure_json(poly: &DiskPolygon, tol: &Tolerance) -> CliResult<serde_json::Value> {
    Ok(json!({
        "centers": poly.centers(),
        "center_parameter": poly.center_parameter(),
        "surviving_parameter": poly.surviving_parameter(),
        "vertices": poly.vertices(),
        "report": MeasureReport::of(poly, tol)?,
    }))
}

fn grid(lo: f64, hi: f64, steps: usize) -> CliResult<Vec<f64>> {
    if steps == 0 || !lo.is_finite() || !hi.is_finite() || lo > hi {
        return Err(CliError::Usage(
            "need d-min <= d-max and at least one step".into(),
        ));
    }
    if steps == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..steps)
        .map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64)
        .collect())
}

fn forms(lo: f64, hi: f64, steps: usize, format: Format) -> CliResult<String> {
    let ds = grid(lo, hi, steps)?;
    if hi < 1.0 {
        let rows = ds
            .iter()
            .map(|&d| RingProfile::at(d))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(match format {
            Format::Json => pretty(&rows),
            Format::Csv => csv(
                RingProfile::CSV_HEADER,
                rows.iter().map(RingProfile::csv_row),
            ),
        })
    } else if lo >= 1.0 {
        let rows = ds
            .iter()
            .map(|&d| DeltaProfile::at(d))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(match format {
            Format::Json => pretty(&rows),
            Format::Csv => csv(
                DeltaProfile::CSV_HEADER,
                rows.iter().map(DeltaProfile::csv_row),
            ),
        })
    } else {
        Err(CliError::Usage(
            "the grid must lie entirely below 1 or entirely at or above 1".into(),
        ))
    }
}

fn csv(header: &str, rows: impl Iterator<Item = String>) -> String {
    let mut s = format!("{header}\n");
    for row in rows {
        s.push_str(&row);
        s.push('\n');
    }
    s
}

fn search_config(d: f64, n: usize, restarts: usize, steps: usize, seed: u64) -> SearchConfig {
    SearchConfig {
        d,
        n_centers: n,
        restarts,
        steps,
        seed,
        ..SearchConfig::default()
    }
}

/// Runs a subcommand; `Ok(false)` means it completed but checks failed.
fn run(cli: Cli) -> CliResult<bool> {
    let tol = Tolerance::default();
    match cli.command {
        Command::Measure { input, output } => {
            json_only(output.format, "measure")?;
            let poly = DiskPolygon::build(&read_centers(&input.centers)?, &tol)?;
            emit(output.out.as_deref(), &pretty(&measure_json(&poly, &tol)?))?;
        }
        Command::Dual { input, output } => {
            json_only(output.format, "dual")?;
            let poly = DiskPolygon::build(&read_centers(&input.centers)?, &tol)?;
            let star = dual(&poly, &tol)?;
            let value = json!({
                "dual_centers": star.centers(),
                "primal": measure_json(&poly, &tol)?,
                "dual": measure_json(&star, &tol)?,
            });
            emit(output.out.as_deref(), &pretty(&value))?;
        }
        Command::Forms {
            d_min,
            d_max,
            steps,
            out,
            format,
        } => emit(out.as_deref(), &forms(d_min, d_max, steps, format)?)?,
        Command::Verify {
            d,
            n,
            instances,
            seed,
            results,
            output,
        } => {
            json_only(output.format, "verify")?;
            let cfg = SuiteConfig {
                d,
                instances,
                seed,
                max_centers: n,
            };
            let report = run_suite(&cfg, &tol)?;
            if let Some(path) = results {
                fs::write(&path, report.to_json_lines())
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            }
            let value = json!({
                "d": d,
                "instances": instances,
                "seed": seed,
                "all_passed": report.all_passed(),
                "summary": report.summary_json(),
            });
            emit(output.out.as_deref(), &pretty(&value))?;
            return Ok(report.all_passed());
        }
        Command::Search {
            d,
            n,
            restarts,
            steps,
            seed,
            output,
        } => {
            let cfg = search_config(d, n, restarts, steps, seed);
            let outcome = if d >= 1.0 {
                local_search_min_area(&cfg, &tol)?
            } else {
                local_search(&cfg, Objective::Area, &tol)?
            };
            let text = match output.format {
                Format::Csv => csv(
                    "restart,step,area",
                    outcome
                        .trace
                        .iter()
                        .map(|t| format!("{},{},{:.15}", t.restart, t.step, t.value)),
                ),
                Format::Json => pretty(&json!({
                    "d": d,
                    "best_area": outcome.best_value,
                    "floor": delta_area(d).ok(),
                    "best_centers": outcome.best_centers,
                    "restarts": outcome.restarts,
                })),
            };
            emit(output.out.as_deref(), &text)?;
        }
        Command::Probe {
            d,
            n,
            restarts,
            steps,
            seed,
            dump_dir,
            output,
        } => {
            json_only(output.format, "probe")?;
            let report = perimeter_probe(d, &search_config(d, n, restarts, steps, seed), &tol)?;
            if let Some(dir) = dump_dir {
                fs::create_dir_all(&dir)
                    .map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
                for c in &report.counterexamples {
                    let path = dir.join(format!("{}.json", c.digest));
                    fs::write(
                        &path,
                        pretty(&CenterSet {
                            centers: &c.centers,
                        }),
                    )
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                }
            }
            emit(output.out.as_deref(), &pretty(&report))?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let body = json!({ "error": { "code": e.code(), "message": e.to_string() } });
            eprintln!("{body}");
            ExitCode::from(2)
        }
    }
}
