//! Command-line front end: sweeps, fringe scans, Ramsey numbers and
//! regime thresholds written as CSV or JSON.
//!
//! Exit codes: 0 success, 1 invalid arguments, 2 unwritable output,
//! 3 invalid Bloch vector, 4 `|α|²` above 100.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;

use crate::duality::{balanced_report_with, duality_report, RegimeThresholds};
use crate::error::Error;
use crate::interferometer::{build_initial, scan_fringes, OverlapProbe, ParticleState};
use crate::ramsey::{ramsey_report, RamseyConfig};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot write {path}: {source}")]
    Unwritable {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Invalid(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Unwritable { .. } => 2,
            CliError::Invalid(Error::BlochNorm(_)) => 3,
            CliError::Invalid(Error::AlphaTooLarge(_)) => 4,
            CliError::Invalid(_) => 1,
        }
    }
}

/// Output destination; `-` is standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OutTarget {
    Stdout,
    File(PathBuf),
}

impl OutTarget {
    pub fn parse(s: &str) -> Self {
        if s == "-" {
            OutTarget::Stdout
        } else {
            OutTarget::File(PathBuf::from(s))
        }
    }

    pub fn write(&self, contents: &str) -> Result<(), CliError> {
        match self {
            OutTarget::Stdout => {
                let mut out = std::io::stdout().lock();
                out.write_all(contents.as_bytes())
                    .and_then(|_| out.flush())
                    .map_err(|source| CliError::Unwritable {
                        path: "-".into(),
                        source,
                    })
            }
            OutTarget::File(p) => {
                std::fs::write(p, contents).map_err(|source| CliError::Unwritable {
                    path: p.display().to_string(),
                    source,
                })
            }
        }
    }

    /// `name.csv` becomes `name.json`; other names get `.json` appended.
    /// Standard output has no sidecar.
    pub fn sidecar(&self) -> Option<OutTarget> {
        match self {
            OutTarget::Stdout => None,
            OutTarget::File(p) => Some(OutTarget::File(sidecar_path(p))),
        }
    }
}

fn sidecar_path(p: &Path) -> PathBuf {
    if p.extension().is_some_and(|e| e == "csv") {
        p.with_extension("json")
    } else {
        let mut s = p.as_os_str().to_owned();
        s.push(".json");
        PathBuf::from(s)
    }
}

/// Formats `x` with 12 significant digits in plain decimal notation,
/// trailing zeros removed.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (11 - exp).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(trimmed);
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// One CSV cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(&'static str),
}

/// One row of named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub cells: Vec<Cell>,
}

/// Renders a header and rows; every row must match the header width and hold finite numbers.
pub fn render_csv(header: &[&str], rows: &[OutputRecord]) -> Result<String, Error> {
    let mut out = header.join(",");
    out.push('\n');
    for (i, row) in rows.iter().enumerate() {
        if row.cells.len() != header.len() {
            return Err(Error::BadDims(format!(
                "row {i} has {} cells for {} columns",
                row.cells.len(),
                header.len()
            )));
        }
        for (j, cell) in row.cells.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            match *cell {
                Cell::Num(x) if !x.is_finite() => {
                    return Err(Error::OutOfRange(format!("non-finite value in row {i}")))
                }
                Cell::Num(x) => out.push_str(&format_sig12(x)),
                Cell::Text(t) => out.push_str(t),
            }
        }
        out.push('\n');
    }
    Ok(out)
}

fn render_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain struct serializes");
    s.push('\n');
    s
}

/// Grid of distinguishabilities for a probe-characteristics sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub d_min: f64,
    pub d_max: f64,
    pub steps: usize,
    pub p0: f64,
}

impl SweepSpec {
    pub fn new(d_min: f64, d_max: f64, steps: usize, p0: f64) -> Result<Self, Error> {
        let unit = |x: f64| (0.0..=1.0).contains(&x);
        if !unit(d_min) || !unit(d_max) || d_min >= d_max {
            return Err(Error::OutOfRange(format!(
                "need 0 <= d-min < d-max <= 1, got {d_min}, {d_max}"
            )));
        }
        if steps < 2 {
            return Err(Error::OutOfRange(format!("steps = {steps} < 2")));
        }
        if !unit(p0) {
            return Err(Error::OutOfRange(format!("p0 = {p0}")));
        }
        Ok(Self {
            d_min,
            d_max,
            steps,
            p0,
        })
    }

    pub fn grid(&self) -> Vec<f64> {
        let h = (self.d_max - self.d_min) / (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.d_max
                } else {
                    self.d_min + h * i as f64
                }
            })
            .collect()
    }
}

pub const SWEEP_HEADER: [&str; 6] = ["D", "P_probe", "V_probe", "C", "V_particle", "regime"];
pub const FRINGE_HEADER: [&str; 2] = ["phi", "intensity"];

/// Rows of the probe-characteristics sweep for `u₀ = (p0, 0, √(1-p0²))`, ascending in `D`.
pub fn sweep_rows(spec: &SweepSpec) -> Result<Vec<OutputRecord>, Error> {
    spec.grid()
        .into_iter()
        .map(|d| {
            let r = balanced_report_with(spec.p0, d)?;
            Ok(OutputRecord {
                cells: vec![
                    Cell::Num(d),
                    Cell::Num(r.probe_predictability),
                    Cell::Num(r.probe_visibility),
                    Cell::Num(r.concurrence),
                    Cell::Num(r.visibility_particle),
                    Cell::Text(r.regime.as_str()),
                ],
            })
        })
        .collect()
}

pub fn cmd_sweep(spec: &SweepSpec, out: &OutTarget) -> Result<(), CliError> {
    let csv = render_csv(&SWEEP_HEADER, &sweep_rows(spec)?)?;
    out.write(&csv)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FringeSummary {
    pub visibility: f64,
    pub predictability: f64,
    pub concurrence: f64,
}

/// Fringe table and its summary.
pub fn fringe_output(
    particle: &ParticleState,
    gamma: Complex64,
    n: usize,
) -> Result<(String, FringeSummary), Error> {
    let probe = OverlapProbe::new(gamma)?;
    let model = probe.to_probe_model();
    let scan = scan_fringes(&build_initial(particle, &model), &model, n)?;
    let rows: Vec<OutputRecord> = scan
        .phis
        .iter()
        .zip(&scan.intensities)
        .map(|(&phi, &i)| OutputRecord {
            cells: vec![Cell::Num(phi), Cell::Num(i)],
        })
        .collect();
    let report = duality_report(particle, probe)?;
    let summary = FringeSummary {
        visibility: scan.visibility,
        predictability: report.predictability_particle,
        concurrence: report.concurrence,
    };
    Ok((render_csv(&FRINGE_HEADER, &rows)?, summary))
}

pub fn cmd_fringe(
    bloch: [f64; 3],
    gamma: Complex64,
    n: usize,
    out: &OutTarget,
    sidecar: Option<&OutTarget>,
) -> Result<(), CliError> {
    let particle = ParticleState::new(bloch[0], bloch[1], bloch[2])?;
    let (csv, summary) = fringe_output(&particle, gamma, n)?;
    out.write(&csv)?;
    if let Some(side) = sidecar.cloned().or_else(|| out.sidecar()) {
        side.write(&render_json(&summary))?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RamseyRecord {
    pub alpha2: f64,
    pub cutoff: usize,
    pub t_i: f64,
    /// `⟨α₋|α₊⟩`; real for a real amplitude.
    pub overlap: f64,
    #[serde(rename = "D")]
    pub d: f64,
    #[serde(rename = "P_probe")]
    pub p_probe: f64,
    #[serde(rename = "V_probe")]
    pub v_probe: f64,
    #[serde(rename = "C")]
    pub c: f64,
    pub identity_residual: f64,
}

pub fn ramsey_record(alpha2: f64, rabi: f64) -> Result<RamseyRecord, Error> {
    let cfg = RamseyConfig::from_alpha2(alpha2, rabi)?;
    let r = ramsey_report(&cfg)?;
    Ok(RamseyRecord {
        alpha2,
        cutoff: r.cutoff,
        t_i: r.t_i,
        overlap: r.overlap.re,
        d: r.distinguishability,
        p_probe: r.probe_predictability,
        v_probe: r.probe_visibility,
        c: r.concurrence,
        identity_residual: r.identity_residual(),
    })
}

pub fn cmd_ramsey(alpha2: f64, rabi: f64, out: &OutTarget) -> Result<(), CliError> {
    out.write(&render_json(&ramsey_record(alpha2, rabi)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdRecord {
    pub good_cut: f64,
    pub bad_cut: f64,
    pub classical_cut: f64,
    pub delta_v: f64,
}

pub fn threshold_record() -> ThresholdRecord {
    let t = RegimeThresholds::compute();
    ThresholdRecord {
        good_cut: t.good_cut,
        bad_cut: t.bad_cut,
        classical_cut: t.classical_cut,
        delta_v: t.delta_v(),
    }
}

pub fn cmd_thresholds(out: &OutTarget) -> Result<(), CliError> {
    out.write(&render_json(&threshold_record()))
}

#[derive(Debug, Parser)]
#[command(
    name = "mz-duality",
    version,
    about = "Which-way complementarity in a Mach-Zehnder interferometer"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutArg {
    /// Output file, or `-` for standard output.
    #[arg(long)]
    pub out: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Probe characteristics as a function of the distinguishability D (CSV).
    Sweep {
        #[arg(long, default_value_t = 0.0)]
        d_min: f64,
        #[arg(long, default_value_t = 1.0)]
        d_max: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long, default_value_t = 0.0)]
        p0: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Detector intensity versus phase (CSV) plus a JSON summary sidecar.
    Fringe {
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        x0: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        y0: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        z0: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        gamma_re: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        gamma_im: f64,
        #[arg(long, default_value_t = 360)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
        /// Summary path; defaults to the output path with a `.json` extension.
        #[arg(long)]
        sidecar: Option<String>,
    },
    /// Ramsey-zone pulse time and probe quantities for a coherent field (JSON).
    Ramsey {
        #[arg(long)]
        alpha2: f64,
        #[arg(long, default_value_t = 1.0)]
        rabi: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Regime cut points in D (JSON).
    Thresholds {
        #[command(flatten)]
        out: OutArg,
    },
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep {
            d_min,
            d_max,
            steps,
            p0,
            out,
        } => cmd_sweep(
            &SweepSpec::new(d_min, d_max, steps, p0)?,
            &OutTarget::parse(&out.out),
        ),
        Command::Fringe {
            x0,
            y0,
            z0,
            gamma_re,
            gamma_im,
            n,
            out,
            sidecar,
        } => {
            let sidecar = sidecar.as_deref().map(OutTarget::parse);
            cmd_fringe(
                [x0, y0, z0],
                Complex64::new(gamma_re, gamma_im),
                n,
                &OutTarget::parse(&out.out),
                sidecar.as_ref(),
            )
        }
        Command::Ramsey { alpha2, rabi, out } => {
            cmd_ramsey(alpha2, rabi, &OutTarget::parse(&out.out))
        }
        Command::Thresholds { out } => cmd_thresholds(&OutTarget::parse(&out.out)),
    }
}

/// Parses the process arguments, runs the command and returns the exit code.
pub fn main_exit_code() -> i32 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("mz-duality: {e}");
            e.exit_code()
        }
    }
}
