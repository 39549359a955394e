//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad
//! input.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use leonard_core::error::Error as CoreError;
use leonard_core::field::Field;
use leonard_core::leonard::{
    build_split_model, candidate_report, d4_orbit, primitive_idempotents, verify_leonard_system, LeonardModel,
};
use leonard_core::report::{Check, VerificationReport};
use leonard_core::suite::{verify_model, Scope};
use leonard_core::units::delta_unit_left;
use rayon::prelude::*;
use serde::Serialize;

use crate::generate::{batch, field_tag, Generated};
use crate::instance::{matrix_literals, parameter_array_file, InputError, Instance, InstanceFile};
use crate::report;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "leonard", version, about = "Exact verification of Leonard system identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the model and run every check on it and on its relatives.
    Verify {
        file: PathBuf,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print the parameter array, including the second split sequence.
    Extract { file: PathBuf },
    /// Print the eight relatives and whether each rebuilds.
    Orbit {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the matrix unit with indices (i, j).
    Units {
        file: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Generate random instances over the rationals and GF(modulus) and
    /// verify them all.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        #[arg(long, default_value_t = 10007)]
        modulus: u64,
    },
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match cli.command {
        Command::Verify { file, report, format } => cmd_verify(&file, report.as_deref(), format, out),
        Command::Extract { file } => cmd_extract(&file, out),
        Command::Orbit { file, format } => cmd_orbit(&file, format, out),
        Command::Units { file, i, j } => cmd_units(&file, i, j, out),
        Command::Selftest { seed, trials, dmax, modulus } => cmd_selftest(seed, trials, dmax, modulus, out, err),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Verdict(e)) => {
            let _ = writeln!(err, "{e}");
            EXIT_FAIL
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Verdict(CoreError),
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Input(InputError::Core(e))
    }
}

fn instance_name(path: &Path) -> String {
    path.display().to_string()
}

/// Errors that mean the instance is well formed but mathematically fails.
fn is_verdict(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::NotLeonardSystem(_)
            | CoreError::NotMultiplicityFree(_)
            | CoreError::NotSplit(_)
            | CoreError::Inconsistent(_)
            | CoreError::Antiautomorphism(_)
    )
}

/// The report for an instance whose model cannot be built: every
/// tridiagonality check when the idempotents exist, then the construction
/// error itself.
fn rejection_report(name: &str, instance: &Instance, error: &CoreError) -> VerificationReport {
    let mut rep = match instance {
        Instance::ParameterArray(pa) => candidate_report(pa).unwrap_or_else(|_| VerificationReport::new(name)),
        Instance::RawPair(raw) => {
            let mut rep = VerificationReport::new(name);
            if let (Ok(e), Ok(es)) =
                (primitive_idempotents(&raw.a, &raw.theta), primitive_idempotents(&raw.a_star, &raw.theta_star))
            {
                rep.extend(verify_leonard_system(&raw.a, &e, &raw.a_star, &es));
            }
            rep
        }
    };
    rep.instance = name.to_string();
    rep.push(Check::fail("construction", error.to_string()));
    rep
}

/// Verification of one instance: the full suite over all relatives, or the
/// rejection report.
pub fn verify_instance(name: &str, instance: &Instance) -> Result<VerificationReport, InputError> {
    match instance.model() {
        Ok(model) => Ok(verify_model(&model, name, Scope::Orbit)?),
        Err(e) if is_verdict(&e) => Ok(rejection_report(name, instance, &e)),
        Err(e) => Err(e.into()),
    }
}

fn emit(out: &mut dyn Write, text: &str) {
    let _ = out.write_all(text.as_bytes());
}

fn cmd_verify(path: &Path, report_path: Option<&Path>, format: Format, out: &mut dyn Write) -> Result<u8, CliError> {
    let instance = Instance::load(path)?;
    let rep = verify_instance(&instance_name(path), &instance)?;
    let json = report::to_json(&rep);
    if let Some(target) = report_path {
        std::fs::write(target, &json)
            .map_err(|source| CliError::Write { path: target.display().to_string(), source })?;
    }
    match format {
        Format::Json => emit(out, &json),
        Format::Text => emit(out, &report::to_text(&rep)),
    }
    Ok(if rep.all_passed() { EXIT_PASS } else { EXIT_FAIL })
}

fn load_model(path: &Path) -> Result<LeonardModel, CliError> {
    let instance = Instance::load(path)?;
    instance.model().map_err(|e| if is_verdict(&e) { CliError::Verdict(e) } else { e.into() })
}

fn cmd_extract(path: &Path, out: &mut dyn Write) -> Result<u8, CliError> {
    let model = load_model(path)?;
    let file = parameter_array_file(model.parameter_array());
    emit(out, &(serde_json::to_string_pretty(&file).expect("instance files serialize") + "\n"));
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct OrbitRow {
    relative: String,
    parameter_array: InstanceFile,
    status: report::Status,
}

#[derive(Serialize)]
struct OrbitFile {
    instance: String,
    members: Vec<OrbitRow>,
}

fn cmd_orbit(path: &Path, format: Format, out: &mut dyn Write) -> Result<u8, CliError> {
    let model = load_model(path)?;
    let mut rows = Vec::with_capacity(8);
    for (g, member) in d4_orbit(model.parameter_array())? {
        let rebuilt = build_split_model(&member.without_phi());
        let ok = rebuilt.map(|m| m.parameter_array() == &member).unwrap_or(false);
        rows.push(OrbitRow {
            relative: g.name(),
            parameter_array: parameter_array_file(&member),
            status: if ok { report::Status::Pass } else { report::Status::Fail },
        });
    }
    let all_ok = rows.iter().all(|r| r.status == report::Status::Pass);
    match format {
        Format::Json => {
            let file = OrbitFile { instance: instance_name(path), members: rows };
            emit(out, &(serde_json::to_string_pretty(&file).expect("orbit serializes") + "\n"));
        }
        Format::Text => emit(out, &orbit_table(&rows)),
    }
    Ok(if all_ok { EXIT_PASS } else { EXIT_FAIL })
}

fn orbit_table(rows: &[OrbitRow]) -> String {
    let list = |xs: &[String]| format!("({})", xs.join(", "));
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            let pa = &r.parameter_array;
            [
                r.relative.clone(),
                list(&pa.theta),
                list(&pa.theta_star),
                list(pa.varphi.as_deref().unwrap_or_default()),
                list(pa.phi.as_deref().unwrap_or_default()),
                if r.status == report::Status::Pass { "pass".into() } else { "FAIL".into() },
            ]
        })
        .collect();
    let header = ["relative", "theta", "theta_star", "varphi", "phi", "status"].map(String::from);
    let mut widths = header.clone().map(|h| h.chars().count());
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut text = String::new();
    for row in std::iter::once(&header).chain(&cells) {
        let line: Vec<String> =
            row.iter().zip(widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        writeln!(text, "{}", line.join("  ").trim_end()).unwrap();
    }
    text
}

#[derive(Serialize)]
struct UnitFile {
    i: usize,
    j: usize,
    matrix: Vec<Vec<String>>,
}

fn cmd_units(path: &Path, i: usize, j: usize, out: &mut dyn Write) -> Result<u8, CliError> {
    let model = load_model(path)?;
    let d = model.d();
    if i > d || j > d {
        return Err(CliError::Usage(format!("indices ({i}, {j}) out of range 0..={d}")));
    }
    let unit = delta_unit_left(&model, i, j)?;
    let file = UnitFile { i, j, matrix: matrix_literals(&unit) };
    emit(out, &(serde_json::to_string_pretty(&file).expect("units serialize") + "\n"));
    Ok(EXIT_PASS)
}

struct Outcome {
    generated: Generated,
    report: Result<VerificationReport, String>,
}

impl Outcome {
    fn passed(&self) -> bool {
        matches!(&self.report, Ok(r) if r.all_passed())
    }
}

fn run_generated(g: Generated) -> Outcome {
    let report =
        LeonardModel::from_raw(&g.raw).and_then(|m| verify_model(&m, &g.name, Scope::Orbit)).map_err(|e| e.to_string());
    Outcome { generated: g, report }
}

fn cmd_selftest(
    seed: u64,
    trials: usize,
    dmax: usize,
    modulus: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, CliError> {
    let prime = Field::prime(modulus)?;
    prime.check_degree(dmax)?;
    let mut failures = 0;
    for field in [Field::Rational, prime] {
        let outcomes: Vec<Outcome> = batch(seed, field, dmax, trials).into_par_iter().map(run_generated).collect();
        for d in 0..=dmax {
            let group = &outcomes[d * trials..(d + 1) * trials];
            let passed = group.iter().filter(|o| o.passed()).count();
            let checks: usize = group.iter().filter_map(|o| o.report.as_ref().ok()).map(|r| r.checks.len()).sum();
            let _ = writeln!(out, "{} d={d}: {passed}/{trials} instances passed ({checks} checks)", field_tag(field));
        }
        for o in outcomes.iter().filter(|o| !o.passed()) {
            failures += 1;
            let _ = writeln!(err, "FAILED {}", o.generated.name);
            match &o.report {
                Ok(r) => {
                    for c in r.failures() {
                        let _ = writeln!(err, "  {}: {}", c.id, c.witness.as_deref().unwrap_or(""));
                    }
                }
                Err(e) => {
                    let _ = writeln!(err, "  construction: {e}");
                }
            }
            let _ = writeln!(err, "{}", Instance::RawPair(o.generated.raw.clone()).to_json());
        }
    }
    let total = 2 * (dmax + 1) * trials;
    let _ = writeln!(out, "selftest seed={seed}: {}/{total} instances passed", total - failures);
    Ok(if failures == 0 { EXIT_PASS } else { EXIT_FAIL })
}
