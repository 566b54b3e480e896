//! Command-line front end. Every verdict printed here is produced by the
//! library API with the same tolerances; the CLI only parses inputs, wires
//! seeds and budgets, and renders JSON (floats at 17 significant digits) and
//! SVG output.

mod svg;

use clap::{Args, Parser, Subcommand};
use mgeo_core::basis::{basis_report, Basis};
use mgeo_core::bounds::bounds_survey;
use mgeo_core::convexity::{modulus_profile, strict_convexity_probe};
use mgeo_core::jsonfmt;
use mgeo_core::orthogonality::{classify, Relation};
use mgeo_core::planar::{exhaustive_pair_scan, find_conjugate_diameters, is_radon};
use mgeo_core::spaces::{
    builtin_space, space_from_path, validate_norm, NormedSpace, SpaceFile, Vector,
};
use mgeo_core::{Error, Tolerances};
use serde_json::json;
use std::path::{Path, PathBuf};

/// Exit code for successful computation (regardless of verdict).
pub const EXIT_OK: i32 = 0;
/// Exit code when the space fails to load or is not a norm.
pub const EXIT_SPACE_INVALID: i32 = 1;
/// Exit code for usage errors (bad flags, unparsable vectors, dimension mismatch).
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "mgeo",
    version,
    about = "Geometry of finite-dimensional real normed spaces: Birkhoff-James orthogonality, strict convexity, strongly orthonormal bases, conjugate diameters"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Space: builtin name (l1, l2, linf, lp:P[,dim=D], stadium,
    /// quartic_cubic) or path to a JSON space-definition file.
    #[arg(long)]
    pub space: String,
    /// Value tolerance override.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Argument (minimizer location) tolerance override.
    #[arg(long)]
    pub arg_tol: Option<f64>,
    /// Seed for all sampling; fixed seed means byte-identical output.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write the JSON output to this path.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a pair: not orthogonal / Birkhoff-only / strongly Birkhoff.
    CheckOrth {
        #[command(flatten)]
        common: Common,
        /// Comma-separated coordinates, e.g. "1,1".
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Strong-orthogonality detail: flat interval, width, and both verdicts.
    StrongCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Basis report: max coefficients plus both strong-orthonormality routes.
    Basis {
        #[command(flatten)]
        common: Common,
        /// Use the standard coordinate basis.
        #[arg(long, conflicts_with = "vectors")]
        standard: bool,
        /// Semicolon-separated basis vectors, e.g. "1,0;0,1".
        #[arg(long, allow_hyphen_values = true)]
        vectors: Option<String>,
    },
    /// Survey B-orthogonal pairs and report both bound minima per pair.
    Bounds {
        #[command(flatten)]
        common: Common,
        /// Number of surveyed pairs (uniform angle grid).
        #[arg(long, default_value_t = 720)]
        pairs: usize,
        /// Write per-pair records as JSON lines to this path.
        #[arg(long)]
        records: Option<PathBuf>,
    },
    /// Find conjugate diameter pairs.
    Conjugate {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 720)]
        grid: usize,
    },
    /// Test whether the unit sphere is a Radon curve.
    Radon {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 720)]
        grid: usize,
    },
    /// Scan angle pairs for mutual and strong orthogonality.
    ScanPairs {
        #[command(flatten)]
        common: Common,
        /// Angular resolution in degrees (at most 1).
        #[arg(long, default_value_t = 0.25)]
        resolution: f64,
    },
    /// Render the unit sphere as SVG, with optional overlays.
    Sphere {
        #[command(flatten)]
        common: Common,
        /// Output SVG path.
        #[arg(long)]
        svg: PathBuf,
        /// Comma-separated overlays: conjugate, flats, companion.
        #[arg(long)]
        overlay: Option<String>,
        /// Base vector for the companion overlay, e.g. "1,0".
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Consolidated report: norm axioms, convexity, modulus, bounds, planar.
    Report {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 720)]
        pairs: usize,
    },
}

/// Parses args from the process environment, runs, prints, returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message; exit 2 on usage, 0 on --help/--version
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let (code, output) = execute(cli);
    if !output.is_empty() {
        println!("{output}");
    }
    code
}

/// Runs a parsed command; returns `(exit_code, stdout_payload)`. Split out
/// from [`run`] so tests can check byte-level determinism without spawning.
pub fn execute(cli: Cli) -> (i32, String) {
    match dispatch(cli.command) {
        Ok(output) => (EXIT_OK, output),
        Err(e) => (e.code, format!("error: {}", e.message)),
    }
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
    fn space(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_SPACE_INVALID,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DimensionMismatch { .. }
            | Error::EmptyVector
            | Error::NonFinite
            | Error::ZeroVector
            | Error::IndexOutOfRange { .. }
            | Error::NotAUnitVector { .. }
            | Error::DependentBasis { .. }
            | Error::NotBirkhoffOrthogonal { .. }
            | Error::SegmentNotOnSphere { .. }
            | Error::InvalidParameter(_) => EXIT_USAGE,
            _ => EXIT_SPACE_INVALID,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn load_space(spec: &str) -> Result<SpaceFile, CliError> {
    let path = Path::new(spec);
    if path.exists() && path.is_file() {
        return space_from_path(path).map_err(|e| CliError::space(e.to_string()));
    }
    builtin_space(spec)
        .map(|space| SpaceFile { space, basis: None })
        .map_err(|e| CliError::space(e.to_string()))
}

fn parse_vector(text: &str) -> Result<Vector, CliError> {
    let coords: Result<Vec<f64>, _> = text.split(',').map(|t| t.trim().parse::<f64>()).collect();
    let coords = coords.map_err(|_| CliError::usage(format!("cannot parse vector {text:?}")))?;
    Vector::new(coords).map_err(|e| CliError::usage(e.to_string()))
}

fn parse_vectors(text: &str) -> Result<Vec<Vector>, CliError> {
    text.split(';').map(parse_vector).collect()
}

fn tolerances(common: &Common) -> Tolerances {
    let mut t = Tolerances::default();
    if let Some(v) = common.tol {
        t.value = v;
        t.flat = v;
    }
    if let Some(a) = common.arg_tol {
        t.arg = a;
    }
    t
}

fn budget() -> usize {
    std::env::var("MGEO_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(200_000)
}

fn emit(common: &Common, value: &serde_json::Value) -> Result<String, CliError> {
    let text = jsonfmt::to_string_17(value)
        .map_err(|e| CliError::space(format!("serialization failed: {e}")))?;
    if let Some(path) = &common.json {
        std::fs::write(path, &text)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(text)
}

fn check_vectors_dim(space: &NormedSpace, vs: &[&Vector]) -> Result<(), CliError> {
    for v in vs {
        if v.dim() != space.dim() {
            return Err(CliError::usage(format!(
                "vector dimension {} does not match space dimension {}",
                v.dim(),
                space.dim()
            )));
        }
    }
    Ok(())
}

fn dispatch(command: Command) -> Result<String, CliError> {
    match command {
        Command::CheckOrth { common, x, y } => {
            let space = load_space(&common.space)?.space;
            let (x, y) = (parse_vector(&x)?, parse_vector(&y)?);
            check_vectors_dim(&space, &[&x, &y])?;
            let verdict = classify(&space, &x, &y, &tolerances(&common))?;
            let value = json!({
                "space": space.label(),
                "x": x,
                "y": y,
                "relation": verdict.relation,
                "witness": verdict.witness,
                "min": verdict.min_result,
            });
            emit(&common, &value)
        }
        Command::StrongCheck { common, x, y } => {
            let space = load_space(&common.space)?.space;
            let (x, y) = (parse_vector(&x)?, parse_vector(&y)?);
            check_vectors_dim(&space, &[&x, &y])?;
            let verdict = classify(&space, &x, &y, &tolerances(&common))?;
            let value = json!({
                "space": space.label(),
                "is_birkhoff": verdict.relation != Relation::NotOrthogonal,
                "is_strongly_birkhoff": verdict.relation == Relation::StronglyBirkhoff,
                "flat_interval": verdict.min_result.flat_interval,
                "flat_width": verdict.min_result.flat_width(),
                "min": verdict.min_result,
            });
            emit(&common, &value)
        }
        Command::Basis {
            common,
            standard,
            vectors,
        } => {
            let file = load_space(&common.space)?;
            let space = file.space;
            let vecs = if let Some(text) = vectors {
                Some(parse_vectors(&text)?)
            } else if standard {
                None
            } else {
                file.basis
            };
            let basis = match vecs {
                Some(v) => Basis::new(&space, v)?,
                None if standard => Basis::standard(&space)?,
                None => {
                    return Err(CliError::usage(
                        "no basis given: pass --standard, --vectors, or a space file with \"basis\"",
                    ))
                }
            };
            let report = basis_report(&space, &basis, budget(), &tolerances(&common), common.seed)?;
            let value = json!({
                "space": space.label(),
                "report": report,
            });
            emit(&common, &value)
        }
        Command::Bounds {
            common,
            pairs,
            records,
        } => {
            let space = load_space(&common.space)?.space;
            let survey = bounds_survey(&space, pairs)?;
            if let Some(path) = &records {
                std::fs::write(path, survey.to_jsonl()).map_err(|e| {
                    CliError::usage(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            let value = json!({
                "space": survey.space,
                "pairs": survey.pairs,
                "global_segment_min": survey.global_segment_min,
                "global_line_min": survey.global_line_min,
                "floor_violations": survey.floor_violations,
            });
            emit(&common, &value)
        }
        Command::Conjugate { common, grid } => {
            let space = load_space(&common.space)?.space;
            let search = find_conjugate_diameters(&space, grid, common.tol.unwrap_or(1e-6))?;
            let value = json!({
                "space": space.label(),
                "grid_size": search.grid_size,
                "all_conjugate": search.all_conjugate,
                "count": search.pairs.len(),
                "pairs": search.pairs.iter().take(32).collect::<Vec<_>>(),
            });
            emit(&common, &value)
        }
        Command::Radon { common, grid } => {
            let space = load_space(&common.space)?.space;
            let report = is_radon(&space, grid, common.tol.unwrap_or(1e-6))?;
            let value = json!({
                "space": space.label(),
                "radon": report,
            });
            emit(&common, &value)
        }
        Command::ScanPairs { common, resolution } => {
            let space = load_space(&common.space)?.space;
            let report = exhaustive_pair_scan(&space, resolution, common.tol.unwrap_or(1e-6))?;
            let value = json!({
                "space": space.label(),
                "scan": report,
            });
            emit(&common, &value)
        }
        Command::Sphere {
            common,
            svg,
            overlay,
            x,
        } => {
            let space = load_space(&common.space)?.space;
            if space.dim() != 2 {
                return Err(CliError::usage("sphere rendering requires a 2-D space"));
            }
            let overlays: Vec<&str> = overlay
                .as_deref()
                .map(|o| o.split(',').map(str::trim).collect())
                .unwrap_or_default();
            let base = match &x {
                Some(t) => {
                    let v = parse_vector(t)?;
                    check_vectors_dim(&space, &[&v])?;
                    Some(v)
                }
                None => None,
            };
            let doc = svg::sphere_svg(&space, &overlays, base.as_ref())?;
            std::fs::write(&svg, &doc)
                .map_err(|e| CliError::usage(format!("cannot write {}: {e}", svg.display())))?;
            let value = json!({
                "space": space.label(),
                "svg": svg.display().to_string(),
                "samples": svg::SPHERE_SAMPLES,
            });
            emit(&common, &value)
        }
        Command::Report { common, pairs } => {
            let space = load_space(&common.space)?.space;
            let seed = common.seed;
            let validation = validate_norm(&space, 10_000, 1e-9, seed);
            let valid = validation.all_passed();

            let mut convexity = strict_convexity_probe(&space, 10_000, 1e-9, 0.05, seed);
            convexity.modulus_samples =
                modulus_profile(&space, &[0.5, 1.0, 1.5, 2.0], 4_000, seed)?;

            let (survey, conjugate, radon) = if space.dim() == 2 && valid {
                let survey = bounds_survey(&space, pairs)?;
                let search = find_conjugate_diameters(&space, 720, 1e-6)?;
                let radon = is_radon(&space, 720, 1e-6)?;
                (
                    Some(json!({
                        "pairs": survey.pairs,
                        "global_segment_min": survey.global_segment_min,
                        "global_line_min": survey.global_line_min,
                        "floor_violations": survey.floor_violations,
                    })),
                    Some(json!({
                        "grid_size": search.grid_size,
                        "all_conjugate": search.all_conjugate,
                        "count": search.pairs.len(),
                        "pairs": search.pairs.iter().take(32).collect::<Vec<_>>(),
                    })),
                    Some(serde_json::to_value(&radon).expect("serializable")),
                )
            } else {
                (None, None, None)
            };

            let value = json!({
                "schema": "mgeo-report/1",
                "space": space.label(),
                "seed": seed,
                "norm_validation": validation,
                "convexity": convexity,
                "bounds_survey": survey,
                "conjugate_diameters": conjugate,
                "radon": radon,
            });
            let text = emit(&common, &value)?;
            if !valid {
                return Err(CliError {
                    code: EXIT_SPACE_INVALID,
                    message: format!("norm axioms failed\n{text}"),
                });
            }
            Ok(text)
        }
    }
}
