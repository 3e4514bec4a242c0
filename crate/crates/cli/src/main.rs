//! `momap` — exact analyses of symplectic torus-action models.
//!
//! Machine-readable JSON goes to stdout (exactly one document per run,
//! including structured errors); human-readable summaries go to stderr and
//! can be silenced with `--quiet`. Exit codes: 0 success, 1 usage or
//! input/parse errors, 2 validation or consistency failures.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use momap_cli::formats::{self, LoadError};
use momap_cli::reports;
use momap_core::geometry::Polytope;
use momap_core::model::ActionModel;
use momap_core::momentum::{
    check_degree_bounds, check_effective, exact_subalgebra, generic_degree_and_kernel,
    half_dim_hamiltonian, momentum_image, rationality_degree, verify_local_global,
};
use momap_core::scalar::rational_to_string;
use momap_core::stability::{
    boundary_edges, fans_equal, reassign_edge_lengths, te_stable, EdgeLengthAssignment,
    StabilityError, TeStability,
};
use momap_core::vector;
use momap_core::weyl::{cross_section_image, weyl_chamber};

#[derive(Parser)]
#[command(
    name = "momap",
    version,
    about = "Exact momentum-image analyses of symplectic torus-action models"
)]
struct Cli {
    /// Suppress the human-readable summary on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a model document against every structural invariant.
    Validate { model: PathBuf },
    /// Effectiveness of the isotropy weights at a fixed point.
    Effective {
        model: PathBuf,
        /// Label of the fixed-point stratum to test.
        #[arg(long)]
        stratum: String,
    },
    /// Exact subalgebra, complement, rationality degrees, deck rank.
    Exact { model: PathBuf },
    /// The momentum image: polytope, free block, witnesses, deck vectors.
    Image {
        model: PathBuf,
        /// Also run the local-global containment and degree-bound checks.
        #[arg(long)]
        check: bool,
    },
    /// Half-dimensional criterion: certify the action Hamiltonian.
    Halfdim { model: PathBuf },
    /// Weyl chamber of the model's root system and the chamber
    /// cross-section of an authored polytope.
    Weyl {
        model: PathBuf,
        /// Polytope file in chamber-block + exact-block coordinates.
        #[arg(long)]
        polytope: PathBuf,
    },
    /// Compare the exact subalgebras of two perturbation-related models.
    Stability { model1: PathBuf, model2: PathBuf },
    /// Whether two polytopes have the same normal fan.
    FanCompare {
        polytope1: PathBuf,
        polytope2: PathBuf,
    },
    /// Rebuild a 2-polytope's boundary with new edge lengths.
    EdgeReassign {
        polytope: PathBuf,
        /// Comma-separated lattice lengths in boundary order, e.g. "1,2,1,2".
        #[arg(long)]
        lengths: String,
    },
}

/// A finished run: the JSON document for stdout, summary lines for stderr,
/// and the exit code.
struct Outcome {
    json: Value,
    summary: Vec<String>,
    code: u8,
}

impl Outcome {
    fn ok(json: Value, summary: Vec<String>) -> Self {
        Outcome {
            json,
            summary,
            code: 0,
        }
    }
}

/// Failure carrying the exit category: 1 = usage/input, 2 = data.
struct Failure {
    kind: &'static str,
    message: String,
    detail: Value,
    code: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            kind: "input",
            message: message.into(),
            detail: Value::Null,
            code: 1,
        }
    }

    fn data(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            kind,
            message: message.into(),
            detail: Value::Null,
            code: 2,
        }
    }

    fn with_detail(mut self, detail: Value) -> Self {
        self.detail = detail;
        self
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match &e {
            LoadError::Malformed(_) => Failure::input(e.to_string()),
            LoadError::Invalid(v) => {
                Failure::data("validation", e.to_string()).with_detail(reports::violations(v))
            }
        }
    }
}

impl From<momap_core::momentum::MomentumError> for Failure {
    fn from(e: momap_core::momentum::MomentumError) -> Self {
        use momap_core::momentum::MomentumError as E;
        let f = Failure::data("consistency", e.to_string());
        match &e {
            E::InvalidModel(v) => {
                Failure::data("validation", e.to_string()).with_detail(reports::violations(v))
            }
            _ => f,
        }
    }
}

impl From<momap_core::weyl::WeylError> for Failure {
    fn from(e: momap_core::weyl::WeylError) -> Self {
        Failure::data("consistency", e.to_string())
    }
}

impl From<momap_core::geometry::GeometryError> for Failure {
    fn from(e: momap_core::geometry::GeometryError) -> Self {
        Failure::data("geometry", e.to_string())
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn load_model(path: &Path) -> Result<ActionModel, Failure> {
    Ok(formats::load_model(&read_file(path)?, false)?)
}

fn load_polytope(path: &Path) -> Result<Polytope, Failure> {
    Ok(formats::load_polytope(&read_file(path)?)?)
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Validate { model } => {
            let parsed = formats::load_model(&read_file(&model)?, true)?;
            let violations = parsed.validate();
            let valid = violations.is_empty();
            let json = json!({
                "valid": valid,
                "violations": reports::violations(&violations),
            });
            let summary = if valid {
                vec!["model is valid".into()]
            } else {
                let mut lines = vec![format!("{} violations:", violations.len())];
                lines.extend(violations.iter().map(|v| format!("  - {v}")));
                lines
            };
            Ok(Outcome {
                json,
                summary,
                code: if valid { 0 } else { 2 },
            })
        }
        Command::Effective { model, stratum } => {
            let m = load_model(&model)?;
            let effective = check_effective(&m, &stratum)?;
            Ok(Outcome::ok(
                json!({"stratum": stratum, "effective": effective}),
                vec![format!(
                    "weights at {stratum:?} {} the dual lattice",
                    if effective {
                        "generate"
                    } else {
                        "do not generate"
                    }
                )],
            ))
        }
        Command::Exact { model } => {
            let m = load_model(&model)?;
            let sub = exact_subalgebra(&m)?;
            let generic = generic_degree_and_kernel(&m)?;
            let mut degrees = Vec::with_capacity(m.torus_dim);
            for i in 0..m.torus_dim {
                degrees.push(rationality_degree(&m, &vector::unit(m.torus_dim, i))?);
            }
            let summary = vec![
                format!("exact subalgebra has dimension {}", sub.te_dim()),
                format!(
                    "generic rationality degree (deck rank) is {}",
                    generic.degree
                ),
            ];
            Ok(Outcome::ok(
                json!({
                    "subalgebra": reports::subalgebra(&sub),
                    "rationality_degrees": degrees,
                    "generic_degree": generic.degree,
                    "deck_rank": generic.degree,
                    "period_kernel": reports::int_matrix(&generic.kernel_basis),
                }),
                summary,
            ))
        }
        Command::Image { model, check } => {
            let m = load_model(&model)?;
            let img = momentum_image(&m)?;
            let mut json = reports::momentum_image(&img);
            let mut summary = vec![format!(
                "polytope with {} vertices, free block of dimension {}",
                img.polytope.vertices().len(),
                img.image.free_dim()
            )];
            let mut code = 0;
            if check {
                let lg = verify_local_global(&m, &img)?;
                let bounds = check_degree_bounds(&m)?;
                let passed = lg.passed() && bounds.passed();
                json["checks"] = json!({
                    "passed": passed,
                    "local_global": reports::local_global(&lg),
                    "degree_bounds": reports::degree_bounds(&bounds),
                });
                summary.push(format!(
                    "checks {}",
                    if passed { "passed" } else { "FAILED" }
                ));
                for v in &lg.violations {
                    summary.push(format!("  - {v}"));
                }
                if !passed {
                    code = 2;
                }
            }
            Ok(Outcome {
                json,
                summary,
                code,
            })
        }
        Command::Halfdim { model } => {
            let m = load_model(&model)?;
            let cert = half_dim_hamiltonian(&m)?;
            Ok(Outcome::ok(
                json!({
                    "hamiltonian": true,
                    "stratum": cert.stratum,
                    "certificate": reports::rat_vec(&cert.theta),
                }),
                vec![format!(
                    "action is Hamiltonian: fixed point {:?} certifies direction {:?}",
                    cert.stratum,
                    cert.theta
                        .iter()
                        .map(rational_to_string)
                        .collect::<Vec<_>>()
                )],
            ))
        }
        Command::Weyl { model, polytope } => {
            let m = load_model(&model)?;
            let Some(rs) = m.root_system.clone() else {
                return Err(Failure::data("consistency", "model carries no root_system"));
            };
            let full = load_polytope(&polytope)?;
            let chamber = weyl_chamber(&rs)?;
            let sub = exact_subalgebra(&m)?;
            let expected = rs.rank() + sub.te_dim();
            if full.dim() != expected {
                return Err(Failure::data(
                    "consistency",
                    format!(
                        "polytope lives in dimension {}, expected chamber rank {} + exact dim {}",
                        full.dim(),
                        rs.rank(),
                        sub.te_dim()
                    ),
                ));
            }
            let cross = cross_section_image(&full, &chamber, sub.tc_dim())?;
            Ok(Outcome::ok(
                json!({
                    "chamber": reports::cone(&chamber),
                    "cross_section": reports::polyset(&cross),
                }),
                vec![format!(
                    "cross-section polytope has {} vertices, free block of dimension {}",
                    cross.polytope().vertices().len(),
                    cross.free_dim()
                )],
            ))
        }
        Command::Stability { model1, model2 } => {
            let a = load_model(&model1)?;
            let b = load_model(&model2)?;
            let verdict = te_stable(&a, &b).map_err(|e| match e {
                StabilityError::Incomparable { .. } => Failure::data("consistency", e.to_string()),
                other => Failure::data("consistency", other.to_string()),
            })?;
            let (json, summary, code) = match &verdict {
                TeStability::Equal { te_basis } => (
                    json!({
                        "verdict": "equal",
                        "te_basis": reports::int_matrix(te_basis),
                    }),
                    vec!["exact subalgebras agree".to_string()],
                    0,
                ),
                TeStability::Different {
                    te_first,
                    te_second,
                } => (
                    json!({
                        "verdict": "different",
                        "te_first": reports::int_matrix(te_first),
                        "te_second": reports::int_matrix(te_second),
                    }),
                    vec!["exact subalgebras differ despite equal weight data; \
                         the authored periods contradict stability"
                        .to_string()],
                    2,
                ),
                TeStability::NotSmallPerturbation { reason } => (
                    json!({"verdict": "not-small-perturbation", "reason": reason}),
                    vec![format!("not a small perturbation: {reason}")],
                    0,
                ),
            };
            Ok(Outcome {
                json,
                summary,
                code,
            })
        }
        Command::FanCompare {
            polytope1,
            polytope2,
        } => {
            let p1 = load_polytope(&polytope1)?;
            let p2 = load_polytope(&polytope2)?;
            let equal = fans_equal(&p1, &p2)?;
            Ok(Outcome::ok(
                json!({"equal": equal}),
                vec![format!(
                    "normal fans are {}",
                    if equal { "equal" } else { "different" }
                )],
            ))
        }
        Command::EdgeReassign { polytope, lengths } => {
            let p = load_polytope(&polytope)?;
            let lengths: Vec<_> = lengths
                .split(',')
                .map(|s| formats::parse_rational(s.trim()))
                .collect::<Result<_, _>>()?;
            let assignment = EdgeLengthAssignment {
                polytope: p,
                lengths,
            };
            match reassign_edge_lengths(&assignment) {
                Ok(result) => {
                    let edges: Vec<Value> = boundary_edges(&result)
                        .expect("reassignment output is a 2-polytope")
                        .iter()
                        .map(reports::boundary_edge)
                        .collect();
                    Ok(Outcome::ok(
                        json!({
                            "polytope": reports::polytope(&result),
                            "edges": edges,
                        }),
                        vec![format!(
                            "rebuilt polygon with {} vertices",
                            result.vertices().len()
                        )],
                    ))
                }
                Err(StabilityError::ClosureDefect { defect }) => Err(Failure::data(
                    "closure-defect",
                    "boundary walk does not close",
                )
                .with_detail(json!({"defect": reports::rat_vec(&defect)}))),
                Err(e) => Err(Failure::data("consistency", e.to_string())),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are not failures.
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(outcome) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&outcome.json).expect("report serialization")
            );
            if !cli.quiet {
                for line in &outcome.summary {
                    eprintln!("{line}");
                }
            }
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            let doc = json!({
                "error": {
                    "kind": failure.kind,
                    "message": failure.message,
                    "detail": failure.detail,
                }
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("report serialization")
            );
            if !cli.quiet {
                eprintln!("error: {}", failure.message);
            }
            ExitCode::from(failure.code)
        }
    }
}
