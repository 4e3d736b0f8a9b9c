//! `gpac`: information amounts, complexity moments, PAC bounds and
//! simulations, separability tests, and the diagonal construction, over
//! simple CSV inputs. One JSON object per invocation on stdout; `--format
//! text` renders the same payload as key/value lines.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gpac_core::complexity::{interpreted_information, string_information, Environment};
use gpac_core::demos::{cantor_demo, run_demo};
use gpac_core::godel::{
    construct_godel, enumerate_entangled_dimension, godel_dimension, separability_test,
    CoefficientMatrix, SeparabilityKind,
};
use gpac_core::interpreters::{check_completeness, CompletenessVerdict, Interpreter};
use gpac_core::io::{parse_matrix, parse_pac_instance, parse_spectrum};
use gpac_core::pac::{run_pac_simulation, sample_bound, PacConfig};
use gpac_core::complexity::{central_complexity, origin_complexity, shannon_entropy,
    shannon_entropy_as_complexity};
use gpac_core::TAU_RANK;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(name = "gpac", version, about = "Interpreter-relative information and entanglement toolkit")]
struct Cli {
    /// Output format for the payload
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Relative singular-value tolerance for rank verdicts
    #[arg(long, global = true, default_value_t = TAU_RANK)]
    tol: f64,
    /// Seed for randomized operations
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Information amount of a token string in an environment
    Info {
        /// The string to measure
        #[arg(long)]
        text: String,
        /// `dna-base`, `dna-codon`, or `name=<label>,width=<w>,count=<n>`
        #[arg(long)]
        env: String,
        /// Interpretation class size; reports log2(|Phi|/class_size)
        #[arg(long)]
        class_size: Option<u128>,
    },
    /// Origin or central complexity moment of a spectrum file
    Complexity {
        #[arg(long)]
        spectrum: PathBuf,
        #[arg(long)]
        order: u32,
        /// Center at the raw first moment before raising to the order
        #[arg(long)]
        central: bool,
    },
    /// Shannon entropy of a normalized spectrum file, via both code paths
    Entropy {
        #[arg(long)]
        spectrum: PathBuf,
    },
    /// Sample-complexity bound ln(2|H|/delta) / (2 eps^2)
    PacBound {
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        hypotheses: u64,
    },
    /// Seeded Monte-Carlo run of the uniform-convergence event
    PacSim {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        trials: u64,
    },
    /// Separability (numeric rank) verdict for a coefficient matrix file
    Separable {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Diagonal swap construction over a coefficient matrix file
    GodelConstruct {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Dimension 2^n - n - 1, optionally verified by subset enumeration
    GodelDim {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        enumerate: bool,
    },
    /// Completeness check of a basis of interpreter matrices on an info vector
    Completeness {
        /// Matrix CSV files, one per basis element (repeatable)
        #[arg(long, required = true)]
        basis: Vec<PathBuf>,
        /// Comma-separated info vector
        #[arg(long)]
        info: String,
    },
    /// Run a named demo: dna, shannon, epr, cantor, turing, pac
    Demo {
        name: String,
        /// Cantor only: comma-separated digit strings overriding the default
        #[arg(long)]
        lines: Option<String>,
    },
}

/// Input or validation problem; exits 2 with a one-line diagnostic.
struct UsageError(String);

impl<T: std::fmt::Display> From<T> for UsageError {
    fn from(e: T) -> Self {
        UsageError(e.to_string())
    }
}

fn read_file(path: &PathBuf) -> Result<String, UsageError> {
    fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn parse_env(spec: &str) -> Result<Environment, UsageError> {
    match spec {
        "dna-base" => return Ok(Environment::dna_base()),
        "dna-codon" => return Ok(Environment::dna_codon()),
        _ => {}
    }
    let mut name = None;
    let mut width = None;
    let mut count = None;
    for part in spec.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| UsageError(format!("env field {part:?} is not key=value")))?;
        match key {
            "name" => name = Some(value.to_string()),
            "width" => {
                width = Some(value.parse::<usize>().map_err(|e| {
                    UsageError(format!("env field width={value:?}: {e}"))
                })?)
            }
            "count" => {
                count = Some(value.parse::<u64>().map_err(|e| {
                    UsageError(format!("env field count={value:?}: {e}"))
                })?)
            }
            other => return Err(UsageError(format!("unknown env field {other:?}"))),
        }
    }
    let name = name.ok_or(UsageError("env spec is missing name=".into()))?;
    let width = width.ok_or(UsageError("env spec is missing width=".into()))?;
    let count = count.ok_or(UsageError("env spec is missing count=".into()))?;
    Ok(Environment::counting_only(name, width, count)?)
}

fn parse_vector(text: &str) -> Result<Vec<f64>, UsageError> {
    text.split(',')
        .map(|f| {
            f.trim()
                .parse::<f64>()
                .map_err(|e| UsageError(format!("info field {f:?}: {e}")))
        })
        .collect()
}

fn coefficient_matrix(path: &PathBuf) -> Result<CoefficientMatrix, UsageError> {
    let rows = parse_matrix(&read_file(path)?)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    Ok(CoefficientMatrix::from_rows(rows)?)
}

fn run(cli: &Cli) -> Result<Value, UsageError> {
    match &cli.command {
        Command::Info { text, env, class_size } => {
            let env = parse_env(env)?;
            let (bits, ill_formed) = string_information(text, &env);
            let mut payload = json!({
                "env": env.name(),
                "bits": bits,
                "ill_formed": ill_formed,
            });
            if let Some(class_size) = class_size {
                let interpreted = interpreted_information(text, &env, *class_size)?;
                payload["class_size"] = json!(*class_size as u64);
                payload["interpreted_bits"] = json!(interpreted);
            }
            Ok(payload)
        }
        Command::Complexity { spectrum, order, central } => {
            let sp = parse_spectrum(&read_file(spectrum)?)
                .map_err(|e| UsageError(format!("{}: {e}", spectrum.display())))?;
            let value = if *central {
                central_complexity(&sp, *order)
            } else {
                origin_complexity(&sp, *order)
            };
            Ok(json!({ "order": order, "central": central, "value": value }))
        }
        Command::Entropy { spectrum } => {
            let sp = parse_spectrum(&read_file(spectrum)?)
                .map_err(|e| UsageError(format!("{}: {e}", spectrum.display())))?;
            Ok(json!({
                "entropy": shannon_entropy(&sp)?,
                "entropy_via_moment": shannon_entropy_as_complexity(&sp)?,
            }))
        }
        Command::PacBound { epsilon, delta, hypotheses } => {
            let cfg = PacConfig::new(*epsilon, *delta, *hypotheses)?;
            let (exact, required) = sample_bound(&cfg);
            Ok(json!({ "exact": exact, "required": required }))
        }
        Command::PacSim { instance, epsilon, delta, m, trials } => {
            let (inst, scale, offset) = parse_pac_instance(&read_file(instance)?)
                .map_err(|e| UsageError(format!("{}: {e}", instance.display())))?;
            let cfg = PacConfig::new(*epsilon, *delta, inst.hypotheses().len() as u64)?;
            let report = run_pac_simulation(&inst, &cfg, *m, *trials, cli.seed)?;
            let mut payload = serde_json::to_value(&report).expect("report serializes");
            payload["rescale_scale"] = json!(scale);
            payload["rescale_offset"] = json!(offset);
            Ok(payload)
        }
        Command::Separable { matrix } => {
            let verdict = separability_test(&coefficient_matrix(matrix)?, cli.tol);
            Ok(json!({
                "kind": match verdict.kind {
                    SeparabilityKind::Separable => "Separable",
                    SeparabilityKind::Entangled => "Entangled",
                },
                "rank": verdict.numeric_rank,
                "singular_values": verdict.singular_values,
                "determinant": verdict.determinant,
            }))
        }
        Command::GodelConstruct { matrix } => {
            let g = construct_godel(&coefficient_matrix(matrix)?)?;
            Ok(json!({
                "pivot": g.pivot,
                "swap_value": g.swap_value,
                "output": g.output.entries(),
            }))
        }
        Command::GodelDim { n, enumerate } => {
            let closed_form = godel_dimension(*n)?;
            if *enumerate {
                let (enumerated, verified) = enumerate_entangled_dimension(*n)?;
                Ok(json!({
                    "closed_form": closed_form,
                    "enumerated": enumerated,
                    "verified": verified && enumerated == closed_form,
                }))
            } else {
                Ok(json!({ "closed_form": closed_form }))
            }
        }
        Command::Completeness { basis, info } => {
            let info = parse_vector(info)?;
            let interpreters = basis
                .iter()
                .map(|path| {
                    let rows = parse_matrix(&read_file(path)?)
                        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                    Ok(Interpreter::from_rows(path.display().to_string(), &rows)?)
                })
                .collect::<Result<Vec<_>, UsageError>>()?;
            match check_completeness(&interpreters, &info)? {
                CompletenessVerdict::Complete => Ok(json!({ "verdict": "Complete" })),
                CompletenessVerdict::Incomplete(witness) => {
                    Ok(json!({ "verdict": "Incomplete", "witness": witness }))
                }
            }
        }
        Command::Demo { name, lines } => {
            let report = match (name.as_str(), lines) {
                ("cantor", Some(lines)) => {
                    let lines: Vec<String> =
                        lines.split(',').map(|l| l.trim().to_string()).collect();
                    cantor_demo(&lines)?
                }
                _ => run_demo(name)?,
            };
            Ok(serde_json::to_value(&report).expect("report serializes"))
        }
    }
}

/// Flatten the payload into `key = value` lines; nested keys are joined with
/// dots, array elements indexed.
fn render_text(prefix: &str, value: &Value, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                render_text(&key, v, out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                render_text(&format!("{prefix}[{i}]"), v, out);
            }
        }
        other => {
            out.push_str(prefix);
            out.push_str(" = ");
            out.push_str(&other.to_string());
            out.push('\n');
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(payload) => {
            match cli.format {
                Format::Json => println!("{payload}"),
                Format::Text => {
                    let mut out = String::new();
                    render_text("", &payload, &mut out);
                    print!("{out}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
