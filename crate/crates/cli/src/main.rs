//! Command-line front end: parse a sheaf description, dispatch one
//! computation, print JSON (or text) with stable exit codes.

use clap::{Parser, Subcommand, ValueEnum};
use ghn_core::ghn::GhnError;
use ghn_core::invariant::{is_semistable, nu};
use ghn_core::optimizer::{
    brute_force_max_capped, leading_cochar, slope_canonical, OptimizerError, DEFAULT_CANDIDATE_CAP,
};
use ghn_core::rootdata::Cocharacter;
use ghn_core::schema::{parse_lambda, parse_sheaf};
use ghn_core::sheafmodel::{degree, is_central, validate, SheafError};
use ghn_core::{ghn_filtration, CombinatorialRhoSheaf};
use serde_json::{json, Value};
use std::io::Read;
use std::process::ExitCode;

const EXIT_VALIDATION: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "ghn", version, about = "Exact semistability and filtration computations for torus-diagonalized sheaves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input file path, or "-" for stdin.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized suites (accepted for reproducible drivers; the
    /// computations here are deterministic).
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Run every structural and arithmetic consistency check.
    Validate,
    /// Decide toral Gieseker semistability.
    Semistable,
    /// Evaluate the numerical invariant at a given cocharacter.
    NuEval {
        /// Cocharacter as a JSON integer array, e.g. "[1,0,0]".
        #[arg(long)]
        lambda: String,
    },
    /// The maximizing primitive cocharacter ray and its leading degree.
    LeadingHn,
    /// The full multi-weighted lexicographic filtration.
    Ghn,
    /// The canonical slope ray (central representations only).
    SlopeCanonical,
    /// The degree vector over the character group of the datum.
    Degree,
    /// Whether the representation is central.
    CentralCheck,
    /// Compare the closed-form maximizer against exhaustive lattice search.
    OracleCompare {
        /// Enumeration bound B: all cocharacters with entries in [-B, B].
        #[arg(long)]
        bound: u32,
        /// Cap on the number of enumerated candidates.
        #[arg(long)]
        max_candidates: Option<u128>,
    },
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => {
            emit(&value, cli.format);
            ExitCode::SUCCESS
        }
        Err(CliError { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl ToString) -> CliError {
    CliError { code, message: message.to_string() }
}

impl From<SheafError> for CliError {
    fn from(e: SheafError) -> Self {
        fail(EXIT_VALIDATION, e)
    }
}

impl From<OptimizerError> for CliError {
    fn from(e: OptimizerError) -> Self {
        match e {
            OptimizerError::SearchSpaceTooLarge { .. } => fail(EXIT_VALIDATION, e),
            OptimizerError::Sheaf(inner) => inner.into(),
            other => fail(EXIT_VALIDATION, other),
        }
    }
}

impl From<GhnError> for CliError {
    fn from(e: GhnError) -> Self {
        match e {
            GhnError::InternalNonRefinement => fail(EXIT_INTERNAL, e),
            GhnError::Sheaf(inner) => inner.into(),
            GhnError::Optimizer(inner) => inner.into(),
            other => fail(EXIT_VALIDATION, other),
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| fail(EXIT_PARSE, format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| fail(EXIT_PARSE, format!("reading {path}: {e}")))
    }
}

fn load_sheaf(cli: &Cli) -> Result<CombinatorialRhoSheaf, CliError> {
    let text = read_input(&cli.input)?;
    parse_sheaf(&text).map_err(|e| fail(EXIT_PARSE, e))
}

fn lambda_json(lambda: &Cocharacter) -> Value {
    Value::Array(
        lambda
            .iter()
            .map(|x| Value::String(x.to_string()))
            .collect(),
    )
}

fn run(cli: &Cli) -> Result<Value, CliError> {
    let sheaf = load_sheaf(cli)?;
    match &cli.command {
        Command::Validate => {
            let report = validate(&sheaf);
            let value = json!({
                "valid": report.passed(),
                "checks": report
                    .checks
                    .iter()
                    .map(|c| json!({
                        "name": c.name,
                        "passed": c.passed,
                        "witness": c.witness,
                    }))
                    .collect::<Vec<_>>(),
            });
            if report.passed() {
                Ok(value)
            } else {
                emit(&value, cli.format);
                Err(fail(EXIT_VALIDATION, "validation failed"))
            }
        }
        Command::Semistable => {
            let verdict = is_semistable(&sheaf)?;
            Ok(json!({ "semistable": verdict, "scope": "toral" }))
        }
        Command::NuEval { lambda } => {
            let lam = parse_lambda(lambda).map_err(|e| fail(EXIT_PARSE, e))?;
            if lam.len() != sheaf.rep.torus_rank {
                return Err(fail(
                    EXIT_PARSE,
                    format!(
                        "lambda has {} coordinates, torus rank is {}",
                        lam.len(),
                        sheaf.rep.torus_rank
                    ),
                ));
            }
            let value = nu(&sheaf, &lam)?;
            Ok(json!({
                "lambda": lambda_json(&lam),
                "nu": value.to_json(),
                "degenerate": value.degenerate(),
            }))
        }
        Command::LeadingHn => match leading_cochar(&sheaf)? {
            Some(lead) => Ok(json!({
                "lambda": lambda_json(&lead.lambda),
                "leading_degree": lead.leading_degree,
                "value": lead.value.to_json(),
                "semistable": false,
            })),
            None => Ok(json!({ "lambda": null, "semistable": true })),
        },
        Command::Ghn => Ok(ghn_filtration(&sheaf)?.to_json()),
        Command::SlopeCanonical => match slope_canonical(&sheaf)? {
            Some(lambda) => Ok(json!({ "lambda": lambda_json(&lambda) })),
            None => Ok(json!({ "lambda": null })),
        },
        Command::Degree => {
            let deg = degree(&sheaf)?;
            Ok(json!({
                "degree": deg
                    .iter()
                    .map(|x| ghn_core::ratio::fmt_rat(x))
                    .collect::<Vec<_>>(),
            }))
        }
        Command::CentralCheck => Ok(json!({
            "central": is_central(&sheaf.datum, &sheaf.rep),
        })),
        Command::OracleCompare { bound, max_candidates } => {
            let cap = max_candidates.unwrap_or(DEFAULT_CANDIDATE_CAP);
            let analytic = leading_cochar(&sheaf)?;
            let oracle = brute_force_max_capped(&sheaf, *bound, cap)?;
            let agree = match (&analytic, &oracle) {
                (None, None) => true,
                (Some(a), Some((lam, _))) => a.lambda == *lam,
                _ => false,
            };
            Ok(json!({
                "agree": agree,
                "analytic": analytic.as_ref().map(|a| lambda_json(&a.lambda)),
                "oracle": oracle.as_ref().map(|(lam, _)| lambda_json(lam)),
            }))
        }
    }
}

fn emit(value: &Value, format: Format) {
    match format {
        Format::Json => println!("{value}"),
        Format::Text => {
            let color = std::env::var("GHN_COLOR").map(|v| v == "1").unwrap_or(false);
            let mut out = String::new();
            render_text(value, 0, color, &mut out);
            print!("{out}");
        }
    }
}

fn render_text(value: &Value, indent: usize, color: bool, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                if v.is_object() || (v.is_array() && v.as_array().is_some_and(|a| a.iter().any(Value::is_object))) {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text(v, indent + 1, color, out);
                } else {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar_text(v, color)));
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                if v.is_object() {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(v, indent + 1, color, out);
                } else {
                    out.push_str(&format!("{pad}- {}\n", scalar_text(v, color)));
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other, color))),
    }
}

fn scalar_text(value: &Value, color: bool) -> String {
    match value {
        Value::Bool(true) if color => "\x1b[32mtrue\x1b[0m".to_string(),
        Value::Bool(false) if color => "\x1b[31mfalse\x1b[0m".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items
                .iter()
                .map(|v| scalar_text(v, false))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        other => other.to_string(),
    }
}
