//! Command-line front end: parse algebra definition files or builtin names,
//! run analyses and verification batteries, and emit deterministic reports.
//! Exit codes: 0 ok, 1 input error, 2 verdict withheld, 3 battery failure.

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::process::ExitCode;

use lieball::battery::{all_pass, Battery};
use lieball::error::Error;
use lieball::input::{parse_algebra_file, parse_builtin, AlgebraInput};
use lieball::report::{
    run_analysis, to_canonical_string, to_human_string, vector_to_json, AnalysisRequest, Task,
};
use lieball::scalar::parse_scalar;
use lieball::symspace::embed::{embed, EmbedInput, EmbeddingSpec};
use lieball::Scalar;

#[derive(Parser)]
#[command(
    name = "lieball",
    version,
    about = "Exact analysis of matrix Lie algebra representations and the Lie ball"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Render a human-readable summary instead of JSON.
    #[arg(long)]
    human: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run analysis tasks on a builtin algebra or a definition file.
    Analyze {
        /// Builtin source, e.g. so(2,3), u_real(1,2), appendix_so12.
        #[arg(long, conflicts_with = "file")]
        builtin: Option<String>,
        /// Path to a JSON algebra definition.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
        /// Comma-separated tasks: CLOSURE, COMMUTANT, IRREDUCIBILITY, TYPE,
        /// FORMS, CENTER, FIXER, TRANSITIVITY. Defaults to the first six.
        #[arg(long)]
        tasks: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Singular-element attempts before the verdict is withheld.
        #[arg(long, default_value_t = 64)]
        budget: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Run a fixed verification battery.
    Verify {
        /// THEOREM1, APPENDIX_A, APPENDIX_B, EMBEDDINGS, or LEMMA_FORMS.
        battery: String,
        /// Smallest ambient n for the n-dependent batteries.
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        /// Largest ambient n.
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        budget: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Evaluate a totally geodesic embedding at a point and check it.
    Embed {
        /// Family: i1, i2, g1, g2, p1, p2.
        #[arg(long)]
        family: String,
        /// Parameter k (k1 for g2).
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Second parameter for g2.
        #[arg(long)]
        k2: Option<usize>,
        /// Ambient n.
        #[arg(long)]
        n: usize,
        /// Comma-separated coordinates in the exact entry grammar.
        #[arg(long)]
        point: String,
        /// Second factor coordinates, for g2.
        #[arg(long)]
        point2: Option<String>,
        #[arg(long, default_value_t = 3)]
        d: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Evaluate the type IV domain map at a point of C^n.
    MapIv {
        /// Comma-separated Gaussian-rational coordinates, e.g. "1/2,(0,1/3)".
        #[arg(long)]
        z: String,
        #[command(flatten)]
        out: OutputOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::AnalysisBudgetExceeded { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn emit(value: &serde_json::Value, out: &OutputOpts) -> Result<(), Error> {
    let text = if out.human {
        to_human_string(value)
    } else {
        to_canonical_string(value)
    };
    write_text(&text, out)
}

fn write_text(text: &str, out: &OutputOpts) -> Result<(), Error> {
    match &out.output {
        Some(path) => std::fs::write(path, text.as_bytes())
            .map_err(|e| Error::BadParams(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// Split a comma-separated coordinate list, keeping `(re,im)` entries whole.
fn parse_point(text: &str, d: u32) -> Result<Vec<Scalar>, Error> {
    let mut entries: Vec<String> = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                entries.push(std::mem::take(&mut current));
            }
            _ => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        entries.push(current);
    }
    entries.iter().map(|s| parse_scalar(s.trim(), d)).collect()
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Analyze { builtin, file, tasks, seed, budget, out } => {
            let (source, input) = match (builtin, file) {
                (Some(name), None) => {
                    let alg = parse_builtin(&name)?.build()?;
                    let input = AlgebraInput {
                        name: alg.name().map(str::to_owned),
                        field: alg.field(),
                        ambient_dim: alg.ambient_dim(),
                        signature: None,
                        generators: alg.basis().to_vec(),
                    };
                    (name, input)
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| {
                        Error::BadParams(format!("cannot read {}: {e}", path.display()))
                    })?;
                    (path.display().to_string(), parse_algebra_file(&text)?)
                }
                _ => {
                    return Err(Error::BadParams(
                        "exactly one of --builtin or --file is required".into(),
                    ))
                }
            };
            let tasks = match tasks {
                Some(spec) => spec
                    .split(',')
                    .map(Task::parse)
                    .collect::<Result<Vec<_>, _>>()?,
                None => vec![
                    Task::Closure,
                    Task::Commutant,
                    Task::Irreducibility,
                    Task::Type,
                    Task::Forms,
                    Task::Center,
                ],
            };
            let request = AnalysisRequest { source, input, tasks, seed, budget };
            let report = run_analysis(&request)?;
            emit(&report, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { battery, n_min, n_max, seed, budget, out } => {
            let b = Battery::parse(&battery)
                .ok_or_else(|| Error::BadParams(format!("unknown battery '{battery}'")))?;
            let n_values: Vec<usize> = (n_min..=n_max).collect();
            let results = b.run(&n_values, seed, budget)?;
            let pass = all_pass(&results);
            if out.human {
                let mut text = String::new();
                for r in &results {
                    text.push_str(&format!(
                        "[{}] {} -- {}\n",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.name,
                        r.details
                    ));
                }
                text.push_str(&format!(
                    "battery {}: {}",
                    battery.to_ascii_uppercase(),
                    if pass { "PASS" } else { "FAIL" }
                ));
                write_text(&text, &out)?;
            } else {
                let value = json!({
                    "tool": "lieball",
                    "version": env!("CARGO_PKG_VERSION"),
                    "exact_arithmetic": true,
                    "battery": battery.to_ascii_uppercase(),
                    "n_values": n_values,
                    "seed": seed,
                    "pass": pass,
                    "items": results.iter().map(|r| json!({
                        "name": r.name,
                        "pass": r.pass,
                        "details": r.details,
                    })).collect::<Vec<_>>(),
                });
                emit(&value, &out)?;
            }
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(3) })
        }
        Command::Embed { family, k, k2, n, point, point2, d, out } => {
            let spec = match family.to_ascii_lowercase().as_str() {
                "i1" => EmbeddingSpec::I1 { k, n },
                "i2" => EmbeddingSpec::I2 { k, n },
                "g1" => EmbeddingSpec::G1 { k, n },
                "g2" => EmbeddingSpec::G2 {
                    k1: k,
                    k2: k2.ok_or_else(|| Error::BadParams("g2 needs --k2".into()))?,
                    n,
                },
                "p1" => EmbeddingSpec::P1 { k, n },
                "p2" => EmbeddingSpec::P2 { n },
                other => return Err(Error::BadParams(format!("unknown family '{other}'"))),
            };
            let first = parse_point(&point, d)?;
            let input = match point2 {
                Some(second) => EmbedInput::Pair(first, parse_point(&second, d)?),
                None => EmbedInput::Single(first),
            };
            let image = embed(&spec, &input)?;
            let value = json!({
                "family": format!("{spec:?}"),
                "coordinates": vector_to_json(image.coords()),
                "canonical": vector_to_json(image.canonical().coords()),
                "on_quadric": image.on_quadric(),
                "in_lieball": image.in_lieball(),
                "orientation_sign": image.orientation_sign().ok(),
            });
            emit(&value, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::MapIv { z, out } => {
            let coords = parse_point(&z, 3)?;
            let point = lieball::domainiv::DomainPoint::new(coords)?;
            let image = lieball::domainiv::cartan_iv_map(&point)?;
            let value = json!({
                "z": vector_to_json(point.coords()),
                "lambda": lieball::scalar::format_scalar(&point.lambda()?),
                "image": vector_to_json(image.coords()),
                "canonical": vector_to_json(image.canonical().coords()),
                "quadric_residual": lieball::scalar::format_scalar(&image.quadric_residual()?),
                "in_domain_iv": lieball::domainiv::in_domain_iv(&point)?,
                "in_lieball": image.in_lieball(),
            });
            emit(&value, &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
