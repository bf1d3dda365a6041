use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use d2kit::corpus::{self, Expectation, Expected};
use d2kit::extension::Extension;
use d2kit::linalg::Field;
use d2kit::pipeline::{self, Config, Report, Status};
use d2kit::{Error, Result};

#[derive(Parser)]
#[command(name = "d2kit", version, about = "Exact checks for depth-two algebra extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List built-in cases with their expectations.
    List {
        /// Print the manifest as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run a pipeline of checks on one extension.
    Check(CheckArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Built-in case name (see `d2kit list`).
    #[arg(long, conflicts_with_all = ["input", "random"])]
    case: Option<String>,
    /// Extension descriptor in JSON.
    #[arg(long, conflicts_with = "random")]
    input: Option<PathBuf>,
    /// Random subalgebra of an algebra of at most this dimension, from --seed.
    #[arg(long)]
    random: Option<usize>,
    /// `all` or a comma-separated list of stages.
    #[arg(long, default_value = "all")]
    stages: String,
    /// `Q` or `Fp:<p>`; overrides the field of an input file.
    #[arg(long)]
    field: Option<String>,
    #[arg(long, default_value_t = 9)]
    dim_cap: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Print one derived structure as JSON instead of running stages.
    #[arg(long)]
    dump: Option<String>,
}

fn load(args: &CheckArgs) -> Result<(String, Extension, Vec<Expectation>)> {
    let field: Option<Field> = args.field.as_deref().map(str::parse).transpose()?;
    if let Some(name) = &args.case {
        let c = corpus::case(name, field.unwrap_or(Field::Rational))?;
        return Ok((name.clone(), c.extension, c.info.expectations));
    }
    if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path)?;
        let ext = d2kit::io::parse_extension(&text, field)?;
        return Ok((path.display().to_string(), ext, vec![]));
    }
    if let Some(max_dim) = args.random {
        let ext = corpus::random_extension(field.unwrap_or(Field::Rational), max_dim, args.seed)?;
        return Ok((format!("random:{max_dim}:{}", args.seed), ext, vec![]));
    }
    Err(Error::Parse("one of --case, --input or --random is required".into()))
}

fn describe(e: &Expected) -> String {
    match e {
        Expected::Flag { flag, value } => format!("{} = {value}", serde_json::to_value(flag).unwrap().as_str().unwrap_or("?")),
        Expected::Dim { quantity, value } => format!("{} = {value}", serde_json::to_value(quantity).unwrap().as_str().unwrap_or("?")),
    }
}

fn print_report(r: &Report) {
    println!("{} over {}", r.case, r.field);
    for s in &r.stages {
        let mark = match (s.status, s.passed()) {
            (Status::Skipped, _) => "-",
            (_, true) => "✓",
            (_, false) => "✗",
        };
        let ok = s.checks.iter().filter(|c| c.passed).count();
        let detail = match &s.reason {
            Some(reason) => format!("skipped: {reason}"),
            None => format!("{ok}/{} checks", s.checks.len()),
        };
        println!("{mark} {:<12} {:<40} {:>8.1} ms", s.stage.name(), detail, s.elapsed.as_secs_f64() * 1e3);
        for c in s.checks.iter().filter(|c| !c.passed) {
            println!("    ✗ {}: {}", c.axiom, c.witness.as_deref().unwrap_or(""));
        }
    }
    if !r.expectations.is_empty() {
        println!("expectations");
        for o in &r.expectations {
            let mark = match o.passed {
                Some(true) => "✓",
                Some(false) => "✗",
                None => "-",
            };
            let actual = o.actual.as_ref().map_or("not computed".to_string(), |a| a.to_string());
            println!("{mark} {:<32} actual {actual}", describe(&o.expectation.expected));
        }
    }
    println!("{}", if r.passed { "PASS" } else { "FAIL" });
}

fn check(args: &CheckArgs) -> Result<bool> {
    let (name, ext, expectations) = load(args)?;
    if let Some(target) = &args.dump {
        let v = d2kit::dump::dump(&ext, target)?;
        println!("{}", serde_json::to_string_pretty(&v).expect("dump serializes"));
        return Ok(true);
    }
    let cfg = Config { stages: pipeline::parse_stages(&args.stages)?, dim_cap: args.dim_cap, seed: args.seed };
    let report = pipeline::run(&name, &ext, &expectations, &cfg)?;
    print_report(&report);
    if let Some(path) = &args.json {
        std::fs::write(path, report.to_json() + "\n")?;
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::List { json } => {
            let manifest = corpus::manifest();
            if *json {
                let v = serde_json::json!({"schema_version": d2kit::io::SCHEMA_VERSION, "cases": manifest});
                println!("{}", serde_json::to_string_pretty(&v).expect("manifest serializes"));
            } else {
                for c in manifest {
                    println!("{:<24} {}", c.name, c.description);
                }
            }
            Ok(true)
        }
        Command::Check(args) => check(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
