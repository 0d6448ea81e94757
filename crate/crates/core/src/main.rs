use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use chipfire::engine::{
    cmd_bases, cmd_canonicalize, cmd_equivalent, cmd_group, cmd_puzzle, parse_config_str, parse_matroid_str,
    protocol, selftest, EngineError,
};
use chipfire::matroid::RegularMatroid;
use chipfire::r10::{canonicalize_traced, r10_matroid};

#[derive(Parser)]
#[command(name = "chipfire", version, about = "Exact chip-firing on regular matroids and R10")]
struct Cli {
    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a pentagon configuration to its canonical representative
    Canonicalize {
        /// JSON `[[re, im] × 5]`, or `-` for stdin
        config: String,
        /// Show the intermediate steps
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether two pentagon configurations are firing-equivalent
    Equivalent { a: String, b: String },
    /// Sandpile group of a regular matroid
    Group(MatroidArg),
    /// Bases of a regular matroid
    Bases {
        #[command(flatten)]
        matroid: MatroidArg,
        /// List every basis
        #[arg(long)]
        list: bool,
    },
    /// Random solvable configuration
    Puzzle {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        difficulty: usize,
    },
    /// Answer JSON-lines requests on stdin until EOF
    Serve,
    /// Run the built-in consistency checks
    Selftest,
}

#[derive(Args)]
struct MatroidArg {
    /// Named matroid
    #[arg(long, value_parser = ["r10"], conflicts_with = "matroid")]
    preset: Option<String>,
    /// JSON `{"r": .., "n": .., "D": [[..]]}`, or `-` for stdin
    #[arg(required_unless_present = "preset")]
    matroid: Option<String>,
}

fn read_arg(s: &str) -> Result<String, EngineError> {
    if s != "-" {
        return Ok(s.to_string());
    }
    let mut buf = String::new();
    io::stdin().read_to_string(&mut buf).map_err(|e| EngineError::Parse(format!("stdin: {e}")))?;
    Ok(buf)
}

fn load_matroid(arg: &MatroidArg) -> Result<RegularMatroid, EngineError> {
    match (&arg.preset, &arg.matroid) {
        (Some(_), _) => Ok(r10_matroid()),
        (None, Some(m)) => parse_matroid_str(&read_arg(m)?),
        (None, None) => Err(EngineError::Validation("no matroid given".into())),
    }
}

fn emit<T: Serialize>(json: bool, value: &T, human: impl FnOnce() -> String) -> Result<(), EngineError> {
    if json {
        let s = serde_json::to_string(value).map_err(|e| EngineError::Internal(e.to_string()))?;
        println!("{s}");
    } else {
        println!("{}", human());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, EngineError> {
    let json = cli.json;
    match cli.command {
        Command::Canonicalize { config, trace } => {
            let c = parse_config_str(&read_arg(&config)?)?;
            let out = cmd_canonicalize(&c)?;
            emit(json, &out, || {
                let mut s = String::new();
                if trace {
                    let t = canonicalize_traced(&c);
                    s += &format!("input          {c}\n");
                    s += &format!("real chips     {:?}\n", t.real_only);
                    s += &format!("even total     {}\n", t.is_even);
                    s += &format!("shifted        {:?}\n", t.shifted);
                    s += &format!("reduced mod 3  {:?}\n", t.reduced);
                    s += &format!("added 3        {}\n", t.added_three);
                }
                s += &format!("canonical      {}\ncertificate    {}", out.canonical, out.certificate);
                s
            })?;
        }
        Command::Equivalent { a, b } => {
            let a = parse_config_str(&read_arg(&a)?)?;
            let b = parse_config_str(&read_arg(&b)?)?;
            let out = cmd_equivalent(&a, &b)?;
            emit(json, &out, || match &out.certificate {
                Some(x) => format!("equivalent\ncertificate {x}"),
                None => "not equivalent".into(),
            })?;
        }
        Command::Group(m) => {
            let out = cmd_group(&load_matroid(&m)?)?;
            emit(json, &out, || {
                let parts: Vec<String> = out.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
                let g = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
                format!("{g}\norder {}", out.order)
            })?;
        }
        Command::Bases { matroid, list } => {
            let mut out = cmd_bases(&load_matroid(&matroid)?)?;
            if !list {
                out.bases.clear();
            }
            emit(json, &out, || {
                let mut s = format!("{} bases, det K = {}", out.count, out.det_k);
                for b in &out.bases {
                    s += &format!("\n{:?}", b.columns);
                }
                s
            })?;
        }
        Command::Puzzle { seed, difficulty } => {
            let p = cmd_puzzle(seed, difficulty)?;
            emit(json, &p, || {
                format!("{}\nseed {} ({}), {} moves", p.config, p.seed, p.rng, p.moves_applied)
            })?;
        }
        Command::Serve => {
            let stdin = io::stdin();
            protocol::serve(stdin.lock(), io::stdout().lock())
                .map_err(|e| EngineError::Internal(format!("io: {e}")))?;
        }
        Command::Selftest => {
            let report = selftest::run_selftest();
            emit(json, &report, || {
                report
                    .checks
                    .iter()
                    .map(|c| {
                        let mark = if c.passed { "ok  " } else { "FAIL" };
                        format!("{mark} {} ({} ms): {}", c.name, c.millis, c.detail)
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            })?;
            if !report.passed() {
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            if json {
                let body = protocol::ErrorBody::from(&e);
                eprintln!("{}", serde_json::json!({ "error": body }));
            } else {
                eprintln!("error [{}]: {e}", e.code());
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
