use std::fs;
use std::panic;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ccc_core::completeness::{gamma_double, gamma_prime, phi_double, phi_prime};
use ccc_core::lambda::{arrows_equal, normal_form, simplify};
use ccc_core::laws::{law_suite, GenConfig};
use ccc_core::poly::instantiate;
use ccc_core::surface::{parse_arrow, parse_signature, ParsedArrow, TermClass};
use ccc_core::{type_of, Arrow, Signature};

const EXIT_NOT_EQUAL: u8 = 1;
const EXIT_USER: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ccc",
    version,
    about = "Free cartesian closed categories over a signature"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide equality of two arrows.
    CheckEq {
        signature: PathBuf,
        left: String,
        right: String,
    },
    /// Print the normal form of an arrow.
    Normalize { signature: PathBuf, term: String },
    /// Abstract the indeterminate out of a polynomial arrow.
    Abstract {
        #[command(flatten)]
        side: Adjoint,
        /// Also print an equal arrow read back from the normal form.
        #[arg(long)]
        simplify: bool,
        signature: PathBuf,
        term: String,
    },
    /// Turn a base arrow back into a polynomial arrow.
    Apply {
        #[command(flatten)]
        side: Adjoint,
        #[arg(long)]
        simplify: bool,
        signature: PathBuf,
        term: String,
    },
    /// Substitute a point for the indeterminate.
    Instantiate {
        signature: PathBuf,
        term: String,
        point: String,
    },
    /// Print the type of an arrow.
    Typeof { signature: PathBuf, term: String },
    /// Check every law on random instances.
    Selftest {
        signature: PathBuf,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the full report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Adjoint {
    /// Product side: `A |- B` over x versus `D * A |- B`.
    #[arg(long)]
    left: bool,
    /// Exponential side: `A |- B` over x versus `A |- D -> B`.
    #[arg(long)]
    right: bool,
}

enum Failure {
    User(String),
    Internal(String),
}

impl From<ccc_core::Error> for Failure {
    fn from(e: ccc_core::Error) -> Self {
        if e.is_user_error() {
            Failure::User(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

type Outcome = std::result::Result<u8, Failure>;

fn load(path: &Path) -> std::result::Result<Signature, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::User(format!("cannot read {}: {e}", path.display())))?;
    parse_signature(&text).map_err(|e| Failure::User(format!("{}: {e}", path.display())))
}

fn show(term: &Arrow, sig: &Signature, simplified: bool) -> Outcome {
    let ty = type_of(term, sig)?;
    println!("{term}");
    println!(": {ty}");
    if simplified {
        println!("simplified: {}", simplify(term, sig)?);
    }
    Ok(0)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::CheckEq {
            signature,
            left,
            right,
        } => {
            let sig = load(&signature)?;
            let f = parse_arrow(&left, &sig)?.term;
            let g = parse_arrow(&right, &sig)?.term;
            let equal = arrows_equal(&f, &g, &sig)?;
            println!("{}", if equal { "EQUAL" } else { "NOT-EQUAL" });
            println!("left:  {}", normal_form(&f, &sig)?);
            println!("right: {}", normal_form(&g, &sig)?);
            Ok(if equal { 0 } else { EXIT_NOT_EQUAL })
        }
        Command::Normalize { signature, term } => {
            let sig = load(&signature)?;
            let ParsedArrow { term, ty, .. } = parse_arrow(&term, &sig)?;
            println!("type:   {ty}");
            println!("lambda: {}", normal_form(&term, &sig)?);
            println!("arrow:  {}", simplify(&term, &sig)?);
            Ok(0)
        }
        Command::Abstract {
            side,
            simplify,
            signature,
            term,
        } => {
            let sig = load(&signature)?;
            let f = parse_arrow(&term, &sig)?.term;
            let out = if side.left {
                phi_prime(&f, &sig)?
            } else {
                gamma_double(&f, &sig)?
            };
            show(&out, &sig, simplify)
        }
        Command::Apply {
            side,
            simplify,
            signature,
            term,
        } => {
            let sig = load(&signature)?;
            let f = parse_arrow(&term, &sig)?.term;
            let out = if side.left {
                gamma_prime(&f, &sig)?
            } else {
                phi_double(&f, &sig)?
            };
            show(&out, &sig, simplify)
        }
        Command::Instantiate {
            signature,
            term,
            point,
        } => {
            let sig = load(&signature)?;
            let f = parse_arrow(&term, &sig)?.term;
            let a = parse_arrow(&point, &sig)?.term;
            show(&instantiate(&f, &a, &sig)?, &sig, false)
        }
        Command::Typeof { signature, term } => {
            let sig = load(&signature)?;
            let parsed = parse_arrow(&term, &sig)?;
            let class = match parsed.class {
                TermClass::Plain => "base",
                TermClass::Poly => "polynomial",
            };
            println!("{}", parsed.ty);
            println!("{class}");
            Ok(0)
        }
        Command::Selftest {
            signature,
            depth,
            cases,
            seed,
            report,
        } => {
            let sig = load(&signature)?;
            let config = GenConfig {
                max_depth: depth,
                case_count: cases,
                seed,
            };
            let result = law_suite(&sig, config)?;
            for law in &result.laws {
                let status = match (&law.skipped, law.passed()) {
                    (_, false) => "FAIL",
                    (Some(_), true) => "SKIP",
                    (None, true) => "PASS",
                };
                println!(
                    "{status} {:<30} cases={:<5} failures={}",
                    law.name, law.cases, law.failures
                );
                if let Some(why) = &law.skipped {
                    println!("     {why}");
                }
                for c in &law.counterexamples {
                    println!("     counterexample: {c}");
                }
            }
            if let Some(path) = report {
                fs::write(&path, result.to_text())
                    .map_err(|e| Failure::User(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(if result.passed() { 0 } else { EXIT_INTERNAL })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USER } else { 0 });
        }
    };
    match panic::catch_unwind(|| run(cli.command)) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(Failure::User(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USER)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
        Err(_) => ExitCode::from(EXIT_INTERNAL),
    }
}
