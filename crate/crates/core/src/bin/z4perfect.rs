//! Command-line interface to the perfect-code family: construction,
//! verification, invariants, canonicalization, products, duals, and
//! binary images, each emitted as a reproducible report.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use z4perfect::analysis::{classify, code_rank, repetitive_dual_dimension, RankStrategy};
use z4perfect::canonical::canonicalize;
use z4perfect::codes::{CheckPolicy, QuaternaryCode};
use z4perfect::linalg::{build_check_matrix, CheckMatrix};
use z4perfect::product::product_code;
use z4perfect::{Error, Limits, Method};

#[derive(Parser)]
#[command(
    name = "z4perfect",
    version,
    about = "Extended perfect codes over Z4: construction, verification, and classification"
)]
struct Cli {
    /// Emit the report as JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the check matrix of the family member with the given parameters.
    Matrix {
        #[arg(long)]
        r1: u32,
        #[arg(long)]
        r2: u32,
        /// Also write the matrix to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether the kernel of a check matrix is a perfect code.
    Verify {
        /// File holding the check matrix, one row per line.
        #[arg(long)]
        check: PathBuf,
        /// Force full codeword enumeration (fails above the enumeration cap).
        #[arg(long, conflicts_with = "structural")]
        exhaustive: bool,
        /// Force the structural check only.
        #[arg(long)]
        structural: bool,
    },
    /// Rank and repetitive-dual dimension of a family member's binary image.
    Rank {
        #[arg(long)]
        r1: u32,
        #[arg(long)]
        r2: u32,
        /// Computation method; the default picks by code size.
        #[arg(long, value_enum)]
        method: Option<RankMethodArg>,
    },
    /// Classification table of all family members of binary length 2^k.
    Classify {
        #[arg(long)]
        k: u32,
    },
    /// Canonicalize a perfect check matrix onto the family.
    Canon {
        #[arg(long)]
        check: PathBuf,
    },
    /// Product of two perfect codes given by their check matrices.
    Product {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// Also write the product check matrix to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generator matrix of the dual of the kernel of a check matrix.
    Dual {
        #[arg(long)]
        check: PathBuf,
    },
    /// First binary image words of the kernel of a check matrix.
    Image {
        #[arg(long)]
        check: PathBuf,
        /// Number of words to print.
        #[arg(long)]
        limit: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RankMethodArg {
    /// Enumerate the code and accumulate a basis of the image.
    Stream,
    /// Span the image by generator words and their pairwise corrections.
    Shortcut,
}

#[derive(Serialize)]
struct CommandReport {
    command: &'static str,
    inputs: Value,
    result: Value,
    method: Method,
    elapsed_ms: u64,
}

/// A finished command: the report payload plus its plain-text rendering
/// and the process exit code.
struct Outcome {
    command: &'static str,
    inputs: Value,
    result: Value,
    method: Method,
    human: String,
    exit: u8,
}

enum CliError {
    Domain(Error),
    Io(PathBuf, std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(err) => write!(f, "{err}"),
            CliError::Io(path, err) => write!(f, "{}: {err}", path.display()),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Domain(err)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(Error::NotPerfect { .. }) => 2,
            CliError::Domain(
                Error::EnumerationCapExceeded { .. } | Error::ColumnCapExceeded { .. },
            ) => 3,
            _ => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let limits = match Limits::from_env() {
        Ok(limits) => limits,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(1);
        }
    };
    let start = Instant::now();
    match run(&cli.command, &limits) {
        Ok(outcome) => {
            if cli.json {
                let report = CommandReport {
                    command: outcome.command,
                    inputs: outcome.inputs,
                    result: outcome.result,
                    method: outcome.method,
                    elapsed_ms: start.elapsed().as_millis() as u64,
                };
                println!("{}", serde_json::to_string(&report).unwrap());
            } else {
                print!("{}", outcome.human);
            }
            ExitCode::from(outcome.exit)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn read_check(path: &Path) -> Result<CheckMatrix, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    Ok(CheckMatrix::parse_text(&text)?)
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn descriptor_value(code: &QuaternaryCode) -> Value {
    serde_json::from_str(&code.descriptor()).unwrap()
}

fn run(command: &Command, limits: &Limits) -> Result<Outcome, CliError> {
    match command {
        Command::Matrix { r1, r2, out } => {
            let check = build_check_matrix(*r1, *r2, limits)?;
            let text = check.to_text();
            if let Some(path) = out {
                write_text(path, &text)?;
            }
            let code = QuaternaryCode::from_check(check);
            let mut inputs = json!({ "r1": r1, "r2": r2 });
            if let Some(path) = out {
                inputs["out"] = json!(path.display().to_string());
            }
            Ok(Outcome {
                command: "matrix",
                inputs,
                result: json!({ "matrix": text, "descriptor": descriptor_value(&code) }),
                method: Method::Structural,
                human: text,
                exit: 0,
            })
        }
        Command::Verify {
            check,
            exhaustive,
            structural,
        } => {
            let matrix = read_check(check)?;
            let (policy, policy_name) = if *exhaustive {
                (CheckPolicy::Exhaustive, "exhaustive")
            } else if *structural {
                (CheckPolicy::Structural, "structural")
            } else {
                (CheckPolicy::Auto, "auto")
            };
            let code = QuaternaryCode::from_check(matrix);
            let status = code.is_perfect(policy, limits)?;
            let human = format!(
                "check    {}\nperfect  {}\nmethod   {}\n",
                check.display(),
                status.perfect,
                status.method
            );
            Ok(Outcome {
                command: "verify",
                inputs: json!({
                    "check": check.display().to_string(),
                    "policy": policy_name,
                }),
                result: json!({ "perfect": status.perfect }),
                method: status.method,
                human,
                exit: if status.perfect { 0 } else { 2 },
            })
        }
        Command::Rank { r1, r2, method } => {
            let strategy = match method {
                None => RankStrategy::Auto,
                Some(RankMethodArg::Stream) => RankStrategy::Stream,
                Some(RankMethodArg::Shortcut) => RankStrategy::Shortcut,
            };
            let code = QuaternaryCode::family(*r1, *r2, limits)?;
            let (rank, used) = code_rank(&code, strategy, limits)?;
            let rep = repetitive_dual_dimension(&code, strategy, limits)?;
            let human = format!(
                "r1                         {r1}\n\
                 r2                         {r2}\n\
                 binary-length              {}\n\
                 rank                       {rank}\n\
                 repetitive-dual-dimension  {rep}\n\
                 method                     {used}\n",
                2 * code.len()
            );
            Ok(Outcome {
                command: "rank",
                inputs: json!({ "r1": r1, "r2": r2 }),
                result: json!({
                    "r1": r1,
                    "r2": r2,
                    "binary_length": 2 * code.len(),
                    "rank": rank,
                    "repetitive_dual_dimension": rep,
                }),
                method: used,
                human,
                exit: 0,
            })
        }
        Command::Classify { k } => {
            let (report, method) = classify(*k, limits)?;
            let mut human = format!("k        {}\nmembers  {}\n\n", report.k, report.count);
            human.push_str("  r1  r2  length  rank  rep-dual  linear\n");
            for e in &report.entries {
                human.push_str(&format!(
                    "{:>4}{:>4}{:>8}{:>6}{:>10}  {}\n",
                    e.r1,
                    e.r2,
                    e.length,
                    e.rank,
                    e.rep_dual_dim,
                    if e.linear { "yes" } else { "no" }
                ));
            }
            human.push_str(&format!("\nmethod   {method}\n"));
            Ok(Outcome {
                command: "classify",
                inputs: json!({ "k": k }),
                result: serde_json::to_value(&report).unwrap(),
                method,
                human,
                exit: 0,
            })
        }
        Command::Canon { check } => {
            let matrix = read_check(check)?;
            let form = canonicalize(&matrix, limits)?;
            let code = QuaternaryCode::from_check(matrix);
            let method = if limits.allows_enumeration(code.log2_cardinality()) {
                Method::Exhaustive
            } else {
                Method::Structural
            };
            let permutation = form
                .permutation()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let human = format!(
                "r1           {}\nr2           {}\nsigns        {}\npermutation  {}\n",
                form.r1(),
                form.r2(),
                form.signs_string(),
                permutation
            );
            Ok(Outcome {
                command: "canon",
                inputs: json!({ "check": check.display().to_string() }),
                result: serde_json::to_value(&form).unwrap(),
                method,
                human,
                exit: 0,
            })
        }
        Command::Product { left, right, out } => {
            let left_code = QuaternaryCode::from_check(read_check(left)?);
            let right_code = QuaternaryCode::from_check(read_check(right)?);
            let method = if limits.allows_enumeration(left_code.log2_cardinality())
                && limits.allows_enumeration(right_code.log2_cardinality())
            {
                Method::Exhaustive
            } else {
                Method::Structural
            };
            let product = product_code(&left_code, &right_code, limits)?;
            let text = product.check().unwrap().to_text();
            if let Some(path) = out {
                write_text(path, &text)?;
            }
            let mut inputs = json!({
                "left": left.display().to_string(),
                "right": right.display().to_string(),
            });
            if let Some(path) = out {
                inputs["out"] = json!(path.display().to_string());
            }
            Ok(Outcome {
                command: "product",
                inputs,
                result: json!({ "matrix": text, "descriptor": descriptor_value(&product) }),
                method,
                human: text,
                exit: 0,
            })
        }
        Command::Dual { check } => {
            let code = QuaternaryCode::from_check(read_check(check)?);
            let dual = code.dual_code()?;
            let text = dual.generator().matrix().to_text();
            Ok(Outcome {
                command: "dual",
                inputs: json!({ "check": check.display().to_string() }),
                result: json!({ "generators": text, "descriptor": descriptor_value(&dual) }),
                method: Method::Structural,
                human: text,
                exit: 0,
            })
        }
        Command::Image { check, limit } => {
            let code = QuaternaryCode::from_check(read_check(check)?);
            let words: Vec<String> = code
                .binary_image()
                .take(*limit as usize)
                .map(|w| w.to_string())
                .collect();
            let mut human = words.join("\n");
            if !human.is_empty() {
                human.push('\n');
            }
            Ok(Outcome {
                command: "image",
                inputs: json!({
                    "check": check.display().to_string(),
                    "limit": limit,
                }),
                result: json!({ "count": words.len(), "words": words }),
                method: Method::Exhaustive,
                human,
                exit: 0,
            })
        }
    }
}
