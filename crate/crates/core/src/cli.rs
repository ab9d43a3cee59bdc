//! Command-line front end.
//!
//! Every successful command prints one JSON envelope
//! `{schema_version, command, result, timing_ms}` on stdout, or a
//! tab-separated table with `--format tsv`. Exit codes: 0 success,
//! 1 verification disagreement, 2 usage or parse error, 3 size bound exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::Error;
use crate::partitions::{Partition, SkewShape, DEFAULT_PARTITION_BOUND};
use crate::theorem::case_list;
use crate::{
    enumerate_lr_tableaux, exception_cases, exceptions_at, find_witness, frobenius_f, lr_coefficient, multiplicity,
    verify_immersion_theorem, verify_main_theorem, Engine,
};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(
    name = "invec",
    version,
    about = "Invariant vectors of permutations in Specht modules"
)]
struct Cli {
    /// Largest n that partition enumeration accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_PARTITION_BOUND)]
    bound: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Does w_mu fix a nonzero vector of V_lambda?
    Admits {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        /// Skip the brute-force multiplicity.
        #[arg(long)]
        oracle_only: bool,
    },
    /// Schur expansion of the induced representation from <w_mu>.
    Fmu {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
    /// Exceptional pairs of size n from the closed form.
    Exceptions {
        #[arg(long)]
        n: usize,
    },
    /// Check the closed form against brute force for every n <= max-n.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Character value chi_lambda(mu).
    Character {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
    /// Littlewood-Richardson coefficient c^outer_{inner, weight}.
    Lr {
        #[arg(long, value_parser = parse_partition)]
        outer: Partition,
        #[arg(long, value_parser = parse_partition)]
        inner: Partition,
        #[arg(long, value_parser = parse_partition)]
        weight: Partition,
        /// Also list every tableau.
        #[arg(long)]
        list: bool,
    },
    /// Search for alpha |- p, beta |- q certifying f_(p) f_(q) >= s_lambda.
    Witness {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Eigenvalue multiplicities of rho_lambda(w_mu).
    Spectrum {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
    /// Check which V_lambda the trivial and sign representations immerse into.
    Immersion {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn failure(code: u8, message: String) -> Self {
        Output {
            code,
            stdout: String::new(),
            stderr: message,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Domain(_) => 2,
        Error::SizeBound { .. } => 3,
        Error::Overflow | Error::Internal(_) => 1,
    }
}

/// A command's payload plus whatever it found wrong.
struct Outcome {
    result: Value,
    tsv: String,
    /// Set when a verification found disagreements.
    disagreement: Option<String>,
}

impl Outcome {
    fn ok(result: Value, tsv: String) -> Self {
        Outcome {
            result,
            tsv,
            disagreement: None,
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code() as u8;
            return if code == 0 {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output::failure(code, text)
            };
        }
    };
    let start = Instant::now();
    let name = command_name(&cli.command);
    let engine = Engine::with_bound(cli.bound);
    let outcome = match execute(&engine, cli.command) {
        Ok(o) => o,
        Err(e) => return Output::failure(exit_code(&e), format!("error: {e}\n")),
    };
    let stdout = match cli.format {
        Format::Json => {
            let envelope = json!({
                "schema_version": SCHEMA_VERSION,
                "command": name,
                "result": outcome.result,
                "timing_ms": start.elapsed().as_millis() as u64,
            });
            format!("{}\n", serde_json::to_string_pretty(&envelope).expect("json"))
        }
        Format::Tsv => outcome.tsv,
    };
    match outcome.disagreement {
        None => Output {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Some(msg) => Output {
            code: 1,
            stdout,
            stderr: format!("verification failed: {msg}\n"),
        },
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Admits { .. } => "admits",
        Command::Fmu { .. } => "fmu",
        Command::Exceptions { .. } => "exceptions",
        Command::Verify { .. } => "verify",
        Command::Character { .. } => "character",
        Command::Lr { .. } => "lr",
        Command::Witness { .. } => "witness",
        Command::Spectrum { .. } => "spectrum",
        Command::Immersion { .. } => "immersion",
    }
}

fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> crate::Result<R> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn key_values(pairs: &[(&str, String)]) -> String {
    let mut s = String::new();
    for (k, v) in pairs {
        let _ = writeln!(s, "{k}\t{v}");
    }
    s
}

fn execute(engine: &Engine, command: Command) -> crate::Result<Outcome> {
    match command {
        Command::Admits {
            lambda,
            mu,
            oracle_only,
        } => {
            let cases = exception_cases(&lambda, &mu)?;
            let admits = cases.is_empty();
            let mut result = json!({
                "lambda": lambda.to_string(),
                "mu": mu.to_string(),
                "admits": admits,
                "case_ids": cases,
            });
            let mut tsv = vec![
                ("lambda", lambda.to_string()),
                ("mu", mu.to_string()),
                ("admits", admits.to_string()),
                ("case_ids", case_list(&cases)),
            ];
            if !oracle_only {
                let m = multiplicity(engine, &lambda, &mu)?;
                let agree = admits != m.is_zero();
                result["multiplicity"] = json!(m.to_string());
                result["agree"] = json!(agree);
                tsv.push(("multiplicity", m.to_string()));
                tsv.push(("agree", agree.to_string()));
            }
            Ok(Outcome::ok(result, key_values(&tsv)))
        }
        Command::Fmu { mu } => {
            let f = frobenius_f(engine, &mu)?;
            let mut result = f.to_json();
            result["mu"] = json!(mu.to_string());
            Ok(Outcome::ok(result, f.to_tsv()))
        }
        Command::Exceptions { n } => {
            let records = exceptions_at(n, engine.bound())?;
            let mut tsv = String::from("n\tlambda\tmu\tcase_ids\n");
            let rows: Vec<Value> = records
                .iter()
                .map(|r| {
                    let _ = writeln!(tsv, "{n}\t{}\t{}\t{}", r.lambda, r.mu, case_list(&r.case_ids));
                    json!({ "lambda": r.lambda.to_string(), "mu": r.mu.to_string(), "case_ids": r.case_ids })
                })
                .collect();
            Ok(Outcome::ok(json!({ "n": n, "exceptions": rows }), tsv))
        }
        Command::Verify { max_n, jobs } => {
            if max_n > engine.bound() {
                return Err(Error::SizeBound {
                    size: max_n,
                    bound: engine.bound(),
                });
            }
            let report = with_jobs(jobs, || verify_main_theorem(engine, max_n))??;
            let disagreement = report.disagreements().next().map(|r| {
                format!(
                    "({}) under ({}): closed form says cases [{}], multiplicity {}",
                    r.lambda,
                    r.mu,
                    case_list(&r.case_ids),
                    r.multiplicity
                )
            });
            Ok(Outcome {
                result: report.to_json(),
                tsv: report.to_tsv(),
                disagreement,
            })
        }
        Command::Character { lambda, mu } => {
            let chi = engine.character(&lambda, &mu)?;
            let result = json!({ "lambda": lambda.to_string(), "mu": mu.to_string(), "value": chi.to_string() });
            let tsv = key_values(&[
                ("lambda", lambda.to_string()),
                ("mu", mu.to_string()),
                ("value", chi.to_string()),
            ]);
            Ok(Outcome::ok(result, tsv))
        }
        Command::Lr {
            outer,
            inner,
            weight,
            list,
        } => {
            let c = lr_coefficient(&outer, &inner, &weight);
            let mut result = json!({
                "outer": outer.to_string(),
                "inner": inner.to_string(),
                "weight": weight.to_string(),
                "coefficient": c.to_string(),
            });
            let mut tsv = key_values(&[("coefficient", c.to_string())]);
            if list {
                let tableaux = if c == 0 {
                    Vec::new()
                } else {
                    enumerate_lr_tableaux(&SkewShape::new(outer.clone(), inner.clone())?, &weight)?
                };
                let rows: Vec<String> = tableaux.iter().map(|t| t.to_string()).collect();
                for r in &rows {
                    let _ = writeln!(tsv, "tableau\t{r}");
                }
                result["tableaux"] = json!(rows);
            }
            Ok(Outcome::ok(result, tsv))
        }
        Command::Witness { lambda, p, q } => {
            let w = find_witness(&lambda, p, q)?;
            let (result, tsv) = match &w {
                Some(w) => (
                    json!({
                        "lambda": lambda.to_string(), "p": p, "q": q, "found": true,
                        "alpha": w.alpha.to_string(), "beta": w.beta.to_string(),
                        "certificate": w.certificate.to_string(),
                    }),
                    key_values(&[
                        ("found", "true".into()),
                        ("alpha", w.alpha.to_string()),
                        ("beta", w.beta.to_string()),
                        ("certificate", w.certificate.to_string()),
                    ]),
                ),
                None => (
                    json!({ "lambda": lambda.to_string(), "p": p, "q": q, "found": false }),
                    key_values(&[("found", "false".into())]),
                ),
            };
            Ok(Outcome::ok(result, tsv))
        }
        Command::Spectrum { lambda, mu } => {
            let profile = crate::eigenvalue_profile(engine, &lambda, &mu)?;
            let mut result = profile.to_json();
            result["lambda"] = json!(lambda.to_string());
            result["mu"] = json!(mu.to_string());
            result["compact"] = json!(profile.to_compact());
            let mut tsv = String::from("k\tmultiplicity\n");
            for (k, x) in profile.multiplicities().iter().enumerate() {
                let _ = writeln!(tsv, "{k}\t{x}");
            }
            Ok(Outcome::ok(result, tsv))
        }
        Command::Immersion { n, jobs } => {
            let report = with_jobs(jobs, || verify_immersion_theorem(engine, n))??;
            let disagreement = (!report.is_consistent()).then(|| format!("immersion check at n = {n} disagrees"));
            Ok(Outcome {
                result: report.to_json(),
                tsv: report.to_tsv(),
                disagreement,
            })
        }
    }
}
