use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use orthoinv::eval::{self, MatrixTuple, SweepConfig};
use orthoinv::expansion::{amitsur_expand, newton_traces, power_expand};
use orthoinv::generators::{self, AnalysisConfig};
use orthoinv::quiver::{sigma_tr, sigma_tr_subst};
use orthoinv::syntax::{parse_arg, parse_arg_list, parse_expr, GRAMMAR_HELP};
use orthoinv::{normalize, Alphabet, Error, Field, LinWord, Scalar};

/// Orthogonal matrix invariants: normal forms, relations, generators.
#[derive(Parser)]
#[command(name = "orthoinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a σ-expression.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value = "q")]
        field: Field,
    },
    /// σ_t(A_1 + ... + A_p) in terms of σ of products.
    Amitsur {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        p: usize,
    },
    /// σ_t(A^l) in terms of σ_1(A), ..., σ_{tl}(A).
    Power {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        l: usize,
    },
    /// σ_t(A) in terms of traces of powers.
    Newton {
        #[arg(long)]
        t: usize,
        #[arg(long, default_value = "q")]
        field: Field,
    },
    /// The relation σ_{t,r}(x, y, z), optionally after substitution.
    Sigmatr {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        r: usize,
        /// Three comma-separated arguments over x1, x2, ...
        #[arg(long)]
        subst: Option<String>,
        #[arg(long, default_value = "q")]
        field: Field,
    },
    /// Evaluates an expression on a matrix tuple read from JSON.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        matrices: String,
        /// Also evaluate the expression directly and fail on disagreement.
        #[arg(long)]
        check: bool,
        /// Fail unless the value is zero.
        #[arg(long)]
        expect_zero: bool,
    },
    /// Checks that σ_{t,r}(a, b, c) vanishes on n x n matrices whenever
    /// n < t + 2r <= n + max-excess.
    VerifyRelations {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        max_excess: usize,
        #[arg(long, default_value_t = 2)]
        word_len: usize,
        #[arg(long, default_value_t = 2)]
        d: u32,
        #[arg(long, default_value_t = eval::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "q")]
        field: Field,
        /// Additional linear combination tried for `a`, e.g. "x1+x2".
        #[arg(long)]
        extra: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Counts new generators per degree for n x n orthogonal invariants.
    AnalyzeGenerators {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        max_deg: usize,
        #[arg(long, default_value = "q")]
        field: Field,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exact rational arithmetic with Bareiss-certified ranks (small cases).
        #[arg(long)]
        exact: bool,
        /// Write the ledger as JSON to this file.
        #[arg(long)]
        json: Option<String>,
    },
}

enum Failure {
    Parse(String),
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn linwords(src: &str, field: Field) -> Result<Vec<LinWord>, Failure> {
    let (args, _) = parse_arg_list(src)?;
    Ok(args.iter().map(|a| a.to_linword(field)).collect::<orthoinv::Result<_>>()?)
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Normalize { expr, field } => {
            let (e, alphabet) = parse_expr(&expr)?;
            println!("{}", normalize(&e, field)?.display(alphabet));
        }
        Command::Amitsur { t, p } => {
            if t == 0 || p == 0 {
                return Err(Failure::Usage("--t and --p must be positive".into()));
            }
            println!("{}", amitsur_expand(t, p).display(Alphabet::Symbol));
        }
        Command::Power { t, l } => {
            if t == 0 || l == 0 {
                return Err(Failure::Usage("--t and --l must be positive".into()));
            }
            println!("{}", power_expand(t, l).display(Alphabet::SingleSymbol));
        }
        Command::Newton { t, field } => {
            if t == 0 {
                return Err(Failure::Usage("--t must be positive".into()));
            }
            println!("{}", newton_traces(t, field)?.display(Alphabet::SingleSymbol));
        }
        Command::Sigmatr { t, r, subst, field } => match subst {
            None => println!("{}", sigma_tr(t, r).coerce(field)?.display(Alphabet::Quiver)),
            Some(s) => {
                let args = linwords(&s, field)?;
                let [a, b, c] = args.as_slice() else {
                    return Err(Failure::Usage(format!("--subst needs three arguments, got {}", args.len())));
                };
                println!("{}", sigma_tr_subst(t, r, a, b, c)?.display(Alphabet::Indexed));
            }
        },
        Command::Eval { expr, matrices, check, expect_zero } => {
            let src = fs::read_to_string(&matrices).map_err(|e| Failure::Usage(format!("{matrices}: {e}")))?;
            let tuple = MatrixTuple::from_json(&src)?;
            let (e, _) = parse_expr(&expr)?;
            let value = eval::eval_poly(&normalize(&e, tuple.field())?, &tuple)?;
            println!("{value}");
            if check {
                let direct = eval::eval_direct(&e, &tuple)?;
                if direct != value {
                    return Err(Failure::Verification(format!("direct evaluation gives {direct}")));
                }
            }
            if expect_zero && !value.is_zero() {
                return Err(Failure::Verification(format!("expected zero, got {value}")));
            }
        }
        Command::VerifyRelations { n, max_excess, word_len, d, samples, seed, field, extra, json } => {
            if n == 0 || d == 0 || word_len == 0 || samples == 0 {
                return Err(Failure::Usage("--n, --d, --word-len and --samples must be positive".into()));
            }
            let extra_a = extra
                .iter()
                .map(|s| parse_arg(s).map_err(Failure::from).and_then(|(a, _)| Ok(a.to_linword(field)?)))
                .collect::<Result<Vec<_>, _>>()?;
            let cfg = SweepConfig { n, max_excess, word_len, d, samples, seed, field, extra_a };
            let report = eval::sweep_relations(&cfg)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!(
                    "n={n} field={field} seed={seed} pairs={:?} cases={} samples={} failures={} elapsed={:.2}s",
                    report.pairs,
                    report.cases,
                    report.samples,
                    report.failures.len(),
                    report.elapsed.as_secs_f64()
                );
                for f in &report.failures {
                    let w = f.witness.as_ref().expect("failures carry a witness");
                    println!(
                        "FAIL t={} r={} a={} b={} c={} zeros={}/{} witness seed={} value={}",
                        f.t, f.r, f.a, f.b, f.c, f.zero_count, samples, w.seed, w.value
                    );
                }
            }
            if !report.failures.is_empty() {
                return Err(Failure::Verification(format!("{} relation(s) did not vanish", report.failures.len())));
            }
        }
        Command::AnalyzeGenerators { n, d, max_deg, field, samples, seed, exact, json } => {
            let cfg = AnalysisConfig { n, d, max_deg, field, samples, seed, exact };
            let (_, text, js) = generators::dmax_report(&cfg)?;
            print!("{text}");
            if let Some(path) = json {
                fs::write(&path, js).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}\n\n{GRAMMAR_HELP}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
