use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use idempotent::sample::{sample_interval, sample_scalar};
use idempotent::{
    check_axioms, integrate_against, Error, FiniteSFunction, FuzzySet, GraphProblem,
    IdempotentMeasure, IntervalSemiring, Method, Query, ScalarRing,
};
use idempotent_cli::{error_document, exit_code, run_problem, EntryJson, SolveOptions};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "idempotent", version, about = "Algebraic path problems over idempotent semirings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a path problem on a weighted graph.
    Solve {
        #[arg(long)]
        ring: ScalarRing,
        /// closure, dist:<src> or bellman
        #[arg(long, default_value = "closure")]
        query: Query,
        #[arg(long, default_value = "star")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Iteration cap for jacobi and gauss-seidel (default: node count).
        #[arg(long)]
        max_iter: Option<usize>,
        /// Right-hand side matrix F for --query bellman.
        #[arg(long)]
        rhs: Option<PathBuf>,
        /// Include wall-clock time in the output.
        #[arg(long)]
        timing: bool,
        /// Edge list or JSON graph.
        input: PathBuf,
    },
    /// Check the semiring axioms on random samples.
    CheckAxioms {
        #[arg(long)]
        ring: ScalarRing,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Check the interval extension I(S) instead of S.
        #[arg(long)]
        interval: bool,
        #[arg(long, env = "IDEMPOTENT_SEED")]
        seed: Option<u64>,
    },
    /// Idempotent integral of a function, optionally against a density.
    Integrate {
        #[arg(long)]
        ring: ScalarRing,
        /// Function literal, e.g. "a:1 b:5 c:inf".
        function: String,
        #[arg(long)]
        density: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Operations on fuzzy sets given as membership literals.
    Fuzzy {
        #[arg(long)]
        ring: ScalarRing,
        #[arg(value_enum)]
        op: FuzzyOp,
        /// First set.
        a: String,
        /// Second set, or the possibility distribution.
        b: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FuzzyOp {
    Union,
    Intersect,
    Possibility,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = matches!(
        &cli.command,
        Command::Solve { format: Format::Json, .. }
            | Command::Integrate { format: Format::Json, .. }
            | Command::Fuzzy { format: Format::Json, .. }
    );
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&error_document(&err)).unwrap());
            } else {
                eprintln!("error: {err}");
            }
            ExitCode::from(exit_code(&err) as u8)
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Solve {
            ring,
            query,
            method,
            format,
            max_iter,
            rhs,
            timing,
            input,
        } => {
            let problem = GraphProblem::parse(&read(&input)?, ring, query)?;
            let opts = SolveOptions {
                method,
                max_iter,
                rhs: rhs.as_ref().map(read).transpose()?,
                timing,
            };
            let doc = run_problem(&problem, &opts)?;
            match format {
                Format::Json => print!("{}", doc.to_json()),
                Format::Text => print!("{}", doc.to_text()),
            }
            Ok(0)
        }
        Command::CheckAxioms {
            ring,
            trials,
            interval,
            seed,
        } => {
            let seed = seed.unwrap_or_else(|| rand::rng().random());
            let mut rng = StdRng::seed_from_u64(seed);
            let report = if interval {
                let iring = IntervalSemiring::new(ring)?;
                let sampler = |r: &mut StdRng| sample_interval(&iring, r, |r| sample_scalar(ring, r));
                check_axioms(&iring, sampler, &mut rng, trials)
            } else {
                check_axioms(&ring, |r: &mut StdRng| sample_scalar(ring, r), &mut rng, trials)
            };
            println!("seed: {seed}");
            print!("{report}");
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Integrate {
            ring,
            function,
            density,
            format,
        } => {
            let phi = FiniteSFunction::parse(ring, &function)?;
            let value = match density {
                Some(d) => {
                    let m = IdempotentMeasure::new(FiniteSFunction::parse(ring, &d)?);
                    integrate_against(&phi, &m)?
                }
                None => phi.integrate(),
            };
            match format {
                Format::Json => println!("{}", json!({"ring": ring.to_string(), "value": ring.entry_json(&value)})),
                Format::Text => println!("{}", idempotent::semiring::format_scalar(value)),
            }
            Ok(0)
        }
        Command::Fuzzy {
            ring,
            op,
            a,
            b,
            format,
        } => {
            let fa = FiniteSFunction::parse(ring, &a)?;
            let fb = FiniteSFunction::parse(ring, &b)?;
            let universe = idempotent::fuzzy::universe(fa.support().chain(fb.support()));
            let sa = FuzzySet::new(universe.clone(), fa)?;
            let op_name = FuzzyOp::to_possible_value(&op).expect("no skipped variants").get_name().to_string();
            let (text, value) = match op {
                FuzzyOp::Union | FuzzyOp::Intersect => {
                    let sb = FuzzySet::new(universe, fb)?;
                    let r = if matches!(op, FuzzyOp::Union) {
                        sa.union(&sb)?
                    } else {
                        sa.intersection(&sb)?
                    };
                    let grades: Map<String, Value> = r
                        .membership()
                        .iter()
                        .map(|(p, g)| (p.to_string(), ring.entry_json(g)))
                        .collect();
                    (r.membership().to_string(), json!({"ring": ring.to_string(), "op": op_name, "result": grades}))
                }
                FuzzyOp::Possibility => {
                    let v = sa.possibility(&IdempotentMeasure::new(fb))?;
                    (
                        idempotent::semiring::format_scalar(v),
                        json!({"ring": ring.to_string(), "op": op_name, "value": ring.entry_json(&v)}),
                    )
                }
            };
            match format {
                Format::Json => println!("{value}"),
                Format::Text => println!("{text}"),
            }
            Ok(0)
        }
    }
}
