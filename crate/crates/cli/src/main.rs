use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hornlearn::gd::gd_basis;
use hornlearn::horn::{closure, satisfies, separating_assignment};
use hornlearn::reduce::{lower_bound_demo, SmqPolicy};
use hornlearn::{format, Strategy};
use hornlearn_cli::{
    bench, learn, load_target, read_formula, trace_lines, write_csv, Algo, BenchPlan, CliError,
    SizeRange,
};

/// Exact learning of definite Horn formulas.
#[derive(Parser)]
#[command(name = "hornlearn", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the GD basis of a formula file.
    Gd { file: PathBuf },
    /// Print the closure of a variable set, e.g. `a,c` or "a c".
    Closure { file: PathBuf, varset: String },
    /// Exit 0 if the formulas are equivalent, 1 with a separating assignment
    /// otherwise.
    Equiv { file1: PathBuf, file2: PathBuf },
    /// Learn a target with one of the learner modes.
    Learn {
        #[arg(long)]
        algo: Algo,
        /// A formula file or a corpus name (gd-example, bullet-example).
        #[arg(long)]
        target: String,
        /// Counterexample strategy: first, random or minimal.
        #[arg(long, default_value = "first")]
        strategy: StrategyName,
        /// Seed for the random strategy.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print one line per counterexample handled.
        #[arg(long)]
        trace: bool,
    },
    /// Count queries over seeded random targets and write CSV.
    Bench {
        /// Comma-separated algorithm ids.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "clh,afp,clh-entail,afp-closure"
        )]
        algos: Vec<Algo>,
        /// Variables, inclusive: K, LO-HI or LO..=HI.
        #[arg(long, default_value = "3-10")]
        n_range: SizeRange,
        /// Implications generated per target, inclusive.
        #[arg(long, default_value = "1-8")]
        m_range: SizeRange,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "first")]
        strategy: StrategyName,
        /// Output file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the membership-query adversary and print queries against
    /// candidates remaining.
    Lowerbound {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PolicyName::Exhaustive)]
        policy: PolicyName,
        /// Seed for the shuffled policy.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyName {
    First,
    Random,
    Minimal,
}

impl StrategyName {
    fn with_seed(self, seed: u64) -> Strategy {
        match self {
            StrategyName::First => Strategy::First,
            StrategyName::Random => Strategy::Random(seed),
            StrategyName::Minimal => Strategy::Minimal,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyName {
    Exhaustive,
    TopFirst,
    Shuffled,
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, CliError> {
    let io_err = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    match cli.command {
        Command::Gd { file } => {
            let h = read_formula(&file)?;
            let gd = gd_basis(&h).with_names_of(&h);
            write!(out, "{}", format::serialize(&gd)).map_err(io_err)?;
        }
        Command::Closure { file, varset } => {
            let h = read_formula(&file)?;
            let start = format::parse_var_set(&h, &varset).map_err(|source| CliError::Parse {
                path: "<varset>".into(),
                source,
            })?;
            let closed = closure(&start, &h)?;
            let names: Vec<String> = closed.iter().map(|i| h.var_name(i)).collect();
            writeln!(out, "{}", names.join(" ")).map_err(io_err)?;
        }
        Command::Equiv { file1, file2 } => {
            let (h1, h2) = (read_formula(&file1)?, read_formula(&file2)?);
            if h1.var_names() != h2.var_names() {
                return Err(CliError::Usage(
                    "the files declare different variables".into(),
                ));
            }
            match separating_assignment(&h1, &h2)? {
                None => writeln!(out, "equivalent").map_err(io_err)?,
                Some(x) => {
                    let which = if satisfies(&x, &h1)? { &file1 } else { &file2 };
                    writeln!(out, "not equivalent").map_err(io_err)?;
                    writeln!(out, "{x} satisfies only {}", which.display()).map_err(io_err)?;
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Learn {
            algo,
            target,
            strategy,
            seed,
            trace,
        } => {
            let h = load_target(&target)?;
            let outcome = learn(algo, &h, strategy.with_seed(seed))?;
            if trace {
                for line in trace_lines(&outcome.report.trace) {
                    writeln!(out, "{line}").map_err(io_err)?;
                }
            }
            let learned = outcome.report.output.clone().with_names_of(&h);
            write!(out, "{}", format::serialize(&learned)).map_err(io_err)?;
            writeln!(out, "{}", outcome.stats).map_err(io_err)?;
            if !outcome.verified {
                eprintln!("self-check failed: the output is not equivalent to the target");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench {
            algos,
            n_range,
            m_range,
            trials,
            seed,
            strategy,
            out: path,
        } => {
            let plan = BenchPlan {
                algos,
                n: n_range,
                m: m_range,
                trials,
                seed,
                strategy: strategy.with_seed(seed),
            };
            let rows = bench(&plan)?;
            let written = match &path {
                Some(p) => {
                    let file = std::fs::File::create(p).map_err(|source| CliError::Io {
                        path: p.display().to_string(),
                        source,
                    })?;
                    write_csv(&rows, file)
                }
                None => write_csv(&rows, &mut *out),
            };
            written.map_err(|e| CliError::Usage(format!("writing CSV: {e}")))?;
        }
        Command::Lowerbound { n, policy, seed } => {
            let policy = match policy {
                PolicyName::Exhaustive => SmqPolicy::Exhaustive,
                PolicyName::TopFirst => SmqPolicy::TopFirst,
                PolicyName::Shuffled => SmqPolicy::Shuffled(seed),
            };
            let report = lower_bound_demo(n, policy)?;
            writeln!(out, "queries remaining").map_err(io_err)?;
            writeln!(out, "0 {}", report.initial_candidates).map_err(io_err)?;
            for (q, rem) in &report.steps {
                writeln!(out, "{q} {rem}").map_err(io_err)?;
            }
            match (&report.determined_after, &report.closure) {
                (Some(q), Some(c)) => {
                    writeln!(out, "determined after {q} queries: closure of 0^{n} is {c}")
                        .map_err(io_err)?
                }
                _ => writeln!(out, "not determined").map_err(io_err)?,
            }
            if !report.invariant_held {
                eprintln!("adversary invariant violated");
                return Ok(ExitCode::from(1));
            }
            writeln!(out, "invariant held at every step").map_err(io_err)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
