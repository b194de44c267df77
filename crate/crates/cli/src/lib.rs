//! Building blocks of the `hornlearn` command: target loading, learner
//! modes, benchmark rows and range arguments.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use hornlearn::gd::gd_basis;
use hornlearn::horn::equivalent;
use hornlearn::learn::{afp, clh, LearnerReport, TraceEvent};
use hornlearn::oracle::Oracle;
use hornlearn::reduce::{ClosureAdapter, EntailmentAdapter};
use hornlearn::{
    corpus, format, random_formula, GenConfig, HornFormula, QueryStats, Strategy, Teacher,
};
use rayon::prelude::*;
use serde::Serialize;

/// Failures that end a command with exit code 2.
#[derive(Debug)]
pub enum CliError {
    Io {
        path: String,
        source: std::io::Error,
    },
    Parse {
        path: String,
        source: hornlearn::Error,
    },
    Usage(String),
    Library(hornlearn::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
            CliError::Parse { path, source } => write!(f, "{path}: {source}"),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Library(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<hornlearn::Error> for CliError {
    fn from(e: hornlearn::Error) -> Self {
        CliError::Library(e)
    }
}

pub fn read_formula(path: &Path) -> Result<HornFormula, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    format::parse(&text).map_err(|source| CliError::Parse {
        path: shown,
        source,
    })
}

/// A file path if one exists under that name, otherwise a corpus entry.
pub fn load_target(spec: &str) -> Result<HornFormula, CliError> {
    let path = Path::new(spec);
    if path.exists() {
        return read_formula(path);
    }
    corpus::get(spec).map_err(|_| {
        CliError::Usage(format!(
            "`{spec}` is neither a readable file nor a corpus entry ({})",
            corpus::NAMES.join(", ")
        ))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algo {
    Clh,
    Afp,
    /// ClH with closure and equivalence queries simulated by entailment
    /// queries.
    ClhEntail,
    /// AFP with membership queries simulated by closure queries.
    AfpClosure,
}

impl Algo {
    pub const ALL: [Algo; 4] = [Algo::Clh, Algo::Afp, Algo::ClhEntail, Algo::AfpClosure];

    pub fn id(self) -> &'static str {
        match self {
            Algo::Clh => "clh",
            Algo::Afp => "afp",
            Algo::ClhEntail => "clh-entail",
            Algo::AfpClosure => "afp-closure",
        }
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Algo::ALL.into_iter().find(|a| a.id() == s).ok_or_else(|| {
            format!("unknown algorithm `{s}` (expected clh, afp, clh-entail or afp-closure)")
        })
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone)]
pub struct LearnOutcome {
    pub report: LearnerReport,
    /// Counters of the genuine teacher, in the protocol it actually served.
    pub stats: QueryStats,
    /// Whether the output is equivalent to the target.
    pub verified: bool,
}

/// Runs `algo` against a fresh teacher for `target`.
pub fn learn(
    algo: Algo,
    target: &HornFormula,
    strategy: Strategy,
) -> Result<LearnOutcome, CliError> {
    let teacher = Teacher::with_strategy(target.clone(), strategy);
    let (report, stats) = match algo {
        Algo::Clh => {
            let mut t = teacher;
            let r = clh(&mut t)?;
            (r, t.stats())
        }
        Algo::Afp => {
            let mut t = teacher;
            let r = afp(&mut t)?;
            (r, t.stats())
        }
        Algo::ClhEntail => {
            let mut t = EntailmentAdapter::new(teacher);
            let r = clh(&mut t)?;
            (r, t.stats())
        }
        Algo::AfpClosure => {
            let mut t = ClosureAdapter::new(teacher);
            let r = afp(&mut t)?;
            (r, t.stats())
        }
    };
    let verified = equivalent(&report.output, target)?;
    Ok(LearnOutcome {
        report,
        stats,
        verified,
    })
}

/// One line per trace event, assignments as bit strings.
pub fn trace_lines(trace: &[TraceEvent]) -> Vec<String> {
    trace
        .iter()
        .map(|ev| match ev {
            TraceEvent::Append { counterexample } => format!("append {counterexample}"),
            TraceEvent::Refine {
                index,
                counterexample,
            } => format!("refine {index} {counterexample}"),
            TraceEvent::Positive { counterexample } => format!("positive {counterexample}"),
        })
        .collect()
}

/// An inclusive range written `K`, `LO-HI` or `LO..=HI`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for SizeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("bad range `{s}` (expected K, LO-HI or LO..=HI)");
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
            (num(a)?, num(b)?)
        } else if let Some((a, b)) = s.split_once('-') {
            (num(a)?, num(b)?)
        } else {
            let k = num(s)?;
            (k, k)
        };
        if lo > hi {
            return Err(bad());
        }
        Ok(SizeRange { lo, hi })
    }
}

impl SizeRange {
    pub fn values(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

/// One benchmark run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub algo: &'static str,
    pub n: usize,
    /// Size of the target's GD basis.
    pub m: usize,
    /// Seed of the generated target.
    pub seed: u64,
    pub seq: u64,
    pub cq: u64,
    pub smq: u64,
    pub emq: u64,
    pub eeq: u64,
    pub wall_us: u64,
}

#[derive(Debug, Clone)]
pub struct BenchPlan {
    pub algos: Vec<Algo>,
    pub n: SizeRange,
    /// Implications in the generated target, before reduction.
    pub m: SizeRange,
    pub trials: usize,
    pub seed: u64,
    pub strategy: Strategy,
}

/// Seed of trial `trial` at size `(n, m)`; every algorithm sees the same
/// target.
pub fn target_seed(base: u64, n: usize, m: usize, trial: usize) -> u64 {
    base.wrapping_mul(1_000_003)
        .wrapping_add((n as u64) << 40 | (m as u64) << 20 | trial as u64)
}

/// Runs the plan, trials in parallel, rows in plan order: algorithm, then
/// `n`, then `m`, then trial.
pub fn bench(plan: &BenchPlan) -> Result<Vec<BenchRow>, CliError> {
    if plan.n.lo == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let mut jobs = Vec::new();
    for &algo in &plan.algos {
        for n in plan.n.values() {
            for m in plan.m.values() {
                for trial in 0..plan.trials {
                    jobs.push((algo, n, m, target_seed(plan.seed, n, m, trial)));
                }
            }
        }
    }
    jobs.into_par_iter()
        .map(|(algo, n, m, seed)| {
            let target = random_formula(&GenConfig::standard(n, m, seed))?;
            let start = Instant::now();
            let outcome = learn(algo, &target, plan.strategy)?;
            let wall_us = start.elapsed().as_micros() as u64;
            if !outcome.verified {
                return Err(CliError::Usage(format!(
                    "{algo} produced an inequivalent formula for seed {seed}"
                )));
            }
            let s = outcome.stats;
            Ok(BenchRow {
                algo: algo.id(),
                n,
                m: gd_basis(&target).len(),
                seed,
                seq: s.seq,
                cq: s.cq,
                smq: s.smq,
                emq: s.emq,
                eeq: s.eeq,
                wall_us,
            })
        })
        .collect()
}

pub fn write_csv<W: std::io::Write>(rows: &[BenchRow], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
