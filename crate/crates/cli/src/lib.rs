//! Command-line front end for `maxplus`.
//!
//! [`run`] parses arguments, executes one subcommand and writes to the given
//! streams; the binary is a thin wrapper around it.

pub mod document;

use std::collections::BTreeSet;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use maxplus::graph::{build_digraph, enumerate_nonneg_elementary_cycles, max_cycle_mean};
use maxplus::oracle::{
    alg4_generators, double_description, extremal_filter, GeneratorSet, GeneratorSource,
    TwoSidedSystem,
};
use maxplus::supereig::{alg3_generators, in_supereig, scaled_basis, ReferenceOracle, Stats};
use maxplus::vector::in_span;
use maxplus::{Config, Error, ExtReal, MpMatrix, MpVector, ScaledBasis};

pub use document::{parse_matrix, MatrixDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "supereig",
    version,
    about = "Scaled bases of max-plus supereigenvector spaces {x : A ⊗ x ≥ x}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Cycle and path walks with extremality filtering.
    Extremal,
    /// Cycle/path generating set followed by extremal filtering.
    Wang2020,
    /// Tropical double description followed by extremal filtering.
    Dd,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Matrix file, or `-` for standard input.
    file: String,
    /// Solve `A ⊗ x ≥ L ⊗ x` instead of `A ⊗ x ≥ x`.
    #[arg(long, value_name = "L", allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Abort when more elementary cycles or J-paths than this are found.
    #[arg(long, value_name = "K", default_value_t = maxplus::graph::DEFAULT_MAX_CYCLES)]
    max_cycles: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the scaled basis, one vector per line.
    Basis {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "extremal")]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Print the scaled, deduplicated generating set before extremal filtering.
    Generators {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "extremal")]
        method: Method,
    },
    /// Print the maximum cycle mean.
    Lambda {
        #[command(flatten)]
        common: Common,
    },
    /// List nonnegative elementary cycles as `nodes : weight`.
    Cycles {
        #[command(flatten)]
        common: Common,
    },
    /// Test one vector for membership and extremality.
    Check {
        #[command(flatten)]
        common: Common,
        /// Whitespace-separated entries.
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Run all three methods and compare their bases.
    Verify {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the command line `args` (including the program name).
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin, out, err) {
        Ok(code) => code,
        Err(Failure::Lib(e @ Error::ResourceLimit { .. })) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_RESOURCE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn load(common: &Common, stdin: &mut dyn Read) -> Result<(MatrixDocument, Config), Failure> {
    let text = if common.file == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(&common.file)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", common.file)))?
    };
    let mut doc = parse_matrix(&text)?;
    if let Some(l) = &common.lambda {
        doc.lambda_shift = Some(
            document::parse_finite(l, 0, 0)
                .map_err(|_| Failure::Usage(format!("--lambda expects a finite value, got `{l}`")))?,
        );
    }
    let config = Config {
        max_cycles: common.max_cycles,
        ..Config::default()
    };
    Ok((doc, config))
}

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::Basis {
            common,
            method,
            json,
        } => {
            let (doc, config) = load(&common, stdin)?;
            let a = doc.reduced();
            let outcome = compute_basis(&a, method, &config)?;
            if !outcome.solvable() {
                writeln!(
                    err,
                    "note: λ(A) = {} < 0, the system has no nonzero solutions",
                    outcome.lambda
                )?;
            }
            if json {
                let value = basis_json(a.n(), &outcome);
                writeln!(out, "{}", serde_json::to_string(&value).expect("json"))?;
            } else {
                write_vectors(out, outcome.basis.iter())?;
            }
            Ok(EXIT_OK)
        }
        Command::Generators { common, method } => {
            let (doc, config) = load(&common, stdin)?;
            let a = doc.reduced();
            let set = match method {
                Method::Extremal => alg3_generators(&a, &config)?.basis,
                Method::Wang2020 => alg4_generators(&a, &config)?.scaled()?,
                Method::Dd => double_description(&TwoSidedSystem::supereigen(&a)?)?.scaled()?,
            };
            write_vectors(out, set.iter())?;
            Ok(EXIT_OK)
        }
        Command::Lambda { common } => {
            let (doc, _) = load(&common, stdin)?;
            writeln!(out, "{}", max_cycle_mean(&doc.reduced())?)?;
            Ok(EXIT_OK)
        }
        Command::Cycles { common } => {
            let (doc, config) = load(&common, stdin)?;
            let graph = build_digraph(&doc.reduced())?;
            for c in enumerate_nonneg_elementary_cycles(&graph, config.max_cycles)? {
                let nodes: Vec<String> = c.nodes().iter().map(|v| (v + 1).to_string()).collect();
                writeln!(out, "{} : {}", nodes.join(" "), ExtReal::Finite(c.weight().clone()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Check { common, vector } => {
            let (doc, config) = load(&common, stdin)?;
            let a = doc.reduced();
            let v = parse_vector(&vector)?;
            if v.len() != a.n() {
                return Err(Failure::Usage(format!(
                    "vector has {} entries, matrix is {}x{}",
                    v.len(),
                    a.n(),
                    a.n()
                )));
            }
            let member = in_supereig(&a, &v)?;
            let extremal = member && {
                let oracle = ReferenceOracle::new(&a, &config)?;
                maxplus::supereig::is_extremal_ref(&a, &v, oracle.generators())?
            };
            writeln!(out, "{}", if member { "member" } else { "nonmember" })?;
            writeln!(out, "{}", if extremal { "extremal" } else { "nonextremal" })?;
            Ok(EXIT_OK)
        }
        Command::Verify { common } => {
            let (doc, config) = load(&common, stdin)?;
            verify(&doc.reduced(), &config, out)
        }
    }
}

fn parse_vector(text: &str) -> Result<MpVector, Failure> {
    let entries = text
        .split_whitespace()
        .map(|t| {
            t.parse::<ExtReal>()
                .map_err(|e| Failure::Usage(format!("--vector: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if entries.is_empty() {
        return Err(Failure::Usage("--vector is empty".into()));
    }
    Ok(MpVector::new(entries))
}

fn write_vectors<'a>(out: &mut dyn Write, vectors: impl Iterator<Item = &'a MpVector>) -> io::Result<()> {
    for v in vectors {
        writeln!(out, "{v}")?;
    }
    Ok(())
}

/// Basis from one method plus the counters reported with `--json`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisOutcome {
    pub lambda: ExtReal,
    pub basis: ScaledBasis,
    pub stats: Stats,
}

impl BasisOutcome {
    pub fn solvable(&self) -> bool {
        self.lambda >= ExtReal::zero()
    }
}

fn generator_stats(set: &GeneratorSet) -> Result<Stats, Error> {
    let mut cycles = BTreeSet::new();
    let mut paths = BTreeSet::new();
    for (_, source) in set.iter() {
        match source {
            GeneratorSource::Cycle { cycle, .. } => {
                cycles.insert(cycle.clone());
            }
            GeneratorSource::Path { cycle, path, .. } => {
                paths.insert((cycle.clone(), path.clone()));
            }
            GeneratorSource::DoubleDescription => {}
        }
    }
    let distinct = set.scaled()?.len();
    Ok(Stats {
        cycles: cycles.len(),
        paths: paths.len(),
        candidates: set.len(),
        duplicates: set.len() - distinct,
    })
}

pub fn compute_basis(a: &MpMatrix, method: Method, config: &Config) -> Result<BasisOutcome, Error> {
    let lambda = max_cycle_mean(a)?;
    match method {
        Method::Extremal => {
            let report = scaled_basis(a, config)?;
            Ok(BasisOutcome {
                lambda: report.lambda,
                basis: report.basis,
                stats: report.stats,
            })
        }
        Method::Wang2020 => {
            let set = alg4_generators(a, config)?;
            Ok(BasisOutcome {
                lambda,
                basis: extremal_filter(&set)?,
                stats: generator_stats(&set)?,
            })
        }
        Method::Dd => {
            let set = double_description(&TwoSidedSystem::supereigen(a)?)?;
            Ok(BasisOutcome {
                lambda,
                basis: extremal_filter(&set)?,
                stats: generator_stats(&set)?,
            })
        }
    }
}

fn entry_json(x: &ExtReal) -> Value {
    match x {
        ExtReal::NegInf => Value::Null,
        finite => Value::String(finite.to_string()),
    }
}

pub fn basis_json(n: usize, outcome: &BasisOutcome) -> Value {
    let basis: Vec<Value> = outcome
        .basis
        .iter()
        .map(|v| Value::Array(v.entries().iter().map(entry_json).collect()))
        .collect();
    json!({
        "n": n,
        "lambda": outcome.lambda.to_string(),
        "solvable": outcome.solvable(),
        "basis": basis,
        "stats": {
            "cycles": outcome.stats.cycles,
            "paths": outcome.stats.paths,
            "candidates": outcome.stats.candidates,
            "duplicates": outcome.stats.duplicates,
        },
    })
}

fn verify(a: &MpMatrix, config: &Config, out: &mut dyn Write) -> CmdResult {
    let extremal = compute_basis(a, Method::Extremal, config)?;
    let wang = compute_basis(a, Method::Wang2020, config)?;
    let dd = compute_basis(a, Method::Dd, config)?;
    let mut problems = Vec::new();
    if extremal.basis != wang.basis {
        problems.push(format!(
            "extremal ({}) differs from wang2020 ({})",
            extremal.basis.len(),
            wang.basis.len()
        ));
    }
    if extremal.basis != dd.basis {
        problems.push(format!(
            "extremal ({}) differs from dd ({})",
            extremal.basis.len(),
            dd.basis.len()
        ));
    }
    for g in alg4_generators(a, config)?.vectors() {
        if !in_span(&g.scaled()?, extremal.basis.iter())? {
            problems.push(format!("generator {g} is not spanned by the basis"));
        }
    }
    if problems.is_empty() {
        writeln!(out, "OK: 3 methods agree, |basis|={}", extremal.basis.len())?;
        Ok(EXIT_OK)
    } else {
        for p in &problems {
            writeln!(out, "MISMATCH: {p}")?;
        }
        Ok(EXIT_MISMATCH)
    }
}
