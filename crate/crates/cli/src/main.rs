//! Command-line front end. Every run writes one JSON document that embeds
//! the resolved configuration and a `passed` verdict.
//!
//! Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error.

mod commands;
mod parse;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug, Serialize)]
#[command(
    name = "hypmat",
    version,
    about = "Hyperbolic matroid verification toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    #[serde(flatten)]
    pub command: Command,

    #[command(flatten)]
    #[serde(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Args, Debug, Serialize, Clone)]
pub struct GlobalOpts {
    /// RNG seed, decimal or 0x-prefixed hex.
    #[arg(long, global = true, default_value = "0xC0FFEE", value_parser = parse::seed)]
    pub seed: u64,
    /// Probe trials.
    #[arg(long, global = true, default_value_t = 256)]
    pub trials: usize,
    /// Sample count for inequality sampling and cone inclusion.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub samples: usize,
    /// Relative tolerance on imaginary parts (numeric paths only).
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// The run passes only if a violation or refutation is found.
    #[arg(long, global = true)]
    pub expect_violation: bool,
    /// Write the JSON document here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub json_out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize, Clone)]
pub struct HypergraphArg {
    /// Hypergraph JSON: {"n": .., "d": .., "edges": [[..], ..]}, 1-based.
    #[arg(long, value_name = "PATH")]
    pub hypergraph: PathBuf,
}

#[derive(Args, Debug, Serialize, Clone)]
pub struct PolyArgs {
    /// Polynomial JSON: {"arity": n, "terms": [{"exp": [..], "coef": "p/q"}, ..]}.
    #[arg(long, value_name = "PATH")]
    pub poly: PathBuf,
    /// Hyperbolicity direction e, comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub direction: String,
    /// The point x, comma-separated; decimals are read exactly.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyArg {
    Bases,
    Circuits,
    Hyperplanes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityArg {
    Ingleton,
    Dfz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectMinor {
    Present,
    Absent,
}

#[derive(Args, Debug, Serialize, Clone)]
pub struct RankIneqArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub input: HypergraphArg,
    /// Sets separated by ';', elements by ','; i' means i + n.
    #[arg(long, conflicts_with = "search")]
    pub sets: Option<String>,
    /// Search for violating tuples (the default when --sets is absent).
    #[arg(long)]
    pub search: bool,
    /// Search sets of the form S ∪ S' with |S| <= this, instead of single pairs.
    #[arg(long)]
    pub max_pairs: Option<usize>,
    /// Largest number of witnesses listed in the output.
    #[arg(long, default_value_t = 20)]
    pub limit: usize,
}

#[derive(Subcommand, Debug, Serialize, Clone)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Bases and non-bases of V_H.
    BuildMatroid(HypergraphArg),
    /// Rank of a subset of the ground set of V_H.
    Rank {
        #[command(flatten)]
        #[serde(flatten)]
        input: HypergraphArg,
        /// Elements, 1-based; i' means i + n.
        #[arg(long)]
        set: String,
        /// Read --set as vertices S and report rank(S ∪ S').
        #[arg(long)]
        paired: bool,
    },
    /// Bases, circuits or hyperplanes of V_H.
    Enumerate {
        #[command(flatten)]
        #[serde(flatten)]
        input: HypergraphArg,
        #[arg(long, value_enum)]
        family: FamilyArg,
    },
    /// Basis exchange, the hyperplane partition and the polymatroid axioms.
    VerifyAxioms(HypergraphArg),
    /// Ingleton's inequality on V_H.
    Ingleton(RankIneqArgs),
    /// The DFZ inequality on V_H.
    Dfz(RankIneqArgs),
    /// All violations of a rank inequality within a search scope.
    SearchViolations {
        #[command(flatten)]
        #[serde(flatten)]
        input: HypergraphArg,
        #[arg(long, value_enum)]
        inequality: InequalityArg,
        #[arg(long)]
        max_pairs: Option<usize>,
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
    /// Whether V_H has a minor isomorphic to a target (default: the Vámos matroid).
    Minors {
        #[command(flatten)]
        #[serde(flatten)]
        input: HypergraphArg,
        /// Target hypergraph; the minor sought is V_target.
        #[arg(long, value_name = "PATH")]
        target: Option<PathBuf>,
        /// Fail unless the minor is present or absent.
        #[arg(long, value_enum)]
        expect: Option<ExpectMinor>,
    },
    /// Bases-generating polynomial of V_H (enumeration checked against the closed form).
    BasesPoly(HypergraphArg),
    /// The diagonal polynomial f and the weighted polynomial W.
    WPoly(HypergraphArg),
    /// Polarized witness for the weak half-plane property, with a stability probe.
    WhppWitness(HypergraphArg),
    /// Restriction of the bases polynomial to the line x1 = x1' = t, x2 = x2' = x3 = x3' = -2.
    HppFalsify {
        /// Hypergraph to test; default: the complete 3-uniform hypergraph on 6 vertices.
        #[arg(long, value_name = "PATH")]
        hypergraph: Option<PathBuf>,
    },
    /// The hypergraph H_{n,k} and the bases polynomial of V_{H_{n,k}}.
    BuildHnk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// h_{2,2} against the reference form, Kummer's q, probes and cone inclusion.
    Kummer,
    /// Ingleton ranks for A = Z+{n+1}, B = Z+{n+2}, C = Z+{x}, D = Z+{y} on V_{H_{n,k}}.
    CounterexRanks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// k - 2 vertices, comma-separated (default 1, ..., k-2).
        #[arg(long)]
        z: Option<String>,
        /// Default k - 1.
        #[arg(long)]
        x: Option<usize>,
        /// Default k.
        #[arg(long)]
        y: Option<usize>,
    },
    /// Exact check of the symmetric-function identities.
    CheckIdentities {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        /// One identity (jensen, boost, tsos_constant, doubled_elementary); default all that apply.
        #[arg(long)]
        identity: Option<String>,
    },
    /// Sampled minimum of an inequality gap.
    InequalitySample {
        /// laguerre_turan, newton, turan_refined or eng.
        #[arg(long)]
        inequality: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Stability probe, or a hyperbolicity probe when --direction is given.
    Probe {
        #[arg(long, value_name = "PATH")]
        poly: PathBuf,
        /// Hyperbolicity direction e, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        direction: Option<String>,
    },
    /// Hyperbolic eigenvalues of x with respect to e.
    Eigenvalues(PolyArgs),
    /// Position of x relative to the hyperbolicity cone.
    ConeMember(PolyArgs),
    /// Jordan-algebra points against a target matroid.
    JordanVerify {
        #[arg(long, value_name = "PATH")]
        points: PathBuf,
        #[arg(long, value_name = "PATH")]
        matroid: PathBuf,
        /// Truncate the coordinates to a smaller algebra first (R, C or H).
        #[arg(long)]
        truncate: Option<String>,
    },
}

/// How a run ended short of a verdict.
#[derive(Debug)]
pub enum Failure {
    /// Bad input: exit 2.
    Input(String),
    /// A computation that must succeed did not: exit 1.
    Check(String),
}

impl From<hypmat::Error> for Failure {
    fn from(e: hypmat::Error) -> Self {
        match e {
            hypmat::Error::Input(_) => Failure::Input(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

pub struct Outcome {
    pub result: Value,
    pub passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match commands::run(&cli.command, &cli.opts) {
        Ok(o) => o,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            return ExitCode::from(1);
        }
    };
    let doc = json!({
        "schema": "v1",
        "config": &cli,
        "result": outcome.result,
        "passed": outcome.passed,
    });
    let text = serde_json::to_string_pretty(&doc).expect("JSON document") + "\n";
    match &cli.opts.json_out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
