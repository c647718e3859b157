//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::builtin::Builtin;

#[derive(Debug, Parser)]
#[command(
    name = "bihom",
    version,
    about = "Check, build and solve finite BiHom-Lie conformal superalgebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub io: Io,
}

#[derive(Debug, Args)]
pub struct Io {
    /// Definition file; may be repeated
    #[arg(long, value_name = "FILE", global = true)]
    pub input: Vec<PathBuf>,
    /// Built-in example; may be repeated
    #[arg(long, value_enum, global = true)]
    pub builtin: Vec<Builtin>,
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: OutputFormat,
    /// Write the report here instead of standard output
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Derivation,
    Centroid,
    Quasicentroid,
    CentralDerivation,
}

/// Name for a built algebra.
#[derive(Debug, Args)]
pub struct Output {
    /// Name of the resulting definition
    #[arg(long = "as", value_name = "NAME")]
    pub as_name: Option<String>,
}

#[derive(Debug, Args)]
pub struct Target {
    /// Algebra to use; defaults to the first one
    #[arg(long)]
    pub name: Option<String>,
    /// Module (or algebra, meaning its adjoint module); defaults to the
    /// adjoint module of the algebra
    #[arg(long)]
    pub module: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of an algebra
    Check {
        #[arg(long)]
        name: Option<String>,
    },
    /// Check the twisted associativity law of an associative algebra
    CheckAssoc {
        #[arg(long)]
        name: Option<String>,
    },
    /// Check the module axioms
    CheckModule {
        #[command(flatten)]
        target: Target,
    },
    /// Yau twist by two maps on the algebra
    Twist {
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_name = "MAP")]
        alpha: String,
        #[arg(long, value_name = "MAP")]
        beta: String,
        #[command(flatten)]
        output: Output,
    },
    /// Compose the twisting maps with a second pair, or with powers of
    /// themselves
    ComposeTwist {
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_name = "MAP", requires = "beta", conflicts_with = "power")]
        alpha: Option<String>,
        #[arg(long, value_name = "MAP", requires = "alpha")]
        beta: Option<String>,
        #[arg(long, value_name = "K", required_unless_present = "alpha")]
        power: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Direct sum of two algebras
    Dsum {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        other: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Current algebra of a finite-dimensional superalgebra
    Cur {
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Tensor product with a supercommutative associative superalgebra
    Tensor {
        #[arg(long)]
        name: Option<String>,
        /// The superalgebra factor
        #[arg(long)]
        other: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Commutator algebra of an associative algebra
    FromAssoc {
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Semidirect product with a module
    Semidirect {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// d(d(g)) = 0 on a basis of degree-bounded n-cochains
    D2check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deg: i32,
        #[command(flatten)]
        target: Target,
    },
    /// Basis of degree-bounded n-cocycles
    Cocycles {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deg: i32,
        #[arg(long, value_enum, default_value = "even")]
        parity: ParityArg,
        #[command(flatten)]
        target: Target,
    },
    /// Dimensions of degree-bounded cocycles and coboundaries
    CohomologyReport {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deg: i32,
        #[command(flatten)]
        target: Target,
    },
    /// Basis of twisted derivations (or another class) of bounded degree
    SolveDer {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        deg: i32,
        #[arg(long, value_enum, default_value = "even")]
        parity: ParityArg,
        #[arg(long, value_enum, default_value = "derivation")]
        class: ClassArg,
        #[arg(long)]
        name: Option<String>,
    },
    /// Class membership of a conformal map
    Classify {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        /// Map to classify; defaults to the first one
        #[arg(long)]
        map: Option<String>,
    },
    /// Search for generalized-derivation witness maps of bounded degree
    GderWitness {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        deg: i32,
        #[arg(long)]
        map: Option<String>,
    },
    /// Check the O-operator identity
    OoperatorCheck {
        #[arg(long)]
        ooperator: Option<String>,
    },
    /// The bracket induced by an O-operator
    Induced {
        #[arg(long)]
        ooperator: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Print the canonical form of the input
    Fmt,
}

impl Command {
    pub fn verb(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::CheckAssoc { .. } => "check-assoc",
            Command::CheckModule { .. } => "check-module",
            Command::Twist { .. } => "twist",
            Command::ComposeTwist { .. } => "compose-twist",
            Command::Dsum { .. } => "dsum",
            Command::Cur { .. } => "cur",
            Command::Tensor { .. } => "tensor",
            Command::FromAssoc { .. } => "from-assoc",
            Command::Semidirect { .. } => "semidirect",
            Command::D2check { .. } => "d2check",
            Command::Cocycles { .. } => "cocycles",
            Command::CohomologyReport { .. } => "cohomology-report",
            Command::SolveDer { .. } => "solve-der",
            Command::Classify { .. } => "classify",
            Command::GderWitness { .. } => "gder-witness",
            Command::OoperatorCheck { .. } => "ooperator-check",
            Command::Induced { .. } => "induced",
            Command::Fmt => "fmt",
        }
    }
}
