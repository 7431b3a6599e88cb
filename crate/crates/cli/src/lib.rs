//! The `mcg` command line: parsing, golden-example reproduction and suite runners.
//!
//! Exit codes: 0 for success or a positive verdict, 1 for a negative
//! verdict, 2 for unusable input.

mod commands;
mod input;
pub mod suites;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

pub use input::{alphabet_for, parse_surface, CoverSource};

#[derive(Debug, Parser)]
#[command(name = "mcg", version, about = "Algebraic mapping class groups of punctured surfaces")]
pub struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Alphabet selection shared by word-level commands.
#[derive(Debug, Clone, Args)]
pub struct AlphabetArgs {
    /// Surface alphabet `x1.., y1.., t1..` of type `G,P`.
    #[arg(long, value_parser = parse_surface)]
    pub surface: Option<(usize, usize)>,
    /// Single-letter alphabet `a, b, ...` of this rank.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct CoverArgs {
    /// Built-in cover: paper-1-even, paper-1-odd, paper-2, paper-3a, paper-3b.
    #[arg(long)]
    pub example: Option<String>,
    /// Quotient spec file (`degree D` then `name: cycles` lines).
    #[arg(long)]
    pub spec: Option<String>,
    /// Adapted basis file (`name = word` lines).
    #[arg(long)]
    pub basis: Option<String>,
}

impl CoverArgs {
    fn source(&self) -> CoverSource {
        CoverSource { example: self.example.clone(), spec: self.spec.clone(), basis: self.basis.clone() }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Edges of the Whitehead graph of a word set, e.g. "AdcB [Db] [Ca]".
    Graph {
        set: String,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Whether a word set is a surface word set, with its segment.
    SurfaceCheck {
        set: String,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Associated sequence of a surface word set.
    Sequence {
        set: String,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Surface word set with a given associated sequence, e.g. "a,b,c,d,A,B,C,D".
    Recover {
        sequence: String,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Admissible Nielsen moves of a surface word set, or the image under one.
    Nielsen {
        set: String,
        /// `right: a*b` (a -> ab) or `perm: a->B,b->c,...`.
        #[arg(long = "move")]
        mv: Option<String>,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Certify generator images as a mapping class, optionally factoring into Nielsen moves.
    VerifyMcg {
        #[arg(long, value_parser = parse_surface)]
        surface: (usize, usize),
        /// One image per generator, in the order x1.., y1.., t1...
        images: Vec<String>,
        /// Search for a Nielsen factorization.
        #[arg(long)]
        factor: bool,
        #[arg(long, default_value_t = mcg_mccool::DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Seeded random product of catalog generators.
    Random {
        #[arg(long, value_parser = parse_surface)]
        surface: (usize, usize),
        #[arg(long, default_value_t = 6)]
        length: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Normal form of a word in the quotient by the puncture powers.
    Project {
        word: String,
        #[arg(long)]
        order: u32,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// The induced map on the torsion quotient: one element, or a random injectivity sample.
    PsiCheck {
        #[arg(long, value_parser = parse_surface)]
        surface: (usize, usize),
        #[arg(long)]
        order: u32,
        /// Catalog word such as "s1 S2 a1".
        #[arg(long)]
        element: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Deck data of a finite cover.
    CoverAnalyze {
        #[command(flatten)]
        cover: CoverArgs,
    },
    /// Verify an adapted basis against its cover.
    BasisVerify {
        #[command(flatten)]
        cover: CoverArgs,
    },
    /// Coordinates of a cover-group word in the adapted basis.
    Rewrite {
        word: String,
        #[command(flatten)]
        cover: CoverArgs,
    },
    /// Image of a mapping class in the covering surface with lifted punctures filled.
    Embed {
        #[command(flatten)]
        cover: CoverArgs,
        /// Catalog word such as "a" or "s1 S2".
        #[arg(long)]
        element: Option<String>,
        /// Check both containments of the normal-closure lemma.
        #[arg(long)]
        normal_closure: bool,
        #[arg(long, default_value_t = mcg_embedding::DEFAULT_CONJUGATOR_BOUND)]
        bound: usize,
    },
    /// Compare two ends `prefix ~ (period)` in the order of a surface word set.
    EndsCompare {
        left: String,
        right: String,
        /// Surface word set defining the order; the standard set of the alphabet by default.
        #[arg(long)]
        set: Option<String>,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Property suites backed by the theorems.
    Suites {
        /// Run every suite (the default when no suite is named).
        #[arg(long)]
        all: bool,
        /// Run only suites whose name contains this text.
        #[arg(long)]
        only: Option<String>,
        /// Overrides every suite's default sample count.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

/// Input that cannot be processed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Input(String),
}

/// A finished command: text lines, the JSON document and the verdict.
#[derive(Debug, Clone)]
pub struct Report {
    pub lines: Vec<String>,
    pub json: Value,
    pub ok: bool,
}

/// Runs one invocation and returns the exit code and everything printed.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match commands::execute(&cli.command) {
        Ok(r) => {
            let code = if r.ok { 0 } else { 1 };
            let out = if cli.json { format!("{:#}\n", r.json) } else { r.lines.iter().map(|l| format!("{l}\n")).collect() };
            (code, out)
        }
        Err(Failure::Input(msg)) => {
            let out = if cli.json { format!("{:#}\n", serde_json::json!({ "error": msg })) } else { format!("error: {msg}\n") };
            (2, out)
        }
    }
}
