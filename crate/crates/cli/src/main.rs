use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use smoothwords::OrderedAlphabet;

mod commands;
mod source;

use source::{StreamArgs, WordArgs};

/// Smooth words over two-letter alphabets: generation, run-length
/// transforms, Lyndon checks and case verification.
#[derive(Debug, Parser)]
#[command(name = "smoothwords", version)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a prefix of a smooth word.
    Generate {
        #[command(flatten)]
        stream: StreamArgs,
        #[arg(short = 'n', long = "length")]
        length: usize,
    },
    /// Run-length encode a word, or apply a derivative.
    Delta {
        #[command(flatten)]
        words: WordArgs,
        /// Required by every mode except `delta`.
        #[arg(long)]
        alphabet: Option<OrderedAlphabet>,
        #[arg(long, value_enum, default_value_t = DeltaMode::Delta)]
        mode: DeltaMode,
        /// Number of times the operator is applied.
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Decode a sequence of run lengths starting with letter `--first`.
    DeltaInv {
        #[command(flatten)]
        words: WordArgs,
        #[arg(long)]
        alphabet: OrderedAlphabet,
        #[arg(long)]
        first: u32,
    },
    /// Directive prefix of a smooth prefix.
    Phi {
        #[command(flatten)]
        words: WordArgs,
        #[arg(long)]
        alphabet: OrderedAlphabet,
    },
    /// The word generated by a finite directive; the last letter may lie outside the alphabet.
    PhiInv {
        #[command(flatten)]
        words: WordArgs,
        #[arg(long)]
        alphabet: OrderedAlphabet,
    },
    /// Lyndon factorization of a finite word or of a stream prefix.
    Factorize {
        #[command(flatten)]
        input: CheckInput,
    },
    /// Bounded Lyndon check of a finite word or of a stream prefix.
    CheckLyndon {
        #[command(flatten)]
        input: CheckInput,
        /// Largest prefix length allowed.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Smooth infinite Lyndon words over an alphabet.
    Classify {
        #[arg(long)]
        alphabet: OrderedAlphabet,
        /// Also run the exhaustive directive search to this depth and compare.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Verify the case trees against their claimed verdicts.
    VerifyPaper(VerifyArgs),
    /// Check the block-structure lemmas for `m_{1,b}` with `b` odd.
    Lemmas {
        #[arg(long)]
        alphabet: OrderedAlphabet,
        #[arg(short = 'n', long = "length", default_value_t = 10_000)]
        length: usize,
        #[arg(long, default_value_t = 1_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DeltaMode {
    /// Run lengths.
    Delta,
    /// `D_r`: drop a trailing run length smaller than `b`.
    Right,
    /// `D`: drop boundary run lengths smaller than `b`.
    Trim,
    /// Every level of the `Δ` tower.
    Chain,
}

#[derive(Debug, Args)]
struct CheckInput {
    #[command(flatten)]
    stream: StreamArgs,
    /// A finite word to examine instead of a stream.
    #[arg(long, conflicts_with = "source")]
    word: Option<String>,
    /// Prefix length of the stream.
    #[arg(short = 'n', long = "length")]
    length: Option<usize>,
}

#[derive(Debug, Args)]
#[group(id = "selection", required = true, multiple = false)]
struct VerifySelection {
    #[arg(long)]
    all: bool,
    /// Case id, e.g. `even-odd/1`; repeatable.
    #[arg(long = "case")]
    cases: Vec<String>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    selection: VerifySelection,
    /// Restrict to one alphabet.
    #[arg(long)]
    alphabet: Option<OrderedAlphabet>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Largest prefix searched for a witness.
    #[arg(long)]
    budget: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(cli) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e}");
            if e.exit_code() == 1 {
                eprintln!("\nFor more information, try '--help'.");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
