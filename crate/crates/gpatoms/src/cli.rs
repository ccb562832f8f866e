//! Argument parsing and the `RunConfig` it produces.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Mode {
    Exact,
    /// Binary64 arithmetic; magnitudes within `eps` count as zero.
    Float { eps: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Atoms,
    Meet,
    RegionCheck,
    RegionRho,
    RegionClassify,
    WordsCount { max_len: usize },
    WordsEnumerate { len: usize },
    WordsVerify { max_len: usize },
    Poly,
    Join,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Summand selections examined by `atoms`.
    pub selections: u128,
    /// Word classes listed or walked by the `words` commands.
    pub classes: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            selections: gpatoms_core::atoms::DEFAULT_SELECTION_CAP,
            classes: gpatoms_core::words::DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    /// `-` reads standard input.
    pub input: PathBuf,
    pub mode: Mode,
    pub caps: Caps,
    pub output: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

/// Atoms of graph products from clique polynomials.
#[derive(Debug, Parser)]
#[command(name = "gpatoms", version, about)]
struct Cli {
    /// Arithmetic: exact rationals, or binary64 for irrational inputs.
    #[arg(long, value_enum, default_value = "exact", global = true)]
    mode: ModeArg,
    /// Zero tolerance in float mode.
    #[arg(long, default_value_t = 1e-9, global = true)]
    eps: f64,
    /// Largest enumeration a command may perform.
    #[arg(long, global = true)]
    cap: Option<u128>,
    #[arg(long, value_enum, default_value = "json", global = true)]
    output: OutputFormat,
    #[command(subcommand)]
    command: Top,
}

#[derive(Debug, Args)]
struct InputArg {
    /// Input JSON file, or `-` for standard input.
    input: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Top {
    /// List every atom of the graph product.
    Atoms(InputArg),
    /// State of the meet of one projection per vertex.
    Meet(InputArg),
    /// Region of convergence of the word series.
    #[command(subcommand)]
    Region(RegionCmd),
    /// Reduced words up to graph commutation.
    #[command(subcommand)]
    Words(WordsCmd),
    /// The clique polynomial, optionally evaluated at `x`.
    Poly(InputArg),
    /// Join decomposition, optionally with factor values at `x`.
    Join(InputArg),
}

#[derive(Debug, Subcommand)]
enum RegionCmd {
    /// Is `x` in the region?
    Check(InputArg),
    /// Boundary distance along `u` or each of `directions`.
    Rho(InputArg),
    /// Boundary and gradient classification of `x`.
    Classify(InputArg),
}

#[derive(Debug, Subcommand)]
enum WordsCmd {
    /// Reduced classes per length, from the series and by enumeration.
    Count {
        #[arg(long)]
        max_len: usize,
        #[command(flatten)]
        input: InputArg,
    },
    /// Lex-least representatives of the reduced classes of one length.
    Enumerate {
        #[arg(long)]
        len: usize,
        #[command(flatten)]
        input: InputArg,
    },
    /// Check both series identities coefficient by coefficient.
    Verify {
        #[arg(long)]
        max_len: usize,
        #[command(flatten)]
        input: InputArg,
    },
}

const ALIASES: [(&str, [&str; 2]); 6] = [
    ("region-check", ["region", "check"]),
    ("region-rho", ["region", "rho"]),
    ("region-classify", ["region", "classify"]),
    ("words-count", ["words", "count"]),
    ("words-enumerate", ["words", "enumerate"]),
    ("words-verify", ["words", "verify"]),
];

/// Split a hyphenated command name (`region-check`) into its two words so
/// both spellings work. Only the command position is rewritten.
fn expand_aliases(mut args: Vec<OsString>) -> Vec<OsString> {
    const VALUED: [&str; 4] = ["--mode", "--eps", "--cap", "--output"];
    let mut i = 1;
    while i < args.len() {
        let a = args[i].to_string_lossy().into_owned();
        if VALUED.contains(&a.as_str()) {
            i += 2;
        } else if a.starts_with('-') {
            i += 1;
        } else {
            if let Some((_, words)) = ALIASES.iter().find(|(alias, _)| a == *alias) {
                args.splice(i..=i, words.iter().map(OsString::from));
            }
            break;
        }
    }
    args
}

/// Outcome of parsing: a configuration, or text for `--help`/`--version`.
pub enum Parsed {
    Run(RunConfig),
    Info(String),
}

pub fn parse_args<I, T>(args: I) -> Result<Parsed, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args = expand_aliases(args.into_iter().map(Into::into).collect());
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Ok(Parsed::Info(e.to_string())),
                _ => {
                    let text = e.to_string();
                    let text = text.strip_prefix("error: ").unwrap_or(&text);
                    Err(CliError::Usage(text.trim_end().to_string()))
                }
            };
        }
    };
    let mode = match cli.mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Float if cli.eps > 0.0 && cli.eps.is_finite() => Mode::Float { eps: cli.eps },
        ModeArg::Float => return Err(CliError::Usage("--eps must be a positive number".into())),
    };
    let mut caps = Caps::default();
    if let Some(cap) = cli.cap {
        caps = Caps {
            selections: cap,
            classes: cap,
        };
    }
    let (command, input) = match cli.command {
        Top::Atoms(i) => (Command::Atoms, i),
        Top::Meet(i) => (Command::Meet, i),
        Top::Region(RegionCmd::Check(i)) => (Command::RegionCheck, i),
        Top::Region(RegionCmd::Rho(i)) => (Command::RegionRho, i),
        Top::Region(RegionCmd::Classify(i)) => (Command::RegionClassify, i),
        Top::Words(WordsCmd::Count { max_len, input }) => (Command::WordsCount { max_len }, input),
        Top::Words(WordsCmd::Enumerate { len, input }) => (Command::WordsEnumerate { len }, input),
        Top::Words(WordsCmd::Verify { max_len, input }) => (Command::WordsVerify { max_len }, input),
        Top::Poly(i) => (Command::Poly, i),
        Top::Join(i) => (Command::Join, i),
    };
    Ok(Parsed::Run(RunConfig {
        command,
        input: input.input,
        mode,
        caps,
        output: cli.output,
    }))
}
