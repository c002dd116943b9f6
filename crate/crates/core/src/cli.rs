//! The `lyndonlab` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 resource refusal.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::lyndon::{lyndon_counts, lyndon_profile};
use crate::search::{search, SearchConfig, SearchMode};
use crate::sturmian::{
    christoffel_lyndon_count, christoffel_word, directive_of, fibonacci_number, fibonacci_word,
    iterated_pal, palindromic_closure, standard_sequence, ChristoffelSlope, DirectiveSequence,
};
use crate::table::{build_table, parse_int_list, Format, OutputFormat, TableKind};
use crate::verify::{run_suite, Suite};
use crate::word::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "lyndonlab", version, about = "Counting Lyndon factors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a table of D, M, ET or ED values.
    Table(TableArgs),
    /// Count the Lyndon factors of a word.
    Count(CountArgs),
    /// Print the Christoffel word of slope P/Q.
    Christoffel(ChristoffelArgs),
    /// Print the finite Fibonacci word f_N.
    Fibonacci(FibonacciArgs),
    /// Print the standard words s_(-1), s_0, ..., s_n of a directive sequence.
    StandardSeq(StandardSeqArgs),
    /// Iterated palindromic closure of a word.
    Pal(PalArgs),
    /// Find Lyndon words of length N with the fewest distinct Lyndon factors.
    Search(SearchArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

/// A comma-separated list parsed as a single value.
pub type IntList = Vec<u64>;

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum, ignore_case = true)]
    pub kind: TableKind,
    /// Alphabet sizes, e.g. `2,5,10`.
    #[arg(long, value_parser = parse_int_list)]
    pub sigma: Option<IntList>,
    /// Word lengths, e.g. `1..10,15,20`.
    #[arg(long, short, value_parser = parse_int_list)]
    pub n: Option<IntList>,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
    #[arg(long, default_value_t = 2)]
    pub decimal_places: u32,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub word: String,
    #[arg(long, group = "field")]
    pub distinct: bool,
    #[arg(long, group = "field")]
    pub total: bool,
    /// List the distinct Lyndon factors.
    #[arg(long, group = "field")]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct ChristoffelArgs {
    pub p: u64,
    pub q: u64,
    /// Also print the distinct Lyndon factor count given by the directive sum.
    #[arg(long)]
    pub count: bool,
    /// Also print the directive sequence.
    #[arg(long)]
    pub directive: bool,
}

#[derive(Debug, Args)]
pub struct FibonacciArgs {
    #[arg(allow_negative_numbers = true)]
    pub n: i64,
    /// Print the length F_N instead of the word.
    #[arg(long)]
    pub number: bool,
}

#[derive(Debug, Args)]
pub struct StandardSeqArgs {
    /// Directive terms d_1 d_2 ... (d_1 may be 0).
    #[arg(required = true, num_args = 1..)]
    pub d: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct PalArgs {
    pub word: String,
    /// Single palindromic closure instead of the iterated one.
    #[arg(long)]
    pub closure: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Pruned,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    pub n: usize,
    #[arg(long)]
    pub sigma_max: Option<usize>,
    #[arg(long, value_enum, default_value = "pruned")]
    pub mode: ModeArg,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::WorkLimit { .. } | Error::WordTooLong { .. } => EXIT_REFUSED,
                _ => EXIT_USAGE,
            }
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn parse_word(s: &str) -> Result<Word, Error> {
    s.parse()
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Table(a) => {
            let sigmas = a.sigma.unwrap_or_else(|| a.kind.default_sigmas());
            let ns = a.n.unwrap_or_else(|| a.kind.default_ns());
            let table = build_table(a.kind, &sigmas, &ns)?;
            out.write_all(
                table
                    .render(OutputFormat {
                        format: a.format,
                        decimal_places: a.decimal_places,
                    })
                    .as_bytes(),
            )?;
        }
        Command::Count(a) => {
            let word = parse_word(&a.word)?;
            if a.list {
                for factor in lyndon_profile(&word)?.distinct {
                    writeln!(out, "{factor}")?;
                }
            } else {
                let (distinct, total) = lyndon_counts(&word)?;
                writeln!(out, "{}", if a.total { total } else { distinct })?;
            }
        }
        Command::Christoffel(a) => {
            let slope = ChristoffelSlope::new(a.p, a.q)?;
            writeln!(out, "{}", christoffel_word(slope)?)?;
            if a.count {
                writeln!(out, "{}", christoffel_lyndon_count(slope))?;
            }
            if a.directive {
                writeln!(out, "{}", directive_of(slope))?;
            }
        }
        Command::Fibonacci(a) => {
            if a.number {
                writeln!(out, "{}", fibonacci_number(a.n)?)?;
            } else {
                writeln!(out, "{}", fibonacci_word(a.n)?)?;
            }
        }
        Command::StandardSeq(a) => {
            let seq = standard_sequence(&DirectiveSequence::new(a.d)?)?;
            for (i, word) in seq.words().iter().enumerate() {
                writeln!(out, "{}\t{word}", i as i64 - 1)?;
            }
        }
        Command::Pal(a) => {
            let word = parse_word(&a.word)?;
            let result = if a.closure {
                palindromic_closure(&word)
            } else {
                iterated_pal(&word)
            };
            writeln!(out, "{result}")?;
        }
        Command::Search(a) => {
            let mode = match a.mode {
                ModeArg::Exhaustive => SearchMode::Exhaustive,
                ModeArg::Pruned => SearchMode::Pruned,
            };
            let mut config = SearchConfig::new(mode);
            config.sigma_max = a.sigma_max;
            writeln!(err, "searching n = {} ({:?})", a.n, mode)?;
            let report = search(a.n, &config)?;
            writeln!(
                err,
                "done: {} nodes, {} pruned, {} ms",
                report.nodes_explored, report.pruned, report.elapsed_ms
            )?;
            if a.json {
                let text = serde_json::to_string_pretty(&report).expect("report serialises");
                writeln!(out, "{text}")?;
            } else {
                writeln!(out, "n\t{}", report.n)?;
                writeln!(out, "sigma_max\t{}", report.sigma_max)?;
                writeln!(out, "minimum\t{}", report.minimum)?;
                writeln!(out, "witnesses\t{}", report.witnesses.len())?;
                for w in &report.witnesses {
                    writeln!(out, "{w}")?;
                }
            }
        }
        Command::Verify(a) => {
            let mut all_passed = true;
            for (suite, verdict) in run_suite(a.suite)? {
                writeln!(err, "suite {}", suite.name())?;
                for check in &verdict.checks {
                    let mark = if check.passed { "PASS" } else { "FAIL" };
                    writeln!(
                        out,
                        "{mark}\t{}\t{}\t{}",
                        suite.name(),
                        check.name,
                        check.detail
                    )?;
                }
                writeln!(
                    out,
                    "{}: {}/{} checks pass",
                    suite.name(),
                    verdict.passed_count(),
                    verdict.checks.len()
                )?;
                all_passed &= verdict.passed();
            }
            return Ok(if all_passed {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            });
        }
    }
    Ok(EXIT_OK)
}
