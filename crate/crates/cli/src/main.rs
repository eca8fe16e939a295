//! `hyperoct`: the hyperoctahedral number system and signed-permutation
//! ranking on the command line.
//!
//! Exit status is 0 on success, 1 on usage errors, and 2 on domain errors
//! (malformed values, out-of-range ranks, oversized degrees); domain errors
//! print a one-line diagnostic to stderr.

use clap::{ArgGroup, Parser, Subcommand};
use hyperoct::oracle::{self, OracleError};
use hyperoct::{
    decode, place_value, rank, unrank, BigUint, HyperNumeral, InversionCode, NumeralError,
    NumeralStyle, PermutationError, RankError, SignedPermutation,
};
use num_traits::{One, Zero};
use std::process::ExitCode;
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "hyperoct",
    version,
    about = "Mixed-radix numerals with place values 2^i * i! and ranking of signed permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between decimal and the hyperoctahedral system
    #[command(group(ArgGroup::new("direction").required(true).args(["to_hyper", "to_dec"])))]
    Convert {
        /// Decimal integer to write in the hyperoctahedral system
        #[arg(long, value_name = "DECIMAL")]
        to_hyper: Option<String>,
        /// Numeral (colon or compact form) to write in decimal
        #[arg(long, value_name = "NUMERAL")]
        to_dec: Option<String>,
        /// Write the digits juxtaposed instead of colon-separated
        /// (available while every digit is at most 9)
        #[arg(long, conflicts_with = "to_dec")]
        compact: bool,
    },
    /// Print the inversion code of a window word
    Code {
        /// Window word, e.g. "1 -3 4 2"
        window: String,
    },
    /// Print the lexicographic rank of a window word
    Rank {
        /// Window word, e.g. "1 -3 4 2"
        window: String,
    },
    /// Print the window word at a given rank
    Unrank {
        /// Rank, between 1 and 2^n * n!
        rank: String,
        /// Degree of the group
        #[arg(long)]
        n: usize,
    },
    /// List elements of a group: rank, window word, and code per line
    Enumerate {
        /// Degree of the group
        #[arg(long)]
        n: usize,
        /// First rank to list (default 1)
        #[arg(long, value_name = "RANK")]
        from: Option<String>,
        /// Last rank to list (default 2^n * n!)
        #[arg(long, value_name = "RANK")]
        to: Option<String>,
    },
    /// Cross-check ranking against brute-force enumeration
    Selftest {
        /// Largest degree to verify (every degree up to it is checked)
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Numeral(#[from] NumeralError),
    #[error(transparent)]
    Permutation(#[from] PermutationError),
    #[error(transparent)]
    Rank(#[from] RankError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Message(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) {
                err.print().expect("write help output");
                return ExitCode::SUCCESS;
            }
            let message = err.to_string();
            eprintln!("{}", message.lines().next().unwrap_or("usage error"));
            return ExitCode::from(1);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Convert {
            to_hyper,
            to_dec,
            compact,
        } => {
            if let Some(decimal) = to_hyper {
                let n = parse_decimal(&decimal)?;
                let style = if compact {
                    NumeralStyle::Compact
                } else {
                    NumeralStyle::Colon
                };
                println!("{}", HyperNumeral::from_integer(&n).format(style)?);
            } else {
                let numeral: HyperNumeral = to_dec.expect("clap enforces the group").parse()?;
                println!("{}", numeral.to_integer());
            }
        }
        Command::Code { window } => {
            let p: SignedPermutation = window.parse()?;
            println!("{}", p.code());
        }
        Command::Rank { window } => {
            let p: SignedPermutation = window.parse()?;
            println!("{}", rank(&p));
        }
        Command::Unrank { rank, n } => {
            let k = parse_decimal(&rank)?;
            println!("{}", unrank(&k, n)?);
        }
        Command::Enumerate { n, from, to } => {
            let max = place_value(n);
            let from = match from {
                Some(text) => check_rank(parse_decimal(&text)?, &max)?,
                None => BigUint::one(),
            };
            let to = match to {
                Some(text) => check_rank(parse_decimal(&text)?, &max)?,
                None => max,
            };
            enumerate(n, from, to);
        }
        Command::Selftest { n } => selftest(n)?,
    }
    Ok(())
}

fn parse_decimal(text: &str) -> Result<BigUint, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::Message(format!("invalid decimal integer {text:?}")))
}

fn check_rank(k: BigUint, max: &BigUint) -> Result<BigUint, CliError> {
    if k.is_zero() || &k > max {
        return Err(RankError::OutOfRange {
            rank: k,
            max: max.clone(),
        }
        .into());
    }
    Ok(k)
}

/// Walks ranks `from..=to` by taking numeral successors, avoiding a fresh
/// base conversion per row.
fn enumerate(n: usize, from: BigUint, to: BigUint) {
    let mut k = from;
    let mut numeral = HyperNumeral::from_integer(&(&k - BigUint::one()))
        .with_width(n)
        .expect("rank - 1 < B_n fits in n digits");
    while k <= to {
        let code = InversionCode::from_numeral(&numeral);
        println!("{k}  {}  {code}", decode(&code));
        numeral = numeral.successor();
        k += BigUint::one();
    }
}

/// Checks, for every degree up to `n`, that rank and unrank agree with the
/// position in the brute-force sorted enumeration, and that the two
/// inversion statistics coincide.
fn selftest(n: usize) -> Result<(), CliError> {
    let mut total = 0usize;
    for degree in 0..=n {
        let sorted = oracle::sorted_all(degree)?;
        for (idx, p) in sorted.iter().enumerate() {
            let k = BigUint::from(idx as u64 + 1);
            if rank(p) != k {
                return Err(CliError::Message(format!(
                    "rank({p}) = {} but the sorted enumeration puts it at {k}",
                    rank(p)
                )));
            }
            let unranked = unrank(&k, degree)?;
            if &unranked != p {
                return Err(CliError::Message(format!(
                    "unrank({k}, {degree}) = {unranked} but the sorted enumeration has {p}"
                )));
            }
            for i in 1..=degree {
                if p.inv_by_roots(i) != p.inv_by_counting(i) {
                    return Err(CliError::Message(format!(
                        "inversion statistics disagree at position {i} of {p}"
                    )));
                }
            }
        }
        println!("B_{degree}: {} elements ok", sorted.len());
        total += sorted.len();
    }
    println!("selftest passed: {total} elements across degrees 0..={n}");
    Ok(())
}
