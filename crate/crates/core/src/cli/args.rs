use std::fs;
use std::path::PathBuf;

use clap::{Args as ClapArgs, Parser, Subcommand};

use super::{
    cmd_alpha, cmd_chi, cmd_tables, cmd_verify, cmd_zeros, AlphaSelection, Format, OutputRecord,
    TableKind,
};
use crate::complex::{SieveTable, DEFAULT_SIEVE_LIMIT};
use crate::verify::Suite;
use crate::{Error, Result};

/// Squarefree-divisor complexes: exact tables, Euler characteristics, α_n and
/// h-polynomial zero trajectories.
#[derive(Debug, Parser)]
#[command(name = "euler-primes", version)]
pub struct Args {
    /// Output format.
    #[arg(long, global = true, default_value = "csv", value_parser = parse_format)]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest n any command may sieve up to.
    #[arg(long, global = true, env = "EULER_PRIMES_SIEVE_LIMIT", default_value_t = DEFAULT_SIEVE_LIMIT)]
    pub sieve_limit: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// f, F, H or descent-matrix tables up to dimension D.
    Tables {
        #[arg(long, value_parser = parse_kind)]
        kind: TableKind,
        #[arg(long)]
        max_d: usize,
    },
    /// Reduced Euler characteristic, Mertens function and dimension for a range of n.
    Chi {
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Exact α_n for a list of n or a range.
    Alpha(AlphaArgs),
    /// Zeros of the h-polynomials of the iterated subdivisions of Δ_n.
    Zeros {
        #[arg(long)]
        n: u64,
        /// Largest number of subdivisions.
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 128)]
        precision_bits: usize,
    },
    /// Run a verification suite (all, core, complex, zeros).
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
    },
}

#[derive(Debug, ClapArgs)]
pub struct AlphaArgs {
    /// Comma-separated values of n.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["from", "to"], required_unless_present = "to")]
    pub n: Vec<u64>,
    #[arg(long, default_value_t = 1, requires = "to")]
    pub from: u64,
    #[arg(long)]
    pub to: Option<u64>,
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_kind(s: &str) -> std::result::Result<TableKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn sieve_for(needed: u64, limit: u64) -> Result<SieveTable> {
    if needed > limit {
        return Err(Error::SieveRange { x: needed, limit });
    }
    SieveTable::with_budget(needed.max(1), limit)
}

/// Runs a parsed command, writes its output and returns the exit status.
pub fn run(args: &Args) -> Result<i32> {
    let mut status = 0;
    let record: OutputRecord = match &args.command {
        Command::Tables { kind, max_d } => cmd_tables(*kind, *max_d)?,
        Command::Chi { from, to } => cmd_chi(&sieve_for(*to, args.sieve_limit)?, *from, *to)?,
        Command::Alpha(a) => {
            let selection = match a.to {
                Some(to) => AlphaSelection::Range { from: a.from, to },
                None => AlphaSelection::List(a.n.clone()),
            };
            let needed = match &selection {
                AlphaSelection::List(ns) => ns.iter().copied().max().unwrap_or(1),
                AlphaSelection::Range { to, .. } => *to,
            };
            cmd_alpha(&sieve_for(needed, args.sieve_limit)?, &selection)?
        }
        Command::Zeros {
            n,
            k,
            precision_bits,
        } => cmd_zeros(&sieve_for(*n, args.sieve_limit)?, *n, *k, *precision_bits)?,
        Command::Verify { suite } => {
            let (record, passed) = cmd_verify(*suite)?;
            if !passed {
                status = 1;
            }
            record
        }
    };
    let text = record.render(args.format)?;
    match &args.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(status)
}
