//! `fkm-lab`: exact checks on FKM Clifford systems, their quartics and the
//! complex/quaternionic structures preserving the associated foliations.
//!
//! Exit codes: 0 pass, 1 check failure, 2 usage, 3 domain precondition,
//! 4 environment (missing files, write failures).

mod commands;
mod selector;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "fkm-lab",
    version,
    about = "Exact arithmetic on FKM Clifford systems and Cartan-Muenzner quartics"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct GlobalOpts {
    /// Seed for every sampled check, decimal or 0x-prefixed hex [default: 0xF8F7]
    #[arg(long, global = true, value_parser = parse_seed, default_value = "0xF8F7", hide_default_value = true)]
    pub seed: u64,
    /// Number of sample points (verify: 100, cohomogeneity: 8 when omitted)
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Output format; each command supports a subset
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Group {
    /// Spin(9) = span{P_i P_j} on the (8,1,1) system
    Spin9,
    /// Spin(9)·SO(2): spin part plus centralizer of the (8,0,2) system
    Spin9so2,
    /// The full so(32)
    So32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StructureKind {
    /// J = P_0 P_1
    P0p1,
    /// (P_0 P_1, P_1 P_2, P_0 P_2)
    Quaternionic,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a Clifford system and print it as JSON
    Build {
        /// m=M,k=K | m=M,kp=K,km=K | alias such as f87
        selector: String,
    },
    /// Check the Clifford relations and both Muenzner identities
    Verify {
        selector: Option<String>,
        /// Read the system from a JSON file written by `build`
        #[arg(long, conflicts_with = "selector")]
        from_file: Option<PathBuf>,
    },
    /// Complex and quaternionic structures for f87 or f87u
    Structures {
        foliation: Option<String>,
        #[arg(long = "foliation", conflicts_with = "foliation")]
        foliation_flag: Option<String>,
        /// Alias of --format
        #[arg(long, value_enum)]
        emit: Option<Format>,
    },
    /// Reproduce the S^31 census and diff it against the expected table
    Census,
    /// Sampled cohomogeneity of a subgroup of SO(32)
    Cohomogeneity {
        #[arg(long, value_enum)]
        group: Group,
    },
    /// Decide whether a structure preserves the foliation of a system
    Preserve {
        #[arg(long)]
        system: String,
        #[arg(long, value_enum)]
        structure: StructureKind,
    },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed '{s}': {e}"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("fkm-lab: {e}");
            ExitCode::from(e.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fkm_core::sampling::DEFAULT_SEED;

    #[test]
    fn seeds() {
        assert_eq!(parse_seed("0xF8F7"), Ok(DEFAULT_SEED));
        assert_eq!(parse_seed("63735"), Ok(DEFAULT_SEED));
        assert!(parse_seed("0xzz").is_err());
    }

    #[test]
    fn clap_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
