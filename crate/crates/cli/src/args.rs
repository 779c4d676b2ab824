use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "strange",
    version,
    about = "Exact verification of strange-function dissections and Fishburn congruences"
)]
pub struct Cli {
    /// Worker threads for verification grids (1 = sequential).
    #[arg(long, global = true, env = "STRANGE_WORKERS", default_value_t = 1)]
    pub workers: usize,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to a file instead of standard output.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Cyclotomic,
    Theta,
    Refinement,
    Stability,
    Vanishing,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pentagonal residues S(t), or S(p^r) with T(p^r).
    Pentagonal {
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        r: Option<u32>,
    },
    /// Dump the dissection polynomials A_t(N, i, q).
    Dissect {
        #[arg(long)]
        t: usize,
        #[arg(long = "N")]
        n: usize,
    },
    /// Check (q)_λ(N,t) | A_t(N, i, q) for non-pentagonal i.
    VerifyTheorem {
        #[arg(long)]
        t: Option<usize>,
        #[arg(long = "N")]
        n: Option<usize>,
        /// Sweep 1 ≤ t ≤ TMAX, 0 ≤ N ≤ NMAX.
        #[arg(long, value_name = "TMAX,NMAX", value_parser = parse_pair)]
        grid: Option<(usize, usize)>,
        /// Check a table previously written by `dissect`.
        #[arg(long, value_name = "PATH")]
        from_file: Option<PathBuf>,
    },
    /// Cyclotomic, theta-dissection, refinement, stability and vanishing grids.
    VerifyIdentities {
        #[arg(long, value_enum, default_value = "all")]
        which: Which,
        #[arg(long)]
        t_max: Option<usize>,
        #[arg(long = "N-max")]
        n_max: Option<usize>,
        #[arg(long)]
        nu_max: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
        /// Largest root-of-unity order for the stability grid.
        #[arg(long)]
        root_max: Option<usize>,
        #[arg(long)]
        lambda_max: Option<usize>,
    },
    /// Fishburn numbers ξ(0..=n_max), exactly or modulo M.
    Fishburn {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Check ξ(p^r n + j) ≡ 0 (mod p^r) for j in T(p^r), n < n_count.
    Congruences {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n_count: usize,
    },
    /// Lifting facts for S(p) inside S(p^r) and the formula for max S(p^r).
    SpFacts {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
    },
    /// Kummer carry check of the binomial criterion.
    Binomial {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k_max: usize,
    },
    /// Decomposition of F(1-q; n p^r - 1) through the dissection.
    Decompose {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: usize,
    },
    /// Every verification grid in one report.
    FullReport,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected TMAX,NMAX, got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_parsing() {
        assert_eq!(parse_pair("12,40"), Ok((12, 40)));
        assert!(parse_pair("12").is_err());
        assert!(parse_pair("a,3").is_err());
    }
}
