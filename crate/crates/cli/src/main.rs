//! `dhurwitz`: exact deformed Hurwitz numbers, dessin counts, Weingarten
//! functions, root scans and topological recursion from the command line.

mod commands;
mod config;
mod plot;

use std::ffi::OsString;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use deformed_hurwitz::hurwitz::Family;

#[derive(Parser, Debug)]
#[command(name = "dhurwitz", version, about = "Deformed monotone Hurwitz numbers and friends", args_override_self = true)]
pub struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "DHURWITZ_THREADS")]
    pub threads: Option<usize>,
    /// Write the artifact here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<std::path::PathBuf>,
    /// Output format; each command accepts a subset.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    Monotone,
    #[value(alias = "dessins")]
    Dessin,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Monotone => Family::Monotone,
            FamilyArg::Dessin => Family::Dessin,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// One deformed monotone Hurwitz number or dessin count.
    Hurwitz(HurwitzArgs),
    /// Same as `hurwitz --family dessin`.
    Dessins(DessinArgs),
    /// Table of `Wg^S` (and its leading term `Wg^U`) over the classes of `S_k`.
    Weingarten(WeingartenArgs),
    /// Brute-force enumeration.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Real-rootedness scans and root tables.
    #[command(subcommand)]
    Roots(RootsCommand),
    /// Topological recursion on the spectral curve.
    Tr(TrArgs),
    /// Recompute every cell of the bundled reference tables.
    ReportAppendix,
    /// SVG scatter of the roots of `H_g(mu)` for a range of genera.
    Plot(PlotArgs),
}

#[derive(Args, Debug)]
pub struct HurwitzArgs {
    #[arg(long, value_enum, default_value = "monotone")]
    pub family: FamilyArg,
    #[arg(long)]
    pub genus: u32,
    /// Parts, e.g. `3,2,1`.
    #[arg(long)]
    pub parts: String,
    /// Multiply by the product of the parts.
    #[arg(long)]
    pub times_mu: bool,
}

#[derive(Args, Debug)]
pub struct DessinArgs {
    #[arg(long)]
    pub genus: u32,
    #[arg(long)]
    pub parts: String,
    #[arg(long)]
    pub times_mu: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Character,
    Orthogonality,
    Both,
}

#[derive(Args, Debug)]
pub struct WeingartenArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value = "both")]
    pub method: Method,
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Weighted monotone factorisations of one permutation.
    Monotone {
        /// Cycle notation, 1-based, e.g. `(1 2 3)(4 5)`.
        #[arg(long)]
        perm: String,
        #[arg(long)]
        degree: usize,
        /// Longest factorisation counted.
        #[arg(long)]
        length: usize,
        /// Count only transitive factorisations.
        #[arg(long)]
        transitive: bool,
        /// Also list the factorisations of exactly `length` transpositions.
        #[arg(long)]
        list: bool,
    },
    /// Weighted dessins with given face perimeters.
    Dessin {
        #[arg(long)]
        parts: String,
        #[arg(long)]
        genus: i64,
        /// Allow disconnected surfaces.
        #[arg(long)]
        disconnected: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum RootsCommand {
    /// Check real-rootedness and interlacing over a range of keys.
    Scan {
        #[arg(long, value_enum, default_value = "monotone")]
        family: FamilyArg,
        /// `a..b` (inclusive) or a comma list of consecutive genera.
        #[arg(long, default_value = "0..1")]
        genus: String,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        weight_max: usize,
        #[arg(long)]
        no_real_rooted: bool,
        #[arg(long)]
        no_interlacing: bool,
        /// Keep only failures in the output.
        #[arg(long)]
        brief: bool,
    },
    /// Decimal roots of the monotone `H_g(mu)` for each genus.
    Table {
        #[arg(long)]
        parts: String,
        #[arg(long)]
        genus: String,
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
}

#[derive(Args, Debug)]
pub struct TrArgs {
    #[arg(long, value_enum, default_value = "monotone")]
    pub curve: FamilyArg,
    /// `g,n`
    #[arg(long)]
    pub gn: String,
    /// Largest part extracted.
    #[arg(long, default_value_t = 4)]
    pub orders: usize,
    /// Include the correlator itself.
    #[arg(long)]
    pub raw: bool,
}

#[derive(Args, Debug)]
pub struct PlotArgs {
    #[arg(long)]
    pub parts: String,
    #[arg(long)]
    pub genus: String,
    /// Decimal digits of the plotted roots; 0 draws the axes only.
    #[arg(long, default_value_t = 12)]
    pub digits: usize,
}

fn main() -> ExitCode {
    let args: Vec<OsString> = std::env::args_os().collect();
    let args = match config::expand(args) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: thread count must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool");
    }
    match commands::run(&cli) {
        Ok(out) => {
            if let Err(e) = commands::emit(&cli, &out.artifact) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            for m in &out.problems {
                eprintln!("{m}");
            }
            ExitCode::from(if out.problems.is_empty() { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
