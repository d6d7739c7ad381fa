//! Batch driver: parse partitions and parameters, run any verifier over a
//! single input or a whole corpus, and emit deterministic reports.
//!
//! Exit codes: 0 when every requested check passes, 1 when an identity
//! fails, 2 on usage errors (missing or invalid parameters). Reports carry a
//! `meta` header (timing, version) and a `result` body; only the body is
//! contract-stable and it is byte-identical across runs for a fixed
//! configuration.

mod corpus;
mod output;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Parser)]
#[command(
    name = "hookforge",
    version,
    about = "Exact hook-combinatorics verifier"
)]
struct Cli {
    /// JSON file with the same fields as the flags; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Worker-pool width for corpus runs.
    #[arg(long, global = true, env = "HOOKFORGE_JOBS")]
    jobs: Option<usize>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Subcommand)]
enum Command {
    /// Run one identity verifier.
    Verify {
        #[command(subcommand)]
        which: VerifyCmd,
    },
    /// Dump an enumeration (newline-delimited records).
    Enumerate {
        #[command(subcommand)]
        which: EnumerateCmd,
    },
    /// Series utilities.
    Series {
        #[command(subcommand)]
        which: SeriesCmd,
    },
    /// Run every verifier over all partitions up to a size and all valid
    /// parameter grids, in parallel, and aggregate one summary.
    Corpus(Params),
}

#[derive(Clone, Subcommand)]
enum VerifyCmd {
    /// Hook-type multiset identity for any partition.
    Bessenrodt(Params),
    /// Constructive coverage bijection for thin partitions.
    Tectonic(Params),
    /// Hook-to-strip bijection between S_{d,ell} and S'_{d-ell,ell}.
    Hookstrip(Params),
    /// Reverse-plane-partition sum against the internal hook product.
    Gansner(Params),
    /// Skew-plane-partition sum against the external hook product.
    Skew(Params),
    /// Hook-type product identity and its one-variable specialisation.
    Wallcross(Params),
    /// Arm/leg-refined reverse-plane-partition weight.
    RefinedRpp(Params),
    /// Generating-series forms of hook-to-strip.
    HookstripSeries(Params),
    /// Combined identity over all strip lengths.
    Ultimate(Params),
    /// Twisted-boson matrix-element identity.
    Fock(Params),
}

#[derive(Clone, Subcommand)]
enum EnumerateCmd {
    /// All partitions of --d.
    Partitions(Params),
    /// Reverse plane partitions of --lambda up to --max-size.
    Rpp(Params),
    /// Skew plane partitions of --lambda up to --max-size.
    Spp(Params),
    /// Internal hooks and external hooks up to --bound.
    Hooks(Params),
}

#[derive(Clone, Subcommand)]
enum SeriesCmd {
    /// Dump one truncated series as sorted TSV `monomial<TAB>coefficient`.
    Emit {
        #[arg(value_enum)]
        kind: Option<SeriesKind>,
        #[command(flatten)]
        params: Params,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum SeriesKind {
    /// Content-weighted sum over reverse plane partitions.
    RppSum,
    /// Product of geometric series over internal hooks.
    RppProduct,
    /// Content-weighted sum over skew plane partitions.
    SppSum,
    /// Product of geometric series over external hooks up to the cap.
    SppProduct,
}

/// Every per-command parameter, all optional at parse time; the resolver
/// reports the missing ones by name.
#[derive(Clone, Default, Args)]
struct Params {
    /// Partition, comma-separated parts (empty string for the empty one).
    #[arg(long)]
    lambda: Option<String>,
    /// Partition size parameter.
    #[arg(long)]
    d: Option<usize>,
    /// Hook / strip length.
    #[arg(long)]
    ell: Option<usize>,
    /// Total-degree truncation of series.
    #[arg(long)]
    cap: Option<usize>,
    /// Hook-length bound for multiset comparisons.
    #[arg(long)]
    bound: Option<usize>,
    /// Side of the coverage box.
    #[arg(long = "box")]
    box_size: Option<usize>,
    /// Size ceiling for enumerations and corpus runs.
    #[arg(long)]
    max_size: Option<usize>,
}

/// The configuration-file twin of the command line.
#[derive(Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    command: Option<String>,
    lambda: Option<String>,
    d: Option<usize>,
    ell: Option<usize>,
    cap: Option<usize>,
    bound: Option<usize>,
    #[serde(rename = "box")]
    box_size: Option<usize>,
    max_size: Option<usize>,
    kind: Option<SeriesKind>,
    format: Option<Format>,
    output: Option<PathBuf>,
    jobs: Option<usize>,
}

/// A usage error: reported on stderr, exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run::run(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
