//! `kron`: Kronecker coefficients from the command line.
//!
//! Exit codes: 0 success, 1 verification failure or disagreement between
//! methods, 2 invalid input, 3 a method's hypotheses are not met.

mod kron;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kronecker::nearhook::GBackend;
use kronecker::symfun::{global_cache, CacheFile};
use kronecker::{Error, Partition};

use kron::Method;
use output::Format;

const CACHE_ENV: &str = "KRON_CHAR_CACHE";

#[derive(Parser)]
#[command(name = "kron", version, about = "Kronecker coefficients of the symmetric group")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    output: Format,

    /// Character table cache (JSON); defaults to $KRON_CHAR_CACHE.
    #[arg(long, global = true)]
    cache_file: Option<PathBuf>,

    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// g(λ, μ, ν) by one or all methods.
    Kron {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        /// Evaluation of hook-indexed factors inside the near-hook route.
        #[arg(long, value_enum, default_value_t = Backend::Rosas)]
        backend: Backend,
        /// Print certificates, witness tableaux or the closed-form branch.
        #[arg(long)]
        explain: bool,
    },
    /// List tableaux.
    #[command(subcommand)]
    Enumerate(Enumerate),
    /// Ξ^{[a]}_η(r, c) with its branch.
    Rosas {
        eta: Partition,
        a: i64,
        r: i64,
        c: i64,
        /// Evaluate the formula exactly as printed, without the corrections.
        #[arg(long)]
        as_printed: bool,
    },
    /// Print an expansion of a Schur function.
    #[command(subcommand)]
    Expand(Expand),
    /// Run a verification sweep ("all" for every suite, "list" to list them).
    Verify {
        suite: String,
        /// Size bound; each suite has its own default.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Enumerate {
    /// Littlewood–Richardson tableaux of shape λ/μ and weight ν.
    Lr {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        #[arg(long)]
        ytableau: bool,
    },
    /// Blasiak tableaux of content λ, total color d and shape ν, or the
    /// mixed insertion trace of a colored word.
    Blasiak(BlasiakArgs),
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
struct BlasiakArgs {
    #[command(subcommand)]
    trace: Option<BlasiakTrace>,
    #[arg(required = true)]
    lambda: Option<Partition>,
    #[arg(required = true)]
    d: Option<usize>,
    #[arg(required = true)]
    nu: Option<Partition>,
    #[arg(long)]
    ytableau: bool,
}

#[derive(Subcommand)]
enum BlasiakTrace {
    /// Mixed insertion of a colored word, one letter at a time.
    Trace {
        /// Letters separated by spaces; a bar is written as a trailing '.
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
    },
}

#[derive(Subcommand)]
enum Expand {
    /// Giambelli determinant in hook Schur functions.
    Giambelli { lambda: Partition },
    /// Jacobi–Trudi determinant in complete homogeneous functions.
    JacobiTrudi { lambda: Partition },
    /// Coproduct Σ c^λ_{μν} s_μ ⊗ s_ν.
    Coproduct { lambda: Partition },
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Rosas,
    Oracle,
    Blasiak,
}

impl From<Backend> for GBackend {
    fn from(b: Backend) -> Self {
        match b {
            Backend::Rosas => GBackend::Rosas,
            Backend::Oracle => GBackend::Oracle,
            Backend::Blasiak => GBackend::Blasiak,
        }
    }
}

/// Outcome of a command that ran to completion.
pub enum Status {
    Ok,
    Failed,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Hypothesis(_) => 3,
        Error::Counterexample(_) => 1,
        _ => 2,
    }
}

fn load_cache(path: &PathBuf) -> Result<(), Error> {
    if !path.exists() {
        return Ok(());
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let file: CacheFile =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    global_cache().import(&file)?;
    Ok(())
}

fn save_cache(path: &PathBuf, n: usize) -> Result<(), Error> {
    let file = global_cache().export(n);
    let text = serde_json::to_string(&file).expect("cache serializes");
    std::fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<Status, Error> {
    if cli.jobs > 0 {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    let cache = cli.cache_file.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    if let Some(path) = &cache {
        load_cache(path)?;
    }
    let fmt = cli.output;
    match cli.command {
        Command::Kron { lambda, mu, nu, method, backend, explain } => {
            let n = lambda.size();
            let report = kron::kron(lambda, mu, nu, method, backend.into(), explain)?;
            output::kron(&report, fmt, explain);
            if let Some(path) = &cache {
                save_cache(path, n)?;
            }
            Ok(if report.agree { Status::Ok } else { Status::Failed })
        }
        Command::Enumerate(Enumerate::Lr { lambda, mu, nu, ytableau }) => {
            output::lr(&lambda, &mu, &nu, fmt, ytableau)?;
            Ok(Status::Ok)
        }
        Command::Enumerate(Enumerate::Blasiak(args)) => {
            match (args.trace, args.lambda, args.d, args.nu) {
                (Some(BlasiakTrace::Trace { word }), ..) => output::trace(&word.join(" "), fmt)?,
                (None, Some(lambda), Some(d), Some(nu)) => output::blasiak(&lambda, d, &nu, fmt, args.ytableau)?,
                _ => return Err(Error::Parse("expected λ d ν or trace <word>".into())),
            }
            Ok(Status::Ok)
        }
        Command::Rosas { eta, a, r, c, as_printed } => {
            output::rosas(&eta, a, r, c, as_printed, fmt)?;
            Ok(Status::Ok)
        }
        Command::Expand(e) => {
            match e {
                Expand::Giambelli { lambda } => output::giambelli(&lambda, fmt)?,
                Expand::JacobiTrudi { lambda } => output::jacobi_trudi(&lambda, fmt),
                Expand::Coproduct { lambda } => output::coproduct(&lambda, fmt),
            }
            Ok(Status::Ok)
        }
        Command::Verify { suite, n } => output::verify(&suite, n, cli.jobs, fmt),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
