//! `twistkit`: enumerate diagram monoids, verify twistings, and analyse
//! twisted products from the command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error,
//! 3 a size bound was exceeded.

mod cache;
mod commands;
mod error;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use twistkit_core::eggbox::Format;

use cache::Cache;
use commands::{Check, EggSource, Sections};
use error::CliError;
use spec::{BaseSpec, ProductSpec, TwistSpec};

#[derive(Parser)]
#[command(name = "twistkit", version, about = "Twisted products of monoids")]
struct Cli {
    /// Cache directory (default: $TWISTKIT_CACHE, then the platform data dir).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Do not read or write the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BaseArgs {
    /// P, PB, B, PP, TL, Mz, T, I, Sym, PT (partial maps), Mat, Eq.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// Field size for Mat.
    #[arg(long)]
    p: Option<u32>,
}

impl BaseArgs {
    fn spec(&self) -> Result<BaseSpec, CliError> {
        BaseSpec::from_flags(&self.family, self.n, self.p)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the elements of a base monoid.
    Enumerate {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check the twisting axioms on a base monoid.
    Verify {
        #[command(flatten)]
        base: BaseArgs,
        /// canonical, rank, trivial or shift:<k>:<twisting>.
        #[arg(long, default_value = "canonical")]
        twisting: String,
        #[arg(long, value_delimiter = ',', default_value = "cocycle,tight")]
        checks: Vec<Check>,
        #[arg(long)]
        json: bool,
    },
    /// Build a twisted product from `<monoid>|q=<elem>|<family>:<n>|<twisting>`.
    Product {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        green: bool,
        #[arg(long)]
        idempotents: bool,
        #[arg(long)]
        regular: bool,
        #[arg(long)]
        schutz: bool,
        #[arg(long)]
        biorder: bool,
        #[arg(long)]
        stability: bool,
        /// Compare predictions with the generic computation (all sections
        /// if none is selected).
        #[arg(long)]
        crosscheck: bool,
    },
    /// Egg-box diagram of a product or a base monoid.
    #[command(group(ArgGroup::new("source").required(true).args(["spec", "family"])))]
    Eggbox {
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, requires = "n")]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, default_value = "ascii")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Idempotent-generated submonoid of a product.
    Ig {
        #[arg(long)]
        spec: String,
        /// Window cap K for N or Z.
        #[arg(long)]
        window: Option<i64>,
        /// Print the elements.
        #[arg(long)]
        list: bool,
    },
    /// Inspect or empty the cache.
    #[command(group(ArgGroup::new("action").required(true).args(["clear", "stats"])))]
    Cache {
        #[arg(long)]
        clear: bool,
        #[arg(long)]
        stats: bool,
    },
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let cache = || Cache::resolve(cli.cache_dir.clone(), cli.no_cache);
    match cli.command {
        Command::Enumerate { ref base, json } => commands::enumerate(&base.spec()?, json),
        Command::Verify {
            ref base,
            ref twisting,
            ref checks,
            json,
        } => commands::verify(&base.spec()?, &twisting.parse::<TwistSpec>()?, checks, json),
        Command::Product {
            ref spec,
            green,
            idempotents,
            regular,
            schutz,
            biorder,
            stability,
            crosscheck,
        } => {
            let sections = Sections {
                green,
                idempotents,
                regular,
                schutz,
                biorder,
                stability,
            };
            commands::product(&spec.parse::<ProductSpec>()?, sections, crosscheck, &cache())
        }
        Command::Eggbox {
            ref spec,
            ref family,
            n,
            p,
            format,
            ref out,
        } => {
            let source = match (spec, family) {
                (Some(s), _) => EggSource::Spec(s.parse()?),
                (None, Some(f)) => EggSource::Base(BaseSpec::from_flags(f, n.expect("clap requires n"), p)?),
                (None, None) => unreachable!("clap requires a source"),
            };
            commands::eggbox(&source, format, out.as_ref(), &cache())
        }
        Command::Ig { ref spec, window, list } => commands::ig(&spec.parse::<ProductSpec>()?, window, list),
        Command::Cache { clear, .. } => {
            let cache = cache();
            let dir = cache
                .dir()
                .ok_or_else(|| CliError::Usage("no usable cache directory".into()))?
                .display()
                .to_string();
            if clear {
                println!("removed {} entries from {dir}", cache.clear()?);
            } else {
                let s = cache.stats()?;
                println!("cache: {dir}\nentries: {}\nbytes: {}", s.entries, s.bytes);
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
