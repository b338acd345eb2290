use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use vnum_cli::{parse_prime, run, Caps, CliError, Command, CycleMode, Format, PrimeSelector, RunConfig};

/// v-numbers of binomial edge ideals.
#[derive(Parser, Debug)]
#[command(name = "vnum", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Cap on polynomials created by one Gröbner computation.
    #[arg(long, global = true, env = "VNUM_MAX_POLYS", default_value_t = 20_000)]
    max_polys: usize,
    /// Cap on the degree of basis elements.
    #[arg(long, global = true, env = "VNUM_MAX_DEGREE", default_value_t = 40)]
    max_degree: u32,
    /// Wall-clock budget per prime, in seconds.
    #[arg(long, global = true, env = "VNUM_TIME_BUDGET_SECS", default_value_t = 300)]
    time_budget_secs: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, short = 'j', global = true, env = "VNUM_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Report 0 ms for every prime so output is reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Localized and global v-numbers of a graph file.
    Compute {
        file: PathBuf,
        /// Every minimal prime (the default).
        #[arg(long, conflicts_with = "prime")]
        all: bool,
        /// A cut such as `1,3`, or `empty`; may repeat.
        #[arg(long)]
        prime: Vec<String>,
        /// Skip all algebra and report the combinatorial windows.
        #[arg(long)]
        bounds_only: bool,
        /// Cross-check each value against the decomposition oracle.
        #[arg(long, conflicts_with = "bounds_only")]
        oracle: bool,
    },
    /// The cycle C_n.
    Cycle {
        n: usize,
        /// Compute every localized value and check it against its window (the default).
        #[arg(long, conflicts_with = "bounds")]
        verify: bool,
        /// Print the windows without computing.
        #[arg(long)]
        bounds: bool,
    },
    /// Same as `cycle <n> --bounds`.
    Bounds {
        #[command(subcommand)]
        family: Family,
    },
    /// Reduced Gröbner basis of J_G under a relabelled lex order.
    Gb {
        file: PathBuf,
        /// File holding one line of n space-separated images σ(1) .. σ(n).
        #[arg(long)]
        sigma: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    Cycle { n: usize },
}

fn config(cli: Cli) -> Result<RunConfig, CliError> {
    let command = match cli.command {
        Sub::Compute { file, all: _, prime, bounds_only, oracle } => {
            let primes = if prime.is_empty() {
                PrimeSelector::All
            } else {
                PrimeSelector::Sets(prime.iter().map(|p| parse_prime(p)).collect::<Result<_, _>>()?)
            };
            Command::Compute { input: file, primes, bounds_only, oracle }
        }
        Sub::Cycle { n, verify: _, bounds } => {
            Command::Cycle { n, mode: if bounds { CycleMode::Bounds } else { CycleMode::Verify } }
        }
        Sub::Bounds { family: Family::Cycle { n } } => Command::Cycle { n, mode: CycleMode::Bounds },
        Sub::Gb { file, sigma } => Command::Gb { input: file, sigma },
    };
    let g = cli.global;
    Ok(RunConfig {
        command,
        caps: Caps { max_polys: g.max_polys, max_degree: g.max_degree, time_budget_secs: g.time_budget_secs },
        format: if g.json { Format::Json } else { Format::Table },
        jobs: g.jobs,
        timing: !g.no_timing,
    })
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let result = config(cli).and_then(|c| run(&c).map(|out| (c.format, out)));
    match result {
        Ok((format, out)) => {
            print!("{}", out.document.render(format));
            ExitCode::from(out.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
