use clap::{Args, Parser, Subcommand, ValueEnum};

use chiral_core::SearchConfig;
use chiral_atlas::{
    render_table, render_text, run_bench, run_classify, Algorithm, CliError, GroupSpec,
};

#[derive(Parser)]
#[command(name = "chiral-atlas", version, about = "Classify chiral polytopes with a given rotation group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the polytopes of one group.
    Classify(ClassifyArgs),
    /// Compare both algorithms over a list of groups.
    Bench(BenchArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Hard stop on polytope rank.
    #[arg(long, default_value_t = 8)]
    max_rank: usize,
    /// Keep directly regular tuples in the output.
    #[arg(long)]
    include_regular: bool,
    /// Merge each chiral tuple with its mirror image.
    #[arg(long)]
    merge_enantiomorphs: bool,
    /// Bound on any element enumeration.
    #[arg(long, default_value_t = chiral_core::DEFAULT_ENUMERATION_CAP)]
    cap: u128,
    /// Bound concurrent seed searches (0 = rayon default).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

impl CommonArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            max_rank: self.max_rank,
            include_regular: self.include_regular,
            merge_enantiomorphs: self.merge_enantiomorphs,
            enumeration_cap: self.cap,
            ..SearchConfig::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Blt,
    Hhl,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Blt => Algorithm::Blt,
            AlgorithmArg::Hhl => Algorithm::Hhl,
        }
    }
}

#[derive(Args)]
struct ClassifyArgs {
    /// Builtin (sym:n, alt:n, cyc:n, dih:n, psl2:p, psl3:p) or file path.
    #[arg(long)]
    group: String,
    #[arg(long, value_enum, default_value_t = AlgorithmArg::Blt)]
    algorithm: AlgorithmArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct BenchArgs {
    /// Group specs; repeatable.
    #[arg(long = "group", required = true)]
    groups: Vec<String>,
    /// Runs per algorithm per group; minimum wall time is reported.
    #[arg(long, default_value_t = 1)]
    repetitions: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    common: CommonArgs,
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify(args) => with_threads(args.common.threads, || classify(args)),
        Command::Bench(args) => with_threads(args.common.threads, || bench(args)),
    };
    if let Err(e) = result {
        eprintln!("{}", e);
        std::process::exit(e.exit_code());
    }
}

fn with_threads<T>(
    threads: usize,
    f: impl FnOnce() -> Result<T, CliError> + Send,
) -> Result<T, CliError>
where
    T: Send,
{
    if threads == 0 {
        return f();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    pool.install(f)
}

fn classify(args: &ClassifyArgs) -> Result<(), CliError> {
    let spec = GroupSpec::parse(&args.group)?;
    let report = run_classify(&spec, &args.common.config(), args.algorithm.into())?;
    match args.format {
        Format::Text => print!("{}", render_text(&report)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).map_err(|e| CliError::Internal(e.to_string()))?
        ),
    }
    Ok(())
}

fn bench(args: &BenchArgs) -> Result<(), CliError> {
    let specs: Vec<GroupSpec> = args
        .groups
        .iter()
        .map(|g| GroupSpec::parse(g))
        .collect::<Result<_, _>>()?;
    let report = run_bench(&specs, &args.common.config(), args.repetitions)?;
    match args.format {
        Format::Text => print!("{}", render_table(&report)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).map_err(|e| CliError::Internal(e.to_string()))?
        ),
    }
    Ok(())
}
