//! `netdim` — rank nodes by volume-dimension and baseline centralities, and
//! evaluate them against SIR spreading experiments.
//!
//! Exit codes: 0 success, 1 usage/config error, 2 I/O error,
//! 3 numerical/convergence error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};

use netdim::baselines::PageRankConfig;
use netdim::epidemic::DEFAULT_MASTER_SEED;
use netdim::experiment::{
    default_beta_grid, default_gamma_grid, run_experiment, ExperimentKind, ExperimentSpec,
    OutputFormat, TopkMode,
};
use netdim::{DimensionOptions, Method, NetdimError, RankOptions, SirParams, TauVariant};

#[derive(Parser)]
#[command(
    name = "netdim",
    version,
    about = "Node-importance toolkit: LVID/LVD volume-dimension centralities, \
             baselines, and SIR spreading experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one ranked score table per method
    Scores(ScoresArgs),
    /// Seed each method's top-k nodes and record mean infection curves
    Topk(TopkArgs),
    /// Kendall tau vs. spreading ability across an infection-rate grid
    BetaSweep(BetaSweepArgs),
    /// Kendall tau vs. spreading ability across a recovery-rate grid
    GammaSweep(GammaSweepArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Edge-list file (two whitespace-separated endpoints per line, '#' comments)
    #[arg(long, value_name = "PATH")]
    graph: PathBuf,

    /// Comma-separated methods: lvid, lvd, bc, pr, degree, gravity
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "lvid,lvd,bc,pr,degree,gravity"
    )]
    methods: Vec<String>,

    /// Output directory (created if missing)
    #[arg(long, value_name = "DIR", default_value = "netdim-out")]
    out: PathBuf,

    /// Data file format
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Analyze the graph as loaded instead of its largest connected component
    #[arg(long)]
    keep_whole_graph: bool,

    /// Use minus the regression slope as the LVD/LVID score
    #[arg(long, value_name = "BOOL", default_value_t = true, action = ArgAction::Set)]
    negate_slope: bool,

    /// Count a node's own degree inside its volume profile
    #[arg(long, value_name = "BOOL", default_value_t = true, action = ArgAction::Set)]
    include_self: bool,

    /// Distance cutoff for the gravity centrality
    #[arg(long, value_name = "RADIUS", default_value_t = 3)]
    gravity_radius: u32,

    /// Steps per simulation run (T)
    #[arg(long, default_value_t = 25)]
    steps: u32,

    /// Independent runs per measurement (N)
    #[arg(long, default_value_t = 100)]
    runs: u32,

    /// Master RNG seed; reruns with the same seed reproduce outputs byte for byte
    #[arg(long, default_value_t = DEFAULT_MASTER_SEED)]
    seed: u64,
}

#[derive(Args)]
struct ScoresArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct TopkArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Seed-set size
    #[arg(long, default_value_t = 10)]
    k: usize,

    /// Infection probability
    #[arg(long, default_value_t = 0.05)]
    beta: f64,

    /// Recovery probability
    #[arg(long, default_value_t = 0.0)]
    gamma: f64,

    /// Average k single-seed curves instead of seeding all k nodes at once
    #[arg(long)]
    per_seed_average: bool,
}

#[derive(Args)]
struct BetaSweepArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Comma-separated infection-rate grid (default 0.01..0.10 step 0.01)
    #[arg(long, value_delimiter = ',', value_name = "GRID")]
    beta: Option<Vec<f64>>,

    /// Fixed recovery probability
    #[arg(long, default_value_t = 0.0)]
    gamma: f64,

    /// Use tie-corrected tau-b instead of the plain tau
    #[arg(long)]
    tau_b: bool,
}

#[derive(Args)]
struct GammaSweepArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Comma-separated recovery-rate grid (default 0.0..1.0 step 0.1)
    #[arg(long, value_delimiter = ',', value_name = "GRID")]
    gamma: Option<Vec<f64>>,

    /// Fixed infection probability
    #[arg(long, default_value_t = 0.05)]
    beta: f64,

    /// Use tie-corrected tau-b instead of the plain tau
    #[arg(long)]
    tau_b: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

fn parse_methods(names: &[String]) -> Result<Vec<Method>, NetdimError> {
    if names.is_empty() {
        return Err(NetdimError::Config(
            "at least one method is required".into(),
        ));
    }
    names.iter().map(|name| Method::from_str(name)).collect()
}

fn build_spec(common: &CommonArgs, kind: ExperimentKind) -> Result<ExperimentSpec, NetdimError> {
    let mut spec = ExperimentSpec::new(common.graph.clone(), kind);
    spec.methods = parse_methods(&common.methods)?;
    spec.output_dir = common.out.clone();
    spec.output_format = common.format.into();
    spec.keep_whole_graph = common.keep_whole_graph;
    spec.rank = RankOptions {
        dimension: DimensionOptions {
            include_self: common.include_self,
            negate_slope: common.negate_slope,
        },
        gravity_radius: common.gravity_radius,
        pagerank: PageRankConfig::default(),
    };
    spec.sir = SirParams {
        steps: common.steps,
        runs: common.runs,
        master_seed: common.seed,
        ..SirParams::default()
    };
    Ok(spec)
}

fn spec_from_command(command: &Command) -> Result<ExperimentSpec, NetdimError> {
    match command {
        Command::Scores(args) => build_spec(&args.common, ExperimentKind::Scores),
        Command::Topk(args) => {
            let mut spec = build_spec(&args.common, ExperimentKind::Topk)?;
            spec.k = args.k;
            spec.sir.beta = args.beta;
            spec.sir.gamma = args.gamma;
            spec.topk_mode = if args.per_seed_average {
                TopkMode::PerSeedAverage
            } else {
                TopkMode::Simultaneous
            };
            Ok(spec)
        }
        Command::BetaSweep(args) => {
            let mut spec = build_spec(&args.common, ExperimentKind::BetaSweep)?;
            spec.beta_grid = args.beta.clone().unwrap_or_else(default_beta_grid);
            spec.sir.gamma = args.gamma;
            spec.tau_variant = if args.tau_b {
                TauVariant::TauB
            } else {
                TauVariant::TauA
            };
            Ok(spec)
        }
        Command::GammaSweep(args) => {
            let mut spec = build_spec(&args.common, ExperimentKind::GammaSweep)?;
            spec.gamma_grid = args.gamma.clone().unwrap_or_else(default_gamma_grid);
            spec.sir.beta = args.beta;
            spec.tau_variant = if args.tau_b {
                TauVariant::TauB
            } else {
                TauVariant::TauA
            };
            Ok(spec)
        }
    }
}

fn run(command: &Command) -> Result<(), NetdimError> {
    let spec = spec_from_command(command)?;
    let artifacts = run_experiment(&spec)?;
    println!(
        "wrote {} file(s) to {}",
        artifacts.files.len(),
        artifacts.output_dir.display()
    );
    for file in &artifacts.files {
        println!("  {}", file.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help / --version land here too and must stay exit 0
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
