//! Declarative experiment runner: load a dataset, score it with the
//! requested centralities, drive the SIR simulator, and write plot-ready
//! tables plus a manifest into an output directory.
//!
//! Experiments run sequentially; parallelism lives inside `spread_all` and
//! friends. Output files are written by a single owner and all numeric
//! content is deterministic for a fixed master seed, so rerunning a spec
//! reproduces every file byte for byte.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::centrality::{rank_all, CentralityScores, Method, RankOptions};
use crate::datasets;
use crate::epidemic::{
    spread_all, topk_curve, topk_curve_per_seed_average, InfectionCurve, SirParams, SpreadScores,
};
use crate::error::{NetdimError, Result};
use crate::graph::{largest_component, parse_edge_list, Graph, ParseOptions, ParseSummary};
use crate::stats::{kendall_tau_variant, TauVariant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    Scores,
    Topk,
    BetaSweep,
    GammaSweep,
}

impl ExperimentKind {
    fn name(&self) -> &'static str {
        match self {
            ExperimentKind::Scores => "scores",
            ExperimentKind::Topk => "topk",
            ExperimentKind::BetaSweep => "beta-sweep",
            ExperimentKind::GammaSweep => "gamma-sweep",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// How the top-k experiment seeds its epidemics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TopkMode {
    /// All k nodes infected together at t = 0.
    #[default]
    Simultaneous,
    /// Average of the k single-seed mean curves.
    PerSeedAverage,
}

/// Everything needed to run one experiment.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ExperimentSpec {
    pub dataset: PathBuf,
    pub experiment: ExperimentKind,
    pub methods: Vec<Method>,
    /// Seed-set size for the top-k experiment.
    pub k: usize,
    /// Infection rates swept by `beta-sweep` (recovery fixed at `sir.gamma`).
    pub beta_grid: Vec<f64>,
    /// Recovery rates swept by `gamma-sweep` (infection fixed at `sir.beta`).
    pub gamma_grid: Vec<f64>,
    pub sir: SirParams,
    pub output_dir: PathBuf,
    pub output_format: OutputFormat,
    /// Analyze the graph as loaded instead of its largest component.
    pub keep_whole_graph: bool,
    pub rank: RankOptions,
    pub tau_variant: TauVariant,
    pub topk_mode: TopkMode,
}

/// Grid the infection-rate sweep uses by default: 0.01 to 0.1 in steps of 0.01.
pub fn default_beta_grid() -> Vec<f64> {
    (1..=10).map(|i| i as f64 / 100.0).collect()
}

/// Grid the recovery-rate sweep uses by default: 0 to 1 in steps of 0.1.
pub fn default_gamma_grid() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

impl ExperimentSpec {
    pub fn new(dataset: impl Into<PathBuf>, experiment: ExperimentKind) -> ExperimentSpec {
        ExperimentSpec {
            dataset: dataset.into(),
            experiment,
            methods: Method::ALL.to_vec(),
            k: 10,
            beta_grid: default_beta_grid(),
            gamma_grid: default_gamma_grid(),
            sir: SirParams::default(),
            output_dir: PathBuf::from("netdim-out"),
            output_format: OutputFormat::Csv,
            keep_whole_graph: false,
            rank: RankOptions::default(),
            tau_variant: TauVariant::TauA,
            topk_mode: TopkMode::Simultaneous,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.sir.validate()?;
        if self.methods.is_empty() {
            return Err(NetdimError::Config(
                "at least one method is required".into(),
            ));
        }
        match self.experiment {
            ExperimentKind::BetaSweep => validate_grid("beta", &self.beta_grid)?,
            ExperimentKind::GammaSweep => validate_grid("gamma", &self.gamma_grid)?,
            ExperimentKind::Topk => {
                if self.k == 0 {
                    return Err(NetdimError::Config("k must be >= 1".into()));
                }
            }
            ExperimentKind::Scores => {}
        }
        Ok(())
    }
}

fn validate_grid(name: &str, grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(NetdimError::Config(format!("{name} grid must be nonempty")));
    }
    if grid.iter().any(|v| !(0.0..=1.0).contains(v)) {
        return Err(NetdimError::Config(format!(
            "{name} grid values must lie in [0, 1]"
        )));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(NetdimError::Config(format!(
            "{name} grid must be strictly increasing"
        )));
    }
    Ok(())
}

/// Which rate a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweptParam {
    Beta,
    Gamma,
}

/// Kendall tau of every method against spreading ability, per grid value.
#[derive(Debug, Clone)]
pub struct SweepTable {
    pub swept: SweptParam,
    pub methods: Vec<Method>,
    pub grid: Vec<f64>,
    /// `cells[m][g]` = tau of `methods[m]` at `grid[g]`.
    pub cells: Vec<Vec<f64>>,
}

impl SweepTable {
    pub fn cell(&self, method: Method, grid_index: usize) -> Option<f64> {
        let row = self.methods.iter().position(|&m| m == method)?;
        self.cells[row].get(grid_index).copied()
    }

    /// First column `method`, remaining columns the grid values with two
    /// decimals.
    pub fn write_csv<W: Write>(&self, mut writer: W) -> Result<()> {
        write!(writer, "method")?;
        for value in &self.grid {
            write!(writer, ",{value:.2}")?;
        }
        writeln!(writer)?;
        for (method, row) in self.methods.iter().zip(&self.cells) {
            write!(writer, "{method}")?;
            for tau in row {
                write!(writer, ",{tau}")?;
            }
            writeln!(writer)?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .methods
            .iter()
            .zip(&self.cells)
            .map(|(method, row)| serde_json::json!({ "method": method.name(), "tau": row }))
            .collect();
        serde_json::json!({
            "swept": match self.swept { SweptParam::Beta => "beta", SweptParam::Gamma => "gamma" },
            "grid": self.grid,
            "rows": rows,
        })
    }
}

/// A parsed dataset plus everything the manifest wants to say about it.
#[derive(Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub summary: ParseSummary,
    pub loaded_nodes: usize,
    pub loaded_edges: usize,
    pub lcc_applied: bool,
    pub registry: Option<&'static datasets::DatasetInfo>,
    pub warnings: Vec<String>,
}

/// Reads an edge-list file, checks it against the dataset registry, and
/// (unless told otherwise) restricts to the largest connected component.
pub fn load_graph(path: &Path, keep_whole_graph: bool) -> Result<LoadedGraph> {
    let file = File::open(path).map_err(|e| {
        NetdimError::Io(std::io::Error::new(
            e.kind(),
            format!(
                "cannot open dataset {}: {e}; dataset files are not bundled — \
                 see docs/datasets.md for sources and placement",
                path.display()
            ),
        ))
    })?;
    let (graph, summary) = parse_edge_list(BufReader::new(file), &ParseOptions::default())?;
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or_default();
    let registry = datasets::lookup(stem);
    let mut warnings = Vec::new();
    if let Some(warning) = datasets::verify_counts(stem, &graph, &summary) {
        warnings.push(warning);
    }
    let (loaded_nodes, loaded_edges) = (graph.node_count(), graph.edge_count());
    let (graph, lcc_applied) = if keep_whole_graph {
        (graph, false)
    } else {
        let (sub, _) = largest_component(&graph)?;
        if sub.node_count() < loaded_nodes {
            warnings.push(format!(
                "restricted to largest connected component: {} of {} nodes kept",
                sub.node_count(),
                loaded_nodes
            ));
        }
        (sub, true)
    };
    Ok(LoadedGraph {
        graph,
        summary,
        loaded_nodes,
        loaded_edges,
        lcc_applied,
        registry,
        warnings,
    })
}

fn ranked_methods(g: &Graph, spec: &ExperimentSpec) -> Result<Vec<CentralityScores>> {
    spec.methods
        .iter()
        .map(|&m| rank_all(g, m, &spec.rank))
        .collect()
}

/// Tau of each prepared score set against each grid point's spread means.
fn tau_table(
    swept: SweptParam,
    methods: &[Method],
    score_sets: &[Vec<f64>],
    grid: &[f64],
    spreads: &[SpreadScores],
    variant: TauVariant,
) -> Result<SweepTable> {
    let cells = score_sets
        .iter()
        .map(|scores| {
            spreads
                .iter()
                .map(|spread| kendall_tau_variant(scores, spread.means(), variant))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        swept,
        methods: methods.to_vec(),
        grid: grid.to_vec(),
        cells,
    })
}

fn run_sweep(
    g: &Graph,
    spec: &ExperimentSpec,
    swept: SweptParam,
) -> Result<(SweepTable, Vec<SpreadScores>)> {
    let grid = match swept {
        SweptParam::Beta => &spec.beta_grid,
        SweptParam::Gamma => &spec.gamma_grid,
    };
    let ranked = ranked_methods(g, spec)?;
    let score_sets: Vec<Vec<f64>> = ranked.iter().map(|r| r.scores().to_vec()).collect();
    // One spread computation per grid point, shared by every method's tau.
    let spreads = grid
        .iter()
        .map(|&value| {
            let params = match swept {
                SweptParam::Beta => SirParams {
                    beta: value,
                    ..spec.sir
                },
                SweptParam::Gamma => SirParams {
                    gamma: value,
                    ..spec.sir
                },
            };
            spread_all(g, &params)
        })
        .collect::<Result<Vec<_>>>()?;
    let table = tau_table(
        swept,
        &spec.methods,
        &score_sets,
        grid,
        &spreads,
        spec.tau_variant,
    )?;
    Ok((table, spreads))
}

/// Kendall tau of every requested method against spreading ability across the
/// infection-rate grid, with recovery fixed at `spec.sir.gamma`.
pub fn run_beta_sweep(g: &Graph, spec: &ExperimentSpec) -> Result<SweepTable> {
    Ok(run_sweep(g, spec, SweptParam::Beta)?.0)
}

/// Kendall tau across the recovery-rate grid, infection fixed at `spec.sir.beta`.
pub fn run_gamma_sweep(g: &Graph, spec: &ExperimentSpec) -> Result<SweepTable> {
    Ok(run_sweep(g, spec, SweptParam::Gamma)?.0)
}

/// Mean infection curve seeded by each method's top-k nodes.
pub fn run_topk(g: &Graph, spec: &ExperimentSpec) -> Result<Vec<(Method, InfectionCurve)>> {
    if spec.k > g.node_count() {
        return Err(NetdimError::Config(format!(
            "k = {} exceeds the {}-node analyzed graph",
            spec.k,
            g.node_count()
        )));
    }
    let ranked = ranked_methods(g, spec)?;
    spec.methods
        .iter()
        .zip(&ranked)
        .map(|(&method, scores)| {
            let curve = match spec.topk_mode {
                TopkMode::Simultaneous => topk_curve(g, scores, spec.k, &spec.sir)?,
                TopkMode::PerSeedAverage => {
                    topk_curve_per_seed_average(g, scores, spec.k, &spec.sir)?
                }
            };
            Ok((method, curve))
        })
        .collect()
}

/// Full score tables for each requested method.
pub fn run_scores(g: &Graph, spec: &ExperimentSpec) -> Result<Vec<(Method, CentralityScores)>> {
    Ok(spec
        .methods
        .iter()
        .copied()
        .zip(ranked_methods(g, spec)?)
        .collect())
}

/// Paths written by [`run_experiment`], relative file names included in the
/// manifest.
#[derive(Debug)]
pub struct RunArtifacts {
    pub output_dir: PathBuf,
    pub files: Vec<PathBuf>,
}

#[derive(serde::Serialize)]
struct Manifest<'a> {
    tool: &'static str,
    version: &'static str,
    experiment: &'static str,
    spec: &'a ExperimentSpec,
    graph: GraphSummary,
    warnings: &'a [String],
    outputs: Vec<String>,
}

#[derive(serde::Serialize)]
struct GraphSummary {
    loaded_nodes: usize,
    loaded_edges: usize,
    analyzed_nodes: usize,
    analyzed_edges: usize,
    largest_component_applied: bool,
    parse: ParseSummary,
    registry: Option<&'static datasets::DatasetInfo>,
}

struct OutputWriter<'a> {
    dir: &'a Path,
    format: OutputFormat,
    files: Vec<PathBuf>,
}

impl<'a> OutputWriter<'a> {
    fn new(dir: &'a Path, format: OutputFormat) -> Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(OutputWriter {
            dir,
            format,
            files: Vec::new(),
        })
    }

    fn path(&mut self, stem: &str) -> PathBuf {
        let ext = match self.format {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        };
        let rel = PathBuf::from(format!("{stem}.{ext}"));
        self.files.push(rel.clone());
        self.dir.join(rel)
    }

    fn emit<FC, FJ>(&mut self, stem: &str, write_csv: FC, to_json: FJ) -> Result<()>
    where
        FC: FnOnce(&mut dyn Write) -> Result<()>,
        FJ: FnOnce() -> serde_json::Value,
    {
        let path = self.path(stem);
        let mut writer = BufWriter::new(File::create(&path)?);
        match self.format {
            OutputFormat::Csv => write_csv(&mut writer)?,
            OutputFormat::Json => {
                serde_json::to_writer_pretty(&mut writer, &to_json())?;
                writeln!(writer)?;
            }
        }
        writer.flush()?;
        Ok(())
    }
}

fn grid_value_stem(prefix: &str, value: f64) -> String {
    format!("spread/{prefix}_{value:.2}")
}

fn write_combined_topk<W: Write>(
    methods: &[Method],
    curves: &[(Method, InfectionCurve)],
    mut writer: W,
) -> Result<()> {
    write!(writer, "t")?;
    for method in methods {
        write!(writer, ",{method}")?;
    }
    writeln!(writer)?;
    let steps = curves[0].1.mean_affected.len();
    for t in 0..steps {
        write!(writer, "{t}")?;
        for (_, curve) in curves {
            write!(writer, ",{}", curve.mean_affected[t])?;
        }
        writeln!(writer)?;
    }
    Ok(())
}

/// Loads the dataset, runs the experiment, and writes all output files plus
/// `manifest.json` into `spec.output_dir`.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<RunArtifacts> {
    spec.validate()?;
    let loaded = load_graph(&spec.dataset, spec.keep_whole_graph)?;
    let g = &loaded.graph;
    let mut writer = OutputWriter::new(&spec.output_dir, spec.output_format)?;

    match spec.experiment {
        ExperimentKind::Scores => {
            for (method, scores) in run_scores(g, spec)? {
                writer.emit(
                    &format!("scores_{method}"),
                    |w| scores.write_csv(g, w),
                    || scores.to_json(g),
                )?;
            }
        }
        ExperimentKind::Topk => {
            let curves = run_topk(g, spec)?;
            for (method, curve) in &curves {
                writer.emit(
                    &format!("topk_curve_{method}"),
                    |w| curve.write_csv(w),
                    || {
                        serde_json::json!({
                            "method": method.name(),
                            "seeds": curve.seeds,
                            "mean_affected": curve.mean_affected,
                        })
                    },
                )?;
            }
            writer.emit(
                "topk_combined",
                |w| write_combined_topk(&spec.methods, &curves, w),
                || {
                    let rows: Vec<serde_json::Value> = curves
                        .iter()
                        .map(|(m, c)| {
                            serde_json::json!({
                                "method": m.name(),
                                "mean_affected": c.mean_affected,
                            })
                        })
                        .collect();
                    serde_json::json!({ "curves": rows })
                },
            )?;
        }
        ExperimentKind::BetaSweep | ExperimentKind::GammaSweep => {
            let swept = match spec.experiment {
                ExperimentKind::BetaSweep => SweptParam::Beta,
                _ => SweptParam::Gamma,
            };
            let (table, spreads) = run_sweep(g, spec, swept)?;
            let (stem, prefix) = match swept {
                SweptParam::Beta => ("beta_sweep", "beta"),
                SweptParam::Gamma => ("gamma_sweep", "gamma"),
            };
            writer.emit(stem, |w| table.write_csv(w), || table.to_json())?;
            fs::create_dir_all(spec.output_dir.join("spread"))?;
            for (value, spread) in table.grid.iter().zip(&spreads) {
                writer.emit(
                    &grid_value_stem(prefix, *value),
                    |w| spread.write_csv(w),
                    || {
                        serde_json::json!({
                            "param": prefix,
                            "value": value,
                            "mean_affected": spread.means(),
                        })
                    },
                )?;
            }
        }
    }

    let manifest = Manifest {
        tool: "netdim",
        version: env!("CARGO_PKG_VERSION"),
        experiment: spec.experiment.name(),
        spec,
        graph: GraphSummary {
            loaded_nodes: loaded.loaded_nodes,
            loaded_edges: loaded.loaded_edges,
            analyzed_nodes: g.node_count(),
            analyzed_edges: g.edge_count(),
            largest_component_applied: loaded.lcc_applied,
            parse: loaded.summary,
            registry: loaded.registry,
        },
        warnings: &loaded.warnings,
        outputs: writer
            .files
            .iter()
            .map(|p| p.display().to_string())
            .collect(),
    };
    let manifest_path = spec.output_dir.join("manifest.json");
    let mut mf = BufWriter::new(File::create(&manifest_path)?);
    serde_json::to_writer_pretty(&mut mf, &manifest)?;
    writeln!(mf)?;
    mf.flush()?;

    let mut files = writer.files;
    files.push(PathBuf::from("manifest.json"));
    for warning in &loaded.warnings {
        eprintln!("warning: {warning}");
    }
    Ok(RunArtifacts {
        output_dir: spec.output_dir.clone(),
        files,
    })
}
