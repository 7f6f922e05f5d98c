use std::path::PathBuf;
use std::process::ExitCode;

use biclayout::{AlgorithmId, ColorMode, DemeritInsertion, ObjectiveKind, TspConfig};
use biclayout_cli::{run, CliError, InstancePaths, RunConfig};
use clap::Parser;

/// Reorders rows and columns of a binary matrix to display an overlapping
/// biclustering, renders the result and scores the layout algorithms.
///
/// All indices in input files and reports are 1-based.
#[derive(Debug, Parser)]
#[command(name = "biclayout", version)]
struct Args {
    /// Matrix file (dense `m n` + rows of 0/1, or sparse `m n nnz` + `row col` lines).
    /// Repeat together with --clustering to process several instances.
    #[arg(long, required = true)]
    matrix: Vec<PathBuf>,

    /// Clustering JSON `{"clusters":[{"rows":[..],"cols":[..]}]}`. One per
    /// --matrix, or several sharing a single --matrix.
    #[arg(long, required = true)]
    clustering: Vec<PathBuf>,

    /// Layout algorithm (repeatable), or `all`.
    #[arg(long, default_value = "all")]
    algorithm: Vec<String>,

    /// Objective to report (repeatable); defaults to all four.
    #[arg(long)]
    objective: Vec<ObjectiveKind>,

    /// Image path template; writes `<stem>.<algorithm>.ppm` (or `.png` if the
    /// template ends in `.png`).
    #[arg(long)]
    out_image: Option<PathBuf>,

    /// JSON score report.
    #[arg(long)]
    out_report: Option<PathBuf>,

    /// `six-color` or `two-color`.
    #[arg(long, default_value_t = ColorMode::SixColor)]
    color_mode: ColorMode,

    /// Suggest unclustered rows/columns that resemble a cluster and draw them in their own band.
    #[arg(long)]
    postprocess: bool,

    /// Outline the hull of this cluster (1-based).
    #[arg(long, value_name = "CLUSTER-INDEX")]
    hull: Option<usize>,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, default_value_t = TspConfig::default().max_passes)]
    tsp_max_passes: usize,

    #[arg(long, default_value_t = TspConfig::default().time_limit.as_millis() as u64)]
    tsp_time_ms: u64,

    /// Pixels per matrix cell.
    #[arg(long, default_value_t = 1)]
    scale: u32,

    /// `verbatim` or `insertion-min`.
    #[arg(long, default_value_t = DemeritInsertion::Verbatim)]
    demerit_insertion: DemeritInsertion,

    /// JSON palette overriding the default colors.
    #[arg(long)]
    palette: Option<PathBuf>,
}

fn algorithms(names: &[String]) -> Result<Vec<AlgorithmId>, CliError> {
    let mut out = Vec::new();
    for n in names {
        if n == "all" {
            out.extend(AlgorithmId::ALL);
        } else {
            out.push(n.parse().map_err(CliError::Config)?);
        }
    }
    Ok(out)
}

fn instances(matrices: &[PathBuf], clusterings: &[PathBuf]) -> Result<Vec<InstancePaths>, CliError> {
    let pair = |m: &PathBuf, c: &PathBuf| InstancePaths {
        matrix: m.clone(),
        clustering: c.clone(),
    };
    match (matrices, clusterings) {
        ([m], cs) => Ok(cs.iter().map(|c| pair(m, c)).collect()),
        (ms, cs) if ms.len() == cs.len() => Ok(ms.iter().zip(cs).map(|(m, c)| pair(m, c)).collect()),
        (ms, cs) => Err(CliError::Config(format!(
            "{} --matrix for {} --clustering; give one matrix or one per clustering",
            ms.len(),
            cs.len()
        ))),
    }
}

fn config(args: Args) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::new(PathBuf::new(), PathBuf::new());
    cfg.instances = instances(&args.matrix, &args.clustering)?;
    cfg.algorithms = algorithms(&args.algorithm)?;
    if !args.objective.is_empty() {
        cfg.objectives = args.objective;
    }
    cfg.out_image = args.out_image;
    cfg.out_report = args.out_report;
    cfg.color_mode = args.color_mode;
    cfg.postprocess = args.postprocess;
    cfg.hull = args.hull;
    cfg.seed = args.seed;
    cfg.tsp_max_passes = args.tsp_max_passes;
    cfg.tsp_time_ms = args.tsp_time_ms;
    cfg.scale = args.scale;
    cfg.demerit_insertion = args.demerit_insertion;
    cfg.palette = args.palette;
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or_default();
            eprintln!("error[usage]: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match config(args).and_then(|cfg| run(&cfg)) {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::FAILURE
        }
    }
}
