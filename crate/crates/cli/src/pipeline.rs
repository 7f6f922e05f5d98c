use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use biclayout::eval::{aggregate_ratios, default_seeds};
use biclayout::par::*;
use biclayout::{
    build_report, compute_blocks, render_image, suggest, zone_layout, AlgorithmId, BinaryMatrix,
    Biclustering, BlockDecomposition, ColorMode, DemeritInsertion, ObjectiveKind, Palette,
    RenderOptions, ScoreReport, SearchConfig, Suggestions, TspConfig,
};

use crate::error::{CliError, Result};
use crate::formats::{one_based, parse_clustering, parse_matrix, SuggestionsOut};
use crate::report::{
    ratio_summary, to_json, AlgorithmOut, InstanceOut, InstanceReport, MultiReport, Ordered,
    RationalOut, TspOut,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstancePaths {
    pub matrix: PathBuf,
    pub clustering: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageFormat {
    Ppm,
    Png,
}

impl ImageFormat {
    fn extension(self) -> &'static str {
        match self {
            ImageFormat::Ppm => "ppm",
            ImageFormat::Png => "png",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub instances: Vec<InstancePaths>,
    pub algorithms: Vec<AlgorithmId>,
    pub objectives: Vec<ObjectiveKind>,
    /// Template path; images go to `<stem>.<algorithm>.<ext>`.
    pub out_image: Option<PathBuf>,
    pub out_report: Option<PathBuf>,
    pub color_mode: ColorMode,
    pub postprocess: bool,
    /// 1-based cluster index.
    pub hull: Option<usize>,
    pub seed: u64,
    pub tsp_max_passes: usize,
    pub tsp_time_ms: u64,
    pub scale: u32,
    pub demerit_insertion: DemeritInsertion,
    pub palette: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(matrix: impl Into<PathBuf>, clustering: impl Into<PathBuf>) -> Self {
        let tsp = TspConfig::default();
        Self {
            instances: vec![InstancePaths {
                matrix: matrix.into(),
                clustering: clustering.into(),
            }],
            algorithms: vec![AlgorithmId::TspHeuristic],
            objectives: ObjectiveKind::ALL.to_vec(),
            out_image: None,
            out_report: None,
            color_mode: ColorMode::default(),
            postprocess: false,
            hull: None,
            seed: 0,
            tsp_max_passes: tsp.max_passes,
            tsp_time_ms: tsp.time_limit.as_millis() as u64,
            scale: 1,
            demerit_insertion: DemeritInsertion::default(),
            palette: None,
        }
    }

    pub fn search_config(&self) -> SearchConfig {
        SearchConfig {
            tsp: TspConfig {
                max_passes: self.tsp_max_passes,
                time_limit: Duration::from_millis(self.tsp_time_ms),
                seed: self.seed,
            },
            seed: self.seed,
            demerit_insertion: self.demerit_insertion,
        }
    }

    /// Seeds of the five random baseline layouts: `seed + 1 ..= seed + 5`,
    /// so the `random` algorithm (which uses `seed`) is not one of them.
    pub fn baseline_seeds(&self) -> Vec<u64> {
        default_seeds(self.seed.wrapping_add(1))
    }

    fn validate(&self) -> Result<()> {
        if self.out_image.is_none() && self.out_report.is_none() {
            return Err(CliError::Config("nothing to do: give --out-image and/or --out-report".into()));
        }
        if self.instances.is_empty() {
            return Err(CliError::Config("no input instance".into()));
        }
        if self.algorithms.is_empty() {
            return Err(CliError::Config("no algorithm selected".into()));
        }
        if self.objectives.is_empty() {
            return Err(CliError::Config("no objective selected".into()));
        }
        if self.scale == 0 {
            return Err(CliError::Config("--scale must be at least 1".into()));
        }
        if self.hull == Some(0) {
            return Err(CliError::Config("--hull takes a 1-based cluster index".into()));
        }
        Ok(())
    }

    fn image_template(&self) -> Option<(PathBuf, ImageFormat)> {
        let path = self.out_image.as_ref()?;
        let ext = path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase);
        Some(match ext.as_deref() {
            Some("png") => (path.with_extension(""), ImageFormat::Png),
            Some("ppm") => (path.with_extension(""), ImageFormat::Ppm),
            _ => (path.clone(), ImageFormat::Ppm),
        })
    }

    /// Output image path for an algorithm; `instance` is set only when
    /// several instances are processed.
    pub fn image_path(&self, instance: Option<usize>, algorithm: AlgorithmId) -> Option<PathBuf> {
        let (stem, format) = self.image_template()?;
        let mut name = stem.file_name().unwrap_or_default().to_os_string();
        if let Some(i) = instance {
            name.push(format!(".{}", i + 1));
        }
        name.push(format!(".{}.{}", algorithm.name(), format.extension()));
        Some(stem.with_file_name(name))
    }

    fn image_format(&self) -> ImageFormat {
        self.image_template().map_or(ImageFormat::Ppm, |(_, f)| f)
    }
}

/// A file to be written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    pub path: PathBuf,
    pub bytes: Vec<u8>,
}

pub fn load_instance(paths: &InstancePaths) -> Result<(BinaryMatrix, Biclustering)> {
    let a = parse_matrix(&paths.matrix)?;
    let bc = parse_clustering(&paths.clustering, a.rows(), a.cols())?;
    Ok((a, bc))
}

fn load_palette(path: &Path) -> Result<Palette> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let palette: Palette = serde_json::from_str(&text)
        .map_err(|e| CliError::parse(path, (e.line() > 0).then_some(e.line()), e.to_string()))?;
    palette.validate()?;
    Ok(palette)
}

fn dedup<T: PartialEq + Copy>(xs: &[T]) -> Vec<T> {
    let mut out = Vec::new();
    for &x in xs {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Runs the pipeline in memory and returns the files it would write.
pub fn plan(cfg: &RunConfig) -> Result<Vec<Artifact>> {
    cfg.validate()?;
    let algorithms = dedup(&cfg.algorithms);
    let objectives = dedup(&cfg.objectives);
    let palette = match &cfg.palette {
        Some(p) => load_palette(p)?,
        None => Palette::default(),
    };
    let multi = cfg.instances.len() > 1;
    let search = cfg.search_config();
    let seeds = cfg.baseline_seeds();

    let results: Vec<(ScoreReport, Vec<Artifact>, InstanceReport)> = cfg
        .instances
        .par_iter()
        .enumerate()
        .map(|(idx, paths)| {
            let (a, bc) = load_instance(paths)?;
            let hull = match cfg.hull {
                Some(h) if h > bc.len() => {
                    return Err(CliError::Input(format!(
                        "{}: --hull {h} but the clustering has {} clusters",
                        paths.clustering.display(),
                        bc.len()
                    )))
                }
                h => h.map(|h| h - 1),
            };
            let decomp = compute_blocks(&bc, a.rows(), a.cols())?;
            let report = build_report(&bc, &decomp, &algorithms, &objectives, &search, &seeds)?;
            let suggestions = if cfg.postprocess { Some(suggest(&a, &bc)?) } else { None };
            let shown = suggestions.clone().unwrap_or_else(|| Suggestions::none(bc.len()));
            let opts = RenderOptions {
                mode: cfg.color_mode,
                scale: cfg.scale,
                hull,
                palette,
            };

            let mut images = Vec::new();
            let mut algos = Vec::new();
            for r in &report.results {
                let display = match &suggestions {
                    Some(s) => Some(zone_layout(&r.layout, s, &bc, &decomp)?),
                    None => None,
                };
                let image_path = cfg.image_path(multi.then_some(idx), r.algorithm);
                if let Some(path) = &image_path {
                    let img = render_image(&a, display.as_ref().unwrap_or(&r.layout), &bc, &shown, &opts)?;
                    let bytes = match cfg.image_format() {
                        ImageFormat::Ppm => img.to_ppm(),
                        ImageFormat::Png => img.to_png()?,
                    };
                    images.push(Artifact {
                        path: path.clone(),
                        bytes,
                    });
                }
                algos.push(AlgorithmOut {
                    name: r.algorithm.name().to_string(),
                    row_order: one_based(r.layout.pi_r().order()),
                    col_order: one_based(r.layout.pi_c().order()),
                    display_row_order: display.as_ref().map(|l| one_based(l.pi_r().order())),
                    display_col_order: display.as_ref().map(|l| one_based(l.pi_c().order())),
                    image: image_path.map(|p| p.display().to_string()),
                });
            }

            let out = instance_report(cfg, paths, &a, &bc, &decomp, &report, algos, suggestions.as_ref());
            Ok((report, images, out))
        })
        .collect::<Result<_>>()?;

    let mut artifacts = Vec::new();
    let mut reports = Vec::new();
    let mut scored = Vec::new();
    for (report, images, out) in results {
        artifacts.extend(images);
        reports.push(out);
        scored.push(report);
    }
    if let Some(path) = &cfg.out_report {
        let bytes = if multi {
            to_json(&MultiReport {
                instances: reports,
                ratio_summary: ratio_summary(&algorithms, &objectives, &aggregate_ratios(&scored)),
            })
        } else {
            to_json(&reports[0])
        };
        artifacts.push(Artifact {
            path: path.clone(),
            bytes,
        });
    }
    check_outputs(cfg, &artifacts)?;
    Ok(artifacts)
}

#[allow(clippy::too_many_arguments)]
fn instance_report(
    cfg: &RunConfig,
    paths: &InstancePaths,
    a: &BinaryMatrix,
    bc: &Biclustering,
    decomp: &BlockDecomposition,
    report: &ScoreReport,
    algorithms: Vec<AlgorithmOut>,
    suggestions: Option<&Suggestions>,
) -> InstanceReport {
    let name = |k: ObjectiveKind| k.name().to_string();
    InstanceReport {
        instance: InstanceOut {
            matrix: paths.matrix.display().to_string(),
            clustering: paths.clustering.display().to_string(),
            rows: a.rows(),
            cols: a.cols(),
            ones: a.nnz(),
            clusters: bc.len(),
            row_blocks: decomp.row_blocks().len(),
            col_blocks: decomp.col_blocks().len(),
            seed: cfg.seed,
            random_seeds: report.seeds.clone(),
            tsp: TspOut {
                max_passes: cfg.tsp_max_passes,
                time_limit_ms: cfg.tsp_time_ms,
            },
            demerit_insertion: cfg.demerit_insertion.to_string(),
        },
        algorithms,
        scores: Ordered(
            report
                .results
                .iter()
                .map(|r| {
                    let s = report.objectives.iter().map(|&k| (name(k), r.scores[&k])).collect();
                    (r.algorithm.name().to_string(), Ordered(s))
                })
                .collect(),
        ),
        average_random_score: Ordered(
            report
                .objectives
                .iter()
                .map(|&k| (name(k), RationalOut::from(report.average_random[&k])))
                .collect(),
        ),
        ratios: Ordered(
            report
                .results
                .iter()
                .zip(&report.ratios)
                .map(|(r, ratios)| {
                    let s = report
                        .objectives
                        .iter()
                        .map(|&k| (name(k), ratios[&k].map(RationalOut::from)))
                        .collect();
                    (r.algorithm.name().to_string(), Ordered(s))
                })
                .collect(),
        ),
        suggestions: suggestions.map(SuggestionsOut::from),
    }
}

fn same_file(a: &Path, b: &Path) -> bool {
    match (a.canonicalize(), b.canonicalize()) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}

/// Rejects output sets that would overwrite an input or each other.
fn check_outputs(cfg: &RunConfig, artifacts: &[Artifact]) -> Result<()> {
    for (i, art) in artifacts.iter().enumerate() {
        if artifacts[..i].iter().any(|o| o.path == art.path) {
            return Err(CliError::Config(format!("output {} is produced twice", art.path.display())));
        }
        let inputs = cfg
            .instances
            .iter()
            .flat_map(|p| [&p.matrix, &p.clustering])
            .chain(cfg.palette.as_ref());
        for input in inputs {
            if art.path == *input || same_file(&art.path, input) {
                return Err(CliError::Config(format!(
                    "output {} would overwrite input {}",
                    art.path.display(),
                    input.display()
                )));
            }
        }
    }
    Ok(())
}

/// Writes every artifact through a temporary file in the target directory.
/// Nothing is renamed into place until all temporaries are written; if a
/// rename fails, files already moved are removed again.
pub fn write_all(artifacts: &[Artifact]) -> Result<Vec<PathBuf>> {
    let mut staged = Vec::with_capacity(artifacts.len());
    for art in artifacts {
        let dir = match art.path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        if !dir.is_dir() {
            let e = std::io::Error::new(std::io::ErrorKind::NotFound, "output directory does not exist");
            return Err(CliError::io(&art.path, e));
        }
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(&art.path, e))?;
        tmp.write_all(&art.bytes)
            .and_then(|_| tmp.as_file().sync_all())
            .map_err(|e| CliError::io(&art.path, e))?;
        staged.push((tmp, &art.path));
    }
    let mut written: Vec<PathBuf> = Vec::with_capacity(staged.len());
    for (tmp, path) in staged {
        if let Err(e) = tmp.persist(path) {
            for p in &written {
                let _ = std::fs::remove_file(p);
            }
            return Err(CliError::io(path, e.error));
        }
        written.push(path.clone());
    }
    Ok(written)
}

/// Runs the pipeline and writes its outputs; returns the written paths.
pub fn run(cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    write_all(&plan(cfg)?)
}
