//! `convseg` command-line tool.
//!
//! Exit codes: 0 success, 2 input/output failure, 3 pipeline failure,
//! 4 dataset failure (nothing to evaluate).

pub mod input;
pub mod svg;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use convseg::classify::{load_dataset_with, profile_matrix, DatasetOptions, LabelRule};
use convseg::ingest::io;
use convseg::similarity::FeatureWeights;
use convseg::{analyze, ApproxConfig, Error, ShapeAnalysis};

#[derive(Debug, Parser)]
#[command(name = "convseg", version, about = "Shape classification by approximately convex boundary segments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Trace the outer boundary of the largest foreground component.
    Trace {
        input: PathBuf,
        #[arg(long)]
        invert: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Polygonal approximation: one `index,x,y` line per landmark.
    Segment {
        input: PathBuf,
        #[command(flatten)]
        pipeline: PipelineArgs,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-segment features (n, x, a, b, h).
    Features {
        input: PathBuf,
        #[command(flatten)]
        pipeline: PipelineArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pairwise similarity matrix of two or more shapes.
    Sim {
        #[arg(num_args = 2.., required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        pipeline: PipelineArgs,
        #[arg(long, value_parser = parse_weights)]
        weights: Option<FeatureWeights>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Leave-one-out 1-NN evaluation of a directory of shapes.
    Classify {
        dataset: PathBuf,
        #[command(flatten)]
        pipeline: PipelineArgs,
        #[arg(long, value_parser = parse_weights)]
        weights: Option<FeatureWeights>,
        #[arg(long, value_enum, default_value_t = Labels::LastHyphen)]
        labels: Labels,
        /// Also write the pairwise similarity matrix as CSV.
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// SVG of the approximation or the convex decomposition.
    Render {
        input: PathBuf,
        #[command(flatten)]
        pipeline: PipelineArgs,
        #[arg(long, value_enum, default_value_t = Stage::Convex)]
        stage: Stage,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct PipelineArgs {
    #[arg(long, default_value_t = 5)]
    pub lambda: u32,
    #[arg(long, default_value_t = -0.9, allow_negative_numbers = true)]
    pub kappa: f64,
    #[arg(long, default_value_t = 1000)]
    pub max_passes: usize,
    #[arg(long, default_value_t = 3)]
    pub min_landmarks: usize,
    /// Treat dark pixels as foreground.
    #[arg(long)]
    pub invert: bool,
}

impl PipelineArgs {
    pub fn config(&self) -> ApproxConfig {
        ApproxConfig {
            lambda: self.lambda,
            kappa: self.kappa,
            max_passes: self.max_passes,
            min_landmarks: self.min_landmarks,
            ..ApproxConfig::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Labels {
    /// Stem up to the last `-`.
    LastHyphen,
    /// Stem without trailing digits.
    TrailingDigits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Stage {
    Approx,
    Convex,
}

fn parse_weights(s: &str) -> Result<FeatureWeights, String> {
    let vals: Vec<f64> = s
        .split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|e| format!("{v:?}: {e}")))
        .collect::<Result<_, _>>()?;
    let arr: [f64; 5] = vals
        .try_into()
        .map_err(|v: Vec<f64>| format!("expected 5 weights n,x,a,b,h, got {}", v.len()))?;
    if arr.iter().any(|w| !(*w >= 0.0) || !w.is_finite()) {
        return Err("weights must be finite and nonnegative".into());
    }
    Ok(FeatureWeights(arr))
}

/// Exit status for a library error.
pub fn exit_code(err: &Error) -> u8 {
    if err.is_input_error() {
        2
    } else if err.is_dataset_error() {
        4
    } else {
        3
    }
}

fn write_out(path: Option<&Path>, text: &str) -> convseg::Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io {
            path: p.to_path_buf(),
            source: e,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Error::Io {
                path: PathBuf::from("<stdout>"),
                source: e,
            })
        }
    }
}

fn load(input: &Path, pipeline: &PipelineArgs) -> convseg::Result<ShapeAnalysis> {
    let boundary = input::require_shape(input, pipeline.invert)?;
    let id = input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    analyze(boundary, &pipeline.config(), id)
}

/// Landmark file: `# tolerance=<τ>` then one `index,x,y` line per landmark
/// in normalized coordinates.
pub fn format_landmarks(shape: &ShapeAnalysis) -> String {
    let lm = &shape.stages.phase3;
    let mut out = format!("# tolerance={}\n", lm.tolerance);
    for &i in &lm.indices {
        let p = shape.boundary.points[i];
        let _ = writeln!(out, "{i},{},{}", p.x, p.y);
    }
    out
}

/// Caps the global rayon pool at `CONVSEG_THREADS` workers when set.
pub fn configure_threads() {
    if let Some(n) = std::env::var("CONVSEG_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

pub fn run(cli: Cli) -> convseg::Result<()> {
    match cli.command {
        Command::Trace { input, invert, out } => {
            let b = input::require_shape(&input, invert)?;
            write_out(out.as_deref(), &io::format_point_list(b.points()))
        }
        Command::Segment { input, pipeline, svg, out } => {
            let shape = load(&input, &pipeline)?;
            if let Some(svg_path) = svg {
                write_out(Some(&svg_path), &svg::approximation(&shape.boundary, &shape.stages.phase3))?;
            }
            write_out(out.as_deref(), &format_landmarks(&shape))
        }
        Command::Features { input, pipeline, format, svg, out } => {
            let shape = load(&input, &pipeline)?;
            if let Some(svg_path) = svg {
                write_out(Some(&svg_path), &svg::decomposition(&shape.boundary, &shape.decomposition))?;
            }
            let text = match format {
                Format::Csv => shape.profile.to_csv(),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&shape.profile).expect("profile serializes");
                    s.push('\n');
                    s
                }
            };
            write_out(out.as_deref(), &text)
        }
        Command::Sim { inputs, pipeline, weights, out } => {
            let profiles = inputs
                .iter()
                .map(|p| load(p, &pipeline).map(|s| s.profile))
                .collect::<convseg::Result<Vec<_>>>()?;
            let m = profile_matrix(&profiles, &weights.unwrap_or_default());
            write_out(out.as_deref(), &m.to_csv())
        }
        Command::Classify { dataset, pipeline, weights, labels, matrix, out } => {
            classify(&dataset, &pipeline, weights.unwrap_or_default(), labels, matrix.as_deref(), out.as_deref())
        }
        Command::Render { input, pipeline, stage, out } => {
            let shape = load(&input, &pipeline)?;
            let doc = match stage {
                Stage::Approx => svg::approximation(&shape.boundary, &shape.stages.phase3),
                Stage::Convex => svg::decomposition(&shape.boundary, &shape.decomposition),
            };
            write_out(out.as_deref(), &doc)
        }
    }
}

fn classify(
    dataset: &Path,
    pipeline: &PipelineArgs,
    weights: FeatureWeights,
    labels: Labels,
    matrix: Option<&Path>,
    out: Option<&Path>,
) -> convseg::Result<()> {
    if !dataset.is_dir() {
        return Err(Error::Io {
            path: dataset.to_path_buf(),
            source: std::io::Error::from(std::io::ErrorKind::NotFound),
        });
    }
    let opts = DatasetOptions {
        approx: pipeline.config(),
        labels: match labels {
            Labels::LastHyphen => LabelRule::LastHyphen,
            Labels::TrailingDigits => LabelRule::TrailingDigits,
        },
        invert: pipeline.invert,
    };
    let invert = opts.invert;
    let reader = move |p: &Path| input::read_shape(p, invert);
    let load = load_dataset_with(dataset, &opts, &reader)?;
    for w in &load.warnings {
        eprintln!("warning: {w}");
    }
    for (path, err) in &load.failures {
        eprintln!("warning: skipped {}: {err}", path.display());
    }
    let report = convseg::classify::loocv_weighted(&load.shapes, &weights)?;
    if let Some(path) = matrix {
        let shapes = {
            let mut s = load.shapes.clone();
            s.sort_by(|a, b| a.shape_id.cmp(&b.shape_id));
            s
        };
        let m = convseg::classify::similarity_matrix(&shapes, &weights);
        write_out(Some(path), &m.to_csv())?;
    }
    let summary = report.summary_table();
    match out {
        Some(_) => {
            write_out(out, &report.to_json())?;
            print!("{summary}");
        }
        None => {
            write_out(None, &report.to_json())?;
            eprint!("{summary}");
        }
    }
    Ok(())
}
