//! Dataset loading, 1-nearest-neighbor classification and leave-one-out
//! evaluation.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::approx::ApproxConfig;
use crate::error::{Error, Result};
use crate::features::FeatureProfile;
use crate::ingest::{io, ClosedBoundary};
use crate::pipeline::analyze;
use crate::similarity::{weighted_similarity, FeatureWeights, SimilarityScore};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LabeledShape {
    pub shape_id: String,
    pub class_label: String,
    pub profile: FeatureProfile,
    pub source_path: PathBuf,
}

/// How a class label is derived from a file stem.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LabelRule {
    /// Everything before the last `-` (`apple-1` → `apple`).
    #[default]
    LastHyphen,
    /// Stem with trailing digits removed (`bone07` → `bone`).
    TrailingDigits,
}

/// Class label for `stem`, plus whether the rule had to fall back to the
/// whole stem.
pub fn class_label(stem: &str, rule: LabelRule) -> (String, bool) {
    let cut = match rule {
        LabelRule::LastHyphen => stem.rfind('-').map(|i| &stem[..i]),
        LabelRule::TrailingDigits => {
            Some(stem.trim_end_matches(|c: char| c.is_ascii_digit())).filter(|s| s.len() < stem.len())
        }
    };
    match cut {
        Some(label) if !label.is_empty() => (label.to_string(), false),
        _ => (stem.to_string(), true),
    }
}

/// Turns a path into a traced boundary. `Ok(None)` means "not a shape
/// file", which is skipped silently.
pub type BoundaryReader = dyn Fn(&Path) -> Result<Option<ClosedBoundary>> + Sync;

#[derive(Debug, Default)]
pub struct DatasetLoad {
    pub shapes: Vec<LabeledShape>,
    /// Files that were recognized but failed somewhere in the pipeline.
    pub failures: Vec<(PathBuf, Error)>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct DatasetOptions {
    pub approx: ApproxConfig,
    pub labels: LabelRule,
    pub invert: bool,
}

impl Default for DatasetOptions {
    fn default() -> Self {
        DatasetOptions {
            approx: ApproxConfig::default(),
            labels: LabelRule::default(),
            invert: false,
        }
    }
}

/// Loads every Netpbm or point-list file in `dir`.
pub fn load_dataset(dir: &Path, opts: &DatasetOptions) -> Result<DatasetLoad> {
    let invert = opts.invert;
    load_dataset_with(dir, opts, &move |p: &Path| io::read_boundary(p, invert))
}

/// Like [`load_dataset`] with a caller-supplied decoder, e.g. one that also
/// understands PNG or GIF.
pub fn load_dataset_with(
    dir: &Path,
    opts: &DatasetOptions,
    reader: &BoundaryReader,
) -> Result<DatasetLoad> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .filter(|p| {
            !p.file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| n.starts_with('.'))
        })
        .collect();
    paths.sort();

    let results: Vec<(PathBuf, Result<Option<LabeledShape>>)> = paths
        .into_par_iter()
        .map(|path| {
            let res = load_one(&path, opts, reader);
            (path, res)
        })
        .collect();

    let mut load = DatasetLoad::default();
    for (path, res) in results {
        match res {
            Ok(Some(shape)) => {
                let stem = shape.shape_id.as_str();
                if class_label(stem, opts.labels).1 {
                    load.warnings
                        .push(format!("{}: no class separator, using whole stem", path.display()));
                }
                load.shapes.push(shape);
            }
            Ok(None) => {}
            Err(e) => load.failures.push((path, e)),
        }
    }
    if load.shapes.is_empty() {
        return Err(Error::EmptyDataset(dir.to_path_buf()));
    }
    Ok(load)
}

fn load_one(path: &Path, opts: &DatasetOptions, reader: &BoundaryReader) -> Result<Option<LabeledShape>> {
    let Some(boundary) = reader(path)? else {
        return Ok(None);
    };
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or_default()
        .to_string();
    let analysis = analyze(boundary, &opts.approx, stem.clone())?;
    Ok(Some(LabeledShape {
        class_label: class_label(&stem, opts.labels).0,
        shape_id: stem,
        profile: analysis.profile,
        source_path: path.to_path_buf(),
    }))
}

/// Pool member with the smallest score; ties go to the smaller `shape_id`.
pub fn nearest_neighbor<'a>(
    query: &LabeledShape,
    pool: &'a [LabeledShape],
    weights: &FeatureWeights,
) -> Result<(&'a LabeledShape, SimilarityScore)> {
    pool.iter()
        .map(|cand| (cand, weighted_similarity(&query.profile, &cand.profile, weights)))
        .min_by(|(a, sa), (b, sb)| {
            sa.0.total_cmp(&sb.0)
                .then_with(|| a.shape_id.cmp(&b.shape_id))
        })
        .ok_or(Error::EmptyPool)
}

/// Dense symmetric matrix of pairwise scores.
#[derive(Clone, Debug, PartialEq)]
pub struct SimilarityMatrix {
    pub ids: Vec<String>,
    values: Vec<f64>,
}

impl SimilarityMatrix {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.ids.len() + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let n = self.ids.len();
        &self.values[i * n..(i + 1) * n]
    }

    /// CSV with shape ids as row and column headers and nine significant
    /// digits per cell.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id");
        for id in &self.ids {
            out.push(',');
            out.push_str(id);
        }
        out.push('\n');
        for (i, id) in self.ids.iter().enumerate() {
            out.push_str(id);
            for v in self.row(i) {
                out.push(',');
                out.push_str(&format_sig9(*v));
            }
            out.push('\n');
        }
        out
    }
}

/// `printf("%.9g")`.
pub fn format_sig9(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let strip = |s: &str| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if !(-4..9).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", strip(mantissa), exp.abs())
    } else {
        let decimals = (8 - exp).max(0) as usize;
        strip(&format!("{v:.decimals$}"))
    }
}

/// All pairwise scores; rows are computed in parallel and each cell is the
/// same call a serial loop would make, so the result is bit-identical.
pub fn similarity_matrix(dataset: &[LabeledShape], weights: &FeatureWeights) -> SimilarityMatrix {
    let profiles: Vec<&FeatureProfile> = dataset.iter().map(|s| &s.profile).collect();
    matrix_of(&profiles, weights)
}

pub fn profile_matrix(profiles: &[FeatureProfile], weights: &FeatureWeights) -> SimilarityMatrix {
    let refs: Vec<&FeatureProfile> = profiles.iter().collect();
    matrix_of(&refs, weights)
}

fn matrix_of(profiles: &[&FeatureProfile], weights: &FeatureWeights) -> SimilarityMatrix {
    let n = profiles.len();
    let values: Vec<f64> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (0..n).map(move |j| {
                if i == j {
                    0.0
                } else {
                    weighted_similarity(profiles[i], profiles[j], weights).0
                }
            })
        })
        .collect();
    SimilarityMatrix {
        ids: profiles.iter().map(|p| p.shape_id.clone()).collect(),
        values,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfusionMatrix {
    pub classes: Vec<String>,
    /// `counts[true][predicted]`.
    pub counts: Vec<Vec<usize>>,
}

impl ConfusionMatrix {
    pub fn total(&self) -> usize {
        self.counts.iter().flatten().sum()
    }

    pub fn trace(&self) -> usize {
        (0..self.classes.len()).map(|i| self.counts[i][i]).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShapeOutcome {
    pub id: String,
    #[serde(rename = "true")]
    pub true_label: String,
    pub pred: String,
    pub nn: String,
    pub score: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalReport {
    /// Percentage of shapes whose nearest neighbor shares their class.
    pub accuracy: f64,
    pub classes: Vec<String>,
    pub confusion: Vec<Vec<usize>>,
    pub per_shape: Vec<ShapeOutcome>,
    pub wall_time_s: f64,
}

impl EvalReport {
    pub fn confusion_matrix(&self) -> ConfusionMatrix {
        ConfusionMatrix {
            classes: self.classes.clone(),
            counts: self.confusion.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text summary: overall accuracy, per-class hit rates, timing.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let width = self.classes.iter().map(String::len).max().unwrap_or(5).max(5);
        let _ = writeln!(out, "{:<width$}  {:>7}  {:>7}  {:>8}", "class", "shapes", "correct", "accuracy");
        for (i, class) in self.classes.iter().enumerate() {
            let total: usize = self.confusion[i].iter().sum();
            let hit = self.confusion[i][i];
            let acc = if total > 0 { 100.0 * hit as f64 / total as f64 } else { 0.0 };
            let _ = writeln!(out, "{class:<width$}  {total:>7}  {hit:>7}  {acc:>7.2}%");
        }
        let _ = writeln!(
            out,
            "overall: {:.2}% of {} shapes, {} classes, {:.3} s",
            self.accuracy,
            self.per_shape.len(),
            self.classes.len(),
            self.wall_time_s
        );
        out
    }
}

pub fn loocv(dataset: &[LabeledShape]) -> Result<EvalReport> {
    loocv_weighted(dataset, &FeatureWeights::default())
}

/// Leave-one-out: every shape is classified by its nearest neighbor among
/// all the others.
pub fn loocv_weighted(dataset: &[LabeledShape], weights: &FeatureWeights) -> Result<EvalReport> {
    let started = Instant::now();
    if dataset.len() < 2 {
        return Err(Error::TooFewShapes(dataset.len()));
    }
    let classes: Vec<String> = dataset
        .iter()
        .map(|s| s.class_label.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if classes.len() < 2 {
        return Err(Error::SingleClass);
    }

    let mut order: Vec<usize> = (0..dataset.len()).collect();
    order.sort_by(|&a, &b| dataset[a].shape_id.cmp(&dataset[b].shape_id).then(a.cmp(&b)));
    let sorted: Vec<LabeledShape> = order.iter().map(|&i| dataset[i].clone()).collect();
    let matrix = similarity_matrix(&sorted, weights);

    let class_index = |label: &str| classes.binary_search_by(|c| c.as_str().cmp(label)).expect("known class");
    let mut confusion = vec![vec![0usize; classes.len()]; classes.len()];
    let mut per_shape = Vec::with_capacity(sorted.len());
    for (i, shape) in sorted.iter().enumerate() {
        // Sorted by id, so the first strict minimum is also the tie winner.
        let (j, score) = matrix
            .row(i)
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(None, |best: Option<(usize, f64)>, (j, &s)| match best {
                Some((_, bs)) if bs <= s => best,
                _ => Some((j, s)),
            })
            .expect("at least two shapes");
        let nn = &sorted[j];
        confusion[class_index(&shape.class_label)][class_index(&nn.class_label)] += 1;
        per_shape.push(ShapeOutcome {
            id: shape.shape_id.clone(),
            true_label: shape.class_label.clone(),
            pred: nn.class_label.clone(),
            nn: nn.shape_id.clone(),
            score,
        });
    }
    let correct: usize = (0..classes.len()).map(|c| confusion[c][c]).sum();
    Ok(EvalReport {
        accuracy: 100.0 * correct as f64 / sorted.len() as f64,
        classes,
        confusion,
        per_shape,
        wall_time_s: started.elapsed().as_secs_f64(),
    })
}
