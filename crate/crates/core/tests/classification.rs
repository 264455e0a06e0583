mod common;

use common::fixtures::{self, labeled, synthetic_dataset};
use convseg::classify::{load_dataset, similarity_matrix, DatasetOptions, LabelRule};
use convseg::ingest::io::format_pbm;
use convseg::similarity::FeatureWeights;
use convseg::{loocv, Error};
use rand::seq::SliceRandom;

#[test]
fn squares_and_stars_separate_perfectly() {
    let data = labeled(&synthetic_dataset(&["square", "star"], 8, 5));
    let report = loocv(&data).unwrap();
    assert_eq!(report.accuracy, 100.0);
    assert_eq!(report.classes, vec!["square", "star"]);
    assert_eq!(report.confusion, vec![vec![8, 0], vec![0, 8]]);
}

#[test]
fn predictions_ignore_dataset_order() {
    let data = labeled(&synthetic_dataset(&fixtures::SYNTH_CLASSES, 5, 9));
    let base = loocv(&data).unwrap();
    let mut shuffled = data.clone();
    shuffled.shuffle(&mut fixtures::rng(1));
    let again = loocv(&shuffled).unwrap();
    assert_eq!(base.per_shape, again.per_shape);
    assert_eq!(base.confusion, again.confusion);
}

#[test]
fn lattice_rotation_keeps_every_prediction() {
    let raw = synthetic_dataset(&fixtures::SYNTH_CLASSES, 4, 13);
    let rotated: Vec<_> = raw
        .iter()
        .map(|(id, l, m)| (id.clone(), l.clone(), m.rotated_90()))
        .collect();
    let a = loocv(&labeled(&raw)).unwrap();
    let b = loocv(&labeled(&rotated)).unwrap();
    assert_eq!(a.per_shape, b.per_shape);
}

#[test]
fn matrix_is_identical_for_any_thread_count() {
    let data = labeled(&synthetic_dataset(&fixtures::SYNTH_CLASSES, 4, 17));
    let w = FeatureWeights::default();
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| similarity_matrix(&data, &w))
    };
    let serial = run(1);
    for t in [2, 3, 8] {
        let par = run(t);
        let bits = |m: &convseg::classify::SimilarityMatrix| (0..m.len()).flat_map(|i| m.row(i).iter().map(|v| v.to_bits())).collect::<Vec<_>>();
        assert_eq!(bits(&serial), bits(&par));
    }
    for i in 0..serial.len() {
        assert_eq!(serial.get(i, i), 0.0);
        for j in 0..serial.len() {
            assert_eq!(serial.get(i, j), serial.get(j, i));
        }
    }
}

#[test]
fn dataset_directory_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (id, _, mask) in synthetic_dataset(&["square", "star"], 3, 21) {
        std::fs::write(dir.path().join(format!("{id}.pbm")), format_pbm(&mask)).unwrap();
    }
    std::fs::write(dir.path().join("notes.md"), "ignored").unwrap();
    std::fs::write(dir.path().join("broken-1.pbm"), "P1\n2 2\n0 0 0 0\n").unwrap();
    let load = load_dataset(dir.path(), &DatasetOptions::default()).unwrap();
    assert_eq!(load.shapes.len(), 6);
    assert_eq!(load.failures.len(), 1);
    let report = loocv(&load.shapes).unwrap();
    assert_eq!(report.accuracy, 100.0);

    let empty = tempfile::tempdir().unwrap();
    assert!(matches!(
        load_dataset(empty.path(), &DatasetOptions::default()),
        Err(Error::EmptyDataset(_))
    ));
}

#[test]
fn trailing_digit_labels() {
    let dir = tempfile::tempdir().unwrap();
    for (k, (_, label, mask)) in synthetic_dataset(&["square", "star"], 2, 3).into_iter().enumerate() {
        std::fs::write(dir.path().join(format!("{label}{k:02}.pbm")), format_pbm(&mask)).unwrap();
    }
    let opts = DatasetOptions {
        labels: LabelRule::TrailingDigits,
        ..Default::default()
    };
    let load = load_dataset(dir.path(), &opts).unwrap();
    let mut labels: Vec<_> = load.shapes.iter().map(|s| s.class_label.as_str()).collect();
    labels.dedup();
    assert_eq!(labels, vec!["square", "star"]);
}
