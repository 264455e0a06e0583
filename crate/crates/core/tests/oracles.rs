mod common;

use common::{fixtures, oracle};
use convseg::approx::{
    approximate_staged, delete_phase1, delete_phase2, delete_phase3, iterative_approximation,
    max_deviation, point_chord_distance, scan_pass, sse, Chord,
};
use convseg::classify::profile_matrix;
use convseg::features::segment_area;
use convseg::similarity::FeatureWeights;
use convseg::{decompose, ApproxConfig, FeatureProfile, LandmarkSequence};
use rand::Rng;

const TOL: f64 = 1e-9;

fn seq(indices: Vec<usize>) -> LandmarkSequence {
    LandmarkSequence {
        indices,
        tolerance: 0.0,
        pass_threshold_final: 0.0,
    }
}

#[test]
fn chord_distance_matches_projection_formula() {
    let mut r = fixtures::rng(11);
    for nb in fixtures::small_boundaries(1) {
        let n = nb.len();
        for _ in 0..20 {
            let i = r.gen_range(0..n);
            let j = (i + r.gen_range(1..n)) % n;
            let Ok(chord) = Chord::new(&nb, i, j) else {
                assert!(oracle::chord_distance(nb.points[0], nb.point(i), nb.point(j)).is_none());
                continue;
            };
            let k = r.gen_range(0..n);
            let got = point_chord_distance(nb.point(k), &chord).unwrap();
            let want = oracle::chord_distance(nb.point(k), nb.point(i), nb.point(j)).unwrap();
            assert!((got - want).abs() <= TOL, "{got} vs {want}");

            if let Some((d, arg)) = oracle::deviation(&nb, i, j) {
                let dev = max_deviation(&nb, i, j).unwrap();
                assert!((dev.max_dev - d).abs() <= TOL);
                assert_eq!(dev.argmax, arg);
            }
        }
    }
}

#[test]
fn sse_matches_pointwise_sum() {
    let mut r = fixtures::rng(12);
    for nb in fixtures::small_boundaries(2) {
        let n = nb.len();
        let mut idx: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.2)).collect();
        if idx.is_empty() {
            idx.push(r.gen_range(0..n));
        }
        let got = sse(&nb, &seq(idx.clone()));
        let want = oracle::sse(&nb, &idx);
        assert!((got - want).abs() <= TOL * want.max(1.0), "{got} vs {want}");
    }
}

#[test]
fn segment_area_matches_shoelace() {
    for nb in fixtures::small_boundaries(3) {
        let lm = approximate_staged(&nb, &ApproxConfig::default()).unwrap().phase3;
        let dec = decompose(&nb, &lm);
        for s in &dec.segments {
            let pts: Vec<_> = s.span_indices(nb.len()).map(|i| nb.point(i)).collect();
            let got = segment_area(&nb, s);
            let want = oracle::polygon_area(&pts);
            assert!((got - want).abs() <= TOL, "{got} vs {want}");
        }
    }
}

#[test]
fn scan_pass_matches_reference() {
    for nb in fixtures::small_boundaries(4) {
        for k in 1..=4 {
            let t = k as f64 * nb.sigma;
            assert_eq!(scan_pass(&nb, t, 3).indices, oracle::scan(&nb, t, 3));
        }
    }
}

#[test]
fn iterative_loop_matches_reference() {
    let cfg = ApproxConfig::default();
    for nb in fixtures::small_boundaries(5) {
        let got = iterative_approximation(&nb, &cfg);
        let (idx, tau) = oracle::iterate(&nb, cfg.min_landmarks, cfg.max_passes);
        assert_eq!(got.indices, idx);
        assert!((got.tolerance - tau).abs() <= TOL);
    }
}

#[test]
fn deletion_phases_match_reference() {
    let cfg = ApproxConfig::default();
    for nb in fixtures::small_boundaries(6) {
        let scan = iterative_approximation(&nb, &cfg);
        let tau = scan.tolerance;
        let p1 = delete_phase1(&nb, &scan, tau, 3);
        assert_eq!(p1.indices, oracle::merge(&nb, &scan.indices, tau, 3));
        let p2 = delete_phase2(&nb, &p1, tau, nb.sigma, cfg.lambda, 3);
        let relaxed = tau + f64::from(cfg.lambda) * nb.sigma;
        assert_eq!(p2.indices, oracle::merge(&nb, &p1.indices, relaxed, 3));
        let p3 = delete_phase3(&nb, &p2, cfg.kappa, 3);
        assert_eq!(p3.indices, oracle::straighten(&nb, &p2.indices, cfg.kappa, 3));
    }
}

#[test]
fn merging_stops_only_when_no_single_deletion_qualifies() {
    let cfg = ApproxConfig::default();
    for nb in fixtures::small_boundaries(7) {
        let scan = iterative_approximation(&nb, &cfg);
        let p1 = delete_phase1(&nb, &scan, scan.tolerance, 3);
        let m = p1.len();
        if m <= 3 {
            continue;
        }
        for p in 0..m {
            let prev = p1.indices[(p + m - 1) % m];
            let next = p1.indices[(p + 1) % m];
            let merged = oracle::deviation(&nb, prev, next).map_or(f64::INFINITY, |d| d.0);
            assert!(merged > scan.tolerance, "landmark {} was deletable", p1.indices[p]);
        }
    }
}

#[test]
fn similarity_matrix_matches_double_loop() {
    let profiles: Vec<FeatureProfile> = fixtures::small_boundaries(8)
        .iter()
        .take(30)
        .enumerate()
        .map(|(k, nb)| {
            let lm = approximate_staged(nb, &ApproxConfig::default()).unwrap().phase3;
            convseg::features::profile(nb, &decompose(nb, &lm), format!("s{k:02}"))
        })
        .collect();
    let m = profile_matrix(&profiles, &FeatureWeights::default());
    for (i, p) in profiles.iter().enumerate() {
        for (j, q) in profiles.iter().enumerate() {
            let s = p.len().max(q.len());
            let mut want = 0.0;
            for k in 0..s {
                let u = p.segments.get(k).map_or([0.0; 5], |f| f.as_array());
                let v = q.segments.get(k).map_or([0.0; 5], |f| f.as_array());
                want += u.iter().zip(v).map(|(a, b)| (a - b) * (a - b)).sum::<f64>();
            }
            assert!((m.get(i, j) - want).abs() <= TOL * want.max(1.0));
        }
    }
}
