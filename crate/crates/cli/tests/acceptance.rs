//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use cvi_core::harness::{Invariance, Optimality, SCALE_FACTORS, SHIFT_OFFSETS};
use cvi_core::{
    audit, evaluate, si_centroid, si_curve, si_distance_for, si_hierarchical, single_linkage,
    synthetic_dataset, Dataset, IndexId, IndexResult, Partition, SiCurve, SyntheticId, Variant,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn si_value(id: SyntheticId) -> f64 {
    let (d, p) = synthetic_dataset(id);
    si_centroid(&d, &p).unwrap().value().unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact_anchors() -> Outcome {
    let cases = [
        (SyntheticId::Y1S, 1.0),
        (SyntheticId::X1S, 3.0),
        (SyntheticId::X3S, 3.0),
        (SyntheticId::X1L, 9.0),
        (SyntheticId::X9L, 9.0),
    ];
    let mut worst: f64 = 0.0;
    for (id, want) in cases {
        let got = si_value(id);
        worst = worst.max((got - want).abs());
        check((got - want).abs() <= 1e-12, || {
            format!("si_centroid({id}) = {got}, want {want}")
        })?;
    }
    Ok(format!("max abs error {worst:e}"))
}

fn derived_anchors() -> Outcome {
    // literal evaluation with hand-derived spreads:
    // centroid form: r = (0, √0.5), R = √6 / 3, c = (1, 2)
    // distance form: m = (0, √2), M = √2, c = (1, 2)
    let r = [0.0, 0.5f64.sqrt()];
    let big_r = 6f64.sqrt() / 3.0;
    let oracle_centroid = 2.0 * (1f64.powf(r[0] / big_r) * 2f64.powf(r[1] / big_r)).powf(0.5);
    let m = [0.0, 2f64.sqrt()];
    let big_m = 2f64.sqrt();
    let oracle_distance = 2.0 * (1f64.powf(m[0] / big_m) * 2f64.powf(m[1] / big_m)).powf(0.5);
    check((oracle_centroid - 2.70012).abs() <= 1e-4, || {
        format!("oracle centroid {oracle_centroid}")
    })?;
    check((oracle_distance - 2.82843).abs() <= 1e-4, || {
        format!("oracle distance {oracle_distance}")
    })?;

    let (d, p) = synthetic_dataset(SyntheticId::X2S);
    let c = si_centroid(&d, &p).unwrap().value().unwrap();
    let m = si_distance_for(&d, &p).unwrap().value().unwrap();
    check((c - oracle_centroid).abs() <= 1e-12, || {
        format!("si_centroid {c} vs oracle {oracle_centroid}")
    })?;
    check((m - oracle_distance).abs() <= 1e-12, || {
        format!("si_distance {m} vs oracle {oracle_distance}")
    })?;
    check((c - 2.70012).abs() <= 1e-4, || format!("si_centroid {c}"))?;
    check((m - 2.82843).abs() <= 1e-4, || format!("si_distance {m}"))?;
    Ok(format!(
        "si_centroid(X2S) = {c:.7}, si_distance(X2S) = {m:.7}"
    ))
}

const INVARIANT: [IndexId; 7] = [
    IndexId::Ch,
    IndexId::Silhouette,
    IndexId::Dunn,
    IndexId::Db,
    IndexId::Cindex,
    IndexId::SiCentroid,
    IndexId::SiDistance,
];

fn invariance_on(id: SyntheticId) -> Result<usize, String> {
    let (d, p) = synthetic_dataset(id);
    let mut undefined = 0;
    for index in INVARIANT {
        let base = evaluate(index, &d, &p).unwrap();
        let variants = SCALE_FACTORS
            .iter()
            .map(|&a| (format!("scale {a}"), d.scaled(a).unwrap()))
            .chain(
                SHIFT_OFFSETS
                    .iter()
                    .map(|&b| (format!("shift {b}"), d.shifted(b).unwrap())),
            );
        for (label, t) in variants {
            let v = evaluate(index, &t, &p).unwrap();
            check(base.approx_eq(v, 1e-9), || {
                format!("{index} on {id} {label}: {base} vs {v}")
            })?;
        }
        undefined += usize::from(base.is_undefined());
    }
    Ok(undefined)
}

fn invariance_suite() -> Outcome {
    let undefined = invariance_on(SyntheticId::X2S)?;
    Ok(format!(
        "7 indices x 6 transforms on X2S ({undefined} undefined on both sides: cindex)"
    ))
}

fn invariance_supplementary() -> Outcome {
    let undefined = invariance_on(SyntheticId::X2L)?;
    check(undefined == 0, || {
        format!("{undefined} indices undefined on X2L")
    })?;
    Ok("same checks on X2L, every index defined".into())
}

fn flag_rows() -> Outcome {
    let row = |id| audit(id).unwrap();
    for id in [IndexId::Ch, IndexId::Db, IndexId::Dunn, IndexId::Cindex] {
        let f = row(id);
        check(
            f.invariance == Invariance::Both && f.optimality == Optimality::Neither && !f.baseline,
            || format!("{id}: got `{}`, want `S`", f.flag_string()),
        )?;
    }
    let sf = row(IndexId::Sf);
    check(sf.invariance == Invariance::One, || {
        format!("sf: got `{}`, want invariance s", sf.flag_string())
    })?;
    for id in [IndexId::SiCentroid, IndexId::SiDistance] {
        let f = row(id);
        check(f.flag_string() == "S B C", || {
            format!("{id}: got `{}`", f.flag_string())
        })?;
        for variant in [Variant::Short, Variant::Long] {
            let d = cvi_core::audit_variant(id, variant).unwrap().detail;
            check(
                d.scale_ok
                    && d.shift_ok
                    && d.is_best_at_y1
                    && d.y2_worse_than_y1
                    && d.baseline_at_x1
                    && d.baseline_at_xmax,
                || format!("{id} {variant}: detail {d:?}"),
            )?;
        }
    }
    let sil = row(IndexId::Silhouette);
    Ok(format!(
        "ch/db/dunn/cindex = S, sf = {}, si_* = S B C; silhouette (reported, not gated) = {}",
        sf.flag_string(),
        sil.flag_string()
    ))
}

fn optimality_ordering() -> Outcome {
    let (y1s, y2s, y1l, y2l) = (
        si_value(SyntheticId::Y1S),
        si_value(SyntheticId::Y2S),
        si_value(SyntheticId::Y1L),
        si_value(SyntheticId::Y2L),
    );
    check(y1s == 1.0 && y2s == 2.0 && y1s < y2s, || {
        format!("short: {y1s} vs {y2s}")
    })?;
    check(y1l == 1.0 && y2l == 2.0 && y1l < y2l, || {
        format!("long: {y1l} vs {y2l}")
    })?;
    Ok("Y1S=1 < Y2S=2, Y1L=1 < Y2L=2".into())
}

fn line(xs: &[f64]) -> Dataset {
    Dataset::new(xs.iter().map(|&x| vec![x]).collect()).unwrap()
}

fn hierarchical_anchor() -> Outcome {
    let d = line(&[0.0, 1.0, 3.0]);
    let curve = si_curve(&d, &single_linkage(&d).unwrap()).unwrap();
    let want = [(0.0, 3.0), (1.0, 2.33756), (2.0, 3.0)];
    let s = curve.samples();
    check(s.len() == 3, || format!("{} samples", s.len()))?;
    for (got, (wd, ws)) in s.iter().zip(want) {
        check(
            (got.distance - wd).abs() <= 1e-4 && (got.si - ws).abs() <= 1e-4,
            || format!("sample ({}, {}) vs ({wd}, {ws})", got.distance, got.si),
        )?;
    }
    // literal trapezoid sum over the stated curve
    let n = want.len();
    let area: f64 = (1..n)
        .map(|k| (want[k].1 + want[k - 1].1) * (want[k].0 - want[k - 1].0) / 2.0)
        .sum();
    let oracle = area / ((n - 1) as f64 * (want[n - 1].0 - want[0].0));
    check((oracle - 1.33439).abs() <= 1e-4, || {
        format!("oracle SI_h {oracle}")
    })?;
    let h = si_hierarchical(&curve)
        .unwrap()
        .value()
        .ok_or("SI_h undefined")?;
    check(
        (h - 1.33439).abs() <= 1e-4 && (h - oracle).abs() <= 1e-4,
        || format!("SI_h {h}"),
    )?;

    let constant =
        si_hierarchical(&SiCurve::from_pairs(&[(0.0, 2.0), (5.0, 2.0)]).unwrap()).unwrap();
    check(constant == IndexResult::Value(2.0), || {
        format!("constant curve SI_h {constant}")
    })?;

    let same = line(&[4.0, 4.0, 4.0]);
    let degenerate =
        si_hierarchical(&si_curve(&same, &single_linkage(&same).unwrap()).unwrap()).unwrap();
    check(degenerate == IndexResult::Undefined, || {
        format!("identical points gave {degenerate}")
    })?;
    Ok(format!("SI_h = {h:.6}, identical points -> undefined"))
}

fn undefined_semantics() -> Outcome {
    let (y1, p1) = synthetic_dataset(SyntheticId::Y1S);
    let ch = evaluate(IndexId::Ch, &y1, &p1).unwrap();
    check(ch == IndexResult::Undefined, || format!("CH(Y1S) = {ch}"))?;

    let mut probes = 0;
    let mut undefined = 0;
    for id in SyntheticId::ALL {
        let (d, p) = synthetic_dataset(id);
        let mut sets = vec![d.clone()];
        sets.extend(SCALE_FACTORS.iter().map(|&a| d.scaled(a).unwrap()));
        sets.extend(SHIFT_OFFSETS.iter().map(|&b| d.shifted(b).unwrap()));
        for set in &sets {
            for index in IndexId::PARTITION {
                probes += 1;
                match evaluate(index, set, &p).unwrap() {
                    IndexResult::Undefined => undefined += 1,
                    IndexResult::Value(v) => {
                        check(v.is_finite(), || format!("{index} on {id}: {v}"))?
                    }
                }
            }
        }
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let bin = env!("CARGO_BIN_EXE_cvi");
    let synth = Command::new(bin)
        .args(["synth", "Y1S", "--out", dir.path().to_str().unwrap()])
        .output()
        .map_err(|e| e.to_string())?;
    check(synth.status.success(), || "synth failed".into())?;
    let points = dir.path().join("Y1S_points.csv");
    let labels = dir.path().join("Y1S_labels.csv");
    for format in ["structured", "table"] {
        let out = Command::new(bin)
            .args([
                "compute",
                "--data",
                points.to_str().unwrap(),
                "--labels",
                labels.to_str().unwrap(),
            ])
            .args(["--index", "ch", "--format", format])
            .output()
            .map_err(|e| e.to_string())?;
        let text = String::from_utf8_lossy(&out.stdout);
        check(out.status.code() == Some(0), || {
            format!("{format}: exit {:?}", out.status.code())
        })?;
        check(
            text.contains("undefined") && !text.contains("NaN") && !text.contains("inf"),
            || format!("{format} output: {text}"),
        )?;
    }
    Ok(format!(
        "{undefined}/{probes} probe evaluations undefined, none non-finite; CLI exit 0"
    ))
}

/// 20 points around 3 random centers, labeled by center.
fn three_clusters(rng: &mut ChaCha8Rng) -> (Dataset, Partition) {
    let dim = rng.gen_range(1..=4);
    let centers: Vec<Vec<f64>> = (0..3)
        .map(|_| (0..dim).map(|_| rng.gen_range(-10.0..10.0)).collect())
        .collect();
    let mut labels: Vec<usize> = (0..20).map(|i| i % 3).collect();
    labels.shuffle(rng);
    let points = labels
        .iter()
        .map(|&l| {
            centers[l]
                .iter()
                .map(|c| c + rng.gen_range(-3.0..3.0))
                .collect()
        })
        .collect();
    (
        Dataset::new(points).unwrap(),
        Partition::new(labels).unwrap(),
    )
}

fn property_suite() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut distance_over = 0;
    for trial in 0..100 {
        let (d, p) = three_clusters(&mut rng);
        let mut order: Vec<usize> = (0..d.len()).collect();
        order.shuffle(&mut rng);
        let mut names: Vec<usize> = (0..p.k()).collect();
        names.shuffle(&mut rng);
        let d2 = d.permuted(&order);
        let p2 = p.permuted(&order).relabeled(&names).unwrap();
        for index in IndexId::PARTITION {
            let a = evaluate(index, &d, &p).unwrap();
            let b = evaluate(index, &d2, &p2).unwrap();
            check(a.approx_eq(b, 1e-9), || {
                format!("trial {trial}: {index} {a} vs {b}")
            })?;
        }
        let upper = (p.k() * p.sizes().iter().max().unwrap()) as f64;
        let v = si_centroid(&d, &p).unwrap().value().unwrap();
        check((1.0..=upper).contains(&v), || {
            format!("trial {trial}: si_centroid = {v} outside [1, {upper}]")
        })?;
        // the bound is stated for the centroid form only; count excursions of
        // the pairwise form for the report
        let w = si_distance_for(&d, &p).unwrap().value().unwrap();
        check(w >= 1.0, || {
            format!("trial {trial}: si_distance = {w} below 1")
        })?;
        distance_over += usize::from(w > upper);
    }
    for trial in 0..20 {
        let (d, _) = three_clusters(&mut rng);
        let curve = si_curve(&d, &single_linkage(&d).unwrap()).unwrap();
        let s = curve.samples();
        let n = d.len() as f64;
        check(
            (s[0].si - n).abs() <= 1e-9 * n && (s[s.len() - 1].si - n).abs() <= 1e-9 * n,
            || {
                format!(
                    "trial {trial}: endpoints {} and {}",
                    s[0].si,
                    s[s.len() - 1].si
                )
            },
        )?;
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "100 shuffles x 8 indices, si_centroid bounds, 20 curves in {elapsed:.2?} (si_distance above k*max c in {distance_over}/100)"
    ))
}

type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1", "exact SI anchors", exact_anchors),
        ("2", "derived SI anchors vs literal oracle", derived_anchors),
        ("3", "scale/shift invariance on X2S", invariance_suite),
        (
            "3+",
            "scale/shift invariance on X2L (supplementary)",
            invariance_supplementary,
        ),
        ("4", "flag-row regression", flag_rows),
        ("5", "optimality ordering", optimality_ordering),
        ("6", "hierarchical anchor", hierarchical_anchor),
        ("7", "undefined semantics", undefined_semantics),
        ("8", "property-based suite", property_suite),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] AC{id} {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] AC{id} {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
