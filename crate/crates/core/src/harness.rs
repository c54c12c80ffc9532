//! Mechanical audit of the three desirable index properties.
//!
//! * Transform invariance: the split probe (X2) must score the same after
//!   scaling every coordinate by each of [`SCALE_FACTORS`] and after shifting
//!   every coordinate by each of [`SHIFT_OFFSETS`].
//! * Optimal clustering: coincident points in one cluster (Y1) must reach the
//!   index's declared best value, and splitting them (Y2) must score strictly
//!   worse.
//! * Unbiased clustering: both extreme partitions of distinct points (X1, and
//!   one cluster per point) must score the index's declared baseline.
//!
//! Results compose into the flags `S`/`s`, `B`/`b` and `C`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::data::{Dataset, Partition};
use crate::error::Result;
use crate::index::{descriptor, evaluate, IndexId};
use crate::result::IndexResult;
use crate::synthetic::{synthetic_dataset, SyntheticId, Variant};

pub const SCALE_FACTORS: [f64; 3] = [0.5, 2.0, 10.0];
pub const SHIFT_OFFSETS: [f64; 3] = [-5.0, 1.0, 100.0];
/// Relative tolerance, scaled by `max(1, |reference|)`.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Invariance {
    /// Scale and shift invariant (`S`).
    #[serde(rename = "S")]
    Both,
    /// Exactly one of the two (`s`).
    #[serde(rename = "s")]
    One,
    #[serde(rename = "none")]
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Optimality {
    /// Best value at Y1 and Y2 strictly worse (`B`).
    #[serde(rename = "B")]
    BestAndSplitWorse,
    /// Best value at Y1 only (`b`).
    #[serde(rename = "b")]
    BestOnly,
    #[serde(rename = "none")]
    Neither,
}

/// A probe evaluation that came back undefined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UndefinedProbe {
    pub dataset: SyntheticId,
    /// `"scale 0.5"`, `"shift -5"`, or `"none"` for the untransformed probe.
    pub transform: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvarianceCheck {
    pub scale_ok: bool,
    pub shift_ok: bool,
    pub undefined: Vec<UndefinedProbe>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimalityCheck {
    pub is_best: bool,
    pub split_worse: bool,
    pub whole: IndexResult,
    pub split: IndexResult,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineCheck {
    pub at_whole: bool,
    pub at_singletons: bool,
    pub whole: IndexResult,
    pub singletons: IndexResult,
}

/// Per-evaluation outcomes behind a flag row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Detail {
    pub scale_ok: bool,
    pub shift_ok: bool,
    pub is_best_at_y1: bool,
    pub y2_worse_than_y1: bool,
    pub baseline_at_x1: bool,
    pub baseline_at_xmax: bool,
    pub undefined_probes: Vec<UndefinedProbe>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyFlags {
    pub index: IndexId,
    pub variant: Variant,
    pub invariance: Invariance,
    pub optimality: Optimality,
    /// `C`: the baseline is attained at both extreme partitions.
    pub baseline: bool,
    pub detail: Detail,
}

impl PropertyFlags {
    /// Derives the flags from the detail booleans.
    pub fn from_detail(index: IndexId, variant: Variant, detail: Detail) -> Self {
        let invariance = match (detail.scale_ok, detail.shift_ok) {
            (true, true) => Invariance::Both,
            (true, false) | (false, true) => Invariance::One,
            (false, false) => Invariance::Neither,
        };
        let optimality = match (detail.is_best_at_y1, detail.y2_worse_than_y1) {
            (true, true) => Optimality::BestAndSplitWorse,
            (true, false) => Optimality::BestOnly,
            (false, _) => Optimality::Neither,
        };
        let baseline = detail.baseline_at_x1 && detail.baseline_at_xmax;
        Self {
            index,
            variant,
            invariance,
            optimality,
            baseline,
            detail,
        }
    }

    /// Compact flag string, e.g. `"S B C"`, `"s b"` or `"-"`.
    pub fn flag_string(&self) -> String {
        let mut parts = Vec::new();
        match self.invariance {
            Invariance::Both => parts.push("S"),
            Invariance::One => parts.push("s"),
            Invariance::Neither => {}
        }
        match self.optimality {
            Optimality::BestAndSplitWorse => parts.push("B"),
            Optimality::BestOnly => parts.push("b"),
            Optimality::Neither => {}
        }
        if self.baseline {
            parts.push("C");
        }
        if parts.is_empty() {
            "-".to_string()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Display for PropertyFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({}): {}",
            self.index,
            self.variant,
            self.flag_string()
        )
    }
}

fn probe(id: IndexId, data: &Dataset, partition: &Partition) -> Result<IndexResult> {
    evaluate(id, data, partition)
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOLERANCE * b.abs().max(1.0)
}

/// Evaluations 1) and 2): scale and shift invariance on the split probe.
pub fn check_invariance(id: IndexId, variant: Variant) -> Result<InvarianceCheck> {
    let dataset = variant.split();
    let (data, partition) = synthetic_dataset(dataset);
    let reference = probe(id, &data, &partition)?;
    let mut undefined = Vec::new();
    if reference.is_undefined() {
        undefined.push(UndefinedProbe {
            dataset,
            transform: "none".into(),
        });
    }
    let mut run = |label: &str, amount: f64, transformed: Dataset| -> Result<bool> {
        let v = probe(id, &transformed, &partition)?;
        if v.is_undefined() {
            undefined.push(UndefinedProbe {
                dataset,
                transform: format!("{label} {amount}"),
            });
        }
        Ok(reference.approx_eq(v, TOLERANCE))
    };
    let mut scale_ok = true;
    for a in SCALE_FACTORS {
        scale_ok &= run("scale", a, data.scaled(a)?)?;
    }
    let mut shift_ok = true;
    for b in SHIFT_OFFSETS {
        shift_ok &= run("shift", b, data.shifted(b)?)?;
    }
    Ok(InvarianceCheck {
        scale_ok,
        shift_ok,
        undefined,
    })
}

/// Evaluations 3) and 4): best value on coincident points, split strictly
/// worse. Undefined values never satisfy either check.
pub fn check_optimality(id: IndexId, variant: Variant) -> Result<OptimalityCheck> {
    let desc = descriptor(id);
    let (y1, p1) = synthetic_dataset(variant.coincident_whole());
    let (y2, p2) = synthetic_dataset(variant.coincident_split());
    let whole = probe(id, &y1, &p1)?;
    let split = probe(id, &y2, &p2)?;
    let is_best = match (desc.best_value, whole) {
        (Some(best), IndexResult::Value(v)) => close(v, best),
        _ => false,
    };
    let split_worse = match (whole, split) {
        (IndexResult::Value(a), IndexResult::Value(b)) => desc.direction.is_better(a, b),
        _ => false,
    };
    Ok(OptimalityCheck {
        is_best,
        split_worse,
        whole,
        split,
    })
}

/// Evaluation 5): the declared baseline at both extreme partitions.
pub fn check_baseline(id: IndexId, variant: Variant) -> Result<BaselineCheck> {
    let desc = descriptor(id);
    let (x1, p1) = synthetic_dataset(variant.whole());
    let (xs, ps) = synthetic_dataset(variant.singletons());
    let whole = probe(id, &x1, &p1)?;
    let singletons = probe(id, &xs, &ps)?;
    let hits = |v: IndexResult, n: usize| match (desc.baseline, v) {
        (Some(b), IndexResult::Value(v)) => close(v, b.value(n)),
        _ => false,
    };
    Ok(BaselineCheck {
        at_whole: hits(whole, x1.len()),
        at_singletons: hits(singletons, xs.len()),
        whole,
        singletons,
    })
}

/// Runs all five evaluations on one probe family.
pub fn audit_variant(id: IndexId, variant: Variant) -> Result<PropertyFlags> {
    let inv = check_invariance(id, variant)?;
    let opt = check_optimality(id, variant)?;
    let base = check_baseline(id, variant)?;

    let mut undefined = inv.undefined;
    let mut note = |dataset: SyntheticId, v: IndexResult| {
        if v.is_undefined() {
            undefined.push(UndefinedProbe {
                dataset,
                transform: "none".into(),
            });
        }
    };
    note(variant.coincident_whole(), opt.whole);
    note(variant.coincident_split(), opt.split);
    note(variant.whole(), base.whole);
    note(variant.singletons(), base.singletons);

    let detail = Detail {
        scale_ok: inv.scale_ok,
        shift_ok: inv.shift_ok,
        is_best_at_y1: opt.is_best,
        y2_worse_than_y1: opt.split_worse,
        baseline_at_x1: base.at_whole,
        baseline_at_xmax: base.at_singletons,
        undefined_probes: undefined,
    };
    Ok(PropertyFlags::from_detail(id, variant, detail))
}

/// Flag row on the short probes.
pub fn audit(id: IndexId) -> Result<PropertyFlags> {
    audit_variant(id, Variant::Short)
}

/// Audits several indices concurrently; rows come back in request order.
pub fn audit_many(ids: &[IndexId], variant: Variant) -> Result<Vec<PropertyFlags>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = ids
            .iter()
            .map(|&id| scope.spawn(move || audit_variant(id, variant)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("audit thread panicked"))
            .collect()
    })
}
