use std::fmt::Write as _;

use cvi_core::{IndexId, IndexResult, PropertyFlags};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub n: usize,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub index: IndexId,
    pub value: IndexResult,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveRow {
    /// 1-based dendrogram level.
    pub level: usize,
    pub distance: f64,
    pub clusters: usize,
    pub si: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveReport {
    pub samples: Vec<CurveRow>,
    pub si_hierarchical: IndexResult,
    pub minimum_level: usize,
}

/// Output of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputDigest>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub results: Vec<IndexEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<Vec<PropertyFlags>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub files: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            input: None,
            results: Vec::new(),
            flags: None,
            curve: None,
            files: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.command);
        if let Some(input) = &self.input {
            let _ = write!(out, "N={} dim={}", input.n, input.dim);
            if let Some(k) = input.k {
                let _ = write!(out, " k={k}");
            }
            out.push('\n');
        }
        if !self.results.is_empty() {
            let _ = writeln!(out, "{:<16} value", "index");
            for r in &self.results {
                let _ = writeln!(out, "{:<16} {}", r.index.as_str(), r.value);
            }
        }
        if let Some(flags) = &self.flags {
            let _ = writeln!(
                out,
                "{:<16} {:<8} {:<8} scale shift best@Y1 Y2worse base@X1 base@Xmax",
                "index", "variant", "flags"
            );
            let yn = |b: bool| if b { "yes" } else { "no" };
            for f in flags {
                let d = &f.detail;
                let _ = writeln!(
                    out,
                    "{:<16} {:<8} {:<8} {:<5} {:<5} {:<7} {:<7} {:<7} {}",
                    f.index.as_str(),
                    f.variant.to_string(),
                    f.flag_string(),
                    yn(d.scale_ok),
                    yn(d.shift_ok),
                    yn(d.is_best_at_y1),
                    yn(d.y2_worse_than_y1),
                    yn(d.baseline_at_x1),
                    yn(d.baseline_at_xmax),
                );
                if !d.undefined_probes.is_empty() {
                    let probes: Vec<String> = d
                        .undefined_probes
                        .iter()
                        .map(|p| match p.transform.as_str() {
                            "none" => p.dataset.to_string(),
                            t => format!("{} ({t})", p.dataset),
                        })
                        .collect();
                    let _ = writeln!(out, "    undefined on: {}", probes.join(", "));
                }
            }
        }
        if let Some(curve) = &self.curve {
            let _ = writeln!(
                out,
                "{:>5} {:>14} {:>8} {:>14}",
                "level", "distance", "clusters", "si"
            );
            for s in &curve.samples {
                let _ = writeln!(
                    out,
                    "{:>5} {:>14.6} {:>8} {:>14.6}",
                    s.level, s.distance, s.clusters, s.si
                );
            }
            let _ = writeln!(out, "si_hierarchical  {}", curve.si_hierarchical);
            let _ = writeln!(out, "minimum at level {}", curve.minimum_level);
        }
        for f in &self.files {
            let _ = writeln!(out, "wrote {f}");
        }
        out
    }
}
