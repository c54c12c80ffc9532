//! The fixed three-dimensional probe datasets used by the property audit,
//! plus the scale and shift transforms applied to them.
//!
//! Base points: ①(0,0,1) ②(0,1,0) ③(1,0,0) ④(0,0,2) ⑤(0,2,0) ⑥(2,0,0)
//! ⑦(0,0,3) ⑧(0,3,0) ⑨(3,0,0). The Y datasets repeat ① only.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::data::{Dataset, Partition};
use crate::error::{Error, Result};

const BASE_POINTS: [[f64; 3]; 9] = [
    [0.0, 0.0, 1.0],
    [0.0, 1.0, 0.0],
    [1.0, 0.0, 0.0],
    [0.0, 0.0, 2.0],
    [0.0, 2.0, 0.0],
    [2.0, 0.0, 0.0],
    [0.0, 0.0, 3.0],
    [0.0, 3.0, 0.0],
    [3.0, 0.0, 0.0],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SyntheticId {
    X1S,
    X2S,
    X3S,
    Y1S,
    Y2S,
    X1L,
    X2L,
    X9L,
    Y1L,
    Y2L,
}

impl SyntheticId {
    pub const ALL: [SyntheticId; 10] = [
        SyntheticId::X1S,
        SyntheticId::X2S,
        SyntheticId::X3S,
        SyntheticId::Y1S,
        SyntheticId::Y2S,
        SyntheticId::X1L,
        SyntheticId::X2L,
        SyntheticId::X9L,
        SyntheticId::Y1L,
        SyntheticId::Y2L,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SyntheticId::X1S => "X1S",
            SyntheticId::X2S => "X2S",
            SyntheticId::X3S => "X3S",
            SyntheticId::Y1S => "Y1S",
            SyntheticId::Y2S => "Y2S",
            SyntheticId::X1L => "X1L",
            SyntheticId::X2L => "X2L",
            SyntheticId::X9L => "X9L",
            SyntheticId::Y1L => "Y1L",
            SyntheticId::Y2L => "Y2L",
        }
    }
}

impl fmt::Display for SyntheticId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SyntheticId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SyntheticId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownDataset(s.to_string()))
    }
}

/// Short (three points) or long (six to nine points) probe family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Short,
    Long,
}

impl Variant {
    /// Distinct points, one cluster.
    pub fn whole(self) -> SyntheticId {
        match self {
            Variant::Short => SyntheticId::X1S,
            Variant::Long => SyntheticId::X1L,
        }
    }

    /// Distinct points, two clusters; the transform-invariance probe.
    pub fn split(self) -> SyntheticId {
        match self {
            Variant::Short => SyntheticId::X2S,
            Variant::Long => SyntheticId::X2L,
        }
    }

    /// Distinct points, one cluster per point.
    pub fn singletons(self) -> SyntheticId {
        match self {
            Variant::Short => SyntheticId::X3S,
            Variant::Long => SyntheticId::X9L,
        }
    }

    /// Coincident points, one cluster.
    pub fn coincident_whole(self) -> SyntheticId {
        match self {
            Variant::Short => SyntheticId::Y1S,
            Variant::Long => SyntheticId::Y1L,
        }
    }

    /// Coincident points, split into two clusters.
    pub fn coincident_split(self) -> SyntheticId {
        match self {
            Variant::Short => SyntheticId::Y2S,
            Variant::Long => SyntheticId::Y2L,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Short => "short",
            Variant::Long => "long",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "short" => Ok(Variant::Short),
            "long" => Ok(Variant::Long),
            other => Err(format!(
                "unknown variant `{other}` (expected short or long)"
            )),
        }
    }
}

fn distinct(n: usize) -> Vec<Vec<f64>> {
    BASE_POINTS[..n].iter().map(|p| p.to_vec()).collect()
}

fn coincident(n: usize) -> Vec<Vec<f64>> {
    vec![BASE_POINTS[0].to_vec(); n]
}

/// Returns the probe dataset together with its drawn partition.
pub fn synthetic_dataset(id: SyntheticId) -> (Dataset, Partition) {
    let (points, labels) = match id {
        SyntheticId::X1S => (distinct(3), vec![0; 3]),
        SyntheticId::X2S => (distinct(3), vec![0, 1, 1]),
        SyntheticId::X3S => (distinct(3), vec![0, 1, 2]),
        SyntheticId::Y1S => (coincident(3), vec![0; 3]),
        SyntheticId::Y2S => (coincident(3), vec![0, 0, 1]),
        SyntheticId::X1L => (distinct(9), vec![0; 9]),
        SyntheticId::X2L => (distinct(9), vec![0, 0, 0, 1, 1, 1, 1, 1, 1]),
        SyntheticId::X9L => (distinct(9), (0..9).collect()),
        SyntheticId::Y1L => (coincident(6), vec![0; 6]),
        SyntheticId::Y2L => (coincident(6), vec![0, 0, 0, 1, 1, 1]),
    };
    let data = Dataset::new(points).expect("constant probe points are valid");
    let partition = Partition::new(labels).expect("constant probe labels are dense");
    (data, partition)
}

/// String-keyed lookup of [`synthetic_dataset`].
pub fn synthetic_dataset_by_name(name: &str) -> Result<(Dataset, Partition)> {
    Ok(synthetic_dataset(name.parse()?))
}

/// Multiplies every coordinate by a nonzero factor.
pub fn scale_dataset(data: &Dataset, factor: f64) -> Result<Dataset> {
    data.scaled(factor)
}

/// Adds the same offset along every basis direction.
pub fn shift_dataset(data: &Dataset, offset: f64) -> Result<Dataset> {
    data.shifted(offset)
}
