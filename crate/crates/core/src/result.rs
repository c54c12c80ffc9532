use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Outcome of an index evaluation: a finite value, or `Undefined` when a
/// defining formula divides by zero.
///
/// Serializes as a number or the string `"undefined"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexResult {
    Value(f64),
    Undefined,
}

impl IndexResult {
    pub const UNDEFINED_TOKEN: &'static str = "undefined";

    /// Wraps `v`, mapping NaN and infinities to `Undefined`.
    pub fn from_f64(v: f64) -> Self {
        if v.is_finite() {
            IndexResult::Value(v)
        } else {
            IndexResult::Undefined
        }
    }

    /// `numerator / denominator`, or `Undefined` on a zero denominator.
    pub fn ratio(numerator: f64, denominator: f64) -> Self {
        if denominator == 0.0 {
            IndexResult::Undefined
        } else {
            Self::from_f64(numerator / denominator)
        }
    }

    pub fn value(self) -> Option<f64> {
        match self {
            IndexResult::Value(v) => Some(v),
            IndexResult::Undefined => None,
        }
    }

    pub fn is_undefined(self) -> bool {
        matches!(self, IndexResult::Undefined)
    }

    /// Applies `f` to a defined value; `Undefined` stays `Undefined`.
    pub fn map(self, f: impl FnOnce(f64) -> f64) -> Self {
        match self {
            IndexResult::Value(v) => Self::from_f64(f(v)),
            IndexResult::Undefined => IndexResult::Undefined,
        }
    }

    /// Equality within relative tolerance `rel` (scaled by `max(1, |self|)`).
    /// Two `Undefined` results compare equal.
    pub fn approx_eq(self, other: IndexResult, rel: f64) -> bool {
        match (self, other) {
            (IndexResult::Value(a), IndexResult::Value(b)) => {
                (a - b).abs() <= rel * a.abs().max(1.0)
            }
            (IndexResult::Undefined, IndexResult::Undefined) => true,
            _ => false,
        }
    }
}

impl From<f64> for IndexResult {
    fn from(v: f64) -> Self {
        Self::from_f64(v)
    }
}

impl fmt::Display for IndexResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexResult::Value(v) => match f.precision() {
                Some(p) => write!(f, "{v:.p$}"),
                None => write!(f, "{v}"),
            },
            IndexResult::Undefined => f.write_str(Self::UNDEFINED_TOKEN),
        }
    }
}

impl Serialize for IndexResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            IndexResult::Value(v) => s.serialize_f64(*v),
            IndexResult::Undefined => s.serialize_str(Self::UNDEFINED_TOKEN),
        }
    }
}

impl<'de> Deserialize<'de> for IndexResult {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct ResultVisitor;

        impl Visitor<'_> for ResultVisitor {
            type Value = IndexResult;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a finite number or \"undefined\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<IndexResult, E> {
                if v.is_finite() {
                    Ok(IndexResult::Value(v))
                } else {
                    Err(E::custom("non-finite index value"))
                }
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<IndexResult, E> {
                Ok(IndexResult::Value(v as f64))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<IndexResult, E> {
                Ok(IndexResult::Value(v as f64))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<IndexResult, E> {
                if v == IndexResult::UNDEFINED_TOKEN {
                    Ok(IndexResult::Undefined)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }

        d.deserialize_any(ResultVisitor)
    }
}
