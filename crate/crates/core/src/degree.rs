//! Integers extended by a bottom element.
//!
//! Top degrees of vanishing modules, maxima over empty sets and the like are
//! `MinusInfinity`, never `0`. Serialized as a JSON integer, or as the string
//! `"-inf"`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ExtendedDegree {
    #[default]
    MinusInfinity,
    Finite(i64),
}

pub use ExtendedDegree::{Finite, MinusInfinity};

impl ExtendedDegree {
    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Finite(v) => Some(v),
            MinusInfinity => None,
        }
    }

    /// Maximum of an iterator; `MinusInfinity` when empty.
    pub fn max_of<I: IntoIterator<Item = ExtendedDegree>>(iter: I) -> Self {
        iter.into_iter().max().unwrap_or(MinusInfinity)
    }

    /// Human rendering with the minus-infinity glyph.
    pub fn pretty(self) -> String {
        match self {
            Finite(v) => v.to_string(),
            MinusInfinity => "−∞".to_string(),
        }
    }
}

impl PartialOrd for ExtendedDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (MinusInfinity, MinusInfinity) => Ordering::Equal,
            (MinusInfinity, Finite(_)) => Ordering::Less,
            (Finite(_), MinusInfinity) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl From<i64> for ExtendedDegree {
    fn from(v: i64) -> Self {
        Finite(v)
    }
}

impl Add<i64> for ExtendedDegree {
    type Output = ExtendedDegree;

    fn add(self, rhs: i64) -> Self {
        match self {
            Finite(v) => Finite(v + rhs),
            MinusInfinity => MinusInfinity,
        }
    }
}

impl Sub<i64> for ExtendedDegree {
    type Output = ExtendedDegree;

    fn sub(self, rhs: i64) -> Self {
        self + (-rhs)
    }
}

impl fmt::Display for ExtendedDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => write!(f, "{v}"),
            MinusInfinity => f.write_str("-inf"),
        }
    }
}

impl Serialize for ExtendedDegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Finite(v) => s.serialize_i64(*v),
            MinusInfinity => s.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedDegree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExtendedDegree;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or the string \"-inf\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
                Ok(Finite(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
                i64::try_from(v)
                    .map(Finite)
                    .map_err(|_| E::custom("degree out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                if v == "-inf" {
                    Ok(MinusInfinity)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }
        }
        d.deserialize_any(V)
    }
}
