//! Heights in half-integer units.
//!
//! Concordance and cobordism depths come in whole and half steps (3, 3.5, 4,
//! ...). Storing twice the height as an integer keeps all rule arithmetic in
//! integers: a shift by 2 adds 4 half-units, a shift by 2.5 adds 5.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A nonnegative height in half-integer steps, ordered numerically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Height {
    half_units: u64,
}

impl Height {
    /// Height `half_units / 2`.
    pub fn from_halves(half_units: u64) -> Self {
        Height { half_units }
    }

    /// Integer height `n`.
    pub fn from_int(n: u64) -> Self {
        Height { half_units: 2 * n }
    }

    /// Height `n.5`.
    pub fn and_a_half(n: u64) -> Self {
        Height {
            half_units: 2 * n + 1,
        }
    }

    pub fn half_units(&self) -> u64 {
        self.half_units
    }

    /// True for heights of the form `n.5`.
    pub fn is_half_integer(&self) -> bool {
        self.half_units % 2 == 1
    }

    /// Adds a whole number of units.
    pub fn plus_int(&self, n: u64) -> Height {
        Height {
            half_units: self.half_units + 2 * n,
        }
    }

    /// Subtracts a whole number of units, if that stays nonnegative.
    pub fn checked_minus_int(&self, n: u64) -> Option<Height> {
        self.half_units.checked_sub(2 * n).map(Height::from_halves)
    }

    /// Canonical fraction rendering `k/2`, used in serialized facts.
    pub fn fraction_label(&self) -> String {
        format!("{}/2", self.half_units)
    }

    /// Parses `"3"`, `"3.5"`, or `"7/2"`.
    pub fn parse(s: &str) -> Result<Height> {
        let s = s.trim();
        let bad = || Error::BadInput(format!("invalid height {s:?} (use \"3\", \"3.5\" or \"7/2\")"));
        if let Some(halves) = s.strip_suffix("/2") {
            let k: u64 = halves.trim().parse().map_err(|_| bad())?;
            return Ok(Height::from_halves(k));
        }
        if let Some(whole) = s.strip_suffix(".5") {
            let n: u64 = whole.trim().parse().map_err(|_| bad())?;
            return Ok(Height::and_a_half(n));
        }
        let n: u64 = s.parse().map_err(|_| bad())?;
        Ok(Height::from_int(n))
    }
}

impl std::fmt::Display for Height {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_half_integer() {
            write!(f, "{}.5", self.half_units / 2)
        } else {
            write!(f, "{}", self.half_units / 2)
        }
    }
}

impl Serialize for Height {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.fraction_label())
    }
}

impl<'de> Deserialize<'de> for Height {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Height::parse(&s).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_arithmetic_use_half_units() {
        let three = Height::from_int(3);
        let three_and_a_half = Height::and_a_half(3);
        assert!(three < three_and_a_half);
        assert!(three_and_a_half < Height::from_int(4));
        assert_eq!(three.plus_int(2), Height::from_int(5));
        assert_eq!(three_and_a_half.plus_int(2), Height::and_a_half(5));
        assert_eq!(
            three_and_a_half.checked_minus_int(2),
            Some(Height::and_a_half(1))
        );
        assert_eq!(Height::from_int(1).checked_minus_int(2), None);
        assert!(three_and_a_half.is_half_integer());
        assert!(!three.is_half_integer());
    }

    #[test]
    fn display_and_parse_round_trip() {
        for h in [
            Height::from_int(0),
            Height::from_int(3),
            Height::and_a_half(0),
            Height::and_a_half(5),
        ] {
            assert_eq!(Height::parse(&h.to_string()).unwrap(), h);
            assert_eq!(Height::parse(&h.fraction_label()).unwrap(), h);
        }
        assert_eq!(Height::parse("7/2").unwrap(), Height::and_a_half(3));
        assert!(Height::parse("-1").is_err());
        assert!(Height::parse("x.5").is_err());
    }

    #[test]
    fn serde_uses_fraction_labels() {
        let h = Height::and_a_half(2);
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(json, "\"5/2\"");
        let back: Height = serde_json::from_str(&json).unwrap();
        assert_eq!(back, h);
    }
}
