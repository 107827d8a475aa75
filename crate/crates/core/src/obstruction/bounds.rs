//! User-supplied upper bounds on the magnitude of signature defects, and
//! the budget they add up to for a satellite family.
//!
//! The existence of such bounds per 3-manifold is a theorem; their values
//! are not, so the model is pure configuration. A convenience constructor
//! derives values as kappa * complexity(manifold) from user-supplied
//! inputs, and labels the result as non-canonical.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::towers::SatelliteTree;
use crate::{Error, Result};

/// Parses a rational from `"50"`, `"-3/4"`, or `"25/1"` form.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::BadRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        None => (t, "1"),
        Some((n, d)) => (n.trim(), d.trim()),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Renders a rational as `"n"` when integral and `"p/q"` otherwise.
pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Serialize, Deserialize)]
struct BoundModelWire {
    bounds: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
}

/// Nonnegative upper bounds C(M) per 3-manifold id.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BoundModel {
    bounds: BTreeMap<String, BigRational>,
    /// How the values were produced, when they were not entered directly.
    pub provenance: Option<String>,
}

impl BoundModel {
    pub fn new() -> Self {
        BoundModel::default()
    }

    /// Inserts one bound; values must be nonnegative.
    pub fn insert(&mut self, id: &str, value: BigRational) -> Result<()> {
        if value.is_negative() {
            return Err(Error::BadInput(format!(
                "bound for {id} must be nonnegative, got {}",
                rational_string(&value)
            )));
        }
        self.bounds.insert(id.to_string(), value);
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&BigRational> {
        self.bounds.get(id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.bounds.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    /// Convenience mode: every bound is kappa * complexity(M) for a
    /// user-chosen constant and user-supplied complexity integers. The
    /// values this produces are a labeled convention, not canonical.
    pub fn universal(kappa: &BigRational, complexities: &BTreeMap<String, u64>) -> Result<BoundModel> {
        let mut model = BoundModel::new();
        for (id, c) in complexities {
            model.insert(id, kappa * BigRational::from_integer((*c).into()))?;
        }
        model.provenance = Some(format!(
            "universal-bound convenience mode: C(M) = kappa * complexity(M) with kappa = {} (non-canonical values)",
            rational_string(kappa)
        ));
        Ok(model)
    }

    pub fn to_json(&self) -> String {
        let wire = BoundModelWire {
            bounds: self
                .bounds
                .iter()
                .map(|(k, v)| (k.clone(), rational_string(v)))
                .collect(),
            provenance: self.provenance.clone(),
        };
        serde_json::to_string_pretty(&wire).expect("bound model serializes")
    }

    pub fn from_json(s: &str) -> Result<BoundModel> {
        let wire: BoundModelWire =
            serde_json::from_str(s).map_err(|e| Error::BadInput(format!("bound model: {e}")))?;
        let mut model = BoundModel::new();
        for (id, value) in &wire.bounds {
            model.insert(id, parse_rational(value)?)?;
        }
        model.provenance = wire.provenance;
        Ok(model)
    }
}

/// The budget a defect must exceed for the family: the bound for the glued
/// seed-link/reference exterior plus one term per seed-knot surgery
/// manifold. Fails by naming every missing id.
pub fn budget(model: &BoundModel, family: &SatelliteTree) -> Result<BigRational> {
    let required = family.required_bounds();
    let missing: Vec<String> = required
        .iter()
        .filter(|id| model.get(id).is_none())
        .cloned()
        .collect();
    if !missing.is_empty() {
        return Err(Error::MissingBounds(missing));
    }
    Ok(required
        .iter()
        .map(|id| model.get(id).expect("checked present"))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::towers::{build_paper_family, J0Descriptor, KnotRegistry};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn family(n: u64) -> SatelliteTree {
        let reg = KnotRegistry::standard().unwrap();
        let seeds = vec!["stevedore".to_string(); (n - 1) as usize];
        let j0 = J0Descriptor { knot: "trefoil".to_string(), copies: 1 };
        build_paper_family(n, 1, &seeds, &j0, &reg).unwrap().tree
    }

    #[test]
    fn rational_literals_round_trip() {
        assert_eq!(parse_rational("50").unwrap(), q(50, 1));
        assert_eq!(parse_rational("25/1").unwrap(), q(25, 1));
        assert_eq!(parse_rational("-3/4").unwrap(), q(-3, 4));
        assert_eq!(parse_rational(" 7 / 2 ").unwrap(), q(7, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
        assert_eq!(rational_string(&q(10, 2)), "5");
        assert_eq!(rational_string(&q(-4, 3)), "-4/3");
    }

    #[test]
    fn model_accepts_only_nonnegative_bounds() {
        let mut m = BoundModel::new();
        m.insert("E_L0_cup_E_H", q(50, 1)).unwrap();
        assert!(m.insert("M_K0", q(-1, 2)).is_err());
    }

    #[test]
    fn model_json_round_trips() {
        let mut m = BoundModel::new();
        m.insert("E_L0_cup_E_H", q(50, 1)).unwrap();
        m.insert("M_K0", q(25, 1)).unwrap();
        m.insert("M_K1", q(51, 2)).unwrap();
        let json = m.to_json();
        assert!(json.contains("\"50\""), "{json}");
        assert!(json.contains("\"51/2\""), "{json}");
        let back = BoundModel::from_json(&json).unwrap();
        assert_eq!(back, m);

        let literal = r#"{"bounds": {"E_L0_cup_E_H": "50", "M_K0": "25/1"}}"#;
        let parsed = BoundModel::from_json(literal).unwrap();
        assert_eq!(parsed.get("M_K0"), Some(&q(25, 1)));

        let negative = r#"{"bounds": {"E_L0_cup_E_H": "-1"}}"#;
        assert!(BoundModel::from_json(negative).is_err());
    }

    #[test]
    fn budgets_sum_the_required_entries() {
        let mut m = BoundModel::new();
        m.insert("E_L0_cup_E_H", q(50, 1)).unwrap();
        m.insert("M_K0", q(25, 1)).unwrap();
        m.insert("M_K1", q(25, 1)).unwrap();
        assert_eq!(budget(&m, &family(3)).unwrap(), q(100, 1));
        // Extra entries are ignored; only the family's manifolds count.
        assert_eq!(budget(&m, &family(1)).unwrap(), q(50, 1));
    }

    #[test]
    fn missing_bounds_are_named() {
        let mut m = BoundModel::new();
        m.insert("E_L0_cup_E_H", q(50, 1)).unwrap();
        m.insert("M_K0", q(25, 1)).unwrap();
        let err = budget(&m, &family(3)).unwrap_err();
        match err {
            Error::MissingBounds(ids) => assert_eq!(ids, vec!["M_K1"]),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn universal_mode_is_labeled() {
        let mut complexities = BTreeMap::new();
        complexities.insert("E_L0_cup_E_H".to_string(), 10u64);
        complexities.insert("M_K0".to_string(), 5u64);
        let m = BoundModel::universal(&q(7, 2), &complexities).unwrap();
        assert_eq!(m.get("M_K0"), Some(&q(35, 2)));
        assert!(m.provenance.as_deref().unwrap().contains("non-canonical"));
        assert!(m.to_json().contains("non-canonical"));
    }
}
