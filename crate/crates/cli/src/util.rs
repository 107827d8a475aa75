//! Helpers shared by the subcommands: input reading with digests, the
//! precision-cap override, and conversions from library values to report JSON.

use std::path::Path;

use concordance_core::exactnum::LaurentPoly;
use concordance_core::ltsig::{Inertia, IntegralValue};
use concordance_core::obstruction::{rational_string, RhoMode};
use concordance_core::towers::{BoundSide, HeightCertificate, Relation, TraceTree};
use concordance_core::{Error, Result, DEFAULT_PRECISION_CAP};
use serde_json::{json, Value};

use crate::report::{digest_bytes, InputDigest};

/// Environment variable that overrides the refinement-step cap.
pub const CAP_ENV: &str = "CONCORDANCE_KIT_PRECISION_CAP";

/// The refinement-step cap, from the environment or the library default.
pub fn precision_cap() -> Result<u64> {
    match std::env::var(CAP_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::BadInput(format!("{CAP_ENV} must be a nonnegative integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_PRECISION_CAP),
    }
}

/// Reads a file, recording its digest under the given path.
pub fn read_input(path: &Path, inputs: &mut Vec<InputDigest>) -> Result<String> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::BadInput(format!("cannot read {}: {e}", path.display())))?;
    inputs.push(digest_bytes(&path.display().to_string(), &bytes));
    String::from_utf8(bytes)
        .map_err(|_| Error::BadInput(format!("{} is not valid UTF-8", path.display())))
}

/// An inertia triple as report JSON.
pub fn inertia_json(inertia: &Inertia) -> Value {
    json!({
        "positive": inertia.pos,
        "negative": inertia.neg,
        "null": inertia.null,
        "signature": inertia.signature(),
    })
}

/// An exact-or-enclosed number as report JSON.
pub fn integral_json(v: &IntegralValue) -> Value {
    match v {
        IntegralValue::Exact(x) => json!({
            "kind": "exact",
            "value": rational_string(x),
        }),
        IntegralValue::Enclosure { lo, hi } => json!({
            "kind": "enclosure",
            "lower": rational_string(lo),
            "upper": rational_string(hi),
            "width": rational_string(&(hi - lo)),
        }),
    }
}

/// Laurent polynomials rendered through their display form.
pub fn poly_string(p: &LaurentPoly) -> String {
    p.to_string()
}

/// Parses the defect mode: `integral` or `prime:P`.
pub fn parse_mode(s: &str) -> Result<RhoMode> {
    if s == "integral" {
        return Ok(RhoMode::Integral);
    }
    if let Some(p) = s.strip_prefix("prime:") {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::BadInput(format!("invalid prime in mode {s:?}")))?;
        return Ok(RhoMode::PrimeSum(p));
    }
    Err(Error::BadInput(format!(
        "unknown mode {s:?}: expected \"integral\" or \"prime:P\""
    )))
}

/// All relation names the fact language knows, for parsing and error text.
pub const RELATIONS: [Relation; 9] = [
    Relation::Conc,
    Relation::GropeConc,
    Relation::WTConc,
    Relation::WTCob,
    Relation::SolvCob,
    Relation::RhoVanishes,
    Relation::RhoNonzero,
    Relation::RepNontrivial,
    Relation::SideConditionI,
];

/// Parses a relation by its canonical name.
pub fn parse_relation(s: &str) -> Result<Relation> {
    RELATIONS
        .into_iter()
        .find(|r| r.name() == s)
        .ok_or_else(|| {
            let names: Vec<&str> = RELATIONS.iter().map(|r| r.name()).collect();
            Error::BadInput(format!(
                "unknown relation {s:?}: expected one of {}",
                names.join(", ")
            ))
        })
}

/// A proof tree as nested report JSON.
pub fn trace_json(tree: &TraceTree) -> Value {
    json!({
        "fact": tree.summary,
        "by": tree.justification,
        "premises": tree.children.iter().map(trace_json).collect::<Vec<_>>(),
    })
}

fn side_json(side: &Option<BoundSide>) -> Value {
    match side {
        Some(s) => json!({
            "bound": s.bound.to_string(),
            "trace": trace_json(&s.trace),
        }),
        None => Value::Null,
    }
}

/// A best-bounds certificate as report JSON.
pub fn certificate_json(cert: &HeightCertificate) -> Value {
    json!({
        "query": format!("{}({})", cert.relation, cert.subjects.join(", ")),
        "positive": side_json(&cert.positive),
        "negative": side_json(&cert.negative),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_parsing() {
        assert_eq!(parse_mode("integral").unwrap(), RhoMode::Integral);
        assert_eq!(parse_mode("prime:7").unwrap(), RhoMode::PrimeSum(7));
        assert!(parse_mode("prime:x").is_err());
        assert!(parse_mode("p-adic").is_err());
    }

    #[test]
    fn relation_parsing() {
        assert_eq!(parse_relation("GropeConc").unwrap(), Relation::GropeConc);
        assert_eq!(parse_relation("WTConc").unwrap(), Relation::WTConc);
        let err = parse_relation("Slice").unwrap_err().to_string();
        assert!(err.contains("SolvCob"), "error lists valid names: {err}");
    }

    #[test]
    fn integral_json_shapes() {
        use num_rational::BigRational;
        let exact = IntegralValue::Exact(BigRational::new((-4).into(), 3.into()));
        assert_eq!(
            integral_json(&exact),
            serde_json::json!({"kind": "exact", "value": "-4/3"})
        );
        let encl = IntegralValue::Enclosure {
            lo: BigRational::new(1.into(), 4.into()),
            hi: BigRational::new(1.into(), 2.into()),
        };
        let v = integral_json(&encl);
        assert_eq!(v["kind"], "enclosure");
        assert_eq!(v["width"], "1/4");
    }
}
