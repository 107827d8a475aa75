//! `sig`: the full signature-function report for a Seifert matrix — exact
//! jump locations, inertia on every arc, the value at -1, the normalized
//! integral over the circle, and optional root-of-unity sums.

use std::path::PathBuf;

use concordance_core::knotio::{SeifertMatrix, SurfaceKind};
use concordance_core::ltsig::{root_of_unity_sum, signature_function, signature_integral};
use concordance_core::obstruction::{parse_rational, rational_string};
use concordance_core::Result;
use serde_json::{json, Value};

use crate::report::InputDigest;
use crate::util::{inertia_json, integral_json, precision_cap, read_input};

#[derive(Debug, clap::Args)]
pub struct SigArgs {
    /// Seifert matrix JSON file: {"matrix": [[..], ..]}.
    pub seifert: PathBuf,

    /// Enclosure width for the signature integral (a positive rational).
    #[arg(long, default_value = "1/1000", value_name = "EPS")]
    pub integral_eps: String,

    /// Also report the averaged signature sum over p-th roots of unity
    /// (repeat the flag for several orders).
    #[arg(long = "prime", value_name = "P")]
    pub primes: Vec<u64>,

    /// Also report the raw (unaveraged) form inertia at each jump point
    /// where it is exactly computable.
    #[arg(long)]
    pub unnormalized: bool,
}

pub fn run(
    args: &SigArgs,
    inputs: &mut Vec<InputDigest>,
    _warnings: &mut Vec<String>,
) -> Result<(Value, i32)> {
    let text = read_input(&args.seifert, inputs)?;
    let v = SeifertMatrix::from_json(&text)?;
    let cap = precision_cap()?;
    let eps = parse_rational(&args.integral_eps)?;

    let sf = signature_function(&v)?;
    let integral = signature_integral(&v, &eps, cap)?;

    let jumps: Vec<Value> = sf
        .jumps
        .iter()
        .map(|j| {
            let mut obj = serde_json::Map::new();
            obj.insert(
                "parameter_interval".to_string(),
                json!([
                    rational_string(j.point.s.lo()),
                    rational_string(j.point.s.hi())
                ]),
            );
            if let Some(order) = j.point.order {
                obj.insert("root_of_unity_order".to_string(), json!(order));
            }
            if let Some((k, p)) = j.point.turn {
                obj.insert("point".to_string(), json!(format!("e^(2*pi*i*{k}/{p})")));
            }
            obj.insert("nullity".to_string(), json!(j.nullity));
            if args.unnormalized {
                let raw = match &j.inertia {
                    Some(inertia) => inertia_json(inertia),
                    None => Value::Null,
                };
                obj.insert("inertia_at_point".to_string(), raw);
            }
            Value::Object(obj)
        })
        .collect();

    let arcs: Vec<Value> = sf
        .arcs
        .iter()
        .map(|a| {
            json!({
                "sample_parameter": rational_string(&a.s),
                "inertia": inertia_json(&a.inertia),
            })
        })
        .collect();

    let mut sums = Vec::new();
    for &p in &args.primes {
        let sum = root_of_unity_sum(&v, p)?;
        let terms: Vec<Value> = sum
            .terms
            .iter()
            .map(|t| {
                json!({
                    "k": t.k,
                    "inertia": inertia_json(&t.inertia),
                })
            })
            .collect();
        sums.push(json!({
            "order": sum.order,
            "signature_sum": sum.signature_sum(),
            "nullity_sum": sum.nullity_sum(),
            "terms": terms,
        }));
    }

    let surface = match v.kind() {
        SurfaceKind::Knot => "knot",
        SurfaceKind::Link => "link",
    };

    let mut results = serde_json::Map::new();
    results.insert("matrix_size".to_string(), json!(sf.size));
    results.insert("surface".to_string(), json!(surface));
    results.insert("jumps".to_string(), Value::Array(jumps));
    results.insert("arcs".to_string(), Value::Array(arcs));
    results.insert("arc_signatures".to_string(), json!(sf.arc_signatures()));
    results.insert(
        "at_minus_one".to_string(),
        json!({
            "inertia": inertia_json(&sf.at_minus_one),
            "signature": sf.at_minus_one.signature(),
            "is_jump": sf.jump_at_minus_one,
        }),
    );
    results.insert(
        "identically_zero".to_string(),
        json!(sf.is_identically_zero()),
    );
    results.insert("integral".to_string(), integral_json(&integral));
    if !sums.is_empty() {
        results.insert("root_of_unity_sums".to_string(), Value::Array(sums));
    }

    Ok((Value::Object(results), 0))
}
