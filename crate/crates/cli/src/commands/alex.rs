//! `alex`: Alexander polynomials. Accepts a planar diagram code (key
//! "crossings") or a group presentation (key "generators"), and can instead
//! analyze the two-variable seed link for a clasp parameter.

use std::path::PathBuf;

use concordance_core::alexander::{
    alexander_from_presentation, alexander_polynomial, seed_link_det, seed_link_f,
    seed_link_order, seed_link_presentation,
};
use concordance_core::exactnum::LaurentPoly;
use concordance_core::knotio::{GroupPresentation, PDCode};
use concordance_core::{Error, Result};
use serde_json::{json, Value};

use crate::report::{digest_str, InputDigest};
use crate::util::{poly_string, read_input};

#[derive(Debug, clap::Args)]
pub struct AlexArgs {
    /// Input JSON file: a PD code ({"crossings": ..}) or a presentation
    /// ({"generators": .., "relators": ..,
    /// optional "meridian_components": [..]}).
    pub input: Option<PathBuf>,

    /// Analyze the two-variable seed link with this clasp parameter
    /// instead of reading a file.
    #[arg(long, value_name = "A", allow_negative_numbers = true, conflicts_with = "input")]
    pub seed_link: Option<i64>,
}

pub fn run(
    args: &AlexArgs,
    inputs: &mut Vec<InputDigest>,
    _warnings: &mut Vec<String>,
) -> Result<(Value, i32)> {
    match (&args.input, args.seed_link) {
        (Some(path), None) => run_file(path, inputs),
        (None, Some(a)) => run_seed_link(a, inputs),
        _ => Err(Error::BadInput(
            "provide an input file or --seed-link A".to_string(),
        )),
    }
}

fn run_file(path: &PathBuf, inputs: &mut Vec<InputDigest>) -> Result<(Value, i32)> {
    let text = read_input(path, inputs)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::BadInput(format!("malformed JSON: {e}")))?;

    if value.get("crossings").is_some() {
        let pd = PDCode::from_json(&text)?;
        let delta = alexander_polynomial(&pd)?;
        let mut results = serde_json::Map::new();
        results.insert("input_kind".to_string(), json!("pd"));
        results.insert("crossings".to_string(), json!(pd.num_crossings()));
        results.insert("components".to_string(), json!(pd.num_components()));
        results.insert("writhe".to_string(), json!(pd.writhe()));
        if pd.num_components() >= 2 {
            results.insert("linking_matrix".to_string(), json!(pd.linking_matrix()?));
        }
        results.insert("alexander".to_string(), json!(poly_string(&delta)));
        results.insert("variables".to_string(), json!(delta.vars()));
        return Ok((Value::Object(results), 0));
    }

    if value.get("generators").is_some() {
        let presentation = GroupPresentation::from_json(&text)?;
        let n = presentation.num_generators();
        let meridians: Vec<usize> = match value.get("meridian_components") {
            Some(m) => serde_json::from_value(m.clone()).map_err(|e| {
                Error::BadInput(format!("meridian_components must be a list of component indices: {e}"))
            })?,
            None => vec![0; n],
        };
        if meridians.len() != n {
            return Err(Error::BadInput(format!(
                "meridian_components has {} entries for {n} generators",
                meridians.len()
            )));
        }
        let delta = alexander_from_presentation(&presentation, &meridians, 0)?;
        return Ok((
            json!({
                "input_kind": "presentation",
                "generators": n,
                "relators": presentation.relators().len(),
                "alexander": poly_string(&delta),
                "variables": delta.vars(),
            }),
            0,
        ));
    }

    Err(Error::BadInput(
        "expected a PD code (key \"crossings\") or a presentation (key \"generators\")".to_string(),
    ))
}

fn run_seed_link(a: i64, inputs: &mut Vec<InputDigest>) -> Result<(Value, i32)> {
    inputs.push(digest_str("seed-link", &format!("a={a}")));

    let presentation = seed_link_presentation(a);
    let f = seed_link_f(a);
    let order = seed_link_order(a);
    let det = seed_link_det(a);

    let f_times_conjugate = f.try_mul(&f.bar())?;
    let order_vars: Vec<&str> = order.vars().iter().map(String::as_str).collect();
    let one = LaurentPoly::one(&order_vars);

    let matrix: Vec<Vec<String>> = presentation
        .iter()
        .map(|row| row.iter().map(poly_string).collect())
        .collect();

    Ok((
        json!({
            "input_kind": "seed-link",
            "clasp_parameter": a,
            "presentation_matrix": matrix,
            "determinant": poly_string(&det),
            "alexander_order": poly_string(&order),
            "f": poly_string(&f),
            "f_times_conjugate": poly_string(&f_times_conjugate),
            "order_matches_f_times_conjugate": order.eq_up_to_unit(&f_times_conjugate),
            "order_is_unit": order.eq_up_to_unit(&one),
        }),
        0,
    ))
}
