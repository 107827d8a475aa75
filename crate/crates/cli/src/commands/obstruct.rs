//! `obstruct`: the abelian signature defect of copies of a companion knot,
//! with certified magnitude bounds, an optional budget comparison, and the
//! smallest copy count that would clear the budget.

use std::path::PathBuf;

use concordance_core::knotio::SeifertMatrix;
use concordance_core::obstruction::{
    decide_verdict, magnitude_bounds, min_copies, parse_rational, rational_string, rho_abelian,
    Verdict,
};
use concordance_core::{Error, Result};
use serde_json::{json, Value};

use crate::report::InputDigest;
use crate::util::{integral_json, parse_mode, precision_cap, read_input};

#[derive(Debug, clap::Args)]
pub struct ObstructArgs {
    /// Companion Seifert matrix JSON file.
    pub seifert: PathBuf,

    /// Budget to compare the defect magnitude against (nonnegative rational).
    #[arg(long, value_name = "B")]
    pub budget: Option<String>,

    /// Number of connected-sum copies of the companion.
    #[arg(long, default_value_t = 1)]
    pub copies: u64,

    /// Defect mode: "integral" or "prime:P".
    #[arg(long, default_value = "integral")]
    pub mode: String,

    /// Enclosure width for integral mode.
    #[arg(long, default_value = "1/1000", value_name = "EPS")]
    pub eps: String,
}

pub fn run(
    args: &ObstructArgs,
    inputs: &mut Vec<InputDigest>,
    warnings: &mut Vec<String>,
) -> Result<(Value, i32)> {
    let text = read_input(&args.seifert, inputs)?;
    let v = SeifertMatrix::from_json(&text)?;
    let mode = parse_mode(&args.mode)?;
    let eps = parse_rational(&args.eps)?;
    let cap = precision_cap()?;

    let rho = rho_abelian(&[(v.clone(), args.copies)], mode, &eps, cap)?;
    let (lo, hi) = magnitude_bounds(&rho);

    let mut results = serde_json::Map::new();
    results.insert("copies".to_string(), json!(args.copies));
    results.insert("mode".to_string(), json!(mode.to_string()));
    results.insert("rho".to_string(), integral_json(&rho));
    results.insert(
        "magnitude".to_string(),
        json!({
            "lower": rational_string(&lo),
            "upper": rational_string(&hi),
        }),
    );

    let mut code = 0;
    if let Some(budget_literal) = &args.budget {
        let budget = parse_rational(budget_literal)?;
        if num_traits::Signed::is_negative(&budget) {
            return Err(Error::BadInput(format!(
                "budget must be nonnegative, got {budget_literal}"
            )));
        }
        let verdict = decide_verdict(&lo, &hi, &budget);
        results.insert("budget".to_string(), json!(rational_string(&budget)));
        results.insert("verdict".to_string(), json!(verdict.to_string()));

        let copies_needed = match min_copies(&v, &budget, mode, &eps, cap) {
            Ok(n) => json!(n),
            Err(e @ Error::CannotAmplify(_)) => {
                warnings.push(e.to_string());
                Value::Null
            }
            Err(e) => return Err(e),
        };
        results.insert("min_copies".to_string(), copies_needed);

        if verdict == Verdict::Undecided {
            warnings.push(
                "the defect enclosure straddles the budget; retry with a smaller --eps".to_string(),
            );
            code = 2;
        }
    }

    Ok((Value::Object(results), code))
}
