//! `blanchfield`: the torsion module of a knot Seifert matrix, the pairing
//! table on its basis, and a certified search for a cyclic metabolizer.

use std::path::PathBuf;

use concordance_core::blanchfield::{
    find_cyclic_metabolizer, is_metabolizer, module_from_seifert, pairing,
};
use concordance_core::knotio::SeifertMatrix;
use concordance_core::{Error, Result};
use serde_json::{json, Value};

use crate::report::InputDigest;
use crate::util::{poly_string, read_input};

#[derive(Debug, clap::Args)]
pub struct BlanchfieldArgs {
    /// Seifert matrix JSON file for a knot.
    pub seifert: PathBuf,

    /// Skip the metabolizer search and report only the module and pairings.
    #[arg(long)]
    pub no_search: bool,
}

pub fn run(
    args: &BlanchfieldArgs,
    inputs: &mut Vec<InputDigest>,
    warnings: &mut Vec<String>,
) -> Result<(Value, i32)> {
    let text = read_input(&args.seifert, inputs)?;
    let v = SeifertMatrix::from_json(&text)?;
    let module = module_from_seifert(&v)?;

    let mut results = serde_json::Map::new();
    results.insert("generators".to_string(), json!(module.generators()));
    results.insert("dimension_over_q".to_string(), json!(module.dim()));
    results.insert("order".to_string(), json!(poly_string(module.order())));
    results.insert("zero_module".to_string(), json!(module.is_zero_module()));

    if !module.is_zero_module() {
        let cyclic = module.cyclic_generator()?;
        results.insert(
            "cyclic_generator".to_string(),
            match &cyclic {
                Some(g) => json!(g.iter().map(poly_string).collect::<Vec<_>>()),
                None => Value::Null,
            },
        );

        let n = module.generators();
        let mut table = Vec::new();
        for i in 0..n {
            for j in i..n {
                let value = pairing(&module, &module.basis_element(i), &module.basis_element(j))?;
                table.push(json!({
                    "i": i,
                    "j": j,
                    "value": value.to_string(),
                }));
            }
        }
        results.insert("basis_pairings".to_string(), Value::Array(table));
    }

    if !args.no_search {
        let metabolizer = match find_cyclic_metabolizer(&module) {
            Ok(Some(witness)) => {
                // Re-verify the witness through the pairing itself, so the
                // report never depends on the search alone.
                let check = is_metabolizer(&module, &[witness.clone()])?;
                json!({
                    "found": true,
                    "witness": witness.iter().map(poly_string).collect::<Vec<_>>(),
                    "reverified": check.holds,
                })
            }
            Ok(None) => json!({
                "found": false,
                "certified": true,
            }),
            Err(Error::BadInput(msg)) => {
                warnings.push(format!("metabolizer search inconclusive: {msg}"));
                json!({
                    "found": Value::Null,
                    "note": msg,
                })
            }
            Err(e) => return Err(e),
        };
        results.insert("cyclic_metabolizer".to_string(), metabolizer);
    }

    Ok((Value::Object(results), 0))
}
