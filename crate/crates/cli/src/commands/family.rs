//! `family`: build the n-stage iterated-infection family from a config file,
//! evaluate the amplified defect against the bound-model budget, close the
//! resulting fact base, and certify the best height bounds.

use std::collections::BTreeMap;
use std::path::PathBuf;

use concordance_core::obstruction::{
    budget, check_obstruction, parse_rational, rational_string, BoundModel, Verdict,
};
use concordance_core::towers::{build_paper_family, close, J0Descriptor, KnotRegistry, Relation};
use concordance_core::{Error, Result};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::report::InputDigest;
use crate::util::{certificate_json, integral_json, parse_mode, precision_cap, read_input};

#[derive(Debug, clap::Args)]
pub struct FamilyArgs {
    /// Family config JSON file; see the crate README for the schema.
    pub config: PathBuf,
}

/// The config file schema.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyConfig {
    /// Number of iteration stages.
    n: u64,
    /// Clasp parameter of the seed link (must give a nontrivial order).
    a: i64,
    /// Catalogue ids of the n-1 seed knots tied along the alpha curves.
    #[serde(default)]
    seeds: Vec<String>,
    /// The innermost companion: a catalogue knot and a copy count.
    j0: J0Descriptor,
    /// Bound-model entries, rational literals keyed by manifold id.
    bounds: BTreeMap<String, String>,
    /// Where the bound values came from.
    #[serde(default)]
    bounds_provenance: Option<String>,
    /// Defect mode: "integral" (default) or "prime:P".
    #[serde(default)]
    mode: Option<String>,
    /// Enclosure width for integral mode.
    #[serde(default)]
    eps: Option<String>,
}

pub fn run(
    args: &FamilyArgs,
    inputs: &mut Vec<InputDigest>,
    warnings: &mut Vec<String>,
) -> Result<(Value, i32)> {
    let text = read_input(&args.config, inputs)?;
    let cfg: FamilyConfig = serde_json::from_str(&text)
        .map_err(|e| Error::BadInput(format!("malformed family config: {e}")))?;

    let registry = KnotRegistry::standard()?;
    let build = build_paper_family(cfg.n, cfg.a, &cfg.seeds, &cfg.j0, &registry)?;

    let mut model = BoundModel::new();
    model.provenance = cfg.bounds_provenance.clone();
    for (id, literal) in &cfg.bounds {
        model.insert(id, parse_rational(literal)?)?;
    }
    let total_budget = budget(&model, &build.tree)?;

    let mode = parse_mode(cfg.mode.as_deref().unwrap_or("integral"))?;
    let eps = parse_rational(cfg.eps.as_deref().unwrap_or("1/1000"))?;
    let cap = precision_cap()?;

    let (report, fact) = check_obstruction(
        &build.tree,
        &cfg.j0,
        &registry,
        &model,
        mode,
        &eps,
        cap,
    )?;

    let mut db = build.facts.clone();
    if let Some(f) = fact {
        db.push(f);
    }
    let closure = close(&db)?;

    let subjects = vec![build.tree.root.clone(), build.tree.reference.clone()];
    let grope = closure.certificate(Relation::GropeConc, &subjects);
    let tower = closure.certificate(Relation::WTConc, &subjects);

    let results = json!({
        "family": {
            "description": build.tree.describe(),
            "stages": build.tree.stages,
            "root": build.tree.root,
            "reference": build.tree.reference,
            "depth": build.tree.depth(),
            "required_bounds": build.tree.required_bounds(),
            "tree": serde_json::to_value(&build.tree)
                .map_err(|e| Error::BadInput(format!("tree serialization failed: {e}")))?,
        },
        "obstruction": {
            "mode": report.mode.to_string(),
            "rho": integral_json(&report.rho),
            "magnitude": {
                "lower": rational_string(&report.rho_magnitude.0),
                "upper": rational_string(&report.rho_magnitude.1),
            },
            "budget": rational_string(&total_budget),
            "verdict": report.verdict.to_string(),
            "min_copies": report.min_copies,
            "trace": report.trace,
        },
        "facts": serde_json::to_value(&db)
            .map_err(|e| Error::BadInput(format!("fact serialization failed: {e}")))?,
        "derived_facts": closure.facts().len() - closure.axiom_count(),
        "certificates": {
            "grope_concordance": certificate_json(&grope),
            "tower_concordance": certificate_json(&tower),
        },
    });

    let code = match report.verdict {
        Verdict::Undecided => {
            warnings.push(
                "the defect enclosure straddles the budget; retry with a smaller eps \
                 or a higher precision cap"
                    .to_string(),
            );
            2
        }
        Verdict::Obstructed | Verdict::NotObstructed => 0,
    };

    Ok((results, code))
}
