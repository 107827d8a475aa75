//! `certify`: close a fact-base file and report the best positive and
//! negative height bounds for one query, each justified by a proof tree
//! down to axioms.

use std::path::PathBuf;

use concordance_core::towers::{close, FactBase};
use concordance_core::Result;
use serde_json::{json, Value};

use crate::report::InputDigest;
use crate::util::{certificate_json, parse_relation, read_input};

#[derive(Debug, clap::Args)]
pub struct CertifyArgs {
    /// Fact-base JSON file (e.g. the "facts" object from `family`).
    pub facts: PathBuf,

    /// Relation to query (Conc, GropeConc, WTConc, WTCob, SolvCob,
    /// RhoVanishes, RhoNonzero, RepNontrivial, SideConditionI).
    #[arg(long)]
    pub relation: String,

    /// Subject id; repeat once per slot (twice for the binary relations).
    #[arg(long = "subject", value_name = "ID", required = true)]
    pub subjects: Vec<String>,
}

pub fn run(
    args: &CertifyArgs,
    inputs: &mut Vec<InputDigest>,
    warnings: &mut Vec<String>,
) -> Result<(Value, i32)> {
    let text = read_input(&args.facts, inputs)?;
    let db = FactBase::from_json(&text)?;
    let relation = parse_relation(&args.relation)?;

    let closure = close(&db)?;
    let cert = closure.certificate(relation, &args.subjects);

    if cert.positive.is_none() && cert.negative.is_none() {
        warnings.push(format!(
            "no information about {}({}) in the closed fact base",
            relation,
            args.subjects.join(", ")
        ));
    }

    // One line per entry so the scalar values in both output formats stay
    // single-line.
    let rendered: Vec<String> = cert.render_text().lines().map(str::to_string).collect();

    let results = json!({
        "axioms": closure.axiom_count(),
        "derived_facts": closure.facts().len() - closure.axiom_count(),
        "certificate": certificate_json(&cert),
        "rendered": rendered,
    });

    Ok((results, 0))
}
