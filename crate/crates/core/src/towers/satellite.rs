//! Satellite configurations, infection bookkeeping, and the iterated
//! two-component family builder.
//!
//! A satellite configuration pairs a link with an unknotted curve in its
//! exterior and carries a filtration height. Composing a configuration of
//! height n with a knot configuration of height m gives a configuration of
//! height n + m on the infected link. The family builder iterates this:
//! starting from the two-component seed link (parameter a) and a chain of
//! slice seed knots, it infects with a companion that is a connected sum of
//! knots with the grope-bounding property, and emits the resulting
//! concordance facts together with the side hypotheses that the closure
//! engine's vanishing rule consumes. Every emitted fact is an axiom whose
//! preconditions are checked here mechanically (seed module nontrivial and
//! cyclic, slice certificates present, companion flag present, reference
//! linking number equal to one); the geometric content itself is not
//! re-proved, and the trace note says which checks were run.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::fact::{exterior_id, CoeffSystem, Fact, FactBase, Polarity, Relation, Trace};
use super::height::Height;
use crate::alexander::seed_link_order;
use crate::blanchfield::{find_cyclic_metabolizer, module_from_seifert, ModuleElement};
use crate::exactnum::LaurentPoly;
use crate::knotio::{PDCode, SeifertMatrix};
use crate::{Error, Result};

/// Why a registry entry is considered slice.
#[derive(Debug, Clone)]
pub enum SliceJustification {
    /// A self-annihilating generator of the cyclic Alexander module,
    /// certified by the pairing computation.
    MetabolizerWitness(ModuleElement),
    /// Taken on the user's authority, with their stated reason.
    Asserted(String),
}

/// What the catalogue knows about one knot.
#[derive(Debug, Clone, Default)]
pub struct KnotEntry {
    pub seifert: Option<SeifertMatrix>,
    pub slice: Option<SliceJustification>,
    /// Flag: this knot is a connected sum of knots with the grope-bounding
    /// property used by the companion-infection rule.
    pub grope_bounding_sum: bool,
}

/// A catalogue of knots usable as infection companions and seeds.
#[derive(Debug, Clone, Default)]
pub struct KnotRegistry {
    entries: BTreeMap<String, KnotEntry>,
}

impl KnotRegistry {
    pub fn new() -> Self {
        KnotRegistry::default()
    }

    pub fn insert(&mut self, id: &str, entry: KnotEntry) {
        self.entries.insert(id.to_string(), entry);
    }

    pub fn get(&self, id: &str) -> Option<&KnotEntry> {
        self.entries.get(id)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.entries.contains_key(id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// The built-in catalogue. Slice flags are computed, not asserted: the
    /// stevedore knot gets its metabolizer witness from the pairing search,
    /// the unknot's module is zero, and the trefoil and figure-eight knots
    /// get no flag because their searches certify that none exists. The
    /// trefoil carries the grope-bounding-sum flag so it can stand in as a
    /// companion whose signature integral is nonzero.
    pub fn standard() -> Result<KnotRegistry> {
        let mut reg = KnotRegistry::new();
        for (id, seifert, grope_bounding_sum) in [
            ("unknot", SeifertMatrix::unknot(), false),
            ("stevedore", SeifertMatrix::stevedore(), false),
            ("trefoil", SeifertMatrix::trefoil(), true),
            ("figure_eight", SeifertMatrix::figure_eight(), false),
        ] {
            let module = module_from_seifert(&seifert)?;
            let slice = find_cyclic_metabolizer(&module)?.map(SliceJustification::MetabolizerWitness);
            reg.insert(
                id,
                KnotEntry {
                    seifert: Some(seifert),
                    slice,
                    grope_bounding_sum,
                },
            );
        }
        Ok(reg)
    }
}

/// A link with a distinguished unknotted curve in its exterior and a
/// filtration height, plus a readable construction trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatelliteConfig {
    pub link: String,
    pub curve: String,
    pub height: Height,
    pub provenance: Vec<String>,
}

impl SatelliteConfig {
    pub fn new(link: &str, curve: &str, height: Height) -> SatelliteConfig {
        SatelliteConfig {
            link: link.to_string(),
            curve: curve.to_string(),
            height,
            provenance: vec![format!("base configuration ({link}, {curve}) at height {height}")],
        }
    }

    /// The two-component seed link with its standard curve, height one.
    pub fn seed_link(a: i64) -> SatelliteConfig {
        let mut c = SatelliteConfig::new("L0", "eta", Height::from_int(1));
        c.provenance = vec![format!("seed link with parameter a = {a}, height 1")];
        c
    }

    /// The k-th seed knot configuration, height one.
    pub fn seed_knot(knot: &str, k: usize) -> SatelliteConfig {
        let mut c = SatelliteConfig::new(knot, &format!("alpha{k}"), Height::from_int(1));
        c.provenance = vec![format!("seed knot {knot} with curve alpha{k}, height 1")];
        c
    }
}

/// The id of the link obtained by infecting `base` along `curve` with
/// companion `companion`.
pub fn infected_link_id(base: &str, curve: &str, companion: &str) -> String {
    format!("{base}({curve},{companion})")
}

/// Composes a configuration on (L, eta) of height n with a knot
/// configuration on (K, alpha) of height m, giving a configuration on
/// (L(eta, K), alpha) of height n + m. The companion must be a registered
/// knot of positive height.
pub fn compose_config(
    c1: &SatelliteConfig,
    c2: &SatelliteConfig,
    registry: &KnotRegistry,
) -> Result<SatelliteConfig> {
    if c2.height == Height::from_int(0) {
        return Err(Error::ZeroHeightCompanion);
    }
    if !registry.contains(&c2.link) {
        return Err(Error::CompanionNotKnot(c2.link.clone()));
    }
    let link = infected_link_id(&c1.link, &c1.curve, &c2.link);
    let height = Height::from_halves(c1.height.half_units() + c2.height.half_units());
    let mut provenance = c1.provenance.clone();
    provenance.extend(c2.provenance.iter().cloned());
    provenance.push(format!(
        "composed ({}, {}) with ({}, {}): heights {} + {} = {}",
        c1.link, c1.curve, c2.link, c2.curve, c1.height, c2.height, height
    ));
    Ok(SatelliteConfig {
        link,
        curve: c2.curve.clone(),
        height,
        provenance,
    })
}

fn render_witness(witness: &ModuleElement) -> String {
    if witness.is_empty() {
        return "(zero module)".to_string();
    }
    let coords: Vec<String> = witness.iter().map(LaurentPoly::to_string).collect();
    format!("({})", coords.join(", "))
}

/// Infection by a slice knot does not change the concordance class:
/// produces `Conc(L(beta, K), L)`. The companion must carry a slice
/// certificate; infection by the unknot is the identity.
pub fn slice_infection_fact(
    link: &str,
    curve: &str,
    companion: &str,
    registry: &KnotRegistry,
) -> Result<Fact> {
    let entry = registry
        .get(companion)
        .ok_or_else(|| Error::CompanionNotKnot(companion.to_string()))?;
    let is_unknotted = match &entry.seifert {
        Some(v) => module_from_seifert(v)?.is_zero_module(),
        None => false,
    };
    if is_unknotted {
        return Ok(Fact::axiom(
            Relation::Conc,
            vec![link.to_string(), link.to_string()],
            None,
            &format!("infection along {curve} by {companion} is trivial: its Alexander module vanishes"),
        ));
    }
    let note = match &entry.slice {
        Some(SliceJustification::MetabolizerWitness(w)) => format!(
            "slice companion {companion}: Blanchfield pairing vanishes on the submodule generated by {}",
            render_witness(w)
        ),
        Some(SliceJustification::Asserted(reason)) => {
            format!("slice companion {companion}: asserted ({reason})")
        }
        None => {
            return Err(Error::BadInput(format!(
                "knot {companion} carries no slice certificate: infection by it need not preserve the concordance class"
            )))
        }
    };
    Ok(Fact::axiom(
        Relation::Conc,
        vec![infected_link_id(link, curve, companion), link.to_string()],
        None,
        &note,
    ))
}

/// Infection of a height-n configuration by a connected sum of
/// grope-bounding knots yields a grope concordance of height n + 2 between
/// the infected link and the original.
pub fn ct_infection_fact(
    config: &SatelliteConfig,
    companion: &str,
    registry: &KnotRegistry,
) -> Result<Fact> {
    let entry = registry
        .get(companion)
        .ok_or_else(|| Error::CompanionNotKnot(companion.to_string()))?;
    if !entry.grope_bounding_sum {
        return Err(Error::BadInput(format!(
            "knot {companion} is not flagged as a connected sum of grope-bounding knots"
        )));
    }
    Ok(Fact::axiom(
        Relation::GropeConc,
        vec![
            infected_link_id(&config.link, &config.curve, companion),
            config.link.clone(),
        ],
        Some(config.height.plus_int(2)),
        &format!(
            "infecting the height-{} configuration ({}, {}) by the grope-bounding sum {companion}",
            config.height, config.link, config.curve
        ),
    ))
}

/// The companion of the family's top-level infection: either the innermost
/// connected sum or a seed-knot infection wrapping a smaller companion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CompanionNode {
    SeedSum {
        knot: String,
        copies: u64,
    },
    Infection {
        base_knot: String,
        curve: String,
        companion: Box<CompanionNode>,
    },
}

impl CompanionNode {
    fn depth(&self) -> u64 {
        match self {
            CompanionNode::SeedSum { .. } => 1,
            CompanionNode::Infection { companion, .. } => 1 + companion.depth(),
        }
    }

    fn label(&self) -> String {
        match self {
            CompanionNode::SeedSum { knot, copies } => format!("{copies} x {knot}"),
            CompanionNode::Infection {
                base_knot,
                curve,
                companion,
            } => format!("{base_knot}({curve}, {})", companion.label()),
        }
    }
}

/// The innermost companion: `copies` connected-sum copies of a catalogue
/// knot with the grope-bounding flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct J0Descriptor {
    pub knot: String,
    pub copies: u64,
}

/// The built family: the seed link infected along eta by an iterated
/// companion chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatelliteTree {
    /// Id of the family link.
    pub root: String,
    /// Id of the reference link the facts compare against.
    pub reference: String,
    /// Number of iteration stages (the construction parameter n).
    pub stages: u64,
    /// Seed-link parameter.
    pub seed_parameter: i64,
    /// Seed knots, innermost first.
    pub seeds: Vec<String>,
    /// Innermost companion descriptor.
    pub j0: J0Descriptor,
    /// The infection chain hanging off the seed link's curve.
    pub companion: CompanionNode,
    /// Derived-series depth of the innermost curve in the family link's
    /// group (equals the stage count).
    pub alpha_depth: u64,
}

impl SatelliteTree {
    /// Number of links along the root-to-leaf chain (seed link plus one per
    /// companion level).
    pub fn depth(&self) -> u64 {
        1 + self.companion.depth()
    }

    /// Bound-model keys the obstruction budget needs for this family: one
    /// for the union of the seed-link and reference exteriors, one per
    /// seed-knot surgery manifold.
    pub fn required_bounds(&self) -> Vec<String> {
        let mut keys = vec!["E_L0_cup_E_H".to_string()];
        for k in 0..self.seeds.len() {
            keys.push(format!("M_K{k}"));
        }
        keys
    }

    /// Human-readable one-line description of the infection chain.
    pub fn describe(&self) -> String {
        format!("{} = L0(eta, {})", self.root, self.companion.label())
    }
}

/// A built family: the tree plus the facts its construction justifies.
#[derive(Debug, Clone)]
pub struct FamilyBuild {
    pub tree: SatelliteTree,
    pub facts: FactBase,
}

/// Builds the n-stage family: the seed link (parameter a) infected along
/// eta by the chain J_{n-1} = K_{n-2}(alpha_{n-2}, J_{n-2}), ..., ending in
/// J_0 = a connected sum of grope-bounding knots. Checks: a must give a
/// nontrivial seed module; exactly n-1 seeds, each carrying a slice
/// certificate and a cyclic Alexander module; the innermost companion must
/// carry the grope-bounding flag. Emits the construction's facts:
/// a grope concordance of height n+2 between the family link and the
/// reference, a concordance between the previous stage and the reference,
/// representation nontriviality for the exterior pair, and the
/// first-kind side condition for the reference exterior (its linking
/// number, computed from the diagram, is 1).
pub fn build_paper_family(
    n: u64,
    a: i64,
    seeds: &[String],
    j0: &J0Descriptor,
    registry: &KnotRegistry,
) -> Result<FamilyBuild> {
    if n < 1 {
        return Err(Error::BadFamily("stage count must be at least 1".to_string()));
    }
    if seeds.len() as u64 != n - 1 {
        return Err(Error::BadFamily(format!(
            "an n-stage family needs exactly n-1 seed knots: got {} for n = {n}",
            seeds.len()
        )));
    }
    let order = seed_link_order(a);
    let order_vars: Vec<&str> = order.vars().iter().map(String::as_str).collect();
    if order.eq_up_to_unit(&LaurentPoly::one(&order_vars)) {
        return Err(Error::BadFamily(format!(
            "seed parameter a = {a} makes the seed-link module trivial (its order is a unit)"
        )));
    }
    for id in seeds {
        let entry = registry
            .get(id)
            .ok_or_else(|| Error::BadFamily(format!("unknown seed knot {id}")))?;
        if entry.slice.is_none() {
            return Err(Error::BadFamily(format!(
                "seed knot {id} carries no slice certificate"
            )));
        }
        let Some(seifert) = &entry.seifert else {
            return Err(Error::BadFamily(format!(
                "seed knot {id} has no Seifert matrix, so its module cannot be checked"
            )));
        };
        let module = module_from_seifert(seifert)?;
        if module.is_zero_module() || module.cyclic_generator()?.is_none() {
            return Err(Error::BadFamily(format!(
                "seed knot {id}: Alexander module is not a nontrivial cyclic module, so the infection curve class cannot generate it"
            )));
        }
    }
    let j0_entry = registry
        .get(&j0.knot)
        .ok_or_else(|| Error::BadFamily(format!("unknown companion knot {}", j0.knot)))?;
    if !j0_entry.grope_bounding_sum {
        return Err(Error::BadFamily(format!(
            "companion knot {} is not flagged as a connected sum of grope-bounding knots",
            j0.knot
        )));
    }
    if j0.copies == 0 {
        return Err(Error::BadFamily(
            "companion must contain at least one connected summand".to_string(),
        ));
    }

    let mut companion = CompanionNode::SeedSum {
        knot: j0.knot.clone(),
        copies: j0.copies,
    };
    for (k, seed) in seeds.iter().enumerate() {
        companion = CompanionNode::Infection {
            base_knot: seed.clone(),
            curve: format!("alpha{k}"),
            companion: Box::new(companion),
        };
    }

    let root = format!("L{n}");
    let previous = format!("L{}", n - 1);
    let reference = "Hopf".to_string();
    let tree = SatelliteTree {
        root: root.clone(),
        reference: reference.clone(),
        stages: n,
        seed_parameter: a,
        seeds: seeds.to_vec(),
        j0: j0.clone(),
        companion,
        alpha_depth: n,
    };

    // Mechanized side-condition check: the reference is the positive Hopf
    // link, whose two components have linking number one.
    let lk = PDCode::positive_hopf().linking_number(0, 1)?;
    if lk != 1 {
        return Err(Error::Inconsistent(format!(
            "reference diagram has linking number {lk}, expected 1"
        )));
    }

    let mut facts = FactBase::new();
    facts.push(Fact::axiom(
        Relation::GropeConc,
        vec![root.clone(), reference.clone()],
        Some(Height::from_int(n + 2)),
        &format!(
            "stage-{n} family: height-{n} satellite configuration infected by the grope-bounding sum {} x {}",
            j0.copies, j0.knot
        ),
    ));
    facts.push(Fact::axiom(
        Relation::Conc,
        vec![previous, reference.clone()],
        None,
        "every companion below the top stage carries a slice certificate, so the previous stage is concordant to the reference",
    ));
    facts.push(Fact::axiom(
        Relation::RepNontrivial,
        vec![exterior_id(&root), exterior_id(&reference)],
        None,
        &format!(
            "checked: seed parameter a = {a} gives a nontrivial seed module, and {} seed module(s) are cyclic, so the infection curves stay nontrivial in the metabelian quotients",
            seeds.len()
        ),
    ));
    facts.push(Fact {
        relation: Relation::SideConditionI,
        subjects: vec![exterior_id(&reference)],
        height: None,
        polarity: Polarity::Asserted,
        coeff: Some(CoeffSystem::Any),
        trace: Trace::Axiom(
            "computed from the reference diagram: component linking number 1, coprime to every modulus".to_string(),
        ),
    });

    Ok(FamilyBuild { tree, facts })
}
