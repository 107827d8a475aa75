//! Facts about pairs of links or bordered-manifold exteriors, with heights,
//! polarities and proof traces.

use serde::{Deserialize, Serialize};

use super::height::Height;
use crate::{Error, Result};

/// The relations the inference engine reasons about.
///
/// `Conc`, `GropeConc` and `WTConc` relate pairs of links; `WTCob` and
/// `SolvCob` relate pairs of link exteriors; `RhoVanishes`/`RhoNonzero`
/// record the L2-signature defect status of the union of two exteriors at a
/// given filtration level; `RepNontrivial` and `SideConditionI` are the side
/// hypotheses of the vanishing theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Relation {
    /// Link concordance (no height; the strongest relation).
    Conc,
    /// Grope concordance at a height.
    GropeConc,
    /// Whitney tower concordance at a height.
    WTConc,
    /// Whitney tower cobordism of exteriors at a height.
    WTCob,
    /// Solvable cobordism of exteriors at a height.
    SolvCob,
    /// The signature defect vanishes at a specific level.
    RhoVanishes,
    /// A certified nonzero signature defect at a specific level.
    RhoNonzero,
    /// The representation used by the vanishing theorem restricts
    /// nontrivially to both pieces.
    RepNontrivial,
    /// First-kind amenability side condition for a coefficient system,
    /// established through the linking-number coprimality criterion.
    SideConditionI,
}

impl Relation {
    pub fn name(&self) -> &'static str {
        match self {
            Relation::Conc => "Conc",
            Relation::GropeConc => "GropeConc",
            Relation::WTConc => "WTConc",
            Relation::WTCob => "WTCob",
            Relation::SolvCob => "SolvCob",
            Relation::RhoVanishes => "RhoVanishes",
            Relation::RhoNonzero => "RhoNonzero",
            Relation::RepNontrivial => "RepNontrivial",
            Relation::SideConditionI => "SideConditionI",
        }
    }

    /// Relations whose height bounds are monotone: holding at `h` implies
    /// holding at every `h' <= h` (and failing propagates upward).
    pub fn is_monotone_heighted(&self) -> bool {
        matches!(
            self,
            Relation::GropeConc | Relation::WTConc | Relation::WTCob | Relation::SolvCob
        )
    }

    /// Relations whose facts live at one exact height with no monotonicity.
    pub fn is_point_heighted(&self) -> bool {
        matches!(self, Relation::RhoVanishes | Relation::RhoNonzero)
    }
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// How a fact entered the database.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarity {
    /// Supplied positively as an axiom.
    Asserted,
    /// Concluded positively by a rule.
    Derived,
    /// The relation fails (at the stated height and above, for monotone
    /// relations), whether supplied or concluded.
    Negated,
}

/// Coefficient systems a side condition can be certified for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoeffSystem {
    /// Rational coefficients.
    Rational,
    /// Integers mod a prime.
    ModPrime(u64),
    /// Certified for every admissible coefficient system at once.
    Any,
}

impl std::fmt::Display for CoeffSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoeffSystem::Rational => write!(f, "Q"),
            CoeffSystem::ModPrime(p) => write!(f, "Z/{p}"),
            CoeffSystem::Any => write!(f, "any"),
        }
    }
}

/// Provenance of a fact: either an axiom note or a rule applied to premises
/// (indices into the same fact list, always smaller than the fact's own).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Trace {
    Axiom(String),
    Rule { name: String, premises: Vec<usize> },
}

/// One fact: a relation on one or two subjects, an optional height, a
/// polarity, an optional coefficient scope, and a trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub relation: Relation,
    pub subjects: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<Height>,
    pub polarity: Polarity,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeff: Option<CoeffSystem>,
    pub trace: Trace,
}

impl Fact {
    /// A positively asserted axiom.
    pub fn axiom(
        relation: Relation,
        subjects: Vec<String>,
        height: Option<Height>,
        note: &str,
    ) -> Fact {
        Fact {
            relation,
            subjects,
            height,
            polarity: Polarity::Asserted,
            coeff: None,
            trace: Trace::Axiom(note.to_string()),
        }
    }

    /// A negatively asserted axiom.
    pub fn negated_axiom(
        relation: Relation,
        subjects: Vec<String>,
        height: Option<Height>,
        note: &str,
    ) -> Fact {
        Fact {
            relation,
            subjects,
            height,
            polarity: Polarity::Negated,
            coeff: None,
            trace: Trace::Axiom(note.to_string()),
        }
    }

    pub fn is_positive(&self) -> bool {
        !matches!(self.polarity, Polarity::Negated)
    }

    /// One-line rendering such as `GropeConc(L3, Hopf) at height 5`.
    pub fn summary(&self) -> String {
        let mut s = format!("{}({})", self.relation, self.subjects.join(", "));
        if let Some(h) = self.height {
            s.push_str(&format!(" at height {h}"));
        }
        if let Some(c) = self.coeff {
            s.push_str(&format!(" [coeff {c}]"));
        }
        if !self.is_positive() {
            s = format!("NOT {s}");
        }
        s
    }
}

/// An immutable-by-convention list of axioms; the engine copies it and
/// appends derived facts, so closing a database never mutates it.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactBase {
    pub facts: Vec<Fact>,
}

impl FactBase {
    pub fn new() -> Self {
        FactBase::default()
    }

    pub fn push(&mut self, fact: Fact) {
        self.facts.push(fact);
    }

    pub fn extend(&mut self, facts: impl IntoIterator<Item = Fact>) {
        self.facts.extend(facts);
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    /// Structural validation: subject counts, height presence, and trace
    /// premise indices. Semantic consistency is checked by the engine.
    pub fn validate(&self) -> Result<()> {
        for (i, f) in self.facts.iter().enumerate() {
            let bad = |msg: String| Error::BadInput(format!("fact {i} ({}): {msg}", f.summary()));
            let expected_subjects = match f.relation {
                Relation::SideConditionI => 1,
                _ => 2,
            };
            if f.subjects.len() != expected_subjects {
                return Err(bad(format!(
                    "{} takes {expected_subjects} subject(s), got {}",
                    f.relation,
                    f.subjects.len()
                )));
            }
            if f.relation.is_monotone_heighted() {
                // A positive monotone fact may omit its height to mean "at
                // every height"; a negated one must say where failure starts.
                if f.height.is_none() && f.polarity == Polarity::Negated {
                    return Err(bad("negated fact needs a height".into()));
                }
            } else if f.relation.is_point_heighted() {
                if f.height.is_none() {
                    return Err(bad("missing height".into()));
                }
            } else if f.height.is_some() {
                return Err(bad(format!("{} does not carry a height", f.relation)));
            }
            if let Trace::Rule { premises, .. } = &f.trace {
                for &p in premises {
                    if p >= i {
                        return Err(bad(format!(
                            "trace premise {p} does not precede the fact"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fact base serializes")
    }

    pub fn from_json(s: &str) -> Result<FactBase> {
        let db: FactBase =
            serde_json::from_str(s).map_err(|e| Error::BadInput(format!("facts file: {e}")))?;
        db.validate()?;
        Ok(db)
    }
}

/// The exterior of a link, as an identifier.
pub fn exterior_id(link: &str) -> String {
    format!("E({link})")
}

/// Inverse of [`exterior_id`], when the identifier has that shape.
pub fn link_of_exterior(id: &str) -> Option<&str> {
    id.strip_prefix("E(")?.strip_suffix(')')
}
