//! Forward-chaining closure over concordance/cobordism facts.
//!
//! The engine maintains, per (relation, subjects), the best positive height
//! bound (a maximum: the relation is known to hold there and, by downward
//! monotonicity, below) and the best negative bound (a minimum: the relation
//! is known to fail there and, by upward monotonicity, above). Rules fire as
//! monotone bound updates, so the closure is a finite fixpoint and the final
//! bound table does not depend on the order in which rules are applied; the
//! traces may differ, the numbers may not.
//!
//! Positive rules walk down the implication chain (concordance implies grope
//! concordance implies tower concordance implies exterior cobordisms implies
//! solvable cobordism, losing two units where exteriors enter), and with the
//! two side hypotheses a half-integer solvable cobordism forces the
//! L2-signature defect to vanish at that level. A certified nonzero defect
//! runs the same chain in reverse as negations. A database in which the two
//! directions cross (a positive bound at or above a negative one) is
//! contradictory, and closing it reports both traces.
//!
//! A certified `RhoNonzero` fact blocks solvable cobordism on its own: the
//! emitting computation has already discharged the side hypotheses of the
//! vanishing theorem (linking-number coprimality and representation
//! nontriviality), so they are part of that fact's provenance rather than
//! separate premises. The positive vanishing rule, by contrast, consumes the
//! side-condition facts explicitly.

use std::collections::BTreeMap;

use super::fact::{exterior_id, link_of_exterior, Fact, FactBase, Polarity, Relation, Trace};
use super::height::Height;
use crate::{Error, Result};

/// Key of one bound-table row. Monotone and presence relations use
/// `point: None`; the exact-level defect relations key each height
/// separately because their facts do not propagate across heights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundKey {
    pub relation: Relation,
    pub subjects: Vec<String>,
    pub point: Option<Height>,
}

/// A bound table value: presence (for unheighted relations), a height, or
/// "every height".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundValue {
    Present,
    At(Height),
    Unbounded,
}

impl BoundValue {
    pub fn height(&self) -> Option<Height> {
        match self {
            BoundValue::At(h) => Some(*h),
            _ => None,
        }
    }

    fn rank(&self) -> u8 {
        match self {
            BoundValue::Present => 0,
            BoundValue::At(_) => 1,
            BoundValue::Unbounded => 2,
        }
    }

    fn cmp_same_class(&self, other: &BoundValue) -> std::cmp::Ordering {
        match (self, other) {
            (BoundValue::At(a), BoundValue::At(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl std::fmt::Display for BoundValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundValue::Present => write!(f, "holds"),
            BoundValue::At(h) => write!(f, "height {h}"),
            BoundValue::Unbounded => write!(f, "every height"),
        }
    }
}

/// The result of closing a fact base: all facts (axioms first, then derived)
/// plus the positive and negative bound tables, each entry justified by a
/// fact index.
#[derive(Debug, Clone)]
pub struct Closure {
    facts: Vec<Fact>,
    axioms: usize,
    pos: BTreeMap<BoundKey, (BoundValue, usize)>,
    neg: BTreeMap<BoundKey, (BoundValue, usize)>,
}

/// A rendered proof tree for one fact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceTree {
    pub summary: String,
    pub justification: String,
    pub children: Vec<TraceTree>,
}

impl TraceTree {
    fn render_into(&self, out: &mut String, depth: usize) {
        for _ in 0..depth {
            out.push_str("  ");
        }
        out.push_str(&self.summary);
        out.push_str("  [");
        out.push_str(&self.justification);
        out.push_str("]\n");
        for c in &self.children {
            c.render_into(out, depth + 1);
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        self.render_into(&mut s, 0);
        s
    }
}

/// One side (positive or negative) of a certificate.
#[derive(Debug, Clone)]
pub struct BoundSide {
    pub bound: BoundValue,
    pub trace: TraceTree,
}

/// Best-known bounds for one query, with proof traces down to axioms.
#[derive(Debug, Clone)]
pub struct HeightCertificate {
    pub relation: Relation,
    pub subjects: Vec<String>,
    pub positive: Option<BoundSide>,
    pub negative: Option<BoundSide>,
}

impl HeightCertificate {
    pub fn render_text(&self) -> String {
        let head = format!("{}({})", self.relation, self.subjects.join(", "));
        let mut out = String::new();
        match &self.positive {
            Some(side) => out.push_str(&format!("{head}: holds at {}\n", side.bound)),
            None => out.push_str(&format!("{head}: no positive information\n")),
        }
        match &self.negative {
            Some(side) => out.push_str(&format!("{head}: fails at {}\n", side.bound)),
            None => out.push_str(&format!("{head}: no negative information\n")),
        }
        if let Some(side) = &self.positive {
            out.push_str("positive trace:\n");
            out.push_str(&side.trace.render());
        }
        if let Some(side) = &self.negative {
            out.push_str("negative trace:\n");
            out.push_str(&side.trace.render());
        }
        out
    }
}

/// Closes a fact base under the rules, in deterministic order.
pub fn close(db: &FactBase) -> Result<Closure> {
    close_with_order(db, None)
}

/// Closes a fact base, processing the agenda in an order scrambled by the
/// seed. The resulting bound table is the same for every seed; only traces
/// may differ.
pub fn close_with_order(db: &FactBase, seed: Option<u64>) -> Result<Closure> {
    db.validate()?;
    let mut state = State {
        facts: db.facts.clone(),
        pos: BTreeMap::new(),
        neg: BTreeMap::new(),
        agenda: Vec::new(),
        rng: seed.map(|s| s ^ 0x9E37_79B9_7F4A_7C15),
    };
    for idx in 0..state.facts.len() {
        state.record(idx)?;
    }
    while let Some(idx) = state.pop() {
        state.fire_rules(idx)?;
    }
    Ok(Closure {
        axioms: db.facts.len(),
        facts: state.facts,
        pos: state.pos,
        neg: state.neg,
    })
}

/// Convenience: close and extract one certificate.
pub fn infer(db: &FactBase, relation: Relation, subjects: &[String]) -> Result<HeightCertificate> {
    Ok(close(db)?.certificate(relation, subjects))
}

impl Closure {
    pub fn facts(&self) -> &[Fact] {
        &self.facts
    }

    /// Number of axiom facts at the head of [`Closure::facts`].
    pub fn axiom_count(&self) -> usize {
        self.axioms
    }

    pub fn positive_bound(&self, relation: Relation, subjects: &[String]) -> Option<(BoundValue, usize)> {
        self.lookup(&self.pos, relation, subjects)
    }

    pub fn negative_bound(&self, relation: Relation, subjects: &[String]) -> Option<(BoundValue, usize)> {
        self.lookup(&self.neg, relation, subjects)
    }

    fn lookup(
        &self,
        table: &BTreeMap<BoundKey, (BoundValue, usize)>,
        relation: Relation,
        subjects: &[String],
    ) -> Option<(BoundValue, usize)> {
        if relation.is_point_heighted() {
            // Report the highest recorded level.
            return table
                .iter()
                .filter(|(k, _)| k.relation == relation && k.subjects == subjects)
                .next_back()
                .map(|(_, v)| *v);
        }
        table
            .get(&BoundKey {
                relation,
                subjects: subjects.to_vec(),
                point: None,
            })
            .copied()
    }

    pub fn certificate(&self, relation: Relation, subjects: &[String]) -> HeightCertificate {
        let side = |entry: Option<(BoundValue, usize)>| {
            entry.map(|(bound, idx)| BoundSide {
                bound,
                trace: self.trace_tree(idx),
            })
        };
        HeightCertificate {
            relation,
            subjects: subjects.to_vec(),
            positive: side(self.positive_bound(relation, subjects)),
            negative: side(self.negative_bound(relation, subjects)),
        }
    }

    pub fn trace_tree(&self, idx: usize) -> TraceTree {
        let f = &self.facts[idx];
        match &f.trace {
            Trace::Axiom(note) => TraceTree {
                summary: f.summary(),
                justification: if note.is_empty() {
                    "axiom".to_string()
                } else {
                    format!("axiom: {note}")
                },
                children: Vec::new(),
            },
            Trace::Rule { name, premises } => TraceTree {
                summary: f.summary(),
                justification: format!("rule: {name}"),
                children: premises.iter().map(|&p| self.trace_tree(p)).collect(),
            },
        }
    }

    /// Canonical text view of the bound tables, for order-independence
    /// comparisons: key line -> (positive, negative).
    pub fn bounds_snapshot(&self) -> BTreeMap<String, (Option<String>, Option<String>)> {
        let mut snap: BTreeMap<String, (Option<String>, Option<String>)> = BTreeMap::new();
        let key_label = |k: &BoundKey| {
            let mut s = format!("{}({})", k.relation, k.subjects.join(", "));
            if let Some(h) = k.point {
                s.push_str(&format!(" @ {h}"));
            }
            s
        };
        for (k, (v, _)) in &self.pos {
            snap.entry(key_label(k)).or_default().0 = Some(v.to_string());
        }
        for (k, (v, _)) in &self.neg {
            snap.entry(key_label(k)).or_default().1 = Some(v.to_string());
        }
        snap
    }
}

/// Checks every derived fact by re-applying its named rule to its premises
/// and comparing the conclusion. Fails if any trace does not reproduce its
/// fact.
pub fn replay(closure: &Closure) -> Result<()> {
    for (idx, fact) in closure.facts().iter().enumerate() {
        if let Trace::Rule { name, premises } = &fact.trace {
            let premise_facts: Vec<&Fact> = premises.iter().map(|&p| &closure.facts()[p]).collect();
            let conclusion = apply_rule(name, &premise_facts)?;
            if !conclusion.matches(fact) {
                return Err(Error::Inconsistent(format!(
                    "replaying rule {name} on fact {idx} gives {} instead of {}",
                    conclusion.summary(),
                    fact.summary()
                )));
            }
        }
    }
    Ok(())
}

/// Shape of a rule conclusion, for emission and replay alike.
struct RuleConclusion {
    relation: Relation,
    subjects: Vec<String>,
    height: Option<Height>,
    negated: bool,
}

impl RuleConclusion {
    fn matches(&self, fact: &Fact) -> bool {
        fact.relation == self.relation
            && fact.subjects == self.subjects
            && fact.height == self.height
            && (fact.polarity == Polarity::Negated) == self.negated
    }

    fn summary(&self) -> String {
        let mut s = format!(
            "{}({})",
            self.relation,
            self.subjects.join(", ")
        );
        if let Some(h) = self.height {
            s.push_str(&format!(" at height {h}"));
        }
        if self.negated {
            s = format!("NOT {s}");
        }
        s
    }
}

const R_CONC_GROPE: &str = "concordance-implies-grope-concordance";
const R_CONC_TOWER: &str = "concordance-implies-tower-concordance";
const R_GROPE_TOWER: &str = "grope-concordance-implies-tower-concordance";
const R_TOWER_COB: &str = "tower-concordance-descends-to-exterior-cobordism";
const R_TOWER_SOLV: &str = "tower-concordance-gives-solvable-cobordism";
const R_COB_SOLV: &str = "tower-cobordism-gives-solvable-cobordism";
const R_SOLV_VANISH: &str = "solvable-cobordism-forces-vanishing-defect";
const R_NONZERO_BLOCKS: &str = "nonzero-defect-blocks-solvable-cobordism";
const N_SOLV_COB: &str = "no-solvable-cobordism-blocks-tower-cobordism";
const N_COB_TOWER: &str = "no-tower-cobordism-lifts-to-tower-concordance";
const N_TOWER_GROPE: &str = "no-tower-concordance-blocks-grope-concordance";
const N_GROPE_CONC: &str = "no-grope-concordance-blocks-concordance";

fn premise_error(rule: &str, detail: &str) -> Error {
    Error::Inconsistent(format!("rule {rule}: bad premises: {detail}"))
}

/// Applies a named rule to premise facts, producing the conclusion shape.
/// Shared by the closure (to emit) and by [`replay`] (to verify), so the two
/// can never disagree.
fn apply_rule(rule: &str, premises: &[&Fact]) -> Result<RuleConclusion> {
    let one = |relation: Relation, positive: bool| -> Result<&Fact> {
        if premises.len() != 1 {
            return Err(premise_error(rule, "expected one premise"));
        }
        let f = premises[0];
        if f.relation != relation || f.is_positive() != positive {
            return Err(premise_error(rule, &f.summary()));
        }
        Ok(f)
    };
    match rule {
        R_CONC_GROPE | R_CONC_TOWER => {
            let f = one(Relation::Conc, true)?;
            Ok(RuleConclusion {
                relation: if rule == R_CONC_GROPE {
                    Relation::GropeConc
                } else {
                    Relation::WTConc
                },
                subjects: f.subjects.clone(),
                height: None,
                negated: false,
            })
        }
        R_GROPE_TOWER => {
            let f = one(Relation::GropeConc, true)?;
            Ok(RuleConclusion {
                relation: Relation::WTConc,
                subjects: f.subjects.clone(),
                height: f.height,
                negated: false,
            })
        }
        R_TOWER_COB | R_TOWER_SOLV => {
            let f = one(Relation::WTConc, true)?;
            let height = match f.height {
                None => None,
                Some(h) => {
                    if rule == R_TOWER_SOLV && !h.is_half_integer() {
                        return Err(premise_error(rule, "needs a half-integer height"));
                    }
                    match h.checked_minus_int(2) {
                        Some(h2) => Some(h2),
                        None => return Err(premise_error(rule, "height below 2")),
                    }
                }
            };
            Ok(RuleConclusion {
                relation: if rule == R_TOWER_COB {
                    Relation::WTCob
                } else {
                    Relation::SolvCob
                },
                subjects: f.subjects.iter().map(|s| exterior_id(s)).collect(),
                height,
                negated: false,
            })
        }
        R_COB_SOLV => {
            let f = one(Relation::WTCob, true)?;
            Ok(RuleConclusion {
                relation: Relation::SolvCob,
                subjects: f.subjects.clone(),
                height: f.height,
                negated: false,
            })
        }
        R_SOLV_VANISH => {
            if premises.len() != 3 {
                return Err(premise_error(rule, "expected three premises"));
            }
            let (solv, side, rep) = (premises[0], premises[1], premises[2]);
            let ok = solv.relation == Relation::SolvCob
                && solv.is_positive()
                && solv.height.is_some_and(|h| h.is_half_integer())
                && side.relation == Relation::SideConditionI
                && side.is_positive()
                && side.subjects.first() == solv.subjects.get(1)
                && rep.relation == Relation::RepNontrivial
                && rep.is_positive()
                && rep.subjects == solv.subjects;
            if !ok {
                return Err(premise_error(rule, "premise shapes do not line up"));
            }
            Ok(RuleConclusion {
                relation: Relation::RhoVanishes,
                subjects: solv.subjects.clone(),
                height: solv.height,
                negated: false,
            })
        }
        R_NONZERO_BLOCKS => {
            let f = one(Relation::RhoNonzero, true)?;
            Ok(RuleConclusion {
                relation: Relation::SolvCob,
                subjects: f.subjects.clone(),
                height: f.height,
                negated: true,
            })
        }
        N_SOLV_COB => {
            let f = one(Relation::SolvCob, false)?;
            Ok(RuleConclusion {
                relation: Relation::WTCob,
                subjects: f.subjects.clone(),
                height: f.height,
                negated: true,
            })
        }
        N_COB_TOWER => {
            let f = one(Relation::WTCob, false)?;
            let links: Option<Vec<String>> = f
                .subjects
                .iter()
                .map(|s| link_of_exterior(s).map(str::to_string))
                .collect();
            let Some(subjects) = links else {
                return Err(premise_error(rule, "subjects are not exteriors"));
            };
            let Some(h) = f.height else {
                return Err(premise_error(rule, "missing height"));
            };
            Ok(RuleConclusion {
                relation: Relation::WTConc,
                subjects,
                height: Some(h.plus_int(2)),
                negated: true,
            })
        }
        N_TOWER_GROPE => {
            let f = one(Relation::WTConc, false)?;
            Ok(RuleConclusion {
                relation: Relation::GropeConc,
                subjects: f.subjects.clone(),
                height: f.height,
                negated: true,
            })
        }
        N_GROPE_CONC => {
            let f = one(Relation::GropeConc, false)?;
            Ok(RuleConclusion {
                relation: Relation::Conc,
                subjects: f.subjects.clone(),
                height: None,
                negated: true,
            })
        }
        other => Err(Error::Inconsistent(format!("unknown rule {other:?}"))),
    }
}

struct State {
    facts: Vec<Fact>,
    pos: BTreeMap<BoundKey, (BoundValue, usize)>,
    neg: BTreeMap<BoundKey, (BoundValue, usize)>,
    agenda: Vec<usize>,
    rng: Option<u64>,
}

impl State {
    /// Next agenda item: FIFO normally, pseudo-random under a seed.
    fn pop(&mut self) -> Option<usize> {
        if self.agenda.is_empty() {
            return None;
        }
        match &mut self.rng {
            None => Some(self.agenda.remove(0)),
            Some(state) => {
                // splitmix64 step; only used to scramble the agenda.
                *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
                let mut z = *state;
                z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
                z ^= z >> 31;
                let i = (z % self.agenda.len() as u64) as usize;
                Some(self.agenda.swap_remove(i))
            }
        }
    }

    fn key_of(fact: &Fact) -> BoundKey {
        BoundKey {
            relation: fact.relation,
            subjects: fact.subjects.clone(),
            point: if fact.relation.is_point_heighted() {
                fact.height
            } else {
                None
            },
        }
    }

    fn value_of(fact: &Fact) -> BoundValue {
        if fact.relation.is_monotone_heighted() {
            match fact.height {
                Some(h) => BoundValue::At(h),
                None => BoundValue::Unbounded,
            }
        } else {
            BoundValue::Present
        }
    }

    /// Folds a fact into the bound tables. Returns whether it improved a
    /// bound (and should therefore fire rules); checks consistency.
    fn record(&mut self, idx: usize) -> Result<()> {
        let fact = self.facts[idx].clone();
        let key = Self::key_of(&fact);
        let value = Self::value_of(&fact);
        let table = if fact.is_positive() {
            &mut self.pos
        } else {
            &mut self.neg
        };
        let improves = match table.get(&key) {
            None => true,
            Some((current, _)) => {
                let cmp = value.cmp_same_class(current);
                if fact.is_positive() {
                    cmp == std::cmp::Ordering::Greater
                } else {
                    cmp == std::cmp::Ordering::Less
                }
            }
        };
        if improves {
            table.insert(key.clone(), (value, idx));
            self.check_consistency(&key)?;
            self.agenda.push(idx);
        }
        Ok(())
    }

    /// A positive bound meeting or passing a negative bound on the same key
    /// is a contradiction; so is a vanishing and a nonvanishing defect at the
    /// same level.
    fn check_consistency(&self, key: &BoundKey) -> Result<()> {
        if let (Some(&(pv, pi)), Some(&(nv, ni))) = (self.pos.get(key), self.neg.get(key)) {
            let crossed = match (pv, nv) {
                (BoundValue::Unbounded, _) => true,
                (BoundValue::At(hp), BoundValue::At(hn)) => hn <= hp,
                (BoundValue::Present, BoundValue::Present) => true,
                _ => true,
            };
            if crossed {
                return Err(self.contradiction(pi, ni));
            }
        }
        if key.relation == Relation::RhoVanishes || key.relation == Relation::RhoNonzero {
            let twin = BoundKey {
                relation: if key.relation == Relation::RhoVanishes {
                    Relation::RhoNonzero
                } else {
                    Relation::RhoVanishes
                },
                subjects: key.subjects.clone(),
                point: key.point,
            };
            if let (Some(&(_, pi)), Some(&(_, ni))) = (self.pos.get(key), self.pos.get(&twin)) {
                return Err(self.contradiction(pi, ni));
            }
        }
        Ok(())
    }

    fn contradiction(&self, a: usize, b: usize) -> Error {
        let render = |idx: usize| {
            let snapshot = Closure {
                facts: self.facts.clone(),
                axioms: 0,
                pos: self.pos.clone(),
                neg: self.neg.clone(),
            };
            snapshot.trace_tree(idx).render()
        };
        Error::Contradiction(format!(
            "{} vs {}\nfirst trace:\n{}second trace:\n{}",
            self.facts[a].summary(),
            self.facts[b].summary(),
            render(a),
            render(b)
        ))
    }

    /// Emits a rule conclusion as a derived fact if it improves a bound.
    fn emit(&mut self, rule: &'static str, premises: Vec<usize>) -> Result<()> {
        let premise_facts: Vec<&Fact> = premises.iter().map(|&p| &self.facts[p]).collect();
        let conclusion = apply_rule(rule, &premise_facts)?;
        let fact = Fact {
            relation: conclusion.relation,
            subjects: conclusion.subjects,
            height: conclusion.height,
            polarity: if conclusion.negated {
                Polarity::Negated
            } else {
                Polarity::Derived
            },
            coeff: None,
            trace: Trace::Rule {
                name: rule.to_string(),
                premises,
            },
        };
        // Only append the fact if it improves a bound; otherwise it is
        // already subsumed and storing it would bloat traces.
        let key = Self::key_of(&fact);
        let value = Self::value_of(&fact);
        let table = if fact.is_positive() { &self.pos } else { &self.neg };
        let improves = match table.get(&key) {
            None => true,
            Some((current, _)) => {
                let cmp = value.cmp_same_class(current);
                if fact.is_positive() {
                    cmp == std::cmp::Ordering::Greater
                } else {
                    cmp == std::cmp::Ordering::Less
                }
            }
        };
        if improves {
            self.facts.push(fact);
            self.record(self.facts.len() - 1)?;
        }
        Ok(())
    }

    /// Fires every rule that has the given fact as a premise, joining with
    /// the bound tables for multi-premise rules.
    fn fire_rules(&mut self, idx: usize) -> Result<()> {
        let fact = self.facts[idx].clone();
        if fact.is_positive() {
            match fact.relation {
                Relation::Conc => {
                    self.emit(R_CONC_GROPE, vec![idx])?;
                    self.emit(R_CONC_TOWER, vec![idx])?;
                }
                Relation::GropeConc => {
                    self.emit(R_GROPE_TOWER, vec![idx])?;
                }
                Relation::WTConc => {
                    let tall_enough = fact
                        .height
                        .map_or(true, |h| h.checked_minus_int(2).is_some());
                    if tall_enough {
                        self.emit(R_TOWER_COB, vec![idx])?;
                        if fact.height.map_or(true, |h| h.is_half_integer()) {
                            self.emit(R_TOWER_SOLV, vec![idx])?;
                        }
                    }
                }
                Relation::WTCob => {
                    self.emit(R_COB_SOLV, vec![idx])?;
                }
                Relation::SolvCob => {
                    if fact.height.is_some_and(|h| h.is_half_integer()) {
                        if let Some((side_idx, rep_idx)) = self.vanishing_side_premises(&fact.subjects)
                        {
                            self.emit(R_SOLV_VANISH, vec![idx, side_idx, rep_idx])?;
                        }
                    }
                }
                Relation::SideConditionI | Relation::RepNontrivial => {
                    // Join against solvable-cobordism facts already recorded.
                    let candidates: Vec<usize> = self
                        .pos
                        .iter()
                        .filter(|(k, _)| {
                            k.relation == Relation::SolvCob
                                && match fact.relation {
                                    Relation::SideConditionI => {
                                        k.subjects.get(1) == fact.subjects.first()
                                    }
                                    _ => k.subjects == fact.subjects,
                                }
                        })
                        .map(|(_, &(_, i))| i)
                        .collect();
                    for solv_idx in candidates {
                        let solv = &self.facts[solv_idx];
                        if !solv.height.is_some_and(|h| h.is_half_integer()) {
                            continue;
                        }
                        let subjects = solv.subjects.clone();
                        if let Some((side_idx, rep_idx)) = self.vanishing_side_premises(&subjects) {
                            self.emit(R_SOLV_VANISH, vec![solv_idx, side_idx, rep_idx])?;
                        }
                    }
                }
                Relation::RhoNonzero => {
                    self.emit(R_NONZERO_BLOCKS, vec![idx])?;
                }
                Relation::RhoVanishes => {}
            }
        } else {
            match fact.relation {
                Relation::SolvCob => self.emit(N_SOLV_COB, vec![idx])?,
                Relation::WTCob => {
                    let liftable = fact
                        .subjects
                        .iter()
                        .all(|s| link_of_exterior(s).is_some());
                    if liftable && fact.height.is_some() {
                        self.emit(N_COB_TOWER, vec![idx])?;
                    }
                }
                Relation::WTConc => self.emit(N_TOWER_GROPE, vec![idx])?,
                Relation::GropeConc => self.emit(N_GROPE_CONC, vec![idx])?,
                _ => {}
            }
        }
        Ok(())
    }

    /// Looks up the recorded side-condition and representation facts needed
    /// by the vanishing rule for a subject pair.
    fn vanishing_side_premises(&self, subjects: &[String]) -> Option<(usize, usize)> {
        let side = self
            .pos
            .get(&BoundKey {
                relation: Relation::SideConditionI,
                subjects: vec![subjects.get(1)?.clone()],
                point: None,
            })
            .map(|&(_, i)| i)?;
        let rep = self
            .pos
            .get(&BoundKey {
                relation: Relation::RepNontrivial,
                subjects: subjects.to_vec(),
                point: None,
            })
            .map(|&(_, i)| i)?;
        Some((side, rep))
    }
}
