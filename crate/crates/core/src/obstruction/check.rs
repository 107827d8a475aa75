//! The obstruction inequality: does the companion's certified signature
//! defect strictly exceed the family's bound budget?
//!
//! The verdict is certified three-ways: Obstructed when the lower bound of
//! the magnitude is strictly above the budget, NotObstructed when the upper
//! bound is at or below it, and Undecided when the enclosure straddles the
//! budget (retry with a smaller tolerance). An Obstructed verdict also
//! emits the nonzero-defect fact for the family's exterior pair at level
//! n.5, self-certified: the side hypotheses of the vanishing theorem were
//! checked by the family construction, and the emitted note records the
//! inequality.

use num_rational::BigRational;

use super::bounds::{budget, rational_string, BoundModel};
use super::rho::{magnitude_bounds, min_copies, rho_abelian, RhoMode};
use crate::ltsig::IntegralValue;
use crate::towers::{exterior_id, Fact, Height, J0Descriptor, KnotRegistry, Relation, SatelliteTree};
use crate::{Error, Result};

/// Outcome of the budget comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Obstructed,
    NotObstructed,
    Undecided,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Obstructed => write!(f, "obstructed"),
            Verdict::NotObstructed => write!(f, "not-obstructed"),
            Verdict::Undecided => write!(f, "undecided"),
        }
    }
}

/// Everything the comparison established, with a step-by-step trace.
#[derive(Debug, Clone)]
pub struct ObstructionReport {
    /// The companion defect (total over all copies).
    pub rho: IntegralValue,
    /// Certified bounds on its magnitude.
    pub rho_magnitude: (BigRational, BigRational),
    pub mode: RhoMode,
    pub budget: BigRational,
    pub verdict: Verdict,
    /// Smallest copy count that would clear the budget, when the
    /// single-copy defect has a positive certified magnitude.
    pub min_copies: Option<u64>,
    pub trace: Vec<String>,
}

/// The comparison itself, on certified magnitude bounds.
pub fn decide_verdict(
    abs_lo: &BigRational,
    abs_hi: &BigRational,
    budget: &BigRational,
) -> Verdict {
    if abs_lo > budget {
        Verdict::Obstructed
    } else if abs_hi <= budget {
        Verdict::NotObstructed
    } else {
        Verdict::Undecided
    }
}

/// Evaluates the companion defect against the family's budget. On an
/// Obstructed verdict, also returns the nonzero-defect fact for the
/// family's exterior pair at level n.5 (n = stage count), ready to feed
/// the inference engine.
pub fn check_obstruction(
    family: &SatelliteTree,
    j0: &J0Descriptor,
    registry: &KnotRegistry,
    model: &BoundModel,
    mode: RhoMode,
    eps: &BigRational,
    cap: u64,
) -> Result<(ObstructionReport, Option<Fact>)> {
    let entry = registry
        .get(&j0.knot)
        .ok_or_else(|| Error::CompanionNotKnot(j0.knot.clone()))?;
    let Some(seifert) = entry.seifert.clone() else {
        return Err(Error::BadInput(format!(
            "knot {} has no Seifert matrix, so its defect cannot be evaluated",
            j0.knot
        )));
    };

    let rho = rho_abelian(&[(seifert.clone(), j0.copies)], mode, eps, cap)?;
    let (abs_lo, abs_hi) = magnitude_bounds(&rho);
    let total = budget(model, family)?;
    let verdict = decide_verdict(&abs_lo, &abs_hi, &total);

    let copies_needed = match min_copies(&seifert, &total, mode, eps, cap) {
        Ok(n) => Some(n),
        Err(Error::CannotAmplify(_)) => None,
        Err(other) => return Err(other),
    };

    let mut trace = Vec::new();
    trace.push(format!(
        "defect of {} x {} in mode {}: |rho| within [{}, {}]",
        j0.copies,
        j0.knot,
        mode,
        rational_string(&abs_lo),
        rational_string(&abs_hi)
    ));
    let terms: Vec<String> = family
        .required_bounds()
        .iter()
        .map(|id| {
            format!(
                "{id} = {}",
                rational_string(model.get(id).expect("budget checked presence"))
            )
        })
        .collect();
    trace.push(format!(
        "budget = {} ({})",
        rational_string(&total),
        terms.join(" + ")
    ));
    trace.push(match verdict {
        Verdict::Obstructed => format!(
            "certified: {} > {} (strict), defect exceeds the budget",
            rational_string(&abs_lo),
            rational_string(&total)
        ),
        Verdict::NotObstructed => format!(
            "certified: {} <= {}, defect cannot exceed the budget",
            rational_string(&abs_hi),
            rational_string(&total)
        ),
        Verdict::Undecided => format!(
            "enclosure [{}, {}] straddles the budget {}; retry with a smaller tolerance",
            rational_string(&abs_lo),
            rational_string(&abs_hi),
            rational_string(&total)
        ),
    });
    if let Some(n) = copies_needed {
        trace.push(format!("smallest copy count clearing this budget: {n}"));
    }

    let fact = if verdict == Verdict::Obstructed {
        let level = Height::and_a_half(family.stages);
        Some(Fact::axiom(
            Relation::RhoNonzero,
            vec![exterior_id(&family.root), exterior_id(&family.reference)],
            Some(level),
            &format!(
                "certified |rho| >= {} > budget {} in mode {}; side hypotheses held by construction (reference linking number 1, representation nontriviality checked at build time)",
                rational_string(&abs_lo),
                rational_string(&total),
                mode
            ),
        ))
    } else {
        None
    };

    Ok((
        ObstructionReport {
            rho,
            rho_magnitude: (abs_lo, abs_hi),
            mode,
            budget: total,
            verdict,
            min_copies: copies_needed,
            trace,
        },
        fact,
    ))
}

impl ObstructionReport {
    /// Human-readable rendering of the trace.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for line in &self.trace {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knotio::SeifertMatrix;
    use crate::towers::{build_paper_family, close, BoundValue, KnotEntry};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    const CAP: u64 = 10_000;

    fn standard_model() -> BoundModel {
        let mut m = BoundModel::new();
        m.insert("E_L0_cup_E_H", q(50, 1)).unwrap();
        m.insert("M_K0", q(25, 1)).unwrap();
        m.insert("M_K1", q(25, 1)).unwrap();
        m
    }

    #[test]
    fn verdict_comparison_covers_the_three_cases() {
        let b = q(100, 1);
        assert_eq!(decide_verdict(&q(400, 3), &q(400, 3), &b), Verdict::Obstructed);
        assert_eq!(decide_verdict(&q(4, 3), &q(4, 3), &b), Verdict::NotObstructed);
        assert_eq!(
            decide_verdict(&q(999, 10), &q(1001, 10), &b),
            Verdict::Undecided
        );
        // Exactly meeting the budget is not strict excess.
        assert_eq!(decide_verdict(&b, &b, &b), Verdict::NotObstructed);
    }

    #[test]
    fn hundred_trefoils_beat_budget_one_hundred() {
        let reg = KnotRegistry::standard().unwrap();
        let j0 = J0Descriptor { knot: "trefoil".to_string(), copies: 100 };
        let seeds = vec!["stevedore".to_string(), "stevedore".to_string()];
        let built = build_paper_family(3, 1, &seeds, &j0, &reg).unwrap();
        let (report, fact) = check_obstruction(
            &built.tree,
            &j0,
            &reg,
            &standard_model(),
            RhoMode::Integral,
            &q(1, 1000),
            CAP,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::Obstructed);
        assert_eq!(report.rho, IntegralValue::Exact(q(-400, 3)));
        assert_eq!(report.budget, q(100, 1));
        assert_eq!(report.min_copies, Some(76));

        let fact = fact.unwrap();
        assert_eq!(fact.relation, Relation::RhoNonzero);
        assert_eq!(fact.subjects, vec!["E(L3)", "E(Hopf)"]);
        assert_eq!(fact.height, Some(Height::and_a_half(3)));

        // The emitted fact drives the engine to the expected certificate.
        let mut db = built.facts.clone();
        db.push(fact);
        let closure = close(&db).unwrap();
        let pair = vec!["L3".to_string(), "Hopf".to_string()];
        let (neg, _) = closure.negative_bound(Relation::WTConc, &pair).unwrap();
        assert_eq!(neg, BoundValue::At(Height::and_a_half(5)));
    }

    #[test]
    fn one_trefoil_is_not_enough() {
        let reg = KnotRegistry::standard().unwrap();
        let j0 = J0Descriptor { knot: "trefoil".to_string(), copies: 1 };
        let seeds = vec!["stevedore".to_string(), "stevedore".to_string()];
        let built = build_paper_family(3, 1, &seeds, &j0, &reg).unwrap();
        let (report, fact) = check_obstruction(
            &built.tree,
            &j0,
            &reg,
            &standard_model(),
            RhoMode::Integral,
            &q(1, 1000),
            CAP,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::NotObstructed);
        assert!(fact.is_none());
        assert_eq!(report.min_copies, Some(76));
    }

    #[test]
    fn prime_sum_mode_reports_exactly() {
        let reg = KnotRegistry::standard().unwrap();
        let j0 = J0Descriptor { knot: "trefoil".to_string(), copies: 30 };
        let built = build_paper_family(1, 1, &[], &j0, &reg).unwrap();
        let mut model = BoundModel::new();
        model.insert("E_L0_cup_E_H", q(50, 1)).unwrap();
        let (report, fact) = check_obstruction(
            &built.tree,
            &j0,
            &reg,
            &model,
            RhoMode::PrimeSum(3),
            &q(1, 1),
            CAP,
        )
        .unwrap();
        // 30 copies x (-4) = -120; |.| = 120 > 50.
        assert_eq!(report.rho, IntegralValue::Exact(q(-120, 1)));
        assert_eq!(report.verdict, Verdict::Obstructed);
        let fact = fact.unwrap();
        assert_eq!(fact.height, Some(Height::and_a_half(1)));
        assert_eq!(fact.subjects, vec!["E(L1)", "E(Hopf)"]);
    }

    #[test]
    fn shrinking_eps_only_resolves_undecided() {
        // A companion with a genuine enclosure: jumps off the roots of
        // unity. Register it with the grope-bounding flag for the build.
        let mut reg = KnotRegistry::standard().unwrap();
        let v = SeifertMatrix::new(vec![vec![1, 1], vec![0, 2]]).unwrap();
        reg.insert(
            "offgrid",
            KnotEntry {
                seifert: Some(v.clone()),
                slice: None,
                grope_bounding_sum: true,
            },
        );
        let j0 = J0Descriptor { knot: "offgrid".to_string(), copies: 1 };
        let built = build_paper_family(1, 1, &[], &j0, &reg).unwrap();

        // Budgets clear of the value: verdicts must be stable under
        // refinement; a budget inside the coarse enclosure may resolve.
        let coarse = rho_abelian(&[(v.clone(), 1)], RhoMode::Integral, &q(1, 4), CAP).unwrap();
        let (lo, hi) = magnitude_bounds(&coarse);
        let mid = (&lo + &hi) / q(2, 1);

        let mut verdicts = Vec::new();
        for eps in [q(1, 4), q(1, 64), q(1, 4096)] {
            let mut model = BoundModel::new();
            model.insert("E_L0_cup_E_H", mid.clone()).unwrap();
            let (report, _) =
                check_obstruction(&built.tree, &j0, &reg, &model, RhoMode::Integral, &eps, CAP)
                    .unwrap();
            verdicts.push(report.verdict);
            assert!(report.rho_magnitude.1.clone() - report.rho_magnitude.0.clone() <= eps);
        }
        // Once decided, later (finer) verdicts must agree.
        let mut decided: Option<Verdict> = None;
        for v in verdicts {
            match (decided, v) {
                (None, Verdict::Undecided) => {}
                (None, d) => decided = Some(d),
                (Some(d), v) => assert_eq!(d, v, "refinement flipped a decided verdict"),
            }
        }
    }

    #[test]
    fn missing_bounds_propagate_from_the_budget() {
        let reg = KnotRegistry::standard().unwrap();
        let j0 = J0Descriptor { knot: "trefoil".to_string(), copies: 1 };
        let seeds = vec!["stevedore".to_string()];
        let built = build_paper_family(2, 1, &seeds, &j0, &reg).unwrap();
        let mut model = BoundModel::new();
        model.insert("E_L0_cup_E_H", q(50, 1)).unwrap();
        let err = check_obstruction(
            &built.tree,
            &j0,
            &reg,
            &model,
            RhoMode::Integral,
            &q(1, 100),
            CAP,
        )
        .unwrap_err();
        assert!(matches!(err, Error::MissingBounds(ids) if ids == vec!["M_K0"]));
    }

    #[test]
    fn slice_companions_yield_no_amplification_hint() {
        // A slice knot's defect vanishes identically; the report carries
        // no copy-count hint and the verdict is NotObstructed.
        let mut reg = KnotRegistry::standard().unwrap();
        let stevedore = reg.get("stevedore").unwrap().clone();
        reg.insert(
            "stevedore_ct",
            KnotEntry {
                grope_bounding_sum: true,
                ..stevedore
            },
        );
        let j0 = J0Descriptor { knot: "stevedore_ct".to_string(), copies: 1000 };
        let built = build_paper_family(1, 1, &[], &j0, &reg).unwrap();
        let mut model = BoundModel::new();
        model.insert("E_L0_cup_E_H", q(0, 1)).unwrap();
        let (report, fact) = check_obstruction(
            &built.tree,
            &j0,
            &reg,
            &model,
            RhoMode::Integral,
            &q(1, 100),
            CAP,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::NotObstructed);
        assert_eq!(report.min_copies, None);
        assert!(fact.is_none());
    }
}
