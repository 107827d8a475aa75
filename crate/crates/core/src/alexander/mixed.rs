//! Successive quotients of the mixed lower central / derived filtration of a
//! link group, through depth two.
//!
//! Depth one is the abelianization, free of rank equal to the number of
//! components. Depth two is the Alexander-type module over the group ring of
//! the abelianization, presented via Fox calculus: writing `e_i` for the free
//! basis indexed by meridian generators, the kernel of the augmentation onto
//! the abelianization is generated by the differences `d_i = e_i - e_base(i)`
//! together with (for two components) the Koszul element
//! `k = (t2 - 1) e_b1 - (t1 - 1) e_b2`; every Fox row rewrites exactly in
//! these generators. Links with three or more components are not supported.

use itertools::Itertools;

use super::fox::fox_matrix;
use super::poly::{laurent_det, link_vars};
use crate::exactnum::{is_prime, LaurentPoly};
use crate::knotio::WirtingerPresentation;
use crate::{Error, Result};

/// Coefficients for the depth-two module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientRing {
    /// Rational coefficients.
    Rational,
    /// Integers mod a prime.
    PrimeField(u64),
}

/// A finitely presented module over a Laurent polynomial ring.
#[derive(Debug, Clone)]
pub struct ModulePresentation {
    pub ring: CoefficientRing,
    pub vars: Vec<String>,
    pub generators: Vec<String>,
    /// One row per relation, one column per generator.
    pub relations: Vec<Vec<LaurentPoly>>,
    /// gcd of maximal minors (rational coefficients only, and only when there
    /// are at least as many relations as generators).
    pub order: Option<LaurentPoly>,
}

impl ModulePresentation {
    /// The module is zero exactly when its order ideal is the whole ring.
    pub fn is_zero_module(&self) -> bool {
        if self.generators.is_empty() {
            return true;
        }
        self.order.as_ref().is_some_and(|o| o.is_unit())
    }
}

/// A quotient of consecutive stages of the mixed filtration.
#[derive(Debug, Clone)]
pub enum SeriesQuotient {
    FreeAbelian { rank: usize },
    Module(ModulePresentation),
}

/// Compute the depth-one or depth-two quotient for a link of at most two
/// components.
pub fn mixed_series_quotient(
    w: &WirtingerPresentation,
    depth: u8,
    ring: CoefficientRing,
) -> Result<SeriesQuotient> {
    let mu = w
        .meridian_components()
        .iter()
        .copied()
        .max()
        .map_or(0, |m| m + 1);
    if let CoefficientRing::PrimeField(p) = ring {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    match depth {
        1 => Ok(SeriesQuotient::FreeAbelian { rank: mu }),
        2 => {
            if mu > 2 {
                return Err(Error::TooManyComponents(mu));
            }
            Ok(SeriesQuotient::Module(depth_two_module(w, mu, ring)?))
        }
        d => Err(Error::BadInput(format!(
            "mixed series depth must be 1 or 2, got {d}"
        ))),
    }
}

fn depth_two_module(
    w: &WirtingerPresentation,
    mu: usize,
    ring: CoefficientRing,
) -> Result<ModulePresentation> {
    let var_names = link_vars(mu);
    let vars: Vec<&str> = var_names.iter().map(|s| s.as_str()).collect();
    let comps = w.meridian_components();
    let n = w.num_arcs();
    // One base generator per component: the first meridian on it.
    let mut base: Vec<Option<usize>> = vec![None; mu];
    for (i, &c) in comps.iter().enumerate() {
        if base[c].is_none() {
            base[c] = Some(i);
        }
    }
    let base: Vec<usize> = base
        .into_iter()
        .map(|b| b.ok_or_else(|| Error::Inconsistent("component without meridian".into())))
        .collect::<Result<_>>()?;
    let non_base: Vec<usize> = (0..n).filter(|i| !base.contains(i)).collect();
    let mut generators: Vec<String> = non_base.iter().map(|&i| format!("d{}", i + 1)).collect();
    if mu == 2 {
        generators.push("k".into());
    }
    let fox = fox_matrix(w.presentation(), comps, &vars)?;
    let mut relations: Vec<Vec<LaurentPoly>> = vec![];
    for (ri, row) in fox.iter().enumerate() {
        let mut rel: Vec<LaurentPoly> = non_base.iter().map(|&i| row[i].clone()).collect();
        // Component-wise coefficient sums F_c.
        let mut sums = vec![LaurentPoly::zero(&vars); mu];
        for (i, f) in row.iter().enumerate() {
            sums[comps[i]] = sums[comps[i]].try_add(f)?;
        }
        match mu {
            1 => {
                if !sums[0].is_zero() {
                    return Err(Error::Inconsistent(format!(
                        "relator {ri}: meridian coefficients do not sum to zero"
                    )));
                }
            }
            2 => {
                // F1 e_b1 + F2 e_b2 = s * k with s = F1 / (t2 - 1); the free
                // differential identity also forces s = -F2 / (t1 - 1).
                let s = sums[0].div_exact_var_minus_one(1)?;
                let t1m1 =
                    LaurentPoly::from_int_terms(&vars, &[(&[1, 0], 1), (&[0, 0], -1)]);
                let check = s.try_mul(&t1m1)?.try_add(&sums[1])?;
                if !check.is_zero() {
                    return Err(Error::Inconsistent(format!(
                        "relator {ri}: Koszul coefficient mismatch"
                    )));
                }
                rel.push(s);
            }
            _ => unreachable!("component count checked earlier"),
        }
        relations.push(rel);
    }
    // Order ideal over Q before any reduction.
    let cols = generators.len();
    let order = if ring == CoefficientRing::Rational && relations.len() >= cols {
        if cols == 0 {
            Some(LaurentPoly::one(&vars))
        } else {
            let mut acc = LaurentPoly::zero(&vars);
            for rows in (0..relations.len()).combinations(cols) {
                let sub: Vec<Vec<LaurentPoly>> =
                    rows.iter().map(|&r| relations[r].clone()).collect();
                let d = laurent_det(&vars, &sub)?;
                if d.is_zero() {
                    continue;
                }
                acc = if acc.is_zero() { d } else { acc.gcd(&d)? };
                if acc.is_unit() {
                    break;
                }
            }
            Some(acc.normalized())
        }
    } else {
        None
    };
    if let CoefficientRing::PrimeField(p) = ring {
        relations = relations
            .into_iter()
            .map(|row| row.into_iter().map(|f| f.reduce_mod(p)).collect())
            .collect::<Result<_>>()?;
    }
    Ok(ModulePresentation {
        ring,
        vars: var_names,
        generators,
        relations,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knotio::{wirtinger_presentation, PDCode};

    fn module_of(pd: &PDCode, ring: CoefficientRing) -> ModulePresentation {
        let w = wirtinger_presentation(pd).unwrap();
        match mixed_series_quotient(&w, 2, ring).unwrap() {
            SeriesQuotient::Module(m) => m,
            other => panic!("expected module, got {other:?}"),
        }
    }

    #[test]
    fn depth_one_is_free_abelian()  {
        let w = wirtinger_presentation(&PDCode::positive_hopf()).unwrap();
        match mixed_series_quotient(&w, 1, CoefficientRing::Rational).unwrap() {
            SeriesQuotient::FreeAbelian { rank } => assert_eq!(rank, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn trefoil_module_order() {
        let m = module_of(&PDCode::trefoil(), CoefficientRing::Rational);
        assert_eq!(m.generators.len(), 2);
        let order = m.order.as_ref().unwrap();
        assert_eq!(
            order,
            &LaurentPoly::from_int_terms(&["t"], &[(&[0], 1), (&[1], -1), (&[2], 1)])
        );
        assert!(!m.is_zero_module());
    }

    #[test]
    fn hopf_module_vanishes() {
        let m = module_of(&PDCode::positive_hopf(), CoefficientRing::Rational);
        assert_eq!(m.generators, vec!["k".to_string()]);
        assert_eq!(m.relations.len(), 2);
        for rel in &m.relations {
            assert!(rel[0].is_unit(), "Koszul coefficient is a unit: {}", rel[0]);
        }
        assert!(m.is_zero_module());
    }

    #[test]
    fn prime_field_reduction() {
        let m = module_of(&PDCode::trefoil(), CoefficientRing::PrimeField(5));
        assert!(m.order.is_none());
        for row in &m.relations {
            for f in row {
                for (_, c) in f.terms() {
                    assert!(c.is_integer());
                    let n: num_bigint::BigInt = c.to_integer();
                    assert!(n >= 0.into() && n < 5.into(), "coefficient {n} out of range");
                }
            }
        }
        let bad = {
            let w = wirtinger_presentation(&PDCode::trefoil()).unwrap();
            mixed_series_quotient(&w, 2, CoefficientRing::PrimeField(6))
        };
        assert!(matches!(bad, Err(Error::NotPrime(6))));
    }

    #[test]
    fn rejects_three_components_and_bad_depth() {
        let pd = PDCode::new(vec![], vec![vec![1], vec![2], vec![3]]).unwrap();
        let w = wirtinger_presentation(&pd).unwrap();
        assert!(matches!(
            mixed_series_quotient(&w, 2, CoefficientRing::Rational),
            Err(Error::TooManyComponents(3))
        ));
        assert!(mixed_series_quotient(&w, 3, CoefficientRing::Rational).is_err());
        match mixed_series_quotient(&w, 1, CoefficientRing::Rational).unwrap() {
            SeriesQuotient::FreeAbelian { rank } => assert_eq!(rank, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknot_module_is_zero() {
        let m = module_of(&PDCode::unknot(), CoefficientRing::Rational);
        assert!(m.generators.is_empty());
        assert!(m.is_zero_module());
    }
}
