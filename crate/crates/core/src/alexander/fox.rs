//! Free differential calculus on free-group words.
//!
//! Words are vectors of nonzero `i32` letters (sign = inversion, 1-based
//! generator index). Derivatives live in the integral group ring of the free
//! group and are abelianized to Laurent polynomials on demand.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactnum::LaurentPoly;
use crate::knotio::GroupPresentation;
use crate::{Error, Result};

/// Freely reduce a word (cancel adjacent inverse pairs).
pub fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &letter in word {
        debug_assert!(letter != 0);
        if out.last() == Some(&-letter) {
            out.pop();
        } else {
            out.push(letter);
        }
    }
    out
}

/// The inverse word.
pub fn invert_word(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|&l| -l).collect()
}

/// An element of the integral group ring of a free group: a finite Z-linear
/// combination of freely reduced words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElem {
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        GroupRingElem::default()
    }

    pub fn one() -> Self {
        GroupRingElem::from_word(&[])
    }

    pub fn from_word(word: &[i32]) -> Self {
        let mut e = GroupRingElem::zero();
        e.add_assign_term(free_reduce(word), BigInt::one());
        e
    }

    fn add_assign_term(&mut self, word: Vec<i32>, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_assign_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_assign_term(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElem::zero().sub(self)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = GroupRingElem::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_assign_term(free_reduce(&w), c1 * c2);
            }
        }
        out
    }

    /// Left-multiply by a single word.
    pub fn mul_word_left(&self, word: &[i32]) -> Self {
        GroupRingElem::from_word(word).mul(self)
    }

    /// Abelianize: send generator `g` to the variable `component_of[g-1]`.
    pub fn abelianize(
        &self,
        component_of: &[usize],
        vars: &[&str],
    ) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(vars);
        for (word, coef) in &self.terms {
            let mut exp = vec![0i64; vars.len()];
            for &letter in word {
                let gen = letter.unsigned_abs() as usize - 1;
                let var = *component_of.get(gen).ok_or_else(|| {
                    Error::BadInput(format!("letter {letter} outside the meridian map"))
                })?;
                if var >= vars.len() {
                    return Err(Error::BadInput(format!(
                        "meridian map sends generator {} to missing variable {var}",
                        gen + 1
                    )));
                }
                exp[var] += letter.signum() as i64;
            }
            let mono = LaurentPoly::monomial(
                vars,
                exp,
                BigRational::from_integer(coef.clone()),
            );
            out = out.try_add(&mono)?;
        }
        Ok(out)
    }
}

/// Fox derivative d(word)/d(x_gen) in the free group ring (gen is 1-based).
///
/// Product rule d(uv) = du + u dv, with d(x) = 1 and d(x^-1) = -x^-1 on the
/// generator itself, 0 on others.
pub fn fox_derivative(word: &[i32], gen: u32) -> GroupRingElem {
    let mut result = GroupRingElem::zero();
    let mut prefix: Vec<i32> = vec![];
    for &letter in word {
        if letter.unsigned_abs() == gen {
            if letter > 0 {
                result.add_assign_term(prefix.clone(), BigInt::one());
            } else {
                let mut w = prefix.clone();
                w.push(letter);
                result.add_assign_term(free_reduce(&w), -BigInt::one());
            }
        }
        prefix.push(letter);
        prefix = free_reduce(&prefix);
    }
    result
}

/// Abelianized Jacobian of the relators: one row per relator, one column per
/// generator, with generator j sent to variable `component_of[j]`.
pub fn fox_matrix(
    pres: &GroupPresentation,
    component_of: &[usize],
    vars: &[&str],
) -> Result<Vec<Vec<LaurentPoly>>> {
    let n = pres.num_generators();
    if component_of.len() != n {
        return Err(Error::BadInput(format!(
            "meridian map has {} entries for {} generators",
            component_of.len(),
            n
        )));
    }
    pres.relators()
        .iter()
        .map(|rel| {
            (1..=n as u32)
                .map(|g| fox_derivative(rel, g).abelianize(component_of, vars))
                .collect()
        })
        .collect()
}
