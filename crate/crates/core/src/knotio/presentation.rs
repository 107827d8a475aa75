//! Finite group presentations with free-group-word relators.
//!
//! A relator is a word in the generators encoded as a vector of nonzero
//! integers: `g > 0` means the g-th generator (1-based), `g < 0` its inverse.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PresentationRepr", into = "PresentationRepr")]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Vec<i32>>,
}

#[derive(Serialize, Deserialize)]
struct PresentationRepr {
    generators: Vec<String>,
    relators: Vec<Vec<i32>>,
}

impl TryFrom<PresentationRepr> for GroupPresentation {
    type Error = Error;
    fn try_from(r: PresentationRepr) -> Result<Self> {
        GroupPresentation::new(r.generators, r.relators)
    }
}

impl From<GroupPresentation> for PresentationRepr {
    fn from(p: GroupPresentation) -> Self {
        PresentationRepr {
            generators: p.generators,
            relators: p.relators,
        }
    }
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Vec<i32>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::BadPresentation("no generators".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for g in &generators {
            if g.is_empty() {
                return Err(Error::BadPresentation("empty generator name".into()));
            }
            if !seen.insert(g.clone()) {
                return Err(Error::BadPresentation(format!(
                    "duplicate generator name {g:?}"
                )));
            }
        }
        let n = generators.len() as i32;
        for (i, rel) in relators.iter().enumerate() {
            for &letter in rel {
                if letter == 0 || letter.abs() > n {
                    return Err(Error::BadPresentation(format!(
                        "relator {i} contains invalid letter {letter}"
                    )));
                }
            }
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    /// The free group on `names`.
    pub fn free(names: Vec<String>) -> Result<Self> {
        GroupPresentation::new(names, vec![])
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Vec<i32>] {
        &self.relators
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn abelianized_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|rel| {
                let mut row = vec![0i64; self.generators.len()];
                for &letter in rel {
                    let idx = letter.unsigned_abs() as usize - 1;
                    row[idx] += letter.signum() as i64;
                }
                row
            })
            .collect()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::BadPresentation(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("presentation serializes")
    }
}

/// Rank over Q of an integer matrix (rows x cols), by Gaussian elimination.
pub(crate) fn rank_q(m: &[Vec<i64>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else { continue };
        a.swap(row, p);
        let inv = a[row][col].clone();
        for r in (row + 1)..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &inv;
            for c in col..cols {
                let sub = &factor * &a[row][c];
                a[r][c] = &a[r][c] - &sub;
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}
