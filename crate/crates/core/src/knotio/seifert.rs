//! Seifert matrices: integer linking forms on spanning surfaces.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// What boundary the underlying spanning surface has, judged from the
/// intersection pairing `V - V^T`: unimodular means a single boundary circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    Knot,
    Link,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeifertRepr", into = "SeifertRepr")]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct SeifertRepr {
    matrix: Vec<Vec<i64>>,
}

impl TryFrom<SeifertRepr> for SeifertMatrix {
    type Error = Error;
    fn try_from(r: SeifertRepr) -> Result<Self> {
        SeifertMatrix::new(r.matrix)
    }
}

impl From<SeifertMatrix> for SeifertRepr {
    fn from(m: SeifertMatrix) -> Self {
        SeifertRepr { matrix: m.entries }
    }
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadSeifert(format!(
                    "row {i} has {} entries in a {n}x{n} matrix",
                    row.len()
                )));
            }
        }
        Ok(SeifertMatrix { entries })
    }

    /// 0x0 matrix: genus-0 surface of the unknot.
    pub fn unknot() -> Self {
        SeifertMatrix { entries: vec![] }
    }

    /// Positive trefoil.
    pub fn trefoil() -> Self {
        SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    /// Figure-eight knot.
    pub fn figure_eight() -> Self {
        SeifertMatrix::new(vec![vec![1, 1], vec![0, -1]]).unwrap()
    }

    /// Stevedore knot (slice; determinant polynomial 2t^2 - 5t + 2).
    pub fn stevedore() -> Self {
        SeifertMatrix::new(vec![vec![1, 1], vec![0, -2]]).unwrap()
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn to_rational(&self) -> Vec<Vec<BigRational>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect()
    }

    /// Classify by the unimodularity of V - V^T.
    pub fn kind(&self) -> SurfaceKind {
        let n = self.size();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = BigRational::from_integer((self.entries[i][j] - self.entries[j][i]).into());
            }
        }
        let d = det_rational(&m);
        if d.abs() == BigRational::one() {
            SurfaceKind::Knot
        } else {
            SurfaceKind::Link
        }
    }

    /// Genus of the spanning surface for knot-type matrices.
    pub fn genus(&self) -> Result<usize> {
        match self.kind() {
            SurfaceKind::Knot => Ok(self.size() / 2),
            SurfaceKind::Link => Err(Error::BadSeifert(
                "genus defined only for unimodular intersection pairing".into(),
            )),
        }
    }

    /// Block-diagonal sum, the Seifert matrix of a connected sum.
    pub fn connected_sum(&self, other: &SeifertMatrix) -> SeifertMatrix {
        let n = self.size();
        let m = other.size();
        let mut entries = vec![vec![0i64; n + m]; n + m];
        for i in 0..n {
            entries[i][..n].copy_from_slice(&self.entries[i]);
        }
        for i in 0..m {
            entries[n + i][n..].copy_from_slice(&other.entries[i]);
        }
        SeifertMatrix { entries }
    }

    pub fn transpose(&self) -> SeifertMatrix {
        let n = self.size();
        let mut entries = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                entries[i][j] = self.entries[j][i];
            }
        }
        SeifertMatrix { entries }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::BadSeifert(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("Seifert matrix serializes")
    }
}

/// Determinant by rational Gaussian elimination (empty matrix has det 1).
pub(crate) fn det_rational(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let Some(p) = pivot else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(col, p);
            det = -det;
        }
        det *= a[col][col].clone();
        let inv = a[col][col].clone();
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &inv;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] = &a[r][c] - &sub;
            }
        }
    }
    det
}
