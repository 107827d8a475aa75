//! The rational Alexander module of a knot Seifert matrix, presented by
//! `tV - V^T`, realized as a finite-dimensional vector space over Q with a
//! `t`-action.
//!
//! Writing `D` for the monic order polynomial (the normalized determinant of
//! the presentation, which has nonzero constant term), the module is the
//! quotient of `(Q[t]/(D))^n` by the span of all `t^k`-shifts of the
//! presentation columns: `D` annihilates everything by the adjugate identity,
//! so nothing is lost by working modulo `D`, and shifts with exponent below
//! `deg D` already span the full relation space.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::alexander::{alexander_from_seifert, laurent_det};
use crate::exactnum::{LaurentPoly, QPoly};
use crate::knotio::{SeifertMatrix, SurfaceKind};
use crate::{Error, Result};

/// Elements are coefficient vectors over the presentation generators, one
/// Laurent polynomial in `t` per generator.
pub type ModuleElement = Vec<LaurentPoly>;

const VAR: [&str; 1] = ["t"];

/// Incremental row echelon form over Q, for spans and membership tests.
#[derive(Debug, Clone)]
pub(crate) struct RowSpace {
    cols: usize,
    /// Echelon rows, each scaled to a unit pivot; `pivots[i]` is the pivot
    /// column of `rows[i]`.
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub(crate) fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [BigRational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for j in p..self.cols {
                    let delta = &c * &row[j];
                    v[j] -= delta;
                }
            }
        }
    }

    /// Adds a vector to the span; returns whether the dimension grew.
    pub(crate) fn insert(&mut self, mut v: Vec<BigRational>) -> bool {
        assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let lead = v[p].clone();
        for c in v.iter_mut() {
            *c /= &lead;
        }
        // Keep rows ordered by pivot so reduction stays one forward pass.
        let at = self
            .pivots
            .iter()
            .position(|&q| q > p)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    pub(crate) fn contains(&self, v: &[BigRational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| c.is_zero())
    }
}

/// The torsion module of a knot Seifert matrix together with its presentation
/// and order data.
#[derive(Debug, Clone)]
pub struct BlanchfieldModule {
    seifert: SeifertMatrix,
    presentation: Vec<Vec<LaurentPoly>>,
    determinant: LaurentPoly,
    order: LaurentPoly,
    order_monic: QPoly,
    t_inverse: QPoly,
    relations: RowSpace,
    dim: usize,
}

/// Builds the module of a knot Seifert matrix. The matrix must present a
/// knot (`|det(V - V^T)| = 1`).
pub fn module_from_seifert(v: &SeifertMatrix) -> Result<BlanchfieldModule> {
    if v.kind() != SurfaceKind::Knot {
        return Err(Error::BadSeifert(
            "the pairing is defined for knot matrices (|det(V - V^T)| = 1)".into(),
        ));
    }
    let n = v.size();
    let mut presentation = vec![vec![LaurentPoly::zero(&VAR); n]; n];
    for i in 0..n {
        for j in 0..n {
            presentation[i][j] =
                LaurentPoly::from_int_terms(&VAR, &[(&[1], v.get(i, j)), (&[0], -v.get(j, i))]);
        }
    }
    let determinant = laurent_det(&VAR, &presentation)?;
    let order = alexander_from_seifert(v)?;
    let (order_q, shift) = order.to_qpoly()?;
    debug_assert_eq!(shift, 0, "normalized order has no t factor");
    let order_monic = order_q.monic();
    let m = order_monic.deg().unwrap_or(0);

    let t_inverse = invert_t(&order_monic);
    let mut relations = RowSpace::new(n * m);
    for j in 0..n {
        let mut column: Vec<QPoly> = (0..n)
            .map(|i| reduce_laurent(&presentation[i][j], &order_monic, &t_inverse))
            .collect::<Result<_>>()?;
        for _ in 0..m {
            relations.insert(flatten(&column, m));
            for entry in column.iter_mut() {
                *entry = shift_up(entry, &order_monic);
            }
        }
    }
    let dim = n * m - relations.dim();
    if dim != m {
        return Err(Error::Inconsistent(format!(
            "module dimension {} does not match the order degree {}",
            dim, m
        )));
    }
    Ok(BlanchfieldModule {
        seifert: v.clone(),
        presentation,
        determinant,
        order,
        order_monic,
        t_inverse,
        relations,
        dim,
    })
}

/// The inverse of `t` modulo a monic polynomial with nonzero constant term:
/// from `d0 + d1 t + ... + t^m = 0` one reads off
/// `t^{-1} = -(d1 + d2 t + ... + t^{m-1})/d0`.
pub(crate) fn invert_t(order: &QPoly) -> QPoly {
    match order.deg() {
        None | Some(0) => QPoly::zero(),
        Some(m) => {
            let d0 = order.coeff(0);
            assert!(!d0.is_zero(), "order must not vanish at 0");
            QPoly::new((1..=m).map(|k| -&order.coeff(k) / &d0).collect())
        }
    }
}

/// A Laurent polynomial in `t` as a residue modulo the order.
fn reduce_laurent(x: &LaurentPoly, order: &QPoly, t_inverse: &QPoly) -> Result<QPoly> {
    if order.deg().map_or(true, |m| m == 0) {
        return Ok(QPoly::zero());
    }
    let (p, shift) = x.to_qpoly()?;
    let shifted = if shift >= 0 {
        p.mul(&QPoly::monomial(BigRational::one(), shift as usize))
    } else {
        let mut inv_pow = QPoly::one();
        for _ in 0..(-shift) {
            inv_pow = inv_pow.mul(t_inverse).rem(order);
        }
        p.mul(&inv_pow)
    };
    Ok(shifted.rem(order))
}

/// Multiplication by `t` in `Q[t]/(order)`.
fn shift_up(p: &QPoly, order: &QPoly) -> QPoly {
    p.mul(&QPoly::x()).rem(order)
}

/// Residue vector to flat coordinates, `m` slots per generator.
fn flatten(column: &[QPoly], m: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(column.len() * m);
    for p in column {
        for k in 0..m {
            out.push(p.coeff(k));
        }
    }
    out
}

impl BlanchfieldModule {
    pub fn seifert(&self) -> &SeifertMatrix {
        &self.seifert
    }

    /// The presentation matrix `tV - V^T`.
    pub fn presentation(&self) -> &Vec<Vec<LaurentPoly>> {
        &self.presentation
    }

    /// Raw determinant of the presentation (the pairing denominator).
    pub fn determinant(&self) -> &LaurentPoly {
        &self.determinant
    }

    /// The normalized order of the module.
    pub fn order(&self) -> &LaurentPoly {
        &self.order
    }

    /// Monic order polynomial used for internal reduction.
    pub(crate) fn order_monic(&self) -> &QPoly {
        &self.order_monic
    }

    /// Number of presentation generators.
    pub fn generators(&self) -> usize {
        self.presentation.len()
    }

    /// Dimension over Q.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero_module(&self) -> bool {
        self.dim == 0
    }

    /// The `i`-th presentation generator as an element.
    pub fn basis_element(&self, i: usize) -> ModuleElement {
        let n = self.generators();
        assert!(i < n, "generator index out of range");
        (0..n)
            .map(|j| {
                if i == j {
                    LaurentPoly::one(&VAR)
                } else {
                    LaurentPoly::zero(&VAR)
                }
            })
            .collect()
    }

    pub(crate) fn validate_element(&self, x: &[LaurentPoly]) -> Result<()> {
        if x.len() != self.generators() {
            return Err(Error::BadInput(format!(
                "element has {} coordinates, the presentation has {} generators",
                x.len(),
                self.generators()
            )));
        }
        for c in x {
            if c.vars() != VAR {
                return Err(Error::VarMismatch(
                    c.vars().iter().map(|s| s.to_string()).collect(),
                    vec!["t".into()],
                ));
            }
        }
        Ok(())
    }

    /// Flat quotient coordinates of an element.
    fn coordinates(&self, x: &[LaurentPoly]) -> Result<Vec<BigRational>> {
        let m = self.order_monic.deg().unwrap_or(0);
        let residues: Vec<QPoly> = x
            .iter()
            .map(|c| reduce_laurent(c, &self.order_monic, &self.t_inverse))
            .collect::<Result<_>>()?;
        Ok(flatten(&residues, m))
    }

    /// Is the element zero in the module?
    pub fn is_zero_element(&self, x: &[LaurentPoly]) -> Result<bool> {
        self.validate_element(x)?;
        if self.is_zero_module() {
            return Ok(true);
        }
        Ok(self.relations.contains(&self.coordinates(x)?))
    }

    /// Dimension over Q of the submodule generated by one element: the span
    /// of its `t`-shifts in the quotient.
    pub fn element_span_dim(&self, x: &[LaurentPoly]) -> Result<usize> {
        self.validate_element(x)?;
        if self.is_zero_module() {
            return Ok(0);
        }
        let mut span = self.relations.clone();
        let base = self.relations.dim();
        let m = self.order_monic.deg().unwrap_or(0);
        let mut residues: Vec<QPoly> = x
            .iter()
            .map(|c| reduce_laurent(c, &self.order_monic, &self.t_inverse))
            .collect::<Result<_>>()?;
        loop {
            if !span.insert(flatten(&residues, m)) {
                // The relation space is t-invariant, so once a shift adds
                // nothing, no later shift will.
                return Ok(span.dim() - base);
            }
            if span.dim() - base == self.dim {
                return Ok(self.dim);
            }
            for entry in residues.iter_mut() {
                *entry = shift_up(entry, &self.order_monic);
            }
        }
    }

    /// Does the element generate the whole module over the Laurent ring,
    /// i.e. do its `t`-shifts span the quotient?
    pub fn is_generator(&self, x: &[LaurentPoly]) -> Result<bool> {
        // Anything generates the zero module, including zero itself.
        Ok(self.element_span_dim(x)? == self.dim)
    }

    /// Searches a few short coordinate vectors for a single generator of the
    /// module. Returns `None` when none of them generates (in particular when
    /// the module is not cyclic).
    pub fn cyclic_generator(&self) -> Result<Option<ModuleElement>> {
        if self.is_zero_module() {
            return Ok(None);
        }
        let n = self.generators();
        let one = LaurentPoly::one(&VAR);
        let t = LaurentPoly::var(&VAR, 0);
        let mut candidates: Vec<ModuleElement> = Vec::new();
        for i in 0..n {
            candidates.push(self.basis_element(i));
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for scale in [&one, &-&one, &t] {
                    let mut x = self.basis_element(i);
                    x[j] = scale.clone();
                    candidates.push(x);
                }
            }
        }
        for x in candidates {
            if self.is_generator(&x)? {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }

    /// Scales an element by a Laurent polynomial.
    pub fn scale_element(&self, p: &LaurentPoly, x: &[LaurentPoly]) -> Result<ModuleElement> {
        self.validate_element(x)?;
        x.iter().map(|c| p.try_mul(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trefoil_module_is_cyclic_of_dimension_two() {
        let m = module_from_seifert(&SeifertMatrix::trefoil()).unwrap();
        assert_eq!(m.dim(), 2);
        assert!(!m.is_zero_module());
        assert_eq!(m.generators(), 2);
        assert!(m.is_generator(&m.basis_element(0)).unwrap());
        assert!(m.is_generator(&m.basis_element(1)).unwrap());
        let g = m.cyclic_generator().unwrap().unwrap();
        assert!(m.is_generator(&g).unwrap());
        // The presentation column (1-t, -1) says e2 = (1-t)e1.
        let e2_rewritten = vec![
            LaurentPoly::from_int_terms(&VAR, &[(&[0], 1), (&[1], -1)]),
            LaurentPoly::from_int_terms(&VAR, &[(&[0], -1)]),
        ];
        assert!(m.is_zero_element(&e2_rewritten).unwrap());
    }

    #[test]
    fn order_annihilates_everything() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xB1A2);
        for v in [
            SeifertMatrix::trefoil(),
            SeifertMatrix::figure_eight(),
            SeifertMatrix::stevedore(),
            SeifertMatrix::trefoil().connected_sum(&SeifertMatrix::stevedore()),
        ] {
            let m = module_from_seifert(&v).unwrap();
            for _ in 0..5 {
                let x = random_element(&mut rng, m.generators());
                let scaled = m.scale_element(m.order(), &x).unwrap();
                assert!(m.is_zero_element(&scaled).unwrap());
            }
        }
    }

    #[test]
    fn stabilized_unknot_matrix_gives_the_zero_module() {
        let v = SeifertMatrix::new(vec![vec![0, 1], vec![0, 0]]).unwrap();
        let m = module_from_seifert(&v).unwrap();
        assert!(m.is_zero_module());
        assert!(LaurentPoly::one(&VAR).eq_up_to_unit(m.order()));
        assert!(m
            .is_zero_element(&[LaurentPoly::one(&VAR), LaurentPoly::zero(&VAR)])
            .unwrap());
        assert_eq!(m.cyclic_generator().unwrap(), None);
    }

    #[test]
    fn empty_matrix_gives_the_zero_module() {
        let m = module_from_seifert(&SeifertMatrix::unknot()).unwrap();
        assert!(m.is_zero_module());
        assert_eq!(m.generators(), 0);
        assert!(m.is_zero_element(&[]).unwrap());
    }

    #[test]
    fn link_matrices_are_rejected() {
        let v = SeifertMatrix::new(vec![vec![1]]).unwrap();
        assert!(matches!(
            module_from_seifert(&v),
            Err(Error::BadSeifert(_))
        ));
    }

    #[test]
    fn connected_sum_of_distinct_orders_is_cyclic() {
        // Coprime orders: the module is a cyclic direct sum.
        let v = SeifertMatrix::trefoil().connected_sum(&SeifertMatrix::figure_eight());
        let m = module_from_seifert(&v).unwrap();
        assert_eq!(m.dim(), 4);
        // Neither summand generator spans alone...
        assert!(!m.is_generator(&m.basis_element(0)).unwrap());
        // ...but their sum does.
        let mut x = m.basis_element(0);
        x[2] = LaurentPoly::one(&VAR);
        assert!(m.is_generator(&x).unwrap());
        assert_eq!(m.cyclic_generator().unwrap().map(|g| g.len()), Some(4));
    }

    #[test]
    fn double_trefoil_is_not_cyclic() {
        let v = SeifertMatrix::trefoil().connected_sum(&SeifertMatrix::trefoil());
        let m = module_from_seifert(&v).unwrap();
        assert_eq!(m.dim(), 4);
        assert_eq!(m.cyclic_generator().unwrap(), None);
    }

    #[test]
    fn nonzero_elements_are_detected() {
        let m = module_from_seifert(&SeifertMatrix::trefoil()).unwrap();
        assert!(!m.is_zero_element(&m.basis_element(0)).unwrap());
        let bad = vec![LaurentPoly::one(&VAR)];
        assert!(matches!(
            m.is_zero_element(&bad),
            Err(Error::BadInput(_))
        ));
        let wrong_var = vec![
            LaurentPoly::one(&["s"]),
            LaurentPoly::zero(&["s"]),
        ];
        assert!(matches!(
            m.is_zero_element(&wrong_var),
            Err(Error::VarMismatch(_, _))
        ));
    }

    #[test]
    fn row_space_tracks_rank_and_membership() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let mut rs = RowSpace::new(3);
        assert!(rs.insert(vec![q(1), q(2), q(3)]));
        assert!(rs.insert(vec![q(0), q(1), q(1)]));
        assert!(!rs.insert(vec![q(1), q(3), q(4)]));
        assert_eq!(rs.dim(), 2);
        assert!(rs.contains(&[q(2), q(5), q(7)]));
        assert!(!rs.contains(&[q(0), q(0), q(1)]));
    }

    fn random_element(rng: &mut ChaCha8Rng, n: usize) -> ModuleElement {
        (0..n)
            .map(|_| {
                let terms: Vec<(Vec<i64>, i64)> = (0..rng.random_range(0..3))
                    .map(|_| {
                        (
                            vec![rng.random_range(-2..=2i64)],
                            rng.random_range(-3..=3i64),
                        )
                    })
                    .collect();
                let refs: Vec<(&[i64], i64)> =
                    terms.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
                LaurentPoly::from_int_terms(&VAR, &refs)
            })
            .collect()
    }

    #[test]
    fn random_scaling_respects_zero_detection() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x51AB);
        let m = module_from_seifert(&SeifertMatrix::stevedore()).unwrap();
        for _ in 0..10 {
            let x = random_element(&mut rng, 2);
            // x and (t^3)x vanish together: t is a unit on the module.
            let shifted = m
                .scale_element(&LaurentPoly::from_int_terms(&VAR, &[(&[3], 1)]), &x)
                .unwrap();
            assert_eq!(
                m.is_zero_element(&x).unwrap(),
                m.is_zero_element(&shifted).unwrap()
            );
        }
    }

    #[test]
    fn order_has_positive_degree_exactly_when_module_is_nonzero() {
        for (v, expect_zero) in [
            (SeifertMatrix::trefoil(), false),
            (SeifertMatrix::new(vec![vec![0, 1], vec![0, 0]]).unwrap(), true),
        ] {
            let m = module_from_seifert(&v).unwrap();
            assert_eq!(m.is_zero_module(), expect_zero);
            assert_eq!(m.order_monic().deg().unwrap_or(0) == 0, expect_zero);
        }
    }
}
