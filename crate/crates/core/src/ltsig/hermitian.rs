//! Hermitian forms `(1-w)V + (1-conj w)V^T` attached to a Seifert matrix at a
//! point `w` of the unit circle, and their exact inertia.
//!
//! Two evaluation backends share one congruence-elimination routine:
//! Gaussian rationals for rationally parametrized points (and `w = -1`), and
//! cyclotomic fields for roots of unity. Both are exact, so the inertia is
//! correct even at singular points of the form.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::exactnum::{rat_sign, CycElem, CycField, GaussianRational};
use crate::knotio::SeifertMatrix;
use crate::{Error, Result};

/// A point on the unit circle, in one of the exact representations the
/// evaluation backends understand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CirclePoint {
    /// The point `((1 - s^2) + 2si)/(1 + s^2)`; as `s` ranges over the
    /// rationals this reaches every rational point of the circle except `-1`.
    Param(BigRational),
    /// The point `-1`, which the rational parametrization misses.
    MinusOne,
    /// The point `e^{2 pi i k/p}`.
    RootOfUnity { k: u64, p: u64 },
}

impl CirclePoint {
    /// True exactly for the point `1`.
    pub fn is_one(&self) -> bool {
        match self {
            CirclePoint::Param(s) => s.is_zero(),
            CirclePoint::MinusOne => false,
            CirclePoint::RootOfUnity { k, p } => *p != 0 && k % p == 0,
        }
    }
}

impl std::fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CirclePoint::Param(s) => write!(f, "circle point with parameter {}", s),
            CirclePoint::MinusOne => write!(f, "-1"),
            CirclePoint::RootOfUnity { k, p } => write!(f, "exp(2*pi*i*{}/{})", k, p),
        }
    }
}

/// Counts of positive, negative, and zero eigenvalues of a hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub pos: usize,
    pub neg: usize,
    pub null: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.pos as i64 - self.neg as i64
    }

    pub fn size(&self) -> usize {
        self.pos + self.neg + self.null
    }

    pub fn is_definite(&self) -> bool {
        self.null == 0 && (self.pos == 0 || self.neg == 0)
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(+{}, -{}, 0:{})", self.pos, self.neg, self.null)
    }
}

/// Field operations the congruence elimination needs. Implemented by the
/// Gaussian-rational and cyclotomic backends; `self` carries any field context
/// (for cyclotomics, the modulus).
trait HermitianOps {
    type Elem: Clone;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn conj(&self, a: &Self::Elem) -> Self::Elem;
    /// Exact sign of an element fixed by conjugation (i.e. real).
    fn sign_real(&self, a: &Self::Elem) -> Result<i32>;
    /// Units `u` such that for any nonzero `h`, at least one of them makes
    /// `u*h + conj(u*h)` nonzero. Used to manufacture a diagonal pivot.
    fn mixing_units(&self) -> Vec<Self::Elem>;
}

struct GaussianOps;

impl HermitianOps for GaussianOps {
    type Elem = GaussianRational;

    fn is_zero(&self, a: &GaussianRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a + b
    }
    fn sub(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a - b
    }
    fn mul(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a * b
    }
    fn div(&self, a: &GaussianRational, b: &GaussianRational) -> Result<GaussianRational> {
        if b.is_zero() {
            return Err(Error::Inconsistent(
                "division by zero during hermitian elimination".into(),
            ));
        }
        Ok(a / b)
    }
    fn conj(&self, a: &GaussianRational) -> GaussianRational {
        a.conj()
    }
    fn sign_real(&self, a: &GaussianRational) -> Result<i32> {
        if !a.is_real() {
            return Err(Error::Inconsistent(
                "hermitian pivot has a nonzero imaginary part".into(),
            ));
        }
        Ok(rat_sign(&a.re))
    }
    fn mixing_units(&self) -> Vec<GaussianRational> {
        vec![GaussianRational::one(), GaussianRational::i()]
    }
}

impl HermitianOps for CycField {
    type Elem = CycElem;

    fn is_zero(&self, a: &CycElem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycField::add(self, a, b)
    }
    fn sub(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycField::sub(self, a, b)
    }
    fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycField::mul(self, a, b)
    }
    fn div(&self, a: &CycElem, b: &CycElem) -> Result<CycElem> {
        CycField::div(self, a, b)
    }
    fn conj(&self, a: &CycElem) -> CycElem {
        CycField::conj(self, a)
    }
    fn sign_real(&self, a: &CycElem) -> Result<i32> {
        if !self.is_real(a) {
            return Err(Error::Inconsistent(
                "hermitian pivot is not fixed by conjugation".into(),
            ));
        }
        CycField::sign_real(self, a)
    }
    fn mixing_units(&self) -> Vec<CycElem> {
        vec![self.one(), self.zeta_pow(1)]
    }
}

/// Congruence elimination. Diagonal pivots contribute their sign; when the
/// active diagonal is entirely zero but an off-diagonal entry `h` survives,
/// the basis change `e_i <- e_i + u*e_j` creates the diagonal entry
/// `u*h + conj(u*h)`, nonzero for a suitable unit `u`, and elimination
/// resumes. A remaining all-zero block is the kernel.
fn inertia_generic<F: HermitianOps>(ops: &F, mut h: Vec<Vec<F::Elem>>) -> Result<Inertia> {
    let n = h.len();
    for row in &h {
        if row.len() != n {
            return Err(Error::BadInput("hermitian matrix must be square".into()));
        }
    }
    let mut active: Vec<usize> = (0..n).collect();
    let mut inertia = Inertia {
        pos: 0,
        neg: 0,
        null: 0,
    };
    'outer: while !active.is_empty() {
        if let Some(idx) = active.iter().position(|&k| !ops.is_zero(&h[k][k])) {
            let k = active.remove(idx);
            let pivot = h[k][k].clone();
            match ops.sign_real(&pivot)? {
                1 => inertia.pos += 1,
                -1 => inertia.neg += 1,
                _ => {
                    return Err(Error::Inconsistent(
                        "nonzero hermitian pivot with indeterminate sign".into(),
                    ))
                }
            }
            let row_k: Vec<F::Elem> = active.iter().map(|&j| h[k][j].clone()).collect();
            let col_k: Vec<F::Elem> = active.iter().map(|&i| h[i][k].clone()).collect();
            for (ai, &i) in active.iter().enumerate() {
                for (aj, &j) in active.iter().enumerate() {
                    let t = ops.div(&ops.mul(&col_k[ai], &row_k[aj]), &pivot)?;
                    h[i][j] = ops.sub(&h[i][j], &t);
                }
            }
            continue;
        }
        // The active diagonal is all zero; look for a surviving off-diagonal
        // entry to mix into a pivot.
        let mut pair = None;
        for (ii, &i) in active.iter().enumerate() {
            for &j in &active[ii + 1..] {
                if !ops.is_zero(&h[i][j]) {
                    pair = Some((i, j));
                    break;
                }
            }
            if pair.is_some() {
                break;
            }
        }
        let Some((i, j)) = pair else {
            // The active block vanishes identically: it is the kernel.
            inertia.null += active.len();
            break;
        };
        let hij = h[i][j].clone();
        for u in ops.mixing_units() {
            let diag = ops.add(
                &ops.mul(&u, &hij),
                &ops.mul(&ops.conj(&u), &ops.conj(&hij)),
            );
            if ops.is_zero(&diag) {
                continue;
            }
            // Apply e_i <- e_i + u*e_j: first the column, then the row, so the
            // corner picks up all four correction terms.
            for &w in &active {
                let t = ops.mul(&u, &h[w][j]);
                h[w][i] = ops.add(&h[w][i], &t);
            }
            let ubar = ops.conj(&u);
            for &z in &active {
                let t = ops.mul(&ubar, &h[j][z]);
                h[i][z] = ops.add(&h[i][z], &t);
            }
            continue 'outer;
        }
        return Err(Error::Inconsistent(
            "no mixing unit produced a pivot from a nonzero off-diagonal entry".into(),
        ));
    }
    Ok(inertia)
}

/// Inertia of a hermitian matrix over the Gaussian rationals.
pub fn inertia_rational(h: Vec<Vec<GaussianRational>>) -> Result<Inertia> {
    inertia_generic(&GaussianOps, h)
}

/// Inertia of a hermitian matrix over a cyclotomic field.
pub fn inertia_cyclotomic(field: &CycField, h: Vec<Vec<CycElem>>) -> Result<Inertia> {
    inertia_generic(field, h)
}

/// The form `(1-w)V + (1-conj w)V^T` over the Gaussian rationals. `w` must lie
/// on the unit circle for the result to be hermitian.
pub fn hermitian_form_rational(
    v: &SeifertMatrix,
    omega: &GaussianRational,
) -> Result<Vec<Vec<GaussianRational>>> {
    if !omega.on_unit_circle() {
        return Err(Error::BadInput(format!(
            "evaluation point {} is not on the unit circle",
            omega
        )));
    }
    let n = v.size();
    let a = &GaussianRational::one() - omega;
    let b = a.conj();
    let mut h = vec![vec![GaussianRational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let vij = GaussianRational::from_int(v.get(i, j));
            let vji = GaussianRational::from_int(v.get(j, i));
            h[i][j] = &(&a * &vij) + &(&b * &vji);
        }
    }
    Ok(h)
}

/// The form `(1-z)V + (1-conj z)V^T` at the field's distinguished root of
/// unity `z`.
pub fn hermitian_form_cyclotomic(v: &SeifertMatrix, field: &CycField) -> Vec<Vec<CycElem>> {
    let n = v.size();
    let a = field.sub(&field.one(), &field.zeta_pow(1));
    let b = field.conj(&a);
    let mut h = vec![vec![field.zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let vij = field.from_rat(&BigRational::from_integer(v.get(i, j).into()));
            let vji = field.from_rat(&BigRational::from_integer(v.get(j, i).into()));
            h[i][j] = field.add(&field.mul(&a, &vij), &field.mul(&b, &vji));
        }
    }
    h
}

/// Exact inertia of the hermitian form of `v` at a circle point, dispatching
/// to whichever backend represents the point exactly.
pub fn inertia_at(v: &SeifertMatrix, point: &CirclePoint) -> Result<Inertia> {
    match point {
        CirclePoint::Param(s) => {
            let omega = GaussianRational::circle_param(s);
            inertia_rational(hermitian_form_rational(v, &omega)?)
        }
        CirclePoint::MinusOne => {
            let omega = GaussianRational::from_int(-1);
            inertia_rational(hermitian_form_rational(v, &omega)?)
        }
        CirclePoint::RootOfUnity { k, p } => {
            if *p == 0 {
                return Err(Error::BadOrder(0));
            }
            let k = k % p;
            if k == 0 {
                // The form at 1 vanishes identically.
                return Ok(Inertia {
                    pos: 0,
                    neg: 0,
                    null: v.size(),
                });
            }
            let g = k.gcd(p);
            let (d, k) = (p / g, k / g);
            if d == 2 {
                return inertia_at(v, &CirclePoint::MinusOne);
            }
            let field = CycField::new(d, k)?;
            inertia_cyclotomic(&field, hermitian_form_cyclotomic(v, &field))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn inertia(pos: usize, neg: usize, null: usize) -> Inertia {
        Inertia { pos, neg, null }
    }

    #[test]
    fn trefoil_form_is_negative_definite_at_minus_one() {
        let v = SeifertMatrix::trefoil();
        let at = inertia_at(&v, &CirclePoint::MinusOne).unwrap();
        assert_eq!(at, inertia(0, 2, 0));
        assert_eq!(at.signature(), -2);
    }

    #[test]
    fn trefoil_form_at_i_and_at_sixth_root() {
        let v = SeifertMatrix::trefoil();
        // At w = i (parameter s = 1) the form is negative definite.
        let at_i = inertia_at(&v, &CirclePoint::Param(q(1, 1))).unwrap();
        assert_eq!(at_i, inertia(0, 2, 0));
        // At the primitive sixth root the form is singular with one negative
        // eigenvalue: this is a jump point of the signature.
        let at_z6 = inertia_at(&v, &CirclePoint::RootOfUnity { k: 1, p: 6 }).unwrap();
        assert_eq!(at_z6, inertia(0, 1, 1));
        // At the primitive cube root the form is negative definite again.
        let at_z3 = inertia_at(&v, &CirclePoint::RootOfUnity { k: 1, p: 3 }).unwrap();
        assert_eq!(at_z3, inertia(0, 2, 0));
        // k/p reduction: 2/6 names the same point as 1/3.
        let reduced = inertia_at(&v, &CirclePoint::RootOfUnity { k: 2, p: 6 }).unwrap();
        assert_eq!(reduced, at_z3);
    }

    #[test]
    fn form_at_one_is_zero() {
        let v = SeifertMatrix::trefoil();
        let at = inertia_at(&v, &CirclePoint::RootOfUnity { k: 5, p: 5 }).unwrap();
        assert_eq!(at, inertia(0, 0, 2));
        let at_param = inertia_at(&v, &CirclePoint::Param(q(0, 1))).unwrap();
        assert_eq!(at_param, inertia(0, 0, 2));
        assert!(CirclePoint::RootOfUnity { k: 10, p: 5 }.is_one());
        assert!(!CirclePoint::MinusOne.is_one());
    }

    #[test]
    fn zero_order_is_rejected() {
        let v = SeifertMatrix::trefoil();
        let err = inertia_at(&v, &CirclePoint::RootOfUnity { k: 1, p: 0 }).unwrap_err();
        assert!(matches!(err, Error::BadOrder(0)));
    }

    #[test]
    fn genus_one_forms_with_zero_signature() {
        // Both the figure-eight and stevedore matrices are indefinite at -1.
        for v in [SeifertMatrix::figure_eight(), SeifertMatrix::stevedore()] {
            let at = inertia_at(&v, &CirclePoint::MinusOne).unwrap();
            assert_eq!(at, inertia(1, 1, 0));
        }
    }

    #[test]
    fn hyperbolic_block_needs_a_mixing_unit() {
        // Zero diagonal with a real off-diagonal entry: the plane [[0,h],[h,0]].
        let h = vec![
            vec![GaussianRational::zero(), GaussianRational::from_int(3)],
            vec![GaussianRational::from_int(3), GaussianRational::zero()],
        ];
        assert_eq!(inertia_rational(h).unwrap(), inertia(1, 1, 0));
        // Zero diagonal with a purely imaginary off-diagonal entry: the first
        // mixing unit fails and the backend must fall back to i.
        let h = vec![
            vec![GaussianRational::zero(), GaussianRational::i()],
            vec![-&GaussianRational::i(), GaussianRational::zero()],
        ];
        assert_eq!(inertia_rational(h).unwrap(), inertia(1, 1, 0));
    }

    #[test]
    fn zero_block_is_kernel() {
        let z = || GaussianRational::zero();
        let h = vec![vec![z(), z()], vec![z(), z()]];
        assert_eq!(inertia_rational(h).unwrap(), inertia(0, 0, 2));
        assert_eq!(inertia_rational(vec![]).unwrap(), inertia(0, 0, 0));
    }

    #[test]
    fn complex_diagonal_is_rejected() {
        let h = vec![vec![GaussianRational::i()]];
        assert!(matches!(
            inertia_rational(h),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn off_circle_point_is_rejected() {
        let v = SeifertMatrix::trefoil();
        let w = GaussianRational::from_int(2);
        assert!(matches!(
            hermitian_form_rational(&v, &w),
            Err(Error::BadInput(_))
        ));
    }

    #[test]
    fn cyclotomic_and_rational_backends_agree_at_shared_points() {
        // i = e^{2 pi i / 4} is reachable by both backends.
        let vs = [
            SeifertMatrix::trefoil(),
            SeifertMatrix::figure_eight(),
            SeifertMatrix::stevedore(),
            SeifertMatrix::trefoil().connected_sum(&SeifertMatrix::figure_eight()),
        ];
        for v in &vs {
            let rational = inertia_at(v, &CirclePoint::Param(q(1, 1))).unwrap();
            let field = CycField::new(4, 1).unwrap();
            let cyclotomic =
                inertia_cyclotomic(&field, hermitian_form_cyclotomic(v, &field)).unwrap();
            assert_eq!(rational, cyclotomic);
        }
    }
}
