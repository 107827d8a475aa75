//! Cyclotomic polynomials, their real-subfield minimal polynomials, and exact
//! arithmetic in Q(zeta_d) under a chosen complex embedding.
//!
//! An element is a polynomial in zeta reduced mod the d-th cyclotomic
//! polynomial. The embedding index k (coprime to d) fixes zeta = exp(2*pi*i*k/d),
//! which is what gives real elements a well-defined sign.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::algebraic::sturm_isolate;
use super::interval::Interval;
use super::unipoly::QPoly;
use crate::{Error, Result};

fn divisors(d: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut i = 1;
    while i * i <= d {
        if d % i == 0 {
            out.push(i);
            if i != d / i {
                out.push(d / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Euler totient by trial factorization.
pub fn euler_phi(d: u64) -> u64 {
    let mut n = d;
    let mut phi = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            phi -= phi / p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

fn xn_minus_one(n: u64) -> QPoly {
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    coeffs[0] = -BigRational::one();
    coeffs[n as usize] = BigRational::one();
    QPoly::new(coeffs)
}

/// The d-th cyclotomic polynomial (monic, integer coefficients).
pub fn cyclotomic_poly(d: u64) -> QPoly {
    assert!(d >= 1);
    let mut memo: BTreeMap<u64, QPoly> = BTreeMap::new();
    cyclotomic_memo(d, &mut memo)
}

fn cyclotomic_memo(d: u64, memo: &mut BTreeMap<u64, QPoly>) -> QPoly {
    if let Some(p) = memo.get(&d) {
        return p.clone();
    }
    let mut p = xn_minus_one(d);
    for e in divisors(d) {
        if e != d {
            let phi_e = cyclotomic_memo(e, memo);
            p = p.div_exact(&phi_e);
        }
    }
    memo.insert(d, p.clone());
    p
}

/// Minimal polynomial over Q of 2*cos(2*pi/d), monic in one variable.
///
/// Uses the palindromic symmetry of the cyclotomic polynomial together with
/// the recurrence x^j + x^-j = C_j(x + x^-1), C_0 = 2, C_1 = u,
/// C_{j+1} = u*C_j - C_{j-1}.
pub fn real_cyclotomic_poly(d: u64) -> QPoly {
    assert!(d >= 1);
    if d == 1 {
        // 2 cos(2 pi) = 2
        return QPoly::new(vec![-BigRational::from_integer(2.into()), BigRational::one()]);
    }
    if d == 2 {
        // 2 cos(pi) = -2
        return QPoly::new(vec![BigRational::from_integer(2.into()), BigRational::one()]);
    }
    let phi = cyclotomic_poly(d);
    let deg = phi.deg().expect("cyclotomic polynomial is nonzero");
    debug_assert!(deg % 2 == 0);
    let m = deg / 2;
    // Chebyshev-style basis: c_j(u) with c_j(2cos t) = 2cos(j t)
    let mut c_prev = QPoly::constant(BigRational::from_integer(2.into()));
    let mut c_cur = QPoly::x();
    let mut out = c_prev.scale(&BigRational::new(1.into(), 2.into())).scale(&phi.coeff(m));
    for j in 1..=m {
        out = out.add(&c_cur.scale(&phi.coeff(m + j)));
        let next = QPoly::x().mul(&c_cur).sub(&c_prev);
        c_prev = c_cur;
        c_cur = next;
    }
    out
}

/// Split off all cyclotomic factors of `p`.
///
/// Returns the list of (d, multiplicity) with Phi_d^multiplicity dividing `p`,
/// plus the cyclotomic-free remainder. The search range is finite because
/// phi(d) <= deg(p) forces d <= 2*deg(p)^2.
pub fn cyclotomic_peel(p: &QPoly) -> (Vec<(u64, usize)>, QPoly) {
    assert!(!p.is_zero());
    let deg0 = p.deg().unwrap_or(0) as u64;
    let mut rem = p.clone();
    let mut found = vec![];
    if deg0 == 0 {
        return (found, rem);
    }
    let d_max = 2 * deg0 * deg0;
    for d in 1..=d_max {
        let deg_rem = rem.deg().unwrap_or(0) as u64;
        if deg_rem == 0 {
            break;
        }
        if euler_phi(d) > deg_rem {
            continue;
        }
        let phi = cyclotomic_poly(d);
        let mut mult = 0;
        loop {
            let (q, r) = rem.divrem(&phi);
            if r.is_zero() {
                rem = q;
                mult += 1;
            } else {
                break;
            }
        }
        if mult > 0 {
            found.push((d, mult));
        }
    }
    (found, rem)
}

/// An element of Q(zeta_d): polynomial in zeta reduced mod Phi_d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycElem {
    rep: QPoly,
}

impl CycElem {
    pub fn rep(&self) -> &QPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}

/// The cyclotomic field Q(zeta_d) with the embedding zeta = exp(2*pi*i*k/d).
#[derive(Debug, Clone)]
pub struct CycField {
    d: u64,
    k: u64,
    phi: QPoly,
}

impl CycField {
    /// Requires 1 <= k < d (or k = 1 = d) with gcd(k, d) = 1.
    pub fn new(d: u64, k: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::BadOrder(0));
        }
        let k = if d == 1 { 0 } else { k % d };
        if d > 1 && (k == 0 || num_integer::gcd(k, d) != 1) {
            return Err(Error::BadInput(format!(
                "embedding index {k} is not coprime to order {d}"
            )));
        }
        Ok(CycField {
            d,
            k,
            phi: cyclotomic_poly(d),
        })
    }

    pub fn order(&self) -> u64 {
        self.d
    }

    pub fn embedding(&self) -> u64 {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.phi.deg().unwrap_or(0)
    }

    fn reduce(&self, p: &QPoly) -> CycElem {
        CycElem { rep: p.rem(&self.phi) }
    }

    pub fn from_qpoly(&self, p: &QPoly) -> CycElem {
        self.reduce(p)
    }

    pub fn from_rat(&self, q: &BigRational) -> CycElem {
        self.reduce(&QPoly::constant(q.clone()))
    }

    pub fn zero(&self) -> CycElem {
        CycElem { rep: QPoly::zero() }
    }

    pub fn one(&self) -> CycElem {
        self.from_rat(&BigRational::one())
    }

    /// zeta^j for any integer j (negative powers via zeta^d = 1).
    pub fn zeta_pow(&self, j: i64) -> CycElem {
        let e = j.rem_euclid(self.d as i64) as usize;
        self.reduce(&QPoly::monomial(BigRational::one(), e))
    }

    pub fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem { rep: a.rep.add(&b.rep) }
    }

    pub fn sub(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem { rep: a.rep.sub(&b.rep) }
    }

    pub fn neg(&self, a: &CycElem) -> CycElem {
        CycElem { rep: a.rep.neg() }
    }

    pub fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        self.reduce(&a.rep.mul(&b.rep))
    }

    pub fn scale(&self, a: &CycElem, s: &BigRational) -> CycElem {
        CycElem { rep: a.rep.scale(s) }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm; the
    /// cyclotomic modulus is irreducible, so every nonzero element inverts.
    pub fn inv(&self, a: &CycElem) -> Result<CycElem> {
        if a.is_zero() {
            return Err(Error::BadInput("division by zero in cyclotomic field".into()));
        }
        if self.degree() == 0 {
            return Err(Error::Inconsistent("degenerate cyclotomic modulus".into()));
        }
        let (g, u, _) = xgcd(&a.rep, &self.phi);
        if g.deg() != Some(0) {
            return Err(Error::Inconsistent(
                "cyclotomic modulus shares a factor with a nonzero element".into(),
            ));
        }
        let ginv = BigRational::one() / g.coeff(0);
        Ok(self.reduce(&u.scale(&ginv)))
    }

    pub fn div(&self, a: &CycElem, b: &CycElem) -> Result<CycElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Complex conjugation zeta -> zeta^(d-1).
    pub fn conj(&self, a: &CycElem) -> CycElem {
        let mut folded = vec![BigRational::zero(); self.d as usize];
        for (i, c) in a.rep.coeffs.iter().enumerate() {
            let e = ((self.d as usize) - (i % self.d as usize)) % self.d as usize;
            folded[e] = &folded[e] + c;
        }
        self.reduce(&QPoly::new(folded))
    }

    pub fn is_real(&self, a: &CycElem) -> bool {
        self.conj(a) == *a
    }

    /// Exact sign of a real element under this field's embedding.
    ///
    /// The element is rewritten as a rational polynomial P in
    /// c = zeta + zeta^-1 = 2*cos(2*pi*k/d); then P is evaluated with certified
    /// sign at the appropriate root of the real-subfield minimal polynomial.
    pub fn sign_real(&self, a: &CycElem) -> Result<i32> {
        if !self.is_real(a) {
            return Err(Error::Inconsistent(
                "sign requested for a non-real cyclotomic element".into(),
            ));
        }
        if a.is_zero() {
            return Ok(0);
        }
        let d = self.d as usize;
        // Fold exponents into 0..d without cyclotomic reduction, then
        // symmetrize: q(x) = p(x) + p(x^(d-1)) represents 2a and has
        // coefficients symmetric under m -> d - m.
        let mut q = vec![BigRational::zero(); d.max(1)];
        for (i, c) in a.rep.coeffs.iter().enumerate() {
            q[i % d] = &q[i % d] + c;
            let e = (d - (i % d)) % d;
            q[e] = &q[e] + c;
        }
        // 2a = q_0 (+ q_{d/2} * (-1) when d even) + sum_{m} q_m * C_m(c)
        let mut big_p = QPoly::constant(q[0].clone());
        if d % 2 == 0 && d >= 2 {
            big_p = big_p.sub(&QPoly::constant(q[d / 2].clone()));
        }
        let mut c_prev = QPoly::constant(BigRational::from_integer(2.into()));
        let mut c_cur = QPoly::x();
        let half = (d - 1) / 2;
        for m in 1..=half {
            big_p = big_p.add(&c_cur.scale(&q[m]));
            let next = QPoly::x().mul(&c_cur).sub(&c_prev);
            c_prev = c_cur;
            c_cur = next;
        }
        if big_p.is_zero() {
            return Ok(0);
        }
        if big_p.deg() == Some(0) {
            return Ok(super::rat_sign(&big_p.coeff(0)));
        }
        let psi = real_cyclotomic_poly(self.d);
        let reduced = big_p.rem(&psi);
        if reduced.is_zero() {
            return Ok(0);
        }
        // Locate c = 2cos(2*pi*k/d) among the roots of psi: its roots are
        // 2cos(2*pi*m/d) over residues m coprime to d with m <= d/2, and cosine
        // is strictly decreasing there, so ascending m means descending roots.
        let k_fold = {
            let k = self.k % self.d;
            k.min(self.d - k)
        };
        let mut residues: Vec<u64> = (1..=self.d / 2)
            .filter(|&m| num_integer::gcd(m, self.d) == 1)
            .collect();
        if self.d == 1 {
            residues = vec![0];
        }
        let pos_desc = residues
            .iter()
            .position(|&m| m == k_fold)
            .ok_or_else(|| Error::Inconsistent("embedding residue not located".into()))?;
        let psi_int = psi.to_ipoly_primitive();
        let mut roots = sturm_isolate(&psi_int);
        if roots.len() != residues.len() {
            return Err(Error::Inconsistent(
                "real cyclotomic root count mismatch".into(),
            ));
        }
        let idx_asc = roots.len() - 1 - pos_desc;
        let mut c_root = roots.swap_remove(idx_asc);
        // Certified sign of reduced(c_root): interval Horner with refinement.
        // Terminates because the reduced polynomial has degree below deg(psi),
        // hence cannot vanish at a root of the irreducible psi.
        for _ in 0..100_000 {
            if let Some(exact) = c_root.as_rational() {
                return Ok(super::rat_sign(&reduced.eval(exact)));
            }
            let iv = eval_on_interval(&reduced, &c_root.interval());
            if let Some(s) = iv.sign() {
                return Ok(s);
            }
            c_root.refine();
        }
        Err(Error::Inconsistent(
            "sign refinement failed to converge".into(),
        ))
    }

    /// Decimal-ish approximation of a real element, for diagnostics only.
    pub fn approx_real(&self, a: &CycElem) -> Result<f64> {
        if !self.is_real(a) {
            return Err(Error::Inconsistent("approx of non-real element".into()));
        }
        let theta = 2.0 * std::f64::consts::PI * (self.k as f64) / (self.d as f64);
        let mut val = 0.0;
        for (i, c) in a.rep.coeffs.iter().enumerate() {
            let cf: f64 = c.numer().to_string().parse::<f64>().unwrap_or(f64::NAN)
                / c.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
            val += cf * (theta * i as f64).cos();
        }
        Ok(val)
    }
}

fn eval_on_interval(p: &QPoly, x: &Interval) -> Interval {
    let deg = match p.deg() {
        None => return Interval::point(BigRational::zero()),
        Some(d) => d,
    };
    let mut acc = Interval::point(p.coeff(deg));
    for i in (0..deg).rev() {
        acc = acc.mul(x).add(&Interval::point(p.coeff(i)));
    }
    acc
}

/// Extended Euclid on rational polynomials: returns (g, u, v) with
/// g = u*a + v*b and g monic (or zero).
fn xgcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut u0 = QPoly::one();
    let mut u1 = QPoly::zero();
    let mut v0 = QPoly::zero();
    let mut v1 = QPoly::one();
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let nu = u0.sub(&q.mul(&u1));
        let nv = v0.sub(&q.mul(&v1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = nu;
        v0 = v1;
        v1 = nv;
    }
    if r0.is_zero() {
        return (r0, u0, v0);
    }
    let lead = r0.lc();
    let inv = BigRational::one() / lead;
    (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ipoly_str(p: &QPoly) -> Vec<i64> {
        p.coeffs
            .iter()
            .map(|c| {
                assert!(c.denom() == &BigInt::one());
                c.numer().to_string().parse().unwrap()
            })
            .collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(ipoly_str(&cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(ipoly_str(&cyclotomic_poly(2)), vec![1, 1]);
        assert_eq!(ipoly_str(&cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(ipoly_str(&cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(ipoly_str(&cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(ipoly_str(&cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn cyclotomic_product_identity() {
        for n in [12u64, 30] {
            let mut prod = QPoly::one();
            for e in divisors(n) {
                prod = prod.mul(&cyclotomic_poly(e));
            }
            assert_eq!(prod, xn_minus_one(n), "product over divisors of {n}");
        }
    }

    #[test]
    fn phi_degrees() {
        for d in 1..=40u64 {
            assert_eq!(
                cyclotomic_poly(d).deg().unwrap() as u64,
                euler_phi(d),
                "deg of cyclotomic {d}"
            );
        }
    }

    #[test]
    fn real_minimal_polys() {
        // 2cos(2pi/5) is a root of u^2 + u - 1
        assert_eq!(ipoly_str(&real_cyclotomic_poly(5)), vec![-1, 1, 1]);
        // 2cos(pi/3) = 1
        assert_eq!(ipoly_str(&real_cyclotomic_poly(6)), vec![-1, 1]);
        // 2cos(2pi/7): u^3 + u^2 - 2u - 1
        assert_eq!(ipoly_str(&real_cyclotomic_poly(7)), vec![-1, -2, 1, 1]);
        // 2cos(pi/6) = sqrt(3): u^2 - 3
        assert_eq!(ipoly_str(&real_cyclotomic_poly(12)), vec![-3, 0, 1]);
        assert_eq!(ipoly_str(&real_cyclotomic_poly(1)), vec![-2, 1]);
        assert_eq!(ipoly_str(&real_cyclotomic_poly(2)), vec![2, 1]);
    }

    #[test]
    fn peel_mixed_polynomial() {
        // (x^2 - x + 1)^2 (x + 1) (x^2 - 2)
        let p = cyclotomic_poly(6)
            .mul(&cyclotomic_poly(6))
            .mul(&cyclotomic_poly(2))
            .mul(&QPoly::new(vec![
                BigRational::from_integer((-2).into()),
                BigRational::zero(),
                BigRational::one(),
            ]));
        let (factors, rem) = cyclotomic_peel(&p);
        assert_eq!(factors, vec![(2, 1), (6, 2)]);
        assert_eq!(ipoly_str(&rem), vec![-2, 0, 1]);
    }

    #[test]
    fn field_arithmetic_order_five() {
        let f = CycField::new(5, 1).unwrap();
        let z = f.zeta_pow(1);
        let z4 = f.zeta_pow(4);
        assert_eq!(f.mul(&z, &z4), f.one());
        assert_eq!(f.conj(&z), z4);
        assert_eq!(f.inv(&z).unwrap(), z4);
        // 1 + z + z^2 + z^3 + z^4 = 0
        let mut s = f.zero();
        for j in 0..5 {
            s = f.add(&s, &f.zeta_pow(j));
        }
        assert!(s.is_zero());
        assert!(f.inv(&f.zero()).is_err());
    }

    #[test]
    fn embedding_changes_signs() {
        // c = zeta + zeta^-1 is 2cos(72deg) > 0 under k=1 but 2cos(144deg) < 0
        // under k=2.
        let c1 = {
            let f = CycField::new(5, 1).unwrap();
            let c = f.add(&f.zeta_pow(1), &f.zeta_pow(-1));
            assert!(f.is_real(&c));
            f.sign_real(&c).unwrap()
        };
        let c2 = {
            let f = CycField::new(5, 2).unwrap();
            let c = f.add(&f.zeta_pow(1), &f.zeta_pow(-1));
            f.sign_real(&c).unwrap()
        };
        assert_eq!(c1, 1);
        assert_eq!(c2, -1);
    }

    #[test]
    fn sign_detects_exact_zero() {
        // zeta + zeta^5 = 2cos(pi/3) = 1 in Q(zeta_6), so zeta + zeta^5 - 1 = 0.
        let f = CycField::new(6, 1).unwrap();
        let e = f.sub(&f.add(&f.zeta_pow(1), &f.zeta_pow(5)), &f.one());
        assert!(e.is_zero(), "reduction mod the cyclotomic already kills it");
        // A nonzero real combination: zeta + zeta^5 + 1 = 2 > 0.
        let e2 = f.add(&f.add(&f.zeta_pow(1), &f.zeta_pow(5)), &f.one());
        assert_eq!(f.sign_real(&e2).unwrap(), 1);
        // And the imaginary element zeta - zeta^5 has no sign.
        let im = f.sub(&f.zeta_pow(1), &f.zeta_pow(5));
        assert!(f.sign_real(&im).is_err());
    }

    #[test]
    fn sign_on_irrational_values() {
        // In Q(zeta_12): zeta + zeta^-1 = 2cos(pi/6) = sqrt(3) under k=1.
        let f = CycField::new(12, 1).unwrap();
        let c = f.add(&f.zeta_pow(1), &f.zeta_pow(-1));
        assert_eq!(f.sign_real(&c).unwrap(), 1);
        // sqrt(3) - 2 < 0
        let e = f.sub(&c, &f.from_rat(&BigRational::from_integer(2.into())));
        assert_eq!(f.sign_real(&e).unwrap(), -1);
        // Under k = 5: 2cos(5pi/6) = -sqrt(3) < 0.
        let f5 = CycField::new(12, 5).unwrap();
        let c5 = f5.add(&f5.zeta_pow(1), &f5.zeta_pow(-1));
        assert_eq!(f5.sign_real(&c5).unwrap(), -1);
    }

    #[test]
    fn field_order_one_and_two() {
        let f1 = CycField::new(1, 0).unwrap();
        assert_eq!(f1.degree(), 1);
        let two = f1.from_rat(&BigRational::from_integer(2.into()));
        assert_eq!(f1.sign_real(&two).unwrap(), 1);
        let f2 = CycField::new(2, 1).unwrap();
        let m = f2.sub(&f2.zero(), &f2.one());
        assert_eq!(f2.sign_real(&m).unwrap(), -1);
        assert_eq!(f2.zeta_pow(1), m, "zeta = -1 at order two");
    }
}
