//! Sparse multivariate Laurent polynomials over Q.
//!
//! Terms live in a BTreeMap keyed by exponent vectors (lex order), so every
//! polynomial has one canonical representation: no zero coefficients, exponent
//! length equal to the variable count. The bar involution inverts every
//! variable. "Equal up to units" is plain equality after [`LaurentPoly::normalized`].

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::unipoly::{IPoly, QPoly};
use super::{format_rat, parse_rat};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

impl LaurentPoly {
    pub fn zero(vars: &[&str]) -> Self {
        LaurentPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; p.vars.len()], c);
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn int(vars: &[&str], n: i64) -> Self {
        Self::constant(vars, BigRational::from_integer(n.into()))
    }

    /// The i-th variable as a polynomial.
    pub fn var(vars: &[&str], i: usize) -> Self {
        let mut exp = vec![0i64; vars.len()];
        exp[i] = 1;
        Self::monomial(vars, exp, BigRational::one())
    }

    pub fn monomial(vars: &[&str], exp: Vec<i64>, coef: BigRational) -> Self {
        let mut p = Self::zero(vars);
        assert_eq!(exp.len(), p.vars.len(), "exponent length mismatch");
        p.add_term(exp, coef);
        p
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents are summed.
    pub fn from_terms(vars: &[&str], terms: Vec<(Vec<i64>, BigRational)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent length mismatch");
            p.add_term(e, c);
        }
        p
    }

    /// Integer-coefficient convenience used all over the tests.
    pub fn from_int_terms(vars: &[&str], terms: &[(&[i64], i64)]) -> Self {
        Self::from_terms(
            vars,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), BigRational::from_integer((*c).into())))
                .collect(),
        )
    }

    fn add_term(&mut self, exp: Vec<i64>, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp);
        match entry {
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

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Same polynomial with variables renamed positionally.
    pub fn rename_vars(&self, new: &[&str]) -> Result<Self> {
        if new.len() != self.vars.len() {
            return Err(Error::VarMismatch(
                self.vars.clone(),
                new.iter().map(|s| s.to_string()).collect(),
            ));
        }
        Ok(LaurentPoly {
            vars: new.iter().map(|s| s.to_string()).collect(),
            terms: self.terms.clone(),
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    /// Units of Q[x1^±1, ..., xn^±1] are the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff_of(&self, exp: &[i64]) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn same_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VarMismatch(self.vars.clone(), other.vars.clone()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Bar involution: every variable maps to its inverse.
    pub fn bar(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over all terms; None for zero.
    pub fn min_exps(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let mut acc = it.next()?.clone();
        for e in it {
            for (a, b) in acc.iter_mut().zip(e) {
                if b < a {
                    *a = *b;
                }
            }
        }
        Some(acc)
    }

    pub fn max_exps(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let mut acc = it.next()?.clone();
        for e in it {
            for (a, b) in acc.iter_mut().zip(e) {
                if b > a {
                    *a = *b;
                }
            }
        }
        Some(acc)
    }

    /// Multiply by x^(-min) so all exponents are >= 0 with 0 attained in each
    /// variable that appears, then by ±1 so the lex-leading coefficient is
    /// positive. The result is the canonical representative of the unit class.
    pub fn normalized(&self) -> Self {
        let min = match self.min_exps() {
            None => return self.clone(),
            Some(m) => m,
        };
        let mut terms: BTreeMap<Vec<i64>, BigRational> = self
            .terms
            .iter()
            .map(|(e, c)| {
                (
                    e.iter().zip(&min).map(|(a, b)| a - b).collect::<Vec<i64>>(),
                    c.clone(),
                )
            })
            .collect();
        let flip = terms
            .iter()
            .next_back()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if flip {
            for c in terms.values_mut() {
                *c = -c.clone();
            }
        }
        Self {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Equality up to multiplication by a unit ± monomial.
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Evaluate at a rational point. Coordinates hitting a negative exponent
    /// must be nonzero.
    pub fn eval_rat(&self, point: &[BigRational]) -> Result<BigRational> {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                term *= rat_pow(x, k)?;
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitute a rational for variable `i`, keeping the ring unchanged.
    pub fn eval_var(&self, i: usize, value: &BigRational) -> Result<Self> {
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[i];
            e2[i] = 0;
            out.add_term(e2, c * rat_pow(value, k)?);
        }
        Ok(out)
    }

    /// One-variable polynomials convert to a dense polynomial plus the shift
    /// (minimal exponent): self = t^shift * poly(t).
    pub fn to_qpoly(&self) -> Result<(QPoly, i64)> {
        if self.vars.len() != 1 {
            return Err(Error::BadInput(format!(
                "expected 1 variable, found {}",
                self.vars.len()
            )));
        }
        if self.is_zero() {
            return Ok((QPoly::zero(), 0));
        }
        let min = self.min_exps().unwrap()[0];
        let max = self.max_exps().unwrap()[0];
        let mut v = vec![BigRational::zero(); (max - min + 1) as usize];
        for (e, c) in &self.terms {
            v[(e[0] - min) as usize] = c.clone();
        }
        Ok((QPoly::new(v), min))
    }

    pub fn from_qpoly(vars: &[&str], i: usize, p: &QPoly) -> Self {
        let mut out = Self::zero(vars);
        for (k, c) in p.coeffs.iter().enumerate() {
            let mut e = vec![0i64; out.vars.len()];
            e[i] = k as i64;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Variables with a nonzero exponent somewhere.
    pub fn effective_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.vars.len()];
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x != 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter_map(|(i, &u)| if u { Some(i) } else { None })
            .collect()
    }

    /// gcd in the Laurent ring, defined for at most two effective variables.
    /// The result is normalized; gcd(0, 0) is an error.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdUndefined);
        }
        if self.is_zero() {
            return Ok(other.normalized());
        }
        if other.is_zero() {
            return Ok(self.normalized());
        }
        let mut eff: Vec<usize> = self.effective_vars();
        for v in other.effective_vars() {
            if !eff.contains(&v) {
                eff.push(v);
            }
        }
        eff.sort_unstable();
        match eff.len() {
            0 => {
                // both nonzero constants
                let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
                Ok(Self::one(&vars))
            }
            1 => self.gcd_univariate(other, eff[0]),
            2 => self.gcd_bivariate(other, eff[0], eff[1]),
            n => Err(Error::GcdUnsupportedVars(n)),
        }
    }

    fn gcd_univariate(&self, other: &Self, v: usize) -> Result<Self> {
        let a = self.project_int(&[v]);
        let b = other.project_int(&[v]);
        let a1 = IPoly::new(dense1(&a));
        let b1 = IPoly::new(dense1(&b));
        let g = a1.gcd(&b1);
        let mut out = Self::zero(&self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        for (k, c) in g.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0i64; out.vars.len()];
            e[v] = k as i64;
            out.add_term(e, BigRational::from_integer(c.clone()));
        }
        Ok(out.normalized())
    }

    fn gcd_bivariate(&self, other: &Self, vx: usize, vy: usize) -> Result<Self> {
        let a = Bivar::from_laurent(self, vx, vy);
        let b = Bivar::from_laurent(other, vx, vy);
        let g = a.gcd(&b);
        let mut out = Self::zero(&self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        for (dx, cy) in g.coeffs.iter().enumerate() {
            for (dy, c) in cy.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut e = vec![0i64; out.vars.len()];
                e[vx] = dx as i64;
                e[vy] = dy as i64;
                out.add_term(e, BigRational::from_integer(c.clone()));
            }
        }
        Ok(out.normalized())
    }

    /// Restrict to the listed variables, shift exponents to be >= 0, and clear
    /// denominators: map exp-vector -> BigInt.
    fn project_int(&self, keep: &[usize]) -> BTreeMap<Vec<i64>, BigInt> {
        let min = self.min_exps().unwrap_or_default();
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut out: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<i64> = keep.iter().map(|&i| e[i] - min[i]).collect();
            let val = c.numer() * (&lcm / c.denom());
            *out.entry(key).or_insert_with(BigInt::zero) += val;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Reduce all coefficients mod a prime p; they must have denominators
    /// coprime to p. Coefficients land in [0, p).
    pub fn reduce_mod(&self, p: u64) -> Result<Self> {
        let pb = BigInt::from(p);
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let den = c.denom().mod_floor(&pb);
            if den.is_zero() {
                return Err(Error::BadInput(format!(
                    "coefficient {} has denominator divisible by {}",
                    c, p
                )));
            }
            let inv = mod_inverse(&den, &pb).ok_or_else(|| {
                Error::BadInput(format!("no inverse of {} mod {}", den, p))
            })?;
            let num = c.numer().mod_floor(&pb);
            let red = (num * inv).mod_floor(&pb);
            out.add_term(e.clone(), BigRational::from_integer(red));
        }
        Ok(out)
    }

    /// Divide exactly by (x_i - 1). Errors if the division leaves a remainder
    /// (in the rational sense; for mod-p callers reduce afterwards).
    pub fn div_exact_var_minus_one(&self, i: usize) -> Result<Self> {
        // Write self = sum_k c_k(other vars) * x_i^k, shift so k >= 0, and run
        // synthetic division by (x_i - 1): q_k = sum_{j > k} c_j, remainder =
        // sum_j c_j = value at x_i = 1.
        if self.is_zero() {
            return Ok(self.clone());
        }
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let min = self.min_exps().unwrap()[i];
        let max = self.max_exps().unwrap()[i];
        let n = (max - min) as usize;
        // slices[k] = coefficient of x_i^(k + min) as a LaurentPoly in the other vars
        let mut slices: Vec<LaurentPoly> = vec![Self::zero(&vars); n + 1];
        for (e, c) in &self.terms {
            let k = (e[i] - min) as usize;
            let mut e2 = e.clone();
            e2[i] = 0;
            slices[k].add_term(e2, c.clone());
        }
        let mut rem = Self::zero(&vars);
        for s in &slices {
            rem = &rem + s;
        }
        if !rem.is_zero() {
            return Err(Error::BadInput(format!(
                "polynomial is not divisible by {} - 1",
                self.vars[i]
            )));
        }
        // quotient coefficient of x_i^k is -(c_0 + ... + c_k) for k = 0..n-1
        let mut out = Self::zero(&vars);
        let mut partial = Self::zero(&vars);
        for (k, s) in slices.iter().enumerate().take(n) {
            partial = &partial + s;
            let mut shifted = Self::zero(&vars);
            for (e, c) in &partial.terms {
                let mut e2 = e.clone();
                e2[i] = k as i64 + min;
                shifted.add_term(e2, -c.clone());
            }
            out = &out + &shifted;
        }
        Ok(out)
    }
}

fn rat_pow(x: &BigRational, k: i64) -> Result<BigRational> {
    if k == 0 {
        return Ok(BigRational::one());
    }
    if x.is_zero() {
        if k < 0 {
            return Err(Error::BadInput(
                "evaluation at 0 with a negative exponent".into(),
            ));
        }
        return Ok(BigRational::zero());
    }
    let mut acc = BigRational::one();
    let base = if k > 0 { x.clone() } else { x.recip() };
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    Ok(acc)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

fn dense1(map: &BTreeMap<Vec<i64>, BigInt>) -> Vec<BigInt> {
    let max = map.keys().map(|e| e[0]).max().unwrap_or(-1);
    let mut v = vec![BigInt::zero(); (max + 1).max(0) as usize];
    for (e, c) in map {
        v[e[0] as usize] = c.clone();
    }
    v
}

/// Integer bivariate polynomials, dense in x with IPoly (in y) coefficients.
/// Only used inside the two-variable gcd.
struct Bivar {
    coeffs: Vec<IPoly>,
}

impl Bivar {
    fn from_laurent(p: &LaurentPoly, vx: usize, vy: usize) -> Bivar {
        let map = p.project_int(&[vx, vy]);
        let dx = map.keys().map(|e| e[0]).max().unwrap_or(-1);
        let dy = map.keys().map(|e| e[1]).max().unwrap_or(-1);
        let mut rows = vec![vec![BigInt::zero(); (dy + 1).max(0) as usize]; (dx + 1).max(0) as usize];
        for (e, c) in map {
            rows[e[0] as usize][e[1] as usize] = c;
        }
        Bivar {
            coeffs: rows.into_iter().map(IPoly::new).collect(),
        }
        .trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn deg_x(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lc_x(&self) -> IPoly {
        self.coeffs.last().cloned().unwrap_or_else(IPoly::zero)
    }

    /// gcd (in Z[y]) of the x-coefficients.
    fn content(&self) -> IPoly {
        let mut g = IPoly::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    fn primitive(&self) -> Bivar {
        let c = self.content();
        if c.is_zero() || (c.deg() == Some(0) && c.lc().is_one()) {
            return Bivar {
                coeffs: self.coeffs.clone(),
            };
        }
        Bivar {
            coeffs: self.coeffs.iter().map(|a| a.div_exact(&c)).collect(),
        }
    }

    fn scale(&self, f: &IPoly) -> Bivar {
        Bivar {
            coeffs: self.coeffs.iter().map(|a| a.mul(f)).collect(),
        }
        .trimmed()
    }

    fn sub(&self, other: &Bivar) -> Bivar {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = IPoly::zero();
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = other.coeffs.get(i).unwrap_or(&zero);
            v.push(a.sub(b));
        }
        Bivar { coeffs: v }.trimmed()
    }

    fn shift_x(&self, k: usize) -> Bivar {
        let mut v = vec![IPoly::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Bivar { coeffs: v }
    }

    /// Primitive polynomial remainder sequence gcd over Z[y][x].
    fn gcd(&self, other: &Bivar) -> Bivar {
        if self.is_zero() {
            return other.primitive().scale(&self.content().gcd(&other.content()));
        }
        if other.is_zero() {
            return self.primitive().scale(&self.content().gcd(&other.content()));
        }
        let content_gcd = self.content().gcd(&other.content());
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.deg_x() < b.deg_x() {
            std::mem::swap(&mut a, &mut b);
        }
        let pp_gcd = loop {
            if b.deg_x() == Some(0) {
                // primitive in x and constant in x: any common divisor is a
                // unit unless a shares the y-factor, but b is primitive
                break Bivar {
                    coeffs: vec![IPoly::one()],
                };
            }
            let r = a.pseudo_rem_x(&b);
            if r.is_zero() {
                break b;
            }
            a = b;
            b = r.primitive();
        };
        pp_gcd.scale(&content_gcd)
    }

    fn pseudo_rem_x(&self, div: &Bivar) -> Bivar {
        let dd = div.deg_x().unwrap();
        let lc = div.lc_x();
        let mut rem = Bivar {
            coeffs: self.coeffs.clone(),
        }
        .trimmed();
        while let Some(dr) = rem.deg_x() {
            if dr < dd {
                break;
            }
            let top = rem.lc_x();
            rem = rem.scale(&lc).sub(&div.shift_x(dr - dd).scale(&top));
        }
        rem
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("variable mismatch in +")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("variable mismatch in -")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("variable mismatch in *")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-BigRational::one())
    }
}

impl std::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            let has_vars = e.iter().any(|&x| x != 0);
            if !has_vars || !a.is_one() {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())?;
                } else {
                    write!(f, "{}", a)?;
                }
                if has_vars {
                    write!(f, "*")?;
                }
            }
            let mut first_var = true;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.vars[i])?;
                if x != 1 {
                    write!(f, "^{}", x)?;
                }
                first_var = false;
            }
            first = false;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<i64>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    exp: e.clone(),
                    coef: format_rat(c),
                })
                .collect(),
        };
        repr.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(de)?;
        let vars: Vec<&str> = repr.vars.iter().map(|s| s.as_str()).collect();
        let mut p = LaurentPoly::zero(&vars);
        for t in repr.terms {
            if t.exp.len() != vars.len() {
                return Err(D::Error::custom(format!(
                    "exponent {:?} has wrong length for vars {:?}",
                    t.exp, repr.vars
                )));
            }
            let c = parse_rat(&t.coef).map_err(D::Error::custom)?;
            p.add_term(t.exp, c);
        }
        Ok(p)
    }
}
