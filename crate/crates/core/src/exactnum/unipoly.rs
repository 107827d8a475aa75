//! Dense univariate polynomials over Q (`QPoly`) and Z (`IPoly`).
//!
//! These back the Sturm/isolation machinery, cyclotomic arithmetic and the one
//! variable branch of the Laurent gcd. Coefficient vectors are low-to-high with
//! trailing zeros trimmed; the zero polynomial has an empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    pub coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    /// c * x^k
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = c;
        QPoly::new(v)
    }

    pub fn x() -> Self {
        QPoly::monomial(BigRational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; None for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        QPoly::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - other.coeff(i));
        }
        QPoly::new(v)
    }

    pub fn neg(&self) -> Self {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::new(v)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    /// Panics on division by zero.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.deg().unwrap();
        let lc = div.lc();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quo = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let f = &rem[i] / &lc;
            quo[i - dd] = f.clone();
            for (j, c) in div.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                let t = &f * c;
                rem[idx] -= t;
            }
        }
        (QPoly::new(quo), QPoly::new(rem))
    }

    pub fn rem(&self, div: &Self) -> Self {
        self.divrem(div).1
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.divrem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let lc = self.lc();
        self.scale(&lc.recip())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    /// Largest squarefree divisor, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.deg() == Some(0) {
            self.monic()
        } else {
            self.div_exact(&g).monic()
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Clear denominators and the integer content; the result is primitive with
    /// positive leading coefficient. Zero maps to zero.
    pub fn to_ipoly_primitive(&self) -> IPoly {
        if self.is_zero() {
            return IPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IPoly::new(ints).primitive_part()
    }

    /// Substitute x := num/den and clear denominators: returns
    /// sum_j a_j num^j den^(m-j) where m = deg self.
    pub fn compose_fraction(&self, num: &QPoly, den: &QPoly) -> QPoly {
        let m = match self.deg() {
            None => return QPoly::zero(),
            Some(m) => m,
        };
        let mut acc = QPoly::constant(self.coeff(m));
        let mut den_pow = QPoly::one();
        for j in (0..m).rev() {
            den_pow = den_pow.mul(den);
            acc = acc.mul(num).add(&QPoly::constant(self.coeff(j)).mul(&den_pow));
        }
        acc
    }
}

impl std::fmt::Display for QPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if i == 0 || !a.is_one() {
                write!(f, "{}", a)?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            if i == 1 {
                write!(f, "t")?;
            } else if i > 1 {
                write!(f, "t^{}", i)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Dense univariate polynomial over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IPoly {
    pub coeffs: Vec<BigInt>,
}

impl IPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IPoly::new(vec![BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        IPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        IPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        IPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IPoly::new(v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// gcd of all coefficients (non-negative); content of zero is zero.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divide by content and normalize the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IPoly::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        IPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IPoly::zero();
        }
        IPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Pseudo-remainder: lc(div)^(deg self - deg div + 1) * self mod div.
    pub fn pseudo_rem(&self, div: &Self) -> Self {
        assert!(!div.is_zero());
        let dd = div.deg().unwrap();
        let mut rem = self.clone();
        if rem.deg().map_or(true, |d| d < dd) {
            return rem;
        }
        let lc = div.lc();
        let e = rem.deg().unwrap() - dd + 1;
        let mut steps = 0usize;
        while let Some(dr) = rem.deg() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            let top = rem.lc();
            // rem = lc*rem - top * x^shift * div
            let mut v = vec![BigInt::zero(); dr + 1];
            for (i, c) in rem.coeffs.iter().enumerate() {
                v[i] = c * &lc;
            }
            for (j, c) in div.coeffs.iter().enumerate() {
                v[shift + j] -= &top * c;
            }
            rem = IPoly::new(v);
            steps += 1;
        }
        // Pad with lc powers so the result equals lc^e * self mod div exactly.
        if steps < e {
            let mut f = BigInt::one();
            for _ in 0..(e - steps) {
                f *= &lc;
            }
            rem = rem.scale(&f);
        }
        rem
    }

    /// Exact division; panics if not exact.
    pub fn div_exact(&self, div: &Self) -> Self {
        assert!(!div.is_zero(), "division by zero");
        if self.is_zero() {
            return IPoly::zero();
        }
        let dd = div.deg().unwrap();
        let ds = self.deg().unwrap();
        assert!(ds >= dd, "inexact polynomial division (degree)");
        let lc = div.lc();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); ds - dd + 1];
        for i in (dd..=ds).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (f, r) = rem[i].div_rem(&lc);
            assert!(r.is_zero(), "inexact polynomial division (leading)");
            quo[i - dd] = f.clone();
            for (j, c) in div.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &f * c;
            }
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division (remainder)");
        IPoly::new(quo)
    }

    /// Primitive gcd via the subresultant polynomial remainder sequence.
    /// Result is primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let content_gcd = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.deg().unwrap() - b.deg().unwrap();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                break;
            }
            if r.deg() == Some(0) {
                b = IPoly::one();
                break;
            }
            a = b;
            // b = r / (g * h^delta)
            let mut div = g.clone();
            for _ in 0..delta {
                div *= &h;
            }
            b = IPoly::new(r.coeffs.iter().map(|c| c / &div).collect());
            g = a.lc();
            // h = g^delta * h^(1-delta)
            h = if delta == 0 {
                h
            } else {
                let mut v = BigInt::one();
                for _ in 0..delta {
                    v *= &g;
                }
                let mut w = BigInt::one();
                for _ in 0..delta.saturating_sub(1) {
                    w *= &h;
                }
                v / w
            };
        }
        b.primitive_part().scale(&content_gcd)
    }

    /// Largest squarefree divisor, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return IPoly::zero();
        }
        let g = self.primitive_part().gcd(&self.derivative().primitive_part());
        if g.deg() == Some(0) {
            self.primitive_part()
        } else {
            self.primitive_part().div_exact(&g).primitive_part()
        }
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point: -1, 0, or 1.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.eval_rat(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// x^n with n >= 0.
    pub fn xpow(n: usize) -> Self {
        let mut v = vec![BigInt::zero(); n + 1];
        v[n] = BigInt::one();
        IPoly::new(v)
    }
}

impl std::fmt::Display for IPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_qpoly())
    }
}
