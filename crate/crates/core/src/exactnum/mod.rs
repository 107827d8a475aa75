//! Exact number types: rationals, sparse Laurent polynomials, Gaussian
//! rationals, real algebraic numbers, rational intervals, cyclotomic fields.

mod unipoly;
mod laurent;
mod gaussian;
mod interval;
mod algebraic;
mod cyclotomic;

pub use unipoly::{IPoly, QPoly};
pub use laurent::LaurentPoly;
pub use gaussian::GaussianRational;
pub use interval::{atan_frac, pi_interval, Interval};
pub use algebraic::{sturm_isolate, RealAlgebraic, SturmChain};
pub use cyclotomic::{cyclotomic_peel, cyclotomic_poly, real_cyclotomic_poly, CycElem, CycField};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Parse a rational from `p`, `p/q`, or `-p/q` form.
pub fn parse_rat(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let make_err = || Error::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num.parse().map_err(|_| make_err())?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| make_err())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(make_err());
    }
    Ok(BigRational::new(n, d))
}

/// Format a rational as `p/q` (always with an explicit denominator).
pub fn format_rat(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Format a rational compactly: `p` when integral, else `p/q`.
pub fn format_rat_short(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Primality by trial division; fine for the small moduli used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Sign of a rational as -1, 0, or 1.
pub fn rat_sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
