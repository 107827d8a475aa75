//! Closed rational intervals with outward-rounded arithmetic, plus certified
//! enclosures of arctan and pi for converting circle parameters to normalized
//! angle fractions.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rat_sign;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> Self {
        Interval::point(BigRational::zero())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Sign if determined: 1 (strictly positive), -1 (strictly negative),
    /// 0 (the point zero); None when the interval straddles zero.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            Interval::new(a, b)
        } else {
            Interval::new(b, a)
        }
    }

    /// Reciprocal; the interval must not contain zero.
    pub fn recip(&self) -> Interval {
        assert!(
            !self.contains_zero(),
            "interval reciprocal across zero"
        );
        Interval::new(self.hi.recip(), self.lo.recip())
    }

    pub fn div(&self, other: &Interval) -> Interval {
        self.mul(&other.recip())
    }

    pub fn abs(&self) -> Interval {
        if !self.contains_zero() {
            if self.lo.is_positive() {
                self.clone()
            } else {
                self.neg()
            }
        } else {
            let hi = self.hi.abs().max(self.lo.abs());
            Interval::new(BigRational::zero(), hi)
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval::new(
            self.lo.clone().min(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
        )
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (rat_f64(&self.lo), rat_f64(&self.hi))
    }
}

fn rat_f64(q: &BigRational) -> f64 {
    let n = q.numer();
    let d = q.denom();
    // good enough for display; never used in proofs
    let nf: f64 = n.to_string().parse().unwrap_or(f64::NAN);
    let df: f64 = d.to_string().parse().unwrap_or(f64::NAN);
    nf / df
}

/// Alternating Taylor enclosure of arctan(x) for |x| <= 1/2, using `terms`
/// series terms; the error is bounded by the first omitted term.
fn atan_taylor(x: &BigRational, terms: usize) -> Interval {
    assert!(
        x.abs() <= BigRational::new(1.into(), 2.into()),
        "atan_taylor needs |x| <= 1/2"
    );
    let x2 = x * x;
    let mut sum = BigRational::zero();
    let mut pow = x.clone(); // x^(2k+1)
    for k in 0..terms {
        let term = &pow / BigRational::from_integer((2 * k as i64 + 1).into());
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        pow *= &x2;
    }
    let tail = (&pow / BigRational::from_integer((2 * terms as i64 + 1).into())).abs();
    Interval::new(&sum - &tail, &sum + &tail)
}

/// Certified enclosure of pi. Width shrinks like 4^-terms.
pub fn pi_interval(terms: usize) -> Interval {
    // pi/4 = arctan(1/2) + arctan(1/3)
    let a = atan_taylor(&BigRational::new(1.into(), 2.into()), terms);
    let b = atan_taylor(&BigRational::new(1.into(), 3.into()), terms);
    a.add(&b).scale(&BigRational::from_integer(4.into()))
}

/// Certified enclosure of arctan(x) for any rational x.
pub fn atan_interval(x: &BigRational, terms: usize) -> Interval {
    let half = BigRational::new(1.into(), 2.into());
    match rat_sign(x) {
        0 => Interval::zero(),
        -1 => atan_interval(&-x.clone(), terms).neg(),
        _ => {
            if x > &BigRational::one() {
                // arctan(x) = pi/2 - arctan(1/x)
                let p = pi_interval(terms).scale(&half);
                p.sub(&atan_interval(&x.recip(), terms))
            } else if x > &half {
                // arctan(x) = pi/4 + arctan((x-1)/(x+1)), argument in (-1/3, 0]
                let quarter = BigRational::new(1.into(), 4.into());
                let p = pi_interval(terms).scale(&quarter);
                let y = (x - BigRational::one()) / (x + BigRational::one());
                p.add(&atan_taylor(&y, terms))
            } else {
                atan_taylor(x, terms)
            }
        }
    }
}

/// Certified enclosure of arctan(x)/pi, the normalized angle fraction of the
/// unit-circle point with parameter x (always inside (-1/2, 1/2)).
pub fn atan_frac(x: &BigRational, terms: usize) -> Interval {
    let at = atan_interval(x, terms);
    let p = pi_interval(terms);
    at.div(&p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_encloses() {
        let a = Interval::new(q(1, 2), q(3, 4));
        let b = Interval::new(q(-2, 1), q(1, 3));
        let s = a.add(&b);
        assert!(s.contains(&(q(1, 2) + q(-2, 1))));
        assert!(s.contains(&(q(3, 4) + q(1, 3))));
        let m = a.mul(&b);
        assert!(m.contains(&(q(3, 4) * q(-2, 1))));
        assert!(m.contains(&(q(1, 2) * q(1, 3))));
        assert_eq!(a.sign(), Some(1));
        assert_eq!(b.sign(), None);
    }

    #[test]
    fn pi_enclosure_tightens() {
        let p10 = pi_interval(10);
        let p25 = pi_interval(25);
        assert!(p25.subset_of(&p10));
        assert!(p10.contains(&q(314159, 100000)) || p10.lo < q(3141593, 1000000));
        // 3.14159265 < pi < 3.14159266
        assert!(p25.lo > q(314159265, 100000000));
        assert!(p25.hi < q(314159266, 100000000));
        assert!(p25.width() < q(1, 1_000_000_000));
    }

    #[test]
    fn atan_known_points() {
        // arctan(1) = pi/4
        let a = atan_interval(&q(1, 1), 25);
        let p4 = pi_interval(25).scale(&q(1, 4));
        assert!(a.lo <= p4.hi && p4.lo <= a.hi, "arctan(1) vs pi/4");
        // arctan(1/sqrt(3)) = pi/6: check fraction of s = 0.5773502692
        let f = atan_frac(&q(5773502692, 10000000000), 30);
        assert!(f.contains(&q(1, 6)) || (f.lo < q(1, 6) + q(1, 100000000) && f.hi > q(1, 6) - q(1, 100000000)));
        // monotone in precision
        let c1 = atan_frac(&q(7, 5), 12);
        let c2 = atan_frac(&q(7, 5), 24);
        assert!(c2.subset_of(&c1));
    }

    #[test]
    fn atan_symmetry() {
        let a = atan_interval(&q(7, 3), 20);
        let b = atan_interval(&q(-7, 3), 20);
        assert_eq!(a.neg(), b);
    }
}
