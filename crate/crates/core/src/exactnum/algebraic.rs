//! Real algebraic numbers as squarefree integer polynomials plus isolating
//! rational intervals, with Sturm-certified isolation and exact comparison.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::unipoly::{IPoly, QPoly};
use crate::{Error, Result};

/// Sturm chain of a squarefree polynomial.
pub struct SturmChain {
    chain: Vec<QPoly>,
}

impl SturmChain {
    /// Build the chain for a squarefree, nonconstant polynomial.
    pub fn new(p: &QPoly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i32;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }
}

/// A real algebraic number: squarefree primitive defining polynomial and an
/// isolating interval. `lo == hi` encodes an exact rational; otherwise the
/// open interval (lo, hi) contains exactly one root of `poly` and neither
/// endpoint is a root.
#[derive(Debug, Clone)]
pub struct RealAlgebraic {
    poly: IPoly,
    lo: BigRational,
    hi: BigRational,
}

impl RealAlgebraic {
    pub fn rational(q: BigRational) -> Self {
        let poly = IPoly::new(vec![-q.numer().clone(), q.denom().clone()]).primitive_part();
        RealAlgebraic {
            poly,
            lo: q.clone(),
            hi: q,
        }
    }

    /// Wrap an already-isolated root. Checks the invariants.
    pub fn from_isolated(poly: IPoly, lo: BigRational, hi: BigRational) -> Result<Self> {
        let sf = poly.squarefree_part();
        if lo == hi {
            if sf.sign_at(&lo) != 0 {
                return Err(Error::Inconsistent(
                    "claimed exact root does not vanish".into(),
                ));
            }
            return Ok(RealAlgebraic { poly: sf, lo, hi });
        }
        if sf.sign_at(&lo) == 0 || sf.sign_at(&hi) == 0 {
            return Err(Error::Inconsistent("isolating endpoint is a root".into()));
        }
        let chain = SturmChain::new(&sf.to_qpoly());
        if chain.count_roots(&lo, &hi) != 1 {
            return Err(Error::Inconsistent(
                "interval does not isolate exactly one root".into(),
            ));
        }
        Ok(RealAlgebraic { poly: sf, lo, hi })
    }

    pub fn defining_poly(&self) -> &IPoly {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn interval(&self) -> super::Interval {
        super::Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.lo == self.hi {
            Some(&self.lo)
        } else {
            None
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// One bisection step (no-op on exact rationals).
    pub fn refine(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        let sm = self.poly.sign_at(&mid);
        if sm == 0 {
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        if sm == self.poly.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Refine until the interval is narrower than `eps`, at most `cap` steps.
    pub fn refine_to_width(&mut self, eps: &BigRational, cap: u64, context: &str) -> Result<()> {
        let mut steps = 0u64;
        while self.width() >= *eps {
            if steps >= cap {
                return Err(Error::PrecisionCap {
                    cap,
                    context: context.to_string(),
                });
            }
            self.refine();
            steps += 1;
        }
        Ok(())
    }

    /// True when this number is a root of `g` (g squarefree or not).
    pub fn is_root_of(&self, g: &IPoly) -> bool {
        if let Some(q) = self.as_rational() {
            return g.sign_at(q) == 0;
        }
        // g divides our defining polynomial's root set only if gcd does; count
        // roots of gcd(g, poly) in our interval.
        let common = g.gcd(&self.poly);
        if common.deg().map_or(true, |d| d == 0) {
            return false;
        }
        let chain = SturmChain::new(&common.to_qpoly());
        chain.count_roots(&self.lo, &self.hi) > 0
    }

    pub fn equals(&mut self, other: &mut RealAlgebraic) -> bool {
        self.cmp_mut(other) == Ordering::Equal
    }

    /// Exact comparison, refining both operands as needed.
    pub fn cmp_mut(&mut self, other: &mut RealAlgebraic) -> Ordering {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return a.cmp(b);
        }
        // Fast path: disjoint intervals.
        for _ in 0..8 {
            if self.hi < other.lo {
                return Ordering::Less;
            }
            if other.hi < self.lo {
                return Ordering::Greater;
            }
            if self.as_rational().is_some() && other.as_rational().is_some() {
                return self.lo.cmp(&other.lo);
            }
            self.refine();
            other.refine();
        }
        // Shared-root analysis.
        let g = self.poly.gcd(&other.poly);
        let could_be_equal =
            g.deg().map_or(false, |d| d >= 1) && self.is_root_of(&g) && other.is_root_of(&g);
        if !could_be_equal {
            // Distinct numbers: refinement separates them.
            for _ in 0..100_000 {
                if self.hi < other.lo {
                    return Ordering::Less;
                }
                if other.hi < self.lo {
                    return Ordering::Greater;
                }
                self.refine();
                other.refine();
            }
            panic!("comparison of distinct algebraic numbers failed to separate");
        }
        // Both are roots of g; decide whether they are the same root.
        let roots = sturm_isolate(&g);
        let pos_a = locate_in(&roots, self);
        let pos_b = locate_in(&roots, other);
        match (pos_a, pos_b) {
            (Some(i), Some(j)) => i.cmp(&j),
            _ => {
                // Not actually the same root of g after all; separate.
                for _ in 0..100_000 {
                    if self.hi < other.lo {
                        return Ordering::Less;
                    }
                    if other.hi < self.lo {
                        return Ordering::Greater;
                    }
                    self.refine();
                    other.refine();
                }
                panic!("comparison failed to separate");
            }
        }
    }

    /// A rational strictly between this number and `hi_neighbor` (which must
    /// be strictly larger). Both get refined until they are separated.
    pub fn rational_between(&mut self, hi_neighbor: &mut RealAlgebraic) -> BigRational {
        for _ in 0..100_000 {
            if self.hi < hi_neighbor.lo {
                return (&self.hi + &hi_neighbor.lo) / BigRational::from_integer(2.into());
            }
            self.refine();
            hi_neighbor.refine();
        }
        panic!("failed to separate adjacent algebraic numbers");
    }

    pub fn approx_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        let n: f64 = mid.numer().to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = mid.denom().to_string().parse().unwrap_or(f64::NAN);
        n / d
    }
}

/// Which isolating interval of `roots` contains `x` (refining x as needed)?
/// Returns None if x is not among them.
fn locate_in(roots: &[RealAlgebraic], x: &mut RealAlgebraic) -> Option<usize> {
    for _ in 0..100_000 {
        let mut candidates = vec![];
        for (i, r) in roots.iter().enumerate() {
            // overlap test
            if x.hi >= r.lo && r.hi >= x.lo {
                candidates.push(i);
            }
        }
        match candidates.len() {
            0 => return None,
            1 => {
                let i = candidates[0];
                // x's interval must sit inside the isolating interval to be sure
                if (roots[i].lo <= x.lo && x.hi <= roots[i].hi)
                    || (x.lo == x.hi && roots[i].lo <= x.lo && x.lo <= roots[i].hi)
                {
                    return Some(i);
                }
                x.refine();
            }
            _ => x.refine(),
        }
    }
    panic!("failed to locate algebraic number among isolated roots");
}

/// Isolate all real roots of `p` (nonzero), returned in increasing order.
pub fn sturm_isolate(p: &IPoly) -> Vec<RealAlgebraic> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    let sf = p.squarefree_part();
    let deg = match sf.deg() {
        None | Some(0) => return vec![],
        Some(d) => d,
    };
    if deg == 1 {
        let root = BigRational::new(-sf.coeff(0), sf.coeff(1));
        return vec![RealAlgebraic::rational(root)];
    }
    let chain = SturmChain::new(&sf.to_qpoly());
    // Cauchy bound: all roots lie in (-B, B)
    let lc = sf.lc().abs();
    let max_coeff = sf
        .coeffs
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(num_bigint::BigInt::zero);
    let bound = BigRational::one() + BigRational::new(max_coeff, lc);
    let mut out = vec![];
    subdivide(&sf, &chain, &-bound.clone(), &bound, &mut out);
    out
}

fn subdivide(
    sf: &IPoly,
    chain: &SturmChain,
    a: &BigRational,
    b: &BigRational,
    out: &mut Vec<RealAlgebraic>,
) {
    // Endpoints are never roots here: the Cauchy bound is root-free, and
    // midpoints that hit roots are split off as exact below.
    let n = chain.count_roots(a, b);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(RealAlgebraic {
            poly: sf.clone(),
            lo: a.clone(),
            hi: b.clone(),
        });
        return;
    }
    let mid = (a + b) / BigRational::from_integer(2.into());
    if sf.sign_at(&mid) == 0 {
        // Exact rational root at the midpoint: peel it off with a root-free
        // collar on each side.
        let mut delta = (b - a) / BigRational::from_integer(4.into());
        loop {
            let l = &mid - &delta;
            let r = &mid + &delta;
            if sf.sign_at(&l) != 0
                && sf.sign_at(&r) != 0
                && chain.count_roots(&l, &r) == 1
            {
                subdivide(sf, chain, a, &l, out);
                out.push(RealAlgebraic {
                    poly: sf.clone(),
                    lo: mid.clone(),
                    hi: mid.clone(),
                });
                subdivide(sf, chain, &r, b, out);
                return;
            }
            delta /= BigRational::from_integer(2.into());
        }
    }
    subdivide(sf, chain, a, &mid, out);
    subdivide(sf, chain, &mid, b, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn isolate_quadratic() {
        // 3s^2 - 1: roots ±1/sqrt(3) ≈ ±0.5774
        let p = IPoly::from_i64(&[-1, 0, 3]);
        let mut roots = sturm_isolate(&p);
        assert_eq!(roots.len(), 2);
        roots[0].refine_to_width(&q(1, 1000), 100, "test").unwrap();
        roots[1].refine_to_width(&q(1, 1000), 100, "test").unwrap();
        assert!(roots[0].interval().contains(&q(-5774, 10000)));
        assert!(roots[1].interval().contains(&q(5774, 10000)));
    }

    #[test]
    fn isolate_with_rational_roots() {
        // (2x-1)(x-2)(x^2-2) = 2x^4 - 5x^3 - 2x^2 + 10x - 4;
        // roots: -sqrt2, 1/2, sqrt2, 2
        let p = IPoly::from_i64(&[-4, 10, -2, -5, 2]);
        let mut roots = sturm_isolate(&p);
        assert_eq!(roots.len(), 4);
        for r in roots.iter_mut() {
            r.refine_to_width(&q(1, 1_000_000), 200, "test").unwrap();
        }
        let vals: Vec<f64> = roots.iter().map(|r| r.approx_f64()).collect();
        assert!((vals[0] + std::f64::consts::SQRT_2).abs() < 1e-5);
        assert!((vals[1] - 0.5).abs() < 1e-5);
        assert!(roots[1].interval().contains(&q(1, 2)));
        assert!((vals[2] - std::f64::consts::SQRT_2).abs() < 1e-5);
        assert!((vals[3] - 2.0).abs() < 1e-5);
    }

    #[test]
    fn multiplicities_are_flattened() {
        // (x-1)^3 has the single root 1
        let p = IPoly::from_i64(&[-1, 3, -3, 1]);
        let roots = sturm_isolate(&p);
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].as_rational(), Some(&q(1, 1)));
    }

    #[test]
    fn compare_and_equality() {
        let p = IPoly::from_i64(&[-2, 0, 1]); // x^2 - 2
        let q3 = IPoly::from_i64(&[-1, 0, 3]); // 3x^2 - 1
        let sqrt2 = sturm_isolate(&p).pop().unwrap();
        let mut sqrt2b = sturm_isolate(&IPoly::from_i64(&[2, 0, -1])).pop().unwrap(); // -(x^2-2)
        let mut third = sturm_isolate(&q3).pop().unwrap();
        let mut a = sqrt2.clone();
        assert!(a.equals(&mut sqrt2b), "same number via different signs");
        let mut b = sqrt2.clone();
        assert_eq!(b.cmp_mut(&mut third), Ordering::Greater);
        // 1/sqrt3 vs exact 1/2: 0.577 > 0.5
        let mut half = RealAlgebraic::rational(q(1, 2));
        assert_eq!(third.cmp_mut(&mut half), Ordering::Greater);
    }

    #[test]
    fn refine_cap_errors() {
        let p = IPoly::from_i64(&[-2, 0, 1]);
        let mut r = sturm_isolate(&p).pop().unwrap();
        let err = r.refine_to_width(&q(1, i64::MAX), 1, "sqrt2 test");
        match err {
            Err(Error::PrecisionCap { cap: 1, .. }) => {}
            other => panic!("expected precision cap, got {:?}", other),
        }
    }

    #[test]
    fn rational_between_neighbors() {
        let p = IPoly::from_i64(&[-1, 0, 3]);
        let mut roots = sturm_isolate(&p);
        let mut hi = roots.pop().unwrap();
        let mut lo = roots.pop().unwrap();
        let m = lo.rational_between(&mut hi);
        assert!(m > *lo.hi() && m < *hi.lo());
    }
}
