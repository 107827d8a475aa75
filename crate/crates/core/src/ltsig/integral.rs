//! Integral of the signature step function over the unit circle, with respect
//! to the Haar measure of total mass 1.
//!
//! Writing each point as `((1-s^2)+2si)/(1+s^2)`, the measure of an arc is the
//! difference of `arctan(s)/pi` at its endpoints (with the circle closing up
//! at `-1`, whose endpoint values are exactly -1/2 and 1/2). When every jump
//! is a root of unity the endpoint fractions are rational and the integral is
//! an exact rational; otherwise it is certified by interval enclosures of the
//! arctangents, refined until the requested width is reached.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::function::SignatureFunction;
use crate::exactnum::{atan_frac, Interval};
use crate::knotio::SeifertMatrix;
use crate::{Error, Result};

/// The value of the integral: exact when every jump point is a root of unity,
/// otherwise an enclosure of certified width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegralValue {
    Exact(BigRational),
    Enclosure { lo: BigRational, hi: BigRational },
}

impl IntegralValue {
    pub fn width(&self) -> BigRational {
        match self {
            IntegralValue::Exact(_) => BigRational::zero(),
            IntegralValue::Enclosure { lo, hi } => hi - lo,
        }
    }

    pub fn lower(&self) -> &BigRational {
        match self {
            IntegralValue::Exact(v) => v,
            IntegralValue::Enclosure { lo, .. } => lo,
        }
    }

    pub fn upper(&self) -> &BigRational {
        match self {
            IntegralValue::Exact(v) => v,
            IntegralValue::Enclosure { hi, .. } => hi,
        }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lower() <= x && x <= self.upper()
    }
}

/// Integrates the signature function of `v`. Non-exact results are refined
/// until their width drops below `eps`; `cap` bounds the refinement effort.
pub fn signature_integral(
    v: &SeifertMatrix,
    eps: &BigRational,
    cap: u64,
) -> Result<IntegralValue> {
    let mut f = super::function::signature_function(v)?;
    signature_integral_of(&mut f, eps, cap)
}

/// Integrates an already-computed signature function. Takes the function
/// mutably because certifying irrational jump locations refines their
/// isolating intervals in place.
pub fn signature_integral_of(
    f: &mut SignatureFunction,
    eps: &BigRational,
    cap: u64,
) -> Result<IntegralValue> {
    if !eps.is_positive() {
        return Err(Error::BadInput(
            "integral tolerance must be positive".into(),
        ));
    }
    let signatures: Vec<i64> = f.arc_signatures();
    let m = f.jumps.len();

    if f.jumps.iter().all(|j| j.point.turn.is_some()) {
        let mut total = BigRational::zero();
        let mut prev = half(-1);
        for (i, sig) in signatures.iter().enumerate() {
            let next = if i == m {
                half(1)
            } else {
                turn_fraction(f.jumps[i].point.turn.expect("tagged jump"))
            };
            total += BigRational::from_integer((*sig).into()) * (&next - &prev);
            prev = next;
        }
        return Ok(IntegralValue::Exact(total));
    }

    // Spread the budget: each of the m+1 arc terms may contribute error from
    // both endpoints, scaled by its signature.
    let weight: i64 = signatures.iter().map(|s| s.abs()).max().unwrap_or(0) + 1;
    let mut target =
        eps / BigRational::from_integer((4 * (m as i64 + 1) * weight).into());
    let mut terms = 24usize;
    for _ in 0..64 {
        for j in f.jumps.iter_mut().filter(|j| j.point.turn.is_none()) {
            j.point
                .s
                .refine_to_width(&target, cap, "signature integral")?;
        }
        let mut total = Interval::point(BigRational::zero());
        let mut prev = Interval::point(half(-1));
        for (i, sig) in signatures.iter().enumerate() {
            let next = if i == m {
                Interval::point(half(1))
            } else {
                jump_fraction(&f.jumps[i], terms)
            };
            let piece = next
                .sub(&prev)
                .scale(&BigRational::from_integer((*sig).into()));
            total = total.add(&piece);
            prev = next;
        }
        if &total.width() < eps {
            return Ok(IntegralValue::Enclosure {
                lo: total.lo,
                hi: total.hi,
            });
        }
        target /= BigRational::from_integer(4.into());
        terms *= 2;
    }
    Err(Error::PrecisionCap {
        cap,
        context: "signature integral enclosure did not reach the requested width".into(),
    })
}

/// Exact turn fraction of a tagged jump, shifted into [-1/2, 1/2).
fn turn_fraction((j, d): (u64, u64)) -> BigRational {
    let f = BigRational::new((j as i64).into(), (d as i64).into());
    if 2 * j < d {
        f
    } else {
        f - BigRational::from_integer(1.into())
    }
}

/// Enclosure of the turn fraction of any jump: exact for tagged jumps,
/// certified arctangent bounds over the isolating interval otherwise.
fn jump_fraction(jump: &super::function::JumpDetail, terms: usize) -> Interval {
    match jump.point.turn {
        Some(t) => Interval::point(turn_fraction(t)),
        None => {
            let lo = atan_frac(jump.point.s.lo(), terms);
            let hi = atan_frac(jump.point.s.hi(), terms);
            Interval::new(lo.lo, hi.hi)
        }
    }
}

fn half(sign: i64) -> BigRational {
    BigRational::new(sign.into(), 2.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ltsig::function::signature_function;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn trefoil_integral_is_exact() {
        // Signature -2 outside the middle sixth-root arc: -2 * 2/3 = -4/3.
        let v = SeifertMatrix::trefoil();
        let value = signature_integral(&v, &q(1, 1_000_000), 10_000).unwrap();
        assert_eq!(value, IntegralValue::Exact(q(-4, 3)));
        assert!(value.width().is_zero());
        assert!(value.contains(&q(-4, 3)));
    }

    #[test]
    fn jump_free_integral_is_exactly_zero() {
        let v = SeifertMatrix::figure_eight();
        let value = signature_integral(&v, &q(1, 1_000_000), 10_000).unwrap();
        assert_eq!(value, IntegralValue::Exact(q(0, 1)));
    }

    #[test]
    fn annulus_integral_is_one() {
        // Signature +1 on the whole circle except the single point 1.
        let v = SeifertMatrix::new(vec![vec![1]]).unwrap();
        let value = signature_integral(&v, &q(1, 1_000_000), 10_000).unwrap();
        assert_eq!(value, IntegralValue::Exact(q(1, 1)));
    }

    #[test]
    fn untagged_jumps_give_a_certified_enclosure() {
        // Signature 2 outside the pair of jumps at +-1/sqrt(7): the integral
        // is 2(1 - 2*arctan(1/sqrt 7)/pi) ~ 1.5398910.
        let v = SeifertMatrix::new(vec![vec![2, 1], vec![0, 1]]).unwrap();
        let eps = q(1, 1_000_000);
        let value = signature_integral(&v, &eps, 10_000).unwrap();
        let IntegralValue::Enclosure { lo, hi } = &value else {
            panic!("expected an enclosure, got {:?}", value);
        };
        assert!(&value.width() < &eps);
        let expected = 2.0 * (1.0 - 2.0 * (1.0 / 7.0f64.sqrt()).atan() / std::f64::consts::PI);
        let lo_f = approx(lo);
        let hi_f = approx(hi);
        assert!(
            lo_f <= expected && expected <= hi_f,
            "{} not in [{}, {}]",
            expected,
            lo_f,
            hi_f
        );
    }

    #[test]
    fn reusing_a_function_matches_the_one_shot_form() {
        let v = SeifertMatrix::trefoil();
        let mut f = signature_function(&v).unwrap();
        let a = signature_integral_of(&mut f, &q(1, 1000), 10_000).unwrap();
        let b = signature_integral(&v, &q(1, 1000), 10_000).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn impossible_tolerance_hits_the_cap() {
        let v = SeifertMatrix::new(vec![vec![2, 1], vec![0, 1]]).unwrap();
        let tiny = BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(400));
        let err = signature_integral(&v, &tiny, 16).unwrap_err();
        assert!(matches!(err, Error::PrecisionCap { cap: 16, .. }));
    }

    #[test]
    fn nonpositive_tolerance_is_rejected() {
        let v = SeifertMatrix::trefoil();
        assert!(matches!(
            signature_integral(&v, &q(0, 1), 10_000),
            Err(Error::BadInput(_))
        ));
    }

    fn approx(x: &BigRational) -> f64 {
        // The exact numerator and denominator can be enormous even when the
        // value is small; truncate the value itself instead.
        let scale = BigRational::from_integer(1_000_000_000_000i64.into());
        let scaled: f64 = (x * &scale).to_integer().to_string().parse().unwrap();
        scaled / 1e12
    }
}
