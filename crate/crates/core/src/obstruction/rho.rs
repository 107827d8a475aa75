//! Abelian signature-defect evaluation for surgery manifolds of knots.
//!
//! For the zero-surgery manifold of a knot with the abelianization
//! representation, the defect is either the integral of the signature
//! function over the circle (rational coefficients) or the sum of the
//! signatures over the nontrivial p-th roots of unity (mod-p coefficients).
//! Connected sums evaluate by additivity, so a k-fold copy multiplies the
//! single value by k; the integral's tolerance is split across the copies
//! so the total enclosure width still meets the request.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::knotio::SeifertMatrix;
use crate::ltsig::{root_of_unity_sum, signature_integral, IntegralValue};
use crate::{Error, Result};

/// Which abelian formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoMode {
    /// Integral of the signature function over the circle.
    Integral,
    /// Sum of signatures over the nontrivial p-th roots of unity.
    PrimeSum(u64),
}

impl std::fmt::Display for RhoMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RhoMode::Integral => write!(f, "integral"),
            RhoMode::PrimeSum(p) => write!(f, "prime-sum p={p}"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= p) {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn scale_value(v: &IntegralValue, k: u64) -> IntegralValue {
    let factor = BigRational::from_integer(k.into());
    match v {
        IntegralValue::Exact(q) => IntegralValue::Exact(q * &factor),
        IntegralValue::Enclosure { lo, hi } => IntegralValue::Enclosure {
            lo: lo * &factor,
            hi: hi * &factor,
        },
    }
}

fn add_values(a: IntegralValue, b: &IntegralValue) -> IntegralValue {
    match (&a, b) {
        (IntegralValue::Exact(x), IntegralValue::Exact(y)) => IntegralValue::Exact(x + y),
        _ => IntegralValue::Enclosure {
            lo: a.lower() + b.lower(),
            hi: a.upper() + b.upper(),
        },
    }
}

/// Certified bounds on the magnitude of a value.
pub fn magnitude_bounds(v: &IntegralValue) -> (BigRational, BigRational) {
    let (lo, hi) = (v.lower().clone(), v.upper().clone());
    if !lo.is_negative() {
        (lo, hi)
    } else if !hi.is_positive() {
        (-hi, -lo)
    } else {
        let mag = std::cmp::max(-lo, hi);
        (BigRational::zero(), mag)
    }
}

/// Evaluates the abelian defect of a connected sum given as
/// (Seifert matrix, copy count) summands. In integral mode the result is
/// exact when every jump of every summand sits at a root of unity, and
/// otherwise an enclosure of width at most `eps`; in prime-sum mode the
/// result is always exact, and the modulus must be prime.
pub fn rho_abelian(
    summands: &[(SeifertMatrix, u64)],
    mode: RhoMode,
    eps: &BigRational,
    cap: u64,
) -> Result<IntegralValue> {
    match mode {
        RhoMode::PrimeSum(p) => {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            let mut total: i64 = 0;
            for (matrix, copies) in summands {
                let single = root_of_unity_sum(matrix, p)?.signature_sum();
                total += single * i64::try_from(*copies).map_err(|_| {
                    Error::BadInput("copy count too large".to_string())
                })?;
            }
            Ok(IntegralValue::Exact(BigRational::from_integer(total.into())))
        }
        RhoMode::Integral => {
            let total_copies: u64 = summands.iter().map(|(_, c)| c).sum();
            if total_copies == 0 {
                return Ok(IntegralValue::Exact(BigRational::zero()));
            }
            let per_copy_eps = eps / BigRational::from_integer(total_copies.into());
            let mut acc = IntegralValue::Exact(BigRational::zero());
            for (matrix, copies) in summands {
                if *copies == 0 {
                    continue;
                }
                let single = signature_integral(matrix, &per_copy_eps, cap)?;
                acc = add_values(acc, &scale_value(&single, *copies));
            }
            Ok(acc)
        }
    }
}

/// Smallest copy count N with N * lower(|rho(J)|) strictly above the
/// budget. Fails when the certified lower bound on the magnitude is not
/// positive (the obstruction cannot be amplified by connected sums).
pub fn min_copies(
    j: &SeifertMatrix,
    budget: &BigRational,
    mode: RhoMode,
    eps: &BigRational,
    cap: u64,
) -> Result<u64> {
    let rho = rho_abelian(&[(j.clone(), 1)], mode, eps, cap)?;
    let (abs_lo, _) = magnitude_bounds(&rho);
    if !abs_lo.is_positive() {
        return Err(Error::CannotAmplify(abs_lo.to_string()));
    }
    if budget.is_negative() {
        return Ok(1);
    }
    let quotient = (budget / &abs_lo).floor().to_integer();
    let n = quotient + 1;
    u64::try_from(n).map_err(|_| Error::BadInput("required copy count exceeds u64".to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    const CAP: u64 = 10_000;

    #[test]
    fn primality_screen() {
        let primes: Vec<u64> = (0..60).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(matches!(
            rho_abelian(&[(SeifertMatrix::trefoil(), 1)], RhoMode::PrimeSum(4), &q(1, 100), CAP),
            Err(Error::NotPrime(4))
        ));
    }

    #[test]
    fn trefoil_single_copy_values() {
        let t = SeifertMatrix::trefoil();
        let rho = rho_abelian(&[(t.clone(), 1)], RhoMode::Integral, &q(1, 1000), CAP).unwrap();
        assert_eq!(rho, IntegralValue::Exact(q(-4, 3)));
        for (p, expected) in [(2, -2), (3, -4), (7, -8)] {
            let rho = rho_abelian(&[(t.clone(), 1)], RhoMode::PrimeSum(p), &q(1, 1), CAP).unwrap();
            assert_eq!(rho, IntegralValue::Exact(q(expected, 1)));
        }
    }

    #[test]
    fn copies_multiply_and_match_the_block_sum_route() {
        let t = SeifertMatrix::trefoil();
        let double = t.connected_sum(&t);

        let by_copies =
            rho_abelian(&[(t.clone(), 2)], RhoMode::PrimeSum(3), &q(1, 1), CAP).unwrap();
        let by_matrix =
            rho_abelian(&[(double.clone(), 1)], RhoMode::PrimeSum(3), &q(1, 1), CAP).unwrap();
        assert_eq!(by_copies, IntegralValue::Exact(q(-8, 1)));
        assert_eq!(by_copies, by_matrix);

        let by_copies =
            rho_abelian(&[(t.clone(), 3)], RhoMode::Integral, &q(1, 1000), CAP).unwrap();
        let triple = double.connected_sum(&t);
        let by_matrix = rho_abelian(&[(triple, 1)], RhoMode::Integral, &q(1, 1000), CAP).unwrap();
        assert_eq!(by_copies, IntegralValue::Exact(q(-4, 1)));
        assert_eq!(by_copies, by_matrix);
    }

    #[test]
    fn unknot_defect_vanishes_in_every_mode() {
        let u = SeifertMatrix::unknot();
        for mode in [RhoMode::Integral, RhoMode::PrimeSum(5)] {
            let rho = rho_abelian(&[(u.clone(), 3)], mode, &q(1, 10), CAP).unwrap();
            assert_eq!(rho, IntegralValue::Exact(BigRational::zero()));
        }
    }

    #[test]
    fn enclosures_scale_with_copy_count_and_respect_eps() {
        // Alexander polynomial 2t^2 - 3t + 2: circle roots that are not
        // roots of unity, so the integral is a genuine enclosure.
        let v = SeifertMatrix::new(vec![vec![1, 1], vec![0, 2]]).unwrap();
        let eps = q(1, 100);
        let single = rho_abelian(&[(v.clone(), 1)], RhoMode::Integral, &eps, CAP).unwrap();
        assert!(matches!(single, IntegralValue::Enclosure { .. }));
        assert!(single.width() <= eps);

        let four = rho_abelian(&[(v.clone(), 4)], RhoMode::Integral, &eps, CAP).unwrap();
        assert!(four.width() <= eps);
        // The 4-copy enclosure sits inside 4 x the single enclosure.
        let scaled = scale_value(&single, 4);
        assert!(scaled.lower() <= four.lower() && four.upper() <= scaled.upper());
    }

    #[test]
    fn magnitude_bounds_cover_sign_cases() {
        let pos = IntegralValue::Enclosure { lo: q(1, 2), hi: q(3, 4) };
        assert_eq!(magnitude_bounds(&pos), (q(1, 2), q(3, 4)));
        let neg = IntegralValue::Enclosure { lo: q(-3, 4), hi: q(-1, 2) };
        assert_eq!(magnitude_bounds(&neg), (q(1, 2), q(3, 4)));
        let straddle = IntegralValue::Enclosure { lo: q(-1, 4), hi: q(1, 2) };
        assert_eq!(magnitude_bounds(&straddle), (BigRational::zero(), q(1, 2)));
        let exact = IntegralValue::Exact(q(-4, 3));
        assert_eq!(magnitude_bounds(&exact), (q(4, 3), q(4, 3)));
    }

    #[test]
    fn minimal_copy_counts_are_tight() {
        let t = SeifertMatrix::trefoil();
        let n = min_copies(&t, &q(100, 1), RhoMode::Integral, &q(1, 1000), CAP).unwrap();
        assert_eq!(n, 76);
        // 75 copies give exactly 100, which is not strictly above.
        assert_eq!(q(75, 1) * q(4, 3), q(100, 1));

        assert_eq!(
            min_copies(&t, &BigRational::zero(), RhoMode::Integral, &q(1, 1000), CAP).unwrap(),
            1
        );
        assert_eq!(
            min_copies(&t, &-BigRational::one(), RhoMode::Integral, &q(1, 1000), CAP).unwrap(),
            1
        );

        let stevedore = SeifertMatrix::stevedore();
        assert!(matches!(
            min_copies(&stevedore, &q(100, 1), RhoMode::Integral, &q(1, 1000), CAP),
            Err(Error::CannotAmplify(_))
        ));
    }

    #[test]
    fn minimality_inequality_holds_for_the_returned_count() {
        let t = SeifertMatrix::trefoil();
        for budget in [q(0, 1), q(1, 3), q(4, 3), q(7, 2), q(100, 1), q(1000, 7)] {
            let n = min_copies(&t, &budget, RhoMode::Integral, &q(1, 1000), CAP).unwrap();
            let lower = q(4, 3);
            let n_q = BigRational::from_integer(n.into());
            assert!(&n_q * &lower > budget);
            if n > 1 {
                let prev = BigRational::from_integer((n - 1).into());
                assert!(&prev * &lower <= budget);
            }
        }
    }
}
