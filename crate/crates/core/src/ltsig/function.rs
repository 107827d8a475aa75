//! The signature of a Seifert matrix as a step function on the unit circle.
//!
//! The function is represented by its jump points together with one exact
//! inertia computation per complementary arc (the form is constant there, so
//! any interior rational sample determines the arc). Several symmetry and
//! boundary invariants of the finished function are checked before it is
//! returned; a failure means the construction itself went wrong and surfaces
//! as an error rather than a wrong answer.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::hermitian::{inertia_at, CirclePoint, Inertia};
use super::jumps::{jump_locations, pencil_nullity_at, JumpPoint};
use crate::exactnum::RealAlgebraic;
use crate::knotio::{SeifertMatrix, SurfaceKind};
use crate::{Error, Result};

/// One arc of constancy, witnessed by an interior rational parameter.
#[derive(Debug, Clone)]
pub struct ArcSample {
    pub s: BigRational,
    pub inertia: Inertia,
}

/// One jump point with whatever exact data is available there: roots of unity
/// get a full inertia; other algebraic points get their nullity from the
/// polynomial pencil.
#[derive(Debug, Clone)]
pub struct JumpDetail {
    pub point: JumpPoint,
    pub inertia: Option<Inertia>,
    pub nullity: usize,
}

/// The complete signature step function of a Seifert matrix.
#[derive(Debug, Clone)]
pub struct SignatureFunction {
    /// Size of the underlying matrix.
    pub size: usize,
    /// Jump points, ascending in the circle parameter.
    pub jumps: Vec<JumpDetail>,
    /// Arc data: entry `i` lies between jumps `i-1` and `i`, so there is one
    /// more arc than jumps (the outermost two meet at `-1`).
    pub arcs: Vec<ArcSample>,
    /// Exact inertia at the point `-1` itself.
    pub at_minus_one: Inertia,
    /// Whether the form degenerates at `-1`.
    pub jump_at_minus_one: bool,
}

impl SignatureFunction {
    pub fn arc_signatures(&self) -> Vec<i64> {
        self.arcs.iter().map(|a| a.inertia.signature()).collect()
    }

    /// True when the signature vanishes on every arc and at `-1`.
    pub fn is_identically_zero(&self) -> bool {
        self.at_minus_one.signature() == 0
            && self.arcs.iter().all(|a| a.inertia.signature() == 0)
    }

    /// Largest absolute signature over the arcs and `-1`.
    pub fn max_abs_signature(&self) -> i64 {
        self.arcs
            .iter()
            .map(|a| a.inertia.signature().abs())
            .chain(std::iter::once(self.at_minus_one.signature().abs()))
            .max()
            .unwrap_or(0)
    }
}

/// Signature of the form of `v` at a single circle point.
pub fn signature_at(v: &SeifertMatrix, point: &CirclePoint) -> Result<i64> {
    inertia_at(v, point).map(|i| i.signature())
}

/// Computes the full signature step function of `v`.
pub fn signature_function(v: &SeifertMatrix) -> Result<SignatureFunction> {
    let data = jump_locations(v)?;
    let mut jumps = data.jumps;

    // A knot's form never degenerates at 1, so 0 sits in an open arc; count
    // the jumps below it while we still own them mutably.
    let jumps_below_zero = {
        let mut zero = RealAlgebraic::rational(BigRational::zero());
        let mut count = 0;
        for j in jumps.iter_mut() {
            if j.s.cmp_mut(&mut zero) == std::cmp::Ordering::Less {
                count += 1;
            }
        }
        count
    };

    let samples = arc_samples(&mut jumps)?;
    let mut arcs = Vec::with_capacity(samples.len());
    for s in samples {
        let inertia = inertia_at(v, &CirclePoint::Param(s.clone()))?;
        arcs.push(ArcSample { s, inertia });
    }

    let mut details = Vec::with_capacity(jumps.len());
    for point in jumps {
        let detail = match point.turn {
            Some((j, d)) => {
                let inertia = inertia_at(v, &CirclePoint::RootOfUnity { k: j, p: d })?;
                JumpDetail {
                    point,
                    inertia: Some(inertia),
                    nullity: inertia.null,
                }
            }
            None => {
                let nullity = pencil_nullity_at(v, &point.s)?;
                JumpDetail {
                    point,
                    inertia: None,
                    nullity,
                }
            }
        };
        details.push(detail);
    }

    let function = SignatureFunction {
        size: v.size(),
        jumps: details,
        arcs,
        at_minus_one: inertia_at(v, &CirclePoint::MinusOne)?,
        jump_at_minus_one: data.at_minus_one,
    };
    validate(&function, v.kind(), jumps_below_zero)?;
    Ok(function)
}

/// One interior rational parameter per arc. The parameter 0 (the point `1`,
/// where the form vanishes identically and witnesses nothing) is avoided.
fn arc_samples(jumps: &mut [JumpPoint]) -> Result<Vec<BigRational>> {
    let m = jumps.len();
    let mut samples = Vec::with_capacity(m + 1);
    if m == 0 {
        samples.push(BigRational::one());
        return Ok(samples);
    }
    samples.push(jumps[0].s.lo().floor() - BigRational::one());
    for i in 0..m - 1 {
        let (a, b) = jumps.split_at_mut(i + 1);
        samples.push(a[i].s.rational_between(&mut b[0].s));
    }
    samples.push(jumps[m - 1].s.hi().ceil() + BigRational::one());

    if let Some(i) = samples.iter().position(|s| s.is_zero()) {
        if i == m {
            // Unbounded upper arc containing 0: anything positive works.
            samples[i] = BigRational::one();
        } else {
            // The arc's upper boundary is a positive jump; move the sample
            // between 0 and it.
            for _ in 0..100_000 {
                if jumps[i].s.lo() > &BigRational::zero() {
                    break;
                }
                jumps[i].s.refine();
            }
            let lo = jumps[i].s.lo();
            if lo <= &BigRational::zero() {
                return Err(Error::Inconsistent(
                    "failed to separate a jump parameter from 0".into(),
                ));
            }
            samples[i] = lo / BigRational::from_integer(2.into());
        }
    }
    Ok(samples)
}

/// Internal consistency of a finished signature function:
/// conjugation symmetry, continuity into `-1`, and (for knots) vanishing on
/// the arc through `1`.
fn validate(f: &SignatureFunction, kind: SurfaceKind, jumps_below_zero: usize) -> Result<()> {
    let m = f.jumps.len();
    for arc in &f.arcs {
        if arc.inertia.size() != f.size {
            return Err(Error::Inconsistent(format!(
                "arc inertia {} does not account for the full rank {}",
                arc.inertia, f.size
            )));
        }
    }
    // Complex conjugation w -> conj(w) reverses the parameter line and fixes
    // the form up to transposition, so everything must be mirror-symmetric.
    for i in 0..=m / 2 {
        let (a, b) = (&f.arcs[i].inertia, &f.arcs[m - i].inertia);
        if a != b {
            return Err(Error::Inconsistent(format!(
                "conjugation symmetry broken on arcs {} and {}: {} vs {}",
                i,
                m - i,
                a,
                b
            )));
        }
    }
    for i in 0..m {
        let (a, b) = (&f.jumps[i], &f.jumps[m - 1 - i]);
        if a.nullity != b.nullity || a.inertia != b.inertia {
            return Err(Error::Inconsistent(format!(
                "conjugation symmetry broken at jumps {} and {}",
                i,
                m - 1 - i
            )));
        }
        match (a.point.turn, b.point.turn) {
            (Some((ja, d)), Some((jb, db))) => {
                if d != db || (ja + jb) % d != 0 {
                    return Err(Error::Inconsistent(format!(
                        "mirrored jumps carry non-conjugate turns {}/{} and {}/{}",
                        ja, d, jb, db
                    )));
                }
            }
            (None, None) => {}
            _ => {
                return Err(Error::Inconsistent(
                    "mirrored jumps disagree about being roots of unity".into(),
                ))
            }
        }
    }
    if f.jump_at_minus_one {
        if f.at_minus_one.null == 0 {
            return Err(Error::Inconsistent(
                "the form was reported degenerate at -1 but has no kernel there".into(),
            ));
        }
    } else {
        let (first, last) = (&f.arcs[0].inertia, &f.arcs[m].inertia);
        if f.at_minus_one.null != 0 || &f.at_minus_one != first || first != last {
            return Err(Error::Inconsistent(format!(
                "signature is not continuous through -1: arcs {} / {} vs point value {}",
                first, last, f.at_minus_one
            )));
        }
    }
    if kind == SurfaceKind::Knot {
        let through_one = &f.arcs[jumps_below_zero].inertia;
        if through_one.signature() != 0 || through_one.null != 0 {
            return Err(Error::Inconsistent(format!(
                "a knot form must be balanced and nondegenerate near 1, found {}",
                through_one
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inertia(pos: usize, neg: usize, null: usize) -> Inertia {
        Inertia { pos, neg, null }
    }

    #[test]
    fn trefoil_signature_function() {
        let f = signature_function(&SeifertMatrix::trefoil()).unwrap();
        assert_eq!(f.arc_signatures(), vec![-2, 0, -2]);
        assert_eq!(f.at_minus_one, inertia(0, 2, 0));
        assert!(!f.jump_at_minus_one);
        assert_eq!(f.jumps.len(), 2);
        for j in &f.jumps {
            assert_eq!(j.inertia, Some(inertia(0, 1, 1)));
            assert_eq!(j.nullity, 1);
        }
        assert_eq!(f.max_abs_signature(), 2);
        assert!(!f.is_identically_zero());
    }

    #[test]
    fn mirror_trefoil_flips_the_sign() {
        // Negating and transposing a Seifert matrix mirrors the knot.
        let v = SeifertMatrix::new(vec![vec![1, 0], vec![-1, 1]]).unwrap();
        let f = signature_function(&v).unwrap();
        assert_eq!(f.arc_signatures(), vec![2, 0, 2]);
        assert_eq!(f.at_minus_one, inertia(2, 0, 0));
    }

    #[test]
    fn zero_signature_knots_have_constant_zero_function() {
        for v in [SeifertMatrix::figure_eight(), SeifertMatrix::stevedore()] {
            let f = signature_function(&v).unwrap();
            assert!(f.jumps.is_empty());
            assert_eq!(f.arc_signatures(), vec![0]);
            assert_eq!(f.at_minus_one, inertia(1, 1, 0));
            assert!(f.is_identically_zero());
            assert_eq!(f.max_abs_signature(), 0);
            // The lone sample must avoid the degenerate point 1.
            assert!(!f.arcs[0].s.is_zero());
        }
    }

    #[test]
    fn annulus_link_jumps_at_one() {
        let v = SeifertMatrix::new(vec![vec![1]]).unwrap();
        let f = signature_function(&v).unwrap();
        assert_eq!(f.arc_signatures(), vec![1, 1]);
        assert_eq!(f.jumps.len(), 1);
        assert_eq!(f.jumps[0].inertia, Some(inertia(0, 0, 1)));
        assert_eq!(f.jumps[0].nullity, 1);
        assert_eq!(f.at_minus_one, inertia(1, 0, 0));
    }

    #[test]
    fn untagged_jumps_still_get_nullity() {
        let v = SeifertMatrix::new(vec![vec![2, 1], vec![0, 1]]).unwrap();
        let f = signature_function(&v).unwrap();
        assert_eq!(f.arc_signatures(), vec![2, 0, 2]);
        for j in &f.jumps {
            assert_eq!(j.inertia, None);
            assert_eq!(j.nullity, 1);
        }
        assert_eq!(f.at_minus_one.signature(), 2);
    }

    #[test]
    fn connected_sum_doubles_everything() {
        let v = SeifertMatrix::trefoil().connected_sum(&SeifertMatrix::trefoil());
        let f = signature_function(&v).unwrap();
        assert_eq!(f.arc_signatures(), vec![-4, 0, -4]);
        assert_eq!(f.jumps.len(), 2);
        for j in &f.jumps {
            assert_eq!(j.inertia, Some(inertia(0, 2, 2)));
            assert_eq!(j.nullity, 2);
        }
    }

    #[test]
    fn degenerate_pencil_is_an_error() {
        let v = SeifertMatrix::new(vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert!(matches!(
            signature_function(&v),
            Err(Error::DegenerateAlexander)
        ));
    }

    #[test]
    fn point_queries_match_the_function() {
        let v = SeifertMatrix::trefoil();
        assert_eq!(signature_at(&v, &CirclePoint::MinusOne).unwrap(), -2);
        assert_eq!(
            signature_at(&v, &CirclePoint::RootOfUnity { k: 1, p: 6 }).unwrap(),
            -1
        );
        assert_eq!(
            signature_at(&v, &CirclePoint::Param(BigRational::zero())).unwrap(),
            0
        );
    }
}
