//! Circle points where the hermitian family of a Seifert matrix degenerates.
//!
//! Away from `1`, the form `(1-w)V + (1-conj w)V^T` is singular exactly at
//! unit-circle roots of `det(tV - V^T)`, so the signature is locally constant
//! elsewhere. This module isolates those roots on the rational parameter line
//! `s` (where `w = ((1-s^2)+2si)/(1+s^2)`), tagging each one that is a root of
//! unity with its exact order and turn fraction. Roots of unity are found by
//! peeling cyclotomic factors; whatever remains is handled through a real
//! symmetrization in the variable `u = t + 1/t` followed by exact isolation.

use std::cmp::Ordering;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use itertools::Itertools;

use crate::alexander::seifert_characteristic;
use crate::exactnum::{
    cyclotomic_peel, real_cyclotomic_poly, sturm_isolate, QPoly, RealAlgebraic,
};
use crate::knotio::SeifertMatrix;
use crate::{Error, Result};

/// One degeneration point of the hermitian family, on the parameter line.
#[derive(Debug, Clone)]
pub struct JumpPoint {
    /// Parameter of the point `((1-s^2)+2si)/(1+s^2)`.
    pub s: RealAlgebraic,
    /// `Some(d)` when the point is a primitive `d`-th root of unity.
    pub order: Option<u64>,
    /// The point as an exact fraction of a full turn: `(j, d)` means
    /// `e^{2 pi i j/d}` with `0 <= j < d`. Present exactly when `order` is.
    pub turn: Option<(u64, u64)>,
}

/// All degeneration points of the family, conjugate-closed and sorted by
/// increasing parameter; the point `-1` (outside the parameter line) is
/// reported through a flag.
#[derive(Debug, Clone)]
pub struct JumpData {
    pub jumps: Vec<JumpPoint>,
    pub at_minus_one: bool,
}

/// Locates every unit-circle root of `det(tV - V^T)`.
pub fn jump_locations(v: &SeifertMatrix) -> Result<JumpData> {
    let delta = seifert_characteristic(v)?;
    if delta.is_zero() {
        return Err(Error::DegenerateAlexander);
    }
    let (delta_q, _shift) = delta.to_qpoly()?;
    let (cyclotomic, rest) = cyclotomic_peel(&delta_q);

    let mut jumps: Vec<JumpPoint> = Vec::new();
    let mut at_minus_one = false;
    for (d, _multiplicity) in cyclotomic {
        match d {
            1 => jumps.push(JumpPoint {
                s: RealAlgebraic::rational(BigRational::zero()),
                order: Some(1),
                turn: Some((0, 1)),
            }),
            2 => at_minus_one = true,
            _ => jumps.extend(primitive_root_jumps(d)?),
        }
    }
    if rest.deg().map_or(false, |m| m >= 1) {
        let symmetric = circle_real_form(&rest);
        let on_line = parameter_numerator(&symmetric);
        for root in sturm_isolate(&on_line.to_ipoly_primitive()) {
            jumps.push(JumpPoint {
                s: root,
                order: None,
                turn: None,
            });
        }
    }
    sort_jumps(&mut jumps);
    Ok(JumpData {
        jumps,
        at_minus_one,
    })
}

/// The primitive `d`-th roots of unity (for `d >= 3`) as tagged jump points:
/// the minimal polynomial of `2cos(2 pi/d)` is pushed to the parameter line,
/// and its isolated roots are matched to the coprime residues of `d`. Both
/// lists are ordered by increasing parameter: residues above `d/2` (lower
/// half-circle, negative `s`) come first, each block by increasing residue.
fn primitive_root_jumps(d: u64) -> Result<Vec<JumpPoint>> {
    let psi = real_cyclotomic_poly(d);
    let on_line = parameter_numerator(&psi);
    let roots = sturm_isolate(&on_line.to_ipoly_primitive());
    let coprime: Vec<u64> = (1..d).filter(|j| j.gcd(&d) == 1).collect();
    let mut residues: Vec<u64> = coprime.iter().copied().filter(|&j| 2 * j > d).collect();
    residues.extend(coprime.iter().copied().filter(|&j| 2 * j < d));
    if roots.len() != residues.len() {
        return Err(Error::Inconsistent(format!(
            "expected {} parameter-line roots for the primitive {}-th roots of unity, found {}",
            residues.len(),
            d,
            roots.len()
        )));
    }
    Ok(roots
        .into_iter()
        .zip(residues)
        .map(|(s, j)| JumpPoint {
            s,
            order: Some(d),
            turn: Some((j, d)),
        })
        .collect())
}

/// For `p` with no roots at `0`, `1`, or `-1`: a polynomial in `u = t + 1/t`
/// whose roots in `(-2, 2)` are exactly `w + conj w` over the conjugate pairs
/// `{w, conj w}` of unit-circle roots of `p`. Built as the palindromic product
/// of `p` with its coefficient reversal, re-expressed in `u`.
fn circle_real_form(p: &QPoly) -> QPoly {
    // Strip any power of t: roots at 0 are not circle points.
    let low = p
        .coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let stripped = QPoly::new(p.coeffs[low..].to_vec());
    let m = stripped.deg().unwrap_or(0);
    let reversed = QPoly::new(stripped.coeffs.iter().rev().cloned().collect());
    let g = stripped.mul(&reversed); // palindromic of degree 2m
    // g / t^m = g_m + sum_{k>=1} g_{m+k} (t^k + t^{-k}); rewrite the bracket
    // through the recurrence c_0 = 2, c_1 = u, c_{k+1} = u c_k - c_{k-1}.
    let mut acc = QPoly::constant(g.coeff(m));
    let mut prev = QPoly::constant(BigRational::from_integer(2.into()));
    let mut cur = QPoly::x();
    for k in 1..=m {
        acc = acc.add(&cur.scale(&g.coeff(m + k)));
        let next = QPoly::x().mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    acc
}

/// Numerator of `r(2(1-s^2)/(1+s^2))`: pushes a polynomial in `u = w + conj w`
/// down to the parameter line.
fn parameter_numerator(r: &QPoly) -> QPoly {
    let two = BigRational::from_integer(2.into());
    let num = QPoly::new(vec![two.clone(), BigRational::zero(), -two]);
    let den = QPoly::new(vec![
        BigRational::one(),
        BigRational::zero(),
        BigRational::one(),
    ]);
    r.compose_fraction(&num, &den)
}

/// Insertion sort by exact comparison of the isolated parameters.
fn sort_jumps(jumps: &mut [JumpPoint]) {
    for i in 1..jumps.len() {
        let mut j = i;
        while j > 0 {
            let (before, after) = jumps.split_at_mut(j);
            if after[0].s.cmp_mut(&mut before[j - 1].s) == Ordering::Less {
                jumps.swap(j - 1, j);
                j -= 1;
            } else {
                break;
            }
        }
    }
}

/// Numerators of the real and imaginary parts of `q(w(s))` where
/// `w(s) = ((1-s^2) + 2si)/(1+s^2)`; the common denominator `(1+s^2)^deg` is
/// positive, so `q` vanishes at a circle point iff both numerators vanish at
/// its parameter.
fn circle_numerators(q: &QPoly) -> (QPoly, QPoly) {
    let m = match q.deg() {
        None => return (QPoly::zero(), QPoly::zero()),
        Some(m) => m,
    };
    let one = BigRational::one();
    let two = BigRational::from_integer(2.into());
    let w_re = QPoly::new(vec![one.clone(), BigRational::zero(), -one.clone()]);
    let w_im = QPoly::new(vec![BigRational::zero(), two]);
    let den = QPoly::new(vec![one.clone(), BigRational::zero(), one]);
    let mut acc_re = QPoly::constant(q.coeff(m));
    let mut acc_im = QPoly::zero();
    let mut den_pow = QPoly::one();
    for k in (0..m).rev() {
        den_pow = den_pow.mul(&den);
        let re = acc_re.mul(&w_re).sub(&acc_im.mul(&w_im));
        let im = acc_re.mul(&w_im).add(&acc_im.mul(&w_re));
        acc_re = re.add(&den_pow.scale(&q.coeff(k)));
        acc_im = im;
    }
    (acc_re, acc_im)
}

/// Does `q` vanish at the circle point with parameter `s`?
fn vanishes_on_circle(q: &QPoly, s: &RealAlgebraic) -> bool {
    if q.is_zero() {
        return true;
    }
    let (re, im) = circle_numerators(q);
    let re_ok = re.is_zero() || s.is_root_of(&re.to_ipoly_primitive());
    let im_ok = im.is_zero() || s.is_root_of(&im.to_ipoly_primitive());
    re_ok && im_ok
}

/// Determinant of a small matrix of polynomials, by Laplace expansion.
fn poly_det(m: &[Vec<QPoly>]) -> QPoly {
    let n = m.len();
    if n == 0 {
        return QPoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = QPoly::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<QPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&poly_det(&minor));
        det = if j % 2 == 0 {
            det.add(&term)
        } else {
            det.sub(&term)
        };
    }
    det
}

/// Kernel dimension of `wV - V^T` at the circle point with parameter `s`,
/// which for `w != 1` equals the nullity of the hermitian form there. The rank
/// is read off from which greatest common divisors of `k x k` minors of the
/// polynomial pencil vanish at the point, so no arithmetic in the algebraic
/// coefficient field is needed.
pub fn pencil_nullity_at(v: &SeifertMatrix, s: &RealAlgebraic) -> Result<usize> {
    let n = v.size();
    let pencil: Vec<Vec<QPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    QPoly::new(vec![
                        BigRational::from_integer((-v.get(j, i)).into()),
                        BigRational::from_integer(v.get(i, j).into()),
                    ])
                })
                .collect()
        })
        .collect();
    let indices: Vec<usize> = (0..n).collect();
    for k in (1..=n).rev() {
        let mut gcd = QPoly::zero();
        'minors: for rows in indices.iter().combinations(k) {
            for cols in indices.iter().combinations(k) {
                let sub: Vec<Vec<QPoly>> = rows
                    .iter()
                    .map(|&&r| cols.iter().map(|&&c| pencil[r][c].clone()).collect())
                    .collect();
                gcd = gcd.gcd(&poly_det(&sub));
                if gcd.deg() == Some(0) {
                    break 'minors;
                }
            }
        }
        if !vanishes_on_circle(&gcd, s) {
            return Ok(n - k);
        }
    }
    Ok(n)
}
