//! Alexander polynomials of knots and links, from diagrams (via Fox calculus)
//! and from Seifert matrices (via det(tV - V^T)).

use std::collections::HashMap;

use itertools::Itertools;

use super::fox::fox_matrix;
use crate::exactnum::LaurentPoly;
use crate::knotio::{wirtinger_presentation, PDCode, SeifertMatrix, WirtingerPresentation};
use crate::{Error, Result};

/// Canonical variable names: `t` for knots, `x, y` for two components,
/// `x1..xn` beyond that.
pub fn link_vars(mu: usize) -> Vec<String> {
    match mu {
        0 => vec![],
        1 => vec!["t".into()],
        2 => vec!["x".into(), "y".into()],
        n => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

/// Determinant of a square matrix of Laurent polynomials, by cofactor
/// expansion memoized on the set of live columns.
pub fn laurent_det(vars: &[&str], m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = m.len();
    if n > 20 {
        return Err(Error::BadInput(format!(
            "determinant of {n}x{n} symbolic matrix is too large"
        )));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::BadInput(format!(
                "row {i} has {} entries in a {n}x{n} determinant",
                row.len()
            )));
        }
    }
    let mut memo: HashMap<u32, LaurentPoly> = HashMap::new();
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    det_rec(vars, m, full, &mut memo)
}

fn det_rec(
    vars: &[&str],
    m: &[Vec<LaurentPoly>],
    colmask: u32,
    memo: &mut HashMap<u32, LaurentPoly>,
) -> Result<LaurentPoly> {
    if colmask == 0 {
        return Ok(LaurentPoly::one(vars));
    }
    if let Some(p) = memo.get(&colmask) {
        return Ok(p.clone());
    }
    let n = m.len();
    let row = n - colmask.count_ones() as usize;
    let mut acc = LaurentPoly::zero(vars);
    let mut parity = 0u32;
    for col in 0..n {
        if colmask & (1 << col) == 0 {
            continue;
        }
        let entry = &m[row][col];
        if !entry.is_zero() {
            let sub = det_rec(vars, m, colmask & !(1 << col), memo)?;
            let term = entry.try_mul(&sub)?;
            acc = if parity % 2 == 0 {
                acc.try_add(&term)?
            } else {
                acc.try_sub(&term)?
            };
        }
        parity += 1;
    }
    memo.insert(colmask, acc.clone());
    Ok(acc)
}

/// Alexander polynomial from a Wirtinger presentation, deleting the given
/// generator column from the abelianized Jacobian. The result is independent
/// of the choice (up to units, which normalization removes).
pub fn alexander_from_wirtinger_deleting(
    w: &WirtingerPresentation,
    deleted: usize,
) -> Result<LaurentPoly> {
    alexander_from_presentation(w.presentation(), w.meridian_components(), deleted)
}

/// Alexander polynomial of any meridional presentation: each generator is
/// assigned the link component whose meridian variable it abelianizes to,
/// the Fox Jacobian is abelianized, the given column is deleted, and the
/// first elementary ideal's gcd is extracted (with the extra `t_c - 1`
/// factor divided out for links).
pub fn alexander_from_presentation(
    presentation: &crate::knotio::GroupPresentation,
    meridian_components: &[usize],
    deleted: usize,
) -> Result<LaurentPoly> {
    let mu = meridian_components
        .iter()
        .copied()
        .max()
        .map_or(0, |m| m + 1);
    let var_names = link_vars(mu);
    let vars: Vec<&str> = var_names.iter().map(|s| s.as_str()).collect();
    let n = presentation.num_generators();
    if deleted >= n {
        return Err(Error::BadInput(format!(
            "cannot delete column {deleted} of {n}"
        )));
    }
    let mat = fox_matrix(presentation, meridian_components, &vars)?;
    if n == 1 {
        // Single arc: no crossings on this component set; trivial module.
        return Ok(LaurentPoly::one(&vars));
    }
    let reduced: Vec<Vec<LaurentPoly>> = mat
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != deleted)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect();
    let k = n - 1; // minor size
    if reduced.len() < k {
        // Fewer relations than needed: the first elementary ideal vanishes.
        return Ok(LaurentPoly::zero(&vars));
    }
    let mut gcd_acc = LaurentPoly::zero(&vars);
    for rows in (0..reduced.len()).combinations(k) {
        let sub: Vec<Vec<LaurentPoly>> = rows.iter().map(|&r| reduced[r].clone()).collect();
        let d = laurent_det(&vars, &sub)?;
        if d.is_zero() {
            continue;
        }
        gcd_acc = if gcd_acc.is_zero() {
            d
        } else {
            gcd_acc.gcd(&d)?
        };
        if gcd_acc.is_unit() {
            break;
        }
    }
    if gcd_acc.is_zero() {
        return Ok(gcd_acc);
    }
    if mu >= 2 {
        // The deleted-column minor ideal carries an extra factor of
        // (t_c - 1) for the component c of the deleted meridian.
        let comp = meridian_components[deleted];
        gcd_acc = gcd_acc.div_exact_var_minus_one(comp)?;
    }
    Ok(gcd_acc.normalized())
}

/// Alexander polynomial of the link presented by a planar diagram.
pub fn alexander_polynomial(pd: &PDCode) -> Result<LaurentPoly> {
    let w = wirtinger_presentation(pd)?;
    alexander_from_wirtinger_deleting(&w, 0)
}

/// Alexander polynomial det(tV - V^T) of a Seifert matrix, normalized.
/// Errors when the determinant vanishes identically.
pub fn alexander_from_seifert(v: &SeifertMatrix) -> Result<LaurentPoly> {
    let p = seifert_characteristic(v)?;
    if p.is_zero() {
        return Err(Error::DegenerateAlexander);
    }
    Ok(p.normalized())
}

/// det(tV - V^T) without normalization (useful as a pairing denominator).
pub fn seifert_characteristic(v: &SeifertMatrix) -> Result<LaurentPoly> {
    let vars = ["t"];
    let n = v.size();
    let mut m = vec![vec![LaurentPoly::zero(&vars); n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = LaurentPoly::from_int_terms(
                &vars,
                &[(&[1], v.get(i, j)), (&[0], -v.get(j, i))],
            );
        }
    }
    laurent_det(&vars, &m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Signed};

    fn t_poly(terms: &[(i64, i64)]) -> LaurentPoly {
        let owned: Vec<(Vec<i64>, i64)> = terms.iter().map(|&(e, c)| (vec![e], c)).collect();
        let slices: Vec<(&[i64], i64)> = owned.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
        LaurentPoly::from_int_terms(&["t"], &slices)
    }

    #[test]
    fn trefoil_from_diagram() {
        let d = alexander_polynomial(&PDCode::trefoil()).unwrap();
        assert_eq!(d, t_poly(&[(0, 1), (1, -1), (2, 1)]));
    }

    #[test]
    fn figure_eight_from_diagram() {
        let d = alexander_polynomial(&PDCode::figure_eight()).unwrap();
        assert_eq!(d, t_poly(&[(0, 1), (1, -3), (2, 1)]));
    }

    #[test]
    fn unknot_is_trivial() {
        let d = alexander_polynomial(&PDCode::unknot()).unwrap();
        assert!(d.is_one());
    }

    #[test]
    fn hopf_link_polynomial_is_one() {
        let d = alexander_polynomial(&PDCode::positive_hopf()).unwrap();
        assert!(d.is_one(), "got {d}");
    }

    #[test]
    fn seifert_route_matches_diagram_route() {
        let from_v = alexander_from_seifert(&SeifertMatrix::trefoil()).unwrap();
        let from_pd = alexander_polynomial(&PDCode::trefoil()).unwrap();
        assert_eq!(from_v, from_pd.rename_vars(&["t"]).unwrap());
        let v8 = alexander_from_seifert(&SeifertMatrix::figure_eight()).unwrap();
        assert_eq!(v8, t_poly(&[(0, 1), (1, -3), (2, 1)]));
    }

    #[test]
    fn stevedore_characteristic() {
        let d = alexander_from_seifert(&SeifertMatrix::stevedore()).unwrap();
        assert_eq!(d, t_poly(&[(0, 2), (1, -5), (2, 2)]));
    }

    #[test]
    fn knot_polynomial_evaluates_to_unit_at_one() {
        for pd in [PDCode::trefoil(), PDCode::figure_eight()] {
            let d = alexander_polynomial(&pd).unwrap();
            let v = d
                .eval_rat(&[BigRational::one()])
                .unwrap();
            assert_eq!(v.abs(), BigRational::one(), "Alexander value at 1");
        }
    }

    #[test]
    fn deleted_column_independence() {
        for pd in [PDCode::trefoil(), PDCode::figure_eight(), PDCode::positive_hopf()] {
            let w = wirtinger_presentation(&pd).unwrap();
            let base = alexander_from_wirtinger_deleting(&w, 0).unwrap();
            for j in 1..w.num_arcs() {
                let other = alexander_from_wirtinger_deleting(&w, j).unwrap();
                assert_eq!(base, other, "column {j} of {pd:?}");
            }
        }
    }

    #[test]
    fn degenerate_seifert_matrix_errors() {
        let z = SeifertMatrix::new(vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert!(matches!(
            alexander_from_seifert(&z),
            Err(Error::DegenerateAlexander)
        ));
    }

    #[test]
    fn determinant_helper_small_cases() {
        let vars = ["t"];
        let one = LaurentPoly::one(&vars);
        let t = LaurentPoly::var(&vars, 0);
        // det [[t, 1], [1, 1]] = t - 1
        let d = laurent_det(&vars, &[vec![t.clone(), one.clone()], vec![one.clone(), one.clone()]])
            .unwrap();
        assert_eq!(d, LaurentPoly::from_int_terms(&vars, &[(&[1], 1), (&[0], -1)]));
        assert!(laurent_det(&vars, &[]).unwrap().is_one());
    }
}
