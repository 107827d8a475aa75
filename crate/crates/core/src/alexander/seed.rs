//! A one-parameter family of two-variable module presentations arising from
//! satellite seed links. For integer parameter `a` the presentation is the
//! 2x2 matrix
//!
//! ```text
//! [ -1        a*g      ]         g = x + y^-1 - x*y^-1 - 1
//! [ a*bar(g)  a*(g + bar(g)) + 1 ]
//! ```
//!
//! whose determinant is exactly -(a*g + 1) * bar(a*g + 1); the module order is
//! a norm. It is a unit precisely when a = 0.

use crate::exactnum::LaurentPoly;

const VARS: [&str; 2] = ["x", "y"];

/// g = x + y^-1 - x*y^-1 - 1.
fn seed_g() -> LaurentPoly {
    LaurentPoly::from_int_terms(
        &VARS,
        &[(&[1, 0], 1), (&[0, -1], 1), (&[1, -1], -1), (&[0, 0], -1)],
    )
}

/// f = a*g + 1, the factor whose norm is the module order.
pub fn seed_link_f(a: i64) -> LaurentPoly {
    let ag = seed_g().scale(&num_rational::BigRational::from_integer(a.into()));
    &ag + &LaurentPoly::one(&VARS)
}

/// The 2x2 presentation matrix of the seed-link module.
pub fn seed_link_presentation(a: i64) -> Vec<Vec<LaurentPoly>> {
    let a_rat = num_rational::BigRational::from_integer(a.into());
    let g = seed_g();
    let ag = g.scale(&a_rat);
    let ag_bar = ag.bar();
    let m11 = &(&ag + &ag_bar) + &LaurentPoly::one(&VARS);
    vec![
        vec![LaurentPoly::int(&VARS, -1), ag],
        vec![ag_bar, m11],
    ]
}

/// Determinant of the presentation matrix, unnormalized.
pub fn seed_link_det(a: i64) -> LaurentPoly {
    let m = seed_link_presentation(a);
    &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
}

/// Normalized module order of the seed-link module.
pub fn seed_link_order(a: i64) -> LaurentPoly {
    seed_link_det(a).normalized()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_is_minus_norm_of_f() {
        for a in -5..=5 {
            let f = seed_link_f(a);
            let expected = -&(&f * &f.bar());
            assert_eq!(seed_link_det(a), expected, "a = {a}");
        }
    }

    #[test]
    fn order_is_unit_only_at_zero() {
        for a in -5..=5 {
            let order = seed_link_order(a);
            assert_eq!(order.is_unit(), a == 0, "a = {a}");
        }
    }

    #[test]
    fn order_at_one_factors() {
        // f(1) = x + y^-1 - x*y^-1, a unit multiple of 1 - x + x*y;
        // bar(f(1)) is a unit multiple of 1 - y + x*y.
        let p = LaurentPoly::from_int_terms(
            &VARS,
            &[(&[0, 0], 1), (&[1, 0], -1), (&[1, 1], 1)],
        );
        let q = LaurentPoly::from_int_terms(
            &VARS,
            &[(&[0, 0], 1), (&[0, 1], -1), (&[1, 1], 1)],
        );
        assert_eq!(seed_link_order(1), (&p * &q).normalized());
        assert!(seed_link_f(1).eq_up_to_unit(&p));
        assert!(seed_link_f(1).bar().eq_up_to_unit(&q));
    }

    #[test]
    fn presentation_is_hermitian_up_to_the_unit_corner() {
        for a in [1, 3] {
            let m = seed_link_presentation(a);
            assert_eq!(m[0][1].bar(), m[1][0]);
            assert_eq!(m[1][1].bar(), m[1][1], "corner entry is bar-invariant");
        }
    }
}
