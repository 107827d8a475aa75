//! Sums of signatures over the nontrivial `p`-th roots of unity.
//!
//! Every term is evaluated in the exact cyclotomic field of the point, so the
//! sum is correct even when some root of unity is a degeneration point of the
//! form (no perturbation or averaging convention is involved).

use super::hermitian::{inertia_at, CirclePoint, Inertia};
use crate::knotio::SeifertMatrix;
use crate::{Error, Result};

/// The inertia at one root of unity `e^{2 pi i k/p}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumTerm {
    pub k: u64,
    pub inertia: Inertia,
}

/// Signature data over all nontrivial `p`-th roots of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootOfUnitySum {
    pub order: u64,
    /// One term for each `k` in `1..p`, in order.
    pub terms: Vec<SumTerm>,
}

impl RootOfUnitySum {
    pub fn signature_sum(&self) -> i64 {
        self.terms.iter().map(|t| t.inertia.signature()).sum()
    }

    pub fn nullity_sum(&self) -> usize {
        self.terms.iter().map(|t| t.inertia.null).sum()
    }
}

/// Sums the signature of `v` over `e^{2 pi i k/p}` for `k = 1, ..., p-1`.
/// The order `p` may be any positive integer; `p = 1` gives the empty sum.
pub fn root_of_unity_sum(v: &SeifertMatrix, p: u64) -> Result<RootOfUnitySum> {
    if p == 0 {
        return Err(Error::BadOrder(0));
    }
    let mut terms = Vec::with_capacity((p - 1) as usize);
    for k in 1..p {
        let inertia = inertia_at(v, &CirclePoint::RootOfUnity { k, p })?;
        terms.push(SumTerm { k, inertia });
    }
    Ok(RootOfUnitySum { order: p, terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inertia(pos: usize, neg: usize, null: usize) -> Inertia {
        Inertia { pos, neg, null }
    }

    #[test]
    fn trefoil_sums_at_small_orders() {
        let v = SeifertMatrix::trefoil();
        assert_eq!(root_of_unity_sum(&v, 1).unwrap().signature_sum(), 0);
        assert_eq!(root_of_unity_sum(&v, 2).unwrap().signature_sum(), -2);
        assert_eq!(root_of_unity_sum(&v, 3).unwrap().signature_sum(), -4);
    }

    #[test]
    fn trefoil_sum_at_order_six_meets_two_jump_points() {
        let v = SeifertMatrix::trefoil();
        let sum = root_of_unity_sum(&v, 6).unwrap();
        let inertias: Vec<Inertia> = sum.terms.iter().map(|t| t.inertia).collect();
        assert_eq!(
            inertias,
            vec![
                inertia(0, 1, 1), // primitive sixth root: a jump point
                inertia(0, 2, 0), // primitive cube root
                inertia(0, 2, 0), // -1
                inertia(0, 2, 0),
                inertia(0, 1, 1),
            ]
        );
        assert_eq!(sum.signature_sum(), -8);
        assert_eq!(sum.nullity_sum(), 2);
    }

    #[test]
    fn zero_signature_matrices_sum_to_zero() {
        for v in [SeifertMatrix::figure_eight(), SeifertMatrix::stevedore()] {
            for p in [2, 3, 4, 5, 6] {
                let sum = root_of_unity_sum(&v, p).unwrap();
                assert_eq!(sum.signature_sum(), 0, "order {}", p);
                assert_eq!(sum.nullity_sum(), 0, "order {}", p);
            }
        }
    }

    #[test]
    fn order_zero_is_rejected() {
        let v = SeifertMatrix::trefoil();
        assert!(matches!(
            root_of_unity_sum(&v, 0),
            Err(Error::BadOrder(0))
        ));
    }
}
