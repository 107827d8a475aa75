//! Property-based invariants on the exact-arithmetic layer, plus seeded
//! randomized cross-module checks that tie the layers together.

use concordance_core::alexander::alexander_from_seifert;
use concordance_core::exactnum::LaurentPoly;
use concordance_core::knotio::SeifertMatrix;
use concordance_core::ltsig::{inertia_at, CirclePoint};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const VARS: [&str; 2] = ["x", "y"];

/// A random two-variable Laurent polynomial with small support.
fn laurent_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(
        ((-3i64..=3, -3i64..=3), -9i64..=9),
        0..6,
    )
    .prop_map(|terms| {
        let spec: Vec<(Vec<i64>, i64)> = terms
            .into_iter()
            .map(|((a, b), c)| (vec![a, b], c))
            .collect();
        let borrowed: Vec<(&[i64], i64)> =
            spec.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
        LaurentPoly::from_int_terms(&VARS, &borrowed)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// The ring axioms interact with the canonical (sorted, zero-free)
    /// representation: arithmetic on any operand order lands on identical
    /// term maps, and multiplication distributes over addition.
    #[test]
    fn laurent_ring_identities(
        p in laurent_strategy(),
        q in laurent_strategy(),
        r in laurent_strategy(),
    ) {
        let pq = p.try_add(&q).unwrap();
        let qp = q.try_add(&p).unwrap();
        prop_assert_eq!(&pq, &qp);

        let pq_m = p.try_mul(&q).unwrap();
        let qp_m = q.try_mul(&p).unwrap();
        prop_assert_eq!(&pq_m, &qp_m);

        let left = p.try_mul(&q.try_add(&r).unwrap()).unwrap();
        let right = p
            .try_mul(&q)
            .unwrap()
            .try_add(&p.try_mul(&r).unwrap())
            .unwrap();
        prop_assert_eq!(left, right);

        let zero = LaurentPoly::zero(&VARS);
        prop_assert_eq!(p.try_add(&(-&p)).unwrap(), zero);
    }

    /// The bar involution (every variable inverted) is a ring involution:
    /// it is self-inverse and commutes with products and sums.
    #[test]
    fn bar_is_a_ring_involution(p in laurent_strategy(), q in laurent_strategy()) {
        prop_assert_eq!(p.bar().bar(), p.clone());
        prop_assert_eq!(
            p.try_mul(&q).unwrap().bar(),
            p.bar().try_mul(&q.bar()).unwrap()
        );
        prop_assert_eq!(
            p.try_add(&q).unwrap().bar(),
            p.bar().try_add(&q.bar()).unwrap()
        );
    }
}

/// A random Seifert matrix of a knot: V - V^T is the standard symplectic
/// form, so the input is always the Seifert matrix of a genus-(n/2) surface.
fn random_knot_seifert(rng: &mut ChaCha8Rng, genus: usize) -> SeifertMatrix {
    let n = 2 * genus;
    let mut entries = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            entries[i][j] = rng.random_range(-2..=2);
        }
    }
    // Overwrite the pairs (2k, 2k+1) so that V - V^T is symplectic.
    for k in 0..genus {
        let (i, j) = (2 * k, 2 * k + 1);
        entries[j][i] = entries[i][j] - 1;
    }
    for i in 0..n {
        for j in i..n {
            if j > i && !(j == i + 1 && i % 2 == 0) {
                entries[j][i] = entries[i][j];
            }
        }
    }
    SeifertMatrix::new(entries).expect("square matrix")
}

/// Exact inertia respects mirror images: the mirror has Seifert matrix
/// -V^T, which swaps the positive and negative parts at every circle point.
#[test]
fn seeded_mirror_symmetry_across_layers() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for _ in 0..25 {
        let genus = rng.random_range(1..=2);
        let v = random_knot_seifert(&mut rng, genus);
        let mirror = SeifertMatrix::new(
            (0..v.size())
                .map(|i| (0..v.size()).map(|j| -v.entries()[j][i]).collect())
                .collect(),
        )
        .unwrap();
        for _ in 0..4 {
            let num = rng.random_range(-40i64..=40);
            let den = rng.random_range(1i64..=40);
            let s = BigRational::new(num.into(), den.into());
            let point = CirclePoint::Param(s);
            let a = inertia_at(&v, &point).unwrap();
            let b = inertia_at(&mirror, &point).unwrap();
            assert_eq!(a.pos, b.neg);
            assert_eq!(a.neg, b.pos);
            assert_eq!(a.null, b.null);
        }
    }
}

/// The Alexander polynomial of a knot Seifert matrix is symmetric up to
/// units (bar-invariant) whenever it is defined.
#[test]
fn seeded_alexander_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xA1E8A ^ 0xFFFF);
    let mut checked = 0;
    for _ in 0..40 {
        let genus = rng.random_range(1..=2);
        let v = random_knot_seifert(&mut rng, genus);
        if let Ok(delta) = alexander_from_seifert(&v) {
            assert!(
                delta.eq_up_to_unit(&delta.bar()),
                "Alexander polynomial must be bar-symmetric up to units: {delta}"
            );
            checked += 1;
        }
    }
    assert!(checked >= 20, "enough nondegenerate samples: {checked}");
}
