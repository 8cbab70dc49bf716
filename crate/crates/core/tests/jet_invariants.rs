mod common;

use common::*;
use jetclosure_core::jets::{fiber_ideal, hs_derivations, jet_ideal, JetRing};
use jetclosure_core::{FieldSpec, Polynomial};
use proptest::prelude::*;

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::prime(5).unwrap())
    ]
}

/// Σ_{i+j=m} a_i b_j for m = 0..len.
fn convolve(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    (0..a.len())
        .map(|m| {
            (0..=m).fold(Polynomial::zero(a[0].ring()), |acc, i| {
                &acc + &(&a[i] * &b[m - i])
            })
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn leibniz(field in fields(), f in terms(3, 0, 4, 3), g in terms(3, 0, 4, 3), level in 0usize..=4) {
        let r = ring(field, &["x", "y", "z"]);
        let (f, g) = (poly(&r, &f), poly(&r, &g));
        let jr = JetRing::new(&r, level).unwrap();
        let lhs = jr.derivations(&(&f * &g)).unwrap();
        let rhs = convolve(&jr.derivations(&f).unwrap(), &jr.derivations(&g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn linearity(field in fields(), f in terms(2, 0, 3, 4), g in terms(2, 0, 3, 4), a in -4i64..=4, b in -4i64..=4) {
        let r = ring(field, &["x", "y"]);
        let (f, g) = (poly(&r, &f), poly(&r, &g));
        let (a, b) = (field.from_i64(a), field.from_i64(b));
        let jr = JetRing::new(&r, 3).unwrap();
        let lhs = jr.derivations(&(&f.scale(&a) + &g.scale(&b))).unwrap();
        let df = jr.derivations(&f).unwrap();
        let dg = jr.derivations(&g).unwrap();
        for i in 0..=3 {
            prop_assert_eq!(&lhs[i], &(&df[i].scale(&a) + &dg[i].scale(&b)));
        }
    }

    #[test]
    fn truncation_coherence(f in terms(2, 0, 4, 4), low in 0usize..=3, extra in 0usize..=2) {
        let r = q_ring(&["x", "y"]);
        let f = poly(&r, &f);
        let lower = JetRing::new(&r, low).unwrap();
        let upper = JetRing::new(&r, low + extra).unwrap();
        let small = lower.derivations(&f).unwrap();
        let big = upper.derivations(&f).unwrap();
        for (s, b) in small.iter().zip(&big) {
            prop_assert_eq!(&upper.include(&lower, s).unwrap(), b);
        }
    }

    #[test]
    fn powers_follow_repeated_leibniz(f in terms(2, 0, 2, 3), k in 1u32..=3) {
        let r = q_ring(&["x", "y"]);
        let f = poly(&r, &f);
        let jr = JetRing::new(&r, 3).unwrap();
        let df = jr.derivations(&f).unwrap();
        let mut acc = df.clone();
        for _ in 1..k {
            acc = convolve(&acc, &df);
        }
        prop_assert_eq!(jr.derivations(&f.pow(k)).unwrap(), acc);
    }

    #[test]
    fn high_order_terms_vanish_on_the_fiber(f in terms(2, 0, 5, 4), level in 0usize..=3) {
        let r = q_ring(&["x", "y"]);
        let f = poly(&r, &f);
        // keep only terms of degree above the level
        let high = Polynomial::from_terms(
            &r,
            f.terms().iter().filter(|(m, _)| m.degree() as usize > level).cloned(),
        )
        .unwrap();
        let jr = JetRing::new(&r, level).unwrap();
        let point = jr.closed_point_variables();
        for d in jr.derivations(&high).unwrap() {
            prop_assert!(d.kill_variables(&point).is_zero());
        }
    }

    #[test]
    fn jet_ideal_of_generators_is_closed_under_multiples(g in terms(2, 1, 2, 2), h in terms(2, 0, 2, 3), level in 0usize..=2) {
        let r = q_ring(&["x", "y"]);
        let (g, h) = (poly(&r, &g), poly(&r, &h));
        let i = jetclosure_core::groebner::Ideal::new(&r, vec![g.clone()]).unwrap();
        let ji = jet_ideal(&i, level).unwrap();
        prop_assert_eq!(ji.generators().len(), level + 1);
        let ideal = ji.ideal();
        for d in hs_derivations(&(&g * &h), level).unwrap() {
            prop_assert!(ideal.contains(&d).unwrap());
        }
    }
}

#[test]
fn level_zero_is_renaming() {
    let r = q_ring(&["x", "y"]);
    let i = ideal(&r, &["x^2 - y", "x*y"]);
    let shown: Vec<_> = jet_ideal(&i, 0)
        .unwrap()
        .generators()
        .iter()
        .map(|p| p.to_string())
        .collect();
    assert_eq!(shown, ["x@0^2 - y@0", "x@0*y@0"]);
}

#[test]
fn fiber_of_double_point() {
    let r = q_ring(&["x"]);
    let shown = |l| {
        fiber_ideal(&ideal(&r, &["x^2"]), l)
            .unwrap()
            .canonical_generators()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(shown(1), ["x@0"]);
    assert_eq!(shown(2), ["x@1^2", "x@0"]);
}
