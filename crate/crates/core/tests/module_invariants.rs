mod common;

use common::*;
use jetclosure_core::closures::{
    jet_closure, module_jet_closure, LocalAlgebra, ModuleMap, ModulePresentation,
};
use jetclosure_core::groebner::{FreeModuleElement, SubmodulePresentation};
use jetclosure_core::{FieldSpec, Polynomial};
use proptest::prelude::*;

const MODULI: [&[&str]; 4] = [
    &["x^2", "y^2"],
    &["x^2", "x*y", "y^2"],
    &["x*y", "x^2 - y^2"],
    &["x^2", "y^3"],
];

fn algebra(idx: usize) -> LocalAlgebra {
    let r = q_ring(&["x", "y"]);
    LocalAlgebra::new(ideal(&r, MODULI[idx])).unwrap()
}

fn element(b: &LocalAlgebra, comps: &[Terms]) -> FreeModuleElement {
    FreeModuleElement::new(b.ring(), comps.iter().map(|t| poly(b.ring(), t)).collect()).unwrap()
}

fn components(rank: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Terms>>> {
    prop::collection::vec(prop::collection::vec(terms(2, 0, 2, 2), rank), 0..=count)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, .. ProptestConfig::default() })]

    #[test]
    fn closure_persists_under_surjections(
        idx in 0usize..4,
        rels in components(2, 1),
        sub in components(2, 1),
        column in prop::collection::vec(terms(2, 0, 2, 2), 1),
        extra in components(1, 1),
        level in 0usize..3,
    ) {
        let b = algebra(idx);
        let r = b.ring().clone();
        let relations = SubmodulePresentation::new(&r, 2, rels.iter().map(|c| element(&b, c)).collect()).unwrap();
        let source = ModulePresentation::new(b.clone(), relations, sub.iter().map(|c| element(&b, c)).collect()).unwrap();
        // (1, f): S^2 -> S is surjective
        let phi = ModuleMap::new(&r, 2, vec![vec![Polynomial::one(&r), poly(&r, &column[0])]]).unwrap();
        let target = phi.pushforward(&source, extra.iter().map(|c| element(&b, c)).collect()).unwrap();
        let before = module_jet_closure(&source, level).unwrap();
        let after = module_jet_closure(&target, level).unwrap();
        for v in before.closure.generators() {
            prop_assert!(after.contains(&phi.apply(v).unwrap()).unwrap());
        }
    }

    #[test]
    fn restriction_of_scalars_enlarges_closure(
        idx in 0usize..4,
        sub in components(1, 2),
        level in 0usize..3,
    ) {
        let b = algebra(idx);
        let r = b.ring().clone();
        let mp = ModulePresentation::free(b.clone(), 1).with_submodule(sub.iter().map(|c| element(&b, c)).collect()).unwrap();
        let smaller = LocalAlgebra::new(ideal(&r, &["x^3", "y^3", "x^2*y^2"])).unwrap();
        let restricted = mp.restrict_scalars(smaller).unwrap();
        let over_b = module_jet_closure(&mp, level).unwrap();
        let over_r = module_jet_closure(&restricted, level).unwrap();
        for v in over_b.closure.generators() {
            prop_assert!(over_r.contains(v).unwrap());
        }
    }
}

#[test]
fn rank_one_closure_agrees_with_ideal_closure() {
    for idx in 0..MODULI.len() {
        let b = algebra(idx);
        let r = b.ring().clone();
        let a = ideal(&r, &["x + y"]);
        let mp = ModulePresentation::free(b.clone(), 1)
            .with_submodule(vec![FreeModuleElement::new(
                &r,
                vec![a.generators()[0].clone()],
            )
            .unwrap()])
            .unwrap();
        for level in 0..3 {
            let m = module_jet_closure(&mp, level).unwrap().to_ideal().unwrap();
            let i = jet_closure(&b, &a, level).unwrap().closure();
            assert!(m.same_ideal(&i).unwrap(), "modulus {idx} level {level}");
        }
    }
}

#[test]
fn cyclic_quotient_example() {
    let r = ring(FieldSpec::prime(7).unwrap(), &["x"]);
    let b = LocalAlgebra::new(ideal(&r, &["x^3"])).unwrap();
    let relations = SubmodulePresentation::new(
        &r,
        1,
        vec![FreeModuleElement::new(&r, vec![parse(&r, "x^2")]).unwrap()],
    )
    .unwrap();
    let mp = ModulePresentation::new(b, relations, Vec::new()).unwrap();
    assert_eq!(mp.dimension().unwrap(), 2);
    let c = module_jet_closure(&mp, 1).unwrap();
    assert_eq!((c.dim_quotient(), c.dim_closure()), (2, 0));
}
