//! Sanity checks on the test oracles themselves.

mod support;

use std::sync::Arc;

use fusion_forge::cohomology::{cyclic_3cocycle, Cocycle3};
use fusion_forge::group::{catalog, FiniteGroup};
use fusion_forge::ring::{isomorphic_as_based_rings, FusionRing};
use support::algebra::CrossedProduct;
use support::corpus;

#[test]
fn smash_product_is_associative_and_coproduct_multiplicative() {
    let z3 = Arc::new(FiniteGroup::cyclic(3));
    let z2 = Arc::new(FiniteGroup::cyclic(2));
    let a = CrossedProduct::smash(z3.clone(), z2, |g, x| if g == 0 { x } else { z3.inv(x) });
    assert!(a.associativity_defect() < 1e-12);
    assert!(a.coproduct_defect() < 1e-12);
}

#[test]
fn twisted_double_algebra_is_a_quasi_bialgebra() {
    for omega in [cyclic_3cocycle(2, 1), cyclic_3cocycle(3, 1), cyclic_3cocycle(4, 3)] {
        let a = CrossedProduct::twisted_double(&omega);
        assert!(a.associativity_defect() < 1e-9);
        assert!(a.coproduct_defect() < 1e-9);
    }
    let s3 = Arc::new(catalog::symmetric(3));
    let (k, phi) = corpus::cyclic_quotient(&s3).unwrap();
    let a = CrossedProduct::twisted_double(&corpus::pulled_back_omega(&s3, k, &phi, 1));
    assert!(a.associativity_defect() < 1e-9);
    assert!(a.coproduct_defect() < 1e-9);
}

#[test]
fn group_algebra_gives_representation_ring() {
    let s3 = Arc::new(catalog::symmetric(3));
    let a = CrossedProduct::smash(Arc::new(FiniteGroup::trivial()), s3, |_, x| x);
    let r = a.fusion_ring(1);
    assert_eq!(r.sorted_dims(), vec![1, 1, 2]);
    assert!(r.verify(true).passed());
}

#[test]
fn function_algebra_gives_group_ring() {
    let q8 = Arc::new(catalog::quaternion());
    let a = CrossedProduct::smash(q8.clone(), Arc::new(FiniteGroup::trivial()), |_, x| x);
    let r = a.fusion_ring(2);
    assert!(isomorphic_as_based_rings(&r, &FusionRing::group_ring(&q8)).unwrap().is_some());
}

#[test]
fn semion_double_has_klein_fusion() {
    let r = CrossedProduct::twisted_double(&cyclic_3cocycle(2, 1)).fusion_ring(0);
    let klein = FusionRing::group_ring(&catalog::abelian(&[2, 2]));
    assert!(isomorphic_as_based_rings(&r, &klein).unwrap().is_some());
    let untwisted = CrossedProduct::twisted_double(&Cocycle3::trivial(Arc::new(FiniteGroup::cyclic(2)))).fusion_ring(0);
    assert!(isomorphic_as_based_rings(&untwisted, &klein).unwrap().is_some());
}

#[test]
fn twisted_z4_double_is_not_pointed_like_its_untwisted_one() {
    // With ω the generator of H³(Z4), the unit flux has order 8.
    let z44 = FusionRing::group_ring(&catalog::abelian(&[4, 4]));
    let twisted = CrossedProduct::twisted_double(&cyclic_3cocycle(4, 1)).fusion_ring(0);
    assert_eq!(twisted.sorted_dims(), vec![1; 16]);
    assert!(isomorphic_as_based_rings(&twisted, &z44).unwrap().is_none());
    let z82 = FusionRing::group_ring(&catalog::abelian(&[8, 2]));
    assert!(isomorphic_as_based_rings(&twisted, &z82).unwrap().is_some());
}

#[test]
fn action_enumeration_counts() {
    // Z2 acts on Z3 trivially or by inversion.
    assert_eq!(corpus::actions(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3)).len(), 2);
    // Homs Z2 → GL(2, 2) ≅ S3 up to conjugation: trivial and one involution.
    assert_eq!(corpus::actions(&FiniteGroup::cyclic(2), &catalog::abelian(&[2, 2])).len(), 2);
    // Z3 → S3: trivial and the 3-cycle class (both generators are conjugate).
    assert_eq!(corpus::actions(&FiniteGroup::cyclic(3), &catalog::abelian(&[2, 2])).len(), 2);
    assert_eq!(corpus::homomorphisms(&catalog::symmetric(3), &FiniteGroup::cyclic(2)).len(), 2);
}
