use kzero_core::monoid_ring::{albanese_image, av_combination, zero_divisor_witness, FormalFactor};
use kzero_core::order::{fundamental_unit, DEFAULT_DISC_BOUND};
use kzero_core::steinitz::{class_of_ideal_sum, tensor_av, BaseTag, ModuleClass};
use kzero_core::weil::{
    deduce_endomorphism_ring, distinct_fields_certificate, frobenius_charpoly, ReductionCertificate,
    DEFAULT_STABILITY_BOUND,
};
use kzero_core::{class_group, class_of, is_principal, maximal_order, FracIdeal, QuadElement};

#[test]
fn from_eigenvalues_to_zero_divisor() {
    let order = maximal_order(10).unwrap();
    assert_eq!(fundamental_unit(&order).unwrap(), QuadElement::from_ints(10, 3, 1).unwrap());
    assert_eq!(class_group(&order, DEFAULT_DISC_BOUND).unwrap().class_number(), 2);

    let p17 = frobenius_charpoly(&QuadElement::from_ints(10, 4, -1).unwrap(), 17).unwrap();
    let p19 = frobenius_charpoly(&QuadElement::from_ints(10, 2, 1).unwrap(), 19).unwrap();
    let fields = distinct_fields_certificate(&p17, &p19).unwrap();
    let end = deduce_endomorphism_ring(
        10,
        &ReductionCertificate::compute(&p17, DEFAULT_STABILITY_BOUND),
        &ReductionCertificate::compute(&p19, DEFAULT_STABILITY_BOUND),
        &fields,
    )
    .unwrap();
    assert_eq!(end.order, order);

    let i = FracIdeal::new(order, 2.into(), 0.into(), 1.into()).unwrap();
    assert!(!is_principal(&i).is_principal());
    let c = class_of(&i);
    assert_eq!(class_of_ideal_sum(order, &[c.clone(), c.clone()]).unwrap(), ModuleClass::free(order, 2));

    let base = BaseTag("A".into());
    let a = ModuleClass::free(order, 1);
    let b = ModuleClass::of_ideal(c);
    let (ta, tb) = (tensor_av(&a, &base), tensor_av(&b, &base));
    assert_ne!(ta, tb);
    assert_eq!(ta.product(&ta).unwrap(), tb.product(&tb).unwrap());

    // [A × A] and [B × B] have the same Albanese image
    let aa = albanese_image(&base, order, &[FormalFactor::Abelian(ta.clone()), FormalFactor::Abelian(ta)]).unwrap();
    let bb = albanese_image(&base, order, &[FormalFactor::Abelian(tb.clone()), FormalFactor::Abelian(tb)]).unwrap();
    assert_eq!(aa, bb);

    let x = av_combination(&base, &[(a.clone(), 1), (b.clone(), 1)]).unwrap();
    let y = av_combination(&base, &[(a, 1), (b, -1)]).unwrap();
    assert!(zero_divisor_witness(&x, &y).is_witness());
}
