use ringlab::classify::{
    classification_report, is_left_localizable_ring, is_left_localization_maximal,
    is_weakly_left_localizable, nil_modulo_check, Check,
};
use ringlab::io::{catalog_lookup, emit_report, emit_verdicts, parse_ring_expr, Format};
use ringlab::localization::{
    ass_set, build_fraction_ring, core, denominator_join, exhaustive_denominator_sets,
    fraction_isomorphism_defect, is_left_denominator, is_left_ore, is_localizable_ideal,
    ll_radical, localize, max_denominator_sets, multiplicative_closure, phi_map, saturate,
};
use ringlab::ring::{
    central_idempotent_decomposition, construct, enumerate_ideals, is_local, jacobson_radical,
    matrix_ring, nil_radical, nilpotent_elements, product_ring, quotient_ring, triangular_ring,
    units, zmod,
};
use ringlab::theorems::{list_theorems, verify_all, verify_theorem};
use ringlab::{Bounds, Error, FiniteRing, Ideal, RingExpr, Subset};

fn b() -> Bounds {
    Bounds::default()
}

fn z(n: usize) -> FiniteRing {
    zmod(n).unwrap()
}

fn t2f2() -> FiniteRing {
    triangular_ring(2, &z(2)).unwrap()
}

fn m2f2() -> FiniteRing {
    matrix_ring(2, &z(2)).unwrap()
}

fn set(r: &FiniteRing, xs: &[usize]) -> Subset {
    Subset::from_indices(r.order(), xs.iter().copied())
}

fn ideal(r: &FiniteRing, xs: &[usize]) -> Ideal {
    Ideal::new(r, set(r, xs)).unwrap()
}

// T2(F2) digits are (a11, a12, a22), a11 most significant.
const E11: usize = 4;
const E12: usize = 2;

#[test]
fn construct_orders() {
    assert_eq!(z(6).order(), 6);
    assert_eq!(m2f2().order(), 16);
    assert_eq!(t2f2().order(), 8);
}

#[test]
fn units_examples() {
    let z6 = z(6);
    assert_eq!(units(&z6), set(&z6, &[1, 5]));
    assert_eq!(units(&m2f2()).len(), 6);
    let t = t2f2();
    assert_eq!(units(&t), set(&t, &[5, 7]));
}

#[test]
fn nilpotent_examples() {
    let z4 = z(4);
    assert_eq!(nilpotent_elements(&z4), set(&z4, &[0, 2]));
    assert_eq!(nilpotent_elements(&m2f2()).len(), 4);
    let z6 = z(6);
    assert_eq!(nilpotent_elements(&z6), set(&z6, &[0]));
}

#[test]
fn jacobson_examples() {
    let z12 = z(12);
    assert_eq!(*jacobson_radical(&z12).unwrap(), set(&z12, &[0, 6]));
    let m = m2f2();
    assert_eq!(*jacobson_radical(&m).unwrap(), set(&m, &[0]));
    let t = t2f2();
    assert_eq!(*jacobson_radical(&t).unwrap(), set(&t, &[0, E12]));
}

#[test]
fn nil_radical_examples() {
    let z4 = z(4);
    assert_eq!(*nil_radical(&z4).unwrap(), set(&z4, &[0, 2]));
    let m = m2f2();
    assert_eq!(*nil_radical(&m).unwrap(), set(&m, &[0]));
    let t = t2f2();
    assert_eq!(*nil_radical(&t).unwrap(), set(&t, &[0, E12]));
}

#[test]
fn ideal_enumeration_examples() {
    let z6 = z(6);
    let ideals: Vec<Subset> = enumerate_ideals(&z6, &b())
        .unwrap()
        .into_iter()
        .map(|i| i.into_subset())
        .collect();
    assert_eq!(
        ideals,
        vec![set(&z6, &[0]), set(&z6, &[0, 3]), set(&z6, &[0, 2, 4]), z6.all()]
    );
    assert_eq!(enumerate_ideals(&z(7), &b()).unwrap().len(), 2);
    assert_eq!(enumerate_ideals(&m2f2(), &b()).unwrap().len(), 2);
}

#[test]
fn quotient_examples() {
    let z6 = z(6);
    let (q, _) = quotient_ring(&z6, &ideal(&z6, &[0, 2, 4])).unwrap();
    assert_eq!(q.order(), 2);
    let (q, _) = quotient_ring(&z6, &ideal(&z6, &[0, 3])).unwrap();
    assert_eq!(q.order(), 3);
    let t = t2f2();
    let (q, pi) = quotient_ring(&t, &Ideal::zero(&t)).unwrap();
    assert_eq!(q.order(), 8);
    assert_eq!(pi, (0..8).collect::<Vec<_>>());
}

#[test]
fn product_examples() {
    let (p, _) = product_ring(&[z(4), z(3)]).unwrap();
    assert_eq!(p.order(), 12);
    let (p, _) = product_ring(&[z(2), z(2)]).unwrap();
    assert_eq!(p.order(), 4);
    assert_eq!(units(&p).to_vec(), vec![3]);
    let (p, _) = product_ring(&[z(2), z(3)]).unwrap();
    assert_eq!(enumerate_ideals(&p, &b()).unwrap().len(), 4);
    assert_eq!(units(&p).len(), 2);
}

#[test]
fn local_examples() {
    assert!(is_local(&z(4)));
    assert!(!is_local(&z(6)));
    assert!(!is_local(&t2f2()));
}

#[test]
fn decomposition_examples() {
    let d = central_idempotent_decomposition(&z(12)).unwrap();
    assert_eq!(d.idempotents, vec![4, 9]);
    let mut orders: Vec<usize> = d.factors.iter().map(|f| f.order()).collect();
    orders.sort_unstable();
    assert_eq!(orders, vec![3, 4]);
    let t = t2f2();
    let d = central_idempotent_decomposition(&t).unwrap();
    assert_eq!(d.idempotents, vec![t.one()]);
    let d = central_idempotent_decomposition(&z(5)).unwrap();
    assert_eq!(d.idempotents, vec![1]);
}

#[test]
fn closure_examples() {
    let z6 = z(6);
    assert_eq!(multiplicative_closure(&z6, &set(&z6, &[2])).unwrap(), set(&z6, &[1, 2, 4]));
    let z4 = z(4);
    assert!(matches!(
        multiplicative_closure(&z4, &set(&z4, &[2])),
        Err(Error::ZeroAbsorbed { .. })
    ));
    assert_eq!(multiplicative_closure(&z6, &set(&z6, &[])).unwrap(), set(&z6, &[1]));
}

#[test]
fn ore_examples() {
    let z12 = z(12);
    assert!(is_left_ore(&z12, &set(&z12, &[1, 5, 7, 11])).unwrap());
    let t = t2f2();
    // zero-first-column ideal; its saturation fails the Ore test
    let sat = saturate(&t, &ideal(&t, &[0, 1, 2, 3])).unwrap();
    assert!(!is_left_ore(&t, &sat).unwrap());
    assert!(is_left_ore(&t, &units(&t)).unwrap());
}

#[test]
fn ass_examples() {
    let z6 = z(6);
    assert_eq!(ass_set(&z6, &set(&z6, &[1, 2, 4])), set(&z6, &[0, 3]));
    assert_eq!(ass_set(&z6, &set(&z6, &[1])), set(&z6, &[0]));
    assert_eq!(ass_set(&z6, &set(&z6, &[1, 3, 5])), set(&z6, &[0, 2, 4]));
}

#[test]
fn denominator_examples() {
    let z6 = z(6);
    assert!(is_left_denominator(&z6, &set(&z6, &[1, 2, 4])).unwrap());
    let m = m2f2();
    assert!(is_left_denominator(&m, &units(&m)).unwrap());
    let t = t2f2();
    assert!(is_left_denominator(&t, &set(&t, &[1, 3, 5, 7])).unwrap());
}

#[test]
fn saturate_examples() {
    let z6 = z(6);
    assert_eq!(saturate(&z6, &ideal(&z6, &[0, 3])).unwrap(), set(&z6, &[1, 2, 4, 5]));
    let t = t2f2();
    assert_eq!(saturate(&t, &Ideal::zero(&t)).unwrap(), units(&t));
    let z4 = z(4);
    assert_eq!(saturate(&z4, &ideal(&z4, &[0, 2])).unwrap(), set(&z4, &[1, 3]));
}

#[test]
fn localizable_ideal_examples() {
    let z6 = z(6);
    assert!(is_localizable_ideal(&z6, &ideal(&z6, &[0, 3])).unwrap());
    let z4 = z(4);
    assert!(!is_localizable_ideal(&z4, &ideal(&z4, &[0, 2])).unwrap());
    let m = m2f2();
    assert!(is_localizable_ideal(&m, &Ideal::zero(&m)).unwrap());
}

#[test]
fn max_denominator_examples() {
    let z6 = z(6);
    let p = max_denominator_sets(&z6, &b()).unwrap();
    let got: Vec<(Subset, Subset)> = p
        .records
        .iter()
        .map(|r| (r.set.clone(), r.ass.as_subset().clone()))
        .collect();
    assert_eq!(
        got,
        vec![
            (set(&z6, &[1, 2, 4, 5]), set(&z6, &[0, 3])),
            (set(&z6, &[1, 3, 5]), set(&z6, &[0, 2, 4])),
        ]
    );
    let z4 = z(4);
    let p = max_denominator_sets(&z4, &b()).unwrap();
    assert_eq!(p.records.len(), 1);
    assert_eq!(p.records[0].set, set(&z4, &[1, 3]));
    assert!(p.records[0].ass.is_zero());
    let m = m2f2();
    let p = max_denominator_sets(&m, &b()).unwrap();
    assert_eq!(p.records.len(), 1);
    assert_eq!(p.records[0].set.len(), 6);
    assert!(p.records[0].ass.is_zero());
}

#[test]
fn localize_examples() {
    let z6 = z(6);
    assert_eq!(localize(&z6, &set(&z6, &[1, 3, 5])).unwrap().den.quotient.order(), 2);
    let m = m2f2();
    let v = localize(&m, &units(&m)).unwrap();
    assert_eq!(v.den.quotient, m);
    let t = t2f2();
    let v = localize(&t, &set(&t, &[1, 3, 5, 7])).unwrap();
    assert_eq!(v.den.quotient.order(), 2);
    assert_eq!(*v.den.ass, set(&t, &[0, 2, 4, 6]));
}

#[test]
fn fraction_oracle_examples() {
    let z6 = z(6);
    for (s, order) in [(&[1, 3, 5][..], 2), (&[1, 2, 4][..], 3), (&[1][..], 6)] {
        let s = set(&z6, s);
        let frac = build_fraction_ring(&z6, &s, &b()).unwrap();
        assert_eq!(frac.ring.order(), order);
        let view = localize(&z6, &s).unwrap();
        assert_eq!(fraction_isomorphism_defect(&frac, &view), None);
    }
}

#[test]
fn core_examples() {
    let z6 = z(6);
    assert_eq!(core(&z6, &set(&z6, &[1, 3, 5])).unwrap(), set(&z6, &[3]));
    assert_eq!(core(&z6, &set(&z6, &[1, 2, 4])).unwrap(), set(&z6, &[2, 4]));
    let z4 = z(4);
    assert_eq!(core(&z4, &set(&z4, &[1, 3])).unwrap(), set(&z4, &[1, 3]));
}

#[test]
fn ll_radical_examples() {
    let z6 = z(6);
    assert!(ll_radical(&z6, &b()).unwrap().is_zero());
    assert!(ll_radical(&z(4), &b()).unwrap().is_zero());
    let t = t2f2();
    assert_eq!(*ll_radical(&t, &b()).unwrap(), set(&t, &[0, 2, 4, 6]));
}

#[test]
fn join_examples() {
    let z6 = z(6);
    let s124 = set(&z6, &[1, 2, 4]);
    assert_eq!(denominator_join(&z6, &set(&z6, &[1]), &s124).unwrap(), s124);
    let j = denominator_join(&z6, &set(&z6, &[1, 5]), &s124).unwrap();
    assert_eq!(j, set(&z6, &[1, 2, 4, 5]));
    assert_eq!(ass_set(&z6, &j), set(&z6, &[0, 3]));
    let m = m2f2();
    assert_eq!(denominator_join(&m, &units(&m), &units(&m)).unwrap(), units(&m));
}

#[test]
fn exhaustive_examples() {
    let z4 = z(4);
    assert_eq!(
        exhaustive_denominator_sets(&z4, &b()).unwrap(),
        vec![set(&z4, &[1]), set(&z4, &[1, 3])]
    );
    let f2 = z(2);
    assert_eq!(exhaustive_denominator_sets(&f2, &b()).unwrap(), vec![set(&f2, &[1])]);
    // every submonoid of (Z6, ·) avoiding 0 is a denominator set; there are 7
    let z6 = z(6);
    let all = exhaustive_denominator_sets(&z6, &b()).unwrap();
    assert_eq!(all.len(), 7);
    assert!(all.contains(&set(&z6, &[1, 2, 4, 5])));
    assert!(all.contains(&set(&z6, &[1, 3, 5])));
}

#[test]
fn phi_examples() {
    let phi = phi_map(&z(6), &b()).unwrap();
    assert!(phi.injective && phi.surjective);
    assert_eq!(phi.quotient.order(), 6);
    let phi = phi_map(&t2f2(), &b()).unwrap();
    assert_eq!(phi.quotient.order(), 2);
    assert_eq!(phi.targets, vec![Some(0)]);
    assert!(phi.surjective);
    let phi = phi_map(&z(4), &b()).unwrap();
    assert!(phi.injective && phi.surjective);
}

#[test]
fn wll_examples() {
    assert!(is_weakly_left_localizable(&z(4), &b()).unwrap().holds);
    let c = is_weakly_left_localizable(&t2f2(), &b()).unwrap();
    assert_eq!(c, Check { holds: false, witness: Some(E11) });
    // M2(F2): E11 = 8 is a witness; E22 = 1 is the least-index one
    let m = m2f2();
    let c = is_weakly_left_localizable(&m, &b()).unwrap();
    assert!(!c.holds);
    let w = c.witness.unwrap();
    assert_eq!(w, 1);
    let nil = nilpotent_elements(&m);
    let loc = max_denominator_sets(&m, &b()).unwrap().localizable;
    assert!(!nil.contains(8) && !loc.contains(8));
}

#[test]
fn left_localizable_examples() {
    assert!(is_left_localizable_ring(&z(6), &b()).unwrap().holds);
    assert_eq!(
        is_left_localizable_ring(&z(4), &b()).unwrap(),
        Check { holds: false, witness: Some(2) }
    );
    assert!(is_left_localizable_ring(&z(5), &b()).unwrap().holds);
}

#[test]
fn localization_maximal_examples() {
    assert!(is_left_localization_maximal(&m2f2(), &b()).unwrap());
    assert!(!is_left_localization_maximal(&z(6), &b()).unwrap());
    assert!(is_left_localization_maximal(&z(4), &b()).unwrap());
}

#[test]
fn nil_modulo_examples() {
    let z6 = z(6);
    assert!(!nil_modulo_check(&z6, &set(&z6, &[0, 3]), &set(&z6, &[0, 2, 4])));
    let t = t2f2();
    assert!(nil_modulo_check(&t, &set(&t, &[0]), &set(&t, &[0, E12])));
    let z12 = z(12);
    assert!(nil_modulo_check(&z12, &set(&z12, &[0, 6]), &set(&z12, &[0])));
}

#[test]
fn report_examples() {
    let r = classification_report(&z(12), &b()).unwrap();
    assert!(r.weakly_left_localizable.holds);
    assert!(!r.left_localizable.holds);
    assert_eq!(r.maxden.len(), 2);
    let mut orders: Vec<usize> = r.decomposition.iter().map(|f| f.order).collect();
    orders.sort_unstable();
    assert_eq!(orders, vec![3, 4]);

    let r = classification_report(&z(3), &b()).unwrap();
    assert!(r.weakly_left_localizable.holds && r.left_localizable.holds);
    assert!(r.left_localization_maximal && r.local && r.semilocal);
    assert_eq!(r.nilpotent.len(), 1);

    let r = classification_report(&t2f2(), &b()).unwrap();
    assert!(!r.weakly_left_localizable.holds);
    assert_eq!(r.maxden.len(), 1);
    assert_eq!(r.ll_radical.len(), 4);
}

#[test]
fn registry_examples() {
    let ids: Vec<&str> = list_theorems().into_iter().map(|(id, _)| id).collect();
    assert!(ids.contains(&"thm-26Mar14"));
    assert!(ids.contains(&"thm-C2Dec12"));
    assert_eq!(ids.len(), 16);
}

#[test]
fn verify_theorem_examples() {
    let v = verify_theorem(&z(12), "thm-24Dec12", &b()).unwrap();
    assert!(v.applicable && v.lhs && v.rhs && v.pass);
    let v = verify_theorem(&t2f2(), "thm-24Dec12", &b()).unwrap();
    assert!(!v.lhs && !v.rhs && v.pass);
    let v = verify_theorem(&m2f2(), "lem-a26Mar14", &b()).unwrap();
    assert!(!v.lhs && !v.rhs && v.pass);
    assert!(matches!(
        verify_theorem(&z(6), "thm-nope", &b()),
        Err(Error::UnknownTheorem(_))
    ));
}

#[test]
fn verify_all_examples() {
    for ring in [z(6), z(4), t2f2()] {
        let vs = verify_all(&ring, &b()).unwrap();
        assert_eq!(vs.len(), 16);
        assert!(vs.iter().all(|v| v.pass), "{}", ring.label());
    }
}

#[test]
fn parse_examples() {
    assert_eq!(parse_ring_expr("Z 6").unwrap(), RingExpr::Zmod(6));
    assert_eq!(
        parse_ring_expr("T 2 (Z 2)").unwrap(),
        RingExpr::Triangular(2, Box::new(RingExpr::Zmod(2)))
    );
    assert_eq!(
        parse_ring_expr("Q (Z 12; 6)").unwrap(),
        RingExpr::Quotient(Box::new(RingExpr::Zmod(12)), vec![6])
    );
}

#[test]
fn catalog_examples() {
    assert_eq!(catalog_lookup("z6").unwrap(), RingExpr::Zmod(6));
    let m = construct(&catalog_lookup("m2f2").unwrap(), &b()).unwrap();
    assert_eq!(m, m2f2());
    assert_eq!(catalog_lookup("nope"), Err(Error::UnknownCatalogName("nope".into())));
    let gf4 = construct(&RingExpr::Catalog("gf4".into()), &b()).unwrap();
    assert_eq!(gf4.order(), 4);
    assert_eq!(units(&gf4).len(), 3);
}

#[test]
fn emit_examples() {
    let r = classification_report(&z(6), &b()).unwrap();
    assert!(emit_report(&r, Format::Record).contains("maxden.count = 2\n"));
    let r = classification_report(&z(4), &b()).unwrap();
    assert!(emit_report(&r, Format::Record).contains("class.wll = true\n"));
    assert_eq!(emit_verdicts(&[], Format::Record), "");
}

#[test]
fn order_one_is_rejected() {
    assert!(construct(&RingExpr::Zmod(1), &b()).is_err());
    let small = Bounds { max_order: 10, ..b() };
    assert!(construct(&RingExpr::Zmod(12), &small).unwrap_err().is_bound());
}
