use reflect_core::classgroup::*;
use reflect_core::Error;

fn fundamental_prime_to_three(bound: i64) -> impl Iterator<Item = i64> {
    (-bound..=bound).filter(|&d| d != 0 && d != 1 && d % 3 != 0 && is_fundamental(d))
}

#[test]
fn small_groups() {
    let g = class_group(-23).unwrap();
    assert_eq!(g.order(), 3);
    assert_eq!(g.three_torsion, 3);
    assert_eq!(g.elements, vec![QForm::new(1, 1, 6), QForm::new(2, -1, 3), QForm::new(2, 1, 3)]);
    let g = class_group(-4).unwrap();
    assert_eq!((g.order(), g.three_torsion), (1, 1));
    let g = class_group(-27).unwrap();
    assert_eq!((g.order(), g.three_torsion), (1, 1));
    assert_eq!(class_group(-3).unwrap().order(), 1);
}

#[test]
fn known_class_numbers() {
    // narrow class numbers of small discriminants
    let table = [
        (-20, 2), (-56, 4), (-84, 4), (-104, 6), (-71, 7), (-47, 5), (-3299, 27), (-3896, 36),
        (5, 1), (8, 1), (12, 2), (13, 1), (60, 4), (65, 2), (136, 4), (229, 3), (316, 6), (1129, 9),
    ];
    for (d, h) in table {
        assert_eq!(class_group(d).unwrap().order(), h, "D = {d}");
    }
}

#[test]
fn group_structure_is_seen_by_element_orders() {
    // -56 is cyclic of order 4, -84 is (Z/2)^2
    let g = class_group(-56).unwrap();
    assert!(g.elements.iter().any(|f| g.element_order(f).unwrap() == 4));
    let g = class_group(-84).unwrap();
    assert!(g.elements.iter().all(|f| g.element_order(f).unwrap() <= 2));
    // 229: cyclic of order 3 in the narrow sense
    let g = class_group(229).unwrap();
    assert_eq!(g.three_torsion, 3);
    // -3299 = Z/3 x Z/9, -3896 has 3-rank 2
    assert_eq!(class_group(-3299).unwrap().three_torsion, 9);
    assert_eq!(class_group(-3896).unwrap().three_torsion, 9);
}

#[test]
fn composition_axioms() {
    for d in (-500i64..=500).filter(|&d| d != 0 && d.rem_euclid(4) <= 1) {
        let Ok(g) = class_group(d) else { continue };
        let e = g.identity();
        for x in &g.elements {
            assert_eq!(g.compose(x, &e).unwrap(), *x, "D = {d}");
            assert_eq!(g.compose(x, &x.inverse()).unwrap(), e, "D = {d}");
            for y in &g.elements {
                let xy = g.compose(x, y).unwrap();
                assert_eq!(xy, g.compose(y, x).unwrap(), "D = {d}");
                if g.order() <= 12 {
                    for z in &g.elements {
                        let left = g.compose(&xy, z).unwrap();
                        let right = g.compose(x, &g.compose(y, z).unwrap()).unwrap();
                        assert_eq!(left, right, "D = {d}");
                    }
                }
            }
        }
        assert_eq!(g.three_torsion, g.elements.iter().filter(|x| g.power(x, 3).unwrap() == e).count() as u64);
        assert!(g.three_torsion.is_power_of_two() || [3, 9, 27, 81].contains(&g.three_torsion));
        assert_eq!(g.order() % g.three_torsion, 0);
    }
}

#[test]
fn genus_two_rank() {
    // for fundamental D the narrow 2-torsion has 2^(t - 1) elements, t the
    // number of prime divisors of D
    for d in (-400i64..=400).filter(|&d| d != 1 && d != 0 && is_fundamental(d)) {
        let mut n = d.abs();
        let mut t = 0;
        let mut p = 2;
        while n > 1 {
            if n % p == 0 {
                t += 1;
                while n % p == 0 {
                    n /= p;
                }
            }
            p += 1;
        }
        let g = class_group(d).unwrap();
        assert_eq!(g.torsion(2).unwrap(), 1 << (t - 1), "D = {d}");
    }
}

#[test]
fn canonical_forms_are_stable_under_sl2() {
    for d in [-23, -56, 60, 229, 316] {
        let g = class_group(d).unwrap();
        for f in &g.elements {
            // (x, y) -> (x + y, y) and (x, y) -> (-y, x)
            let t = QForm::new(f.a, f.b + 2 * f.a, f.a + f.b + f.c);
            let s = QForm::new(f.c, -f.b, f.a);
            assert_eq!(g.canonical(&t).unwrap(), *f);
            assert_eq!(g.canonical(&s).unwrap(), *f);
        }
    }
}

#[test]
fn scholz_examples() {
    let r = scholz_check(-23).unwrap();
    assert_eq!((r.cl_minus_27d, r.cl_d), (3, 3));
    assert!(r.first_holds() && r.second_holds());
    let r = scholz_check(5).unwrap();
    assert_eq!(r.cl_minus_27d, 3 * r.cl_d);
    let r = scholz_check(-4).unwrap();
    assert_eq!((r.cl_minus_27d, r.cl_d), (1, 1));
    assert_eq!(class_group(108).unwrap().three_torsion, 1);
    for d in [5, -23, 13] {
        assert_eq!(cross_check_maps(d).unwrap(), [1, 3]);
    }
}

#[test]
fn first_identity_holds_across_the_sweep() {
    let mut checked = 0;
    for d in fundamental_prime_to_three(200) {
        let r = scholz_check(d).unwrap();
        assert!(r.first_holds(), "{r:?}");
        checked += 1;
    }
    assert_eq!(checked, 91);
}

#[test]
fn conductor_three_keeps_the_three_torsion() {
    // h(9D) / h(D) = (3 - (D/3)) / [O^x : O'^x] has no factor 3 when 3 does not divide D
    for d in fundamental_prime_to_three(200) {
        let r = scholz_check(d).unwrap();
        assert_eq!(r.cl_9d, r.cl_d, "D = {d}");
    }
}

#[test]
fn scholz_bounds() {
    // |Cl(-3D)[3]| / |Cl(D)[3]| is 3^(1_{D>0} - eps) with eps in {0, 1}
    for d in fundamental_prime_to_three(200) {
        let r = scholz_check(d).unwrap();
        let allowed = if d > 0 { [r.cl_d, 3 * r.cl_d] } else { [r.cl_d, r.cl_d / 3] };
        assert!(allowed.contains(&r.cl_minus_3d), "{r:?}");
    }
}

#[test]
fn second_identity_and_map_ratios_fail_together() {
    let mut failures = Vec::new();
    for d in fundamental_prime_to_three(200) {
        let r = scholz_check(d).unwrap();
        let ratios_ok = cross_check_maps(d).unwrap() == [1, 3];
        assert_eq!(r.second_holds(), ratios_ok, "{r:?}");
        if !ratios_ok {
            failures.push(d);
        }
    }
    assert_eq!(failures.len(), 47);
    // smallest counterexamples on each side
    assert!(failures.contains(&29) && failures.contains(&-191) && failures.contains(&-4));
}

#[test]
fn counterexample_at_29() {
    // Cl(29) trivial, Cl(261) narrow of order 2, Cl(-87) of order 6, Cl(-783) of order 18
    assert_eq!(class_group(29).unwrap().order(), 1);
    assert_eq!(class_group(261).unwrap().order(), 2);
    assert_eq!(class_group(-87).unwrap().order(), 6);
    assert_eq!(class_group(-783).unwrap().order(), 18);
    let r = scholz_check(29).unwrap();
    assert_eq!((r.cl_d, r.cl_minus_3d, r.cl_9d, r.cl_minus_27d), (1, 3, 1, 3));
    assert!(r.first_holds());
    assert!(!r.second_holds());
}

#[test]
fn rejects_bad_discriminants() {
    for d in [0, 2, 3, 4, 9, -5] {
        assert!(matches!(class_group(d), Err(Error::BadDiscriminant(_))), "{d}");
    }
    assert!(scholz_check(-3).is_err());
    assert!(scholz_check(1).is_err());
    assert!(scholz_check(-16).is_err());
}
