use std::collections::BTreeSet;

use reflect_core::quad::*;
use reflect_core::Error;

fn q(a: i64, b: i64, c: i64) -> QuadClass {
    QuadClass { a, b, c }
}

#[test]
fn fifteen() {
    let classes: BTreeSet<_> = enumerate_quadratics(15).unwrap().into_iter().collect();
    let expected: BTreeSet<_> =
        [q(-1, 1, -4), q(15, 1, 0), q(15, -1, 0), q(15, 11, 2), q(15, -11, 2)].into_iter().collect();
    assert_eq!(classes, expected);
    assert_eq!(count_q(15, false, true).unwrap(), 4);
}

#[test]
fn listed_counts() {
    let cases = [
        (60, false, false, 18),
        (60, true, false, 8),
        (60, false, true, 13),
        (60, true, true, 5),
        (240, true, true, 18),
        (240, true, false, 26),
        (15, false, false, 5),
    ];
    for (i, even, real, n) in cases {
        assert_eq!(count_q(i, even, real).unwrap(), n, "I={i} even={even} real={real}");
    }
    assert_eq!(enumerate_quadratics(1).unwrap(), vec![q(1, 1, 0)]);
}

#[test]
fn representatives_are_canonical_and_distinct() {
    for i in (-80..=80).filter(|&i| i != 0) {
        let classes = enumerate_quadratics(i).unwrap();
        let keys: BTreeSet<_> = classes.iter().map(|c| (c.a, c.b.rem_euclid(2 * c.a.abs()))).collect();
        assert_eq!(keys.len(), classes.len());
        for c in &classes {
            assert!(-c.a.abs() < c.b && c.b <= c.a.abs());
            assert_eq!(c.superdiscriminant(), i as i128);
            if c.real_roots() {
                assert_eq!(c.a.signum(), i.signum());
            }
        }
        let mut sorted = classes.clone();
        sorted.sort_by_key(|c| (c.a.abs(), c.a, c.b));
        assert_eq!(sorted, classes);
    }
}

// shift a x^2 + b x + c to the window by x -> x + t
fn canonical(a: i64, b: i64, c: i64) -> QuadClass {
    let m = 2 * a.abs();
    // b + 2 a t lands in (-|a|, |a|]
    let target = (b + a.abs() - 1).rem_euclid(m) - a.abs() + 1;
    let t = (target - b) / (2 * a);
    q(a, b + 2 * a * t, a * t * t + b * t + c)
}

#[test]
fn brute_force_completeness() {
    for i in (-60i64..=60).filter(|&i| i != 0) {
        let mut found = BTreeSet::new();
        for a in (-i.abs()..=i.abs()).filter(|&a| a != 0) {
            for b in -a.abs()..=a.abs() {
                for c in -(i * i)..=(i * i) {
                    if a as i128 * ((b * b - 4 * a * c) as i128) == i as i128 {
                        found.insert(canonical(a, b, c));
                    }
                }
            }
        }
        let classes: BTreeSet<_> = enumerate_quadratics(i).unwrap().into_iter().collect();
        assert_eq!(found, classes, "I = {i}");
    }
}

#[test]
fn reflection_sweep() {
    let report = check_quadratic_on(300);
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    assert_eq!(count_q(-4, true, true).unwrap(), count_q(-1, false, false).unwrap());
}

#[test]
fn reciprocity_instances() {
    for (p1, p3) in [(5, 3), (13, 3), (5, 7), (17, 11), (29, 19), (37, 43)] {
        let r = legendre_check(p1, p3).unwrap();
        assert!(r.passed(), "{r:?}");
    }
    assert_eq!(count_q(39, false, true).unwrap(), 6);
    assert_eq!(count_q(140, true, false).unwrap(), 8);
    assert!(matches!(legendre_check(3, 5), Err(Error::BadPrimes(_))));
    assert!(matches!(legendre_check(9, 3), Err(Error::BadPrimes(_))));
}

#[test]
fn euler_criterion() {
    assert_eq!(legendre(2, 7), 1);
    assert_eq!(legendre(3, 7), -1);
    assert_eq!(legendre(14, 7), 0);
    assert_eq!(legendre(-1, 13), 1);
}

#[test]
fn zero_is_rejected() {
    assert_eq!(enumerate_quadratics(0), Err(Error::ZeroInvariant));
    assert_eq!(count_q(0, false, false), Err(Error::ZeroInvariant));
}
