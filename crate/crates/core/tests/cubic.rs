use num_bigint::BigInt;
use reflect_core::cubic::{self, LocalCondition};
use reflect_core::{BinaryForm, UnimodularMatrix, WeightedCount};

fn f(c: &[i64]) -> BinaryForm {
    BinaryForm::from_i64(c)
}

#[test]
fn small_discriminant_fixtures() {
    let one = cubic::enumerate_cubics(&BigInt::from(1)).unwrap();
    assert_eq!(one.len(), 1);
    assert_eq!(one[0].stab, 6);
    assert_eq!(cubic::h(&BigInt::from(1), &[]).unwrap(), WeightedCount::from_ratio(1, 6));
    let m27 = cubic::enumerate_cubics(&BigInt::from(-27)).unwrap();
    assert_eq!(m27.iter().map(|c| c.stab).collect::<Vec<_>>(), vec![2, 2]);
    assert_eq!(cubic::h(&BigInt::from(-27), &[]).unwrap(), WeightedCount::from_ratio(1, 1));
    assert_eq!(
        cubic::h(&BigInt::from(-27), &[LocalCondition::Traced3]).unwrap(),
        WeightedCount::from_ratio(1, 2)
    );
    assert!(cubic::enumerate_cubics(&BigInt::from(2)).unwrap().is_empty());
}

#[test]
fn fixture_classes_match_known_forms() {
    let r1 = cubic::reduce_cubic(&f(&[0, 1, 1, 0])).unwrap();
    assert_eq!(cubic::enumerate_cubics(&BigInt::from(1)).unwrap()[0].rep, r1);
    // x(x - 1)(2x - 1) is in the class of x(x + 1)
    assert_eq!(cubic::reduce_cubic(&f(&[2, -3, 1, 0])).unwrap(), r1);
    let reps: Vec<_> = cubic::enumerate_cubics(&BigInt::from(-27)).unwrap().into_iter().map(|c| c.rep).collect();
    let a = cubic::reduce_cubic(&f(&[0, 1, 1, 7])).unwrap();
    let b = cubic::reduce_cubic(&f(&[1, 0, 0, 1])).unwrap();
    assert_ne!(a, b);
    assert!(reps.contains(&a) && reps.contains(&b));
}

#[test]
fn stabilizers() {
    assert_eq!(cubic::stabilizer_order(&f(&[0, 1, 1, 0])).unwrap(), 6);
    assert_eq!(cubic::stabilizer_order(&f(&[0, 1, 1, 7])).unwrap(), 2);
    assert_eq!(cubic::stabilizer_order(&f(&[1, 0, 0, 1])).unwrap(), 2);
    let sym = UnimodularMatrix::from_i64(-1, -1, 0, 1);
    assert_eq!(f(&[0, 1, 1, 0]).act(&sym), f(&[0, 1, 1, 0]));
}

fn random_word(rng: &mut impl rand::Rng, len: usize) -> UnimodularMatrix {
    let gens = [
        UnimodularMatrix::from_i64(1, 1, 0, 1),
        UnimodularMatrix::from_i64(1, -1, 0, 1),
        UnimodularMatrix::from_i64(0, -1, 1, 0),
        UnimodularMatrix::from_i64(-1, 0, 0, 1),
        UnimodularMatrix::from_i64(1, 0, 1, 1),
        UnimodularMatrix::from_i64(1, 0, -1, 1),
    ];
    let mut m = UnimodularMatrix::identity();
    for _ in 0..len {
        m = m.mul(&gens[rng.gen_range(0..gens.len())]);
    }
    m
}

#[test]
fn reduction_is_canonical_under_random_words() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut samples = 0;
    while samples < 300 {
        let c: Vec<i64> = (0..4).map(|_| rng.gen_range(-6..=6)).collect();
        let form = f(&c);
        if form.disc() == BigInt::from(0) {
            continue;
        }
        samples += 1;
        let r = cubic::reduce_cubic(&form).unwrap();
        let stab = cubic::stabilizer_order(&form).unwrap();
        assert!(6 % stab == 0, "{form} stab {stab}");
        for _ in 0..3 {
            let len = rng.gen_range(0..=6);
            let g = random_word(&mut rng, len);
            let moved = form.act(&g);
            assert_eq!(moved.disc(), form.disc());
            assert_eq!(cubic::reduce_cubic(&moved).unwrap(), r, "form {form} word {g}");
            assert_eq!(cubic::stabilizer_order(&moved).unwrap(), stab);
            let e = cubic::equivalence(&form, &moved).unwrap().expect("equivalent");
            assert_eq!(form.act(&e), moved);
        }
    }
}

#[test]
fn action_is_a_right_action() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let form = f(&[2, -1, 3, 5]);
    for _ in 0..50 {
        let a = random_word(&mut rng, 4);
        let b = random_word(&mut rng, 4);
        assert_eq!(form.act(&a).act(&b), form.act(&a.mul(&b)));
    }
}

#[test]
fn cubic_on_small_sweep() {
    let rep = cubic::check_cubic_on(30).unwrap();
    assert!(rep.violations.is_empty(), "{:?}", rep.violations);
}

#[test]
fn disc_reduction_instances() {
    for (p, d) in [(5u64, -575i64), (2, 4), (2, -92), (2, 4 * 5), (5, 25), (2, -16), (2, 64), (7, -49 * 4), (2, -4 * 47)] {
        let r = cubic::check_disc_reduction(p, &BigInt::from(d)).unwrap();
        assert!(r.holds(), "p={p} D={d}: lhs {} rhs {} terms {:?}", r.lhs, r.rhs, r.terms);
    }
    assert!(cubic::check_disc_reduction(5, &BigInt::from(-23)).is_err());
}

#[test]
fn disc_reduction_fails_exactly_off_the_tame_pairs() {
    // at p = 2 the maximal rings Z_2 x Z_2[sqrt(D/4)] with D/4 = 2, 3 mod 4 are
    // partially ramified and are not counted by the reflected term
    for p in [2u64, 5, 7, 11] {
        let p2 = (p * p) as i64;
        for m in (-2000 / p2..=2000 / p2).filter(|&m| m != 0) {
            let d = BigInt::from(m * p2);
            let r = cubic::check_disc_reduction(p, &d).unwrap();
            assert_eq!(r.holds(), cubic::reduction_applies(p, &d), "p={p} D={d}: lhs {} rhs {}", r.lhs, r.rhs);
        }
    }
    assert!(!cubic::reduction_applies(3, &BigInt::from(-27 * 9)));
    assert!(!cubic::reduction_applies(5, &BigInt::from(-23)));
    assert!(cubic::reduction_applies(2, &BigInt::from(-92)));
    assert!(!cubic::reduction_applies(2, &BigInt::from(280)));
}
