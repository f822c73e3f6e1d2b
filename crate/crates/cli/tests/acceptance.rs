//! One test per acceptance criterion, each with its time limit.

#[path = "../../core/tests/support/cubic_oracle.rs"]
mod oracle;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use reflect_core::boxes::{self, BoxSearch, SymmetricPair};
use reflect_core::classgroup;
use reflect_core::cubic;
use reflect_core::fourier::{self, Cyclo};
use reflect_core::quad;
use reflect_core::quartic::{self, Equivalence, IdentitySource, MonicCubic, QuarticKind, SignCondition};
use reflect_core::subring::{self, SubringParams};
use reflect_core::{BinaryForm, SplittingType, WeightedCount};

fn ratio(n: i64, d: i64) -> WeightedCount {
    WeightedCount::from_ratio(n, d)
}

fn within(start: Instant, limit: Duration) {
    let t = start.elapsed();
    assert!(t < limit, "took {t:?}, limit {limit:?}");
}

#[test]
fn criterion_01_quadratic_fixture() {
    let start = Instant::now();
    let c15 = quad::counts(15).unwrap();
    let c60 = quad::counts(60).unwrap();
    let c240 = quad::counts(240).unwrap();
    assert_eq!((c15.q, c15.qplus), (5, 4));
    assert_eq!((c60.q, c60.q2, c60.qplus, c60.q2plus), (18, 8, 13, 5));
    assert_eq!((c240.q2plus, c240.q2), (18, 26));
    within(start, Duration::from_secs(1));
}

#[test]
fn criterion_02_quadratic_sweep() {
    let start = Instant::now();
    let rep = quad::check_quadratic_on(300);
    assert_eq!(rep.checked, 1200);
    assert!(rep.violations.is_empty(), "{:?}", rep.violations);
    within(start, Duration::from_secs(60));
}

#[test]
fn criterion_03_cubic_fixture() {
    let start = Instant::now();
    assert_eq!(cubic::h(&BigInt::from(1), &[]).unwrap(), ratio(1, 6));
    assert_eq!(cubic::h(&BigInt::from(-27), &[]).unwrap(), ratio(1, 1));
    assert_eq!(cubic::h3(&BigInt::from(-27)).unwrap(), ratio(1, 2));
    within(start, Duration::from_secs(5));
}

#[test]
fn criterion_04_cubic_sweep() {
    let start = Instant::now();
    for d in (-100..=100i64).filter(|&d| d != 0) {
        let lhs = cubic::h3(&BigInt::from(-27 * d)).unwrap();
        let h = cubic::h(&BigInt::from(d), &[]).unwrap();
        let rhs = if d > 0 { h.clone() + h.clone() + h } else { h };
        assert_eq!(lhs, rhs, "D = {d}");
    }
    // the same statement on Shintani coefficients, n <= 50
    for positive in [true, false] {
        let plain = cubic::shintani_coeffs(positive, 50, false).unwrap();
        let traced = cubic::shintani_coeffs(!positive, 50, true).unwrap();
        for ((n, h), (m, h3)) in plain.into_iter().zip(traced) {
            assert_eq!(n, m);
            let expected = if positive { h.clone() + h.clone() + h } else { h };
            assert_eq!(h3, expected, "n = {n}, positive = {positive}");
        }
    }
    within(start, Duration::from_secs(600));
}

#[test]
fn criterion_05_enumeration_matches_oracle() {
    let start = Instant::now();
    for m in 1..=60i64 {
        for dd in [m, -m] {
            let reps: Vec<Vec<i64>> = cubic::enumerate_cubics(&BigInt::from(dd))
                .unwrap()
                .iter()
                .map(|c| c.rep.coeffs().iter().map(|x| x.to_i64().unwrap()).collect())
                .collect();
            let k0 = reps.iter().flatten().map(|x| x.abs()).max().unwrap_or(0).max((dd.abs() as f64).sqrt().ceil() as i64 + 2);
            let comps = oracle::oracle_classes(dd, k0);
            assert_eq!(comps.len(), reps.len(), "D = {dd}");
            for comp in &comps {
                let inside = reps.iter().filter(|r| comp.contains(&[r[0], r[1], r[2], r[3]])).count();
                assert_eq!(inside, 1, "D = {dd}: oracle class of {:?}", comp[0]);
            }
        }
    }
    within(start, Duration::from_secs(300));
}

#[test]
fn criterion_06_quartic_fixture() {
    let start = Instant::now();
    let g1 = MonicCubic::from_i64(0, -1, -1);
    let g2 = MonicCubic::from_i64(-2, -3, 6);
    let y3_minus_y = MonicCubic::from_i64(0, -1, 0);
    let mut failures = Vec::new();
    let mut check = |what: &str, got: String, want: String| {
        if got != want {
            failures.push(format!("{what}: got {got}, expected {want}"));
        }
    };
    check("h(y^3-y-1)", quartic::count_quartics(&g1, SignCondition::Any).unwrap().to_string(), "1/2".into());
    for (what, cond, want) in [
        ("h^indef(g)", SignCondition::Indefinite, "1/2"),
        ("h^+(g)", SignCondition::PosDef, "1/2"),
        ("h^-(g)", SignCondition::NegDef, "0"),
    ] {
        check(what, quartic::count_quartics(&g2, cond).unwrap().to_string(), want.into());
    }
    check("s(g)", quartic::count_symmetric_matrices(&g2).to_string(), "0".into());
    check("s(y^3-y)", quartic::count_symmetric_matrices(&y3_minus_y).to_string(), "6".into());
    let listed = [[0, 4, 12, 8, -4], [-1, 4, 12, 8, 0], [-1, 0, 0, 8, -4], [-1, 4, 0, 0, -4]];
    let cls = quartic::classes(&MonicCubic::from_i64(0, -1, 1), QuarticKind::Supereven).unwrap();
    check("supereven classes", cls.len().to_string(), "4".into());
    let mut hit = Vec::new();
    for f in listed {
        let f = BinaryForm::from_i64(&f);
        hit.extend((0..cls.len()).filter(|&i| quartic::equivalent_under(Equivalence::EvenUpper, &cls[i].rep, &f)));
    }
    check("listed forms matched", hit.len().to_string(), "4".into());
    hit.sort();
    hit.dedup();
    check("distinct classes hit", hit.len().to_string(), "4".into());
    within(start, Duration::from_secs(120));
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn criterion_07_quartic_identity_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut names = Vec::new();
    for (g2, g1, g0) in [(0, -1, -1), (-2, -3, 6), (0, -1, 0), (0, 1, 0), (0, -4, -1)] {
        let g = MonicCubic::from_i64(g2, g1, g0);
        let rep = quartic::check_bq(&g).unwrap();
        for id in rep.identities.iter().filter(|i| i.source == IdentitySource::Theorem) {
            names.push(id.name);
            if !id.holds() {
                failures.push(format!("{g}: {} ({} vs {})", id.name, id.lhs, id.rhs));
            }
        }
    }
    assert!(names.contains(&"24 (h^indef - h^def) = s"));
    assert!(names.contains(&"h^indef >= h^def, equality iff s = 0"));
    within(start, Duration::from_secs(300));
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn criterion_08_box_search() {
    let start = Instant::now();
    let cls = boxes::search_boxes(&[1, 0, -1, -1], BoxSearch::new(2, false)).unwrap();
    assert_eq!(cls.len(), 2);
    assert_eq!(boxes::weight(&cls), ratio(1, 1));
    let even = boxes::search_boxes(&[2, 0, -2, -2], BoxSearch::new(2, true)).unwrap();
    assert_eq!(even.len(), 1);
    assert_eq!(boxes::weight(&even), ratio(1, 2));
    for c in cls.iter().chain(&even) {
        assert!(c.members.iter().all(|m: &SymmetricPair| m.max_abs_entry() <= 2));
    }
    within(start, Duration::from_secs(120));
}

/// The numerators of the series, lowest degree first.
fn numerator(sigma: SplittingType) -> Vec<i64> {
    match sigma {
        SplittingType::T111 => vec![1, 2, 1],
        SplittingType::T12 => vec![1, 0, 1],
        SplittingType::T3 => vec![1, -1, 1],
        SplittingType::T1_21 => vec![1, 1],
        SplittingType::T1_3 => vec![1],
        SplittingType::Zero => unreachable!(),
    }
}

/// Power-series coefficients of `F / ((1 - Z)(1 - q Z^3))` by long division.
fn series(f: &[i64], q: i64, terms: usize) -> Vec<i64> {
    let den = [1, -1, 0, -q, q];
    let mut num: Vec<i64> = (0..terms).map(|n| f.get(n).copied().unwrap_or(0)).collect();
    let mut out = Vec::new();
    for n in 0..terms {
        let c = num[n];
        out.push(c);
        for (j, d) in den.iter().enumerate().skip(1) {
            if n + j < terms {
                num[n + j] -= c * d;
            }
        }
    }
    out
}

#[test]
fn criterion_09_subring_counts() {
    let start = Instant::now();
    for sigma in SplittingType::ALL_NONZERO {
        for p in [2i64, 3, 5] {
            let (ring, d0) = subring::fixture(sigma, p).unwrap();
            let ts: &[u32] = if p == 3 { &[0, 1] } else { &[0] };
            for &t in ts {
                for k in 0..=4u32 {
                    let oracle = subring::subring_oracle(&ring, p, k, t).unwrap();
                    let closed = subring::traced_subring_count(SubringParams { sigma, d0, d: d0 + 2 * k, t, q: p as u64, e: 1 })
                        .unwrap();
                    assert_eq!(closed, oracle, "{} p={p} k={k} t={t}", sigma.label());
                }
            }
            // the untraced oracle counts are the series coefficients
            let s = series(&numerator(sigma), p, 5);
            for k in 0..=4u32 {
                assert_eq!(subring::subring_oracle(&ring, p, k, 0).unwrap() as i64, s[k as usize], "{} p={p} k={k}", sigma.label());
            }
        }
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let lib: Vec<i64> = subring::subring_series(sigma, q, 15).unwrap().into_iter().map(|x| x as i64).collect();
            assert_eq!(lib, series(&numerator(sigma), q as i64, 15), "{} q={q}", sigma.label());
        }
    }
    within(start, Duration::from_secs(600));
}

#[test]
fn criterion_10_level_fourier() {
    let start = Instant::now();
    for (p, f, e, h0) in [(3, 1, 1, 1), (3, 1, 1, 3), (2, 1, 2, 2), (2, 2, 1, 4)] {
        let g = fourier::make_filtered_group(p, f, e, h0).unwrap();
        for i in 0..=e {
            let hat = fourier::fourier(&g.indicator(i as i64), &g).unwrap();
            let c = Cyclo::int(p, g.q().pow(e - i) as i64);
            let want = g.indicator((e - i) as i64);
            for x in 0..g.order() {
                assert_eq!(hat.values[x], want.values[x].mul(&c), "({p},{f},{e},{h0}) i={i} x={:?}", g.vector(x));
            }
        }
    }
    within(start, Duration::from_secs(30));
}

#[test]
fn criterion_11_scholz_sweep() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for d in (-200..=200i64).filter(|&d| d != 0 && d % 3 != 0 && classgroup::is_fundamental(d)) {
        // D = 1 has no primitive forms on either side
        if d == 1 {
            continue;
        }
        count += 1;
        let s = classgroup::scholz_check(d).unwrap();
        if !s.first_holds() {
            failures.push(format!("D = {d}: first identity"));
        }
        if !s.second_holds() {
            failures.push(format!(
                "D = {d}: second identity, |Cl(-3D)[3]| = {} but |Cl(9D)[3]| 3^{} with |Cl(9D)[3]| = {}",
                s.cl_minus_3d,
                s.exponent - 1,
                s.cl_9d
            ));
        }
        let maps = classgroup::cross_check_maps(d).ok();
        if maps != Some([1, 3]) {
            failures.push(format!("D = {d}: map ratios {maps:?}"));
        }
    }
    assert_eq!(count, 91);
    within(start, Duration::from_secs(600));
    assert!(failures.is_empty(), "{} failures: {failures:#?}", failures.len());
}

#[test]
fn criterion_12_discriminant_reduction() {
    let start = Instant::now();
    let mut pairs: Vec<(u64, BigInt)> = vec![(5, BigInt::from(-575)), (5, BigInt::from(25))];
    for d0 in (-30..=30i64).filter(|&d| d != 0 && d != 1 && classgroup::is_fundamental(d)) {
        pairs.push((2, BigInt::from(4 * d0)));
    }
    let random = reflect_rings::commands::random_pairs(0x5eed, 20, 2000).unwrap();
    assert_eq!(random.len(), 20);
    pairs.extend(random);
    for (p, d) in &pairs {
        assert!(cubic::reduction_applies(*p, d), "({p}, {d}) is not admissible");
        let r = cubic::check_disc_reduction(*p, d).unwrap();
        assert!(r.holds(), "p = {p}, D = {d}: {} vs {}", r.lhs, r.rhs);
        // left side again, straight from the class list
        let mut direct = WeightedCount::zero();
        for c in cubic::enumerate_cubics(d).unwrap() {
            direct.add_class(1, c.stab);
        }
        assert_eq!(&r.lhs, direct.value(), "p = {p}, D = {d}");
    }
    within(start, Duration::from_secs(900));
}
