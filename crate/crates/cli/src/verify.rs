//! The `verify-all` fixture suite.
//!
//! Checks run in a fixed order. Once the time budget is spent, the remaining
//! checks are listed as skipped and count as violations, so a pass always
//! means every check ran.

use std::time::Instant;

use num_bigint::BigInt;
use serde_json::{json, Value};

use reflect_core::boxes::{self, BoxSearch};
use reflect_core::classgroup;
use reflect_core::cubic;
use reflect_core::fourier;
use reflect_core::quad;
use reflect_core::quartic::{self, IdentitySource, MonicCubic, QuarticKind, SignCondition};
use reflect_core::subring::{self, SubringParams};
use reflect_core::{SplittingType, WeightedCount};

use crate::commands::{random_pairs, scholz_range};
use crate::report::{num, Report, Table};
use crate::CliError;

type Check = fn(u64) -> Result<(u64, Vec<String>), CliError>;

/// Records `actual == expected`, returning 1 for the check count.
fn expect<T: PartialEq + std::fmt::Display>(bad: &mut Vec<String>, what: &str, actual: T, expected: T) -> u64 {
    if actual != expected {
        bad.push(format!("{what}: got {actual}, expected {expected}"));
    }
    1
}

fn ratio(n: i64, d: i64) -> WeightedCount {
    WeightedCount::from_ratio(n, d)
}

fn quad_fixture(_: u64) -> Result<(u64, Vec<String>), CliError> {
    let mut bad = Vec::new();
    let mut n = 0;
    let c15 = quad::counts(15)?;
    let c60 = quad::counts(60)?;
    let c240 = quad::counts(240)?;
    for (what, a, e) in [
        ("q(15)", c15.q, 5),
        ("qplus(15)", c15.qplus, 4),
        ("q(60)", c60.q, 18),
        ("q2(60)", c60.q2, 8),
        ("qplus(60)", c60.qplus, 13),
        ("q2plus(60)", c60.q2plus, 5),
        ("q2plus(240)", c240.q2plus, 18),
        ("q2(240)", c240.q2, 26),
    ] {
        n += expect(&mut bad, what, a, e);
    }
    Ok((n, bad))
}

fn quad_sweep(_: u64) -> Result<(u64, Vec<String>), CliError> {
    let rep = quad::check_quadratic_on(300);
    let bad = rep.violations.iter().map(|v| format!("n = {}: {} ({} vs {})", v.n, v.identity, v.lhs, v.rhs)).collect();
    Ok((rep.checked as u64, bad))
}

fn cubic_fixture(_: u64) -> Result<(u64, Vec<String>), CliError> {
    let mut bad = Vec::new();
    let mut n = expect(&mut bad, "h(1)", cubic::h(&BigInt::from(1), &[])?, ratio(1, 6));
    n += expect(&mut bad, "h(-27)", cubic::h(&BigInt::from(-27), &[])?, ratio(1, 1));
    n += expect(&mut bad, "h3(-27)", cubic::h3(&BigInt::from(-27))?, ratio(1, 2));
    Ok((n, bad))
}

fn cubic_sweep(_: u64) -> Result<(u64, Vec<String>), CliError> {
    let rep = cubic::check_cubic_on(100)?;
    let bad = rep.violations.iter().map(|v| format!("D = {}: {} vs {}", v.d, v.lhs, v.rhs)).collect();
    Ok((rep.checked as u64, bad))
}

fn quartic_fixture(_: u64) -> Result<(u64, Vec<String>), CliError> {
    let mut bad = Vec::new();
    let g1 = MonicCubic::from_i64(0, -1, -1);
    let g2 = MonicCubic::from_i64(-2, -3, 6);
    let mut n = expect(&mut bad, "h(y^3-y-1)", quartic::count_quartics(&g1, SignCondition::Any)?, ratio(1, 2));
    for (what, cond, e) in [
        ("h^indef(y^3-2y^2-3y+6)", SignCondition::Indefinite, ratio(1, 2)),
        ("h^+(y^3-2y^2-3y+6)", SignCondition::PosDef, ratio(1, 2)),
        ("h^-(y^3-2y^2-3y+6)", SignCondition::NegDef, ratio(0, 1)),
    ] {
        n += expect(&mut bad, what, quartic::count_quartics(&g2, cond)?, e);
    }
    n += expect(&mut bad, "s(y^3-2y^2-3y+6)", quartic::count_symmetric_matrices(&g2), 0);
    n += expect(&mut bad, "s(y^3-y)", quartic::count_symmetric_matrices(&MonicCubic::from_i64(0, -1, 0)), 6);
    let listed = [[0, 4, 12, 8, -4], [-1, 4, 12, 8, 0], [-1, 0, 0, 8, -4], [-1, 4, 0, 0, -4]];
    let cls = quartic::classes(&MonicCubic::from_i64(0, -1, 1), QuarticKind::Supereven)?;
    n += expect(&mut bad, "supereven classes of y^3-y+1", cls.len(), 4);
    let mut hit = Vec::new();
    for f in listed {
        let f = reflect_core::BinaryForm::from_i64(&f);
        let which: Vec<usize> = (0..cls.len())
            .filter(|&i| quartic::equivalent_under(quartic::Equivalence::EvenUpper, &cls[i].rep, &f))
            .collect();
        n += expect(&mut bad, &format!("classes matching {f}"), which.len(), 1);
        hit.extend(which);
    }
    hit.sort();
    hit.dedup();
    n += expect(&mut bad, "distinct classes hit by the listed forms", hit.len(), 4);
    Ok((n, bad))
}

fn bq_suite(_: u64) -> Result<(u64, Vec<String>), CliError> {
    let mut bad = Vec::new();
    let mut n = 0;
    for (g2, g1, g0) in [(0, -1, -1), (-2, -3, 6), (0, -1, 0), (0, 1, 0), (0, -4, -1)] {
        let g = MonicCubic::from_i64(g2, g1, g0);
        let rep = quartic::check_bq(&g)?;
        for id in rep.identities.iter().filter(|i| i.source == IdentitySource::Theorem) {
            n += 1;
            if !id.holds() {
                bad.push(format!("{g}: {} ({} vs {})", id.name, id.lhs, id.rhs));
            }
        }
    }
    Ok((n, bad))
}

fn box_fixture(_: u64) -> Result<(u64, Vec<String>), CliError> {
    let mut bad = Vec::new();
    let f = [1, 0, -1, -1];
    let cls = boxes::search_boxes(&f, BoxSearch::new(2, false))?;
    let mut n = expect(&mut bad, "box classes of x^3-x-1", cls.len(), 2);
    n += expect(&mut bad, "weight of x^3-x-1", boxes::weight(&cls), ratio(1, 1));
    let even = boxes::search_boxes(&[2, 0, -2, -2], BoxSearch::new(2, true))?;
    n += expect(&mut bad, "even-diagonal classes of 2(x^3-x-1)", even.len(), 1);
    n += expect(&mut bad, "weight of 2(x^3-x-1)", boxes::weight(&even), ratio(1, 2));
    Ok((n, bad))
}

fn subring_suite(_: u64) -> Result<(u64, Vec<String>), CliError> {
    let mut bad = Vec::new();
    let mut n = 0;
    for sigma in SplittingType::ALL_NONZERO {
        for p in [2i64, 3, 5] {
            let (ring, d0) = subring::fixture(sigma, p).expect("fixture exists");
            let ts: &[u32] = if p == 3 { &[0, 1] } else { &[0] };
            for &t in ts {
                if t > 0 && matches!(sigma, SplittingType::T1_21) && d0 > 1 {
                    continue;
                }
                for k in 0..=4 {
                    let oracle = subring::subring_oracle(&ring, p, k, t)?;
                    let params = SubringParams { sigma, d0, d: d0 + 2 * k, t, q: p as u64, e: 1 };
                    let closed = subring::traced_subring_count(params)?;
                    n += expect(&mut bad, &format!("{} p={p} k={k} t={t}", sigma.label()), closed, oracle);
                }
            }
        }
        for q in [2u64, 3, 4, 5, 7] {
            let series = subring::subring_series(sigma, q, 12)?;
            let d0 = match sigma {
                SplittingType::T1_21 => 1,
                SplittingType::T1_3 => 2,
                _ => 0,
            };
            let closed = subring::traced_series(sigma, d0, q, 0, 1, 12)?;
            n += expect(&mut bad, &format!("series {} q={q}", sigma.label()), format!("{series:?}"), format!("{closed:?}"));
        }
    }
    Ok((n, bad))
}

fn fourier_suite(_: u64) -> Result<(u64, Vec<String>), CliError> {
    let mut bad = Vec::new();
    let mut n = 0;
    for (p, f, e, h0) in [(3, 1, 1, 1), (3, 1, 1, 3), (2, 1, 2, 2), (2, 2, 1, 4)] {
        let g = fourier::make_filtered_group(p, f, e, h0)?;
        for i in 0..=e {
            let hat = fourier::fourier(&g.indicator(i as i64), &g)?;
            let scale = fourier::Cyclo::int(p, g.q().pow(e - i) as i64);
            let target = g.indicator((e - i) as i64);
            let ok = (0..g.order()).all(|x| hat.values[x] == target.values[x].mul(&scale));
            n += 1;
            if !ok {
                bad.push(format!("(p,f,e,h0) = ({p},{f},{e},{h0}), i = {i}"));
            }
        }
    }
    Ok((n, bad))
}

fn scholz_suite(_: u64) -> Result<(u64, Vec<String>), CliError> {
    let mut bad = Vec::new();
    let mut n = 0;
    for d in scholz_range(200) {
        let s = classgroup::scholz_check(d)?;
        n += 3;
        if !s.first_holds() {
            bad.push(format!("D = {d}: first identity"));
        }
        if !s.second_holds() {
            bad.push(format!("D = {d}: second identity"));
        }
        let ratios = s.map_ratios().map(|mut x| {
            x.sort();
            x
        });
        if ratios != Some([1, 3]) {
            bad.push(format!("D = {d}: map ratios {ratios:?}"));
        }
    }
    Ok((n, bad))
}

fn disc_suite(seed: u64) -> Result<(u64, Vec<String>), CliError> {
    let mut pairs: Vec<(u64, BigInt)> = vec![(5, BigInt::from(-575)), (5, BigInt::from(25))];
    for d0 in (-30i64..=30).filter(|&d| d != 0 && d != 1 && classgroup::is_fundamental(d)) {
        pairs.push((2, BigInt::from(4 * d0)));
    }
    pairs.extend(random_pairs(seed, 20, 2000)?);
    let mut bad = Vec::new();
    for (p, d) in &pairs {
        let r = cubic::check_disc_reduction(*p, d)?;
        if !r.holds() {
            bad.push(format!("p = {p}, D = {d}: {} vs {}", r.lhs, r.rhs));
        }
    }
    Ok((pairs.len() as u64, bad))
}

const SUITE: [(&str, Check); 11] = [
    ("quadratic fixture", quad_fixture),
    ("quadratic sweep |n| <= 300", quad_sweep),
    ("cubic fixture", cubic_fixture),
    ("cubic sweep |D| <= 100", cubic_sweep),
    ("quartic fixture", quartic_fixture),
    ("quartic identities on five resolvents", bq_suite),
    ("box search", box_fixture),
    ("subring counts and series", subring_suite),
    ("level Fourier property", fourier_suite),
    ("Scholz sweep |D| <= 200", scholz_suite),
    ("discriminant reduction", disc_suite),
];

pub fn verify_all(budget: u64, seed: u64) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut r = Report::new("verify-all", "fixture suite", format!("budget {budget} s, seed {seed}"));
    let mut t = Table::new("checks", &["check", "status", "checked", "failures"]);
    for (name, check) in SUITE {
        if start.elapsed().as_secs() >= budget {
            r.violations.push(json!({"check": name, "reason": "skipped: time budget spent"}));
            t.push(vec![Value::String(name.into()), Value::String("skipped".into()), num(0), num(0)]);
            continue;
        }
        let (n, bad) = check(seed)?;
        r.checked += n;
        let status = if bad.is_empty() { "pass" } else { "fail" };
        t.push(vec![Value::String(name.into()), Value::String(status.into()), num(n), num(bad.len())]);
        for b in bad {
            r.violations.push(json!({"check": name, "detail": b}));
        }
    }
    r.table = Some(t);
    Ok(r)
}
