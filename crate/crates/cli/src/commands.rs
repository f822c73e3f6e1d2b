use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};

use reflect_core::boxes::{self, BoxSearch};
use reflect_core::classgroup;
use reflect_core::cubic::{self, LocalCondition};
use reflect_core::fourier;
use reflect_core::quad;
use reflect_core::quartic::{self, MonicCubic, SignCondition};
use reflect_core::subring::{self, CubicRing, SubringParams};
use reflect_core::{BinaryForm, SplittingType};

use crate::report::{num, nums, Report, Table};
use crate::sweep::{self, Outcome};
use crate::{Cli, CliError, Command};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn parse_big(s: &str) -> Result<BigInt, CliError> {
    s.trim().parse().map_err(|_| usage(format!("`{s}` is not an integer")))
}

pub fn parse_list(s: &str, len: usize) -> Result<Vec<BigInt>, CliError> {
    let v: Vec<BigInt> = s.split(',').map(parse_big).collect::<Result<_, _>>()?;
    if v.len() != len {
        return Err(usage(format!("`{s}` should have {len} comma-separated entries")));
    }
    Ok(v)
}

/// `g0,g1,g2` to `y^3 + g2 y^2 + g1 y + g0`.
pub fn parse_monic(s: &str) -> Result<MonicCubic, CliError> {
    let v = parse_list(s, 3)?;
    Ok(MonicCubic::new(v[2].clone(), v[1].clone(), v[0].clone()))
}

pub fn parse_sigma(s: &str) -> Result<SplittingType, CliError> {
    SplittingType::parse(s).ok_or_else(|| usage(format!("unknown splitting type `{s}`")))
}

fn parse_cond(s: &str) -> Result<SignCondition, CliError> {
    SignCondition::parse(s).ok_or_else(|| usage(format!("unknown sign condition `{s}`")))
}

fn small(x: &BigInt) -> Result<i64, CliError> {
    i64::try_from(x).map_err(|_| usage(format!("{x} is out of range")))
}

fn monic_json(g: &MonicCubic) -> Value {
    json!({ "g0": num(&g.g0), "g1": num(&g.g1), "g2": num(&g.g2) })
}

fn form_json(f: &BinaryForm) -> Value {
    nums(f.coeffs())
}

/// `-max..=-1` then `1..=max`.
fn signed_range(max: i64) -> Vec<i64> {
    (-max..=max).filter(|&n| n != 0).collect()
}

pub fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let resume = cli.resume.as_deref();
    match &cli.command {
        Command::QuadSuperdisc { invariant, even_b, real } => quad_superdisc(*invariant, *even_b, *real),
        Command::QuadOnCheck { max } => quad_on_check(*max, resume),
        Command::CubicCount { disc, traced, split, marked_root } => cubic_count(disc, *traced, split, marked_root),
        Command::CubicOnCheck { max } => cubic_on_check(*max, resume),
        Command::Shintani { sign, max, traced } => shintani(sign, *max, *traced, resume),
        Command::DiscReduction { p, disc, random, max_disc } => match (p, disc, random) {
            (Some(p), Some(d), None) => disc_reduction(&[(*p, parse_big(d)?)]),
            (None, None, Some(n)) => disc_reduction(&random_pairs(cli.seed, *n, *max_disc)?),
            _ => Err(usage("give either --p and --disc, or --random N")),
        },
        Command::QuarticCount { resolvent, cond } => quartic_count(resolvent, cond.as_deref()),
        Command::SymmatCount { charpoly } => symmat_count(charpoly),
        Command::BqCheck { resolvent } => bq_check(resolvent),
        Command::BoxSearch { cubic, bound, even_diagonal } => box_search(cubic, *bound, *even_diagonal),
        Command::FourierLevel { p, f, e, h0, i } => fourier_level(*p, *f, *e, *h0, *i),
        Command::SubringZeta { sigma, q, terms, traced, d0, t, e } => {
            subring_zeta(parse_sigma(sigma)?, *q, *terms, traced.then_some((*d0, *t, *e)))
        }
        Command::SubringOracle { ring, p, k, t, sigma, d0 } => {
            let sigma = sigma.as_deref().map(parse_sigma).transpose()?;
            subring_oracle(&read_ring(ring)?, *p, *k, *t, sigma, *d0)
        }
        Command::Classgroup { disc } => classgroup_cmd(*disc),
        Command::ScholzCheck { max } => scholz(*max, resume),
        Command::VerifyAll { budget } => crate::verify::verify_all(*budget, cli.seed),
    }
}

// ---------------------------------------------------------------------------
// Quadratic

pub fn quad_superdisc(i: i64, even_b: bool, real: bool) -> Result<Report, CliError> {
    let classes = quad::enumerate_quadratics(i)?;
    let c = quad::counts(i)?;
    let mut r = Report::new("quad-superdisc", "", format!("I = {i}"));
    r.set("I", num(i));
    r.set("q", num(c.q));
    r.set("q2", num(c.q2));
    r.set("qplus", num(c.qplus));
    r.set("q2plus", num(c.q2plus));
    let mut t = Table::new("classes", &["a", "b", "c", "even_b", "real_roots"]);
    for cl in classes.iter().filter(|cl| (!even_b || cl.even_b()) && (!real || cl.real_roots())) {
        t.push(vec![num(cl.a), num(cl.b), num(cl.c), num(cl.even_b()), num(cl.real_roots())]);
    }
    r.checked = t.rows.len() as u64;
    r.table = Some(t);
    Ok(r)
}

pub fn quad_on_check(max: i64, resume: Option<&Path>) -> Result<Report, CliError> {
    if max < 1 {
        return Err(usage("--max must be positive"));
    }
    let items = signed_range(max);
    let outcomes = sweep::run("quad-on-check", &format!("max={max}"), &items, resume, |n| {
        let s = quad::counts(n)?;
        let b = quad::counts(4 * n)?;
        let mut violations = Vec::new();
        if b.q2plus != s.q {
            violations.push(json!({"n": num(n), "identity": "q2plus(4n) = q(n)", "lhs": num(b.q2plus), "rhs": num(s.q)}));
        }
        if b.q2 != 2 * s.qplus {
            violations
                .push(json!({"n": num(n), "identity": "q2(4n) = 2 qplus(n)", "lhs": num(b.q2), "rhs": num(2 * s.qplus)}));
        }
        let row = vec![num(n), num(s.q), num(s.qplus), num(b.q2plus), num(b.q2)];
        Ok(Outcome { row, violations, checked: 2 })
    })?;
    let mut r = Report::new("quad-on-check", "q2plus(4n) = q(n), q2(4n) = 2 qplus(n)", format!("0 < |n| <= {max}"));
    let mut t = Table::new("items", &["n", "q(n)", "qplus(n)", "q2plus(4n)", "q2(4n)"]);
    absorb(&mut r, &mut t, outcomes);
    r.table = Some(t);
    Ok(r)
}

fn absorb(r: &mut Report, t: &mut Table, outcomes: Vec<Outcome>) {
    for o in outcomes {
        r.checked += o.checked;
        r.violations.extend(o.violations);
        t.push(o.row);
    }
}

// ---------------------------------------------------------------------------
// Cubic

fn parse_conditions(traced: bool, split: &[String], marked: &[u64]) -> Result<Vec<LocalCondition>, CliError> {
    let mut conds = Vec::new();
    if traced {
        conds.push(LocalCondition::Traced3);
    }
    for s in split {
        let (p, ty) = s.split_once(':').ok_or_else(|| usage(format!("--split expects p:TYPE, got `{s}`")))?;
        let p: u64 = p.parse().map_err(|_| usage(format!("bad prime in `{s}`")))?;
        if !quad::is_prime(p) {
            return Err(usage(format!("{p} is not prime")));
        }
        conds.push(LocalCondition::Splitting(p, parse_sigma(ty)?));
    }
    for &p in marked {
        if !quad::is_prime(p) {
            return Err(usage(format!("{p} is not prime")));
        }
        conds.push(LocalCondition::MarkedRoot(p));
    }
    Ok(conds)
}

pub fn cubic_count(disc: &str, traced: bool, split: &[String], marked: &[u64]) -> Result<Report, CliError> {
    let d = parse_big(disc)?;
    let conds = parse_conditions(traced, split, marked)?;
    let classes = cubic::enumerate_cubics(&d)?;
    let h = cubic::h(&d, &conds)?;
    let mut r = Report::new("cubic-count", "", format!("D = {d}"));
    r.set("D", num(&d));
    r.set("h", num(&h));
    let mut t = Table::new("classes", &["coeffs", "stab", "weight"]);
    for c in &classes {
        t.push(vec![form_json(&c.rep), num(c.stab), num(cubic::class_weight(&c.rep, &conds))]);
    }
    r.checked = classes.len() as u64;
    r.table = Some(t);
    Ok(r)
}

pub fn cubic_on_check(max: i64, resume: Option<&Path>) -> Result<Report, CliError> {
    if max < 1 {
        return Err(usage("--max must be positive"));
    }
    let items = signed_range(max);
    let outcomes = sweep::run("cubic-on-check", &format!("max={max}"), &items, resume, |d| {
        let lhs = cubic::h3(&BigInt::from(-27 * d))?;
        let base = cubic::h(&BigInt::from(d), &[])?;
        let rhs = if d > 0 { base.clone() + base.clone() + base.clone() } else { base.clone() };
        let violations = if lhs == rhs {
            Vec::new()
        } else {
            vec![json!({"D": num(d), "lhs": num(&lhs), "rhs": num(&rhs)})]
        };
        Ok(Outcome { row: vec![num(d), num(&base), num(&lhs), num(&rhs)], violations, checked: 1 })
    })?;
    let mut r = Report::new("cubic-on-check", "h3(-27D) = 3 h(D) for D > 0, h(D) for D < 0", format!("0 < |D| <= {max}"));
    let mut t = Table::new("items", &["D", "h(D)", "h3(-27D)", "expected"]);
    absorb(&mut r, &mut t, outcomes);
    r.table = Some(t);
    Ok(r)
}

pub fn shintani(sign: &str, max: i64, traced: bool, resume: Option<&Path>) -> Result<Report, CliError> {
    let positive = match sign {
        "+" | "pos" | "positive" => true,
        "-" | "neg" | "negative" => false,
        _ => return Err(usage(format!("--sign must be + or -, got `{sign}`"))),
    };
    if max < 1 {
        return Err(usage("--max must be positive"));
    }
    let items: Vec<i64> = (1..=max).collect();
    let params = format!("sign={sign} max={max} traced={traced}");
    let outcomes = sweep::run("shintani", &params, &items, resume, |n| {
        let s = if positive { n } else { -n };
        let h = if traced { cubic::h3(&BigInt::from(27 * s))? } else { cubic::h(&BigInt::from(s), &[])? };
        Ok(Outcome { row: vec![num(n), num(&h)], violations: Vec::new(), checked: 1 })
    })?;
    let what = if traced { "h3(27 n)" } else { "h(n)" };
    let mut r = Report::new("shintani", "", format!("n = 1..{max}, sign {sign}, {what}"));
    let mut t = Table::new("coefficients", &["n", "h"]);
    absorb(&mut r, &mut t, outcomes);
    r.table = Some(t);
    Ok(r)
}

/// `n` distinct pairs with `0 < |D| <= max_disc` satisfying
/// [`cubic::reduction_applies`], drawn uniformly by the seeded generator.
pub fn random_pairs(seed: u64, n: usize, max_disc: i64) -> Result<Vec<(u64, BigInt)>, CliError> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut all = Vec::new();
    for p in (2..).filter(|&p| quad::is_prime(p) && p != 3).take_while(|&p| (p * p) as i64 <= max_disc) {
        let p2 = (p * p) as i64;
        for d in (-max_disc..=max_disc).filter(|&d| d % p2 == 0 && cubic::reduction_applies(p, &BigInt::from(d))) {
            all.push((p, d));
        }
    }
    if all.len() < n {
        return Err(usage(format!("only {} admissible pairs with |D| <= {max_disc}", all.len())));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<(u64, i64)> = all.choose_multiple(&mut rng, n).copied().collect();
    picked.sort_by_key(|&(p, d)| (p, d.abs(), d));
    Ok(picked.into_iter().map(|(p, d)| (p, BigInt::from(d))).collect())
}

pub fn disc_reduction(pairs: &[(u64, BigInt)]) -> Result<Report, CliError> {
    use rayon::prelude::*;
    let results: Vec<cubic::DiscReduction> =
        pairs.par_iter().map(|(p, d)| cubic::check_disc_reduction(*p, d)).collect::<Result<_, _>>()?;
    let range = pairs.iter().map(|(p, d)| format!("({p},{d})")).collect::<Vec<_>>().join(" ");
    let mut r = Report::new("disc-reduction", "h(D) in terms of D/p^2, D/p^4 and -27 D/p^2", range);
    let mut t = Table::new("items", &["p", "D", "lhs", "rhs", "terms"]);
    for x in &results {
        r.checked += 1;
        if !x.holds() {
            r.violations.push(json!({"p": num(x.p), "D": num(&x.d), "lhs": num(&x.lhs), "rhs": num(&x.rhs)}));
        }
        t.push(vec![num(x.p), num(&x.d), num(&x.lhs), num(&x.rhs), nums(x.terms.iter())]);
    }
    r.table = Some(t);
    Ok(r)
}

// ---------------------------------------------------------------------------
// Quartic

pub fn quartic_count(resolvent: &str, cond: Option<&str>) -> Result<Report, CliError> {
    let g = parse_monic(resolvent)?;
    let cond = cond.map(parse_cond).transpose()?.unwrap_or(SignCondition::Any);
    let classes = quartic::classes(&g, quartic::QuarticKind::Integral)?;
    let mut r = Report::new("quartic-count", "", format!("g = {g}"));
    r.set("g", monic_json(&g));
    r.set("condition", Value::String(format!("{cond:?}")));
    r.set("h", num(quartic::weighted(&classes, cond)));
    let mut t = Table::new("classes", &["coeffs", "stab", "sign"]);
    for c in classes.iter().filter(|c| cond.accepts(c.sign)) {
        t.push(vec![form_json(&c.rep), num(c.stab), Value::String(c.sign.label().into())]);
    }
    r.checked = t.rows.len() as u64;
    r.table = Some(t);
    Ok(r)
}

pub fn symmat_count(charpoly: &str) -> Result<Report, CliError> {
    let g = parse_monic(charpoly)?;
    if g.disc() == BigInt::from(0) {
        return Err(usage("characteristic polynomial must have distinct roots"));
    }
    let mats = quartic::symmetric_matrices(&g);
    let mut r = Report::new("symmat-count", "", format!("g = {g}"));
    r.set("g", monic_json(&g));
    r.set("s", num(mats.len()));
    let mut t = Table::new("matrices", &["d1", "d2", "d3", "x", "y", "z"]);
    for m in &mats {
        t.push(m.iter().map(num).collect());
    }
    r.checked = mats.len() as u64;
    r.table = Some(t);
    Ok(r)
}

pub fn bq_check(resolvent: &str) -> Result<Report, CliError> {
    let g = parse_monic(resolvent)?;
    let rep = quartic::check_bq(&g)?;
    let mut r = Report::new("bq-check", "quartic reflection identities", format!("g = {g}"));
    r.set("g", monic_json(&g));
    r.set("disc", num(&rep.disc));
    r.set("two_adic_unverified", num(rep.warn_two_adic));
    r.set("h", num(&rep.h));
    r.set("h4", num(&rep.h4));
    r.set("h2", num(&rep.h2));
    r.set("s", num(rep.s));
    let by_sign: Vec<Value> = rep
        .by_sign
        .iter()
        .map(|(s, h, h4, h2)| json!({"sign": s.label(), "h": num(h), "h4": num(h4), "h2": num(h2)}))
        .collect();
    r.set("by_sign", Value::Array(by_sign));
    r.set("classes", Value::Array(rep.classes.iter().map(|c| form_json(&c.rep)).collect()));
    r.set("classes_supereven", Value::Array(rep.classes_supereven.iter().map(|c| form_json(&c.rep)).collect()));
    let mut t = Table::new("identities", &["name", "source", "lhs", "rhs", "holds"]);
    for id in &rep.identities {
        r.checked += 1;
        let source = Value::String(format!("{:?}", id.source).to_lowercase());
        if !id.holds() {
            r.violations.push(json!({"identity": id.name, "lhs": num(&id.lhs), "rhs": num(&id.rhs)}));
        }
        t.push(vec![Value::String(id.name.into()), source, num(&id.lhs), num(&id.rhs), num(id.holds())]);
    }
    r.table = Some(t);
    Ok(r)
}

fn matrix_json(m: &[[i64; 3]; 3]) -> Value {
    Value::Array(m.iter().map(|row| nums(row.iter())).collect())
}

pub fn box_search(cubic: &str, bound: i64, even_diagonal: bool) -> Result<Report, CliError> {
    let c = parse_list(cubic, 4)?;
    let f = [small(&c[3])?, small(&c[2])?, small(&c[1])?, small(&c[0])?];
    if !(1..=4).contains(&bound) {
        return Err(usage("--bound must be between 1 and 4"));
    }
    let classes = boxes::search_boxes(&f, BoxSearch::new(bound, even_diagonal))?;
    let mut r = Report::new("box-search", "", format!("f = {f:?} (x^3 first), entries in [-{bound}, {bound}]"));
    r.set("classes_found", num(classes.len()));
    r.set("weight", num(boxes::weight(&classes)));
    let mut t = Table::new("classes", &["A", "B", "stab", "members"]);
    for cl in &classes {
        t.push(vec![matrix_json(&cl.rep.a), matrix_json(&cl.rep.b), num(cl.stab), num(cl.members.len())]);
    }
    r.checked = classes.len() as u64;
    r.table = Some(t);
    Ok(r)
}

// ---------------------------------------------------------------------------
// Local Fourier and subrings

pub fn fourier_level(p: u32, f: u32, e: u32, h0: u64, i: Option<u32>) -> Result<Report, CliError> {
    let g = fourier::make_filtered_group(p, f, e, h0)?;
    let levels: Vec<u32> = match i {
        Some(i) if i > e => return Err(usage(format!("--i must be at most e = {e}"))),
        Some(i) => vec![i],
        None => (0..=e).collect(),
    };
    let mut r = Report::new("fourier-level", "transform of 1_{L_i} = q^(e-i) 1_{L_(e-i)}", format!("(p,f,e,h0) = ({p},{f},{e},{h0})"));
    r.set("order", num(g.order()));
    r.set("q", num(g.q()));
    r.set("level_sizes", nums(g.level_dims.iter().map(|&d| (p as u64).pow(d as u32))));
    let mut t = Table::new("levels", &["i", "size", "expected_factor", "points", "mismatches"]);
    for &i in &levels {
        let hat = fourier::fourier(&g.indicator(i as i64), &g)?;
        let factor = g.q().pow(e - i);
        let expect = g.indicator((e - i) as i64);
        let scale = fourier::Cyclo::int(p, factor as i64);
        let bad: Vec<usize> =
            (0..g.order()).filter(|&x| hat.values[x] != expect.values[x].mul(&scale)).collect();
        r.checked += g.order() as u64;
        if let Some(&x) = bad.first() {
            r.violations.push(json!({"i": num(i), "first_bad_point": nums(g.vector(x)), "count": num(bad.len())}));
        }
        let size = (p as u64).pow(g.level_dims[i as usize] as u32);
        t.push(vec![num(i), num(size), num(factor), num(g.order()), num(bad.len())]);
    }
    r.table = Some(t);
    Ok(r)
}

fn default_d0(sigma: SplittingType) -> u32 {
    match sigma {
        SplittingType::T1_21 => 1,
        SplittingType::T1_3 => 2,
        _ => 0,
    }
}

pub fn subring_zeta(sigma: SplittingType, q: u64, terms: usize, traced: Option<(Option<u32>, u32, u32)>) -> Result<Report, CliError> {
    if terms == 0 || terms > 200 {
        return Err(usage("--terms must be between 1 and 200"));
    }
    let mut t = Table::new("coefficients", &["d", "count"]);
    let mut r;
    match traced {
        None => {
            let series = subring::subring_series(sigma, q, terms)?;
            // the closed forms at t = 0 must give the same coefficients
            let closed = subring::traced_series(sigma, default_d0(sigma), q, 0, 1, terms)?;
            r = Report::new("subring-zeta", "series = F / ((1 - Z)(1 - q Z^3))", format!("sigma = {}, q = {q}", sigma.label()));
            for (n, (a, b)) in series.iter().zip(&closed).enumerate() {
                r.checked += 1;
                if a != b {
                    r.violations.push(json!({"d": num(n), "series": num(a), "closed_form": num(b)}));
                }
                t.push(vec![num(n), num(a)]);
            }
        }
        Some((d0, tt, e)) => {
            let d0 = d0.unwrap_or(default_d0(sigma));
            let series = subring::traced_series(sigma, d0, q, tt, e, terms)?;
            r = Report::new(
                "subring-zeta",
                "",
                format!("sigma = {}, q = {q}, d0 = {d0}, t = {tt}, e = {e}; d = d0 + 2n", sigma.label()),
            );
            for (n, a) in series.iter().enumerate() {
                r.checked += 1;
                t.push(vec![num(d0 as usize + 2 * n), num(a)]);
            }
        }
    }
    r.table = Some(t);
    Ok(r)
}

pub fn read_ring(path: &Path) -> Result<CubicRing, CliError> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let v = v.get("table").cloned().unwrap_or(v);
    let table: [[[i64; 3]; 3]; 3] = serde_json::from_value(v)
        .map_err(|e| usage(format!("{}: expected a 3x3x3 integer array: {e}", path.display())))?;
    Ok(CubicRing { table })
}

pub fn subring_oracle(ring: &CubicRing, p: i64, k: u32, t: u32, sigma: Option<SplittingType>, d0: Option<u32>) -> Result<Report, CliError> {
    if k > 8 {
        return Err(usage("--k must be at most 8"));
    }
    let mut r = Report::new("subring-oracle", "", format!("p = {p}, k = {k}, t = {t}"));
    r.set("disc", num(ring.discriminant()));
    let mut table = Table::new("counts", &["k", "oracle", "closed_form"]);
    let mut last = 0;
    for kk in 0..=k {
        let count = subring::subring_oracle(ring, p, kk, t)?;
        let closed = match sigma {
            Some(s) => {
                let d0 = d0.unwrap_or(default_d0(s));
                let params = SubringParams { sigma: s, d0, d: d0 + 2 * kk, t, q: p as u64, e: 1 };
                Some(subring::traced_subring_count(params)?)
            }
            None => None,
        };
        if let Some(c) = closed {
            r.checked += 1;
            if c != count {
                r.violations.push(json!({"k": num(kk), "oracle": num(count), "closed_form": num(c)}));
            }
        }
        table.push(vec![num(kk), num(count), closed.map(num).unwrap_or(Value::Null)]);
        last = count;
    }
    r.set("count", num(last));
    r.table = Some(table);
    Ok(r)
}

// ---------------------------------------------------------------------------
// Class groups

pub fn classgroup_cmd(d: i64) -> Result<Report, CliError> {
    let cg = classgroup::class_group(d)?;
    let mut r = Report::new("classgroup", "", format!("D = {d}"));
    r.set("D", num(d));
    r.set("h", num(cg.order()));
    r.set("three_torsion", num(cg.three_torsion));
    let mut t = Table::new("elements", &["a", "b", "c", "order"]);
    for f in &cg.elements {
        t.push(vec![num(f.a), num(f.b), num(f.c), num(cg.element_order(f)?)]);
    }
    r.checked = cg.order();
    r.table = Some(t);
    Ok(r)
}

/// Fundamental `D` with `3 ∤ D`, `D != 1`, `0 < |D| <= max`.
pub fn scholz_range(max: i64) -> Vec<i64> {
    signed_range(max).into_iter().filter(|&d| d != 1 && d % 3 != 0 && classgroup::is_fundamental(d)).collect()
}

pub fn scholz(max: i64, resume: Option<&Path>) -> Result<Report, CliError> {
    if max < 1 {
        return Err(usage("--max must be positive"));
    }
    let items = scholz_range(max);
    let outcomes = sweep::run("scholz-check", &format!("max={max}"), &items, resume, |d| {
        let s = classgroup::scholz_check(d)?;
        let mut violations = Vec::new();
        if !s.first_holds() {
            violations.push(json!({"D": num(d), "identity": "first"}));
        }
        if !s.second_holds() {
            violations.push(json!({"D": num(d), "identity": "second"}));
        }
        let ratios = s.map_ratios().map(|mut x| {
            x.sort();
            x
        });
        if ratios != Some([1, 3]) {
            let shown = ratios.map(|x| nums(x.iter())).unwrap_or(Value::Null);
            violations.push(json!({"D": num(d), "identity": "maps", "ratios": shown}));
        }
        let row = vec![
            num(d),
            num(s.cl_d),
            num(s.cl_minus_3d),
            num(s.cl_9d),
            num(s.cl_minus_27d),
            num(s.first_holds()),
            num(s.second_holds()),
            ratios.map(|x| nums(x.iter())).unwrap_or(Value::Null),
        ];
        Ok(Outcome { row, violations, checked: 3 })
    })?;
    let mut r = Report::new(
        "scholz-check",
        "|Cl(-27D)[3]| = |Cl(D)[3]| 3^(D>0); |Cl(-3D)[3]| = |Cl(9D)[3]| 3^((D>0)-1); map ratios {1,3}",
        format!("fundamental D, 3 does not divide D, D != 1, |D| <= {max}"),
    );
    let mut t = Table::new("items", &["D", "Cl(D)[3]", "Cl(-3D)[3]", "Cl(9D)[3]", "Cl(-27D)[3]", "first", "second", "ratios"]);
    absorb(&mut r, &mut t, outcomes);
    r.table = Some(t);
    Ok(r)
}
