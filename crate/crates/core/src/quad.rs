//! Quadratics `a x^2 + b x + c` of fixed superdiscriminant `a (b^2 - 4ac)`,
//! counted up to translation `x -> x + t`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Translation class representative with `-|a| < b <= |a|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadClass {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadClass {
    pub fn superdiscriminant(&self) -> i128 {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        a * (b * b - 4 * a * c)
    }

    pub fn real_roots(&self) -> bool {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        b * b - 4 * a * c > 0
    }

    pub fn even_b(&self) -> bool {
        self.b % 2 == 0
    }
}

/// Positive divisors of `n != 0`, ascending.
pub fn divisors(n: i64) -> Vec<i64> {
    let n = n.unsigned_abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d as i64);
            if d * d != n {
                large.push((n / d) as i64);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// One representative per translation class of quadratics with superdiscriminant `i`,
/// sorted by `(|a|, a, b)`.
pub fn enumerate_quadratics(i: i64) -> Result<Vec<QuadClass>> {
    if i == 0 {
        return Err(Error::ZeroInvariant);
    }
    let mut out = Vec::new();
    for d in divisors(i) {
        for a in [-d, d] {
            for b in (-a.abs() + 1)..=a.abs() {
                let num = a as i128 * (b as i128) * (b as i128) - i as i128;
                let den = 4 * (a as i128) * (a as i128);
                if num % den == 0 {
                    out.push(QuadClass { a, b, c: (num / den) as i64 });
                }
            }
        }
    }
    out.sort_by_key(|q| (q.a.abs(), q.a, q.b));
    Ok(out)
}

/// The four counts `q`, `q_2`, `q^+`, `q_2^+` of one superdiscriminant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadCounts {
    pub q: usize,
    pub q2: usize,
    pub qplus: usize,
    pub q2plus: usize,
}

pub fn counts(i: i64) -> Result<QuadCounts> {
    let classes = enumerate_quadratics(i)?;
    let q = classes.len();
    let q2 = classes.iter().filter(|c| c.even_b()).count();
    let qplus = classes.iter().filter(|c| c.real_roots()).count();
    let q2plus = classes.iter().filter(|c| c.even_b() && c.real_roots()).count();
    Ok(QuadCounts { q, q2, qplus, q2plus })
}

/// Number of classes, optionally restricted to even `b` and/or real roots.
pub fn count_q(i: i64, even_b: bool, real_roots: bool) -> Result<usize> {
    Ok(enumerate_quadratics(i)?
        .iter()
        .filter(|c| (!even_b || c.even_b()) && (!real_roots || c.real_roots()))
        .count())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadViolation {
    pub n: i64,
    pub identity: &'static str,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Clone, Debug, Default)]
pub struct QuadReport {
    pub checked: usize,
    pub violations: Vec<QuadViolation>,
}

/// Checks `q_2^+(4n) = q(n)` and `q_2(4n) = 2 q^+(n)` at one `n`.
pub fn check_one(n: i64) -> Result<Vec<QuadViolation>> {
    let small = counts(n)?;
    let big = counts(4 * n)?;
    let mut v = Vec::new();
    if big.q2plus != small.q {
        v.push(QuadViolation { n, identity: "q2plus(4n)=q(n)", lhs: big.q2plus, rhs: small.q });
    }
    if big.q2 != 2 * small.qplus {
        v.push(QuadViolation { n, identity: "q2(4n)=2qplus(n)", lhs: big.q2, rhs: 2 * small.qplus });
    }
    Ok(v)
}

/// Runs [`check_one`] for every `0 < |n| <= max`.
pub fn check_quadratic_on(max: i64) -> QuadReport {
    let mut report = QuadReport::default();
    for m in 1..=max {
        for n in [-m, m] {
            report.checked += 2;
            report.violations.extend(check_one(n).expect("n is nonzero"));
        }
    }
    report
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// Legendre symbol by Euler's criterion; `p` an odd prime.
pub fn legendre(a: i64, p: u64) -> i64 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegendreReport {
    pub qplus: usize,
    pub expected_qplus: i64,
    pub q2: usize,
    pub expected_q2: i64,
}

impl LegendreReport {
    pub fn passed(&self) -> bool {
        self.qplus as i64 == self.expected_qplus && self.q2 as i64 == self.expected_q2
    }
}

/// Compares `q^+(p1 p3)` with `5 + (p1|p3)` and `q_2(4 p1 p3)` with `10 + 2 (p3|p1)`.
pub fn legendre_check(p1: u64, p3: u64) -> Result<LegendreReport> {
    if !is_prime(p1) || !is_prime(p3) || p1 % 4 != 1 || p3 % 4 != 3 {
        return Err(Error::BadPrimes(alloc::format!(
            "need primes p1 = 1 mod 4 and p3 = 3 mod 4, got {p1}, {p3}"
        )));
    }
    let n = (p1 * p3) as i64;
    Ok(LegendreReport {
        qplus: count_q(n, false, true)?,
        expected_qplus: 5 + legendre(p1 as i64, p3),
        q2: count_q(4 * n, true, false)?,
        expected_q2: 10 + 2 * legendre(p3 as i64, p1),
    })
}
