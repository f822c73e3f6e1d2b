//! Form class groups of binary quadratic forms and their 3-torsion.
//!
//! `Cl(D)` here is the group of `SL_2(Z)` classes of primitive forms
//! `a x^2 + b x y + c y^2` with `b^2 - 4 a c = D` (positive definite ones when
//! `D < 0`). For `D > 0` this is the narrow class group of the order of
//! discriminant `D`. Narrow and wide groups differ by a 2-group, so their
//! 3-torsion agrees.
//!
//! Definite classes are represented by reduced forms. An indefinite class is
//! a cycle of reduced forms under `rho`, represented by its least member.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_integer::{Integer, Roots};

use crate::error::{Error, Result};

/// `a x^2 + b x y + c y^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        QForm { a, b, c }
    }

    pub fn disc(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    /// The inverse class, `(a, -b, c)`.
    pub fn inverse(&self) -> Self {
        QForm::new(self.a, -self.b, self.c)
    }
}

fn is_square(n: i64) -> bool {
    n >= 0 && n.sqrt().pow(2) == n
}

fn check_disc(d: i64) -> Result<()> {
    if d == 0 || d.rem_euclid(4) > 1 || is_square(d) {
        return Err(Error::BadDiscriminant(format!("{d} is zero, a square, or not 0, 1 mod 4")));
    }
    Ok(())
}

/// Fundamental discriminants: `D = 1 mod 4` squarefree, or `4 m` with
/// `m = 2, 3 mod 4` squarefree. `1` counts.
pub fn is_fundamental(d: i64) -> bool {
    let squarefree = |n: i64| {
        let n = n.abs();
        (2..).take_while(|p| p * p <= n).all(|p| n % (p * p) != 0)
    };
    match d.rem_euclid(4) {
        1 => squarefree(d),
        0 => matches!((d / 4).rem_euclid(4), 2 | 3) && squarefree(d / 4),
        _ => false,
    }
}

/// Positive definite reduced form: `|b| <= a <= c`, `b >= 0` when `|b| = a` or
/// `a = c`.
fn reduce_definite(f: QForm) -> QForm {
    let QForm { mut a, mut b, mut c } = f;
    loop {
        if b > a || b <= -a {
            // b -> b mod 2a into (-a, a]
            let k = Integer::div_floor(&(a - b), &(2 * a));
            let nb = b + 2 * a * k;
            c = (nb * nb - (b * b - 4 * a * c)) / (4 * a);
            b = nb;
        }
        if a > c {
            core::mem::swap(&mut a, &mut c);
            b = -b;
            continue;
        }
        if a == c && b < 0 {
            b = -b;
        }
        return QForm { a, b, c };
    }
}

/// `0 < b < sqrt D` and `sqrt D - b < 2 |a| < sqrt D + b`.
fn is_reduced_indefinite(f: &QForm, s: i64) -> bool {
    // s = floor(sqrt D), and sqrt D is irrational
    f.b > 0 && f.b <= s && f.b + 2 * f.a.abs() > s && 2 * f.a.abs() <= f.b + s
}

/// `(a, b, c) -> (c, r, (r^2 - D) / 4c)` with `r = -b mod 2c` normalized.
fn rho(f: &QForm, d: i64, s: i64) -> QForm {
    let c = f.c.abs();
    let m = 2 * c;
    let base = (-f.b).rem_euclid(m);
    let r = if c <= s {
        // largest r <= s with r = -b mod 2c
        s - (s - base).rem_euclid(m)
    } else {
        // -c < r <= c
        if base > c {
            base - m
        } else {
            base
        }
    };
    QForm::new(f.c, r, (r * r - d) / (4 * f.c))
}

fn reduce_indefinite(mut f: QForm, d: i64, s: i64) -> QForm {
    while !is_reduced_indefinite(&f, s) {
        f = rho(&f, d, s);
    }
    f
}

/// Dirichlet composition, unreduced.
pub fn compose_raw(f: &QForm, g: &QForm) -> QForm {
    let d = f.disc();
    let mid = (f.b + g.b) / 2;
    // e = u a1 + v a2 + w mid
    let ext1 = f.a.extended_gcd(&g.a);
    let ext2 = ext1.gcd.extended_gcd(&mid);
    let e = ext2.gcd;
    let (u, v, w) = (ext2.x * ext1.x, ext2.x * ext1.y, ext2.y);
    let a3 = f.a / e * (g.a / e);
    let num = (u as i128) * (f.a as i128) * (g.b as i128)
        + (v as i128) * (g.a as i128) * (f.b as i128)
        + (w as i128) * ((f.b as i128) * (g.b as i128) + d as i128) / 2;
    let b3 = (num / e as i128).rem_euclid(2 * a3 as i128) as i64;
    QForm::new(a3, b3, (b3 * b3 - d) / (4 * a3))
}

/// The form class group of discriminant `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroupData {
    pub disc: i64,
    /// Canonical representatives, sorted, the principal class first.
    pub elements: Vec<QForm>,
    pub three_torsion: u64,
    /// Reduced form to index of its class (every reduced form when `d > 0`).
    index: BTreeMap<QForm, usize>,
    sqrt_floor: i64,
}

impl ClassGroupData {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn identity(&self) -> QForm {
        self.elements[0]
    }

    /// Canonical representative of the class of `f`.
    pub fn canonical(&self, f: &QForm) -> Result<QForm> {
        if f.disc() != self.disc || !f.is_primitive() || (self.disc < 0 && f.a < 0) {
            return Err(Error::BadInput(format!("{f:?} is not a primitive form in Cl({})", self.disc)));
        }
        let r = if self.disc < 0 {
            reduce_definite(*f)
        } else {
            reduce_indefinite(*f, self.disc, self.sqrt_floor)
        };
        Ok(self.elements[self.index[&r]])
    }

    pub fn compose(&self, f: &QForm, g: &QForm) -> Result<QForm> {
        self.canonical(&compose_raw(f, g))
    }

    pub fn power(&self, f: &QForm, n: u64) -> Result<QForm> {
        let mut acc = self.identity();
        for _ in 0..n {
            acc = self.compose(&acc, f)?;
        }
        Ok(acc)
    }

    /// Order of the class of `f`.
    pub fn element_order(&self, f: &QForm) -> Result<u64> {
        let start = self.canonical(f)?;
        let mut acc = start;
        let mut n = 1;
        while acc != self.identity() {
            acc = self.compose(&acc, &start)?;
            n += 1;
        }
        Ok(n)
    }

    /// Number of classes killed by `n`.
    pub fn torsion(&self, n: u64) -> Result<u64> {
        let mut count = 0;
        for f in &self.elements {
            if self.power(f, n)? == self.identity() {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// All primitive classes of discriminant `d` with their group law.
pub fn class_group(d: i64) -> Result<ClassGroupData> {
    check_disc(d)?;
    let mut index = BTreeMap::new();
    let mut elements = Vec::new();
    let s = if d > 0 { d.sqrt() } else { 0 };
    if d < 0 {
        let amax = (-d / 3).sqrt();
        for a in 1..=amax {
            for b in -a + 1..=a {
                if (b * b - d) % (4 * a) != 0 {
                    continue;
                }
                let c = (b * b - d) / (4 * a);
                let f = QForm::new(a, b, c);
                if c >= a && f.is_primitive() && reduce_definite(f) == f {
                    index.insert(f, elements.len());
                    elements.push(f);
                }
            }
        }
    } else {
        let mut reduced = Vec::new();
        for b in 1..=s {
            if (b * b - d) % 4 != 0 {
                continue;
            }
            let ac = (b * b - d) / 4;
            for a in 1..=(b + s) / 2 {
                if ac % a != 0 {
                    continue;
                }
                for f in [QForm::new(a, b, ac / a), QForm::new(-a, b, -ac / a)] {
                    if f.is_primitive() && is_reduced_indefinite(&f, s) {
                        reduced.push(f);
                    }
                }
            }
        }
        reduced.sort();
        for start in &reduced {
            if index.contains_key(start) {
                continue;
            }
            let id = elements.len();
            let mut cycle = Vec::new();
            let mut f = *start;
            loop {
                cycle.push(f);
                index.insert(f, id);
                f = rho(&f, d, s);
                if f == *start {
                    break;
                }
            }
            elements.push(*cycle.iter().min().unwrap());
        }
    }
    let mut group = ClassGroupData { disc: d, elements, three_torsion: 0, index, sqrt_floor: s };
    // principal class first, then the rest in order
    let principal = group.canonical(&principal_form(d))?;
    let mut order: Vec<usize> = (0..group.elements.len()).collect();
    order.sort_by_key(|&i| (group.elements[i] != principal, group.elements[i]));
    let remap: BTreeMap<usize, usize> = order.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    group.elements = order.iter().map(|&i| group.elements[i]).collect();
    for v in group.index.values_mut() {
        *v = remap[v];
    }
    group.three_torsion = group.torsion(3)?;
    Ok(group)
}

/// `x^2 + b x y + c y^2` with `b = D mod 2`.
pub fn principal_form(d: i64) -> QForm {
    let b = d.rem_euclid(2);
    QForm::new(1, b, (b - d) / 4)
}

/// Both sides of the two Scholz-type identities for one `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScholzReport {
    pub d: i64,
    /// `|Cl(D)[3]|`, `|Cl(-3D)[3]|`, `|Cl(9D)[3]|`, `|Cl(-27D)[3]|`.
    pub cl_d: u64,
    pub cl_minus_3d: u64,
    pub cl_9d: u64,
    pub cl_minus_27d: u64,
    /// `1_{D = -3} - 1_{D = 1} + 1_{D > 0}`.
    pub exponent: i32,
}

fn times_power_of_three(x: u64, e: i32) -> (u64, u64) {
    // x * 3^e as a fraction
    if e >= 0 {
        (x * 3u64.pow(e as u32), 1)
    } else {
        (x, 3u64.pow((-e) as u32))
    }
}

impl ScholzReport {
    /// `|Cl(-27D)[3]| = |Cl(D)[3]| 3^exponent`.
    pub fn first_holds(&self) -> bool {
        let (n, d) = times_power_of_three(self.cl_d, self.exponent);
        self.cl_minus_27d * d == n
    }

    /// `|Cl(-3D)[3]| = |Cl(9D)[3]| 3^(exponent - 1)`.
    pub fn second_holds(&self) -> bool {
        let (n, d) = times_power_of_three(self.cl_9d, self.exponent - 1);
        self.cl_minus_3d * d == n
    }

    /// `|Cl(9D)[3]| / |Cl(D)[3]|` and `|Cl(-27D)[3]| / |Cl(-3D)[3]|`, when
    /// both divide.
    pub fn map_ratios(&self) -> Option<[u64; 2]> {
        let r1 = (self.cl_9d % self.cl_d == 0).then(|| self.cl_9d / self.cl_d)?;
        let r2 = (self.cl_minus_27d % self.cl_minus_3d == 0).then(|| self.cl_minus_27d / self.cl_minus_3d)?;
        Some([r1, r2])
    }
}

fn scholz_data(d: i64) -> Result<ScholzReport> {
    if !is_fundamental(d) || d % 3 == 0 || d == 1 {
        return Err(Error::BadDiscriminant(format!("{d} must be fundamental, prime to 3 and not 1")));
    }
    let exponent = (d > 0) as i32;
    Ok(ScholzReport {
        d,
        cl_d: class_group(d)?.three_torsion,
        cl_minus_3d: class_group(-3 * d)?.three_torsion,
        cl_9d: class_group(9 * d)?.three_torsion,
        cl_minus_27d: class_group(-27 * d)?.three_torsion,
        exponent,
    })
}

/// Computes all four 3-torsion sizes for a fundamental `D` prime to 3.
/// `D = 1` is rejected: `Cl(1)` and `Cl(9)` belong to the split algebra, which
/// has no forms to enumerate.
pub fn scholz_check(d: i64) -> Result<ScholzReport> {
    scholz_data(d)
}

/// The two index ratios from the maps `Cl(9D) -> Cl(D)` and
/// `Cl(-27D) -> Cl(-3D)` on 3-cotorsion, sorted.
pub fn cross_check_maps(d: i64) -> Result<[u64; 2]> {
    let report = scholz_data(d)?;
    let mut r = report
        .map_ratios()
        .ok_or_else(|| Error::BadDiscriminant(format!("3-torsion sizes for {d} do not divide")))?;
    r.sort();
    Ok(r)
}
