//! Brute-force class oracle for binary cubics, independent of the reduction code.
//!
//! All forms of a given discriminant inside a coefficient box are connected by
//! the generators `S`, `T`, `T^-1`, `x -> -x` and `-I` whenever the image stays
//! inside a larger box. The box grows until the partition of the seed forms
//! stops changing.

#![allow(dead_code)]

use std::collections::HashMap;

pub type Cubic = [i64; 4];

pub fn disc(f: &Cubic) -> i128 {
    let [a, b, c, d] = f.map(|x| x as i128);
    b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d
}

fn isqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// All forms with `|coeff| <= k` and discriminant `dd`.
pub fn box_forms(dd: i64, k: i64) -> Vec<Cubic> {
    let dd = dd as i128;
    let mut out = Vec::new();
    for a in -k..=k {
        for b in -k..=k {
            for c in -k..=k {
                let (a1, b1, c1) = (a as i128, b as i128, c as i128);
                let qa = -27 * a1 * a1;
                let qb = 18 * a1 * b1 * c1 - 4 * b1 * b1 * b1;
                let qc = b1 * b1 * c1 * c1 - 4 * a1 * c1 * c1 * c1 - dd;
                let mut ds = Vec::new();
                if qa == 0 {
                    if qb != 0 && qc % qb == 0 {
                        ds.push(-qc / qb);
                    }
                } else if let Some(s) = isqrt(qb * qb - 4 * qa * qc) {
                    for num in [-qb + s, -qb - s] {
                        if num % (2 * qa) == 0 {
                            ds.push(num / (2 * qa));
                        }
                    }
                }
                ds.dedup();
                for d in ds {
                    if d.abs() <= k as i128 {
                        let f = [a, b, c, d as i64];
                        debug_assert_eq!(disc(&f), dd);
                        out.push(f);
                    }
                }
            }
        }
    }
    out
}

pub fn neighbours(f: &Cubic) -> [Cubic; 5] {
    let [a, b, c, d] = *f;
    [
        [d, -c, b, -a],
        [a, 3 * a + b, 3 * a + 2 * b + c, a + b + c + d],
        [a, b - 3 * a, 3 * a - 2 * b + c, -a + b - c + d],
        [-a, b, -c, d],
        [-a, -b, -c, -d],
    ]
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Partition of the seed forms (`|coeff| <= k0`) using connections inside `|coeff| <= k1`.
pub fn seed_partition(dd: i64, k0: i64, k1: i64) -> Vec<Vec<Cubic>> {
    let forms = box_forms(dd, k1);
    let index: HashMap<Cubic, usize> = forms.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut parent: Vec<usize> = (0..forms.len()).collect();
    for (i, f) in forms.iter().enumerate() {
        for g in neighbours(f) {
            if let Some(&j) = index.get(&g) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut comps: HashMap<usize, Vec<Cubic>> = HashMap::new();
    for (i, f) in forms.iter().enumerate() {
        if f.iter().all(|x| x.abs() <= k0) {
            let r = find(&mut parent, i);
            comps.entry(r).or_default().push(*f);
        }
    }
    let mut out: Vec<Vec<Cubic>> = comps.into_values().collect();
    for c in &mut out {
        c.sort();
    }
    out.sort();
    out
}

/// Grows the outer box until two successive partitions of the seeds agree.
pub fn oracle_classes(dd: i64, k0: i64) -> Vec<Vec<Cubic>> {
    let mut k1 = k0 + 2;
    let mut prev = seed_partition(dd, k0, k1);
    loop {
        k1 += 3;
        let next = seed_partition(dd, k0, k1);
        if next == prev {
            return next;
        }
        prev = next;
    }
}
