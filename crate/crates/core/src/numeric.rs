//! Floating-point root finding used only to propose candidate matrices.
//!
//! Nothing here decides a count. Every matrix proposed from these roots is
//! checked with exact integer arithmetic by the caller.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::forms::{BinaryForm, UnimodularMatrix};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
    pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }

    pub fn abs(self) -> f64 {
        libm::hypot(self.re, self.im)
    }

    pub fn sqrt(self) -> C64 {
        let r = self.abs();
        let re = libm::sqrt((r + self.re) / 2.0);
        let im = libm::sqrt(((r - self.re) / 2.0).max(0.0));
        C64::new(re, if self.im < 0.0 { -im } else { im })
    }
}

impl Add for C64 {
    type Output = C64;
    fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for C64 {
    type Output = C64;
    fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for C64 {
    type Output = C64;
    fn mul(self, o: C64) -> C64 {
        C64::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
}

impl Div for C64 {
    type Output = C64;
    fn div(self, o: C64) -> C64 {
        let d = o.re * o.re + o.im * o.im;
        C64::new((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)
    }
}

impl Neg for C64 {
    type Output = C64;
    fn neg(self) -> C64 {
        C64::new(-self.re, -self.im)
    }
}

fn horner(c: &[f64], z: C64) -> C64 {
    let mut acc = C64::ZERO;
    for &x in c {
        acc = acc * z + C64::new(x, 0.0);
    }
    acc
}

/// Roots of `c[0] z^n + ... + c[n]` with `c[0] != 0`, by the Aberth iteration.
pub fn poly_roots(c: &[f64]) -> Vec<C64> {
    let n = c.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = c[0];
    let monic: Vec<f64> = c.iter().map(|x| x / lead).collect();
    let deriv: Vec<f64> = monic[..n].iter().enumerate().map(|(i, x)| x * (n - i) as f64).collect();
    let radius = 1.0 + monic[1..].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let t = 0.4 + 2.0 * core::f64::consts::PI * k as f64 / n as f64;
            C64::new(radius * 0.7 * libm::cos(t), radius * 0.7 * libm::sin(t))
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let p = horner(&monic, z[i]);
            let dp = horner(&deriv, z[i]);
            if p.abs() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = C64::ZERO;
            for j in 0..n {
                if j != i {
                    s = s + C64::ONE / (z[i] - z[j]);
                }
            }
            let w = ratio / (C64::ONE - ratio * s);
            z[i] = z[i] - w;
            moved = moved.max(w.abs());
        }
        if moved < 1e-15 * radius {
            break;
        }
    }
    z
}

/// Point of the complex projective line as a homogeneous pair.
#[derive(Clone, Copy, Debug)]
pub struct PPoint(pub C64, pub C64);

/// Roots of a binary form on the projective line; `[1 : 0]` is the point at infinity.
pub fn projective_roots(f: &BinaryForm) -> Vec<PPoint> {
    let c: Vec<f64> = f.coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
    let lead_zeros = f.coeffs().iter().take_while(|x| x.is_zero()).count();
    let mut out: Vec<PPoint> = vec![PPoint(C64::ONE, C64::ZERO); lead_zeros];
    for r in poly_roots(&c[lead_zeros..]) {
        out.push(PPoint(r, C64::ONE));
    }
    out
}

type M2 = [[C64; 2]; 2];

fn det2(m: &M2) -> C64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

fn mul2(a: &M2, b: &M2) -> M2 {
    let mut out = [[C64::ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn inv2(m: &M2) -> M2 {
    let d = det2(m);
    [[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]]
}

/// Matrix sending `(1,0)`, `(0,1)`, `(1,1)` to multiples of `u[0]`, `u[1]`, `u[2]`.
fn frame(u: [PPoint; 3]) -> M2 {
    // solve l u0 + m u1 = u2
    let m: M2 = [[u[0].0, u[1].0], [u[0].1, u[1].1]];
    let inv = inv2(&m);
    let l = inv[0][0] * u[2].0 + inv[0][1] * u[2].1;
    let mu = inv[1][0] * u[2].0 + inv[1][1] * u[2].1;
    [[u[0].0 * l, u[1].0 * mu], [u[0].1 * l, u[1].1 * mu]]
}

fn round_entry(z: C64, tol: f64) -> Option<i64> {
    let r = libm::round(z.re);
    if (z.re - r).abs() < tol && z.im.abs() < tol && r.abs() < 1e15 {
        Some(r as i64)
    } else {
        None
    }
}

/// Integral unimodular matrices `M` (up to sign) with `M(src[i]) = dst[i]` for
/// `i < 3`, as far as floating point can tell.
pub fn mobius_candidates(src: [PPoint; 3], dst: [PPoint; 3]) -> Vec<UnimodularMatrix> {
    let a = frame(src);
    let b = frame(dst);
    if det2(&a).abs() < 1e-12 || det2(&b).abs() < 1e-12 {
        return Vec::new();
    }
    let m = mul2(&b, &inv2(&a));
    let d = det2(&m);
    let mut out = Vec::new();
    for target in [C64::ONE, -C64::ONE] {
        // scale so that det = target
        let s = (d / target).sqrt();
        let scaled = [[m[0][0] / s, m[0][1] / s], [m[1][0] / s, m[1][1] / s]];
        let scale = scaled.iter().flatten().fold(1.0f64, |x, e| x.max(e.abs()));
        let tol = 1e-6 * scale;
        let ent: Option<Vec<i64>> = scaled.iter().flatten().map(|&e| round_entry(e, tol)).collect();
        if let Some(e) = ent {
            if let Ok(u) = UnimodularMatrix::new(
                BigInt::from(e[0]),
                BigInt::from(e[1]),
                BigInt::from(e[2]),
                BigInt::from(e[3]),
            ) {
                out.push(u);
            }
        }
    }
    out
}

/// Candidate matrices `M` with `f . M` proportional to `g`, for two forms of the
/// same degree (at least 3) without repeated roots: `M` sends the roots of `g`
/// to the roots of `f`.
pub fn root_matching_candidates(f: &BinaryForm, g: &BinaryForm) -> Vec<UnimodularMatrix> {
    let rf = projective_roots(f);
    let rg = projective_roots(g);
    let n = rf.len();
    if n < 3 || rg.len() != n {
        return Vec::new();
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                for m in mobius_candidates([rg[0], rg[1], rg[2]], [rf[i], rf[j], rf[k]]) {
                    out.push(m);
                }
            }
        }
    }
    out
}
