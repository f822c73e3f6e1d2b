//! Finite Fourier analysis on `F_p^n` with a level filtration.
//!
//! `H = F_p^n` carries the symmetric pairing `<x, y> = sum_j x_j y_(n-1-j)`
//! and levels `L_i` spanned by the trailing `k + f (e - i)` coordinates, where
//! `q = p^f` and `h0 = p^k`. Then `|H| = q^e h0^2`, `|L_i| = q^(e-i) h0` and
//! `L_i^perp = L_(e-i)`.
//!
//! The transform is `f^(b) = (1 / h0) sum_a zeta^<a, b> f(a)` with values in
//! `Q(zeta_p)`, held exactly by [`Cyclo`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An element of `Q(zeta_p)` as `sum c_j zeta^j`, `0 <= j < p`, normalized so
/// that the coefficient of `zeta^(p-1)` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclo {
    p: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    pub fn zero(p: u32) -> Self {
        Cyclo { p, coeffs: vec![BigRational::zero(); p as usize] }
    }

    pub fn rational(p: u32, r: BigRational) -> Self {
        let mut c = Cyclo::zero(p);
        c.coeffs[0] = r;
        c.normalize()
    }

    pub fn int(p: u32, n: i64) -> Self {
        Cyclo::rational(p, BigRational::from_integer(BigInt::from(n)))
    }

    /// `zeta^k`.
    pub fn root(p: u32, k: u64) -> Self {
        let mut c = Cyclo::zero(p);
        c.coeffs[(k % p as u64) as usize] = BigRational::one();
        c.normalize()
    }

    fn normalize(mut self) -> Self {
        // 1 + zeta + ... + zeta^(p-1) = 0
        let top = self.coeffs[self.p as usize - 1].clone();
        if !top.is_zero() {
            for c in self.coeffs.iter_mut() {
                *c -= &top;
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The value as a rational, if it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| self.coeffs[0].clone())
    }

    pub fn add(&self, other: &Cyclo) -> Cyclo {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Cyclo { p: self.p, coeffs }.normalize()
    }

    pub fn scale(&self, r: &BigRational) -> Cyclo {
        Cyclo { p: self.p, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn mul(&self, other: &Cyclo) -> Cyclo {
        let p = self.p as usize;
        let mut out = vec![BigRational::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out[(i + j) % p] += a * b;
            }
        }
        Cyclo { p: self.p, coeffs: out }.normalize()
    }

    /// Complex conjugate, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Cyclo {
        let p = self.p as usize;
        let mut out = vec![BigRational::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[(p - i) % p] += a;
        }
        Cyclo { p: self.p, coeffs: out }.normalize()
    }
}

/// `F_p^n` with the anti-diagonal pairing and the level chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredGroup {
    pub p: u32,
    pub f_deg: u32,
    pub e: u32,
    pub h0: u64,
    pub dims: usize,
    /// Gram matrix of the pairing over `F_p`.
    pub pairing: Vec<Vec<u32>>,
    /// `level_dims[i] = dim L_i` for `0 <= i <= e`.
    pub level_dims: Vec<usize>,
}

/// Dense table of values indexed by the base-`p` encoding of vectors
/// (coordinate `j` is digit `j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelFunction {
    pub values: Vec<Cyclo>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Builds the model with `|H| = q^e h0^2`. `h0` must be a power of `p`.
pub fn make_filtered_group(p: u32, f_deg: u32, e: u32, h0: u64) -> Result<FilteredGroup> {
    if !is_prime(p) || f_deg == 0 {
        return Err(Error::BadParams(format!("p = {p}, f = {f_deg}")));
    }
    let mut k = 0usize;
    let mut rest = h0;
    while rest > 1 && rest % p as u64 == 0 {
        rest /= p as u64;
        k += 1;
    }
    if rest != 1 {
        return Err(Error::InconsistentSizes(format!("h0 = {h0} is not a power of {p}")));
    }
    let f = f_deg as usize;
    let n = f * e as usize + 2 * k;
    if n > 12 || (p as u64).pow(n as u32) > 1 << 16 {
        return Err(Error::InconsistentSizes(format!("|H| = {p}^{n} is too large for a dense table")));
    }
    let mut pairing = vec![vec![0u32; n]; n];
    for (j, row) in pairing.iter_mut().enumerate() {
        row[n - 1 - j] = 1;
    }
    let level_dims = (0..=e as usize).map(|i| k + f * (e as usize - i)).collect();
    let g = FilteredGroup { p, f_deg, e, h0, dims: n, pairing, level_dims };
    g.validate()?;
    Ok(g)
}

impl FilteredGroup {
    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.dims as u32)
    }

    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.f_deg)
    }

    pub fn vector(&self, mut idx: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.dims];
        for c in v.iter_mut() {
            *c = (idx % self.p as usize) as u32;
            idx /= self.p as usize;
        }
        v
    }

    pub fn index(&self, v: &[u32]) -> usize {
        v.iter().rev().fold(0, |acc, &c| acc * self.p as usize + (c % self.p) as usize)
    }

    pub fn pair(&self, a: &[u32], b: &[u32]) -> u64 {
        let p = self.p as u64;
        let mut s = 0u64;
        for i in 0..self.dims {
            for j in 0..self.dims {
                s += a[i] as u64 * self.pairing[i][j] as u64 * b[j] as u64 % p;
            }
        }
        s % p
    }

    /// Membership in `L_i`; `i = -1` is the whole group and `i > e` is zero.
    pub fn in_level(&self, v: &[u32], i: i64) -> bool {
        let d = if i < 0 {
            self.dims
        } else if i as u32 > self.e {
            0
        } else {
            self.level_dims[i as usize]
        };
        v[..self.dims - d].iter().all(|&c| c == 0)
    }

    /// Characteristic function of `L_i`.
    pub fn indicator(&self, i: i64) -> LevelFunction {
        let values =
            (0..self.order()).map(|x| Cyclo::int(self.p, self.in_level(&self.vector(x), i) as i64)).collect();
        LevelFunction { values }
    }

    /// `|H| / h0^2`, the constant in `f^^ = c f(-x)` and in Parseval.
    pub fn involution_constant(&self) -> BigRational {
        BigRational::new(BigInt::from(self.order()), BigInt::from(self.h0) * BigInt::from(self.h0))
    }

    fn rank(&self) -> usize {
        let p = self.p as u64;
        let mut m: Vec<Vec<u64>> = self.pairing.iter().map(|r| r.iter().map(|&x| x as u64 % p).collect()).collect();
        let mut rank = 0;
        for col in 0..self.dims {
            let Some(piv) = (rank..self.dims).find(|&r| m[r][col] != 0) else { continue };
            m.swap(rank, piv);
            let inv = (1..p).find(|x| x * m[rank][col] % p == 1).unwrap();
            for r in 0..self.dims {
                if r != rank && m[r][col] != 0 {
                    let factor = m[r][col] * inv % p;
                    for c in 0..self.dims {
                        m[r][c] = (m[r][c] + p * p - factor * m[rank][c] % p) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Checks nondegeneracy, the level sizes and `L_i^perp = L_(e-i)` by
    /// direct enumeration.
    pub fn validate(&self) -> Result<()> {
        if self.rank() != self.dims {
            return Err(Error::InconsistentSizes("degenerate pairing".into()));
        }
        let expect = self.q().pow(self.e) as u128 * self.h0 as u128 * self.h0 as u128;
        if self.order() as u128 != expect {
            return Err(Error::InconsistentSizes(format!("|H| = {} but q^e h0^2 = {expect}", self.order())));
        }
        let vecs: Vec<Vec<u32>> = (0..self.order()).map(|x| self.vector(x)).collect();
        for i in 0..=self.e as i64 {
            let members: Vec<&Vec<u32>> = vecs.iter().filter(|v| self.in_level(v, i)).collect();
            let size = self.q().pow(self.e - i as u32) * self.h0;
            if members.len() as u64 != size {
                return Err(Error::InconsistentSizes(format!("|L_{i}| = {} != {size}", members.len())));
            }
            for y in &vecs {
                let orthogonal = members.iter().all(|x| self.pair(x, y) == 0);
                if orthogonal != self.in_level(y, self.e as i64 - i) {
                    return Err(Error::InconsistentSizes(format!("L_{i} perp differs from L_{}", self.e as i64 - i)));
                }
            }
        }
        Ok(())
    }

    pub fn constant(&self, c: Cyclo) -> LevelFunction {
        LevelFunction { values: vec![c; self.order()] }
    }

    pub fn delta(&self) -> LevelFunction {
        let mut f = self.constant(Cyclo::zero(self.p));
        f.values[0] = Cyclo::int(self.p, 1);
        f
    }

    /// `x -> f(-x)`.
    pub fn reflect(&self, f: &LevelFunction) -> LevelFunction {
        let values = (0..self.order())
            .map(|x| {
                let neg: Vec<u32> = self.vector(x).iter().map(|&c| (self.p - c) % self.p).collect();
                f.values[self.index(&neg)].clone()
            })
            .collect();
        LevelFunction { values }
    }

    /// `sum_x f(x) conj(f(x))`.
    pub fn norm_squared(&self, f: &LevelFunction) -> Cyclo {
        f.values.iter().fold(Cyclo::zero(self.p), |acc, v| acc.add(&v.mul(&v.conj())))
    }
}

/// `f^(b) = (1 / h0) sum_a zeta^<a, b> f(a)`.
pub fn fourier(f: &LevelFunction, g: &FilteredGroup) -> Result<LevelFunction> {
    if f.values.len() != g.order() {
        return Err(Error::InconsistentSizes(format!("table has {} entries, group has {}", f.values.len(), g.order())));
    }
    let vecs: Vec<Vec<u32>> = (0..g.order()).map(|x| g.vector(x)).collect();
    let scale = BigRational::new(BigInt::one(), BigInt::from(g.h0));
    let values = vecs
        .iter()
        .map(|b| {
            let mut acc = Cyclo::zero(g.p);
            for (a, fa) in vecs.iter().zip(&f.values) {
                if !fa.is_zero() {
                    acc = acc.add(&fa.mul(&Cyclo::root(g.p, g.pair(a, b))));
                }
            }
            acc.scale(&scale)
        })
        .collect();
    Ok(LevelFunction { values })
}
