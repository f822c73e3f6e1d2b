//! Counting subrings of cubic rings: closed forms in `q`, `d0`, `d`, `t`, the
//! generating series `F / ((1 - Z)(1 - q Z^3))`, and a sublattice oracle that
//! checks closure directly from structure constants.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forms::SplittingType;

/// Rank-3 commutative ring given by `e_i e_j = sum_k table[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicRing {
    pub table: [[[i64; 3]; 3]; 3],
}

type V3 = [i64; 3];

impl CubicRing {
    /// `Z[x] / (x^3 + a x^2 + b x + c)` in the basis `1, x, x^2`.
    pub fn monogenic(a: i64, b: i64, c: i64) -> Self {
        // x^3 = -a x^2 - b x - c and x^4 = -a x^3 - b x^2 - c x
        let x3 = [-c, -b, -a];
        let x4 = [-a * x3[0], -a * x3[1] - c, -a * x3[2] - b];
        let mut table = [[[0; 3]; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                table[i][j] = match i + j {
                    n @ 0..=2 => {
                        let mut v = [0; 3];
                        v[n] = 1;
                        v
                    }
                    3 => x3,
                    _ => x4,
                };
            }
        }
        CubicRing { table }
    }

    /// `Z^3` with coordinatewise product.
    pub fn split() -> Self {
        let mut table = [[[0; 3]; 3]; 3];
        for i in 0..3 {
            table[i][i][i] = 1;
        }
        CubicRing { table }
    }

    pub fn mul(&self, u: &V3, v: &V3) -> V3 {
        let mut out = [0i64; 3];
        for i in 0..3 {
            for j in 0..3 {
                let uv = u[i] * v[j];
                if uv != 0 {
                    for k in 0..3 {
                        out[k] += uv * self.table[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Trace of multiplication by `v`.
    pub fn trace(&self, v: &V3) -> i64 {
        (0..3).map(|i| v[i] * (0..3).map(|k| self.table[i][k][k]).sum::<i64>()).sum()
    }

    fn basis(i: usize) -> V3 {
        let mut v = [0; 3];
        v[i] = 1;
        v
    }

    /// The identity element, if the ring is unital.
    pub fn identity(&self) -> Option<V3> {
        // hand-built tables have identities with tiny entries
        let solve = |u: &V3| (0..3).all(|j| self.mul(u, &Self::basis(j)) == Self::basis(j));
        for a in -3..=3 {
            for b in -3..=3 {
                for c in -3..=3 {
                    if solve(&[a, b, c]) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }

    pub fn discriminant(&self) -> i64 {
        let t: Vec<Vec<i64>> =
            (0..3).map(|i| (0..3).map(|j| self.trace(&self.mul(&Self::basis(i), &Self::basis(j)))).collect()).collect();
        t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) - t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0])
            + t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0])
    }

    /// Commutative, associative, unital and with nonzero discriminant.
    pub fn validate(&self) -> Result<V3> {
        let b = Self::basis;
        for i in 0..3 {
            for j in 0..3 {
                if self.mul(&b(i), &b(j)) != self.mul(&b(j), &b(i)) {
                    return Err(Error::NotARing(format!("e{i} e{j} != e{j} e{i}")));
                }
                for k in 0..3 {
                    let left = self.mul(&self.mul(&b(i), &b(j)), &b(k));
                    let right = self.mul(&b(i), &self.mul(&b(j), &b(k)));
                    if left != right {
                        return Err(Error::NotARing(format!("(e{i} e{j}) e{k} != e{i} (e{j} e{k})")));
                    }
                }
            }
        }
        let one = self.identity().ok_or_else(|| Error::NotARing("no identity".into()))?;
        if self.discriminant() == 0 {
            return Err(Error::NotARing("degenerate trace form".into()));
        }
        Ok(one)
    }
}

/// Lattice spanned by the rows of an upper triangular Hermite normal form.
struct Hnf([[i64; 3]; 3]);

impl Hnf {
    fn contains(&self, w: &V3) -> bool {
        let m = &self.0;
        let mut w = *w;
        for i in 0..3 {
            if w[i] % m[i][i] != 0 {
                return false;
            }
            let c = w[i] / m[i][i];
            for j in i..3 {
                w[j] -= c * m[i][j];
            }
        }
        true
    }
}

/// Subrings of index `p^k` containing 1 whose elements all have trace
/// divisible by `p^t`.
pub fn subring_oracle(ring: &CubicRing, p: i64, k: u32, t: u32) -> Result<u64> {
    let one = ring.validate()?;
    if p < 2 || !(2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) {
        return Err(Error::BadParams(format!("{p} is not prime")));
    }
    let pt = p.pow(t);
    let mut count = 0;
    for a in 0..=k {
        for b in 0..=k - a {
            let c = k - a - b;
            let (da, db, dc) = (p.pow(a), p.pow(b), p.pow(c));
            for x in 0..db {
                for y in 0..dc {
                    for z in 0..dc {
                        let h = Hnf([[da, x, y], [0, db, z], [0, 0, dc]]);
                        if !h.contains(&one) {
                            continue;
                        }
                        let rows = h.0;
                        if rows.iter().any(|r| ring.trace(r) % pt != 0) {
                            continue;
                        }
                        let closed =
                            (0..3).all(|i| (i..3).all(|j| h.contains(&ring.mul(&rows[i], &rows[j]))));
                        if closed {
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(count)
}

/// Inputs to [`traced_subring_count`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubringParams {
    pub sigma: SplittingType,
    /// Valuation of the discriminant of the maximal order.
    pub d0: u32,
    pub d: u32,
    pub t: u32,
    pub q: u64,
    pub e: u32,
}

fn geometric(q: u64, lo: u32, hi: u32) -> u64 {
    // (q^hi - q^lo) / (q - 1)
    (lo..hi).map(|j| q.pow(j)).sum()
}

fn g_13(d0: u32, d: u32, t: u32, q: u64) -> u64 {
    let (d0, d, t) = (d0 as i64, d as i64, t as i64);
    let r = if d < 3 * t {
        0
    } else if d <= 6 * t - d0 {
        d / 3 - t + 1
    } else {
        (d - d0).div_euclid(6) + 1
    };
    geometric(q, 0, r as u32)
}

fn g_3(d: u32, t: u32, q: u64) -> u64 {
    let (d, t) = (d as i64, t as i64);
    let r = if d < 3 * t {
        0
    } else if d <= 6 * t {
        d / 3 - t + 1
    } else {
        d / 2 - 2 * ((d + 5) / 6) + 1
    };
    geometric(q, 0, r as u32)
}

fn g_sr(d0: u32, d: u32, t: u32, q: u64) -> u64 {
    let s = d as i64 - d0 as i64 - 2;
    let r = if s < 0 { 0 } else { s / 6 + 1 };
    geometric(q, t, (r as u32).max(t))
}

/// Number of orders of discriminant `m^d` with trace ideal in `m^t` in a cubic
/// algebra of splitting type `sigma` whose maximal order has discriminant
/// `m^d0`.
pub fn traced_subring_count(params: SubringParams) -> Result<u64> {
    let SubringParams { sigma, d0, d, t, q, e } = params;
    let expected_d0 = match sigma {
        SplittingType::T111 | SplittingType::T12 | SplittingType::T3 => Some(d0 == 0),
        SplittingType::T1_21 => Some(d0 >= 1),
        SplittingType::T1_3 => Some(d0 >= 2),
        SplittingType::Zero => None,
    };
    if expected_d0 != Some(true) || d < d0 || (d - d0) % 2 != 0 || t > e || q < 2 {
        return Err(Error::BadParams(format!("{params:?}")));
    }
    if matches!(sigma, SplittingType::T1_21) && d0 > 1 && t > 0 {
        return Err(Error::BadParams(format!("traced count for 1^2 1 with d0 = {d0} is not covered")));
    }
    Ok(match sigma {
        SplittingType::T1_3 => g_13(d0, d, t, q),
        SplittingType::T1_21 => g_13(d0, d, t, q) + g_sr(d0, d, t, q),
        SplittingType::T3 => g_3(d, t, q),
        SplittingType::T12 => g_3(d, t, q) + g_sr(0, d, t, q),
        SplittingType::T111 => g_3(d, t, q) + 3 * g_sr(0, d, t, q),
        SplittingType::Zero => unreachable!(),
    })
}

/// Numerator `F` of the subring zeta function, lowest degree first.
pub fn zeta_numerator(sigma: SplittingType) -> Result<Vec<i64>> {
    Ok(match sigma {
        SplittingType::T111 => vec![1, 2, 1],
        SplittingType::T12 => vec![1, 0, 1],
        SplittingType::T3 => vec![1, -1, 1],
        SplittingType::T1_21 => vec![1, 1],
        SplittingType::T1_3 => vec![1],
        SplittingType::Zero => return Err(Error::BadParams("splitting type 0 is not a cubic algebra".into())),
    })
}

/// First `terms` coefficients of `F / ((1 - Z)(1 - q Z^3))`; the coefficient
/// of `Z^n` counts subrings of index `q^n`.
pub fn subring_series(sigma: SplittingType, q: u64, terms: usize) -> Result<Vec<u64>> {
    let f = zeta_numerator(sigma)?;
    let q = q as i128;
    // divide by (1 - Z) then by (1 - q Z^3)
    let mut a: Vec<i128> = (0..terms).map(|n| f.get(n).copied().unwrap_or(0) as i128).collect();
    for n in 1..terms {
        a[n] += a[n - 1];
    }
    for n in 3..terms {
        a[n] += q * a[n - 3];
    }
    a.into_iter().map(|x| u64::try_from(x).map_err(|_| Error::BadParams("negative coefficient".into()))).collect()
}

/// Same series from the closed forms at `t = 0`: coefficient `n` is
/// `g(d0 + 2 n)`.
pub fn traced_series(sigma: SplittingType, d0: u32, q: u64, t: u32, e: u32, terms: usize) -> Result<Vec<u64>> {
    (0..terms as u32).map(|n| traced_subring_count(SubringParams { sigma, d0, d: d0 + 2 * n, t, q, e })).collect()
}

/// Fixture ring of splitting type `sigma` at `p` in {2, 3, 5}, maximal at `p`,
/// with `d0 = v_p(disc)`.
///
/// | type | p = 2 | p = 3 | p = 5 |
/// |------|-------|-------|-------|
/// | 111  | `Z^3` | `Z^3` | `Z^3` |
/// | 12   | `x (x^2 + x + 1)` | `x (x^2 - x - 1)` | `x (x^2 - x + 1)` |
/// | 3    | `x^3 - x - 1` | `x^3 - x - 1` | `x^3 + x + 1` |
/// | 1^2 1 | `x (x^2 + 1)` | `x (x^2 + x + 1)` | `x (x^2 - x - 1)` |
/// | 1^3  | `x^3 - 2` | `x^3 - 3` | `x^3 - 5` |
///
/// The quadratic factors have constant term `+-1`, so `Z[x]/(x h)` is all of
/// `Z x Z[x]/(h)`. The `1^3` rings are Eisenstein at `p`.
pub fn fixture(sigma: SplittingType, p: i64) -> Option<(CubicRing, u32)> {
    use SplittingType::*;
    let (coeffs, d0) = match (sigma, p) {
        (T111, 2 | 3 | 5) => return Some((CubicRing::split(), 0)),
        (T12, 2) => ([1, 1, 0], 0),
        (T12, 3) => ([-1, -1, 0], 0),
        (T12, 5) => ([-1, 1, 0], 0),
        (T3, 2 | 3) => ([0, -1, -1], 0),
        (T3, 5) => ([0, 1, 1], 0),
        (T1_21, 2) => ([0, 1, 0], 2),
        (T1_21, 3) => ([1, 1, 0], 1),
        (T1_21, 5) => ([-1, -1, 0], 1),
        (T1_3, 2 | 3 | 5) => ([0, 0, -p], if p == 3 { 5 } else { 2 }),
        _ => return None,
    };
    Some((CubicRing::monogenic(coeffs[0], coeffs[1], coeffs[2]), d0))
}
