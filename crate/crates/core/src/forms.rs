//! Binary forms, unimodular matrices, invariants and splitting types.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub(crate) fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Homogeneous integral form `sum_i c_i x^(n-i) y^i` of degree 2, 3 or 4.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<BigInt>,
}

impl PartialOrd for BinaryForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BinaryForm {
    /// Degree first, then lexicographic on coefficients from `a` down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl BinaryForm {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        let n = coeffs.len();
        if !(3..=5).contains(&n) {
            return Err(Error::BadDegree(n.saturating_sub(1)));
        }
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::ZeroForm);
        }
        Ok(BinaryForm { coeffs })
    }

    /// Panics on an invalid coefficient list; intended for literals.
    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| big(v)).collect()).expect("valid form literal")
    }

    /// Builds a form without the nonzero check (used for intermediate values).
    pub(crate) fn raw(coeffs: Vec<BigInt>) -> Self {
        BinaryForm { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn neg(&self) -> Self {
        BinaryForm::raw(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        BinaryForm::raw(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Evaluates `f(x, y)`.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let n = self.degree();
        let mut xp = vec![BigInt::one(); n + 1];
        let mut yp = vec![BigInt::one(); n + 1];
        for i in 1..=n {
            xp[i] = &xp[i - 1] * x;
            yp[i] = &yp[i - 1] * y;
        }
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &xp[n - i] * &yp[i];
        }
        acc
    }

    /// `f(p x + q y, r x + s y)`.
    pub fn act(&self, m: &UnimodularMatrix) -> BinaryForm {
        let n = self.degree();
        let lx = [m.p.clone(), m.q.clone()];
        let ly = [m.r.clone(), m.s.clone()];
        let xpow = powers(&lx, n);
        let ypow = powers(&ly, n);
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = mul_poly(&xpow[n - i], &ypow[i]);
            for (k, t) in term.iter().enumerate() {
                out[k] += c * t;
            }
        }
        BinaryForm::raw(out)
    }

    /// Discriminant for degrees 2, 3 and 4.
    pub fn disc(&self) -> BigInt {
        let c = &self.coeffs;
        match self.degree() {
            2 => &c[1] * &c[1] - big(4) * &c[0] * &c[2],
            3 => cubic_disc(&c[0], &c[1], &c[2], &c[3]),
            4 => quartic_disc(&c[0], &c[1], &c[2], &c[3], &c[4]),
            _ => unreachable!(),
        }
    }

    /// `a (b^2 - 4 a c)` for a quadratic `a x^2 + b x + c`.
    pub fn superdiscriminant(&self) -> Result<BigInt> {
        if self.degree() != 2 {
            return Err(Error::BadDegree(self.degree()));
        }
        Ok(&self.coeffs[0] * self.disc())
    }

    /// Hessian covariant `(b^2 - 3ac, bc - 9ad, c^2 - 3bd)` of a cubic.
    pub fn hessian(&self) -> Result<[BigInt; 3]> {
        if self.degree() != 3 {
            return Err(Error::BadDegree(self.degree()));
        }
        let [a, b, c, d] = [&self.coeffs[0], &self.coeffs[1], &self.coeffs[2], &self.coeffs[3]];
        Ok([
            b * b - big(3) * a * c,
            b * c - big(9) * a * d,
            c * c - big(3) * b * d,
        ])
    }

    /// Whether the form is the zero form.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn mul_poly(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Powers `l^0 .. l^n` of a linear form `l = u x + v y`, as coefficient vectors.
fn powers(l: &[BigInt; 2], n: usize) -> Vec<Vec<BigInt>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(vec![BigInt::one()]);
    for k in 1..=n {
        let next = mul_poly(&out[k - 1], l);
        out.push(next);
    }
    out
}

pub fn cubic_disc(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> BigInt {
    b * b * c * c - big(4) * a * c * c * c - big(4) * b * b * b * d - big(27) * a * a * d * d
        + big(18) * a * b * c * d
}

pub fn quartic_disc(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, e: &BigInt) -> BigInt {
    let t = |k: i64, f: &[&BigInt]| -> BigInt {
        let mut acc = big(k);
        for x in f {
            acc *= *x;
        }
        acc
    };
    t(1, &[b, b, c, c, d, d]) - t(4, &[a, c, c, c, d, d]) - t(4, &[b, b, b, d, d, d])
        + t(18, &[a, b, c, d, d, d])
        - t(27, &[a, a, d, d, d, d])
        + t(256, &[a, a, a, e, e, e])
        - t(4, &[b, b, c, c, c, e])
        + t(16, &[a, c, c, c, c, e])
        + t(18, &[b, b, b, c, d, e])
        - t(80, &[a, b, c, c, d, e])
        - t(6, &[a, b, b, d, d, e])
        + t(144, &[a, a, c, d, d, e])
        - t(27, &[b, b, b, b, e, e])
        + t(144, &[a, b, b, c, e, e])
        - t(128, &[a, a, c, c, e, e])
        - t(192, &[a, a, b, d, e, e])
}

/// 2x2 integer matrix `[[p, q], [r, s]]` with determinant +1 or -1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnimodularMatrix {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
    pub s: BigInt,
}

impl UnimodularMatrix {
    pub fn new(p: BigInt, q: BigInt, r: BigInt, s: BigInt) -> Result<Self> {
        let m = UnimodularMatrix { p, q, r, s };
        let d = m.det();
        if d.is_one() || (-d).is_one() {
            Ok(m)
        } else {
            Err(Error::NotUnimodular)
        }
    }

    /// Panics if the determinant is not a unit; intended for literals.
    pub fn from_i64(p: i64, q: i64, r: i64, s: i64) -> Self {
        Self::new(big(p), big(q), big(r), big(s)).expect("unimodular literal")
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1)
    }

    /// `[[1, t], [0, 1]]`, which shifts roots by `-t`.
    pub fn translation(t: &BigInt) -> Self {
        UnimodularMatrix { p: BigInt::one(), q: t.clone(), r: BigInt::zero(), s: BigInt::one() }
    }

    /// `[[0, -1], [1, 0]]`, which sends a root `z` to `-1/z`.
    pub fn s_matrix() -> Self {
        Self::from_i64(0, -1, 1, 0)
    }

    pub fn det(&self) -> BigInt {
        &self.p * &self.s - &self.q * &self.r
    }

    pub fn mul(&self, o: &UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix {
            p: &self.p * &o.p + &self.q * &o.r,
            q: &self.p * &o.q + &self.q * &o.s,
            r: &self.r * &o.p + &self.s * &o.r,
            s: &self.r * &o.q + &self.s * &o.s,
        }
    }

    pub fn inverse(&self) -> UnimodularMatrix {
        let d = self.det();
        UnimodularMatrix {
            p: &self.s * &d,
            q: -&self.q * &d,
            r: -&self.r * &d,
            s: &self.p * &d,
        }
    }

    pub fn neg(&self) -> UnimodularMatrix {
        UnimodularMatrix { p: -&self.p, q: -&self.q, r: -&self.r, s: -&self.s }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.p, &self.q, &self.r, &self.s]
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries().iter().map(|e| e.abs()).max().unwrap()
    }

    /// Every matrix with entries in `[-bound, bound]` and determinant +-1.
    pub fn all_bounded(bound: i64) -> Vec<UnimodularMatrix> {
        let mut out = Vec::new();
        for p in -bound..=bound {
            for q in -bound..=bound {
                for r in -bound..=bound {
                    for s in -bound..=bound {
                        let d = p * s - q * r;
                        if d == 1 || d == -1 {
                            out.push(Self::from_i64(p, q, r, s));
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.p, self.q, self.r, self.s)
    }
}

/// Exact nonnegative rational accumulating `sum w / |Stab|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedCount {
    value: BigRational,
}

impl Default for WeightedCount {
    fn default() -> Self {
        Self::zero()
    }
}

impl WeightedCount {
    pub fn zero() -> Self {
        WeightedCount { value: BigRational::zero() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        WeightedCount { value: BigRational::new(big(n), big(d)) }
    }

    pub fn from_rational(value: BigRational) -> Self {
        WeightedCount { value }
    }

    /// Adds `weight / stab`.
    pub fn add_class(&mut self, weight: u64, stab: u64) {
        self.value += BigRational::new(BigInt::from(weight), BigInt::from(stab));
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn numer(&self) -> &BigInt {
        self.value.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.value.denom()
    }
}

impl core::ops::Add for WeightedCount {
    type Output = WeightedCount;
    fn add(self, o: WeightedCount) -> WeightedCount {
        WeightedCount { value: self.value + o.value }
    }
}

impl fmt::Display for WeightedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.denom().is_one() {
            write!(f, "{}", self.value.numer())
        } else {
            write!(f, "{}/{}", self.value.numer(), self.value.denom())
        }
    }
}

/// Factorization shape of a binary cubic modulo a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplittingType {
    /// Three distinct linear factors.
    T111,
    /// A linear factor times an irreducible quadratic.
    T12,
    /// Irreducible.
    T3,
    /// A double linear factor times a simple one.
    T1_21,
    /// A triple linear factor.
    T1_3,
    /// The form vanishes identically.
    Zero,
}

impl SplittingType {
    pub const ALL_NONZERO: [SplittingType; 5] = [
        SplittingType::T111,
        SplittingType::T12,
        SplittingType::T3,
        SplittingType::T1_21,
        SplittingType::T1_3,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SplittingType::T111 => "111",
            SplittingType::T12 => "12",
            SplittingType::T3 => "3",
            SplittingType::T1_21 => "1^21",
            SplittingType::T1_3 => "1^3",
            SplittingType::Zero => "0",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "111" => SplittingType::T111,
            "12" => SplittingType::T12,
            "3" => SplittingType::T3,
            "1^21" | "1²1" | "121" | "1_21" => SplittingType::T1_21,
            "1^3" | "1³" | "13" | "1_3" => SplittingType::T1_3,
            "0" => SplittingType::Zero,
            _ => return None,
        })
    }

    /// Number of distinct points of P^1(F_p) where a cubic of this type vanishes.
    pub fn root_count(self, p: u64) -> u64 {
        match self {
            SplittingType::T111 => 3,
            SplittingType::T12 => 1,
            SplittingType::T3 => 0,
            SplittingType::T1_21 => 2,
            SplittingType::T1_3 => 1,
            SplittingType::Zero => p + 1,
        }
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn mod_p(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Multiplicities of the roots of `f mod p` on P^1(F_p), or `None` if `f` vanishes.
pub fn roots_mod_p(f: &BinaryForm, p: u64) -> Option<Vec<u32>> {
    let mut c: Vec<u64> = f.coeffs().iter().map(|x| mod_p(x, p)).collect();
    if c.iter().all(|&x| x == 0) {
        return None;
    }
    let mut mults = Vec::new();
    // The point at infinity: y divides f as many times as leading coefficients vanish.
    let inf = c.iter().take_while(|&&x| x == 0).count();
    if inf > 0 {
        mults.push(inf as u32);
        c.drain(..inf);
    }
    // c is now a polynomial in x (highest degree first) with nonzero lead.
    for r in 0..p {
        let mut m = 0;
        loop {
            if c.len() <= 1 {
                break;
            }
            let (quot, rem) = synthetic_div(&c, r, p);
            if rem != 0 {
                break;
            }
            c = quot;
            m += 1;
        }
        if m > 0 {
            mults.push(m);
        }
    }
    mults.push(0);
    // trailing marker carries the degree of the leftover irreducible part
    let last = mults.len() - 1;
    mults[last] = (c.len() - 1) as u32;
    Some(mults)
}

fn synthetic_div(c: &[u64], r: u64, p: u64) -> (Vec<u64>, u64) {
    let mut out = Vec::with_capacity(c.len() - 1);
    let mut acc = 0u64;
    for (i, &x) in c.iter().enumerate() {
        acc = ((acc as u128 * r as u128 + x as u128) % p as u128) as u64;
        if i + 1 < c.len() {
            out.push(acc);
        }
    }
    (out, acc)
}

/// Splitting type of a binary cubic modulo the prime `p`.
pub fn splitting_type(f: &BinaryForm, p: u64) -> Result<SplittingType> {
    if f.degree() != 3 {
        return Err(Error::BadDegree(f.degree()));
    }
    let Some(mut mults) = roots_mod_p(f, p) else {
        return Ok(SplittingType::Zero);
    };
    let rest = mults.pop().unwrap();
    mults.sort_unstable();
    Ok(match (mults.as_slice(), rest) {
        ([1, 1, 1], 0) => SplittingType::T111,
        ([1], 2) => SplittingType::T12,
        ([], 3) => SplittingType::T3,
        ([1, 2], 0) => SplittingType::T1_21,
        ([3], 0) => SplittingType::T1_3,
        _ => unreachable!("impossible factorization shape"),
    })
}

/// Number of unimodular matrices fixing a cubic or quartic form: the
/// `GL_2(Z)` stabilizer for cubics, and for quartics the number of matrices
/// including `-I` (twice the `PGL_2(Z)` order).
pub fn stabilizer_order(f: &BinaryForm) -> Result<u64> {
    match f.degree() {
        3 => crate::cubic::stabilizer_order(f),
        4 => crate::quartic::stabilizer_order(f),
        d => Err(Error::BadDegree(d)),
    }
}

/// Exact integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}
