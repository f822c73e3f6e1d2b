//! Binary quartics with a prescribed cubic resolvent.
//!
//! A quartic `(a, b, c, d, e)` has resolvent
//! `y^3 - c y^2 + (bd - 4ae) y + (4ace - b^2 e - a d^2)`, and its invariants
//! `I = 12ae - 3bd + c^2`, `J = 72ace + 9bcd - 27ad^2 - 27b^2e - 2c^3` agree
//! with the shift invariants `g_2^2 - 3 g_1` and `2 g_2^3 - 9 g_2 g_1 + 27 g_0`
//! of the resolvent `y^3 + g_2 y^2 + g_1 y + g_0`. Two monic cubics are shifts
//! of each other exactly when they share `(I, J)` and `g_2 mod 3`.
//!
//! Classes are found by a search over `(a, b, c)` that solves for `d` and `e`
//! from `(I, J)`. The box comes from Hermite's covariant (see
//! [`search_bounds`]) and contains a member of every class. Classes for the
//! congruence subgroups are obtained by pushing each `GL_2(Z)`-class through
//! coset representatives. Equivalences and stabilizers are proposed from
//! floating-point roots ([`crate::numeric`]) and accepted only after an exact
//! check.
//!
//! Class weights are `1 / |Stab|` with the stabilizer taken modulo `-I`, as in
//! `PGL_2(Z)`. [`stabilizer_order`] reports the full count in `GL_2(Z)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::forms::{big, cubic_disc, BinaryForm, UnimodularMatrix, WeightedCount};
use crate::numeric::{poly_roots, root_matching_candidates};

/// `y^3 + g2 y^2 + g1 y + g0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonicCubic {
    pub g2: BigInt,
    pub g1: BigInt,
    pub g0: BigInt,
}

impl MonicCubic {
    pub fn new(g2: BigInt, g1: BigInt, g0: BigInt) -> Self {
        MonicCubic { g2, g1, g0 }
    }

    pub fn from_i64(g2: i64, g1: i64, g0: i64) -> Self {
        Self::new(big(g2), big(g1), big(g0))
    }

    pub fn disc(&self) -> BigInt {
        cubic_disc(&BigInt::one(), &self.g2, &self.g1, &self.g0)
    }

    /// Shift invariants `(g2^2 - 3 g1, 2 g2^3 - 9 g2 g1 + 27 g0)`.
    pub fn ij(&self) -> (BigInt, BigInt) {
        let (a, b, c) = (&self.g2, &self.g1, &self.g0);
        (a * a - big(3) * b, big(2) * a * a * a - big(9) * a * b + big(27) * c)
    }

    /// `g(y + t)`.
    pub fn shift(&self, t: &BigInt) -> MonicCubic {
        let (a, b, c) = (&self.g2, &self.g1, &self.g0);
        MonicCubic {
            g2: a + big(3) * t,
            g1: b + big(2) * a * t + big(3) * t * t,
            g0: c + b * t + a * t * t + t * t * t,
        }
    }

    /// `t` with `self(y + t) = other(y)`, if any.
    pub fn shift_to(&self, other: &MonicCubic) -> Option<BigInt> {
        let diff = &other.g2 - &self.g2;
        if !diff.is_multiple_of(&big(3)) {
            return None;
        }
        let t = diff / big(3);
        (self.shift(&t) == *other).then_some(t)
    }

    /// `64 g(y / 4)`.
    pub fn scaled_by_four(&self) -> MonicCubic {
        MonicCubic { g2: big(4) * &self.g2, g1: big(16) * &self.g1, g0: big(64) * &self.g0 }
    }

    pub fn as_form(&self) -> BinaryForm {
        BinaryForm::raw(vec![BigInt::one(), self.g2.clone(), self.g1.clone(), self.g0.clone()])
    }
}

impl fmt::Display for MonicCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^3 + ({})y^2 + ({})y + ({})", self.g2, self.g1, self.g0)
    }
}

/// Cubic resolvent `y^3 - c y^2 + (bd - 4ae) y + (4ace - b^2 e - a d^2)`.
pub fn quartic_resolvent(f: &BinaryForm) -> Result<MonicCubic> {
    if f.degree() != 4 {
        return Err(Error::BadDegree(f.degree()));
    }
    let k = f.coeffs();
    let (a, b, c, d, e) = (&k[0], &k[1], &k[2], &k[3], &k[4]);
    Ok(MonicCubic {
        g2: -c,
        g1: b * d - big(4) * a * e,
        g0: big(4) * a * c * e - b * b * e - a * d * d,
    })
}

/// `(I, J)` shared by all quartics whose resolvent is a shift of `g`.
pub fn invariants_ij(g: &MonicCubic) -> Result<(BigInt, BigInt)> {
    if g.disc().is_zero() {
        return Err(Error::SingularResolvent);
    }
    Ok(g.ij())
}

/// Real behaviour of a nondegenerate quartic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SignClass {
    FourReal,
    TwoReal,
    PosDef,
    NegDef,
}

impl SignClass {
    pub fn label(self) -> &'static str {
        match self {
            SignClass::FourReal => "four_real",
            SignClass::TwoReal => "two_real",
            SignClass::PosDef => "pos_def",
            SignClass::NegDef => "neg_def",
        }
    }
}

/// Filter on [`SignClass`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignCondition {
    Any,
    /// Has a real root (two or four).
    Indefinite,
    PosDef,
    NegDef,
    FourRealRoots,
    Definite,
    IndefOrPosDef,
    IndefOrNegDef,
}

impl SignCondition {
    pub fn accepts(self, s: SignClass) -> bool {
        use SignClass::*;
        match self {
            SignCondition::Any => true,
            SignCondition::Indefinite => matches!(s, FourReal | TwoReal),
            SignCondition::PosDef => s == PosDef,
            SignCondition::NegDef => s == NegDef,
            SignCondition::FourRealRoots => s == FourReal,
            SignCondition::Definite => matches!(s, PosDef | NegDef),
            SignCondition::IndefOrPosDef => s != NegDef,
            SignCondition::IndefOrNegDef => s != PosDef,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "any" => SignCondition::Any,
            "indef" | "indefinite" => SignCondition::Indefinite,
            "posdef" | "pos_def" => SignCondition::PosDef,
            "negdef" | "neg_def" => SignCondition::NegDef,
            "fourreal" | "four_real" => SignCondition::FourRealRoots,
            "def" | "definite" => SignCondition::Definite,
            _ => return None,
        })
    }
}

/// Real-root behaviour, decided exactly.
pub fn sign_class(f: &BinaryForm) -> Result<SignClass> {
    if f.degree() != 4 {
        return Err(Error::BadDegree(f.degree()));
    }
    let disc = f.disc();
    if disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    if disc.is_negative() {
        return Ok(SignClass::TwoReal);
    }
    let k = f.coeffs();
    let (a, b, c, d, e) = (&k[0], &k[1], &k[2], &k[3], &k[4]);
    if a.is_zero() {
        // infinity is a real root, so all four roots are real
        return Ok(SignClass::FourReal);
    }
    let p = big(8) * a * c - big(3) * b * b;
    let r = big(64) * a * a * a * e - big(16) * a * a * c * c + big(16) * a * b * b * c
        - big(16) * a * a * b * d
        - big(3) * b * b * b * b;
    if p.is_negative() && r.is_negative() {
        Ok(SignClass::FourReal)
    } else if a.is_positive() {
        Ok(SignClass::PosDef)
    } else {
        Ok(SignClass::NegDef)
    }
}

/// Every `g` with `f . g = h` (exact), found through root matching.
pub fn equivalences(f: &BinaryForm, h: &BinaryForm) -> Vec<UnimodularMatrix> {
    let mut out: Vec<UnimodularMatrix> = Vec::new();
    for m in root_matching_candidates(f, h) {
        for cand in [m.clone(), m.neg()] {
            if !out.contains(&cand) && f.act(&cand) == *h {
                out.push(cand);
            }
        }
    }
    out.sort();
    out
}

/// Order of the stabilizer of a nondegenerate quartic in `GL_2(Z)`.
///
/// `-I` always fixes a quartic, so the order is twice the order of the
/// stabilizer in `PGL_2(Z)`.
pub fn stabilizer_order(f: &BinaryForm) -> Result<u64> {
    if f.degree() != 4 {
        return Err(Error::BadDegree(f.degree()));
    }
    if f.disc().is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    Ok(equivalences(f, f).len() as u64)
}

/// Order of the stabilizer in `PGL_2(Z)`: half of [`stabilizer_order`].
pub fn pgl_stabilizer_order(f: &BinaryForm) -> Result<u64> {
    Ok(stabilizer_order(f)? / 2)
}

// ---------------------------------------------------------------------------
// Certified search.
//
// Hermite's covariant `Q_f = sum_j |x - α_j y|^2 / |f'(α_j)|` is a positive
// definite real quadratic with `Q_{f.γ} = Q_f . γ`. By AM-GM,
// `|f(v)| <= sqrt|D| Q_f(v)^2 / 16`, and `det Q_f = 2 (|r1 - r2| + |r1 - r3|
// + |r2 - r3|) / sqrt|D|` where the `r_i` are the roots of the resolvent.
// Every class has a member with `Q_f = A x^2 + B xy + C y^2` reduced. If that
// member has `a != 0`, then `1 <= |a| <= sqrt|D| A^2 / 16` bounds `A` on both
// sides, hence `C`, hence `f(1, t)` for small `t`, hence `b` and `c` by
// interpolation. If `a = 0` the class has a rational root; moving it to
// infinity gives `b^2 | D` and a translation puts `c` in a window of width
// `3|b|`.

/// Coefficient bounds that contain a member of every `GL_2(Z)`-class of
/// quartics with a given resolvent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Forms with `a != 0`: `|a| <= a_max`, `|b| <= b_max`, `|c| <= c_max`.
    pub a_max: i128,
    pub b_max: i128,
    pub c_max: i128,
    /// Forms with `a = 0`: `|b| <= rational_b_max`.
    pub rational_b_max: i128,
}

pub fn search_bounds(g: &MonicCubic) -> Result<SearchBounds> {
    let disc = g.disc();
    if disc.is_zero() {
        return Err(Error::SingularResolvent);
    }
    let coeffs = [1.0, g.g2.to_f64().unwrap(), g.g1.to_f64().unwrap(), g.g0.to_f64().unwrap()];
    let r = poly_roots(&coeffs);
    let abs_d = disc.abs().to_f64().unwrap();
    let sd = libm::sqrt(abs_d);
    let spread = (r[0] - r[1]).abs() + (r[0] - r[2]).abs() + (r[1] - r[2]).abs();
    let slack = 1.0 + 1e-6;
    let delta = 2.0 * spread / sd * slack;
    let a_bound = sd * delta / 12.0 * slack;
    let (mut a_max, mut b_max, mut c_max) = (0, 0, 0);
    let a_hi = libm::sqrt(4.0 * delta / 3.0) * slack;
    let a_lo = 4.0 / libm::sqrt(sd) / slack;
    if a_bound >= 1.0 && a_lo <= a_hi {
        let c_hi = (delta / a_lo + a_lo / 4.0).max(delta / a_hi + a_hi / 4.0) * slack;
        let val = |t: f64| {
            let q = a_hi * (1.0 + t) + c_hi * t * t;
            sd * q * q / 16.0 * slack
        };
        let (v0, v1, v2) = (val(0.0), val(1.0), val(2.0));
        a_max = a_bound as i128;
        b_max = ((2.0 * v2 + 16.0 * v1) / 12.0) as i128 + 1;
        c_max = ((2.0 * v2 + 32.0 * v1 + 30.0 * v0) / 24.0) as i128 + 1;
    }
    Ok(SearchBounds { a_max, b_max, c_max, rational_b_max: sd as i128 + 1 })
}

fn isqrt_i128(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let mut r = libm::sqrt(n as f64) as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// Quartics with `a != 0`, invariants `(i, j)` and `c = c_res (mod 3)` in the box.
fn search_box(i: i128, j: i128, c_res: i128, bounds: &SearchBounds) -> Vec<[i128; 5]> {
    let mut out = Vec::new();
    for a in -bounds.a_max..=bounds.a_max {
        if a == 0 {
            continue;
        }
        for b in -bounds.b_max..=bounds.b_max {
            let mut c = -bounds.c_max + (c_res + bounds.c_max).rem_euclid(3);
            while c <= bounds.c_max {
                let k = 72 * a * c - 27 * b * b;
                let qa = -324 * a * a;
                let qb = 3 * b * k + 108 * a * b * c;
                let qc = k * (i - c * c) - 24 * a * c * c * c - 12 * a * j;
                if let Some(s) = isqrt_i128(qb * qb - 4 * qa * qc) {
                    let nums: &[i128] = if s == 0 { &[-qb] } else { &[-qb + s, -qb - s] };
                    for &num in nums {
                        if num % (2 * qa) != 0 {
                            continue;
                        }
                        let d = num / (2 * qa);
                        let e_num = i - c * c + 3 * b * d;
                        if e_num % (12 * a) == 0 {
                            out.push([a, b, c, d, e_num / (12 * a)]);
                        }
                    }
                }
                c += 3;
            }
        }
    }
    out
}

/// Quartics `(0, b, c, d, e)` with invariants `(i, j)`, `b^2 | disc`, and `c` in
/// a window of width `3|b|`.
fn search_rational(i: i128, j: i128, c_res: i128, disc: &BigInt, b_max: i128) -> Vec<[i128; 5]> {
    let mut out = Vec::new();
    for b_abs in 1..=b_max {
        if !disc.is_multiple_of(&BigInt::from(b_abs * b_abs)) {
            continue;
        }
        for b in [-b_abs, b_abs] {
            let lo = -(3 * b_abs) / 2 - 1;
            let mut c = lo + (c_res - lo).rem_euclid(3);
            while c <= (3 * b_abs) / 2 + 1 {
                let d_num = c * c - i;
                if d_num % (3 * b) == 0 {
                    let d = d_num / (3 * b);
                    let e_num = 9 * b * c * d - 2 * c * c * c - j;
                    if e_num % (27 * b * b) == 0 {
                        out.push([0, b, c, d, e_num / (27 * b * b)]);
                    }
                }
                c += 3;
            }
        }
    }
    out
}

fn to_form(v: &[i128; 5]) -> BinaryForm {
    BinaryForm::raw(v.iter().map(|&x| BigInt::from(x)).collect())
}

/// One class of quartics: representative, stabilizer order in the group
/// modulo `±I`, and sign class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticClass {
    pub rep: BinaryForm,
    pub stab: u64,
    pub sign: SignClass,
}

/// The group used to identify forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// All of `GL_2(Z)`.
    Full,
    /// Matrices with even upper-right entry (these preserve supereven forms).
    EvenUpper,
    /// Matrices with even lower-left entry.
    EvenLower,
    /// Even-lower matrices together with the twist
    /// `(A, B, C, D, E) -> (4E, 2D, C, B/2, A/4)` on scaled `(1,2,1,1,1/4)`-forms.
    TwistedEvenLower,
}

fn allowed(eq: Equivalence, g: &UnimodularMatrix) -> bool {
    match eq {
        Equivalence::Full => true,
        Equivalence::EvenUpper => g.q.is_even(),
        Equivalence::EvenLower | Equivalence::TwistedEvenLower => g.r.is_even(),
    }
}

/// Left coset representatives of the unimodular part of `eq` in `GL_2(Z)`.
pub fn coset_reps(eq: Equivalence) -> Vec<UnimodularMatrix> {
    let mut reps: Vec<UnimodularMatrix> = Vec::new();
    for m in UnimodularMatrix::all_bounded(1) {
        let inv = m.inverse();
        if reps.iter().all(|r| !allowed(eq, &inv.mul(r))) {
            reps.push(m);
        }
    }
    reps
}

/// `(A, B, C, D, E) -> (4E, 2D, C, B/2, A/4)`, the action of `[[0, 1], [2, 0]]`
/// on scaled `(1,2,1,1,1/4)`-forms.
pub fn twist(s: &BinaryForm) -> Option<BinaryForm> {
    let k = s.coeffs();
    let half = k[1].clone().div_rem(&big(2));
    let quarter = k[0].clone().div_rem(&big(4));
    if !half.1.is_zero() || !quarter.1.is_zero() {
        return None;
    }
    Some(BinaryForm::raw(vec![big(4) * &k[4], big(2) * &k[3], k[2].clone(), half.0, quarter.0]))
}

fn group_images(eq: Equivalence, f: &BinaryForm) -> Vec<BinaryForm> {
    let mut v = vec![f.clone()];
    if eq == Equivalence::TwistedEvenLower {
        if let Some(t) = twist(f) {
            v.push(t);
        }
    }
    v
}

fn count_maps(eq: Equivalence, from: &BinaryForm, to: &BinaryForm) -> usize {
    group_images(eq, from)
        .iter()
        .map(|src| equivalences(src, to).iter().filter(|g| allowed(eq, g)).count())
        .sum()
}

/// Whether some element of the group `eq` carries `from` to `to`.
pub fn equivalent_under(eq: Equivalence, from: &BinaryForm, to: &BinaryForm) -> bool {
    group_images(eq, from).iter().any(|src| {
        root_matching_candidates(src, to).into_iter().any(|m| {
            [m.clone(), m.neg()].iter().any(|g| allowed(eq, g) && src.act(g) == *to)
        })
    })
}

/// Splits forms into classes under `eq`; each representative is the least
/// form of its class among those given.
pub fn group_into_classes(forms: &[BinaryForm], eq: Equivalence) -> Result<Vec<QuarticClass>> {
    let mut sorted: Vec<BinaryForm> = forms.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut reps: Vec<BinaryForm> = Vec::new();
    for f in sorted {
        if !reps.iter().any(|r| equivalent_under(eq, r, &f)) {
            reps.push(f);
        }
    }
    reps.into_iter()
        .map(|rep| {
            let stab = (count_maps(eq, &rep, &rep) / 2) as u64;
            let sign = sign_class(&rep)?;
            Ok(QuarticClass { rep, stab, sign })
        })
        .collect()
}

/// Which quartics are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuarticKind {
    /// Integral quartics up to `GL_2(Z)`.
    Integral,
    /// Supereven quartics (`4 | b, c, e`, `8 | d`) with resolvent a shift of
    /// `64 g(y/4)` by a multiple of 4, up to matrices with even upper-right entry.
    Supereven,
    /// Same forms as `Supereven`, up to matrices with even lower-left entry.
    SuperevenLower,
    /// Scaled `(1,2,1,1,1/4)`-forms `4 f` (`4 | A`, `8 | B`, `4 | C`, `4 | D`)
    /// up to the group generated by even-lower matrices and the twist.
    Form1211,
}

fn family_for(kind: QuarticKind) -> ([i64; 5], Equivalence) {
    match kind {
        QuarticKind::Integral => ([1, 1, 1, 1, 1], Equivalence::Full),
        QuarticKind::Supereven => ([1, 4, 4, 8, 4], Equivalence::EvenUpper),
        QuarticKind::SuperevenLower => ([1, 4, 4, 8, 4], Equivalence::EvenLower),
        QuarticKind::Form1211 => ([4, 8, 4, 4, 1], Equivalence::TwistedEvenLower),
    }
}

/// Target resolvent and the allowed shift step for a kind.
fn target_for(kind: QuarticKind, g: &MonicCubic) -> (MonicCubic, i64) {
    match kind {
        QuarticKind::Integral => (g.clone(), 1),
        _ => (g.scaled_by_four(), 4),
    }
}

fn resolvent_matches(f: &BinaryForm, target: &MonicCubic, step: i64) -> bool {
    match quartic_resolvent(f).ok().and_then(|r| target.shift_to(&r)) {
        Some(t) => t.is_multiple_of(&big(step)),
        None => false,
    }
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or_else(|| Error::BadInput(alloc::format!("coefficient {x} too large")))
}

/// Representatives of the `GL_2(Z)`-classes of integral quartics whose
/// resolvent is a shift of `g`.
pub fn gl2_classes(g: &MonicCubic) -> Result<Vec<QuarticClass>> {
    let bounds = search_bounds(g)?;
    let (i, j) = g.ij();
    let (i, j) = (to_i128(&i)?, to_i128(&j)?);
    let c_res = to_i128(&(-&g.g2).mod_floor(&big(3)))?;
    let mut raw = search_box(i, j, c_res, &bounds);
    raw.extend(search_rational(i, j, c_res, &g.disc(), bounds.rational_b_max));
    let forms: Vec<BinaryForm> =
        raw.iter().map(to_form).filter(|f| resolvent_matches(f, g, 1)).collect();
    group_into_classes(&forms, Equivalence::Full)
}

/// Classes of the given kind whose resolvent lies in the shift class of `g`.
pub fn classes(g: &MonicCubic, kind: QuarticKind) -> Result<Vec<QuarticClass>> {
    let (target, step) = target_for(kind, g);
    let full = gl2_classes(&target)?;
    if kind == QuarticKind::Integral {
        return Ok(full);
    }
    let (divisors, eq) = family_for(kind);
    let cosets = coset_reps(eq);
    let mut members = Vec::new();
    for cls in &full {
        for m in &cosets {
            let h = cls.rep.act(m);
            let fits = h.coeffs().iter().zip(divisors).all(|(x, d)| x.is_multiple_of(&big(d)));
            if fits && resolvent_matches(&h, &target, step) {
                members.push(h);
            }
        }
    }
    group_into_classes(&members, eq)
}

fn weighted_total(cls: &[QuarticClass], cond: SignCondition) -> WeightedCount {
    let mut w = WeightedCount::zero();
    for c in cls.iter().filter(|c| cond.accepts(c.sign)) {
        w.add_class(1, c.stab);
    }
    w
}

/// `sum 1/|Stab|` over classes passing `cond`.
pub fn weighted(cls: &[QuarticClass], cond: SignCondition) -> WeightedCount {
    weighted_total(cls, cond)
}

/// `h^cond(g)`: integral quartics with resolvent in the shift class of `g`.
pub fn count_quartics(g: &MonicCubic, cond: SignCondition) -> Result<WeightedCount> {
    Ok(weighted(&classes(g, QuarticKind::Integral)?, cond))
}

/// `h_4^cond(g)`: `(1,2,1,1,1/4)`-forms with resolvent in the shift class of `g`.
pub fn count_1211q(g: &MonicCubic, cond: SignCondition) -> Result<WeightedCount> {
    Ok(weighted(&classes(g, QuarticKind::Form1211)?, cond))
}

/// Number of integral symmetric 3x3 matrices with characteristic polynomial `g`.
///
/// The sum of squares of all entries equals `g2^2 - 2 g1`, which bounds the search.
pub fn count_symmetric_matrices(g: &MonicCubic) -> u64 {
    symmetric_matrices(g).len() as u64
}

/// The matrices counted by [`count_symmetric_matrices`], as `[d1, d2, d3, x12, x13, x23]`.
pub fn symmetric_matrices(g: &MonicCubic) -> Vec<[i64; 6]> {
    let (Some(g2), Some(g1), Some(g0)) = (g.g2.to_i64(), g.g1.to_i64(), g.g0.to_i64()) else {
        return Vec::new();
    };
    let budget = g2 * g2 - 2 * g1;
    let mut out = Vec::new();
    if budget < 0 {
        return out;
    }
    let r = libm::sqrt(budget as f64) as i64 + 1;
    let tr = -g2;
    for d1 in -r..=r {
        for d2 in -r..=r {
            let d3 = tr - d1 - d2;
            let diag = d1 * d1 + d2 * d2 + d3 * d3;
            if diag > budget {
                continue;
            }
            let rest = budget - diag;
            if rest % 2 != 0 {
                continue;
            }
            let off = rest / 2; // x^2 + y^2 + z^2
            let m = libm::sqrt(off as f64) as i64 + 1;
            for x in -m..=m {
                for y in -m..=m {
                    let z2 = off - x * x - y * y;
                    if z2 < 0 {
                        continue;
                    }
                    let Some(z) = isqrt_i128(z2 as i128) else { continue };
                    let z = z as i64;
                    for zz in if z == 0 { vec![0] } else { vec![z, -z] } {
                        let minors = d1 * d2 - x * x + d1 * d3 - y * y + d2 * d3 - zz * zz;
                        let det = d1 * (d2 * d3 - zz * zz) - x * (x * d3 - zz * y) + y * (x * zz - d2 * y);
                        if minors == g1 && det == -g0 {
                            out.push([d1, d2, d3, x, y, zz]);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Which statement an identity in a [`BqReport`] comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentitySource {
    /// Relations between `h`, `h_4` and `s`, and the indefinite-majority inequality.
    Theorem,
    /// Relations between `h` and the supereven count `h_2` of `64 g(y/4)`.
    Supereven,
}

/// One evaluated identity `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: &'static str,
    pub source: IdentitySource,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Identity checks of the quartic reflection theorem for one resolvent.
#[derive(Clone, Debug)]
pub struct BqReport {
    pub g: MonicCubic,
    pub disc: BigInt,
    /// Set when `disc g` is even, so the 2-adic hypothesis is not verified.
    pub warn_two_adic: bool,
    pub h: WeightedCount,
    pub h4: WeightedCount,
    pub h2: WeightedCount,
    /// `(sign, h, h_4, h_2)` for each sign class.
    pub by_sign: Vec<(SignClass, WeightedCount, WeightedCount, WeightedCount)>,
    pub s: u64,
    pub identities: Vec<Identity>,
    pub classes: Vec<QuarticClass>,
    pub classes_1211: Vec<QuarticClass>,
    pub classes_supereven: Vec<QuarticClass>,
}

impl BqReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(Identity::holds)
    }

    pub fn passed_source(&self, source: IdentitySource) -> bool {
        self.identities.iter().filter(|i| i.source == source).all(Identity::holds)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.identities.iter().filter(|i| !i.holds()).map(|i| i.name).collect()
    }
}

/// Evaluates the quartic reflection identities, the indefinite-majority
/// inequality and the supereven identities for `g`.
pub fn check_bq(g: &MonicCubic) -> Result<BqReport> {
    use IdentitySource::{Supereven, Theorem};
    use SignCondition::*;
    let disc = g.disc();
    if disc.is_zero() {
        return Err(Error::SingularResolvent);
    }
    let cls = classes(g, QuarticKind::Integral)?;
    let cls4 = classes(g, QuarticKind::Form1211)?;
    let cls2 = classes(g, QuarticKind::Supereven)?;
    let w = |c: &[QuarticClass], s| weighted(c, s).value().clone();
    let h = weighted(&cls, Any);
    let h4 = weighted(&cls4, Any);
    let h2 = weighted(&cls2, Any);
    let s = count_symmetric_matrices(g);
    let int = |n: i64| BigRational::from_integer(big(n));
    let mut ids = Vec::new();
    let mut push = |name, source, lhs, rhs| ids.push(Identity { name, source, lhs, rhs });
    push("h2 = 2 h4", Supereven, h2.value().clone(), int(2) * h4.value());
    if disc.is_negative() {
        push("2 h = h4", Theorem, int(2) * h.value(), h4.value().clone());
        push("4 h = h2", Supereven, int(4) * h.value(), h2.value().clone());
    } else {
        push("h = 2 h4^indef", Theorem, h.value().clone(), int(2) * w(&cls4, Indefinite));
        push("h^(indef|pos) = h4^(indef|pos)", Theorem, w(&cls, IndefOrPosDef), w(&cls4, IndefOrPosDef));
        push("h^(indef|neg) = h4^(indef|neg)", Theorem, w(&cls, IndefOrNegDef), w(&cls4, IndefOrNegDef));
        let diff = w(&cls, Indefinite) - w(&cls, Definite);
        push("24 (h^indef - h^def) = s", Theorem, int(24) * &diff, BigRational::from_integer(BigInt::from(s)));
        // at least half indefinite, with equality exactly when s = 0
        let ineq_ok = !diff.is_negative() && (diff.is_zero() == (s == 0));
        push("h^indef >= h^def, equality iff s = 0", Theorem, int(ineq_ok as i64), BigRational::one());
        push("2 h = h2^indef", Supereven, int(2) * h.value(), w(&cls2, Indefinite));
        push(
            "4 h^(indef|pos) = h2^(indef|pos)",
            Supereven,
            int(4) * w(&cls, IndefOrPosDef),
            w(&cls2, IndefOrPosDef),
        );
        push(
            "4 h^(indef|neg) = h2^(indef|neg)",
            Supereven,
            int(4) * w(&cls, IndefOrNegDef),
            w(&cls2, IndefOrNegDef),
        );
    }
    let mut by_sign = Vec::new();
    for sc in [SignClass::FourReal, SignClass::TwoReal, SignClass::PosDef, SignClass::NegDef] {
        let pick = |c: &[QuarticClass]| {
            let mut acc = WeightedCount::zero();
            for x in c.iter().filter(|x| x.sign == sc) {
                acc.add_class(1, x.stab);
            }
            acc
        };
        by_sign.push((sc, pick(&cls), pick(&cls4), pick(&cls2)));
    }
    Ok(BqReport {
        g: g.clone(),
        warn_two_adic: disc.is_even(),
        disc,
        h,
        h4,
        h2,
        by_sign,
        s,
        identities: ids,
        classes: cls,
        classes_1211: cls4,
        classes_supereven: cls2,
    })
}
