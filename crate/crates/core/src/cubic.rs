//! Binary cubic forms up to `GL_2(Z)`: canonical reduction, enumeration by
//! discriminant, stabilizers, weighted class numbers and the identities
//! relating them.
//!
//! Reduction depends on the sign of the discriminant.
//!
//! * `D > 0`: the Hessian `H = (b^2 - 3ac, bc - 9ad, c^2 - 3bd)` is a positive
//!   definite quadratic form of discriminant `-3D`. Reduce `H` to the unique
//!   `GL_2`-reduced form `0 <= B <= A <= C` and take the least coefficient
//!   vector over the automorphisms of that reduced Hessian.
//! * `D < 0`: one root `theta` is real and the other two are `z`, `conj(z)`.
//!   Move `z` (taken in the upper half plane) into the closed fundamental
//!   domain `|Re z| <= 1/2, |z| >= 1` and take the least coefficient vector
//!   among all forms in the class whose `z` lies in that closed domain. Every
//!   comparison involving `theta` is done exactly through the sign of `f` at a
//!   rational point.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::forms::{big, exact_sqrt, splitting_type, BinaryForm, SplittingType, UnimodularMatrix, WeightedCount};

/// Canonical class representative with its `GL_2(Z)` stabilizer order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CubicClass {
    pub rep: BinaryForm,
    pub stab: u64,
    pub disc: BigInt,
}

fn check_cubic(f: &BinaryForm) -> Result<BigInt> {
    if f.degree() != 3 {
        return Err(Error::BadDegree(f.degree()));
    }
    let d = f.disc();
    if d.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    Ok(d)
}

fn small_matrices() -> Vec<UnimodularMatrix> {
    UnimodularMatrix::all_bounded(1)
}

// ---------------------------------------------------------------------------
// Negative discriminant: exact position of the complex root.

/// `f` with `D < 0`, viewed through its roots `theta` (real) and `z`, `conj(z)`.
struct NegCubic<'a> {
    a: &'a BigInt,
    b: &'a BigInt,
    c: &'a BigInt,
    d: &'a BigInt,
    f: &'a BinaryForm,
}

impl<'a> NegCubic<'a> {
    fn new(f: &'a BinaryForm) -> Self {
        let k = f.coeffs();
        NegCubic { a: &k[0], b: &k[1], c: &k[2], d: &k[3], f }
    }

    /// `theta` compared with `num / den`, for `a != 0` and `den != 0`.
    fn cmp_theta(&self, num: &BigInt, den: &BigInt) -> Ordering {
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num.clone(), den.clone()) };
        // f(x, 1) = a (x - theta) Q(x) with Q > 0 on the reals.
        let v = self.f.eval(&num, &den);
        if v.is_zero() {
            return Ordering::Equal;
        }
        // sign(r - theta) = sign(f(r)) * sign(a)
        let r_minus_theta_pos = v.is_positive() == self.a.is_positive();
        if r_minus_theta_pos {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// `round(Re z) = floor(Re z + 1/2)`.
    fn round_re(&self) -> BigInt {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        if a.is_zero() {
            // z is a root of b x^2 + c x + d; Re z = -c / (2b)
            return floor_rat(&(-c + b), &(big(2) * b));
        }
        if d.is_zero() {
            // theta = 0; Re z = -b / (2a)
            return floor_rat(&(-b + a), &(big(2) * a));
        }
        // Re z + 1/2 >= k  iff  theta <= (a (1 - 2k) - b) / a
        let ok = |k: &BigInt| -> bool {
            let num = a * (BigInt::one() - big(2) * k) - b;
            self.cmp_theta(&num, a) != Ordering::Greater
        };
        let bound = b.abs() + c.abs() + d.abs() + big(2);
        let mut lo = -&bound;
        let mut hi = bound;
        debug_assert!(ok(&lo) && !ok(&hi));
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi).div_floor(&big(2));
            if ok(&mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// `|Re z| <= 1/2`.
    fn re_in_strip(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        if a.is_zero() {
            // |c / (2b)| <= 1/2
            return c.abs() <= b.abs();
        }
        if self.d.is_zero() {
            return b.abs() <= a.abs();
        }
        // -1 - b/a <= theta <= 1 - b/a
        let lo = -a - b;
        let hi = a - b;
        self.cmp_theta(&lo, a) != Ordering::Less && self.cmp_theta(&hi, a) != Ordering::Greater
    }

    /// `|z|^2` compared with 1.
    fn norm_cmp_one(&self) -> Ordering {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        if a.is_zero() {
            // |z|^2 = d / b
            return sign_cmp(&(d * b), &(b * b));
        }
        if d.is_zero() {
            // |z|^2 = c / a
            return sign_cmp(&(c * a), &(a * a));
        }
        // |z|^2 = |d / (a theta)|, so |z|^2 >= 1 iff |theta| <= |d / a|
        let m = d.abs();
        let den = a.abs();
        let above = self.cmp_theta(&m, &den);
        let below = self.cmp_theta(&-&m, &den);
        if above == Ordering::Greater || below == Ordering::Less {
            Ordering::Less
        } else if above == Ordering::Equal || below == Ordering::Equal {
            Ordering::Equal
        } else {
            Ordering::Greater
        }
    }

    fn in_closed_domain(&self) -> bool {
        self.re_in_strip() && self.norm_cmp_one() != Ordering::Less
    }
}

/// `floor(n / d)`.
fn floor_rat(n: &BigInt, d: &BigInt) -> BigInt {
    n.div_floor(d)
}

/// Compares `x / y` with 1 where `y > 0` is given as `y`.
fn sign_cmp(x: &BigInt, y: &BigInt) -> Ordering {
    x.cmp(y)
}

/// Whether the upper-half-plane root of a negative-discriminant cubic lies
/// in the closed fundamental domain.
pub fn is_reduced_negative(f: &BinaryForm) -> bool {
    NegCubic::new(f).in_closed_domain()
}

fn walk_negative(f: &BinaryForm) -> (BinaryForm, UnimodularMatrix) {
    let mut g = f.clone();
    let mut m = UnimodularMatrix::identity();
    let s = UnimodularMatrix::s_matrix();
    loop {
        let t = NegCubic::new(&g).round_re();
        if !t.is_zero() {
            let tr = UnimodularMatrix::translation(&t);
            g = g.act(&tr);
            m = m.mul(&tr);
        }
        if NegCubic::new(&g).norm_cmp_one() == Ordering::Less {
            g = g.act(&s);
            m = m.mul(&s);
        } else {
            break;
        }
    }
    debug_assert!(NegCubic::new(&g).in_closed_domain());
    (g, m)
}

fn canonical_negative(reduced: &BinaryForm) -> (BinaryForm, u64) {
    let mut best: Option<BinaryForm> = None;
    let mut stab = 0;
    for g in small_matrices() {
        let h = reduced.act(&g);
        if &h == reduced {
            stab += 1;
        }
        if NegCubic::new(&h).in_closed_domain() && best.as_ref().map_or(true, |b| &h < b) {
            best = Some(h);
        }
    }
    (best.expect("identity is a neighbour"), stab)
}

// ---------------------------------------------------------------------------
// Positive discriminant: reduction of the Hessian.

/// Reduces a positive definite `A x^2 + B xy + C y^2` to `0 <= B <= A <= C`,
/// returning the reduced form and `g` with `H . g` reduced.
pub fn reduce_definite(h: &[BigInt; 3]) -> ([BigInt; 3], UnimodularMatrix) {
    let (mut a, mut b, mut c) = (h[0].clone(), h[1].clone(), h[2].clone());
    let mut m = UnimodularMatrix::identity();
    assert!(a.is_positive() && c.is_positive(), "form must be positive definite");
    loop {
        // x -> x + t y gives B -> B + 2 A t; bring B into (-A, A].
        let two_a = big(2) * &a;
        let t = -((&b + &a - BigInt::one()).div_floor(&two_a));
        if !t.is_zero() {
            let nb = &b + &two_a * &t;
            c = &a * &t * &t + &b * &t + &c;
            b = nb;
            m = m.mul(&UnimodularMatrix::translation(&t));
        }
        if a > c {
            // (x, y) -> (-y, x): (A, B, C) -> (C, -B, A)
            core::mem::swap(&mut a, &mut c);
            b = -b;
            m = m.mul(&UnimodularMatrix::s_matrix());
        } else {
            break;
        }
    }
    if b.is_negative() {
        b = -b;
        m = m.mul(&UnimodularMatrix::from_i64(1, 0, 0, -1));
    }
    ([a, b, c], m)
}

fn hessian_form(h: &[BigInt; 3]) -> BinaryForm {
    BinaryForm::raw(h.to_vec())
}

fn automorphisms(h: &[BigInt; 3]) -> Vec<UnimodularMatrix> {
    let hf = hessian_form(h);
    small_matrices().into_iter().filter(|g| hf.act(g) == hf).collect()
}

fn canonical_positive(f_with_reduced_hessian: &BinaryForm, auts: &[UnimodularMatrix]) -> (BinaryForm, u64) {
    let mut best: Option<BinaryForm> = None;
    let mut stab = 0;
    for g in auts {
        let h = f_with_reduced_hessian.act(g);
        if &h == f_with_reduced_hessian {
            stab += 1;
        }
        if best.as_ref().map_or(true, |b| &h < b) {
            best = Some(h);
        }
    }
    (best.expect("identity is an automorphism"), stab)
}

// ---------------------------------------------------------------------------
// Public reduction API.

/// Canonical representative of the `GL_2(Z)` class of `f`, with the stabilizer order.
pub fn reduce_with_stabilizer(f: &BinaryForm) -> Result<(BinaryForm, u64)> {
    let d = check_cubic(f)?;
    if d.is_positive() {
        let h = f.hessian()?;
        let (hr, g) = reduce_definite(&h);
        let f0 = f.act(&g);
        debug_assert_eq!(f0.hessian().unwrap(), hr);
        Ok(canonical_positive(&f0, &automorphisms(&hr)))
    } else {
        let (g, _) = walk_negative(f);
        Ok(canonical_negative(&g))
    }
}

/// Canonical representative of the `GL_2(Z)` class of `f`.
///
/// For `D > 0` the representative has reduced Hessian and is the least
/// coefficient vector among such forms; for `D < 0` its complex root lies in
/// the closed fundamental domain and it is least among such forms.
pub fn reduce_cubic(f: &BinaryForm) -> Result<BinaryForm> {
    Ok(reduce_with_stabilizer(f)?.0)
}

/// Order of the stabilizer of `f` in `GL_2(Z)`. Always divides 6.
pub fn stabilizer_order(f: &BinaryForm) -> Result<u64> {
    Ok(reduce_with_stabilizer(f)?.1)
}

/// A matrix `g` with `f1 . g = f2`, if the forms are equivalent.
pub fn equivalence(f1: &BinaryForm, f2: &BinaryForm) -> Result<Option<UnimodularMatrix>> {
    let d1 = check_cubic(f1)?;
    if d1 != check_cubic(f2)? {
        return Ok(None);
    }
    let to_reduced = |f: &BinaryForm| -> UnimodularMatrix {
        if d1.is_positive() {
            reduce_definite(&f.hessian().unwrap()).1
        } else {
            walk_negative(f).1
        }
    };
    let g1 = to_reduced(f1);
    let g2 = to_reduced(f2);
    let r1 = f1.act(&g1);
    let r2 = f2.act(&g2);
    // r1 . a = r2 for a small a; then f1 . (g1 a g2^-1) = f2.
    for a in small_matrices() {
        if r1.act(&a) == r2 {
            let m = g1.mul(&a).mul(&g2.inverse());
            debug_assert_eq!(&f1.act(&m), f2);
            return Ok(Some(m));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Enumeration.

/// Every `GL_2(Z)` class of integral binary cubics of discriminant `disc`,
/// sorted by representative.
pub fn enumerate_cubics(disc: &BigInt) -> Result<Vec<CubicClass>> {
    if disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    let m4 = disc.mod_floor(&big(4));
    if !(m4.is_zero() || m4.is_one()) {
        return Ok(Vec::new());
    }
    let found = if disc.is_positive() { enumerate_positive(disc) } else { enumerate_negative(disc) };
    Ok(found
        .into_iter()
        .map(|(rep, stab)| CubicClass { rep, stab, disc: disc.clone() })
        .collect())
}

fn enumerate_positive(disc: &BigInt) -> BTreeMap<BinaryForm, u64> {
    let mut out = BTreeMap::new();
    let three_d = big(3) * disc;
    let mut big_a = BigInt::one();
    // 3 A^2 <= 4AC - B^2 = 3D
    while &big_a * &big_a <= *disc {
        let mut big_b = BigInt::zero();
        while big_b <= big_a {
            let num = &three_d + &big_b * &big_b;
            let four_a = big(4) * &big_a;
            if num.is_multiple_of(&four_a) {
                let big_c = &num / &four_a;
                if big_c >= big_a {
                    let h = [big_a.clone(), big_b.clone(), big_c];
                    let auts = automorphisms(&h);
                    for f in forms_with_hessian(&h, disc) {
                        let (rep, stab) = canonical_positive(&f, &auts);
                        out.insert(rep, stab);
                    }
                }
            }
            big_b += 1;
        }
        big_a += 1;
    }
    out
}

/// All cubics of discriminant `disc` whose Hessian is exactly `h`.
///
/// Uses `2 A b - 3 a B = G(1, 0)` where `G^2 = 4 H^3 - 27 D f^2`.
fn forms_with_hessian(h: &[BigInt; 3], disc: &BigInt) -> Vec<BinaryForm> {
    let [big_a, big_b, big_c] = h;
    let mut out = Vec::new();
    let four_a3 = big(4) * big_a * big_a * big_a;
    let k = big(27) * disc;
    let mut push = |f: BinaryForm| {
        if f.hessian().unwrap() == *h && &f.disc() == disc {
            out.push(f);
        }
    };
    // a = 0: A = b^2, B = b c, C = c^2 - 3 b d
    if let Some(r) = exact_sqrt(big_a) {
        for b in [r.clone(), -r] {
            if b.is_zero() || !big_b.is_multiple_of(&b) {
                continue;
            }
            let c = big_b / &b;
            let num = &c * &c - big_c;
            let den = big(3) * &b;
            if num.is_multiple_of(&den) {
                let d = num / den;
                push(BinaryForm::raw(vec![BigInt::zero(), b, c, d]));
            }
        }
    }
    let mut a = BigInt::one();
    while &k * &a * &a <= four_a3 {
        let g2 = &four_a3 - &k * &a * &a;
        if let Some(g) = exact_sqrt(&g2) {
            for sa in [a.clone(), -&a] {
                let mut roots = vec![g.clone()];
                if !g.is_zero() {
                    roots.push(-&g);
                }
                for gg in roots {
                    let num = big(3) * &sa * big_b + gg;
                    let den = big(2) * big_a;
                    if !num.is_multiple_of(&den) {
                        continue;
                    }
                    let b = num / den;
                    let cnum = &b * &b - big_a;
                    let cden = big(3) * &sa;
                    if !cnum.is_multiple_of(&cden) {
                        continue;
                    }
                    let c = cnum / cden;
                    let dnum = &b * &c - big_b;
                    let dden = big(9) * &sa;
                    if !dnum.is_multiple_of(&dden) {
                        continue;
                    }
                    let d = dnum / dden;
                    push(BinaryForm::raw(vec![sa.clone(), b, c, d]));
                }
            }
        }
        a += 1;
    }
    out
}

fn enumerate_negative(disc: &BigInt) -> BTreeMap<BinaryForm, u64> {
    let mut out = BTreeMap::new();
    let n = -disc; // |D|
    let mut consider = |f: BinaryForm| {
        if &f.disc() == disc && NegCubic::new(&f).in_closed_domain() {
            let (rep, stab) = canonical_negative(&f);
            out.insert(rep, stab);
        }
    };
    // a = 0: 3 b^4 <= |D|, |c| <= b, d = (b^2 c^2 - D) / (4 b^3)
    let mut b = BigInt::one();
    while big(3) * b.pow(4) <= n {
        let mut c = -&b;
        while c <= b {
            let num = &b * &b * &c * &c - disc;
            let den = big(4) * &b * &b * &b;
            if num.is_multiple_of(&den) {
                consider(BinaryForm::raw(vec![BigInt::zero(), b.clone(), c.clone(), num / den]));
            }
            c += 1;
        }
        b += 1;
    }
    // a > 0: 27 a^4 <= 16 |D|
    let mut a = BigInt::one();
    while big(27) * a.pow(4) <= big(16) * &n {
        // smallest R with 3 a^4 R^4 >= |D|
        let mut r = BigInt::one();
        while big(3) * a.pow(4) * r.pow(4) < n {
            r += 1;
        }
        let bmax = &a * (&r + big(2));
        let cmax = &a * (&r * &r + &r + BigInt::one());
        let mut b = -&bmax;
        while b <= bmax {
            let mut c = -&cmax;
            while c <= cmax {
                for d in solve_d(&a, &b, &c, disc) {
                    consider(BinaryForm::raw(vec![a.clone(), b.clone(), c.clone(), d]));
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
}

/// Integer roots `d` of `disc(a, b, c, d) = D` for `a != 0`.
pub(crate) fn solve_d(a: &BigInt, b: &BigInt, c: &BigInt, disc: &BigInt) -> Vec<BigInt> {
    // -27 a^2 d^2 + (18abc - 4b^3) d + (b^2 c^2 - 4 a c^3 - D) = 0
    let qa = big(-27) * a * a;
    let qb = big(18) * a * b * c - big(4) * b * b * b;
    let qc = b * b * c * c - big(4) * a * c * c * c - disc;
    let delta = &qb * &qb - big(4) * &qa * &qc;
    let Some(s) = exact_sqrt(&delta) else { return Vec::new() };
    let mut out = Vec::new();
    let den = big(2) * &qa;
    for num in [-&qb + &s, -&qb - &s] {
        if num.is_multiple_of(&den) {
            let d = num / &den;
            if !out.contains(&d) {
                out.push(d);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Weighted counts.

/// Local condition on a cubic class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalCondition {
    /// `3 | b` and `3 | c`.
    Traced3,
    /// Splitting type modulo `p`.
    Splitting(u64, SplittingType),
    /// Weight by the number of roots in P^1(F_p).
    MarkedRoot(u64),
}

/// Weight of one class under the conditions (0 if excluded).
pub fn class_weight(rep: &BinaryForm, conds: &[LocalCondition]) -> u64 {
    let mut w = 1;
    for c in conds {
        match *c {
            LocalCondition::Traced3 => {
                let three = big(3);
                if !rep.coeff(1).is_multiple_of(&three) || !rep.coeff(2).is_multiple_of(&three) {
                    return 0;
                }
            }
            LocalCondition::Splitting(p, t) => {
                if splitting_type(rep, p).unwrap() != t {
                    return 0;
                }
            }
            LocalCondition::MarkedRoot(p) => {
                w *= splitting_type(rep, p).unwrap().root_count(p);
            }
        }
    }
    w
}

/// `sum w(class) / |Stab(class)|` over the classes of discriminant `disc`.
pub fn h(disc: &BigInt, conds: &[LocalCondition]) -> Result<WeightedCount> {
    let mut acc = WeightedCount::zero();
    for cl in enumerate_cubics(disc)? {
        let w = class_weight(&cl.rep, conds);
        if w > 0 {
            acc.add_class(w, cl.stab);
        }
    }
    Ok(acc)
}

/// `h` at a rational argument: zero unless it is a nonzero integer.
pub fn h_rational(disc: &BigRational, conds: &[LocalCondition]) -> Result<WeightedCount> {
    if !disc.is_integer() || disc.is_zero() {
        return Ok(WeightedCount::zero());
    }
    h(&disc.to_integer(), conds)
}

pub fn h3(disc: &BigInt) -> Result<WeightedCount> {
    h(disc, &[LocalCondition::Traced3])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnViolation {
    pub d: i64,
    pub lhs: WeightedCount,
    pub rhs: WeightedCount,
}

#[derive(Clone, Debug, Default)]
pub struct OnReport {
    pub checked: usize,
    pub violations: Vec<OnViolation>,
}

/// Checks `h_3(-27 D) = 3 h(D)` for `D > 0` and `h_3(-27 D) = h(D)` for `D < 0`.
pub fn check_on_single(d: i64) -> Result<Option<OnViolation>> {
    let db = big(d);
    let lhs = h3(&(big(-27) * &db))?;
    let base = h(&db, &[])?;
    let rhs = if d > 0 { base.clone() + base.clone() + base } else { base };
    Ok(if lhs == rhs { None } else { Some(OnViolation { d, lhs, rhs }) })
}

/// [`check_on_single`] for every `0 < |D| <= bound`.
pub fn check_cubic_on(bound: i64) -> Result<OnReport> {
    let mut rep = OnReport::default();
    for m in 1..=bound {
        for d in [m, -m] {
            rep.checked += 1;
            if let Some(v) = check_on_single(d)? {
                rep.violations.push(v);
            }
        }
    }
    Ok(rep)
}

/// Both sides of the discriminant-reduction identity, with each term.
#[derive(Clone, Debug)]
pub struct DiscReduction {
    pub p: u64,
    pub d: BigInt,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub terms: [BigRational; 5],
}

impl DiscReduction {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Whether the discriminant-reduction identity applies at `(p, D)`: `p` is a
/// prime other than 3, `p^2 | D`, and every cubic ring maximal at `p` with
/// discriminant `D` is totally ramified there. The last condition is automatic
/// for odd `p`. At `p = 2` it fails exactly when `D / 4` is 2 or 3 mod 4,
/// where `Z_2 x Z_2[sqrt(D / 4)]` is a maximal ring that is only partially
/// ramified, and the identity is then off by those rings.
pub fn reduction_applies(p: u64, d: &BigInt) -> bool {
    if p == 3 || !crate::quad::is_prime(p) || d.is_zero() {
        return false;
    }
    let p2 = BigInt::from(p * p);
    if !d.is_multiple_of(&p2) {
        return false;
    }
    p != 2 || (d / &p2).mod_floor(&big(4)) <= big(1)
}

/// Evaluates the discriminant-reduction identity at a prime `p != 3` with
/// `p^2 | D`. See [`reduction_applies`] for when it is expected to hold.
pub fn check_disc_reduction(p: u64, d: &BigInt) -> Result<DiscReduction> {
    if p == 3 || !crate::quad::is_prime(p) {
        return Err(Error::BadInput(alloc::format!("p = {p} must be a prime other than 3")));
    }
    let pb = BigInt::from(p);
    let p2 = &pb * &pb;
    if d.is_zero() || !d.is_multiple_of(&p2) {
        return Err(Error::BadInput(alloc::format!("p^2 must divide D = {d}")));
    }
    let r = LocalCondition::MarkedRoot(p);
    let d_p2 = d / &p2;
    let d_p4 = BigRational::new(d.clone(), &p2 * &p2);
    let t1 = h(&d_p2, &[r])?.value().clone();
    let t2 = h_rational(&d_p4, &[])?.value().clone();
    let t3 = h_rational(&d_p4, &[r])?.value().clone();
    let refl = big(-27) * &d_p2;
    let t4 = h(&refl, &[LocalCondition::Traced3, LocalCondition::Splitting(p, SplittingType::T111)])?
        .value()
        .clone();
    let t5 = h(&refl, &[LocalCondition::Traced3, LocalCondition::Splitting(p, SplittingType::T3)])?
        .value()
        .clone();
    let c_inf = if d.is_positive() { 3 } else { 1 };
    let tame = (BigRational::from_integer(big(2)) * &t4 - &t5) / BigRational::from_integer(big(c_inf));
    let lhs = h(d, &[])?.value().clone();
    let rhs = &t1 + &t2 - &t3 + &tame;
    Ok(DiscReduction { p, d: d.clone(), lhs, rhs, terms: [t1, t2, t3, t4, t5] })
}

/// Coefficients `n -> h(sign n)`, or `n -> h_3(sign 27 n)` when traced.
pub fn shintani_coeffs(positive: bool, max_n: i64, traced: bool) -> Result<Vec<(i64, WeightedCount)>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let s = if positive { n } else { -n };
        let v = if traced { h3(&big(27 * s))? } else { h(&big(s), &[])? };
        out.push((n, v));
    }
    Ok(out)
}
