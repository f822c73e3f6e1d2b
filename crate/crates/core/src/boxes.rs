//! Pairs of integral symmetric 3x3 matrices `(A, B)` with `det(A x - B) = f`,
//! up to `(A, B) -> (X A X^T, X B X^T)` for `X` in `GL_3(Z)`.
//!
//! There is no reduction theory here. [`search_boxes`] finds every pair with
//! entries bounded by `B` and joins two of them when a chain of elementary
//! moves connects them without any entry exceeding a guard. Classes that only
//! meet outside the guard stay split, so the result is a best effort.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use num_bigint::BigInt;

use crate::forms::{cubic_disc, WeightedCount};

type M3 = [[i64; 3]; 3];

/// An integral symmetric matrix pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricPair {
    pub a: M3,
    pub b: M3,
}

impl SymmetricPair {
    /// Coefficients of `det(A x - B)`, highest degree first.
    pub fn resolvent(&self) -> [i64; 4] {
        // each entry is a_ij x - b_ij; expand the 3x3 determinant
        let lin = |i: usize, j: usize| [self.a[i][j] as i128, -(self.b[i][j] as i128)];
        let mul = |p: &[i128], q: &[i128]| {
            let mut r = alloc::vec![0i128; p.len() + q.len() - 1];
            for (i, x) in p.iter().enumerate() {
                for (j, y) in q.iter().enumerate() {
                    r[i + j] += x * y;
                }
            }
            r
        };
        let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
            let left = mul(&lin(r0, c0), &lin(r1, c1));
            let right = mul(&lin(r0, c1), &lin(r1, c0));
            [left[0] - right[0], left[1] - right[1], left[2] - right[2]]
        };
        let mut out = [0i128; 4];
        let terms = [(0, minor(1, 2, 1, 2), 1i128), (1, minor(1, 2, 0, 2), -1), (2, minor(1, 2, 0, 1), 1)];
        for (col, m, sign) in terms {
            let p = mul(&lin(0, col), &m);
            for k in 0..4 {
                out[k] += sign * p[k];
            }
        }
        out.map(|x| x as i64)
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.a.iter().chain(self.b.iter()).flatten().map(|x| x.abs()).max().unwrap_or(0)
    }

    pub fn even_diagonal(&self) -> bool {
        (0..3).all(|i| self.a[i][i] % 2 == 0 && self.b[i][i] % 2 == 0)
    }

    /// `(X A X^T, X B X^T)`.
    pub fn transform(&self, x: &M3) -> SymmetricPair {
        SymmetricPair { a: congruence(x, &self.a), b: congruence(x, &self.b) }
    }
}

fn congruence(x: &M3, m: &M3) -> M3 {
    let mut xm = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            xm[i][j] = (0..3).map(|k| x[i][k] * m[k][j]).sum();
        }
    }
    let mut out = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| xm[i][k] * x[j][k]).sum();
        }
    }
    out
}

fn det3(m: &M3) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Symmetric matrices with entries in `[-bound, bound]` and the given determinant.
fn symmetric_with_det(bound: i64, det: i64, even_diagonal: bool) -> Vec<M3> {
    let mut out = Vec::new();
    let step = if even_diagonal { 2 } else { 1 };
    let diag: Vec<i64> = (-bound..=bound).filter(|d| d % step == 0).collect();
    for &d0 in &diag {
        for &d1 in &diag {
            for &d2 in &diag {
                for x in -bound..=bound {
                    for y in -bound..=bound {
                        for z in -bound..=bound {
                            let m = [[d0, x, y], [x, d1, z], [y, z, d2]];
                            if det3(&m) == det {
                                out.push(m);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Elementary generators of `GL_3(Z)`: `I + E_ij`, `I - E_ij`, transpositions, sign changes.
fn generators() -> Vec<M3> {
    let id = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                for s in [1, -1] {
                    let mut m = id;
                    m[i][j] = s;
                    gens.push(m);
                }
            }
        }
        let mut flip = id;
        flip[i][i] = -1;
        gens.push(flip);
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let mut m = id;
        m[i][i] = 0;
        m[j][j] = 0;
        m[i][j] = 1;
        m[j][i] = 1;
        gens.push(m);
    }
    gens
}

/// One class found by [`search_boxes`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxClass {
    /// Least member found, in the derived ordering.
    pub rep: SymmetricPair,
    /// Number of `X` in `GL_3(Z)` with entries in `[-stab_bound, stab_bound]`
    /// fixing the pair.
    pub stab: u64,
    /// Members found with entries within the search bound.
    pub members: Vec<SymmetricPair>,
}

impl BoxClass {
    pub fn contains(&self, p: &SymmetricPair) -> bool {
        self.members.binary_search(p).is_ok()
    }
}

/// Search parameters; see [`search_boxes`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxSearch {
    pub entry_bound: i64,
    pub even_diagonal: bool,
    /// Largest entry allowed along a connecting chain of moves.
    pub guard: i64,
    /// Entry bound for the stabilizer search.
    pub stab_bound: i64,
}

impl BoxSearch {
    pub fn new(entry_bound: i64, even_diagonal: bool) -> Self {
        BoxSearch { entry_bound, even_diagonal, guard: entry_bound + 1, stab_bound: 2 }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut j = i;
        while self.0[j] != r {
            let next = self.0[j];
            self.0[j] = r;
            j = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Classes of pairs with `det(A x - B) = f` (coefficients highest degree first,
/// degree exactly 3) having a member with entries bounded by `entry_bound`.
pub fn search_boxes(f: &[i64; 4], params: BoxSearch) -> Result<Vec<BoxClass>> {
    if f[0] == 0 {
        return Err(Error::BadDegree(2));
    }
    let [a, b, c, d] = f.map(BigInt::from);
    if cubic_disc(&a, &b, &c, &d) == BigInt::from(0) {
        return Err(Error::MultipleRoots);
    }
    let bound = params.entry_bound;
    let a_list = symmetric_with_det(bound, f[0], params.even_diagonal);
    // det(-B) = f(0), so det B = -f(0)
    let b_list = symmetric_with_det(bound, -f[3], params.even_diagonal);
    let mut found: Vec<SymmetricPair> = Vec::new();
    for a in &a_list {
        for b in &b_list {
            let p = SymmetricPair { a: *a, b: *b };
            if p.resolvent() == *f {
                found.push(p);
            }
        }
    }
    found.sort();
    let index: BTreeMap<SymmetricPair, usize> = found.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut uf = UnionFind((0..found.len()).collect());
    let gens = generators();
    let mut seen: BTreeMap<SymmetricPair, usize> = BTreeMap::new();
    for start in 0..found.len() {
        if seen.contains_key(&found[start]) {
            continue;
        }
        // walk the orbit inside the guard, tagging everything with `start`
        let mut stack = alloc::vec![found[start]];
        seen.insert(found[start], start);
        while let Some(p) = stack.pop() {
            if let Some(&i) = index.get(&p) {
                uf.union(start, i);
            }
            for g in &gens {
                let q = p.transform(g);
                if q.max_abs_entry() > params.guard {
                    continue;
                }
                match seen.get(&q) {
                    Some(&owner) => uf.union(start, owner),
                    None => {
                        seen.insert(q, start);
                        stack.push(q);
                    }
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..found.len() {
        let r = uf.find(i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<BoxClass> = groups
        .values()
        .map(|ids| {
            let rep = found[ids[0]];
            BoxClass {
                rep,
                stab: stabilizer(&rep, params.stab_bound),
                members: ids.iter().map(|&i| found[i]).collect(),
            }
        })
        .collect();
    out.sort_by(|x, y| x.rep.cmp(&y.rep));
    Ok(out)
}

/// Number of `X` in `GL_3(Z)` with entries in `[-bound, bound]` fixing `p`.
pub fn stabilizer(p: &SymmetricPair, bound: i64) -> u64 {
    let mut rows: Vec<[i64; 3]> = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                rows.push([a, b, c]);
            }
        }
    }
    // row i of X must satisfy x_i A x_i^T = A_ii and x_i B x_i^T = B_ii
    let quad = |m: &M3, v: &[i64; 3]| -> i64 { (0..3).map(|i| (0..3).map(|j| v[i] * m[i][j] * v[j]).sum::<i64>()).sum() };
    let cands: Vec<Vec<[i64; 3]>> = (0..3)
        .map(|i| rows.iter().filter(|v| quad(&p.a, v) == p.a[i][i] && quad(&p.b, v) == p.b[i][i]).copied().collect())
        .collect();
    let mut n = 0;
    for r0 in &cands[0] {
        for r1 in &cands[1] {
            for r2 in &cands[2] {
                let x = [*r0, *r1, *r2];
                if det3(&x).abs() == 1 && p.transform(&x) == *p {
                    n += 1;
                }
            }
        }
    }
    n
}

/// `sum 1/stab` over the classes.
pub fn weight(classes: &[BoxClass]) -> WeightedCount {
    let mut w = WeightedCount::zero();
    for c in classes {
        w.add_class(1, c.stab);
    }
    w
}
