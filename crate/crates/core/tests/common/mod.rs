// Independent reference implementations used by the integration and
// acceptance tests. Nothing here calls into the library's algorithms; the
// only shared pieces are the number type and the coordinate conventions.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}

// ---------------------------------------------------------------------------
// linear algebra over Q

/// Rank by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &pivot;
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

type Mat = Vec<Vec<Q>>;

fn zeros(n: usize) -> Mat {
    vec![vec![Q::zero(); n]; n]
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut c = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    c[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    c
}

fn bracket(a: &Mat, b: &Mat) -> Mat {
    let ab = mul(a, b);
    let ba = mul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

fn inverse(a: &Mat) -> Mat {
    let n = a.len();
    let mut m: Mat = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero()).expect("invertible");
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for x in &mut m[c] {
            *x /= &pivot;
        }
        let prow = m[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn flatten(m: &Mat) -> Vec<Q> {
    m.iter().flatten().cloned().collect()
}

// ---------------------------------------------------------------------------
// nilpotent elements in explicit Jordan form

/// `e`, `h` and the Gram matrix of the invariant form on `C^N` for a
/// partition, with `g = { X : X^T J + J X = 0 }`.
pub struct MatrixOrbit {
    pub n: usize,
    pub gram: Mat,
    pub e: Mat,
    pub h: Vec<i64>,
    pub symplectic: bool,
}

impl MatrixOrbit {
    /// Each block of size `d` has basis `v_0..v_{d-1}` with `e v_k = v_{k+1}`
    /// and `h v_k = (d - 1 - 2k) v_k`. A part of the parity that carries a
    /// non-degenerate form on its own gets `B(v_k, v_l) = (-1)^k [k+l = d-1]`;
    /// other parts come in pairs `u, w` with the same pairing between `u` and
    /// `w` and nothing inside each.
    pub fn new(symplectic: bool, parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut gram = zeros(n);
        let mut e = zeros(n);
        let mut h = vec![0; n];
        let eps = if symplectic { q(-1) } else { q(1) };
        // the form on a single block is skew iff d is even
        let self_dual = |d: usize| d.is_multiple_of(2) == symplectic;
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &d in parts {
            *counts.entry(d).or_default() += 1;
        }
        let mut offset = 0;
        let block = |d: usize, offset: usize, e: &mut Mat, h: &mut Vec<i64>| {
            for k in 0..d {
                h[offset + k] = d as i64 - 1 - 2 * k as i64;
                if k + 1 < d {
                    e[offset + k + 1][offset + k] = Q::one();
                }
            }
        };
        for (&d, &m) in counts.iter().rev() {
            if self_dual(d) {
                for _ in 0..m {
                    block(d, offset, &mut e, &mut h);
                    for k in 0..d {
                        let sign = if k % 2 == 0 { q(1) } else { q(-1) };
                        gram[offset + k][offset + d - 1 - k] = sign;
                    }
                    offset += d;
                }
            } else {
                assert!(m % 2 == 0, "part {d} needs even multiplicity");
                for _ in 0..m / 2 {
                    let (u, w) = (offset, offset + d);
                    block(d, u, &mut e, &mut h);
                    block(d, w, &mut e, &mut h);
                    for k in 0..d {
                        let sign = if k % 2 == 0 { q(1) } else { q(-1) };
                        gram[u + k][w + d - 1 - k] = sign.clone();
                        gram[w + d - 1 - k][u + k] = &eps * sign;
                    }
                    offset += 2 * d;
                }
            }
        }
        Self {
            n,
            gram,
            e,
            h,
            symplectic,
        }
    }

    fn check(&self, x: &Mat) -> bool {
        let xt: Mat = (0..self.n).map(|i| (0..self.n).map(|j| x[j][i].clone()).collect()).collect();
        let a = mul(&xt, &self.gram);
        let b = mul(&self.gram, x);
        a.iter().flatten().zip(b.iter().flatten()).all(|(p, r)| (p + r).is_zero())
    }

    /// A basis of `g`: `J^{-1} S` for `S` running over a basis of symmetric
    /// (`sp`) or skew (`so`) matrices.
    pub fn algebra_basis(&self) -> Vec<Mat> {
        let jinv = inverse(&self.gram);
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i..self.n {
                if i == j && !self.symplectic {
                    continue;
                }
                let mut s = zeros(self.n);
                s[i][j] = Q::one();
                s[j][i] = if self.symplectic { Q::one() } else { q(-1) };
                if i == j {
                    s[i][i] = Q::one();
                }
                let x = mul(&jinv, &s);
                debug_assert!(self.check(&x));
                out.push(x);
            }
        }
        out
    }

    fn kernel_dim(&self, basis: &[Mat], f: impl Fn(&Mat) -> Vec<Q>) -> usize {
        let images: Vec<Vec<Q>> = basis.iter().map(f).collect();
        basis.len() - rank(images)
    }

    pub fn is_valid(&self) -> bool {
        self.check(&self.e)
    }

    pub fn centralizer_dim(&self) -> usize {
        let basis = self.algebra_basis();
        self.kernel_dim(&basis, |x| flatten(&bracket(&self.e, x)))
    }

    fn ad_h(&self, x: &Mat, shift: i64) -> Mat {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| &x[i][j] * q(self.h[i] - self.h[j] - shift))
                    .collect()
            })
            .collect()
    }

    /// `dim z(e) cap g(0)`, the Lie algebra of the reductive centralizer.
    pub fn reductive_dim(&self) -> usize {
        let basis = self.algebra_basis();
        self.kernel_dim(&basis, |x| {
            let mut v = flatten(&bracket(&self.e, x));
            v.extend(flatten(&self.ad_h(x, 0)));
            v
        })
    }

    /// `dim g(i)` for the eigenvalues of `ad h`.
    pub fn grading(&self) -> BTreeMap<i64, usize> {
        let basis = self.algebra_basis();
        let max = 2 * self.n as i64;
        (-max..=max)
            .map(|i| (i, self.kernel_dim(&basis, |x| flatten(&self.ad_h(x, i)))))
            .filter(|&(_, d)| d > 0)
            .collect()
    }
}

/// Partitions of `n` satisfying the sp / so parity rule.
pub fn classical_partitions(symplectic: bool, n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    rec(n, n, &mut Vec::new(), &mut all);
    all.into_iter()
        .filter(|p| {
            let bad_parity = if symplectic { 1 } else { 0 };
            let mut counts: HashMap<usize, usize> = HashMap::new();
            for &d in p {
                *counts.entry(d).or_default() += 1;
            }
            counts.iter().all(|(&d, &m)| d % 2 != bad_parity || m % 2 == 0)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// root data from scratch

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fam {
    A,
    B,
    C,
    D,
}

/// One simple factor in its epsilon block; `A_n` uses `n + 1` coordinates.
#[derive(Clone, Debug)]
pub struct Sys {
    pub factors: Vec<(Fam, usize)>,
    pub dim: usize,
    offsets: Vec<usize>,
    simple: Vec<Vec<Q>>,
    cartan_inverse: Mat,
}

impl Sys {
    pub fn new(factors: &[(Fam, usize)]) -> Self {
        let mut offsets = Vec::new();
        let mut dim = 0;
        for &(f, r) in factors {
            offsets.push(dim);
            dim += if f == Fam::A { r + 1 } else { r };
        }
        let mut sys = Self {
            factors: factors.to_vec(),
            dim,
            offsets,
            simple: Vec::new(),
            cartan_inverse: Vec::new(),
        };
        sys.simple = sys.build_simple_roots();
        let r = sys.simple.len();
        // cartan[i][j] = <alpha_j, alpha_i^vee>
        let cartan: Mat = (0..r)
            .map(|i| (0..r).map(|j| sys.pairing(&sys.simple[j], &sys.simple[i])).collect())
            .collect();
        sys.cartan_inverse = inverse(&cartan);
        sys
    }

    fn unit(&self, i: usize, c: i64) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim];
        v[i] = q(c);
        v
    }

    fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn positive_roots(&self) -> Vec<Vec<Q>> {
        let mut out = Vec::new();
        for (k, &(f, r)) in self.factors.iter().enumerate() {
            let o = self.offsets[k];
            let m = if f == Fam::A { r + 1 } else { r };
            for i in 0..m {
                for j in i + 1..m {
                    out.push(Self::add(&self.unit(o + i, 1), &self.unit(o + j, -1)));
                    if f != Fam::A {
                        out.push(Self::add(&self.unit(o + i, 1), &self.unit(o + j, 1)));
                    }
                }
                match f {
                    Fam::B => out.push(self.unit(o + i, 1)),
                    Fam::C => out.push(self.unit(o + i, 2)),
                    _ => {}
                }
            }
        }
        out
    }

    pub fn simple_roots(&self) -> Vec<Vec<Q>> {
        self.simple.clone()
    }

    fn build_simple_roots(&self) -> Vec<Vec<Q>> {
        let mut out = Vec::new();
        for (k, &(f, r)) in self.factors.iter().enumerate() {
            let o = self.offsets[k];
            let m = if f == Fam::A { r + 1 } else { r };
            for i in 0..m - 1 {
                out.push(Self::add(&self.unit(o + i, 1), &self.unit(o + i + 1, -1)));
            }
            match f {
                Fam::A => {}
                Fam::B => out.push(self.unit(o + r - 1, 1)),
                Fam::C => out.push(self.unit(o + r - 1, 2)),
                Fam::D => out.push(Self::add(&self.unit(o + r - 2, 1), &self.unit(o + r - 1, 1))),
            }
        }
        out
    }

    /// Inner product, with type-A blocks projected to the sum-zero hyperplane.
    pub fn ip(&self, a: &[Q], b: &[Q]) -> Q {
        let mut total = Q::zero();
        for (k, &(f, r)) in self.factors.iter().enumerate() {
            let o = self.offsets[k];
            let m = if f == Fam::A { r + 1 } else { r };
            let (x, y) = (&a[o..o + m], &b[o..o + m]);
            let dot: Q = x.iter().zip(y).map(|(p, s)| p * s).sum();
            if f == Fam::A {
                let sx: Q = x.iter().sum();
                let sy: Q = y.iter().sum();
                total += dot - sx * sy / q(m as i64);
            } else {
                total += dot;
            }
        }
        total
    }

    pub fn pairing(&self, v: &[Q], alpha: &[Q]) -> Q {
        q(2) * self.ip(v, alpha) / self.ip(alpha, alpha)
    }

    pub fn rho(&self) -> Vec<Q> {
        let mut s = vec![Q::zero(); self.dim];
        for a in self.positive_roots() {
            s = Self::add(&s, &a);
        }
        s.iter().map(|x| x / q(2)).collect()
    }

    pub fn reflect(&self, v: &[Q], alpha: &[Q]) -> Vec<Q> {
        let c = self.pairing(v, alpha);
        v.iter().zip(alpha).map(|(x, a)| x - &c * a).collect()
    }

    /// Type-A blocks shifted so their last coordinate is 0.
    pub fn normalize(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (k, &(f, r)) in self.factors.iter().enumerate() {
            if f == Fam::A {
                let o = self.offsets[k];
                let last = v[o + r].clone();
                for x in &mut v[o..=o + r] {
                    *x -= &last;
                }
            }
        }
        v
    }

    pub fn is_dominant(&self, v: &[Q]) -> bool {
        self.simple.iter().all(|a| !self.pairing(v, a).is_negative())
    }

    /// The W-orbit by breadth-first search over simple reflections.
    pub fn orbit(&self, v: &[Q]) -> BTreeSet<Vec<Q>> {
        let simple = self.simple_roots();
        let start = self.normalize(v);
        let mut seen = BTreeSet::from([start.clone()]);
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for a in &simple {
                let y = self.normalize(&self.reflect(&x, a));
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    /// Reflect across simple walls until dominant.
    pub fn dominant(&self, v: &[Q]) -> Vec<Q> {
        let simple = self.simple_roots();
        let mut x = self.normalize(v);
        loop {
            match simple.iter().find(|a| self.pairing(&x, a).is_negative()) {
                Some(a) => x = self.normalize(&self.reflect(&x, a)),
                None => return x,
            }
        }
    }

    pub fn weyl_product(&self, lambda: &[Q]) -> Q {
        let rho = self.rho();
        let lr: Vec<Q> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
        self.positive_roots()
            .iter()
            .map(|a| self.pairing(&lr, a) / self.pairing(&rho, a))
            .product()
    }

    /// Dominant weights of `V(lambda)` with multiplicities (Freudenthal).
    pub fn dominant_multiplicities(&self, lambda: &[Q]) -> Vec<(Vec<Q>, Q)> {
        let lambda = self.normalize(lambda);
        let rho = self.rho();
        let simple = self.simple_roots();
        let positive = self.positive_roots();
        let norm = |v: &[Q]| self.ip(v, v);
        let bound = norm(&lambda);
        // all weights of V(lambda) by descent through simple roots
        let mut weights = BTreeSet::from([lambda.clone()]);
        let mut frontier = vec![lambda.clone()];
        while let Some(x) = frontier.pop() {
            for a in &simple {
                let y: Vec<Q> = self.normalize(&x.iter().zip(a).map(|(p, s)| p - s).collect::<Vec<_>>());
                if norm(&y) <= bound && weights.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let mut dominant: Vec<Vec<Q>> = weights.into_iter().filter(|w| self.is_dominant(w)).collect();
        let depth = |w: &[Q]| {
            let d: Vec<Q> = lambda.iter().zip(w).map(|(a, b)| a - b).collect();
            self.ip(&d, &rho)
        };
        dominant.sort_by_key(|w| depth(w));
        let shifted = |v: &[Q]| -> Q {
            let s: Vec<Q> = v.iter().zip(&rho).map(|(a, b)| a + b).collect();
            norm(&s)
        };
        let top = shifted(&lambda);
        let mut mult: BTreeMap<Vec<Q>, Q> = BTreeMap::new();
        for mu in &dominant {
            if *mu == lambda {
                mult.insert(mu.clone(), Q::one());
                continue;
            }
            let mut sum = Q::zero();
            for a in &positive {
                let mut k = 1;
                loop {
                    let v: Vec<Q> = self.normalize(
                        &mu.iter().zip(a).map(|(x, s)| x + q(k) * s).collect::<Vec<_>>(),
                    );
                    if norm(&v) > bound {
                        break;
                    }
                    let m = mult.get(&self.dominant(&v)).cloned().unwrap_or_else(Q::zero);
                    sum += self.ip(&v, a) * m;
                    k += 1;
                }
            }
            let m = q(2) * sum / (&top - shifted(mu));
            if !m.is_zero() {
                mult.insert(mu.clone(), m);
            }
        }
        mult.into_iter().collect()
    }

    pub fn freudenthal_dim(&self, lambda: &[Q]) -> Q {
        self.dominant_multiplicities(lambda)
            .into_iter()
            .map(|(w, m)| m * q(self.orbit(&w).len() as i64))
            .sum()
    }

    /// Fundamental coefficients `<v, alpha_i^vee>`.
    pub fn fundamental_coefficients(&self, v: &[Q]) -> Vec<Q> {
        self.simple.iter().map(|a| self.pairing(v, a)).collect()
    }

    /// Membership in the root lattice: solve in simple-root coordinates and
    /// test integrality; uses the inverse Cartan matrix over Q.
    pub fn in_root_lattice(&self, v: &[Q]) -> bool {
        let simple = &self.simple;
        let r = simple.len();
        // v = sum c_j alpha_j  <=>  <v, alpha_i^vee> = sum_j c_j <alpha_j, alpha_i^vee>
        let rhs = self.fundamental_coefficients(v);
        let inv = &self.cartan_inverse;
        let coeffs: Vec<Q> = (0..r)
            .map(|i| (0..r).map(|j| &inv[i][j] * &rhs[j]).sum())
            .collect();
        coeffs.iter().all(|c| c.is_integer())
            && self.normalize(
                &coeffs.iter().enumerate().fold(vec![Q::zero(); self.dim], |acc, (j, c)| {
                    acc.iter().zip(&simple[j]).map(|(x, s)| x + c * s).collect()
                }),
            ) == self.normalize(v)
    }

    pub fn in_weight_lattice(&self, v: &[Q]) -> bool {
        self.fundamental_coefficients(v).iter().all(|c| c.is_integer())
    }

    /// Dominant weights `mu` with `mu - lambda` in the root lattice and
    /// fundamental level at most `level`, found by scanning a box of
    /// epsilon-coordinates in steps of 1/2.
    pub fn box_scan(&self, lambda: &[Q], level: i64) -> BTreeSet<Vec<Q>> {
        let lim = 2 * level + 2;
        let steps: Vec<Q> = (-lim..=lim).map(|k| qf(k, 2)).collect();
        let mut out = BTreeSet::new();
        let mut cur = vec![Q::zero(); self.dim];
        self.scan_rec(0, &steps, &mut cur, lambda, level, &mut out);
        out
    }

    fn scan_rec(&self, i: usize, steps: &[Q], cur: &mut Vec<Q>, lambda: &[Q], level: i64, out: &mut BTreeSet<Vec<Q>>) {
        if i == self.dim {
            let v = self.normalize(cur);
            if !self.in_weight_lattice(&v) || !self.is_dominant(&v) {
                return;
            }
            let lev: Q = self.fundamental_coefficients(&v).into_iter().sum();
            if lev > q(level) {
                return;
            }
            let diff: Vec<Q> = v.iter().zip(lambda).map(|(a, b)| a - b).collect();
            if self.in_root_lattice(&diff) {
                out.insert(v);
            }
            return;
        }
        // type-A blocks are normalized, so their last coordinate can stay 0
        let last_a = self.factors.iter().enumerate().any(|(k, &(f, r))| f == Fam::A && self.offsets[k] + r == i);
        if last_a {
            cur[i] = Q::zero();
            self.scan_rec(i + 1, steps, cur, lambda, level, out);
            return;
        }
        // dominant weights are non-increasing inside each block
        let block_start = self.offsets.contains(&i);
        for s in steps {
            if !block_start && *s > cur[i - 1] {
                continue;
            }
            cur[i] = s.clone();
            self.scan_rec(i + 1, steps, cur, lambda, level, out);
        }
    }
}

pub fn gcd_u(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u(b, a % b)
    }
}

pub fn to_u128(x: &Q) -> u128 {
    assert!(x.is_integer() && !x.is_negative());
    x.to_integer().try_into().expect("fits")
}
