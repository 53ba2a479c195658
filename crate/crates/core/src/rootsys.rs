//! Classical root systems in Bourbaki epsilon-coordinates.
//!
//! A [`RootSystem`] is an ordered product of irreducible factors of type
//! A, B, C or D. Each factor owns a contiguous block of ambient coordinates:
//! `n + 1` for `A_n` and `n` for the other families. Weights of an `A_n`
//! block live in the quotient by the all-ones vector and are stored with the
//! last coordinate of the block equal to zero.
//!
//! Weyl-group data (dominant representatives, stabilizers, orbit sizes) is
//! computed from coordinate multiplicity patterns; no group elements are
//! ever enumerated here.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::number::{factorial, format_rational, frac, int, parse_rational, pow2, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        };
        write!(f, "{c}")
    }
}

/// One irreducible factor `X_n`. Construction does not validate the rank, so
/// low-rank aliases such as `D_2` can be named (see [`canonical_form`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub const fn new(family: Family, rank: usize) -> Self {
        Self { family, rank }
    }

    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    fn validate(&self) -> Result<()> {
        let min = match self.family {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        };
        if self.rank >= min {
            return Ok(());
        }
        let hint = match (self.family, self.rank) {
            (_, 0) => "rank must be positive".to_string(),
            (Family::B, 1) | (Family::C, 1) => "use A1".to_string(),
            (Family::D, 1) => "D1 is a torus and has no roots".to_string(),
            (Family::D, 2) => "use A1xA1".to_string(),
            _ => "rank out of range".to_string(),
        };
        Err(Error::UnsupportedType(format!("{self} ({hint})")))
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
        }
    }

    pub fn weyl_group_order(&self) -> BigUint {
        let n = self.rank;
        match self.family {
            Family::A => factorial(n + 1),
            Family::B | Family::C => pow2(n) * factorial(n),
            Family::D => pow2(n - 1) * factorial(n),
        }
    }

    /// Order of the weight lattice modulo the root lattice.
    pub fn fundamental_group_order(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B | Family::C => 2,
            Family::D => 4,
        }
    }

    pub fn dual(&self) -> Self {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        Self::new(family, self.rank)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') | Some('F') | Some('G') => {
                return Err(Error::UnsupportedType(format!("{s} (exceptional)")))
            }
            _ => return Err(Error::Parse(format!("invalid Cartan type {s:?}"))),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest
            .parse()
            .map_err(|_| Error::Parse(format!("invalid rank in {s:?}")))?;
        Ok(Self::new(family, rank))
    }
}

/// Rewrites a list of factors into the canonical isomorphism-class form:
/// `B1, C1 -> A1`, `C2 -> B2`, `D2 -> A1 x A1`, `D3 -> A3`, `D1` dropped,
/// then sorted.
pub fn canonical_form(factors: &[CartanType]) -> Vec<CartanType> {
    let mut out = Vec::new();
    for t in factors {
        match (t.family, t.rank) {
            (_, 0) | (Family::D, 1) => {}
            (Family::B, 1) | (Family::C, 1) => out.push(CartanType::new(Family::A, 1)),
            (Family::C, 2) => out.push(CartanType::new(Family::B, 2)),
            (Family::D, 2) => {
                out.push(CartanType::new(Family::A, 1));
                out.push(CartanType::new(Family::A, 1));
            }
            (Family::D, 3) => out.push(CartanType::new(Family::A, 3)),
            _ => out.push(*t),
        }
    }
    out.sort();
    out
}

/// An exact rational vector in epsilon-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rational::zero(); dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| int(x)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Weight) -> Rational {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }
}

impl serde::Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::number::serde_exact::rational_vec::serialize(&self.0, s)
    }
}

impl<'de> serde::Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        crate::number::serde_exact::rational_vec::deserialize(d).map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Rational> for &Weight {
    type Output = Weight;
    fn mul(self, rhs: &Rational) -> Weight {
        self.scale(rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// Simply-laced roots are all reported as `Long`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootLength {
    Long,
    Short,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub vector: Weight,
    pub sign: Sign,
    pub length: RootLength,
    /// Index of the factor this root belongs to.
    pub factor: usize,
}

impl Root {
    pub fn norm_sq(&self) -> Rational {
        self.vector.dot(&self.vector)
    }

    /// `2 alpha / (alpha, alpha)`.
    pub fn coroot(&self) -> Weight {
        let c = int(2) / self.norm_sq();
        self.vector.scale(&c)
    }

    pub fn negate(&self) -> Root {
        Root {
            vector: -&self.vector,
            sign: match self.sign {
                Sign::Positive => Sign::Negative,
                Sign::Negative => Sign::Positive,
            },
            length: self.length,
            factor: self.factor,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.vector)
    }
}

/// A product of classical irreducible root systems with cached roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    factors: Vec<CartanType>,
    offsets: Vec<usize>,
    ambient: usize,
    positive: Vec<Root>,
    simple: Vec<Root>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for RootSystem {}

impl std::hash::Hash for RootSystem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.factors.hash(state);
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .split(['x', 'X', '*', '×'])
            .map(str::parse)
            .collect::<Result<Vec<CartanType>>>()?;
        RootSystem::build(&factors)
    }
}

fn unit(dim: usize, i: usize, c: i64) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = int(c);
    v
}

fn two_term(dim: usize, i: usize, j: usize, sj: i64) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = int(1);
    v[j] = int(sj);
    v
}

impl RootSystem {
    /// Validates the factors and caches positive and simple roots.
    pub fn build(factors: &[CartanType]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::UnsupportedType("empty product".into()));
        }
        for t in factors {
            t.validate()?;
        }
        let mut offsets = Vec::with_capacity(factors.len());
        let mut ambient = 0;
        for t in factors {
            offsets.push(ambient);
            ambient += t.ambient_dim();
        }
        let mut rs = RootSystem {
            factors: factors.to_vec(),
            offsets,
            ambient,
            positive: Vec::new(),
            simple: Vec::new(),
        };
        for k in 0..factors.len() {
            let (pos, simple) = rs.factor_roots(k);
            rs.positive.extend(pos);
            rs.simple.extend(simple);
        }
        Ok(rs)
    }

    pub fn irreducible(family: Family, rank: usize) -> Result<Self> {
        Self::build(&[CartanType::new(family, rank)])
    }

    fn factor_roots(&self, k: usize) -> (Vec<Root>, Vec<Root>) {
        let t = self.factors[k];
        let o = self.offsets[k];
        let dim = self.ambient;
        let d = t.ambient_dim();
        let n = t.rank;
        let mk = |v: Vec<Rational>, length| Root {
            vector: Weight(v),
            sign: Sign::Positive,
            length,
            factor: k,
        };
        let mut pos = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                pos.push(mk(two_term(dim, o + i, o + j, -1), RootLength::Long));
                if t.family != Family::A {
                    pos.push(mk(two_term(dim, o + i, o + j, 1), RootLength::Long));
                }
            }
        }
        match t.family {
            Family::B => {
                for i in 0..n {
                    pos.push(mk(unit(dim, o + i, 1), RootLength::Short));
                }
            }
            Family::C => {
                // the ε_i ± ε_j are the short roots of C_n
                for r in pos.iter_mut() {
                    r.length = RootLength::Short;
                }
                for i in 0..n {
                    pos.push(mk(unit(dim, o + i, 2), RootLength::Long));
                }
            }
            _ => {}
        }
        let mut simple = Vec::new();
        let chain = if t.family == Family::A { n } else { n - 1 };
        let chain_len = if t.family == Family::C {
            RootLength::Short
        } else {
            RootLength::Long
        };
        for i in 0..chain {
            simple.push(mk(two_term(dim, o + i, o + i + 1, -1), chain_len));
        }
        match t.family {
            Family::A => {}
            Family::B => simple.push(mk(unit(dim, o + n - 1, 1), RootLength::Short)),
            Family::C => simple.push(mk(unit(dim, o + n - 1, 2), RootLength::Long)),
            Family::D => simple.push(mk(two_term(dim, o + n - 2, o + n - 1, 1), RootLength::Long)),
        }
        (pos, simple)
    }

    pub fn factors(&self) -> &[CartanType] {
        &self.factors
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank).sum()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Coordinate range `[start, end)` of factor `k`.
    pub fn block(&self, k: usize) -> std::ops::Range<usize> {
        let o = self.offsets[k];
        o..o + self.factors[k].ambient_dim()
    }

    /// Dimension of the Lie algebra: `|roots| + rank`.
    pub fn lie_algebra_dim(&self) -> usize {
        2 * self.positive.len() + self.rank()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    /// Positive roots followed by their negatives.
    pub fn roots(&self) -> Vec<Root> {
        let mut all = self.positive.clone();
        all.extend(self.positive.iter().map(Root::negate));
        all
    }

    pub fn dual(&self) -> RootSystem {
        let factors: Vec<CartanType> = self.factors.iter().map(CartanType::dual).collect();
        RootSystem::build(&factors).expect("dual of a valid root system is valid")
    }

    pub fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.len() == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: w.len(),
            })
        }
    }

    /// Moves every `A`-block to the representative with last coordinate 0.
    pub fn normalize(&self, w: &Weight) -> Weight {
        let mut v = w.0.clone();
        for (k, t) in self.factors.iter().enumerate() {
            if t.family == Family::A {
                let r = self.block(k);
                let shift = v[r.end - 1].clone();
                if !shift.is_zero() {
                    for x in &mut v[r] {
                        *x -= &shift;
                    }
                }
            }
        }
        Weight(v)
    }

    /// Checked constructor for weights of this system.
    pub fn weight(&self, coords: Vec<Rational>) -> Result<Weight> {
        let w = Weight(coords);
        self.check_dim(&w)?;
        Ok(self.normalize(&w))
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.ambient)
    }

    fn half_sum(&self, vectors: impl Iterator<Item = Weight>) -> Weight {
        let sum = vectors.fold(self.zero_weight(), |acc, v| &acc + &v);
        self.normalize(&sum.scale(&frac(1, 2)))
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> Weight {
        self.half_sum(self.positive.iter().map(|r| r.vector.clone()))
    }

    /// Half the sum of the positive coroots.
    pub fn rho_check(&self) -> Weight {
        self.half_sum(self.positive.iter().map(Root::coroot))
    }

    /// `2 (lambda, alpha) / (alpha, alpha)`.
    pub fn coroot_pairing(&self, lambda: &Weight, alpha: &Root) -> Result<Rational> {
        self.check_dim(lambda)?;
        self.check_dim(&alpha.vector)?;
        Ok(pairing(lambda, alpha))
    }

    /// Height of `lambda` with respect to `rho_check`.
    pub fn height(&self, lambda: &Weight) -> Rational {
        lambda.dot(&self.rho_check())
    }

    pub fn fundamental_weights(&self) -> Vec<Weight> {
        let dim = self.ambient;
        let mut out = Vec::with_capacity(self.rank());
        for (k, t) in self.factors.iter().enumerate() {
            let o = self.offsets[k];
            let n = t.rank;
            for i in 1..=n {
                let mut v = vec![Rational::zero(); dim];
                let spin = match t.family {
                    Family::B => i == n,
                    Family::D => i >= n - 1,
                    _ => false,
                };
                if spin {
                    for x in &mut v[o..o + n] {
                        *x = frac(1, 2);
                    }
                    if t.family == Family::D && i == n - 1 {
                        v[o + n - 1] = frac(-1, 2);
                    }
                } else {
                    for x in &mut v[o..o + i] {
                        *x = int(1);
                    }
                }
                out.push(Weight(v));
            }
        }
        out
    }

    /// `sum_i c_i omega_i`.
    pub fn from_fundamental(&self, coeffs: &[Rational]) -> Result<Weight> {
        if coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: coeffs.len(),
            });
        }
        let sum = self
            .fundamental_weights()
            .iter()
            .zip(coeffs)
            .fold(self.zero_weight(), |acc, (w, c)| &acc + &w.scale(c));
        Ok(self.normalize(&sum))
    }

    pub fn from_fundamental_ints(&self, coeffs: &[u64]) -> Result<Weight> {
        let q: Vec<Rational> = coeffs.iter().map(|&c| int(c as i64)).collect();
        self.from_fundamental(&q)
    }

    /// Pairings with the simple coroots.
    pub fn fundamental_coefficients(&self, lambda: &Weight) -> Vec<Rational> {
        self.simple.iter().map(|a| pairing(lambda, a)).collect()
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        self.simple
            .iter()
            .all(|a| !pairing(lambda, a).is_negative())
    }

    /// The unique dominant weight in the Weyl orbit of `lambda`.
    pub fn dominant_representative(&self, lambda: &Weight) -> Result<Weight> {
        self.check_dim(lambda)?;
        let mut v = lambda.0.clone();
        for (k, t) in self.factors.iter().enumerate() {
            let r = self.block(k);
            let block = &mut v[r];
            match t.family {
                Family::A => block.sort_by(|a, b| b.cmp(a)),
                Family::B | Family::C => {
                    for x in block.iter_mut() {
                        *x = x.abs();
                    }
                    block.sort_by(|a, b| b.cmp(a));
                }
                Family::D => {
                    let negatives = block.iter().filter(|x| x.is_negative()).count();
                    let has_zero = block.iter().any(Zero::is_zero);
                    for x in block.iter_mut() {
                        *x = x.abs();
                    }
                    block.sort_by(|a, b| b.cmp(a));
                    if !has_zero && negatives % 2 == 1 {
                        let last = block.len() - 1;
                        block[last] = -block[last].clone();
                    }
                }
            }
        }
        Ok(self.normalize(&Weight(v)))
    }

    /// `|W|` as a product over factors.
    pub fn weyl_group_order(&self) -> BigUint {
        self.factors
            .iter()
            .map(CartanType::weyl_group_order)
            .fold(BigUint::one(), |a, b| a * b)
    }

    /// Order of the stabilizer of `lambda` (any representative of its orbit).
    pub fn stabilizer_order(&self, lambda: &Weight) -> Result<BigUint> {
        self.check_dim(lambda)?;
        let mut order = BigUint::one();
        for (k, t) in self.factors.iter().enumerate() {
            let block = &lambda.0[self.block(k)];
            let values: Vec<Rational> = match t.family {
                Family::A => block.to_vec(),
                _ => block.iter().map(|x| x.abs()).collect(),
            };
            let zeros = values.iter().filter(|x| x.is_zero()).count();
            let mut sorted: Vec<&Rational> = values.iter().filter(|x| t.family == Family::A || !x.is_zero()).collect();
            sorted.sort();
            let mut i = 0;
            while i < sorted.len() {
                let mut j = i;
                while j < sorted.len() && sorted[j] == sorted[i] {
                    j += 1;
                }
                order *= factorial(j - i);
                i = j;
            }
            match t.family {
                Family::A => {}
                Family::B | Family::C => order *= pow2(zeros) * factorial(zeros),
                Family::D => {
                    if zeros > 0 {
                        order *= pow2(zeros - 1) * factorial(zeros);
                    }
                }
            }
        }
        Ok(order)
    }

    /// `|W lambda| = |W| / |W_lambda|`.
    pub fn orbit_size(&self, lambda: &Weight) -> Result<BigUint> {
        let stab = self.stabilizer_order(lambda)?;
        Ok(self.weyl_group_order() / stab)
    }

    /// Pairing-only definition: every coroot pairing lies in `{-1, 0, 1}`.
    /// The zero weight counts as minuscule.
    pub fn is_minuscule(&self, omega: &Weight) -> Result<bool> {
        self.check_dim(omega)?;
        if !self.is_dominant(omega) {
            return Err(Error::NotDominant(omega.to_string()));
        }
        let one = Rational::one();
        Ok(self
            .positive
            .iter()
            .all(|a| pairing(omega, a).abs() <= one))
    }
}

pub(crate) fn pairing(lambda: &Weight, alpha: &Root) -> Rational {
    lambda.dot(&alpha.vector) * int(2) / alpha.norm_sq()
}

/// Parses `"3/2,1/2"` (epsilon-coordinates) or `"fw:[1,0,2]"`
/// (fundamental-weight coefficients) into a weight of `rs`.
pub fn parse_weight(rs: &RootSystem, text: &str) -> Result<Weight> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("fw:") {
        let inner = rest
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected fw:[...] in {text:?}")))?;
        let coeffs = split_rationals(inner)?;
        return rs.from_fundamental(&coeffs);
    }
    rs.weight(split_rationals(text)?)
}

fn split_rationals(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}
