//! Nilpotent orbits of `sp_N` and `so_N` labelled by partitions.
//!
//! The Cartan coordinates used for `h` and for the embedding of the maximal
//! torus `t_Q` of the reductive centralizer come from one joint
//! decomposition of the natural module `V = sum_d V_d (x) M_d`, where `V_d`
//! is the `d`-dimensional `sl_2`-module and `M_d` the multiplicity space of
//! the part `d`. Every joint `(h, t_Q)`-weight `(j, mu)` of `V` is paired with
//! `(-j, -mu)`; each pair becomes one epsilon-coordinate. For `sp_2n` with
//! partition `(2^n)` this gives `h = (1,-1,1,-1,...)` and
//! `t_Q = {(x1,x1,x2,x2,...)}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number::int;
use crate::rootsys::{Family, RootSystem, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicalFamily {
    Sp,
    So,
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalFamily::Sp => "sp",
            ClassicalFamily::So => "so",
        })
    }
}

impl FromStr for ClassicalFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sp" => Ok(ClassicalFamily::Sp),
            "so" => Ok(ClassicalFamily::So),
            other => Err(Error::Parse(format!("unknown family {other:?} (expected sp or so)"))),
        }
    }
}

impl ClassicalFamily {
    /// Dimension of `sp_N` or `so_N`.
    pub fn algebra_dim(&self, n: usize) -> usize {
        match self {
            ClassicalFamily::Sp => n * (n + 1) / 2,
            ClassicalFamily::So => n * n.saturating_sub(1) / 2,
        }
    }

    /// The root system of `sp_N` / `so_N` in Bourbaki coordinates.
    pub fn root_system(&self, n: usize) -> Result<RootSystem> {
        let half = n / 2;
        match self {
            ClassicalFamily::Sp if n.is_multiple_of(2) => RootSystem::irreducible(Family::C, half),
            ClassicalFamily::Sp => Err(Error::UnsupportedType(format!("sp_{n} (odd size)"))),
            ClassicalFamily::So if n % 2 == 1 => RootSystem::irreducible(Family::B, half),
            ClassicalFamily::So => RootSystem::irreducible(Family::D, half),
        }
    }
}

/// Parses `"2^4"`, `"3,1,1"` or mixed forms such as `"3,2^2,1"`.
pub fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let mut parts = Vec::new();
    for tok in text.split(',') {
        let tok = tok.trim();
        let bad = || Error::Parse(format!("invalid partition token {tok:?}"));
        let (base, mult) = match tok.split_once('^') {
            Some((b, m)) => (b.trim(), m.trim().parse::<usize>().map_err(|_| bad())?),
            None => (tok, 1),
        };
        let base: usize = base.parse().map_err(|_| bad())?;
        parts.extend(std::iter::repeat_n(base, mult));
    }
    Ok(parts)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    family: ClassicalFamily,
    size: usize,
}

impl Partition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn family(&self) -> ClassicalFamily {
        self.family
    }

    /// Dimension `N` of the natural module.
    pub fn size(&self) -> usize {
        self.size
    }

    /// `(part, multiplicity)` with parts decreasing.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn transpose(&self) -> Vec<usize> {
        let largest = self.parts.first().copied().unwrap_or(0);
        (1..=largest)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect()
    }

    /// All parts share one parity.
    pub fn is_even(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] % 2 == w[1] % 2)
    }

    pub fn is_zero_orbit(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .multiplicities()
            .iter()
            .map(|&(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect();
        f.write_str(&parts.join(","))
    }
}

pub fn validate_partition(family: ClassicalFamily, parts: &[usize], n: usize) -> Result<Partition> {
    let mut parts = parts.to_vec();
    if parts.contains(&0) {
        return Err(Error::Parse("partition parts must be positive".into()));
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let total: usize = parts.iter().sum();
    if total != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: total,
        });
    }
    let p = Partition {
        parts,
        family,
        size: n,
    };
    let violation = |detail: String| Error::ParityViolation {
        family: family.to_string(),
        partition: p.to_string(),
        detail,
    };
    if family == ClassicalFamily::Sp && n % 2 == 1 {
        return Err(violation(format!("symplectic module of odd size {n}")));
    }
    // sp: odd parts come in pairs; so: even parts come in pairs
    let paired_parity = match family {
        ClassicalFamily::Sp => 1,
        ClassicalFamily::So => 0,
    };
    for (d, m) in p.multiplicities() {
        if d % 2 == paired_parity && m % 2 == 1 {
            return Err(violation(format!("part {d} has odd multiplicity {m}")));
        }
    }
    Ok(p)
}

/// `dim z_g(e)`, the codimension of the orbit:
/// `sp: (sum (p^T_i)^2 + #odd parts) / 2`, `so: (sum (p^T_i)^2 - #odd parts) / 2`.
pub fn centralizer_dim(p: &Partition) -> usize {
    let sq: usize = p.transpose().iter().map(|c| c * c).sum();
    let odd = p.parts.iter().filter(|&&d| d % 2 == 1).count();
    match p.family {
        ClassicalFamily::Sp => (sq + odd) / 2,
        ClassicalFamily::So => (sq - odd) / 2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    O,
    Sp,
}

/// One factor `O(size)` or `Sp(size)` of `Q`, attached to the part `part`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QFactor {
    pub kind: GroupKind,
    pub size: usize,
    pub part: usize,
}

impl QFactor {
    pub fn torus_rank(&self) -> usize {
        self.size / 2
    }

    /// Dimension of the group (and of its Lie algebra).
    pub fn dim(&self) -> usize {
        let m = self.size;
        match self.kind {
            GroupKind::O => m * m.saturating_sub(1) / 2,
            GroupKind::Sp => m * (m + 1) / 2,
        }
    }
}

impl fmt::Display for QFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::O => write!(f, "O({})", self.size),
            GroupKind::Sp => write!(f, "Sp({})", self.size),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductiveCentralizer {
    pub factors: Vec<QFactor>,
    pub component_group_order: u64,
}

impl ReductiveCentralizer {
    pub fn dim(&self) -> usize {
        self.factors.iter().map(QFactor::dim).sum()
    }

    pub fn torus_rank(&self) -> usize {
        self.factors.iter().map(QFactor::torus_rank).sum()
    }
}

impl fmt::Display for ReductiveCentralizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("x"))
    }
}

/// `Q = prod O(m_d) x prod Sp(m_d)`: for `sp`, even parts give `O` and odd
/// parts `Sp`; for `so` the roles swap. The component group order is
/// `2^(#even parts)` in `Sp_N` and `2^max(0, #odd parts - 1)` in `SO_N`.
pub fn reductive_centralizer(p: &Partition) -> ReductiveCentralizer {
    let orthogonal_parity = match p.family {
        ClassicalFamily::Sp => 0,
        ClassicalFamily::So => 1,
    };
    let factors: Vec<QFactor> = p
        .multiplicities()
        .into_iter()
        .map(|(d, m)| QFactor {
            kind: if d % 2 == orthogonal_parity {
                GroupKind::O
            } else {
                GroupKind::Sp
            },
            size: m,
            part: d,
        })
        .collect();
    let o_count = factors.iter().filter(|f| f.kind == GroupKind::O).count() as u32;
    let exponent = match p.family {
        ClassicalFamily::Sp => o_count,
        ClassicalFamily::So => o_count.saturating_sub(1),
    };
    ReductiveCentralizer {
        factors,
        component_group_order: 1u64 << exponent,
    }
}

/// Linear map `t_Q -> t`: row `i` is the image of the `i`-th basis vector of
/// `t_Q` in epsilon-coordinates. The pullback of a weight sends
/// `lambda` to `eta_i = sum_j rows[i][j] * lambda_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TqEmbedding {
    pub rows: Vec<Vec<i64>>,
    pub ambient: usize,
}

impl TqEmbedding {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Self { rows, ambient: n }
    }

    /// Image of `x in t_Q` in `t`.
    pub fn push(&self, x: &[BigRational]) -> Weight {
        let mut out = Weight::zero(self.ambient);
        for (row, xi) in self.rows.iter().zip(x) {
            for (o, &c) in out.0.iter_mut().zip(row) {
                if c != 0 {
                    *o += xi * int(c);
                }
            }
        }
        out
    }

    /// Restriction of a weight of `t` to `t_Q`, in eta-coordinates.
    pub fn pull(&self, lambda: &Weight) -> Weight {
        Weight(
            self.rows
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&lambda.0)
                        .filter(|(c, _)| **c != 0)
                        .fold(BigRational::from_integer(0.into()), |acc, (&c, x)| acc + x * int(c))
                })
                .collect(),
        )
    }

    /// Swaps two epsilon-columns (used to build negative controls).
    pub fn swap_columns(&self, a: usize, b: usize) -> Self {
        let mut rows = self.rows.clone();
        for r in &mut rows {
            r.swap(a, b);
        }
        Self {
            rows,
            ambient: self.ambient,
        }
    }
}

/// Joint `(h, t_Q)` coordinates of `t`.
fn arrangement(p: &Partition, q: &ReductiveCentralizer) -> Result<(Vec<i64>, TqEmbedding)> {
    let n = p.size / 2;
    let r = q.torus_rank();
    let mut h = Vec::with_capacity(n);
    let mut rows = vec![vec![0i64; n]; r];
    let mut self_paired = 0usize;
    let mut offset = 0usize;
    for f in &q.factors {
        let d = f.part as i64;
        let string: Vec<i64> = (0..d).map(|k| d - 1 - 2 * k).collect();
        for a in 0..f.torus_rank() {
            for &j in &string {
                let col = h.len();
                h.push(j);
                rows[offset + a][col] = 1;
            }
        }
        if f.kind == GroupKind::O && f.size % 2 == 1 {
            for &j in string.iter().filter(|&&j| j > 0) {
                h.push(j);
            }
            if d % 2 == 1 {
                self_paired += 1;
            }
        }
        offset += f.torus_rank();
    }
    h.extend(std::iter::repeat_n(0, self_paired / 2));
    if h.len() != n || self_paired % 2 != p.size % 2 {
        return Err(Error::UnsupportedOrbit(format!(
            "{} {}: coordinate count {} != {}",
            p.family,
            p,
            h.len(),
            n
        )));
    }
    Ok((h, TqEmbedding { rows, ambient: n }))
}

/// Orbit data derived from a validated partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDatum {
    pub partition: Partition,
    /// Semisimple element of the `sl_2`-triple, in epsilon-coordinates.
    pub h: Weight,
    pub centralizer_dim: usize,
    pub reductive_centralizer: ReductiveCentralizer,
    pub component_group_order: u64,
    pub is_even: bool,
    embedding: TqEmbedding,
}

impl OrbitDatum {
    pub fn new(p: &Partition) -> Result<Self> {
        let q = reductive_centralizer(p);
        let (h, embedding) = arrangement(p, &q)?;
        Ok(Self {
            partition: p.clone(),
            h: Weight::from_ints(&h),
            centralizer_dim: centralizer_dim(p),
            component_group_order: q.component_group_order,
            reductive_centralizer: q,
            is_even: p.is_even(),
            embedding,
        })
    }

    pub fn parse(family: ClassicalFamily, text: &str) -> Result<Self> {
        let parts = parse_parts(text)?;
        let n = parts.iter().sum();
        Self::new(&validate_partition(family, &parts, n)?)
    }

    pub fn algebra_dim(&self) -> usize {
        self.partition.family.algebra_dim(self.partition.size)
    }

    pub fn orbit_dim(&self) -> usize {
        self.algebra_dim() - self.centralizer_dim
    }

    pub fn root_system(&self) -> Result<RootSystem> {
        self.partition.family.root_system(self.partition.size)
    }

    pub fn tq_embedding(&self) -> &TqEmbedding {
        &self.embedding
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    pub h: Weight,
    pub is_even: bool,
    /// `i -> dim g(i)` for the eigenvalues `i` of `ad h`.
    pub dims: BTreeMap<i64, usize>,
}

pub fn h_and_grading(p: &Partition) -> Result<Grading> {
    let datum = OrbitDatum::new(p)?;
    let rs = datum.root_system()?;
    let mut dims = BTreeMap::new();
    dims.insert(0, rs.rank());
    for a in rs.roots() {
        let deg = a.vector.dot(&datum.h);
        let deg = crate::number::to_i64(&deg).expect("integral h");
        *dims.entry(deg).or_insert(0) += 1;
    }
    let is_even = dims.keys().all(|k| k % 2 == 0);
    Ok(Grading {
        h: datum.h,
        is_even,
        dims,
    })
}

/// Embedding of `t_Q` into `t`; the identity for the zero orbit.
pub fn tq_embedding(p: &Partition) -> Result<TqEmbedding> {
    Ok(OrbitDatum::new(p)?.embedding)
}

/// All valid partitions of `n` for the given family, parts decreasing.
pub fn all_partitions(family: ClassicalFamily, n: usize) -> Vec<Partition> {
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
    let mut raw = Vec::new();
    rec(n, n, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .filter_map(|parts| validate_partition(family, &parts, n).ok())
        .collect()
}
