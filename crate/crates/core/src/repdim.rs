//! Representation dimensions and the coset gcd `d(psi)`.
//!
//! `d(psi)` is the gcd of `dim V(lambda)` over all dominant `lambda` in a
//! weight-lattice coset. It is an infinite gcd: the enumeration below walks
//! the coset level by level (level = sum of fundamental-weight coefficients)
//! and stops either on a proof (a divisibility certificate that matches the
//! running gcd) or on evidence (the gcd did not move for a window of levels).

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{in_weight_lattice, schur_class_of, SchurClass};
use crate::number::{gcd, pow2, to_natural, Rational};
use crate::rootsys::{pairing, Family, RootSystem, Weight};

/// Dimension of the irreducible module with highest weight `lambda`,
/// `prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    rs.check_dim(lambda)?;
    if !in_weight_lattice(rs, lambda)? {
        return Err(Error::NotInWeightLattice(lambda.to_string()));
    }
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let shifted = lambda + &rs.rho();
    let rho = rs.rho();
    let product = rs
        .positive_roots()
        .iter()
        .fold(Rational::one(), |acc, a| acc * pairing(&shifted, a) / pairing(&rho, a));
    to_natural(&product).ok_or_else(|| Error::NonIntegral(lambda.to_string()))
}

/// All vectors of `parts` naturals summing to `total`, in lexicographically
/// decreasing order.
pub(crate) fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; parts];
    fn rec(i: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for v in (0..=left).rev() {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, total, &mut cur, &mut out);
    out
}

fn composition_count(total: u64, parts: usize) -> u64 {
    if parts == 0 {
        return u64::from(total == 0);
    }
    // C(total + parts - 1, parts - 1)
    let k = (parts - 1) as u64;
    let mut c: u128 = 1;
    for i in 1..=k {
        c = c * (total as u128 + i as u128) / i as u128;
    }
    c.min(u64::MAX as u128) as u64
}

fn level_members(rs: &RootSystem, psi: &SchurClass, level: u64) -> Vec<Weight> {
    compositions(level, rs.rank())
        .into_iter()
        .map(|c| rs.from_fundamental_ints(&c).expect("rank-length coefficients"))
        .filter(|w| psi.contains(w).unwrap_or(false))
        .collect()
}

/// Dominant weight-lattice elements of `psi` with fundamental level at most
/// `bound`, sorted by `rho_check`-height, ties broken by coordinates.
pub fn enumerate_dominant_in_class(rs: &RootSystem, psi: &SchurClass, bound: u64) -> Vec<Weight> {
    let mut all: Vec<(Rational, Weight)> = (0..=bound)
        .flat_map(|level| level_members(rs, psi, level))
        .map(|w| (rs.height(&w), w))
        .collect();
    all.sort();
    all.into_iter().map(|(_, w)| w).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DPsiConfig {
    /// Minimum number of fundamental levels to scan.
    pub bound: u64,
    /// Levels over which an unchanged gcd counts as stabilized.
    pub window: u64,
    /// Maximum number of candidate weights examined.
    pub node_limit: u64,
}

impl Default for DPsiConfig {
    fn default() -> Self {
        Self {
            bound: 8,
            window: 3,
            node_limit: 2_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DPsiStatus {
    /// A divisibility certificate equals the running gcd.
    Certified,
    /// The gcd did not change over the configured window.
    Stabilized,
}

impl std::fmt::Display for DPsiStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DPsiStatus::Certified => "certified",
            DPsiStatus::Stabilized => "stabilized",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(with = "crate::number::serde_exact::natural")]
    pub dim: BigUint,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
// fields in key order so the JSON form is canonical
pub struct DPsiResult {
    /// Highest fundamental level scanned.
    pub bound_used: u64,
    pub status: DPsiStatus,
    #[serde(with = "crate::number::serde_exact::natural")]
    pub value: BigUint,
    /// Weights at which the running gcd dropped; their dimensions have gcd
    /// equal to `value`.
    pub witnesses: Vec<Witness>,
}

/// Orbit-divisibility certificate for the half-integral classes of `B_n`
/// and `D_n`: every weight of such a class has all coordinates in `Z + 1/2`,
/// so its stabilizer contains no sign changes and every orbit, hence every
/// dimension, is divisible by `2^n` (resp. `2^(n-1)`).
pub fn spinor_certificate(rs: &RootSystem, psi: &SchurClass) -> Option<BigUint> {
    if !rs.is_irreducible() || !psi.is_half_integral() || psi.is_trivial() {
        return None;
    }
    let t = rs.factors()[0];
    match t.family {
        Family::B => Some(pow2(t.rank)),
        Family::D => Some(pow2(t.rank - 1)),
        _ => None,
    }
}

pub fn d_psi(rs: &RootSystem, psi: &SchurClass, config: &DPsiConfig) -> Result<DPsiResult> {
    if psi.root_system() != rs {
        return Err(Error::UnsupportedType(format!(
            "class of {} used with {}",
            psi.root_system(),
            rs
        )));
    }
    let certificate = spinor_certificate(rs, psi);
    let mut running = BigUint::zero();
    let mut witnesses = Vec::new();
    let mut history: Vec<BigUint> = Vec::new();
    let mut nodes: u64 = 0;
    let mut level = 0u64;
    loop {
        let count = composition_count(level, rs.rank());
        nodes = nodes.saturating_add(count);
        if nodes > config.node_limit {
            return Err(Error::BudgetExceeded {
                limit: config.node_limit,
            });
        }
        let members = level_members(rs, psi, level);
        let dims: Vec<BigUint> = members
            .par_iter()
            .map(|w| weyl_dim(rs, w))
            .collect::<Result<_>>()?;
        for (w, d) in members.into_iter().zip(dims) {
            let next = gcd(&running, &d);
            if next != running {
                running = next;
                witnesses.push(Witness { weight: w, dim: d });
            }
            if running.is_one() || certificate.as_ref() == Some(&running) {
                return Ok(DPsiResult {
                    value: running,
                    status: DPsiStatus::Certified,
                    witnesses,
                    bound_used: level,
                });
            }
        }
        history.push(running.clone());
        let w = config.window as usize;
        let stable = !running.is_zero()
            && history.len() > w
            && history[history.len() - 1 - w] == running;
        if level >= config.bound && stable {
            return Ok(DPsiResult {
                value: running,
                status: DPsiStatus::Stabilized,
                witnesses,
                bound_used: level,
            });
        }
        level += 1;
    }
}

/// Index of the equivariant Azumaya algebra attached to `psi`; equal to
/// `d(psi)`.
pub fn azumaya_index(rs: &RootSystem, psi: &SchurClass, config: &DPsiConfig) -> Result<DPsiResult> {
    d_psi(rs, psi, config)
}

/// Convenience: `d(psi)` for the class of `lambda`.
pub fn d_psi_of_weight(rs: &RootSystem, lambda: &Weight, config: &DPsiConfig) -> Result<DPsiResult> {
    let psi = schur_class_of(rs, lambda)?;
    d_psi(rs, &psi, config)
}
