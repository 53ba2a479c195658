//! Weight lattice modulo root lattice, and integral root subsystems.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::number::{frac, int, is_half_odd, is_integer, Rational};
use crate::rootsys::{canonical_form, pairing, CartanType, Family, Root, RootSystem, Sign, Weight};

fn block_sum(v: &[Rational]) -> Rational {
    v.iter().fold(Rational::zero(), |a, b| a + b)
}

fn all_integer(v: &[Rational]) -> bool {
    v.iter().all(is_integer)
}

fn all_half_odd(v: &[Rational]) -> bool {
    v.iter().all(is_half_odd)
}

fn is_even_integer(q: &Rational) -> bool {
    is_integer(&(q / int(2)))
}

pub fn in_weight_lattice(rs: &RootSystem, mu: &Weight) -> Result<bool> {
    rs.check_dim(mu)?;
    let mu = rs.normalize(mu);
    Ok(rs.factors().iter().enumerate().all(|(k, t)| {
        let b = &mu.0[rs.block(k)];
        match t.family {
            Family::A | Family::C => all_integer(b),
            Family::B | Family::D => all_integer(b) || all_half_odd(b),
        }
    }))
}

/// Root-lattice membership. For `A_n` the normalized representative must be
/// integral with coordinate sum divisible by `n + 1`.
pub fn in_root_lattice(rs: &RootSystem, mu: &Weight) -> Result<bool> {
    rs.check_dim(mu)?;
    let mu = rs.normalize(mu);
    Ok(rs.factors().iter().enumerate().all(|(k, t)| {
        let b = &mu.0[rs.block(k)];
        if !all_integer(b) {
            return false;
        }
        let s = block_sum(b);
        match t.family {
            Family::A => is_integer(&(s / int(t.rank as i64 + 1))),
            Family::B => true,
            Family::C | Family::D => is_even_integer(&s),
        }
    }))
}

/// A coset of the weight lattice modulo the root lattice, identified by its
/// canonical dominant representative: the unique minuscule (or zero) weight
/// in the coset, which is also the dominant element of least height.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchurClass {
    root_system: RootSystem,
    representative: Weight,
}

impl SchurClass {
    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn representative(&self) -> &Weight {
        &self.representative
    }

    pub fn is_trivial(&self) -> bool {
        self.representative.is_zero()
    }

    /// `true` when every factor block of the representative is half-integral.
    pub fn is_half_integral(&self) -> bool {
        let rs = &self.root_system;
        (0..rs.factors().len()).all(|k| all_half_odd(&self.representative.0[rs.block(k)]))
    }

    pub fn contains(&self, lambda: &Weight) -> Result<bool> {
        if !in_weight_lattice(&self.root_system, lambda)? {
            return Ok(false);
        }
        in_root_lattice(&self.root_system, &(lambda - &self.representative))
    }
}

impl fmt::Display for SchurClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in {}", self.representative, self.root_system)
    }
}

pub fn schur_class_of(rs: &RootSystem, lambda: &Weight) -> Result<SchurClass> {
    if !in_weight_lattice(rs, lambda)? {
        return Err(Error::NotInWeightLattice(lambda.to_string()));
    }
    let lambda = rs.normalize(lambda);
    let mut rep = rs.zero_weight();
    for (k, t) in rs.factors().iter().enumerate() {
        let range = rs.block(k);
        let b = &lambda.0[range.clone()];
        let n = t.rank;
        let out = &mut rep.0[range];
        match t.family {
            Family::A => {
                let s = block_sum(b).numer().clone();
                let m = num_bigint::BigInt::from(n + 1);
                let r = ((s % &m) + &m) % &m;
                let r: usize = r.try_into().expect("residue fits");
                for x in &mut out[..r] {
                    *x = int(1);
                }
            }
            Family::B => {
                if all_half_odd(b) {
                    out.iter_mut().for_each(|x| *x = frac(1, 2));
                }
            }
            Family::C => {
                if !is_even_integer(&block_sum(b)) {
                    out[0] = int(1);
                }
            }
            Family::D => {
                if all_half_odd(b) {
                    let shifted = b.iter().fold(Rational::zero(), |a, x| a + x - frac(1, 2));
                    out.iter_mut().for_each(|x| *x = frac(1, 2));
                    if !is_even_integer(&shifted) {
                        out[n - 1] = frac(-1, 2);
                    }
                } else if !is_even_integer(&block_sum(b)) {
                    out[0] = int(1);
                }
            }
        }
    }
    Ok(SchurClass {
        root_system: rs.clone(),
        representative: rep,
    })
}

/// Every coset of the weight lattice modulo the root lattice (product of
/// the per-factor fundamental groups).
pub fn all_schur_classes(rs: &RootSystem) -> Vec<SchurClass> {
    let mut reps = vec![rs.zero_weight()];
    let fw = rs.fundamental_weights();
    let mut offset = 0;
    for t in rs.factors() {
        let local: Vec<Weight> = match t.family {
            Family::A => (1..=t.rank).map(|i| fw[offset + i - 1].clone()).collect(),
            Family::B => vec![fw[offset + t.rank - 1].clone()],
            Family::C => vec![fw[offset].clone()],
            Family::D => vec![
                fw[offset].clone(),
                fw[offset + t.rank - 2].clone(),
                fw[offset + t.rank - 1].clone(),
            ],
        };
        let mut next = reps.clone();
        for r in &reps {
            for l in &local {
                next.push(r + l);
            }
        }
        reps = next;
        offset += t.rank;
    }
    reps.iter()
        .map(|r| schur_class_of(rs, r).expect("fundamental weights are in the weight lattice"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeGuess {
    /// Canonical product type (see [`canonical_form`]); empty for a subsystem
    /// without roots.
    Recognized(Vec<CartanType>),
    Unrecognized,
}

impl TypeGuess {
    pub fn root_system(&self) -> Option<RootSystem> {
        match self {
            TypeGuess::Recognized(f) if !f.is_empty() => RootSystem::build(f).ok(),
            _ => None,
        }
    }

    /// Compares against a descriptor that may use low-rank aliases.
    pub fn matches(&self, factors: &[CartanType]) -> bool {
        matches!(self, TypeGuess::Recognized(f) if *f == canonical_form(factors))
    }
}

impl fmt::Display for TypeGuess {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeGuess::Recognized(v) if v.is_empty() => write!(f, "trivial"),
            TypeGuess::Recognized(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join("x"))
            }
            TypeGuess::Unrecognized => write!(f, "unrecognized"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct IntegralSubsystem {
    /// Positive roots first, then negatives, in the order of the parent system.
    pub roots: Vec<Root>,
    /// Dimension of the integral subalgebra: `|roots| + rank`.
    pub dim: usize,
    pub type_guess: TypeGuess,
}

/// `{ alpha : <lambda, alpha^vee> in Z }` together with its Lie-algebra
/// dimension and a Cartan-matrix identification of its type.
pub fn integral_subsystem(rs: &RootSystem, lambda: &Weight) -> Result<IntegralSubsystem> {
    rs.check_dim(lambda)?;
    let positive: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|a| is_integer(&pairing(lambda, a)))
        .cloned()
        .collect();
    Ok(assemble(rs.rank(), positive))
}

/// The integral subalgebra for `lambda in t*(g)` inside the Langlands dual
/// `g^vee`: the roots of `g^vee` are the coroots of `g`, and a coroot
/// `alpha^vee` is kept when `<lambda, alpha^vee>` is an integer.
pub fn dual_integral_subsystem(g: &RootSystem, lambda: &Weight) -> Result<IntegralSubsystem> {
    let gdual = g.dual();
    let sub = integral_subsystem(g, lambda)?;
    let positive: Vec<Root> = sub
        .roots
        .iter()
        .filter(|r| r.sign == Sign::Positive)
        .map(|r| {
            let v = r.coroot();
            gdual
                .positive_roots()
                .iter()
                .find(|d| d.vector == v)
                .cloned()
                .expect("coroots of g are roots of the dual system")
        })
        .collect();
    Ok(assemble(gdual.rank(), positive))
}

fn assemble(rank: usize, positive: Vec<Root>) -> IntegralSubsystem {
    let type_guess = identify(&positive);
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(Root::negate));
    IntegralSubsystem {
        dim: roots.len() + rank,
        roots,
        type_guess,
    }
}

/// Indecomposable elements of a positive system.
pub fn simple_system(positive: &[Root]) -> Vec<Root> {
    positive
        .iter()
        .filter(|a| {
            !positive.iter().any(|b| {
                let rest = &a.vector - &b.vector;
                positive.iter().any(|c| c.vector == rest)
            })
        })
        .cloned()
        .collect()
}

fn identify(positive: &[Root]) -> TypeGuess {
    let simple = simple_system(positive);
    let r = simple.len();
    let cartan = |i: usize, j: usize| pairing(&simple[i].vector, &simple[j]);
    let mut seen = vec![false; r];
    let mut factors = Vec::new();
    for start in 0..r {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut idx = 0;
        while idx < comp.len() {
            let i = comp[idx];
            for (j, s) in seen.iter_mut().enumerate() {
                if !*s && !cartan(i, j).is_zero() {
                    *s = true;
                    comp.push(j);
                }
            }
            idx += 1;
        }
        match identify_component(&simple, &comp, &cartan) {
            Some(t) => factors.push(t),
            None => return TypeGuess::Unrecognized,
        }
    }
    TypeGuess::Recognized(canonical_form(&factors))
}

fn identify_component(
    simple: &[Root],
    comp: &[usize],
    cartan: &dyn Fn(usize, usize) -> Rational,
) -> Option<CartanType> {
    let r = comp.len();
    if r == 1 {
        return Some(CartanType::new(Family::A, 1));
    }
    let mut degree = vec![0usize; r];
    let mut edges = 0;
    let mut double = 0;
    for a in 0..r {
        for b in a + 1..r {
            let prod = cartan(comp[a], comp[b]) * cartan(comp[b], comp[a]);
            if prod.is_zero() {
                continue;
            }
            edges += 1;
            degree[a] += 1;
            degree[b] += 1;
            if prod == int(2) {
                double += 1;
            } else if prod != int(1) {
                return None;
            }
        }
    }
    if edges != r - 1 {
        return None;
    }
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    if double == 0 {
        if max_deg <= 2 {
            return Some(CartanType::new(Family::A, r));
        }
        // D_r: one trivalent node with two arms of length one
        let branch: Vec<usize> = (0..r).filter(|&a| degree[a] == 3).collect();
        if branch.len() != 1 || max_deg != 3 {
            return None;
        }
        let b = branch[0];
        let leaves = (0..r)
            .filter(|&a| degree[a] == 1 && !cartan(comp[a], comp[b]).is_zero())
            .count();
        return (leaves >= 2).then(|| CartanType::new(Family::D, r));
    }
    if double != 1 || max_deg > 2 {
        return None;
    }
    let norms: Vec<Rational> = comp.iter().map(|&i| simple[i].norm_sq()).collect();
    let longest = norms.iter().max().cloned()?;
    let long = norms.iter().filter(|n| **n == longest).count();
    let short = r - long;
    if r == 2 {
        Some(CartanType::new(Family::B, 2))
    } else if short == 1 {
        Some(CartanType::new(Family::B, r))
    } else if long == 1 {
        Some(CartanType::new(Family::C, r))
    } else {
        None
    }
}

/// Dominant with integral simple-coroot pairings.
pub fn is_dominant_integral(rs: &RootSystem, lambda: &Weight) -> bool {
    rs.fundamental_coefficients(lambda)
        .iter()
        .all(|c| is_integer(c) && !c.is_negative())
}
