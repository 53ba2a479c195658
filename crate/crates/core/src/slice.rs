//! Weight-level shadows of the W-algebra slice: the negative roots cut out
//! by a one-parameter subgroup `nu` of `Q`, the `delta`-shift, `rho_0`,
//! restriction to `t_Q` and the highest-weight irreducibility criterion.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{schur_class_of, simple_system, SchurClass};
use crate::nilorbit::{GroupKind, OrbitDatum, QFactor, TqEmbedding};
use crate::number::{frac, int, Rational};
use crate::rootsys::{CartanType, Family, Root, RootSystem, Weight};

#[derive(Debug, Clone)]
pub struct SliceContext {
    g: RootSystem,
    orbit: OrbitDatum,
    nu: Vec<Rational>,
    nu_t: Weight,
    embedding: TqEmbedding,
}

impl SliceContext {
    /// Uses the orbit's own `t_Q` embedding. `nu` defaults to
    /// `(r, r-1, ..., 1)` on `t_Q = C^r`.
    pub fn new(orbit: &OrbitDatum, nu: Option<Vec<Rational>>) -> Result<Self> {
        Self::with_embedding(orbit, nu, orbit.tq_embedding().clone())
    }

    pub fn with_embedding(
        orbit: &OrbitDatum,
        nu: Option<Vec<Rational>>,
        embedding: TqEmbedding,
    ) -> Result<Self> {
        let g = orbit.root_system()?;
        let r = embedding.dim();
        if embedding.ambient != g.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: g.ambient_dim(),
                got: embedding.ambient,
            });
        }
        let nu = nu.unwrap_or_else(|| (1..=r as i64).rev().map(int).collect());
        if nu.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: nu.len(),
            });
        }
        let nu_t = embedding.push(&nu);
        // generic: the roots vanishing on nu are exactly those vanishing on t_Q
        for a in g.roots() {
            if a.vector.dot(&nu_t).is_zero() && !embedding.pull(&a.vector).is_zero() {
                return Err(Error::NonGenericNu(a.to_string()));
            }
        }
        Ok(Self {
            g,
            orbit: orbit.clone(),
            nu,
            nu_t,
            embedding,
        })
    }

    pub fn g(&self) -> &RootSystem {
        &self.g
    }

    pub fn orbit(&self) -> &OrbitDatum {
        &self.orbit
    }

    /// `nu` in eta-coordinates.
    pub fn nu(&self) -> &[Rational] {
        &self.nu
    }

    /// `nu` pushed into `t`.
    pub fn nu_in_t(&self) -> &Weight {
        &self.nu_t
    }

    pub fn embedding(&self) -> &TqEmbedding {
        &self.embedding
    }

    fn h_value(&self, a: &Root) -> Rational {
        a.vector.dot(&self.orbit.h)
    }

    /// `{ beta : <beta, nu> < 0 }`.
    pub fn negative_roots(&self) -> Vec<Root> {
        self.g
            .roots()
            .into_iter()
            .filter(|a| a.vector.dot(&self.nu_t).is_negative())
            .collect()
    }

    /// Roots of the centralizer of `nu`.
    pub fn centralizer_roots(&self) -> Vec<Root> {
        self.g
            .roots()
            .into_iter()
            .filter(|a| a.vector.dot(&self.nu_t).is_zero())
            .collect()
    }

    fn sum_where(&self, roots: &[Root], keep: impl Fn(&Rational) -> bool) -> Weight {
        roots
            .iter()
            .filter(|a| keep(&self.h_value(a)))
            .fold(self.g.zero_weight(), |acc, a| &acc + &a.vector)
    }

    /// `pullback of lambda` along `t_Q -> t`, in eta-coordinates.
    pub fn restrict_to_tq(&self, lambda: &Weight) -> Result<Weight> {
        self.g.check_dim(lambda)?;
        Ok(self.embedding.pull(lambda))
    }
}

/// `delta = 1/2 sum_{alpha in D-, alpha(h) = -1} alpha + sum_{alpha in D-, alpha(h) <= -2} alpha`.
pub fn delta(ctx: &SliceContext) -> Weight {
    let neg = ctx.negative_roots();
    let minus_one = int(-1);
    let minus_two = int(-2);
    let odd = ctx.sum_where(&neg, |v| *v == minus_one);
    let deep = ctx.sum_where(&neg, |v| *v <= minus_two);
    &odd.scale(&frac(1, 2)) + &deep
}

/// Half the sum of the positive roots vanishing on `h`.
pub fn rho_zero(ctx: &SliceContext) -> Weight {
    let pos = ctx.g.positive_roots().to_vec();
    ctx.sum_where(&pos, Zero::is_zero).scale(&frac(1, 2))
}

pub fn restrict_to_tq(lambda: &Weight, ctx: &SliceContext) -> Result<Weight> {
    ctx.restrict_to_tq(lambda)
}

/// `(lambda - rho - delta)|_{t_Q}`.
pub fn underline_character(lambda: &Weight, ctx: &SliceContext) -> Result<Weight> {
    ctx.g.check_dim(lambda)?;
    let shifted = &(lambda - &ctx.g.rho()) - &delta(ctx);
    ctx.restrict_to_tq(&shifted)
}

/// Evaluates both sides of `delta|_{t_Q} = 1/2 (sum_{alpha in D-, alpha(h) != 0} alpha)|_{t_Q}`,
/// inserted into the character `(lambda - rho - delta)|_{t_Q}`.
pub fn even_identity_check(ctx: &SliceContext, lambda: &Weight) -> Result<bool> {
    if !ctx.orbit.is_even {
        return Err(Error::NotEvenOrbit(ctx.orbit.partition.to_string()));
    }
    ctx.g.check_dim(lambda)?;
    let neg = ctx.negative_roots();
    let moving = ctx.sum_where(&neg, |v| !v.is_zero()).scale(&frac(1, 2));
    let base = lambda - &ctx.g.rho();
    let lhs = ctx.restrict_to_tq(&(&base - &delta(ctx)))?;
    let rhs = ctx.restrict_to_tq(&(&base - &moving))?;
    Ok(lhs == rhs)
}

/// `true` when `e` is principal in the centralizer `l` of `nu`: `h` is
/// regular on `l` and every simple root (for the order `alpha(h) > 0`) takes
/// the value 2. In that case the slice module is one-dimensional.
pub fn is_principal_in_centralizer(ctx: &SliceContext) -> bool {
    let roots = ctx.centralizer_roots();
    if roots.iter().any(|a| ctx.h_value(a).is_zero()) {
        return false;
    }
    let positive: Vec<Root> = roots
        .into_iter()
        .filter(|a| ctx.h_value(a).is_positive())
        .collect();
    let two = int(2);
    simple_system(&positive)
        .iter()
        .all(|a| ctx.h_value(a) == two)
}

/// The semisimple part of `q = Lie(Q)` as a root system, with the map from
/// eta-coordinates on `t_Q` to its epsilon-coordinates. Low-rank factors are
/// realised through their `A`-type aliases; `O(1)` contributes nothing and
/// `O(2)` is an abelian summand.
#[derive(Debug, Clone)]
pub struct ReductiveAlgebra {
    factors: Vec<QFactor>,
    root_system: Option<RootSystem>,
    abelian_factors: Vec<QFactor>,
}

fn factor_type(f: &QFactor) -> Option<Vec<CartanType>> {
    let m = f.size;
    let k = m / 2;
    match (f.kind, m) {
        (GroupKind::O, 0..=2) => None,
        (GroupKind::O, 3) => Some(vec![CartanType::new(Family::A, 1)]),
        (GroupKind::O, 4) => Some(vec![CartanType::new(Family::A, 1); 2]),
        (GroupKind::O, _) if m % 2 == 1 => Some(vec![CartanType::new(Family::B, k)]),
        (GroupKind::O, _) => Some(vec![CartanType::new(Family::D, k)]),
        (GroupKind::Sp, 2) => Some(vec![CartanType::new(Family::A, 1)]),
        (GroupKind::Sp, _) if m == 0 => None,
        (GroupKind::Sp, _) => Some(vec![CartanType::new(Family::C, k)]),
    }
}

impl ReductiveAlgebra {
    pub fn from_orbit(orbit: &OrbitDatum) -> Result<Self> {
        let factors = orbit.reductive_centralizer.factors.clone();
        let mut types = Vec::new();
        let mut abelian = Vec::new();
        for f in &factors {
            match factor_type(f) {
                Some(t) => types.extend(t),
                None if f.kind == GroupKind::O && f.size == 2 => abelian.push(*f),
                None => {}
            }
        }
        let root_system = if types.is_empty() {
            None
        } else {
            Some(RootSystem::build(&types)?)
        };
        Ok(Self {
            factors,
            root_system,
            abelian_factors: abelian,
        })
    }

    pub fn factors(&self) -> &[QFactor] {
        &self.factors
    }

    pub fn root_system(&self) -> Option<&RootSystem> {
        self.root_system.as_ref()
    }

    /// No abelian summand (`O(2)` factor) and a non-trivial semisimple part.
    pub fn is_semisimple(&self) -> bool {
        self.abelian_factors.is_empty() && self.root_system.is_some()
    }

    /// Converts eta-coordinates on `t_Q` into weights of the semisimple part.
    pub fn to_q_weight(&self, eta: &Weight) -> Result<Weight> {
        let rank: usize = self.factors.iter().map(QFactor::torus_rank).sum();
        if eta.len() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                got: eta.len(),
            });
        }
        let Some(rs) = &self.root_system else {
            return Ok(Weight(Vec::new()));
        };
        let zero = Rational::zero();
        let mut out = Vec::with_capacity(rs.ambient_dim());
        let mut offset = 0;
        for f in &self.factors {
            let y = &eta.0[offset..offset + f.torus_rank()];
            match (f.kind, f.size) {
                (GroupKind::O, 0..=2) => {}
                (GroupKind::O, 3) => out.extend([&y[0] * int(2), zero.clone()]),
                (GroupKind::O, 4) => out.extend([
                    &y[0] - &y[1],
                    zero.clone(),
                    &y[0] + &y[1],
                    zero.clone(),
                ]),
                (GroupKind::Sp, 2) => out.extend([y[0].clone(), zero.clone()]),
                _ => out.extend(y.iter().cloned()),
            }
            offset += f.torus_rank();
        }
        rs.weight(out)
    }
}

impl fmt::Display for ReductiveAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.root_system {
            Some(rs) if self.abelian_factors.is_empty() => write!(f, "{rs}"),
            Some(rs) => write!(f, "{rs}+abelian({})", self.abelian_factors.len()),
            None => write!(f, "abelian({})", self.abelian_factors.len()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// (i) the slice module is one-dimensional.
    OneDimensionalSlice,
    /// (ii) `q` is semisimple.
    Semisimple,
    /// (iii) `t_Q` acts on the slice module by a minuscule weight.
    Minuscule,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::OneDimensionalSlice => "(i) dim of slice module is 1",
            Condition::Semisimple => "(ii) q is semisimple",
            Condition::Minuscule => "(iii) weight is minuscule",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Irreducible over `q` with this highest weight (in `q`-coordinates).
    Irreducible(Weight),
    Inconclusive(Condition),
}

/// Irreducibility of `V` over `q` from conditions (i)-(iii); `omega` is in
/// eta-coordinates.
pub fn irreducibility_verdict(
    ctx: &SliceContext,
    omega: &Weight,
    q: &ReductiveAlgebra,
    underline_dim_one: bool,
) -> Result<Verdict> {
    if omega.len() != ctx.embedding.dim() {
        return Err(Error::DimensionMismatch {
            expected: ctx.embedding.dim(),
            got: omega.len(),
        });
    }
    let q_weight = q.to_q_weight(omega)?;
    if let Some(rs) = q.root_system() {
        if !rs.is_dominant(&q_weight) {
            return Err(Error::NotDominant(omega.to_string()));
        }
    }
    if !underline_dim_one {
        return Ok(Verdict::Inconclusive(Condition::OneDimensionalSlice));
    }
    let Some(rs) = q.root_system().filter(|_| q.is_semisimple()) else {
        return Ok(Verdict::Inconclusive(Condition::Semisimple));
    };
    if !rs.is_minuscule(&q_weight)? {
        return Ok(Verdict::Inconclusive(Condition::Minuscule));
    }
    Ok(Verdict::Irreducible(q_weight))
}

/// Class of the `t_Q`-character `(lambda - rho - delta)|_{t_Q}` in the weight
/// lattice of `q` modulo its root lattice; every `t_Q`-weight of `V` lies in it.
pub fn slice_schur_class(ctx: &SliceContext, lambda: &Weight, q: &ReductiveAlgebra) -> Result<SchurClass> {
    let rs = q
        .root_system()
        .ok_or_else(|| Error::UnsupportedOrbit("q has no semisimple part".into()))?;
    let omega = underline_character(lambda, ctx)?;
    schur_class_of(rs, &q.to_q_weight(&omega)?)
}
