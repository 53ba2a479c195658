//! The `sp_2n`, `J(rho/2)` example end to end, and the bound `dim V / d_V`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{dual_integral_subsystem, schur_class_of};
use crate::nilorbit::{ClassicalFamily, OrbitDatum};
use crate::number::{frac, pow2};
use crate::repdim::{d_psi, weyl_dim, DPsiConfig, DPsiResult};
use crate::rootsys::{CartanType, Family, RootSystem, Weight};
use crate::slice::{
    even_identity_check, irreducibility_verdict, is_principal_in_centralizer, underline_character,
    ReductiveAlgebra, SliceContext, Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub detail: String,
    pub name: String,
    pub passed: bool,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Self {
            detail,
            name: name.to_string(),
            passed,
        }
    }
}

/// Fields are declared in key order; the JSON form is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub a_orbit_size: u64,
    /// `true` when the bound is 1, which forces `Grk(J) = 1`.
    pub bound_is_exact: bool,
    #[serde(rename = "d_V")]
    pub d_v: DPsiResult,
    #[serde(rename = "dim_V", with = "crate::number::serde_exact::natural")]
    pub dim_v: BigUint,
    pub g: String,
    #[serde(with = "crate::number::serde_exact::natural")]
    pub grk_bound: BigUint,
    /// In epsilon-coordinates of `q`.
    pub highest_weight_omega: Weight,
    #[serde(with = "crate::number::serde_exact::natural")]
    pub ideal_codim: BigUint,
    pub lambda: Weight,
    /// The same weight in eta-coordinates on `t_Q`.
    pub omega_eta: Weight,
    pub orbit: String,
    pub q_type: String,
    pub verdicts: Vec<Check>,
}

impl BoundReport {
    /// Checks `d_V | dim V`, `grk_bound = dim V / d_V` and
    /// `ideal_codim = a * (dim V)^2`.
    pub fn validate(&self) -> Result<()> {
        let quotient = goldie_bound(&self.dim_v, &self.d_v)?;
        if quotient != self.grk_bound {
            return Err(Error::StepFailed {
                step: "report".into(),
                detail: format!("grk_bound {} != dim_V / d_V = {quotient}", self.grk_bound),
            });
        }
        let codim = BigUint::from(self.a_orbit_size) * &self.dim_v * &self.dim_v;
        if codim != self.ideal_codim {
            return Err(Error::StepFailed {
                step: "report".into(),
                detail: format!("ideal_codim {} != a * dim_V^2 = {codim}", self.ideal_codim),
            });
        }
        if self.bound_is_exact != self.grk_bound.is_one() {
            return Err(Error::StepFailed {
                step: "report".into(),
                detail: "bound_is_exact disagrees with grk_bound".into(),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let report: Self = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        report.validate()?;
        Ok(report)
    }
}

/// `dim V / d_V`, which must be exact since `V` itself has class `psi`.
pub fn goldie_bound(dim_v: &BigUint, d: &DPsiResult) -> Result<BigUint> {
    if d.value.is_zero() {
        return Err(Error::NotDivisible {
            dim: dim_v.to_string(),
            divisor: "0".into(),
        });
    }
    let (q, r) = dim_v.div_rem(&d.value);
    if !r.is_zero() {
        return Err(Error::NotDivisible {
            dim: dim_v.to_string(),
            divisor: d.value.to_string(),
        });
    }
    Ok(q)
}

fn ensure(step: &str, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::StepFailed {
            step: step.into(),
            detail: detail(),
        })
    }
}

fn at_step<T>(step: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::StepFailed { .. } | Error::BudgetExceeded { .. } => e,
        other => Error::StepFailed {
            step: step.into(),
            detail: other.to_string(),
        },
    })
}

pub fn premet_example(n: usize) -> Result<BoundReport> {
    premet_example_with(n, &DPsiConfig::default())
}

/// `g = sp_2n`, `J = J(rho/2)`, orbit `(2^n)`, `Q = O_n`.
pub fn premet_example_with(n: usize, config: &DPsiConfig) -> Result<BoundReport> {
    if n < 3 {
        return Err(Error::UnsupportedOrbit(format!("premet example needs n >= 3, got {n}")));
    }
    let mut verdicts = Vec::new();

    // step 1: associated variety has the dimension of the orbit
    let g = at_step("step1", RootSystem::irreducible(Family::C, n))?;
    let lambda = g.rho().scale(&frac(1, 2));
    let integral = at_step("step1", dual_integral_subsystem(&g, &lambda))?;
    let expected = [
        CartanType::new(Family::B, n / 2),
        CartanType::new(Family::D, n.div_ceil(2)),
    ];
    ensure("step1", integral.dim == n * n, || format!("dim g_int = {}, expected {}", integral.dim, n * n))?;
    ensure("step1", integral.type_guess.matches(&expected), || {
        format!("integral type {}", integral.type_guess)
    })?;
    verdicts.push(Check::new(
        "integral_dim",
        true,
        format!("{} with dim {}", integral.type_guess, integral.dim),
    ));

    let orbit = at_step("step1", OrbitDatum::parse(ClassicalFamily::Sp, &format!("2^{n}")))?;
    let codim = orbit.centralizer_dim;
    ensure("step1", codim == n * n, || format!("orbit codim {codim}"))?;
    verdicts.push(Check::new("orbit_codim", true, format!("codim {codim}")));

    // step 2: t_Q and a dominant generic nu
    let ctx = at_step("step2", SliceContext::new(&orbit, None))?;
    ensure("step2", g.is_dominant(ctx.nu_in_t()), || format!("nu = {} not dominant", ctx.nu_in_t()))?;

    // step 3: e is principal in the centralizer of nu
    let principal = is_principal_in_centralizer(&ctx);
    ensure("step3", principal, || "e is not principal in z(nu)".into())?;
    verdicts.push(Check::new("principal_in_centralizer", true, "dim of slice module is 1".into()));

    // step 4: t_Q acts by half the sum of the etas
    let m = n / 2;
    ensure("step4", at_step("step4", even_identity_check(&ctx, &lambda))?, || {
        "delta restriction identity fails".into()
    })?;
    verdicts.push(Check::new("even_identity", true, "delta|t_Q = half the h-moving roots".into()));
    let omega = at_step("step4", underline_character(&lambda, &ctx))?;
    let half_sum = Weight(vec![frac(1, 2); m]);
    ensure("step4", omega == half_sum, || format!("character {omega}"))?;
    verdicts.push(Check::new("character", true, format!("({omega})")));

    // step 5: irreducible over q
    let q = at_step("step5", ReductiveAlgebra::from_orbit(&orbit))?;
    let verdict = at_step("step5", irreducibility_verdict(&ctx, &omega, &q, principal))?;
    let Verdict::Irreducible(omega_q) = verdict else {
        return Err(Error::StepFailed {
            step: "step5".into(),
            detail: format!("{verdict:?}"),
        });
    };
    verdicts.push(Check::new("irreducible", true, format!("highest weight {omega_q} of {q}")));

    // step 6: the bound
    let qrs = q.root_system().expect("semisimple q").clone();
    let dim_v = at_step("step6", weyl_dim(&qrs, &omega_q))?;
    let class = at_step("step6", schur_class_of(&qrs, &omega_q))?;
    let d_v = at_step("step6", d_psi(&qrs, &class, config))?;
    let grk_bound = at_step("step6", goldie_bound(&dim_v, &d_v))?;
    verdicts.push(Check::new("d_divides_dim", true, format!("{} | {dim_v}", d_v.value)));

    let a_orbit_size: u64 = if n.is_multiple_of(2) { 2 } else { 1 };
    let ideal_codim = BigUint::from(a_orbit_size) * &dim_v * &dim_v;
    ensure("step6", ideal_codim == pow2(n - 1), || {
        format!("ideal codim {ideal_codim}, expected 2^{}", n - 1)
    })?;

    let report = BoundReport {
        a_orbit_size,
        bound_is_exact: grk_bound.is_one(),
        d_v,
        dim_v,
        g: g.to_string(),
        grk_bound,
        highest_weight_omega: omega_q,
        ideal_codim,
        lambda,
        omega_eta: omega,
        orbit: orbit.partition.to_string(),
        q_type: q.to_string(),
        verdicts,
    };
    report.validate()?;
    Ok(report)
}
