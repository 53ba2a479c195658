// Integral roots at `rho/2` for `sp_2n`. Read on the dual side, the
// integral subalgebra of `so_{2n+1}` has dimension `n^2`; taking the
// integral roots of `B_n` at the same coordinates instead gives `B x B`.

use goldie::lattice::{dual_integral_subsystem, integral_subsystem};
use goldie::number::frac;
use goldie::rootsys::{Family, RootSystem};

pub fn run() -> goldie::Result<()> {
    for n in 3..=10 {
        let g = RootSystem::irreducible(Family::C, n)?;
        let half = g.rho().scale(&frac(1, 2));
        let dual = dual_integral_subsystem(&g, &half)?;
        let b = g.dual();
        let literal = integral_subsystem(&b, &b.weight(half.0.clone())?)?;
        println!(
            "n={n:<2} dual side: {:<10} dim {:<4} (n^2 = {:<3})  roots of {b} at the same point: {:<10} dim {}",
            dual.type_guess.to_string(),
            dual.dim,
            n * n,
            literal.type_guess.to_string(),
            literal.dim
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}
