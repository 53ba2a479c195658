// How `t_Q` acts on the slice module for the orbit `(2^n)` at `rho/2`.

use goldie::nilorbit::{ClassicalFamily, OrbitDatum};
use goldie::number::{frac, int};
use goldie::slice::{even_identity_check, rho_zero, underline_character, SliceContext};

pub fn run() -> goldie::Result<()> {
    for n in 3..=12 {
        let orbit = OrbitDatum::parse(ClassicalFamily::Sp, &format!("2^{n}"))?;
        let ctx = SliceContext::new(&orbit, None)?;
        let rho = ctx.g().rho();
        let half = rho.scale(&frac(1, 2));
        println!(
            "n={n:<2} rho|tQ = ({})  2rho0|tQ = ({})  character = ({})  identity {}",
            ctx.restrict_to_tq(&rho)?,
            ctx.restrict_to_tq(&rho_zero(&ctx).scale(&int(2)))?,
            underline_character(&half, &ctx)?,
            even_identity_check(&ctx, &half)?
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
