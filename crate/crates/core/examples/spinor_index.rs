// The index of the spinor class of `so_{2n+1}` is `2^n`.

use goldie::lattice::schur_class_of;
use goldie::repdim::{d_psi, DPsiConfig};
use goldie::rootsys::{Family, RootSystem};

pub fn run() -> goldie::Result<()> {
    for n in 2..=6 {
        let rs = RootSystem::irreducible(Family::B, n)?;
        let spinor = rs.fundamental_weights().pop().expect("rank >= 1");
        let class = schur_class_of(&rs, &spinor)?;
        let d = d_psi(&rs, &class, &DPsiConfig::default())?;
        println!("{rs}: d = {} ({})", d.value, d.status);
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
