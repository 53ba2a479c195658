// Both half-spinor classes of `so_{2n}` have index `2^(n-1)`.

use goldie::lattice::schur_class_of;
use goldie::repdim::{d_psi, DPsiConfig};
use goldie::rootsys::{Family, RootSystem};

pub fn run() -> goldie::Result<()> {
    for n in 3..=6 {
        let rs = RootSystem::irreducible(Family::D, n)?;
        let fw = rs.fundamental_weights();
        for w in &fw[n - 2..] {
            let class = schur_class_of(&rs, w)?;
            let d = d_psi(&rs, &class, &DPsiConfig::default())?;
            println!("{rs} class of ({w}): d = {} ({})", d.value, d.status);
        }
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
