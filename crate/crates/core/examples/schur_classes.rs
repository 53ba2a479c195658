// Weight lattice modulo root lattice, one minuscule representative per class.

use goldie::lattice::all_schur_classes;
use goldie::repdim::{d_psi, DPsiConfig};
use goldie::rootsys::RootSystem;

pub fn run() -> goldie::Result<()> {
    for name in ["A1", "A3", "B3", "C3", "D4", "D5", "A1xB2"] {
        let rs: RootSystem = name.parse()?;
        let classes = all_schur_classes(&rs);
        println!("{rs}: {} classes", classes.len());
        for c in &classes {
            let d = d_psi(&rs, c, &DPsiConfig::default())?;
            println!("  ({}) d = {}", c.representative(), d.value);
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
