// For `sl_4`, the class of `Lambda^2` has index 2 even though the smallest
// module in it has dimension 6: `dim S^2 C^4 = 10` is not a multiple of 6.

use goldie::lattice::schur_class_of;
use goldie::repdim::{d_psi, weyl_dim, DPsiConfig};
use goldie::rootsys::{Family, RootSystem, Weight};

pub fn run() -> goldie::Result<()> {
    let rs = RootSystem::irreducible(Family::A, 3)?;
    let wedge2 = rs.weight(Weight::from_ints(&[1, 1, 0, 0]).0)?;
    let sym2 = rs.weight(Weight::from_ints(&[2, 0, 0, 0]).0)?;
    let class = schur_class_of(&rs, &wedge2)?;
    println!("dim Lambda^2 = {}", weyl_dim(&rs, &wedge2)?);
    println!("dim S^2      = {} (same class: {})", weyl_dim(&rs, &sym2)?, class.contains(&sym2)?);
    let d = d_psi(&rs, &class, &DPsiConfig::default())?;
    println!("d = {} ({}, levels scanned {})", d.value, d.status, d.bound_used);
    for w in &d.witnesses {
        println!("  gcd dropped at ({}) with dim {}", w.weight, w.dim);
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
