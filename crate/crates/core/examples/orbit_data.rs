// Nilpotent orbit data read off partitions.

use goldie::nilorbit::{all_partitions, h_and_grading, ClassicalFamily, OrbitDatum};

pub fn run() -> goldie::Result<()> {
    for n in 2..=6 {
        let o = OrbitDatum::parse(ClassicalFamily::Sp, &format!("2^{n}"))?;
        println!(
            "sp{:<3} (2^{n}): codim {:<3} Q = {:<6} |A| = {}",
            2 * n,
            o.centralizer_dim,
            o.reductive_centralizer.to_string(),
            o.component_group_order
        );
    }
    println!();
    for p in all_partitions(ClassicalFamily::So, 7) {
        let o = OrbitDatum::new(&p)?;
        let g = h_and_grading(&p)?;
        println!(
            "so7 ({:<7}) dim {:<3} Q = {:<12} even {:<5} grading {:?}",
            p.to_string(),
            o.orbit_dim(),
            o.reductive_centralizer.to_string(),
            o.is_even,
            g.dims
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
