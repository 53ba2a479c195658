// `dim V / d_V` for `sp_2n` at `rho/2`, n = 3..12.

use goldie::pipeline::premet_example;

pub fn run() -> goldie::Result<()> {
    println!("{:>3} {:<6} {:>6} {:>6} {:>4} {:>2} {:>6}", "n", "q", "dim V", "d_V", "Grk", "a", "codim");
    for n in 3..=12 {
        let r = premet_example(n)?;
        println!(
            "{n:>3} {:<6} {:>6} {:>6} {:>4} {:>2} {:>6}",
            r.q_type, r.dim_v, r.d_v.value, r.grk_bound, r.a_orbit_size, r.ideal_codim
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
