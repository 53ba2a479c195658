// Weyl dimensions and orbit sizes for a few familiar modules.

use goldie::repdim::weyl_dim;
use goldie::rootsys::{parse_weight, RootSystem};

pub fn run() -> goldie::Result<()> {
    let cases = [
        ("A2", "fw:[1,1]"),
        ("A3", "fw:[0,2,0]"),
        ("B2", "1/2,1/2"),
        ("C2", "2,0"),
        ("D4", "1,1,0,0"),
        ("B3xA1", "1/2,1/2,1/2,1,0"),
    ];
    println!("{:<8} {:<22} {:>6} {:>6}", "type", "weight", "dim", "|W.w|");
    for (rs, w) in cases {
        let rs: RootSystem = rs.parse()?;
        let w = parse_weight(&rs, w)?;
        println!(
            "{:<8} {:<22} {:>6} {:>6}",
            rs.to_string(),
            w.to_string(),
            weyl_dim(&rs, &w)?,
            rs.orbit_size(&w)?
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
