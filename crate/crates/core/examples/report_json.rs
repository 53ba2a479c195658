// A bound report as canonical JSON, parsed back and checked.

use goldie::pipeline::{premet_example, BoundReport};

pub fn run() -> goldie::Result<()> {
    let report = premet_example(6)?;
    let text = report.to_json();
    println!("{text}");
    let back = BoundReport::from_json(&text)?;
    assert_eq!(back.to_json(), text);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}
