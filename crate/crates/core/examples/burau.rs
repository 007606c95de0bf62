// The virtual Burau representation over Z[t, 1/t].

use vbraid::braid::{forbidden_pair, parse_word};
use vbraid::linrep::{burau_object, check_relations, rho_word};

pub fn run_example() -> vbraid::Result<()> {
    let obj = burau_object();
    let w = parse_word("s1 s1", 2)?;
    println!("rho(s1 s1) =\n{}", rho_word(&obj, &w)?);

    let report = check_relations(&obj, 3)?;
    println!(
        "{} relations on 3 strands, {} failures",
        report.checked,
        report.failures.len()
    );

    let (a, b) = forbidden_pair(3, 1)?;
    println!(
        "forbidden move holds for Burau: {}",
        rho_word(&obj, &a)? == rho_word(&obj, &b)?
    );
    Ok(())
}

fn main() {
    run_example().expect("burau example");
}
