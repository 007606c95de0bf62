// Braid actions on racks: the cyclic rack, the forbidden move on a dihedral
// quandle, and the Artin action on a free group.

use vbraid::action::{apply_word, rack_pair, validate_pair_on, ActionPair};
use vbraid::braid::{forbidden_pair, parse_word};
use vbraid::sdstruct::{artin_apply, dihedral_quandle, Carrier, CyclicRack, FreeGroupWord};

pub fn run_example() -> vbraid::Result<()> {
    let cyclic = rack_pair(CyclicRack::new())?;
    let t = vec![3.into(), 5.into()];
    let out = apply_word(&cyclic, &parse_word("s1", 2)?, &t)?;
    println!("cyclic rack: s1 . (3, 5) = ({}, {})", out[0], out[1]);
    let back = apply_word(&cyclic, &parse_word("S1 s1", 2)?, &t)?;
    assert_eq!(back, t);

    let d3 = dihedral_quandle(3)?;
    let pair = rack_pair(d3.clone())?;
    let report = validate_pair_on(&pair, &d3.samples())?;
    println!("dihedral3 pair passes: {}", report.passes());
    let (lhs, rhs) = forbidden_pair(3, 1)?;
    let agree = pair
        .probe_tuples(3)
        .iter()
        .all(|p| apply_word(&pair, &lhs, p).ok() == apply_word(&pair, &rhs, p).ok());
    println!("{lhs}  vs  {rhs}: same action on dihedral3 = {agree}");

    let x1: FreeGroupWord = "x1".parse()?;
    let image = artin_apply(&parse_word("s1 s2", 3)?, &x1)?;
    println!("Artin action of s1 s2 on x1: {image}");
    Ok(())
}

fn main() {
    run_example().expect("rack actions example");
}
