// Generalized self-distributive structures and their axiom reports.

use vbraid::gsd::{braided_coalgebra_check, from_finite_shelf, from_leibniz, from_uaa, validate};
use vbraid::linrep::StructureConstants;
use vbraid::sdstruct::{dihedral_quandle, FiniteRackTable};

pub fn run_example() -> vbraid::Result<()> {
    let structures = [
        ("dihedral3", from_finite_shelf(&dihedral_quandle(3)?)?),
        (
            "a*b = a+1 mod 3",
            from_finite_shelf(&FiniteRackTable::from_fn(3, |a, _| (a + 1) % 3)?)?,
        ),
        (
            "dual numbers",
            from_uaa(&StructureConstants::dual_numbers())?,
        ),
        (
            "leibniz",
            from_leibniz(&StructureConstants::solvable_leibniz())?,
        ),
    ];
    for (name, g) in &structures {
        let r = validate(g);
        println!(
            "{name:16} shelf {:5} rack {:5} spindle {:5} failures {:?}",
            r.is_shelf(),
            r.is_rack(),
            r.is_spindle(),
            r.failures()
        );
        if r.is_shelf() {
            println!("{:16} {:?}", "", braided_coalgebra_check(g)?);
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("gsd structures example");
}
