// Homology of the dihedral quandle of order 3 and of the dual numbers, from
// the face maps of their braidings.

use vbraid::gsd::{braiding_of, covector, from_finite_shelf, from_uaa};
use vbraid::homology::{
    check_identities, degeneracies_from_delta, gsd_faces, homology_of, normalized_complex,
    total_differential, Differential, HomologyResult,
};
use vbraid::linrep::StructureConstants;
use vbraid::sdstruct::dihedral_quandle;

fn show(label: &str, h: &HomologyResult) {
    for d in &h.degrees {
        println!(
            "{label:12} H_{} = Z^{} torsion {:?}",
            d.degree, d.betti, d.torsion
        );
    }
}

pub fn run_example() -> vbraid::Result<()> {
    let g = from_finite_shelf(&dihedral_quandle(3)?)?;
    let eps = covector(3, &[1, 1, 1])?;
    let complex = degeneracies_from_delta(gsd_faces(&g, &eps, 4)?, &braiding_of(&g)?, g.delta())?;
    let report = check_identities(&complex);
    println!(
        "levels: {:?} / {:?}",
        report.first_level, report.second_level
    );

    let chain = total_differential(&complex, Differential::DIFFERENCE)?;
    show("rack", &homology_of(&chain)?);
    show(
        "quandle",
        &homology_of(&normalized_complex(&complex, &chain)?)?,
    );

    let uaa = from_uaa(&StructureConstants::dual_numbers())?;
    let bar = gsd_faces(&uaa, &covector(2, &[1, 0])?, 4)?;
    show(
        "bar",
        &homology_of(&total_differential(&bar, Differential::FIRST)?)?,
    );
    Ok(())
}

fn main() {
    run_example().expect("rack homology example");
}
