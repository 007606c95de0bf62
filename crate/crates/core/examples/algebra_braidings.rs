// Braidings built from algebras: a unital associative algebra, a Leibniz
// algebra and the group algebra of S3.

use vbraid::linrep::{
    assoc_braiding, check_object, check_relations, group_hopf_braiding, leibniz_braiding,
    StructureConstants,
};
use vbraid::sdstruct::FiniteGroup;

pub fn run_example() -> vbraid::Result<()> {
    let objects = [
        (
            "dual numbers",
            assoc_braiding(&StructureConstants::dual_numbers())?,
        ),
        (
            "leibniz [e1,e2] = e1",
            leibniz_braiding(&StructureConstants::solvable_leibniz())?,
        ),
        (
            "group algebra of S3",
            group_hopf_braiding(&FiniteGroup::symmetric3()),
        ),
    ];
    for (name, obj) in &objects {
        let r = check_object(obj)?;
        let rel = check_relations(obj, 3)?;
        println!(
            "{name:22} dim {}  yb {}  invertible {:?}  relation failures {}",
            obj.dim(),
            r.yang_baxter,
            r.invertible,
            rel.failures.len()
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("algebra braidings example");
}
