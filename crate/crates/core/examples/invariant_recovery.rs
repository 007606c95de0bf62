// Reading off the permutation, the number of crossings and the under-strand
// multisets of a positive virtual braid from its action on free virtual shelves.

use vbraid::action::recover_invariants;
use vbraid::braid::parse_word;

pub fn run_example() -> vbraid::Result<()> {
    for (text, n) in [("s1 z2 s1", 3), ("s1 s2 s1 z3", 4), ("z1 s1 s1", 2)] {
        let w = parse_word(text, n)?;
        let rec = recover_invariants(&w)?;
        println!(
            "{w:14} perm {:10} sigmas {}  under {:?}",
            rec.forgetful.to_string(),
            rec.sigma_count,
            rec.under
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("invariant recovery example");
}
