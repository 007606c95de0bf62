// Searching for short positive 2-strand virtual braids that the free shelf
// on one generator cannot tell apart.

use vbraid::action::{collision_scan, rack_pair, ScanOptions};
use vbraid::freeshelf::{FreeShelf, ShelfTerm};

pub fn run_example() -> vbraid::Result<()> {
    let pair = rack_pair(FreeShelf::real())?;
    let x = ShelfTerm::x(0);
    let comb = x.op(&x).op(&x);
    let probes = vec![vec![x.clone(), x.clone()], vec![x, comb]];
    let opts = ScanOptions {
        positive: true,
        reduced_only: true,
        use_forgetful: true,
    };
    let report = collision_scan(&pair, 2, 5, &probes, opts)?;
    println!(
        "{} words, {} collisions, {} undecided",
        report.words_scanned,
        report.collisions.len(),
        report.undecided.len()
    );
    Ok(())
}

fn main() {
    run_example().expect("faithfulness scan example");
}
