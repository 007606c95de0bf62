// Terms of free shelves: invariants, bounded equality and order, and
// devirtualization.

use vbraid::freeshelf::{
    dehornoy_less, devirtualize, equal_in_free_shelf, term_invariants, SearchBudget, ShelfTerm,
};

pub fn run_example() -> vbraid::Result<()> {
    let budget = SearchBudget::default();
    // (a*b)*c = (a*c)*(b*c)
    let lhs: ShelfTerm = "((x0*x1)*x2)".parse()?;
    let rhs: ShelfTerm = "((x0*x2)*(x1*x2))".parse()?;
    println!(
        "{lhs} = {rhs}: {:?}",
        equal_in_free_shelf(&lhs, &rhs, budget)
    );

    let inv = term_invariants(&rhs);
    let multiset: Vec<String> = inv.first_multiset.iter().map(ToString::to_string).collect();
    println!(
        "length {} first {} multiset [{}]",
        inv.length,
        inv.first,
        multiset.join(", ")
    );

    let x: ShelfTerm = "x0".parse()?;
    let xx = x.op(&x);
    println!("{x} < {xx}: {:?}", dehornoy_less(&x, &xx, budget));

    let v: ShelfTerm = "((x0*x-1)*x2)".parse()?;
    println!("devirtualized {v} -> {}", devirtualize(&v));
    Ok(())
}

fn main() {
    run_example().expect("free shelf example");
}
