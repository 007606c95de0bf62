use std::collections::BTreeSet;

use vbraid::freeshelf::{
    certify_distinct, dehornoy_less, devirtualize, enumerate_terms, equal_in_free_shelf,
    ld_neighbors, term_invariants, term_key, Direction, Label, LaverTable, OrderDecision,
    SearchBudget, ShelfTerm,
};
use vbraid::sdstruct::EqDecision;

fn small_terms(leaves: usize, subs: &[i64]) -> Vec<ShelfTerm> {
    let labels: Vec<Label> = subs.iter().map(|&k| Label::sub(k)).collect();
    enumerate_terms(leaves, &labels)
}

fn budget() -> SearchBudget {
    SearchBudget {
        depth: 8,
        max_visited: 100_000,
    }
}

#[test]
fn invariants_are_constant_on_rewrites() {
    for t in small_terms(5, &[0, 1]) {
        let key = term_key(&t);
        for dir in [Direction::Expand, Direction::Contract] {
            for u in ld_neighbors(&t, dir) {
                assert_eq!(term_key(&u), key, "{t} -> {u}");
                assert!(!certify_distinct(&t, &u));
            }
        }
    }
}

#[test]
fn expand_and_contract_are_inverse() {
    for t in small_terms(5, &[0, 1]) {
        for u in ld_neighbors(&t, Direction::Expand) {
            assert!(
                ld_neighbors(&u, Direction::Contract).contains(&t),
                "{t} -> {u}"
            );
        }
    }
}

#[test]
fn equality_is_sound_on_neighbors() {
    for t in small_terms(4, &[0, 1]) {
        for u in ld_neighbors(&t, Direction::Expand) {
            assert_eq!(equal_in_free_shelf(&t, &u, budget()), EqDecision::Equal);
            assert_eq!(equal_in_free_shelf(&u, &t, budget()), EqDecision::Equal);
        }
    }
}

#[test]
fn distinct_certificates_are_symmetric() {
    let terms = small_terms(4, &[0]);
    for a in &terms {
        for b in &terms {
            assert_eq!(certify_distinct(a, b), certify_distinct(b, a));
            if a == b {
                assert!(!certify_distinct(a, b));
            }
            let d = equal_in_free_shelf(a, b, budget());
            assert_eq!(d, equal_in_free_shelf(b, a, budget()), "{a} vs {b}");
        }
    }
}

#[test]
fn dehornoy_order_is_antisymmetric() {
    let small = SearchBudget {
        depth: 4,
        max_visited: 5_000,
    };
    let terms = small_terms(4, &[0]);
    for a in &terms {
        for b in &terms {
            let ab = dehornoy_less(a, b, small) == OrderDecision::Less;
            let ba = dehornoy_less(b, a, small) == OrderDecision::Less;
            assert!(!(ab && ba), "{a} and {b}");
        }
    }
    let x = ShelfTerm::x(0);
    assert_eq!(dehornoy_less(&x, &x.op(&x), budget()), OrderDecision::Less);
}

#[test]
fn devirtualize_commutes_with_expansion() {
    for t in small_terms(4, &[0, 1, 2]) {
        let lhs: BTreeSet<ShelfTerm> = ld_neighbors(&t, Direction::Expand)
            .iter()
            .map(devirtualize)
            .collect();
        let rhs = ld_neighbors(&devirtualize(&t), Direction::Expand);
        assert_eq!(lhs, rhs, "{t}");
    }
}

#[test]
fn devirtualize_maps_contractions_into_contractions() {
    let mut strict = 0;
    for t in small_terms(4, &[0, 1, 2]) {
        let lhs: BTreeSet<ShelfTerm> = ld_neighbors(&t, Direction::Contract)
            .iter()
            .map(devirtualize)
            .collect();
        let rhs = ld_neighbors(&devirtualize(&t), Direction::Contract);
        assert!(lhs.is_subset(&rhs), "{t}");
        strict += usize::from(lhs != rhs);
    }
    // (x0∗x1)∗(x1∗x2) cannot contract, its devirtualization can
    let t: ShelfTerm = "(x0*x1)*(x1*x2)".parse().unwrap();
    assert!(ld_neighbors(&t, Direction::Contract).is_empty());
    assert!(!ld_neighbors(&devirtualize(&t), Direction::Contract).is_empty());
    assert!(strict > 0);
}

#[test]
fn laver_tables_are_shelves() {
    for n in 0..=3 {
        let l = LaverTable::new(n);
        let m = l.size();
        for a in 1..=m {
            for b in 1..=m {
                for c in 1..=m {
                    assert_eq!(l.star(a, l.star(b, c)), l.star(l.star(a, b), l.star(a, c)));
                }
            }
        }
    }
}

#[test]
fn term_invariants_of_combs() {
    let c = ShelfTerm::comb(3, 4);
    let inv = term_invariants(&c);
    assert_eq!(inv.length, 4);
    assert_eq!(inv.first, Label::sub(3));
    assert_eq!(c.leaves(), 5);
}
