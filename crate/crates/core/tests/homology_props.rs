mod common;

use common::{int_rows, naive_invariant_factors, oracle_homology, rack_boundary};
use num_bigint::BigInt;
use vbraid::gsd::{braiding_of, covector, from_finite_shelf, from_leibniz, from_uaa, GsdStructure};
use vbraid::homology::{
    bidifferential_check, check_identities, degeneracies_from_delta, degenerate_subcomplex_check,
    faces_from_braiding, gsd_faces, homology_of, normalized_complex, total_differential,
    Differential, Level,
};
use vbraid::linrep::{rack_object, StructureConstants};
use vbraid::sdstruct::{alexander_quandle, dihedral_quandle, FiniteGroup, FiniteRackTable};
use vbraid::tensor::LocalMap;

fn ones(d: usize) -> LocalMap {
    covector(d, &vec![1; d]).unwrap()
}

/// Validated structures with a character.
fn instances() -> Vec<(&'static str, GsdStructure, LocalMap)> {
    let shelf = |t: FiniteRackTable| {
        let d = t.size();
        (from_finite_shelf(&t).unwrap(), ones(d))
    };
    let mut out = Vec::new();
    for (name, t) in [
        ("trivial1", FiniteRackTable::from_fn(1, |_, _| 0).unwrap()),
        ("dihedral3", dihedral_quandle(3).unwrap()),
        ("alexander5,2", alexander_quandle(5, 2).unwrap()),
        ("conj-s3", FiniteGroup::symmetric3().conjugation_quandle()),
        (
            "shift3",
            FiniteRackTable::from_fn(3, |a, _| (a + 1) % 3).unwrap(),
        ),
    ] {
        let (g, e) = shelf(t);
        out.push((name, g, e));
    }
    out.push((
        "dual-numbers",
        from_uaa(&StructureConstants::dual_numbers()).unwrap(),
        covector(2, &[1, 0]).unwrap(),
    ));
    out.push((
        "leibniz",
        from_leibniz(&StructureConstants::solvable_leibniz()).unwrap(),
        covector(3, &[1, 0, 0]).unwrap(),
    ));
    out
}

#[test]
fn gsd_faces_come_from_the_braiding() {
    for (name, g, eps) in instances() {
        let a = gsd_faces(&g, &eps, 3).unwrap();
        let b = faces_from_braiding(&braiding_of(&g).unwrap(), &eps, 3).unwrap();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn total_differentials_square_to_zero() {
    for (name, g, eps) in instances() {
        let top = if g.dim() > 3 { 3 } else { 4 };
        let c = gsd_faces(&g, &eps, top).unwrap();
        assert!(bidifferential_check(&c).unwrap().passes(), "{name}");
        for diff in ["ed", "de", "ed-de", "2*ed+3*de", "-ed+5*de"] {
            let chain = total_differential(&c, diff.parse().unwrap()).unwrap();
            assert!(chain.squares_to_zero(), "{name} {diff}");
        }
    }
}

#[test]
fn rack_homology_matches_direct_assembly() {
    let tables = [
        dihedral_quandle(3).unwrap(),
        FiniteRackTable::from_fn(2, |a, _| 1 - a).unwrap(),
        FiniteRackTable::from_fn(3, |a, _| (a + 1) % 3).unwrap(),
    ];
    for t in tables {
        let m = t.size();
        let c = faces_from_braiding(&rack_object(&t), &ones(m), 4).unwrap();
        let chain = total_differential(&c, Differential::DIFFERENCE).unwrap();
        // same boundary up to a global sign
        for n in 1..=4 {
            let direct = rack_boundary(|a, b| t.op_at(a, b), m, n);
            let ours = int_rows(chain.boundary(n));
            let neg: Vec<Vec<i128>> = direct
                .iter()
                .map(|r| r.iter().map(|x| -x).collect())
                .collect();
            assert!(ours == direct || ours == neg, "degree {n}");
        }
        let ranks: Vec<usize> = (0..=4).map(|n| m.pow(n)).collect();
        let boundaries: Vec<_> = (1..=4)
            .map(|n| rack_boundary(|a, b| t.op_at(a, b), m, n))
            .collect();
        let expect = oracle_homology(&ranks, &boundaries);
        let h = homology_of(&chain).unwrap();
        for (d, (betti, torsion)) in h.degrees.iter().zip(&expect) {
            assert_eq!(d.betti, *betti, "H_{}", d.degree);
            let got: Vec<i128> = d
                .torsion
                .iter()
                .map(|x| i128::try_from(x.clone()).unwrap())
                .collect();
            assert_eq!(&got, torsion, "H_{}", d.degree);
        }
    }
}

#[test]
fn euler_characteristic_of_truncated_complexes() {
    for (name, g, eps) in instances() {
        let top = if g.dim() > 3 { 3 } else { 4 };
        let c = gsd_faces(&g, &eps, top).unwrap();
        for diff in [
            Differential::FIRST,
            Differential::SECOND,
            Differential::DIFFERENCE,
        ] {
            let chain = total_differential(&c, diff).unwrap();
            let h = homology_of(&chain).unwrap();
            let last = naive_invariant_factors(int_rows(chain.boundary(top))).len() as i64;
            let sign = |n: usize| if n.is_multiple_of(2) { 1 } else { -1 };
            let lhs: i64 = (0..top).map(|n| sign(n) * chain.ranks[n] as i64).sum();
            let rhs: i64 = h
                .degrees
                .iter()
                .map(|d| sign(d.degree) * d.betti as i64)
                .sum::<i64>()
                + sign(top - 1) * last;
            assert_eq!(lhs, rhs, "{name}");
        }
    }
}

#[test]
fn one_point_rack_has_z_in_every_degree() {
    let t = FiniteRackTable::from_fn(1, |_, _| 0).unwrap();
    let c = faces_from_braiding(&rack_object(&t), &ones(1), 5).unwrap();
    let h = homology_of(&total_differential(&c, Differential::DIFFERENCE).unwrap()).unwrap();
    assert_eq!(h.degrees.len(), 5);
    for d in &h.degrees {
        assert_eq!((d.rank, d.betti), (1, 1));
        assert!(d.torsion.is_empty());
    }
}

#[test]
fn zero_differential_keeps_every_chain() {
    let t = dihedral_quandle(3).unwrap();
    let c = faces_from_braiding(&rack_object(&t), &ones(3), 3).unwrap();
    let chain = total_differential(&c, Differential { alpha: 0, beta: 0 }).unwrap();
    let h = homology_of(&chain).unwrap();
    for d in &h.degrees {
        assert_eq!(d.betti, d.rank);
    }
}

#[test]
fn degenerate_chains_form_a_subcomplex() {
    for (name, g, eps) in instances() {
        let report = vbraid::gsd::validate(&g);
        if !report.is_spindle() {
            continue;
        }
        let top = if g.dim() > 3 { 3 } else { 4 };
        let c = degeneracies_from_delta(
            gsd_faces(&g, &eps, top).unwrap(),
            &braiding_of(&g).unwrap(),
            g.delta(),
        )
        .unwrap();
        let levels = check_identities(&c);
        assert!(levels.first_level >= Some(Level::Weak), "{name}");
        for diff in [
            Differential::FIRST,
            Differential::SECOND,
            Differential::DIFFERENCE,
        ] {
            let chain = total_differential(&c, diff).unwrap();
            assert!(degenerate_subcomplex_check(&c, &chain).unwrap(), "{name}");
        }
    }
}

#[test]
fn quandle_homology_splits_off_the_degenerate_part() {
    let t = dihedral_quandle(3).unwrap();
    let g = from_finite_shelf(&t).unwrap();
    let c = degeneracies_from_delta(
        gsd_faces(&g, &ones(3), 4).unwrap(),
        &braiding_of(&g).unwrap(),
        g.delta(),
    )
    .unwrap();
    let chain = total_differential(&c, Differential::DIFFERENCE).unwrap();
    let norm = normalized_complex(&c, &chain).unwrap();
    // direct assembly on tuples with no two equal neighbours
    let tuples = |n: usize| -> Vec<Vec<usize>> {
        common::all_tuples(3, n)
            .into_iter()
            .filter(|x| x.windows(2).all(|w| w[0] != w[1]))
            .collect()
    };
    let ranks: Vec<usize> = (0..=4).map(|n| tuples(n).len()).collect();
    assert_eq!(norm.ranks, ranks);
    let boundaries: Vec<Vec<Vec<i128>>> = (1..=4)
        .map(|n| {
            let full = rack_boundary(|a, b| t.op_at(a, b), 3, n);
            let (rows, cols) = (tuples(n - 1), tuples(n));
            rows.iter()
                .map(|r| {
                    cols.iter()
                        .map(|c| full[common::tuple_index(r, 3)][common::tuple_index(c, 3)])
                        .collect()
                })
                .collect()
        })
        .collect();
    let expect = oracle_homology(&ranks, &boundaries);
    let h = homology_of(&norm).unwrap();
    for (d, (betti, torsion)) in h.degrees.iter().zip(&expect) {
        assert_eq!(d.betti, *betti, "H_{}", d.degree);
        let got: Vec<BigInt> = torsion.iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(d.torsion, got, "H_{}", d.degree);
    }
}

#[test]
fn simplicial_levels() {
    for (name, g, eps) in instances() {
        let top = if g.dim() > 3 { 3 } else { 4 };
        let c = degeneracies_from_delta(
            gsd_faces(&g, &eps, top).unwrap(),
            &braiding_of(&g).unwrap(),
            g.delta(),
        )
        .unwrap();
        let r = check_identities(&c);
        assert!(r.is_pre_bisimplicial(), "{name}");
        let first = r.first.failures();
        if vbraid::gsd::validate(&g).is_spindle() {
            assert!(first.iter().all(|f| *f == "simpl6"), "{name}: {first:?}");
        } else {
            assert!(first.contains(&"simpl5"), "{name}: {first:?}");
            assert!(
                !first
                    .iter()
                    .any(|f| ["simpl1", "simpl2", "simpl3", "simpl4"].contains(f)),
                "{name}"
            );
        }
    }
}
