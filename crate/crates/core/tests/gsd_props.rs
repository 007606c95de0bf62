mod common;

use common::{load_fixtures, STRUCTURE_AXIOMS};
use vbraid::action::{rack_pair, ActionPair};
use vbraid::gsd::{
    braided_coalgebra_check, braiding_of, from_finite_shelf, from_group_algebra, set_braiding,
    sigma_inv_matrix, sigma_matrix, validate, GsdStructure,
};
use vbraid::linrep::{rack_object, yb_check};
use vbraid::sdstruct::{alexander_quandle, dihedral_quandle, FiniteGroup, FiniteRackTable};

#[test]
fn fixtures_match_annotations() {
    let fixtures = load_fixtures();
    assert!(fixtures.len() >= 10);
    for f in &fixtures {
        let got = validate(&f.structure).failures();
        assert_eq!(got, f.expect_failures, "{}", f.name);
        assert_eq!(
            GsdStructure::from_json(&f.structure.to_json()).unwrap(),
            f.structure
        );
    }
}

#[test]
fn every_axiom_has_an_isolating_fixture() {
    let fixtures = load_fixtures();
    for axiom in STRUCTURE_AXIOMS {
        let hit = fixtures.iter().any(|f| {
            let core: Vec<_> = f
                .expect_failures
                .iter()
                .filter(|x| STRUCTURE_AXIOMS.contains(&x.as_str()))
                .collect();
            core == [axiom]
        });
        assert!(hit, "{axiom}");
    }
    for extra in ["left_cocommutative", "delta_idempotent"] {
        assert!(
            fixtures.iter().any(|f| f.expect_failures == [extra]),
            "{extra}"
        );
    }
}

fn shelves() -> Vec<FiniteRackTable> {
    let mut out = vec![
        FiniteRackTable::from_fn(1, |_, _| 0).unwrap(),
        FiniteRackTable::from_fn(3, |a, _| (a + 1) % 3).unwrap(),
        FiniteRackTable::from_fn(3, |_, b| b).unwrap(),
        FiniteGroup::symmetric3().conjugation_quandle(),
    ];
    for m in 2..=5 {
        out.push(dihedral_quandle(m).unwrap());
    }
    out.push(alexander_quandle(5, 2).unwrap());
    out
}

#[test]
fn shelf_braidings_are_rack_braidings() {
    for t in shelves() {
        let g = from_finite_shelf(&t).unwrap();
        let r = validate(&g);
        assert!(r.is_shelf(), "{:?}", r.failures());
        let obj = braiding_of(&g).unwrap();
        assert!(yb_check(&obj).unwrap());
        assert_eq!(obj.sigma(), rack_object(&t).sigma());
        let sb = set_braiding(&g).unwrap();
        let m = t.size();
        let pair = rack_pair(t).unwrap();
        for a in 0..m {
            for b in 0..m {
                assert_eq!(sb(a, b), pair.theta(&a, &b));
            }
        }
    }
}

#[test]
fn rack_braidings_are_invertible() {
    let mut structures: Vec<GsdStructure> = shelves()
        .into_iter()
        .filter(|t| t.inverse_table().is_some())
        .map(|t| from_finite_shelf(&t).unwrap())
        .collect();
    structures.push(from_group_algebra(&FiniteGroup::symmetric3()).unwrap());
    structures.push(from_group_algebra(&FiniteGroup::klein_four()).unwrap());
    for g in structures {
        assert!(validate(&g).is_rack());
        let s = sigma_matrix(&g);
        let inv = sigma_inv_matrix(&g).unwrap();
        assert!(s.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&s).unwrap().is_identity());
        let obj = braiding_of(&g).unwrap();
        assert!(yb_check(&obj).unwrap());
    }
}

#[test]
fn spindles_are_cocommutative_braided_coalgebras() {
    for t in shelves() {
        let g = from_finite_shelf(&t).unwrap();
        let r = validate(&g);
        let cr = braided_coalgebra_check(&g).unwrap();
        assert!(cr.semi_braided);
        assert_eq!(cr.sigma_cocommutative, r.is_spindle());
    }
}

#[test]
fn malformed_json_is_rejected() {
    for text in [
        r#"{"backend":"set","size":2,"delta":[[1,1]],"op":[[1,1],[1,1]]}"#,
        r#"{"backend":"set","size":2,"delta":[[1,1],[2,3]],"op":[[1,1],[1,1]]}"#,
        r#"{"backend":"set","size":2,"delta":[[1,1],[2,2]],"op":[[0,1],[1,1]]}"#,
        r#"{"backend":"tree"}"#,
    ] {
        let v: serde_json::Value = serde_json::from_str(text).unwrap();
        assert!(GsdStructure::from_json(&v).is_err(), "{text}");
    }
}
