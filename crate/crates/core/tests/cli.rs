use serde_json::Value;
use vbraid::cli::run_to_string;
use vbraid::gsd::GsdStructure;
use vbraid::ring::RingMatrix;
use vbraid::sdstruct::{dihedral_quandle, FiniteRackTable};

fn run(args: &[&str]) -> (i32, String) {
    run_to_string(std::iter::once("vbraid").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let (code, out) = run(args);
    assert_eq!(code, 0, "{args:?}: {out}");
    serde_json::from_str(&out).unwrap()
}

fn temp_file(name: &str, v: &Value) -> String {
    let path = std::env::temp_dir().join(format!("vbraid-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, v.to_string()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn act_on_the_cyclic_rack() {
    let v = json(&[
        "act",
        "--structure",
        "cyclic-rack",
        "--word",
        "s1",
        "--tuple",
        "3,5",
    ]);
    assert_eq!(v["output"], "5,4");
    let (code, out) = run(&[
        "--format",
        "table",
        "act",
        "--structure",
        "cyclic-rack",
        "--word",
        "s1",
        "--tuple",
        "3,5",
    ]);
    assert_eq!((code, out.trim()), (0, "5,4"));
}

#[test]
fn forbidden_move_is_invisible_to_dihedral3_and_seen_by_the_free_virtual_shelf() {
    let base = [
        "distinguish",
        "--w1",
        "s1 s2 z1",
        "--w2",
        "z2 s1 s2",
        "--strands",
        "3",
        "--structure",
    ];
    let mut args = base.to_vec();
    args.push("dihedral3");
    assert_eq!(json(&args)["result"], "NotDistinguished");
    let mut args = base.to_vec();
    args.push("free-virtual-shelf");
    let v = json(&args);
    assert_eq!(v["result"], "Distinguished");
    assert_eq!(v["witness"]["tuple"], "x0,x0,x0");
}

#[test]
fn every_subcommand_runs() {
    let table = temp_file("d3.json", &dihedral_quandle(3).unwrap().to_json());
    let cases: Vec<Vec<&str>> = vec![
        vec!["validate-rack", &table],
        vec!["classify", "--structure", "dihedral3"],
        vec![
            "act",
            "--structure",
            "free-shelf",
            "--word",
            "s1 s1",
            "--tuple",
            "x0,x0",
        ],
        vec!["invariants", "--word", "s1 z2 s1"],
        vec![
            "distinguish",
            "--w1",
            "s1",
            "--w2",
            "z1",
            "--structure",
            "trivial1",
        ],
        vec![
            "scan",
            "--structure",
            "free-shelf",
            "--strands",
            "2",
            "--max-len",
            "3",
            "--reduced-only",
            "--forgetful",
        ],
        vec!["rho", "--object", "burau", "--word", "s1 S1"],
        vec!["yb-check", "--object", "group-s3"],
        vec!["twist", "--object", "twisted-burau"],
        vec!["gsd-validate", "leibniz-solv2"],
        vec!["homology", "--structure", "dihedral3", "--max-degree", "2"],
        vec!["enumerate", "--strands", "2", "--max-len", "2"],
    ];
    for args in cases {
        json(&args);
    }
}

#[test]
fn subcommand_reports() {
    let v = json(&["classify", "--structure", "dihedral3"]);
    assert_eq!(
        (v["class"].as_str(), v["spindle"].as_bool()),
        (Some("Quandle"), Some(true))
    );

    let v = json(&["invariants", "--word", "s1 z2 s1"]);
    assert_eq!(v["recovered"]["forgetful"], serde_json::json!([3, 2, 1]));
    assert_eq!(v["recovered"]["sigma_count"], 2);

    let v = json(&[
        "scan",
        "--structure",
        "free-shelf",
        "--strands",
        "2",
        "--max-len",
        "4",
        "--reduced-only",
        "--forgetful",
    ]);
    assert_eq!(v["report"]["collisions"].as_array().unwrap().len(), 0);
    assert_eq!(v["report"]["undecided"].as_array().unwrap().len(), 0);

    let v = json(&["rho", "--object", "burau", "--word", "s1 S1"]);
    assert!(RingMatrix::from_json(&v["matrix"]).unwrap().is_identity());

    for object in [
        "burau",
        "twisted-burau",
        "group-s3",
        "uaa-dual-numbers",
        "leibniz-solv2",
        "dihedral3",
    ] {
        let v = json(&["yb-check", "--object", object]);
        assert_eq!(
            v["relations"]["failures"].as_array().unwrap().len(),
            0,
            "{object}"
        );
        let v = json(&["twist", "--object", object]);
        assert_eq!(
            (v["involution"].as_bool(), v["yang_baxter"].as_bool()),
            (Some(true), Some(true)),
            "{object}"
        );
    }

    let v = json(&["gsd-validate", "uaa-dual-numbers"]);
    assert_eq!(v["failures"], serde_json::json!([]));

    let v = json(&["homology", "--structure", "dihedral3", "--max-degree", "3"]);
    let h3 = &v["degrees"][3];
    assert_eq!(
        (h3["rank"].as_u64(), h3["betti"].as_u64()),
        (Some(27), Some(1))
    );
    assert_eq!(h3["torsion"], serde_json::json!([3]));

    let v = json(&["enumerate", "--strands", "2", "--max-len", "2"]);
    assert_eq!(v["count"], 7);
}

#[test]
fn homology_options() {
    let v = json(&[
        "homology",
        "--structure",
        "uaa-dual-numbers",
        "--cut",
        "1,0",
        "--diff",
        "ed",
        "--max-degree",
        "3",
        "--identities",
    ]);
    assert_eq!(v["identities"]["first"]["simpl5"], true);
    let v = json(&[
        "homology",
        "--structure",
        "dihedral3",
        "--normalized",
        "--max-degree",
        "3",
    ]);
    assert_eq!(v["degrees"][1]["rank"], 3);
    assert_eq!(v["degrees"][2]["rank"], 6);
    let (code, _) = run(&["homology", "--structure", "dihedral3", "--diff", "ed+xy"]);
    assert_eq!(code, 1);
}

#[test]
fn structure_files_round_trip() {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/fixtures/set_bad_twisted_inverse.json"
    ))
    .unwrap();
    let fixture: Value = serde_json::from_str(&text).unwrap();
    let g = GsdStructure::from_json(&fixture["structure"]).unwrap();
    let path = temp_file("gsd.json", &g.to_json());
    let v = json(&["gsd-validate", &path]);
    assert_eq!(v["failures"], fixture["expect_failures"]);
    assert_eq!(GsdStructure::from_json(&g.to_json()).unwrap(), g);

    let t = FiniteRackTable::from_fn(3, |a, _| (a + 1) % 3).unwrap();
    let path = temp_file("shift.json", &t.to_json());
    let v = json(&["validate-rack", &path]);
    assert_eq!(v["size"], 3);
    assert_eq!(v["classification"]["class"], "Rack");
}

#[test]
fn runs_are_deterministic_under_a_seed() {
    let args = [
        "--seed",
        "5",
        "enumerate",
        "--strands",
        "3",
        "--max-len",
        "4",
        "--sample",
        "6",
    ];
    let a = json(&args);
    assert_eq!(a, json(&args));
    assert_eq!(a["count"], 6);
    let b = json(&[
        "--seed",
        "6",
        "enumerate",
        "--strands",
        "3",
        "--max-len",
        "4",
        "--sample",
        "6",
    ]);
    assert_ne!(a["words"], b["words"]);
}

#[test]
fn exit_codes() {
    let (code, out) = run(&[
        "act",
        "--structure",
        "nope",
        "--word",
        "s1",
        "--tuple",
        "1,2",
    ]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["error"]["message"].as_str().unwrap().contains("nope"));
    let (code, _) = run(&[
        "act",
        "--structure",
        "dihedral3",
        "--word",
        "s9",
        "--tuple",
        "1,2",
    ]);
    assert_eq!(code, 1);
    assert_eq!(run(&["act", "--bogus"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
    assert_eq!(run(&["validate-rack", "/nonexistent/table.json"]).0, 1);
    let (code, out) = run(&["--help"]);
    assert_eq!(code, 0);
    for sub in [
        "validate-rack",
        "classify",
        "act",
        "invariants",
        "distinguish",
        "scan",
        "rho",
        "yb-check",
        "twist",
        "gsd-validate",
        "homology",
        "enumerate",
    ] {
        assert!(out.contains(sub), "{sub}");
    }
}
