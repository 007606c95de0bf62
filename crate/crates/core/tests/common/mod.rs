#![allow(dead_code, clippy::needless_range_loop)]

use std::path::PathBuf;

use vbraid::gsd::{from_leibniz, from_uaa, GsdStructure};
use vbraid::linrep::StructureConstants;

pub struct Fixture {
    pub name: String,
    pub structure: GsdStructure,
    pub expect_failures: Vec<String>,
}

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// Every `*.json` fixture, sorted by file name.
pub fn load_fixtures() -> Vec<Fixture> {
    let mut paths: Vec<_> = std::fs::read_dir(fixture_dir())
        .expect("fixture directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let v: serde_json::Value =
                serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
            let structure = if let Some(s) = v.get("structure") {
                GsdStructure::from_json(s).unwrap()
            } else if let Some(sc) = v.get("uaa") {
                from_uaa(&StructureConstants::from_json(sc).unwrap()).unwrap()
            } else if let Some(sc) = v.get("leibniz") {
                from_leibniz(&StructureConstants::from_json(sc).unwrap()).unwrap()
            } else {
                panic!("{} has no structure", p.display());
            };
            let expect_failures = v["expect_failures"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_str().unwrap().to_string())
                .collect();
            Fixture {
                name: p.file_stem().unwrap().to_string_lossy().into_owned(),
                structure,
                expect_failures,
            }
        })
        .collect()
}

/// The axioms of a shelf or rack structure, in report order.
pub const STRUCTURE_AXIOMS: [&str; 6] = [
    "coassociative",
    "weakly_cocommutative",
    "self_distributive",
    "compatible",
    "right_counit",
    "twisted_inverse",
];

/// Integer entries of an exact matrix.
pub fn int_rows(m: &vbraid::ring::RingMatrix) -> Vec<Vec<i128>> {
    m.to_integer_rows()
        .unwrap()
        .into_iter()
        .map(|r| r.into_iter().map(|x| i128::try_from(x).unwrap()).collect())
        .collect()
}

/// Nonzero invariant factors by plain row and column elimination.
pub fn naive_invariant_factors(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the remaining block goes to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((i, j)) = best else {
                return diag;
            };
            a.swap(t, i);
            for row in a.iter_mut() {
                row.swap(t, j);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // p must divide the rest of the block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| a[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => {
                    diag.push(p.abs());
                    break;
                }
            }
        }
    }
    diag
}

/// Mixed-radix index of a tuple, first entry most significant.
pub fn tuple_index(t: &[usize], m: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * m + x)
}

pub fn all_tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
    (0..m.pow(n as u32))
        .map(|mut k| {
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = k % m;
                k /= m;
            }
            t
        })
        .collect()
}

/// Rack boundary `∂_n : ℤ[Xⁿ] → ℤ[Xⁿ⁻¹]` assembled tuple by tuple:
/// `Σ (−1)^i [(…, x̂_i, …) − (x_1◁x_i, …, x_{i−1}◁x_i, x̂_i, …)]`.
pub fn rack_boundary(op: impl Fn(usize, usize) -> usize, m: usize, n: usize) -> Vec<Vec<i128>> {
    let mut d = vec![vec![0i128; m.pow(n as u32)]; m.pow(n as u32 - 1)];
    for t in all_tuples(m, n) {
        let col = tuple_index(&t, m);
        for i in 0..n {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            let mut del = t.clone();
            del.remove(i);
            d[tuple_index(&del, m)][col] += sign;
            let mut act: Vec<usize> = t[..i].iter().map(|&x| op(x, t[i])).collect();
            act.extend_from_slice(&t[i + 1..]);
            d[tuple_index(&act, m)][col] -= sign;
        }
    }
    d
}

/// `(betti, torsion)` per degree `0..top` from boundaries `∂_1..∂_top`.
pub fn oracle_homology(ranks: &[usize], boundaries: &[Vec<Vec<i128>>]) -> Vec<(usize, Vec<i128>)> {
    let snf: Vec<Vec<i128>> = boundaries
        .iter()
        .map(|b| naive_invariant_factors(b.clone()))
        .collect();
    (0..boundaries.len())
        .map(|n| {
            let out_rank = if n == 0 { 0 } else { snf[n - 1].len() };
            let incoming = &snf[n];
            let mut torsion: Vec<i128> = incoming.iter().copied().filter(|&x| x > 1).collect();
            torsion.sort_unstable();
            (ranks[n] - out_rank - incoming.len(), torsion)
        })
        .collect()
}

/// Follows strands through the diagram, rightmost letter first: the final
/// position of each strand and the strands crossing over it.
pub fn trace(w: &vbraid::braid::VirtualBraidWord) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = w.strands();
    let mut at: Vec<usize> = (1..=n).collect();
    let mut under = vec![Vec::new(); n];
    for g in w.letters().iter().rev() {
        let i = g.index - 1;
        if g.kind == vbraid::braid::GenKind::Sigma {
            under[at[i] - 1].push(at[i + 1]);
        }
        at.swap(i, i + 1);
    }
    let mut final_pos = vec![0; n];
    for (p, &s) in at.iter().enumerate() {
        final_pos[s - 1] = p + 1;
    }
    for u in under.iter_mut() {
        u.sort_unstable();
    }
    (final_pos, under)
}

/// Positive word with uniformly chosen `σ_i` or `ζ_i` letters.
pub fn random_positive_word(
    rng: &mut impl rand::Rng,
    n: usize,
    max_len: usize,
) -> vbraid::braid::VirtualBraidWord {
    use vbraid::braid::Generator;
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n);
            if rng.gen_bool(0.5) {
                Generator::sigma(i)
            } else {
                Generator::zeta(i)
            }
        })
        .collect();
    vbraid::braid::VirtualBraidWord::new(n, letters).unwrap()
}
