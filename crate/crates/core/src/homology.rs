//! Face and degeneracy families, total differentials and integral homology.
//!
//! Chains are `C_n = V^{⊗n}` (so `C_0` has rank one), faces are indexed
//! `1 ≤ i ≤ n` and total differentials carry the sign `(−1)^{i−1}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gsd::{coalgebra_check, is_character, validate, GsdStructure};
use crate::linrep::{LinearBraidedObject, Mode};
use crate::ring::{smith_decomposition, smith_normal_form, LaurentPoly, RingMatrix};
use crate::tensor::{at, composite_matrix, composites_agree, transpositions_for, LocalMap, Step};

/// Graded faces `d[n][i]` (and optionally `d'[n][i]`, `s[n][i]`) on `C_n = V^{⊗n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresimplicialComplex {
    dim: usize,
    max_degree: usize,
    faces: Vec<Vec<RingMatrix>>,
    faces2: Option<Vec<Vec<RingMatrix>>>,
    degeneracies: Option<Vec<Vec<RingMatrix>>>,
}

impl PresimplicialComplex {
    /// `faces[n]` holds `d_{n,1}, …, d_{n,n}` for `n = 0..=N` (`faces[0]` empty).
    pub fn new(
        dim: usize,
        faces: Vec<Vec<RingMatrix>>,
        faces2: Option<Vec<Vec<RingMatrix>>>,
    ) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::Malformed("complex needs at least degree 0".into()));
        }
        let max_degree = faces.len() - 1;
        let me = Self {
            dim,
            max_degree,
            faces,
            faces2,
            degeneracies: None,
        };
        me.check_family(&me.faces)?;
        if let Some(f2) = &me.faces2 {
            me.check_family(f2)?;
        }
        Ok(me)
    }

    fn check_family(&self, family: &[Vec<RingMatrix>]) -> Result<()> {
        if family.len() != self.max_degree + 1 {
            return Err(Error::DimensionMismatch(
                "face families of different lengths".into(),
            ));
        }
        for (n, maps) in family.iter().enumerate() {
            if maps.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "degree {n} needs {n} faces, got {}",
                    maps.len()
                )));
            }
            for m in maps {
                if m.rows() != self.rank(n - 1) || m.cols() != self.rank(n) {
                    return Err(Error::DimensionMismatch(format!(
                        "face in degree {n} has wrong shape"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn rank(&self, n: usize) -> usize {
        self.dim.pow(n as u32)
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.max_degree).map(|n| self.rank(n)).collect()
    }

    /// `d_{n,i}`, 1-based.
    pub fn face(&self, n: usize, i: usize) -> &RingMatrix {
        &self.faces[n][i - 1]
    }

    pub fn face2(&self, n: usize, i: usize) -> Option<&RingMatrix> {
        self.faces2.as_ref().map(|f| &f[n][i - 1])
    }

    pub fn faces(&self) -> &[Vec<RingMatrix>] {
        &self.faces
    }

    pub fn faces2(&self) -> Option<&[Vec<RingMatrix>]> {
        self.faces2.as_deref()
    }

    /// `s_{n,i} : C_n → C_{n+1}`, 1-based.
    pub fn degeneracy(&self, n: usize, i: usize) -> Option<&RingMatrix> {
        self.degeneracies.as_ref().map(|s| &s[n][i - 1])
    }

    pub fn has_degeneracies(&self) -> bool {
        self.degeneracies.is_some()
    }

    /// Attaches degeneracies `s[n]` for `n = 0..N` (so `s[n].len() == n`).
    pub fn with_degeneracy_matrices(mut self, degeneracies: Vec<Vec<RingMatrix>>) -> Result<Self> {
        if degeneracies.len() != self.max_degree {
            return Err(Error::DimensionMismatch(
                "degeneracies must cover degrees 0..N".into(),
            ));
        }
        for (n, maps) in degeneracies.iter().enumerate() {
            if maps.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "degree {n} needs {n} degeneracies"
                )));
            }
            for m in maps {
                if m.rows() != self.rank(n + 1) || m.cols() != self.rank(n) {
                    return Err(Error::DimensionMismatch(format!(
                        "degeneracy in degree {n} has wrong shape"
                    )));
                }
            }
        }
        self.degeneracies = Some(degeneracies);
        Ok(self)
    }

    /// Swaps the two face families.
    pub fn swapped(&self) -> Option<Self> {
        let f2 = self.faces2.clone()?;
        Some(Self {
            faces: f2,
            faces2: Some(self.faces.clone()),
            ..self.clone()
        })
    }
}

/// Whether `(ε ⊗ ε) ∘ σ = ε ⊗ ε`.
pub fn is_upper_cut(dim: usize, sigma: &LocalMap, eps: &LocalMap) -> bool {
    composites_agree(
        dim,
        2,
        &[at(sigma, 1), at(eps, 1), at(eps, 1)],
        &[at(eps, 1), at(eps, 1)],
    )
}

fn tensor_sigma(obj: &LinearBraidedObject) -> Result<LocalMap> {
    if obj.mode() != Mode::Tensor {
        return Err(Error::Unsupported("faces need a tensor-mode object".into()));
    }
    LocalMap::new(obj.dim(), 2, 2, obj.sigma().clone())
}

fn check_eps(dim: usize, eps: &LocalMap) -> Result<()> {
    if eps.dim() != dim || eps.arity_in() != 1 || eps.arity_out() != 0 {
        return Err(Error::DimensionMismatch(format!(
            "cut must be a covector on dim {dim}"
        )));
    }
    Ok(())
}

/// `(ᵋd)_{n,i} = ε₁ ∘ σ₁ ⋯ σ_{i−1}` and `(dᵋ)_{n,i} = ε_n ∘ σ_{n−1} ⋯ σ_i`.
pub fn faces_from_braiding(
    obj: &LinearBraidedObject,
    eps: &LocalMap,
    max_degree: usize,
) -> Result<PresimplicialComplex> {
    let d = obj.dim();
    check_eps(d, eps)?;
    let sigma = tensor_sigma(obj)?;
    if !is_upper_cut(d, &sigma, eps) {
        return Err(Error::AxiomFailure("ε is not an upper cut for σ".into()));
    }
    let mut left = vec![Vec::new()];
    let mut right = vec![Vec::new()];
    for n in 1..=max_degree {
        let (mut l, mut r) = (Vec::with_capacity(n), Vec::with_capacity(n));
        for i in 1..=n {
            let mut steps: Vec<Step> = (1..i).rev().map(|k| at(&sigma, k)).collect();
            steps.push(at(eps, 1));
            l.push(composite_matrix(d, n, n - 1, &steps));
            let mut steps: Vec<Step> = (i..n).map(|k| at(&sigma, k)).collect();
            steps.push(at(eps, n));
            r.push(composite_matrix(d, n, n - 1, &steps));
        }
        left.push(l);
        right.push(r);
    }
    PresimplicialComplex::new(d, left, Some(right))
}

/// Destination form of the shuffle on `2i − 1` factors: the first `i − 1`
/// go to even slots, the remaining `i` to odd slots.
pub fn shuffle_destinations(i: usize) -> Vec<usize> {
    let mut dest = Vec::with_capacity(2 * i - 1);
    dest.extend((1..i).map(|j| 2 * j));
    dest.extend((1..=i).map(|k| 2 * k - 1));
    dest
}

/// The GSD face families, built from `Δ`, `◁`, `c` and a character `ε`.
pub fn gsd_faces(
    g: &GsdStructure,
    eps: &LocalMap,
    max_degree: usize,
) -> Result<PresimplicialComplex> {
    let d = g.dim();
    check_eps(d, eps)?;
    let report = validate(g);
    if !report.is_shelf() {
        return Err(Error::AxiomFailure(format!(
            "not a shelf: {:?}",
            report.failures()
        )));
    }
    if !is_character(g, eps) {
        return Err(Error::AxiomFailure("ε is not a character".into()));
    }
    let (delta, op, flip) = (g.delta(), g.op(), g.flip());
    let chi = LocalMap::new(
        d,
        1,
        1,
        composite_matrix(d, 1, 1, &[at(delta, 1), at(eps, 2)]),
    )?;
    let mut left = vec![Vec::new()];
    let mut right = vec![Vec::new()];
    for n in 1..=max_degree {
        let (mut l, mut r) = (Vec::with_capacity(n), Vec::with_capacity(n));
        for i in 1..=n {
            let mut steps: Vec<Step> = (1..i).map(|_| at(delta, i)).collect();
            steps.extend(
                transpositions_for(&shuffle_destinations(i))
                    .into_iter()
                    .map(|k| at(flip, k)),
            );
            steps.push(at(eps, 1));
            steps.extend((1..i).map(|k| at(op, k)));
            l.push(composite_matrix(d, n, n - 1, &steps));
            let mut steps = vec![at(eps, i)];
            steps.extend((i..n).map(|p| at(&chi, p)));
            r.push(composite_matrix(d, n, n - 1, &steps));
        }
        left.push(l);
        right.push(r);
    }
    PresimplicialComplex::new(d, left, Some(right))
}

/// Attaches `s_{n,i} = Δ_i`, after checking `Δ₂ ∘ σ = σ₁ ∘ σ₂ ∘ Δ₁`.
pub fn degeneracies_from_delta(
    complex: PresimplicialComplex,
    obj: &LinearBraidedObject,
    delta: &LocalMap,
) -> Result<PresimplicialComplex> {
    let d = complex.dim;
    if delta.dim() != d || delta.arity_in() != 1 || delta.arity_out() != 2 {
        return Err(Error::DimensionMismatch("Δ must map V to V ⊗ V".into()));
    }
    let sigma = tensor_sigma(obj)?;
    if !coalgebra_check(d, delta, &sigma).semi_braided {
        return Err(Error::AxiomFailure("Δ is not compatible with σ".into()));
    }
    let degens = (0..complex.max_degree)
        .map(|n| {
            (1..=n)
                .map(|i| composite_matrix(d, n, n + 1, &[at(delta, i)]))
                .collect()
        })
        .collect();
    complex.with_degeneracy_matrices(degens)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Presimplicial,
    VeryWeak,
    Weak,
    Simplicial,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Presimplicial => "presimplicial",
            Level::VeryWeak => "very weakly simplicial",
            Level::Weak => "weakly simplicial",
            Level::Simplicial => "simplicial",
        })
    }
}

/// Outcome of the identity sweep for one face family (degeneracy checks are
/// `None` without degeneracies).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    /// `d_i d_j = d_{j−1} d_i`, `i < j`
    pub simpl1: bool,
    /// `s_i s_j = s_{j+1} s_i`, `i ≤ j`
    pub simpl2: Option<bool>,
    /// `d_i s_j = s_{j−1} d_i`, `i < j`
    pub simpl3: Option<bool>,
    /// `d_i s_j = s_j d_{i−1}`, `j + 1 < i`
    pub simpl4: Option<bool>,
    /// `d_i s_i = d_{i+1} s_i`
    pub simpl5: Option<bool>,
    /// `d_i s_i = Id`
    pub simpl6: Option<bool>,
}

impl IdentityReport {
    pub fn level(&self) -> Option<Level> {
        if !self.simpl1 {
            return None;
        }
        let ok = |x: Option<bool>| x == Some(true);
        if !(ok(self.simpl2) && ok(self.simpl3) && ok(self.simpl4)) {
            return Some(Level::Presimplicial);
        }
        if !ok(self.simpl5) {
            return Some(Level::VeryWeak);
        }
        if !ok(self.simpl6) {
            return Some(Level::Weak);
        }
        Some(Level::Simplicial)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.simpl1 {
            out.push("simpl1");
        }
        for (name, v) in [
            ("simpl2", self.simpl2),
            ("simpl3", self.simpl3),
            ("simpl4", self.simpl4),
            ("simpl5", self.simpl5),
            ("simpl6", self.simpl6),
        ] {
            if v == Some(false) {
                out.push(name);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicialReport {
    pub first: IdentityReport,
    pub first_level: Option<Level>,
    pub second: Option<IdentityReport>,
    pub second_level: Option<Level>,
    /// `d_i d'_j = d'_{j−1} d_i`, `i < j`
    pub mixed_first: Option<bool>,
    /// `d'_i d_j = d_{j−1} d'_i`, `i < j`
    pub mixed_second: Option<bool>,
}

impl SimplicialReport {
    pub fn is_pre_bisimplicial(&self) -> bool {
        self.first.simpl1
            && self.second.as_ref().is_some_and(|s| s.simpl1)
            && self.mixed_first == Some(true)
            && self.mixed_second == Some(true)
    }
}

fn mul(a: &RingMatrix, b: &RingMatrix) -> RingMatrix {
    a.mul(b).expect("shapes fixed by the complex")
}

fn face_relation(n_max: usize, a: &[Vec<RingMatrix>], b: &[Vec<RingMatrix>]) -> bool {
    // a_i b_j = b_{j−1} a_i on C_n
    (2..=n_max).all(|n| {
        (1..=n).all(|j| {
            (1..j)
                .all(|i| mul(&a[n - 1][i - 1], &b[n][j - 1]) == mul(&b[n - 1][j - 2], &a[n][i - 1]))
        })
    })
}

fn family_report(c: &PresimplicialComplex, d: &[Vec<RingMatrix>]) -> IdentityReport {
    let n_max = c.max_degree;
    let simpl1 = face_relation(n_max, d, d);
    let Some(s) = c.degeneracies.as_ref() else {
        return IdentityReport {
            simpl1,
            simpl2: None,
            simpl3: None,
            simpl4: None,
            simpl5: None,
            simpl6: None,
        };
    };
    // s[n][i-1]: C_n → C_{n+1}, defined for n < N
    let simpl2 = (1..n_max.saturating_sub(1)).all(|n| {
        (1..=n).all(|j| {
            (1..=j).all(|i| mul(&s[n + 1][i - 1], &s[n][j - 1]) == mul(&s[n + 1][j], &s[n][i - 1]))
        })
    });
    let simpl3 = (1..n_max).all(|n| {
        (1..=n).all(|j| {
            (1..j)
                .all(|i| mul(&d[n + 1][i - 1], &s[n][j - 1]) == mul(&s[n - 1][j - 2], &d[n][i - 1]))
        })
    });
    let simpl4 = (1..n_max).all(|n| {
        (1..=n).all(|i| {
            (1..i.saturating_sub(1))
                .all(|j| mul(&d[n + 1][i - 1], &s[n][j - 1]) == mul(&s[n - 1][j - 1], &d[n][i - 2]))
        })
    });
    let simpl5 = (1..n_max).all(|n| {
        (1..=n).all(|i| mul(&d[n + 1][i - 1], &s[n][i - 1]) == mul(&d[n + 1][i], &s[n][i - 1]))
    });
    let simpl6 =
        (1..n_max).all(|n| (1..=n).all(|i| mul(&d[n + 1][i - 1], &s[n][i - 1]).is_identity()));
    IdentityReport {
        simpl1,
        simpl2: Some(simpl2),
        simpl3: Some(simpl3),
        simpl4: Some(simpl4),
        simpl5: Some(simpl5),
        simpl6: Some(simpl6),
    }
}

/// Sweeps every simplicial identity up to the complex's max degree.
pub fn check_identities(c: &PresimplicialComplex) -> SimplicialReport {
    let first = family_report(c, &c.faces);
    let second = c.faces2.as_ref().map(|f| family_report(c, f));
    let (mixed_first, mixed_second) = match &c.faces2 {
        Some(f2) => (
            Some(face_relation(c.max_degree, &c.faces, f2)),
            Some(face_relation(c.max_degree, f2, &c.faces)),
        ),
        None => (None, None),
    };
    SimplicialReport {
        first_level: first.level(),
        second_level: second.as_ref().and_then(|s| s.level()),
        first,
        second,
        mixed_first,
        mixed_second,
    }
}

/// `α·∂ + β·∂'`, where `∂` comes from the first family and `∂'` from the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Differential {
    pub alpha: i64,
    pub beta: i64,
}

impl Differential {
    pub const FIRST: Self = Self { alpha: 1, beta: 0 };
    pub const SECOND: Self = Self { alpha: 0, beta: 1 };
    /// The rack-type difference `ᵋd − dᵋ`.
    pub const DIFFERENCE: Self = Self { alpha: 1, beta: -1 };
}

impl FromStr for Differential {
    type Err = Error;

    /// Grammar: a sum of terms `[±][k*]ed` or `[±][k*]de`, e.g. `ed-de`, `2*ed+3*de`, `first`, `second`.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match text.as_str() {
            "first" => return Ok(Self::FIRST),
            "second" => return Ok(Self::SECOND),
            "" => return Err(Error::Parse("empty differential".into())),
            _ => {}
        }
        let mut out = Self { alpha: 0, beta: 0 };
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body
                .char_indices()
                .skip(1)
                .find(|&(_, c)| c == '+' || c == '-')
                .map_or(body.len(), |(k, _)| k);
            let term = &body[..end];
            rest = &body[end..];
            let (coef, name) = match term.split_once('*') {
                Some((k, name)) => (
                    k.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient {k:?}")))?,
                    name,
                ),
                None => (1, term),
            };
            let slot = match name {
                "ed" => &mut out.alpha,
                "de" => &mut out.beta,
                _ => {
                    return Err(Error::Parse(format!(
                        "unknown term {name:?} (expected ed or de)"
                    )))
                }
            };
            *slot += sign * coef;
        }
        Ok(out)
    }
}

/// Boundary maps `∂_n : C_n → C_{n−1}` for `n = 1..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<RingMatrix>,
}

impl ChainComplex {
    /// `∂_n`, for `1 ≤ n ≤ N`.
    pub fn boundary(&self, n: usize) -> &RingMatrix {
        &self.boundaries[n - 1]
    }

    pub fn max_degree(&self) -> usize {
        self.boundaries.len()
    }

    pub fn squares_to_zero(&self) -> bool {
        self.boundaries
            .windows(2)
            .all(|w| mul(&w[0], &w[1]).is_zero())
    }
}

fn alternating_sum(faces: &[RingMatrix], rows: usize, cols: usize) -> RingMatrix {
    let mut out = RingMatrix::zeros(rows, cols);
    for (k, f) in faces.iter().enumerate() {
        let sign = if k % 2 == 0 {
            LaurentPoly::one()
        } else {
            -LaurentPoly::one()
        };
        for (&(r, c), v) in f.entries() {
            out.add_to(r, c, &(v * &sign));
        }
    }
    out
}

/// `Σ (−1)^{i−1} d_{n,i}` for one family.
pub fn family_boundaries(c: &PresimplicialComplex, second: bool) -> Result<Vec<RingMatrix>> {
    let family = if second {
        c.faces2
            .as_ref()
            .ok_or_else(|| Error::Unsupported("complex has no second face family".into()))?
    } else {
        &c.faces
    };
    Ok((1..=c.max_degree)
        .map(|n| alternating_sum(&family[n], c.rank(n - 1), c.rank(n)))
        .collect())
}

pub fn total_differential(c: &PresimplicialComplex, which: Differential) -> Result<ChainComplex> {
    let first = family_boundaries(c, false)?;
    let second = if which.beta != 0 {
        Some(family_boundaries(c, true)?)
    } else {
        None
    };
    let alpha = LaurentPoly::constant(which.alpha);
    let beta = LaurentPoly::constant(which.beta);
    let boundaries = first
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let a = a.scale(&alpha);
            match &second {
                Some(s) => a.add(&s[k].scale(&beta)).expect("same shape"),
                None => a,
            }
        })
        .collect();
    Ok(ChainComplex {
        ranks: c.ranks(),
        boundaries,
    })
}

/// `∂∂ = 0`, `∂∂' + ∂'∂ = 0` and `∂'∂' = 0` in every degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BidifferentialReport {
    pub first_squares: bool,
    pub anticommute: bool,
    pub second_squares: bool,
}

impl BidifferentialReport {
    pub fn passes(&self) -> bool {
        self.first_squares && self.anticommute && self.second_squares
    }
}

pub fn bidifferential_check(c: &PresimplicialComplex) -> Result<BidifferentialReport> {
    let a = family_boundaries(c, false)?;
    let b = family_boundaries(c, true)?;
    let zero_pairs =
        |x: &[RingMatrix], y: &[RingMatrix]| (1..x.len()).all(|k| mul(&x[k - 1], &y[k]).is_zero());
    let anticommute = (1..a.len()).all(|k| {
        mul(&a[k - 1], &b[k])
            .add(&mul(&b[k - 1], &a[k]))
            .expect("same shape")
            .is_zero()
    });
    Ok(BidifferentialReport {
        first_squares: zero_pairs(&a, &a),
        anticommute,
        second_squares: zero_pairs(&b, &b),
    })
}

fn serialize_torsion<S: Serializer>(t: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(t.len()))?;
    for d in t {
        match d.to_u64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&d.to_string())?,
        }
    }
    seq.end()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeHomology {
    pub degree: usize,
    /// Rank of `C_n`.
    pub rank: usize,
    pub betti: usize,
    /// Invariant factors greater than one.
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyResult {
    pub fn degree(&self, n: usize) -> Option<&DegreeHomology> {
        self.degrees.iter().find(|d| d.degree == n)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }
}

/// `H_n` for `n = 0..N−1`, where `N` is the top degree of `chain` (the top
/// degree itself would need `∂_{N+1}`).
pub fn homology_of(chain: &ChainComplex) -> Result<HomologyResult> {
    if !chain.squares_to_zero() {
        return Err(Error::AxiomFailure("∂² ≠ 0".into()));
    }
    let snf: Vec<_> = chain
        .boundaries
        .iter()
        .map(smith_normal_form)
        .collect::<Result<_>>()?;
    let top = chain.max_degree();
    let degrees = (0..top)
        .map(|n| {
            let out_rank = if n == 0 { 0 } else { snf[n - 1].rank };
            let incoming = &snf[n];
            DegreeHomology {
                degree: n,
                rank: chain.ranks[n],
                betti: chain.ranks[n] - out_rank - incoming.rank,
                torsion: incoming.torsion(),
            }
        })
        .collect();
    Ok(HomologyResult { degrees })
}

/// Columns spanning `D_n = Σ_i s_{n−1,i}(C_{n−1})`.
fn degenerate_span(c: &PresimplicialComplex, n: usize) -> Option<RingMatrix> {
    if n < 2 {
        return None;
    }
    let mut it = (1..n).map(|i| c.degeneracy(n - 1, i).expect("checked").clone());
    let first = it.next()?;
    Some(it.fold(first, |acc, m| acc.hstack(&m).expect("same rows")))
}

fn to_int_vec(col: Vec<LaurentPoly>) -> Result<Vec<BigInt>> {
    col.into_iter()
        .map(|p| {
            p.as_integer().ok_or_else(|| {
                Error::Unsupported("degenerate subcomplex needs integer maps".into())
            })
        })
        .collect()
}

/// Whether `∂(D_n) ⊆ D_{n−1}` for every degree (column-span containment over ℤ).
pub fn degenerate_subcomplex_check(c: &PresimplicialComplex, chain: &ChainComplex) -> Result<bool> {
    if !c.has_degeneracies() {
        return Err(Error::Unsupported("complex has no degeneracies".into()));
    }
    for n in 2..=chain.max_degree() {
        let dn = degenerate_span(c, n).expect("n ≥ 2");
        let image = mul(chain.boundary(n), &dn);
        match degenerate_span(c, n - 1) {
            None => {
                if !image.is_zero() {
                    return Ok(false);
                }
            }
            Some(target) => {
                let dec = smith_decomposition(&target)?;
                for j in 0..image.cols() {
                    if !dec.column_span_contains(&to_int_vec(image.column(j))?) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

struct Quotient {
    /// `C_n → C_n / D_n`
    project: RingMatrix,
    /// a section `C_n / D_n → C_n`
    lift: RingMatrix,
}

fn quotient(c: &PresimplicialComplex, n: usize) -> Result<Quotient> {
    let r = c.rank(n);
    let Some(span) = degenerate_span(c, n) else {
        return Ok(Quotient {
            project: RingMatrix::identity(r),
            lift: RingMatrix::identity(r),
        });
    };
    let dec = smith_decomposition(&span)?;
    if dec
        .result
        .diagonal
        .iter()
        .any(|x| !x.is_zero() && !x.is_one())
    {
        return Err(Error::Unsupported(format!(
            "degenerate submodule in degree {n} is not a direct summand"
        )));
    }
    let k = dec.result.rank;
    let p = RingMatrix::from_integer_rows(&dec.p, r);
    let p_inv = RingMatrix::from_integer_rows(&dec.p_inv, r);
    Ok(Quotient {
        project: p.submatrix(k, r, 0, r),
        lift: p_inv.submatrix(0, r, k, r),
    })
}

/// The quotient complex `C / D` (requires degeneracies and a saturated `D`).
pub fn normalized_complex(c: &PresimplicialComplex, chain: &ChainComplex) -> Result<ChainComplex> {
    if !degenerate_subcomplex_check(c, chain)? {
        return Err(Error::AxiomFailure(
            "degenerate submodules are not a subcomplex".into(),
        ));
    }
    let qs: Vec<Quotient> = (0..=chain.max_degree())
        .map(|n| quotient(c, n))
        .collect::<Result<_>>()?;
    let boundaries = (1..=chain.max_degree())
        .map(|n| mul(&mul(&qs[n - 1].project, chain.boundary(n)), &qs[n].lift))
        .collect();
    let ranks = qs.iter().map(|q| q.project.rows()).collect();
    Ok(ChainComplex { ranks, boundaries })
}
