//! Generalized self-distributive structures `(V, Δ, ◁[, ε, ◁̃])` over finite
//! sets (cartesian product, flip) and finite-rank free modules (tensor, flip).
//!
//! Set structures are stored through their linearization, so every axiom is
//! evaluated on all basis tuples, i.e. on all element tuples.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linrep::{LinearBraidedObject, Mode, StructureConstants};
use crate::ring::{LaurentPoly, RingMatrix};
use crate::sdstruct::{FiniteGroup, FiniteRackTable, RackClass};
use crate::tensor::{at, composite_matrix, composites_agree, LocalMap, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Set,
    Linear,
}

/// Set-level data kept alongside the linearization (0-indexed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetData {
    pub delta: Vec<(usize, usize)>,
    pub op: Vec<Vec<usize>>,
    pub op_tilde: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsdStructure {
    backend: Backend,
    dim: usize,
    delta: LocalMap,
    op: LocalMap,
    counit: Option<LocalMap>,
    op_tilde: Option<LocalMap>,
    flip: LocalMap,
    set: Option<SetData>,
}

fn check_table(t: &[Vec<usize>], m: usize, name: &str) -> Result<()> {
    if t.len() != m || t.iter().any(|r| r.len() != m || r.iter().any(|&x| x >= m)) {
        return Err(Error::Malformed(format!(
            "{name} must be an {m}x{m} table over 0..{m}"
        )));
    }
    Ok(())
}

fn table_map(m: usize, t: &[Vec<usize>]) -> LocalMap {
    LocalMap::from_fn(m, 2, 1, |ab| t[ab / m][ab % m])
}

impl GsdStructure {
    /// A structure on a finite set; `ε` is the unique map to a point.
    pub fn set(
        size: usize,
        delta: Vec<(usize, usize)>,
        op: Vec<Vec<usize>>,
        op_tilde: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::Malformed("empty carrier".into()));
        }
        if delta.len() != size || delta.iter().any(|&(a, b)| a >= size || b >= size) {
            return Err(Error::Malformed(
                "delta must map each element to a pair".into(),
            ));
        }
        check_table(&op, size, "op")?;
        if let Some(t) = &op_tilde {
            check_table(t, size, "op_tilde")?;
        }
        let d = size;
        let delta_map = LocalMap::from_fn(d, 1, 2, |x| delta[x].0 * d + delta[x].1);
        let counit = LocalMap::new(d, 1, 0, RingMatrix::from_int_rows(&[vec![1; d]]))?;
        Ok(Self {
            backend: Backend::Set,
            dim: d,
            delta: delta_map,
            op: table_map(d, &op),
            counit: Some(counit),
            op_tilde: op_tilde.as_ref().map(|t| table_map(d, t)),
            flip: LocalMap::flip(d),
            set: Some(SetData {
                delta,
                op,
                op_tilde,
            }),
        })
    }

    /// A structure on a free module of rank `dim`; `delta` is `d² × d`,
    /// `op` and `op_tilde` are `d × d²`, `counit` is `1 × d`.
    pub fn linear(
        dim: usize,
        delta: RingMatrix,
        op: RingMatrix,
        counit: Option<RingMatrix>,
        op_tilde: Option<RingMatrix>,
    ) -> Result<Self> {
        Ok(Self {
            backend: Backend::Linear,
            dim,
            delta: LocalMap::new(dim, 1, 2, delta)?,
            op: LocalMap::new(dim, 2, 1, op)?,
            counit: counit.map(|c| LocalMap::new(dim, 1, 0, c)).transpose()?,
            op_tilde: op_tilde.map(|t| LocalMap::new(dim, 2, 1, t)).transpose()?,
            flip: LocalMap::flip(dim),
            set: None,
        })
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &LocalMap {
        &self.delta
    }

    pub fn op(&self) -> &LocalMap {
        &self.op
    }

    pub fn counit(&self) -> Option<&LocalMap> {
        self.counit.as_ref()
    }

    pub fn op_tilde(&self) -> Option<&LocalMap> {
        self.op_tilde.as_ref()
    }

    pub fn flip(&self) -> &LocalMap {
        &self.flip
    }

    pub fn set_data(&self) -> Option<&SetData> {
        self.set.as_ref()
    }

    /// JSON: `{"backend": "set", "size", "delta": [[p, q], …], "op", "op_tilde"?}`
    /// with 1-indexed elements, or `{"backend": "linear", "dim", "delta", "op",
    /// "counit"?, "op_tilde"?}` with matrices in the ring JSON format.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let get = |k: &str| value.get(k);
        let malformed = |m: &str| Error::Malformed(m.to_string());
        match get("backend").and_then(|b| b.as_str()) {
            Some("set") => {
                let size = get("size")
                    .and_then(|v| v.as_u64())
                    .ok_or_else(|| malformed("size"))? as usize;
                let one_based = |v: &serde_json::Value| -> Result<usize> {
                    v.as_u64()
                        .filter(|&x| x >= 1)
                        .map(|x| x as usize - 1)
                        .ok_or_else(|| malformed("elements are 1-indexed integers"))
                };
                let table = |v: &serde_json::Value| -> Result<Vec<Vec<usize>>> {
                    v.as_array()
                        .ok_or_else(|| malformed("table"))?
                        .iter()
                        .map(|r| {
                            r.as_array()
                                .ok_or_else(|| malformed("row"))?
                                .iter()
                                .map(one_based)
                                .collect()
                        })
                        .collect()
                };
                let delta = get("delta")
                    .and_then(|v| v.as_array())
                    .ok_or_else(|| malformed("delta"))?
                    .iter()
                    .map(|p| match p.as_array().map(Vec::as_slice) {
                        Some([a, b]) => Ok((one_based(a)?, one_based(b)?)),
                        _ => Err(malformed("delta entries are pairs")),
                    })
                    .collect::<Result<Vec<_>>>()?;
                let op = table(get("op").ok_or_else(|| malformed("op"))?)?;
                let tilde = get("op_tilde").map(table).transpose()?;
                Self::set(size, delta, op, tilde)
            }
            Some("linear") => {
                let dim = get("dim")
                    .and_then(|v| v.as_u64())
                    .ok_or_else(|| malformed("dim"))? as usize;
                let mat = |k: &str| get(k).map(RingMatrix::from_json).transpose();
                Self::linear(
                    dim,
                    mat("delta")?.ok_or_else(|| malformed("delta"))?,
                    mat("op")?.ok_or_else(|| malformed("op"))?,
                    mat("counit")?,
                    mat("op_tilde")?,
                )
            }
            _ => Err(malformed("backend must be \"set\" or \"linear\"")),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match &self.set {
            Some(s) => {
                let inc = |t: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
                    t.iter()
                        .map(|r| r.iter().map(|x| x + 1).collect())
                        .collect()
                };
                let mut v = serde_json::json!({
                    "backend": "set",
                    "size": self.dim,
                    "delta": s.delta.iter().map(|&(a, b)| [a + 1, b + 1]).collect::<Vec<_>>(),
                    "op": inc(&s.op),
                });
                if let Some(t) = &s.op_tilde {
                    v["op_tilde"] = serde_json::json!(inc(t));
                }
                v
            }
            None => {
                let mut v = serde_json::json!({
                    "backend": "linear",
                    "dim": self.dim,
                    "delta": self.delta.matrix().to_json(),
                    "op": self.op.matrix().to_json(),
                });
                if let Some(c) = &self.counit {
                    v["counit"] = c.matrix().to_json();
                }
                if let Some(t) = &self.op_tilde {
                    v["op_tilde"] = t.matrix().to_json();
                }
                v
            }
        }
    }

    fn agree(&self, k: usize, lhs: &[Step<'_>], rhs: &[Step<'_>]) -> bool {
        composites_agree(self.dim, k, lhs, rhs)
    }
}

/// Per-axiom outcome; `None` where the needed map is absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GsdReport {
    pub coassociative: bool,
    pub weakly_cocommutative: bool,
    pub self_distributive: bool,
    pub compatible: bool,
    pub right_counit: Option<bool>,
    pub twisted_inverse: Option<bool>,
    pub left_cocommutative: bool,
    pub delta_idempotent: bool,
}

impl GsdReport {
    pub fn is_shelf(&self) -> bool {
        self.coassociative && self.weakly_cocommutative && self.self_distributive && self.compatible
    }

    pub fn is_rack(&self) -> bool {
        self.is_shelf() && self.right_counit == Some(true) && self.twisted_inverse == Some(true)
    }

    pub fn is_spindle(&self) -> bool {
        self.is_shelf() && self.left_cocommutative && self.delta_idempotent
    }

    /// Names of the failing checks, in report order.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (name, ok) in [
            ("coassociative", Some(self.coassociative)),
            ("weakly_cocommutative", Some(self.weakly_cocommutative)),
            ("self_distributive", Some(self.self_distributive)),
            ("compatible", Some(self.compatible)),
            ("right_counit", self.right_counit),
            ("twisted_inverse", self.twisted_inverse),
            ("left_cocommutative", Some(self.left_cocommutative)),
            ("delta_idempotent", Some(self.delta_idempotent)),
        ] {
            if ok == Some(false) {
                out.push(name);
            }
        }
        out
    }
}

/// Evaluates every axiom exactly.
pub fn validate(g: &GsdStructure) -> GsdReport {
    let (dl, op, c) = (&g.delta, &g.op, &g.flip);
    let coassociative = g.agree(1, &[at(dl, 1), at(dl, 1)], &[at(dl, 1), at(dl, 2)]);
    let delta3 = [at(dl, 1), at(dl, 1), at(dl, 1)];
    let mut with_c2 = delta3.to_vec();
    with_c2.push(at(c, 2));
    let weakly_cocommutative = g.agree(1, &with_c2, &delta3);
    let self_distributive = g.agree(
        3,
        &[at(op, 1), at(op, 1)],
        &[at(dl, 3), at(c, 2), at(op, 1), at(op, 2), at(op, 1)],
    );
    let compatible = g.agree(
        2,
        &[at(op, 1), at(dl, 1)],
        &[at(dl, 2), at(dl, 1), at(c, 2), at(op, 1), at(op, 2)],
    );
    let id = LocalMap::identity(g.dim);
    let right_counit = g
        .counit
        .as_ref()
        .map(|e| g.agree(1, &[at(dl, 1), at(e, 2)], &[at(&id, 1)]));
    let twisted_inverse = match (&g.counit, &g.op_tilde) {
        (Some(e), Some(t)) => {
            let target = [at(e, 2)];
            Some(
                g.agree(2, &[at(dl, 2), at(c, 2), at(op, 1), at(t, 1)], &target)
                    && g.agree(2, &[at(dl, 2), at(c, 2), at(t, 1), at(op, 1)], &target),
            )
        }
        (Some(_), None) | (None, Some(_)) | (None, None) => None,
    };
    let left_cocommutative = g.agree(
        1,
        &[at(dl, 1), at(dl, 1), at(c, 1)],
        &[at(dl, 1), at(dl, 1)],
    );
    let delta_idempotent = g.agree(1, &[at(dl, 1), at(op, 1)], &[at(&id, 1)]);
    GsdReport {
        coassociative,
        weakly_cocommutative,
        self_distributive,
        compatible,
        right_counit,
        twisted_inverse,
        left_cocommutative,
        delta_idempotent,
    }
}

/// The diagonal structure of a finite shelf.
pub fn from_finite_shelf(table: &FiniteRackTable) -> Result<GsdStructure> {
    let cls = table.classify();
    if cls.class == RackClass::NotShelf {
        return Err(Error::AxiomFailure("table is not self-distributive".into()));
    }
    let m = table.size();
    let tilde = match cls.class {
        RackClass::Rack | RackClass::Quandle => table.inverse_table(),
        _ => None,
    };
    GsdStructure::set(
        m,
        (0..m).map(|a| (a, a)).collect(),
        table.op_table().to_vec(),
        tilde,
    )
}

/// `Δ(v) = ν ⊗ v`, `◁ = μ`; requires `ν` to be a right unit.
pub fn from_uaa(sc: &StructureConstants) -> Result<GsdStructure> {
    sc.check_shapes()?;
    if !sc.is_right_unit()? {
        return Err(Error::AxiomFailure("nu is not a right unit".into()));
    }
    let d = sc.dim;
    let mu = sc.mu.as_ref().expect("checked by is_right_unit");
    let nu = sc.nu.as_ref().expect("checked by is_right_unit");
    let mut delta = RingMatrix::zeros(d * d, d);
    for j in 0..d {
        for (a, &na) in nu.iter().enumerate() {
            if na != 0 {
                delta.set(a * d + j, j, LaurentPoly::constant(na));
            }
        }
    }
    let mut op = RingMatrix::zeros(d, d * d);
    for i in 0..d {
        for j in 0..d {
            for (k, &c) in mu[i][j].iter().enumerate() {
                if c != 0 {
                    op.set(k, i * d + j, LaurentPoly::constant(c));
                }
            }
        }
    }
    GsdStructure::linear(d, delta, op, None, None)
}

/// The structure on `V̄ = ℤ1 ⊕ V` (unit at index 0) built from a bracket.
pub fn from_leibniz(sc: &StructureConstants) -> Result<GsdStructure> {
    sc.check_shapes()?;
    let br = sc
        .bracket
        .as_ref()
        .ok_or_else(|| Error::Malformed("missing bracket".into()))?;
    let d = sc.dim + 1;
    let one = LaurentPoly::one();
    let mut delta = RingMatrix::zeros(d * d, d);
    delta.set(0, 0, one.clone());
    for v in 1..d {
        delta.set(v * d, v, one.clone());
        delta.set(v, v, one.clone());
    }
    let mut op = RingMatrix::zeros(d, d * d);
    let mut tilde = RingMatrix::zeros(d, d * d);
    for v in 0..d {
        op.set(v, v * d, one.clone());
        tilde.set(v, v * d, one.clone());
    }
    for v in 1..d {
        for w in 1..d {
            for (k, &c) in br[v - 1][w - 1].iter().enumerate() {
                if c != 0 {
                    op.set(k + 1, v * d + w, LaurentPoly::constant(c));
                    tilde.set(k + 1, v * d + w, LaurentPoly::constant(-c));
                }
            }
        }
    }
    let mut counit = RingMatrix::zeros(1, d);
    counit.set(0, 0, one);
    GsdStructure::linear(d, delta, op, Some(counit), Some(tilde))
}

/// The group algebra with `Δ(g) = g ⊗ g`, `x ◁ y = y⁻¹xy`, `x ◁̃ y = yxy⁻¹`, `ε(g) = 1`.
pub fn from_group_algebra(group: &FiniteGroup) -> Result<GsdStructure> {
    let n = group.order();
    let delta = LocalMap::from_fn(n, 1, 2, |g| g * n + g);
    let op = LocalMap::from_fn(n, 2, 1, |xy| {
        let (x, y) = (xy / n, xy % n);
        group.mul(group.mul(group.inv(y), x), y)
    });
    let tilde = LocalMap::from_fn(n, 2, 1, |xy| {
        let (x, y) = (xy / n, xy % n);
        group.mul(group.mul(y, x), group.inv(y))
    });
    GsdStructure::linear(
        n,
        delta.matrix().clone(),
        op.matrix().clone(),
        Some(RingMatrix::from_int_rows(&[vec![1; n]])),
        Some(tilde.matrix().clone()),
    )
}

/// `σ = ◁₂ ∘ c₁ ∘ Δ₂`, as a `d² × d²` matrix.
pub fn sigma_matrix(g: &GsdStructure) -> RingMatrix {
    composite_matrix(
        g.dim,
        2,
        2,
        &[at(&g.delta, 2), at(&g.flip, 1), at(&g.op, 2)],
    )
}

/// `σ⁻¹ = ◁̃₁ ∘ c₂ ∘ c₁ ∘ c₂ ∘ Δ₁`, when `◁̃` is present.
pub fn sigma_inv_matrix(g: &GsdStructure) -> Option<RingMatrix> {
    let t = g.op_tilde.as_ref()?;
    let c = &g.flip;
    Some(composite_matrix(
        g.dim,
        2,
        2,
        &[at(&g.delta, 1), at(c, 2), at(c, 1), at(c, 2), at(t, 1)],
    ))
}

/// The induced braiding as a tensor-mode object; requires the shelf axioms,
/// and attaches the inverse exactly when the rack axioms hold.
pub fn braiding_of(g: &GsdStructure) -> Result<LinearBraidedObject> {
    let report = validate(g);
    if !report.is_shelf() {
        return Err(Error::AxiomFailure(format!(
            "not a shelf: {:?}",
            report.failures()
        )));
    }
    let inv = if report.is_rack() {
        sigma_inv_matrix(g)
    } else {
        None
    };
    LinearBraidedObject::new(g.dim, Mode::Tensor, sigma_matrix(g), inv, None)
}

/// The braiding of a set structure as a map on pairs (0-indexed).
pub fn set_braiding(g: &GsdStructure) -> Option<impl Fn(usize, usize) -> (usize, usize) + '_> {
    let s = g.set.as_ref()?;
    Some(move |a: usize, b: usize| {
        let (b1, b2) = s.delta[b];
        (b1, s.op[a][b2])
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoalgebraReport {
    /// `Δ₂ ∘ σ = σ₁ ∘ σ₂ ∘ Δ₁`
    pub semi_braided: bool,
    /// `Δ₁ ∘ σ = σ₂ ∘ σ₁ ∘ Δ₂`
    pub second_compatibility: bool,
    /// `σ ∘ Δ = Δ`
    pub sigma_cocommutative: bool,
}

/// Compatibility of `Δ` with a braiding `sigma` on `V ⊗ V`.
pub fn coalgebra_check(dim: usize, delta: &LocalMap, sigma: &LocalMap) -> CoalgebraReport {
    let agree = |k, l: &[Step<'_>], r: &[Step<'_>]| composites_agree(dim, k, l, r);
    CoalgebraReport {
        semi_braided: agree(
            2,
            &[at(sigma, 1), at(delta, 2)],
            &[at(delta, 1), at(sigma, 2), at(sigma, 1)],
        ),
        second_compatibility: agree(
            2,
            &[at(sigma, 1), at(delta, 1)],
            &[at(delta, 2), at(sigma, 1), at(sigma, 2)],
        ),
        sigma_cocommutative: agree(1, &[at(delta, 1), at(sigma, 1)], &[at(delta, 1)]),
    }
}

pub fn braided_coalgebra_check(g: &GsdStructure) -> Result<CoalgebraReport> {
    let obj = braiding_of(g)?;
    let sigma = LocalMap::new(g.dim, 2, 2, obj.sigma().clone())?;
    Ok(coalgebra_check(g.dim, &g.delta, &sigma))
}

/// Whether `ε` is a character: `(ε ⊗ ε) ∘ Δ = ε` and `ε ∘ ◁ = ε ⊗ ε`.
pub fn is_character(g: &GsdStructure, eps: &LocalMap) -> bool {
    g.agree(1, &[at(&g.delta, 1), at(eps, 1), at(eps, 1)], &[at(eps, 1)])
        && g.agree(2, &[at(&g.op, 1), at(eps, 1)], &[at(eps, 1), at(eps, 1)])
}

/// A `1 × d` covector as a local map.
pub fn covector(dim: usize, values: &[i64]) -> Result<LocalMap> {
    if values.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "covector of length {} on dim {dim}",
            values.len()
        )));
    }
    LocalMap::new(dim, 1, 0, RingMatrix::from_int_rows(&[values.to_vec()]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linrep::{assoc_braiding, group_hopf_braiding, leibniz_braiding, yb_check};
    use crate::sdstruct::dihedral_quandle;

    fn trivial(m: usize) -> FiniteRackTable {
        FiniteRackTable::from_fn(m, |a, _| a).unwrap()
    }

    #[test]
    fn finite_shelves() {
        let g = from_finite_shelf(&trivial(1)).unwrap();
        let r = validate(&g);
        assert!(r.is_spindle() && r.is_rack(), "{r:?}");
        let d3 = from_finite_shelf(&dihedral_quandle(3).unwrap()).unwrap();
        let r = validate(&d3);
        assert!(r.is_rack() && r.is_spindle());
        let obj = braiding_of(&d3).unwrap();
        assert!(yb_check(&obj).unwrap());
        assert!(obj
            .sigma()
            .mul(obj.sigma_inv().unwrap())
            .unwrap()
            .is_identity());
        let sb = set_braiding(&d3).unwrap();
        let t = dihedral_quandle(3).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(sb(a, b), (b, t.op_at(a, b)));
            }
        }
        let not_shelf = FiniteRackTable::new(vec![vec![1, 0], vec![0, 0]]).unwrap();
        assert!(from_finite_shelf(&not_shelf).is_err());
    }

    #[test]
    fn uaa_structure() {
        let sc = StructureConstants::dual_numbers();
        let g = from_uaa(&sc).unwrap();
        let r = validate(&g);
        assert!(r.is_shelf() && r.is_spindle(), "{r:?}");
        assert_eq!(r.right_counit, None);
        // Δ(x) = 1 ⊗ x
        assert_eq!(
            g.delta().matrix().column(1),
            vec![0, 1, 0, 0]
                .into_iter()
                .map(LaurentPoly::constant)
                .collect::<Vec<_>>()
        );
        assert_eq!(
            braiding_of(&g).unwrap().sigma(),
            assoc_braiding(&sc).unwrap().sigma()
        );
        assert!(is_character(&g, &covector(2, &[1, 0]).unwrap()));
        let cr = braided_coalgebra_check(&g).unwrap();
        assert!(cr.semi_braided && cr.sigma_cocommutative);
    }

    #[test]
    fn non_associative_uaa_fails_only_gsd() {
        // ℤ{1, x, y} with all products of x, y zero, then x·y = x
        let mut mu = vec![vec![vec![0; 3]; 3]; 3];
        for i in 0..3 {
            mu[0][i][i] = 1;
            mu[i][0][i] = 1;
        }
        let mut sc = StructureConstants::algebra(mu, vec![1, 0, 0]);
        assert!(validate(&from_uaa(&sc).unwrap()).failures().is_empty());
        sc.mu.as_mut().unwrap()[1][2] = vec![0, 1, 0];
        let r = validate(&from_uaa(&sc).unwrap());
        assert!(!sc.is_associative().unwrap());
        assert_eq!(r.failures(), vec!["self_distributive"]);
    }

    #[test]
    fn leibniz_structures() {
        let sc = StructureConstants::solvable_leibniz();
        let g = from_leibniz(&sc).unwrap();
        let r = validate(&g);
        assert!(r.is_rack() && r.is_spindle(), "{r:?}");
        let obj = braiding_of(&g).unwrap();
        let lin = leibniz_braiding(&sc).unwrap();
        assert_eq!(obj.sigma(), lin.sigma());
        assert_eq!(obj.sigma_inv(), lin.sigma_inv());
        let bad = StructureConstants::leibniz(vec![vec![vec![1]]]);
        assert_eq!(
            validate(&from_leibniz(&bad).unwrap()).failures(),
            vec!["self_distributive"]
        );
    }

    #[test]
    fn group_algebra() {
        let s3 = FiniteGroup::symmetric3();
        let g = from_group_algebra(&s3).unwrap();
        let r = validate(&g);
        assert!(r.is_rack() && r.is_spindle(), "{r:?}");
        let obj = braiding_of(&g).unwrap();
        let hopf = group_hopf_braiding(&s3);
        assert_eq!(obj.sigma(), hopf.sigma());
        assert_eq!(obj.sigma_inv(), hopf.sigma_inv());
        let cr = braided_coalgebra_check(&g).unwrap();
        // (a ◁ b) ◁ b ≠ a ◁ b in S₃, so only the first compatibility holds
        assert!(
            cr.semi_braided && !cr.second_compatibility && cr.sigma_cocommutative,
            "{cr:?}"
        );
        let abelian =
            braided_coalgebra_check(&from_group_algebra(&FiniteGroup::cyclic(3)).unwrap()).unwrap();
        assert!(abelian.second_compatibility);
    }

    #[test]
    fn json_roundtrip() {
        let g = from_finite_shelf(&dihedral_quandle(3).unwrap()).unwrap();
        assert_eq!(GsdStructure::from_json(&g.to_json()).unwrap(), g);
        let l = from_leibniz(&StructureConstants::solvable_leibniz()).unwrap();
        assert_eq!(GsdStructure::from_json(&l.to_json()).unwrap(), l);
    }

    #[test]
    fn off_basis_operation_breaks_compatibility() {
        // diagonal Δ on ℤ{e0, e1} with e1 ◁ e1 = e0 + e1
        let delta = LocalMap::from_fn(2, 1, 2, |x| x * 3);
        let mut op = RingMatrix::zeros(2, 4);
        op.set(0, 0, LaurentPoly::one());
        op.set(0, 1, LaurentPoly::one());
        op.set(1, 2, LaurentPoly::one());
        op.set(0, 3, LaurentPoly::one());
        op.set(1, 3, LaurentPoly::one());
        let g = GsdStructure::linear(2, delta.matrix().clone(), op, None, None).unwrap();
        assert!(!validate(&g).compatible);
    }
}
