//! Linear braided objects and the matrices of virtual braid words.
//!
//! Two monoidal modes: [`Mode::Sum`] objects act on a 2-block `V ⊕ V` and
//! extend blockwise to `Vⁿ`; [`Mode::Tensor`] objects act on `V ⊗ V` and
//! extend by Kronecker products, leftmost factor slowest.

use serde::{Deserialize, Serialize};

use crate::braid::{defining_relations, garside_element, GenKind, Generator, VirtualBraidWord};
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, RingMatrix, Var};
use crate::sdstruct::{FiniteGroup, FiniteRackTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Sum,
    Tensor,
}

/// An object `V` with a braiding `sigma` on its square and a symmetric
/// braiding `c`, optionally with an automorphism `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearBraidedObject {
    dim: usize,
    mode: Mode,
    sigma: RingMatrix,
    sigma_inv: Option<RingMatrix>,
    c: RingMatrix,
    f: Option<(RingMatrix, RingMatrix)>,
}

fn sum_flip(d: usize) -> RingMatrix {
    let perm: Vec<usize> = (0..2 * d).map(|k| (k + d) % (2 * d)).collect();
    RingMatrix::permutation(&perm)
}

impl LinearBraidedObject {
    /// `c` defaults to the flip of the mode.
    pub fn new(
        dim: usize,
        mode: Mode,
        sigma: RingMatrix,
        sigma_inv: Option<RingMatrix>,
        c: Option<RingMatrix>,
    ) -> Result<Self> {
        let local = match mode {
            Mode::Sum => 2 * dim,
            Mode::Tensor => dim * dim,
        };
        let c = c.unwrap_or_else(|| match mode {
            Mode::Sum => sum_flip(dim),
            Mode::Tensor => RingMatrix::flip(dim),
        });
        for (name, m) in [
            ("sigma", Some(&sigma)),
            ("sigma_inv", sigma_inv.as_ref()),
            ("c", Some(&c)),
        ] {
            if let Some(m) = m {
                if m.rows() != local || m.cols() != local {
                    return Err(Error::DimensionMismatch(format!(
                        "{name} is {}x{}, expected {local}x{local}",
                        m.rows(),
                        m.cols()
                    )));
                }
            }
        }
        Ok(Self {
            dim,
            mode,
            sigma,
            sigma_inv,
            c,
            f: None,
        })
    }

    /// Attaches an invertible `d × d` automorphism.
    pub fn with_automorphism(mut self, f: RingMatrix) -> Result<Self> {
        if f.rows() != self.dim || f.cols() != self.dim {
            return Err(Error::DimensionMismatch("automorphism size".into()));
        }
        let inv = f.inverse()?;
        self.f = Some((f, inv));
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn sigma(&self) -> &RingMatrix {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> Option<&RingMatrix> {
        self.sigma_inv.as_ref()
    }

    pub fn c(&self) -> &RingMatrix {
        &self.c
    }

    pub fn automorphism(&self) -> Option<&RingMatrix> {
        self.f.as_ref().map(|(f, _)| f)
    }

    fn automorphism_pair(&self) -> Result<&(RingMatrix, RingMatrix)> {
        self.f
            .as_ref()
            .ok_or_else(|| Error::Unsupported("object has no automorphism".into()))
    }

    /// `a ⊗ b` or `a ⊕ b` according to the mode.
    pub fn pair_map(&self, a: &RingMatrix, b: &RingMatrix) -> RingMatrix {
        match self.mode {
            Mode::Sum => a.direct_sum(b),
            Mode::Tensor => a.kron(b),
        }
    }

    /// Dimension of the `n`-th power.
    pub fn total_dim(&self, n: usize) -> usize {
        match self.mode {
            Mode::Sum => n * self.dim,
            Mode::Tensor => self.dim.pow(n as u32),
        }
    }

    /// Places a local square map at strands `i, i+1` of `n`.
    pub fn embed(&self, local: &RingMatrix, i: usize, n: usize) -> RingMatrix {
        match self.mode {
            Mode::Sum => RingMatrix::identity((i - 1) * self.dim)
                .direct_sum(local)
                .direct_sum(&RingMatrix::identity((n - i - 1) * self.dim)),
            Mode::Tensor => RingMatrix::identity(self.dim.pow(i as u32 - 1))
                .kron(local)
                .kron(&RingMatrix::identity(self.dim.pow((n - i - 1) as u32))),
        }
    }

    fn local(&self, g: Generator) -> Result<&RingMatrix> {
        match g.kind {
            GenKind::Sigma => Ok(&self.sigma),
            GenKind::SigmaInv => self
                .sigma_inv
                .as_ref()
                .ok_or_else(|| Error::MissingInverse(g.to_string())),
            GenKind::Zeta => Ok(&self.c),
        }
    }

    fn with_parts(&self, sigma: RingMatrix, sigma_inv: Option<RingMatrix>, c: RingMatrix) -> Self {
        Self {
            dim: self.dim,
            mode: self.mode,
            sigma,
            sigma_inv,
            c,
            f: self.f.clone(),
        }
    }
}

/// The matrix of a word: the product of the letter matrices in reading
/// order, so the rightmost letter acts first on column vectors.
pub fn rho_word(obj: &LinearBraidedObject, w: &VirtualBraidWord) -> Result<RingMatrix> {
    let n = w.strands();
    let mut acc = RingMatrix::identity(obj.total_dim(n));
    for &g in w.letters() {
        acc = acc.mul(&obj.embed(obj.local(g)?, g.index, n))?;
    }
    Ok(acc)
}

fn yb_holds(obj: &LinearBraidedObject, m: &RingMatrix) -> Result<bool> {
    let (a, b) = (obj.embed(m, 1, 3), obj.embed(m, 2, 3));
    Ok(a.mul(&b)?.mul(&a)? == b.mul(&a)?.mul(&b)?)
}

/// Whether `sigma` satisfies the Yang–Baxter equation on three strands.
pub fn yb_check(obj: &LinearBraidedObject) -> Result<bool> {
    yb_holds(obj, &obj.sigma)
}

/// `None` without a declared inverse, otherwise whether it is two-sided.
pub fn invertible_check(obj: &LinearBraidedObject) -> Result<Option<bool>> {
    let Some(inv) = &obj.sigma_inv else {
        return Ok(None);
    };
    Ok(Some(
        obj.sigma.mul(inv)?.is_identity() && inv.mul(&obj.sigma)?.is_identity(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObjectReport {
    pub yang_baxter: bool,
    pub c_involutive: bool,
    pub c_yang_baxter: bool,
    pub invertible: Option<bool>,
    /// Whether `sigma` commutes with `f ⊗ f`.
    pub f_compatible: Option<bool>,
}

impl ObjectReport {
    pub fn passes(&self) -> bool {
        self.yang_baxter
            && self.c_involutive
            && self.c_yang_baxter
            && self.invertible != Some(false)
            && self.f_compatible != Some(false)
    }
}

pub fn check_object(obj: &LinearBraidedObject) -> Result<ObjectReport> {
    let f_compatible = match &obj.f {
        Some((f, _)) => {
            let ff = obj.pair_map(f, f);
            Some(obj.sigma.mul(&ff)? == ff.mul(&obj.sigma)?)
        }
        None => None,
    };
    Ok(ObjectReport {
        yang_baxter: yb_check(obj)?,
        c_involutive: obj.c.mul(&obj.c)?.is_identity(),
        c_yang_baxter: yb_holds(obj, &obj.c)?,
        invertible: invertible_check(obj)?,
        f_compatible,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub strands: usize,
    pub checked: usize,
    /// `family: lhs = rhs` for each failing relation.
    pub failures: Vec<String>,
}

/// Checks every defining relation on `n` strands as a matrix identity;
/// inverse relations are included exactly when `sigma_inv` is present.
pub fn check_relations(obj: &LinearBraidedObject, n: usize) -> Result<RelationReport> {
    let rels = defining_relations(n, obj.sigma_inv.is_some());
    let mut failures = Vec::new();
    for r in &rels {
        if rho_word(obj, &r.lhs)? != rho_word(obj, &r.rhs)? {
            failures.push(format!("{}: {} = {}", r.family, r.lhs, r.rhs));
        }
    }
    Ok(RelationReport {
        strands: n,
        checked: rels.len(),
        failures,
    })
}

/// `sigma' = c·sigma·c`, and likewise for the inverse.
pub fn twist(obj: &LinearBraidedObject) -> Result<LinearBraidedObject> {
    let conj = |m: &RingMatrix| obj.c.mul(m)?.mul(&obj.c);
    let inv = obj.sigma_inv.as_ref().map(conj).transpose()?;
    Ok(obj.with_parts(conj(&obj.sigma)?, inv, obj.c.clone()))
}

/// Replaces `c` by `c^f = (f⁻¹ ⊗ f)·c`.
pub fn deform_symmetry(obj: &LinearBraidedObject) -> Result<LinearBraidedObject> {
    let (f, f_inv) = obj.automorphism_pair()?;
    let c = obj.pair_map(f_inv, f).mul(&obj.c)?;
    Ok(obj.with_parts(obj.sigma.clone(), obj.sigma_inv.clone(), c))
}

/// The object whose action is isomorphic to that of `obj`:
/// `sigma'' = (f ⊗ f⁻¹)·sigma·(f⁻¹ ⊗ f)` and `c'' = (f ⊗ f⁻¹)²·c`, so that
/// `c = c^{f^{k+1}}` becomes `c^{f^{k−1}}`.
pub fn deform_companion(obj: &LinearBraidedObject) -> Result<LinearBraidedObject> {
    let (f, f_inv) = obj.automorphism_pair()?;
    let left = obj.pair_map(f, f_inv);
    let right = obj.pair_map(f_inv, f);
    let conj = |m: &RingMatrix| left.mul(m)?.mul(&right);
    let inv = obj.sigma_inv.as_ref().map(conj).transpose()?;
    let c = left.mul(&left)?.mul(&obj.c)?;
    Ok(obj.with_parts(conj(&obj.sigma)?, inv, c))
}

/// Whether `p·ρ_a(g) = ρ_b(relabel(g))·p` for every generator `g` on `n` strands.
pub fn intertwines(
    a: &LinearBraidedObject,
    b: &LinearBraidedObject,
    p: &RingMatrix,
    n: usize,
    relabel: impl Fn(Generator) -> Generator,
) -> Result<bool> {
    if a.total_dim(n) != b.total_dim(n) || p.rows() != a.total_dim(n) || !p.is_square() {
        return Err(Error::DimensionMismatch("intertwiner size".into()));
    }
    let mut gens = Vec::new();
    for i in 1..n {
        gens.push(Generator::sigma(i));
        gens.push(Generator::zeta(i));
        if a.sigma_inv.is_some() && b.sigma_inv.is_some() {
            gens.push(Generator::sigma_inv(i));
        }
    }
    for g in gens {
        let h = relabel(g);
        let lhs = p.mul(&a.embed(a.local(g)?, g.index, n))?;
        let rhs = b.embed(b.local(h)?, h.index, n).mul(p)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn intertwiner_check(
    a: &LinearBraidedObject,
    b: &LinearBraidedObject,
    p: &RingMatrix,
    n: usize,
) -> Result<bool> {
    intertwines(a, b, p, n, |g| g)
}

/// `ρ(Δ_n)` built from `c`; it carries generator `i` of `obj` to generator
/// `n − i` of `twist(obj)`.
pub fn garside_intertwiner(obj: &LinearBraidedObject, n: usize) -> Result<RingMatrix> {
    rho_word(obj, &garside_element(n))
}

/// Checks the twist isomorphism on `n` strands.
pub fn garside_intertwiner_check(obj: &LinearBraidedObject, n: usize) -> Result<bool> {
    let p = garside_intertwiner(obj, n)?;
    intertwines(obj, &twist(obj)?, &p, n, |g| Generator {
        kind: g.kind,
        index: n - g.index,
    })
}

/// The isomorphism from the action of `obj` to that of [`deform_companion`]:
/// `ρ(Δ_n)` through `(f ⊗ f⁻¹)·c` after `ρ(Δ_n)` through `c`.
pub fn deform_intertwiner(obj: &LinearBraidedObject, n: usize) -> Result<RingMatrix> {
    let (f, f_inv) = obj.automorphism_pair()?;
    let mid_c = obj.pair_map(f, f_inv).mul(&obj.c)?;
    let mid = obj.with_parts(obj.sigma.clone(), None, mid_c);
    rho_word(&mid, &garside_element(n))?.mul(&rho_word(obj, &garside_element(n))?)
}

/// Sum-mode object with the given `2 × 2` braiding block.
fn sum_object(
    block: [[LaurentPoly; 2]; 2],
    inv: Option<[[LaurentPoly; 2]; 2]>,
) -> Result<LinearBraidedObject> {
    let m =
        |b: [[LaurentPoly; 2]; 2]| RingMatrix::from_rows(b.into_iter().map(Vec::from).collect());
    LinearBraidedObject::new(1, Mode::Sum, m(block)?, inv.map(m).transpose()?, None)
}

/// The virtual Burau object: block `[[0, 1], [t, 1 − t]]`, `c` the flip.
pub fn burau_object() -> LinearBraidedObject {
    let (one, t) = (LaurentPoly::one(), LaurentPoly::t());
    let ti = LaurentPoly::var_pow(Var::T, -1);
    sum_object(
        [[LaurentPoly::zero(), one.clone()], [t.clone(), &one - &t]],
        Some([[&one - &ti, ti], [one, LaurentPoly::zero()]]),
    )
    .expect("fixed shapes")
}

/// Twisted Burau: block `[[0, u], [v, 1 − uv]]` over `ℤ[u^{±1}, v^{±1}]`.
pub fn twisted_burau_object() -> LinearBraidedObject {
    let (one, u, v) = (LaurentPoly::one(), LaurentPoly::u(), LaurentPoly::v());
    let (ui, vi) = (
        LaurentPoly::var_pow(Var::U, -1),
        LaurentPoly::var_pow(Var::V, -1),
    );
    let uv = &u * &v;
    let uvi = &ui * &vi;
    sum_object(
        [[LaurentPoly::zero(), u], [v, &one - &uv]],
        Some([[&one - &uvi, vi], [ui, LaurentPoly::zero()]]),
    )
    .expect("fixed shapes")
}

/// Structure constants of a small algebra with integer coefficients.
///
/// `mu[i][j][k]` is the coefficient of `e_k` in `e_i · e_j`; `bracket` is laid
/// out the same way. `group` is a 1-indexed multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstants {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<Vec<Vec<i64>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<Vec<Vec<i64>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<Vec<Vec<usize>>>,
}

type Tensor3 = Vec<Vec<Vec<i64>>>;

fn check_tensor(t: &Tensor3, d: usize, name: &str) -> Result<()> {
    let ok = t.len() == d
        && t.iter()
            .all(|r| r.len() == d && r.iter().all(|v| v.len() == d));
    if ok {
        Ok(())
    } else {
        Err(Error::Malformed(format!("{name} must be {d}x{d}x{d}")))
    }
}

/// `Σ_k x_k e_k · Σ_l y_l e_l` under the bilinear table `t`.
fn bilinear(t: &Tensor3, x: &[i128], y: &[i128]) -> Vec<i128> {
    let d = t.len();
    let mut out = vec![0i128; d];
    for i in 0..d {
        if x[i] == 0 {
            continue;
        }
        for j in 0..d {
            if y[j] == 0 {
                continue;
            }
            for k in 0..d {
                out[k] += x[i] * y[j] * t[i][j][k] as i128;
            }
        }
    }
    out
}

fn basis(d: usize, i: usize) -> Vec<i128> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

impl StructureConstants {
    pub fn algebra(mu: Tensor3, nu: Vec<i64>) -> Self {
        Self {
            dim: nu.len(),
            mu: Some(mu),
            nu: Some(nu),
            bracket: None,
            group: None,
        }
    }

    pub fn leibniz(bracket: Tensor3) -> Self {
        Self {
            dim: bracket.len(),
            mu: None,
            nu: None,
            bracket: Some(bracket),
            group: None,
        }
    }

    /// `ℤ[x]/(x²)` on the basis `(1, x)`.
    pub fn dual_numbers() -> Self {
        Self::algebra(
            vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]],
            vec![1, 0],
        )
    }

    /// The 2-dimensional Leibniz algebra with `[e₁, e₂] = e₁`, other brackets zero.
    pub fn solvable_leibniz() -> Self {
        Self::leibniz(vec![
            vec![vec![0, 0], vec![1, 0]],
            vec![vec![0, 0], vec![0, 0]],
        ])
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let sc: Self =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        sc.check_shapes()?;
        Ok(sc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }

    pub fn check_shapes(&self) -> Result<()> {
        let d = self.dim;
        if let Some(mu) = &self.mu {
            check_tensor(mu, d, "mu")?;
        }
        if let Some(b) = &self.bracket {
            check_tensor(b, d, "bracket")?;
        }
        if self.nu.as_ref().is_some_and(|nu| nu.len() != d) {
            return Err(Error::Malformed(format!("nu must have length {d}")));
        }
        Ok(())
    }

    fn mu(&self) -> Result<&Tensor3> {
        self.mu
            .as_ref()
            .ok_or_else(|| Error::Malformed("missing mu".into()))
    }

    fn nu(&self) -> Result<Vec<i128>> {
        let nu = self
            .nu
            .as_ref()
            .ok_or_else(|| Error::Malformed("missing nu".into()))?;
        Ok(nu.iter().map(|&x| x as i128).collect())
    }

    fn bracket(&self) -> Result<&Tensor3> {
        self.bracket
            .as_ref()
            .ok_or_else(|| Error::Malformed("missing bracket".into()))
    }

    pub fn is_associative(&self) -> Result<bool> {
        let mu = self.mu()?;
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = bilinear(mu, &basis(d, i), &basis(d, j));
                for k in 0..d {
                    let jk = bilinear(mu, &basis(d, j), &basis(d, k));
                    if bilinear(mu, &ij, &basis(d, k)) != bilinear(mu, &basis(d, i), &jk) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `a · ν = a` for every basis vector.
    pub fn is_right_unit(&self) -> Result<bool> {
        let (mu, nu) = (self.mu()?, self.nu()?);
        Ok((0..self.dim).all(|i| bilinear(mu, &basis(self.dim, i), &nu) == basis(self.dim, i)))
    }

    /// `ν · a = a` for every basis vector.
    pub fn is_left_unit(&self) -> Result<bool> {
        let (mu, nu) = (self.mu()?, self.nu()?);
        Ok((0..self.dim).all(|i| bilinear(mu, &nu, &basis(self.dim, i)) == basis(self.dim, i)))
    }

    /// `[v, [w, u]] = [[v, w], u] − [[v, u], w]` on basis vectors.
    pub fn is_leibniz(&self) -> Result<bool> {
        let br = self.bracket()?;
        let d = self.dim;
        let e = |i| basis(d, i);
        for v in 0..d {
            for w in 0..d {
                for u in 0..d {
                    let lhs = bilinear(br, &e(v), &bilinear(br, &e(w), &e(u)));
                    let a = bilinear(br, &bilinear(br, &e(v), &e(w)), &e(u));
                    let b = bilinear(br, &bilinear(br, &e(v), &e(u)), &e(w));
                    if (0..d).any(|k| lhs[k] != a[k] - b[k]) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The multiplication table as a 0-indexed group.
    pub fn finite_group(&self) -> Result<FiniteGroup> {
        let table = self
            .group
            .as_ref()
            .ok_or_else(|| Error::Malformed("missing group".into()))?;
        let zero_based = table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| {
                        x.checked_sub(1)
                            .ok_or_else(|| Error::Malformed("group entries are 1-indexed".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_table(zero_based)
    }

    /// Adjoins a formal unit at index 0: `V̄ = ℤ1 ⊕ V`, with `1` a Lie unit.
    pub fn with_adjoined_unit(&self) -> Result<Self> {
        let br = self.bracket()?;
        let d = self.dim + 1;
        let mut out = vec![vec![vec![0; d]; d]; d];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    out[i + 1][j + 1][k + 1] = br[i][j][k];
                }
            }
        }
        let mut nu = vec![0; d];
        nu[0] = 1;
        Ok(Self {
            dim: d,
            mu: None,
            nu: Some(nu),
            bracket: Some(out),
            group: None,
        })
    }
}

fn int(x: i64) -> LaurentPoly {
    LaurentPoly::constant(x)
}

/// `sigma(e_i ⊗ e_j) = ν ⊗ (e_i · e_j)`, without validation.
pub fn assoc_braiding_unchecked(sc: &StructureConstants) -> Result<LinearBraidedObject> {
    sc.check_shapes()?;
    let (mu, nu) = (sc.mu()?, sc.nu()?);
    let d = sc.dim;
    let mut m = RingMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            for (a, &na) in nu.iter().enumerate() {
                for (k, &c) in mu[i][j].iter().enumerate() {
                    let v = na as i64 * c;
                    if v != 0 {
                        m.add_to(a * d + k, i * d + j, &int(v));
                    }
                }
            }
        }
    }
    LinearBraidedObject::new(d, Mode::Tensor, m, None, None)
}

/// The weak braiding `ν ⊗ μ` of a unital associative algebra.
pub fn assoc_braiding(sc: &StructureConstants) -> Result<LinearBraidedObject> {
    sc.check_shapes()?;
    if !sc.is_associative()? {
        return Err(Error::AxiomFailure(
            "multiplication is not associative".into(),
        ));
    }
    if !(sc.is_left_unit()? && sc.is_right_unit()?) {
        return Err(Error::AxiomFailure("nu is not a two-sided unit".into()));
    }
    assoc_braiding_unchecked(sc)
}

/// `sigma = c + ν ⊗ [,]` on `V̄ = ℤ1 ⊕ V` (unit at index 0), without validation.
pub fn leibniz_braiding_unchecked(sc: &StructureConstants) -> Result<LinearBraidedObject> {
    sc.check_shapes()?;
    let bar = sc.with_adjoined_unit()?;
    let br = bar.bracket()?;
    let d = bar.dim;
    let mut m = RingMatrix::flip(d);
    for i in 0..d {
        for j in 0..d {
            for (k, &c) in br[i][j].iter().enumerate() {
                if c != 0 {
                    m.add_to(k, i * d + j, &int(c));
                }
            }
        }
    }
    let inv = m.inverse()?;
    LinearBraidedObject::new(d, Mode::Tensor, m, Some(inv), None)
}

/// The braiding of a Leibniz algebra with a formal unit adjoined.
pub fn leibniz_braiding(sc: &StructureConstants) -> Result<LinearBraidedObject> {
    sc.check_shapes()?;
    if !sc.is_leibniz()? {
        return Err(Error::AxiomFailure(
            "bracket fails the Leibniz identity".into(),
        ));
    }
    leibniz_braiding_unchecked(sc)
}

/// Linearization of a set map `X × X → X × X` on `ℤX ⊗ ℤX`.
pub fn linearize_set_braiding(
    size: usize,
    map: impl Fn(usize, usize) -> (usize, usize),
) -> RingMatrix {
    let mut m = RingMatrix::zeros(size * size, size * size);
    for a in 0..size {
        for b in 0..size {
            let (x, y) = map(a, b);
            m.set(x * size + y, a * size + b, LaurentPoly::one());
        }
    }
    m
}

/// `e_g ⊗ e_h ↦ e_h ⊗ e_{h⁻¹gh}` on the group algebra.
pub fn group_hopf_braiding(g: &FiniteGroup) -> LinearBraidedObject {
    let n = g.order();
    let sigma = linearize_set_braiding(n, |a, b| (b, g.mul(g.mul(g.inv(b), a), b)));
    let inv = linearize_set_braiding(n, |a, b| (g.mul(g.mul(a, b), g.inv(a)), a));
    LinearBraidedObject::new(n, Mode::Tensor, sigma, Some(inv), None).expect("square shapes")
}

/// The rack braiding `(a, b) ↦ (b, a ◁ b)` of a finite table, linearized.
pub fn rack_object(table: &FiniteRackTable) -> LinearBraidedObject {
    let n = table.size();
    let sigma = linearize_set_braiding(n, |a, b| (b, table.op_at(a, b)));
    let inv = table
        .inverse_table()
        .map(|t| linearize_set_braiding(n, |a, b| (t[b][a], a)));
    let mut obj =
        LinearBraidedObject::new(n, Mode::Tensor, sigma, inv, None).expect("square shapes");
    if let Some(f) = table.automorphism() {
        let f = RingMatrix::permutation(f);
        obj = obj.with_automorphism(f).expect("permutation is invertible");
    }
    obj
}

/// The scaling transform `[[A, B], [C, D]] ↦ [[A, tB], [t⁻¹C, D]]` realized by
/// substituting `t = s²` and deforming with `f = s`.
///
/// Returns the substituted object (carrying `f`) and its companion.
pub fn scaling_instance(
    obj: &LinearBraidedObject,
) -> Result<(LinearBraidedObject, LinearBraidedObject)> {
    let s2 = LaurentPoly::var_pow(Var::S, 2);
    let sub = |m: &RingMatrix| m.substitute(Var::T, &s2);
    let inv = obj.sigma_inv.as_ref().map(sub).transpose()?;
    let base = LinearBraidedObject {
        dim: obj.dim,
        mode: obj.mode,
        sigma: sub(&obj.sigma)?,
        sigma_inv: inv,
        c: sub(&obj.c)?,
        f: None,
    }
    .with_automorphism(RingMatrix::identity(obj.dim).scale(&LaurentPoly::s()))?;
    let companion = deform_companion(&base)?;
    Ok((base, companion))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;

    fn w(s: &str, n: usize) -> VirtualBraidWord {
        parse_word(s, n).unwrap()
    }

    #[test]
    fn burau_block() {
        let b = burau_object();
        assert_eq!(b.sigma().get(1, 0), LaurentPoly::t());
        assert_eq!(b.sigma().get(1, 1), &LaurentPoly::one() - &LaurentPoly::t());
        assert_eq!(invertible_check(&b).unwrap(), Some(true));
        assert!(yb_check(&b).unwrap());
        let at1 = b.sigma().substitute(Var::T, &LaurentPoly::one()).unwrap();
        assert_eq!(&at1, b.c());
        assert_eq!(
            rho_word(&b, &w("z1", 2)).unwrap(),
            RingMatrix::from_int_rows(&[vec![0, 1], vec![1, 0]])
        );
        assert!(rho_word(&b, &w("s1 S1", 2)).unwrap().is_identity());
        assert!(check_relations(&b, 3).unwrap().failures.is_empty());
    }

    #[test]
    fn burau_misses_forbidden_move() {
        let b = burau_object();
        assert_eq!(
            rho_word(&b, &w("s1 s2 z1", 3)).unwrap(),
            rho_word(&b, &w("z2 s1 s2", 3)).unwrap()
        );
    }

    #[test]
    fn twisted_burau_specializes() {
        let tb = twisted_burau_object();
        assert!(check_object(&tb).unwrap().passes());
        let sub = tb
            .sigma()
            .substitute(Var::U, &LaurentPoly::one())
            .unwrap()
            .substitute(Var::V, &LaurentPoly::t())
            .unwrap();
        assert_eq!(&sub, burau_object().sigma());
    }

    #[test]
    fn twist_laws() {
        let b = burau_object();
        let t = twist(&b).unwrap();
        let one = LaurentPoly::one();
        let tt = LaurentPoly::t();
        let expect =
            RingMatrix::from_rows(vec![vec![&one - &tt, tt], vec![one, LaurentPoly::zero()]])
                .unwrap();
        assert_eq!(t.sigma(), &expect);
        assert_eq!(twist(&t).unwrap(), b);
        assert!(garside_intertwiner_check(&b, 3).unwrap());
        assert!(garside_intertwiner_check(&b, 4).unwrap());
    }

    #[test]
    fn deformation() {
        let b = burau_object()
            .with_automorphism(RingMatrix::identity(1).scale(&LaurentPoly::s()))
            .unwrap();
        let d = deform_symmetry(&b).unwrap();
        let s = LaurentPoly::s();
        let si = LaurentPoly::var_pow(Var::S, -1);
        let expect = RingMatrix::from_rows(vec![
            vec![LaurentPoly::zero(), si],
            vec![s, LaurentPoly::zero()],
        ])
        .unwrap();
        assert_eq!(d.c(), &expect);
        assert!(check_object(&d).unwrap().passes());
        assert!(check_relations(&d, 3).unwrap().failures.is_empty());
        let comp = deform_companion(&d).unwrap();
        assert!(check_relations(&comp, 3).unwrap().failures.is_empty());
        let q = deform_intertwiner(&d, 3).unwrap();
        assert!(intertwiner_check(&d, &comp, &q, 3).unwrap());
        let id = burau_object()
            .with_automorphism(RingMatrix::identity(1))
            .unwrap();
        assert_eq!(deform_symmetry(&id).unwrap().c(), id.c());
    }

    #[test]
    fn scaling() {
        let (base, comp) = scaling_instance(&burau_object()).unwrap();
        assert!(yb_check(&comp).unwrap());
        let s2 = LaurentPoly::var_pow(Var::S, 2);
        let sm2 = LaurentPoly::var_pow(Var::S, -2);
        let sig = base.sigma();
        assert_eq!(comp.sigma().get(0, 1), &sig.get(0, 1) * &s2);
        assert_eq!(comp.sigma().get(1, 0), &sig.get(1, 0) * &sm2);
        assert_eq!(comp.sigma().get(1, 1), sig.get(1, 1));
        let q = deform_intertwiner(&base, 3).unwrap();
        assert!(intertwiner_check(&base, &comp, &q, 3).unwrap());
    }

    #[test]
    fn algebra_braidings() {
        let one_dim = StructureConstants::algebra(vec![vec![vec![1]]], vec![1]);
        assert!(assoc_braiding(&one_dim).unwrap().sigma().is_identity());
        let dual = assoc_braiding(&StructureConstants::dual_numbers()).unwrap();
        assert!(dual.sigma().column(3).iter().all(LaurentPoly::is_zero));
        assert!(yb_check(&dual).unwrap());
        assert!(check_relations(&dual, 3).unwrap().failures.is_empty());

        let abelian = StructureConstants::leibniz(vec![vec![vec![0; 2]; 2]; 2]);
        let obj = leibniz_braiding(&abelian).unwrap();
        assert_eq!(obj.sigma(), &RingMatrix::flip(3));
        let bad = StructureConstants::leibniz(vec![vec![vec![1]]]);
        assert!(leibniz_braiding(&bad).is_err());
        let solv = leibniz_braiding(&StructureConstants::solvable_leibniz()).unwrap();
        assert_eq!(solv.dim(), 3);
        assert!(check_object(&solv).unwrap().passes());
        assert!(check_relations(&solv, 3).unwrap().failures.is_empty());
    }

    #[test]
    fn group_braiding_matches_conjugation_rack() {
        for (_, g) in FiniteGroup::small_groups() {
            let hopf = group_hopf_braiding(&g);
            let rack = rack_object(&g.conjugation_quandle());
            assert_eq!(hopf.sigma(), rack.sigma());
            assert_eq!(hopf.sigma_inv(), rack.sigma_inv());
            if g.is_abelian() {
                assert_eq!(hopf.sigma(), hopf.c());
            }
        }
    }

    #[test]
    fn structure_constants_json() {
        let sc = StructureConstants::dual_numbers();
        let back = StructureConstants::from_json(&sc.to_json()).unwrap();
        assert_eq!(back, sc);
        let bad = serde_json::json!({"dim": 2, "mu": [[[1]]], "nu": [1, 0]});
        assert!(StructureConstants::from_json(&bad).is_err());
    }
}
