//! Sparse matrices over [`LaurentPoly`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{LaurentPoly, Var};
use crate::error::{Error, Result};

/// A sparse `rows × cols` matrix. Only nonzero entries are stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl RingMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), LaurentPoly::one());
        }
        m
    }

    /// Permutation matrix sending basis vector `j` to basis vector `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.entries.insert((i, j), LaurentPoly::one());
        }
        m
    }

    /// The swap `e_i ⊗ e_j ↦ e_j ⊗ e_i` on a `d²`-dimensional tensor square.
    pub fn flip(d: usize) -> Self {
        let perm: Vec<usize> = (0..d * d).map(|k| (k % d) * d + k / d).collect();
        Self::permutation(&perm)
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for (j, p) in row.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        Ok(m)
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, LaurentPoly::constant(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> LaurentPoly {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn get_ref(&self, i: usize, j: usize) -> Option<&LaurentPoly> {
        self.entries.get(&(i, j))
    }

    pub fn set(&mut self, i: usize, j: usize, value: LaurentPoly) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        if value.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &LaurentPoly) {
        let cur = self.get(i, j);
        self.set(i, j, &cur + value);
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &LaurentPoly)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.entries.len() == self.rows
            && self.entries.iter().all(|(&(i, j), p)| i == j && p.is_one())
    }

    fn row_entries(&self, i: usize) -> impl Iterator<Item = (usize, &LaurentPoly)> {
        self.entries
            .range((i, 0)..(i + 1, 0))
            .map(|(&(_, j), p)| (j, p))
    }

    pub fn mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RingMatrix::zeros(self.rows, other.cols);
        let mut acc: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        let mut current_row = None;
        let flush = |out: &mut RingMatrix, row: usize, acc: &mut BTreeMap<usize, LaurentPoly>| {
            for (j, p) in std::mem::take(acc) {
                if !p.is_zero() {
                    out.entries.insert((row, j), p);
                }
            }
        };
        for (&(i, k), a) in &self.entries {
            if current_row != Some(i) {
                if let Some(r) = current_row {
                    flush(&mut out, r, &mut acc);
                }
                current_row = Some(i);
            }
            for (j, b) in other.row_entries(k) {
                let prod = a * b;
                let slot = acc.entry(j).or_default();
                *slot = &*slot + &prod;
            }
        }
        if let Some(r) = current_row {
            flush(&mut out, r, &mut acc);
        }
        Ok(out)
    }

    /// Product of a sequence of matrices, left to right.
    pub fn product<'a, I>(mats: I, dim: usize) -> Result<RingMatrix>
    where
        I: IntoIterator<Item = &'a RingMatrix>,
    {
        let mut acc = RingMatrix::identity(dim);
        for m in mats {
            acc = acc.mul(m)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (&(i, j), p) in &other.entries {
            out.add_to(i, j, p);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RingMatrix {
        self.scale(&LaurentPoly::constant(-1))
    }

    pub fn scale(&self, c: &LaurentPoly) -> RingMatrix {
        let mut out = RingMatrix::zeros(self.rows, self.cols);
        for (&(i, j), p) in &self.entries {
            out.set(i, j, p * c);
        }
        out
    }

    fn check_same_shape(&self, other: &RingMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut out = RingMatrix::zeros(self.cols, self.rows);
        for (&(i, j), p) in &self.entries {
            out.entries.insert((j, i), p.clone());
        }
        out
    }

    /// Kronecker product with `self` as the outer (slow) index.
    pub fn kron(&self, other: &RingMatrix) -> RingMatrix {
        let mut out = RingMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for (&(i, j), a) in &self.entries {
            for (&(k, l), b) in &other.entries {
                out.entries
                    .insert((i * other.rows + k, j * other.cols + l), a * b);
            }
        }
        out
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &RingMatrix) -> RingMatrix {
        let mut out = RingMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for (&(i, j), p) in &self.entries {
            out.entries.insert((i, j), p.clone());
        }
        for (&(i, j), p) in &other.entries {
            out.entries
                .insert((self.rows + i, self.cols + j), p.clone());
        }
        out
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> RingMatrix {
        let mut out = RingMatrix::zeros(r1 - r0, c1 - c0);
        for (&(i, j), p) in &self.entries {
            if (r0..r1).contains(&i) && (c0..c1).contains(&j) {
                out.entries.insert((i - r0, j - c0), p.clone());
            }
        }
        out
    }

    /// Places `block` with its top-left corner at `(r0, c0)`, overwriting.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &RingMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j));
            }
        }
    }

    pub fn hstack(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts".into()));
        }
        let mut out = RingMatrix::zeros(self.rows, self.cols + other.cols);
        for (&(i, j), p) in &self.entries {
            out.entries.insert((i, j), p.clone());
        }
        for (&(i, j), p) in &other.entries {
            out.entries.insert((i, self.cols + j), p.clone());
        }
        Ok(out)
    }

    pub fn column(&self, j: usize) -> Vec<LaurentPoly> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn substitute(&self, var: Var, value: &LaurentPoly) -> Result<RingMatrix> {
        let mut out = RingMatrix::zeros(self.rows, self.cols);
        for (&(i, j), p) in &self.entries {
            let q = p.substitute(var, value).ok_or_else(|| {
                Error::Unsupported("negative power substituted by a non-unit".into())
            })?;
            out.set(i, j, q);
        }
        Ok(out)
    }

    pub fn is_integer(&self) -> bool {
        self.entries.values().all(LaurentPoly::is_constant)
    }

    /// Dense integer entries; fails on any non-constant entry.
    pub fn to_integer_rows(&self) -> Result<Vec<Vec<BigInt>>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (&(i, j), p) in &self.entries {
            out[i][j] = p
                .as_integer()
                .ok_or(Error::NonIntegerEntry { row: i, col: j })?;
        }
        Ok(out)
    }

    pub fn from_integer_rows(rows: &[Vec<BigInt>], cols: usize) -> RingMatrix {
        let mut m = RingMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    m.entries.insert((i, j), LaurentPoly::constant(x.clone()));
                }
            }
        }
        m
    }

    /// Two-sided inverse over the Laurent ring.
    ///
    /// Gauss–Jordan with unit pivots is tried first; integer matrices fall back
    /// to rational elimination and succeed when the inverse is integral.
    pub fn inverse(&self) -> Result<RingMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "inverse of a non-square matrix".into(),
            ));
        }
        if let Some(inv) = self.unit_pivot_inverse() {
            return Ok(inv);
        }
        if self.is_integer() {
            return self.rational_inverse();
        }
        Err(Error::NotInvertible)
    }

    fn unit_pivot_inverse(&self) -> Option<RingMatrix> {
        let n = self.rows;
        let mut a: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j)).collect())
            .collect();
        let mut b: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            LaurentPoly::one()
                        } else {
                            LaurentPoly::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| a[r][col].inverse().is_some())?;
            a.swap(col, pivot_row);
            b.swap(col, pivot_row);
            let inv = a[col][col].inverse().unwrap();
            for k in 0..n {
                a[col][k] = &a[col][k] * &inv;
                b[col][k] = &b[col][k] * &inv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for k in 0..n {
                    let da = &factor * &a[col][k];
                    a[r][k] = &a[r][k] - &da;
                    let db = &factor * &b[col][k];
                    b[r][k] = &b[r][k] - &db;
                }
            }
        }
        RingMatrix::from_rows(b).ok()
    }

    fn rational_inverse(&self) -> Result<RingMatrix> {
        let n = self.rows;
        let ints = self.to_integer_rows()?;
        let mut a: Vec<Vec<BigRational>> = ints
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        let mut b: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::NotInvertible)?;
            a.swap(col, pivot_row);
            b.swap(col, pivot_row);
            let inv = a[col][col].recip();
            for k in 0..n {
                a[col][k] = &a[col][k] * &inv;
                b[col][k] = &b[col][k] * &inv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for k in 0..n {
                    let da = &factor * &a[col][k];
                    a[r][k] = &a[r][k] - &da;
                    let db = &factor * &b[col][k];
                    b[r][k] = &b[r][k] - &db;
                }
            }
        }
        let mut out = RingMatrix::zeros(n, n);
        for (i, row) in b.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                if !x.is_integer() {
                    return Err(Error::NotInvertible);
                }
                out.set(i, j, LaurentPoly::constant(x.to_integer()));
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(i, j), p)| serde_json::json!([i, j, p.to_json()]))
            .collect();
        serde_json::json!({"rows": self.rows, "cols": self.cols, "entries": entries})
    }

    pub fn from_json(value: &serde_json::Value) -> Result<RingMatrix> {
        let bad = |m: &str| Error::Malformed(m.to_string());
        let rows = value["rows"].as_u64().ok_or_else(|| bad("missing rows"))? as usize;
        let cols = value["cols"].as_u64().ok_or_else(|| bad("missing cols"))? as usize;
        let mut m = RingMatrix::zeros(rows, cols);
        let entries = value["entries"]
            .as_array()
            .ok_or_else(|| bad("missing entries"))?;
        for e in entries {
            let triple = e
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| bad("entry must be [i, j, poly]"))?;
            let i = triple[0].as_u64().ok_or_else(|| bad("bad row index"))? as usize;
            let j = triple[1].as_u64().ok_or_else(|| bad("bad column index"))? as usize;
            if i >= rows || j >= cols {
                return Err(bad("entry index out of bounds"));
            }
            let p = LaurentPoly::from_json(&triple[2]).map_err(Error::Malformed)?;
            m.add_to(i, j, &p);
        }
        Ok(m)
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}
