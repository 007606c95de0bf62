//! Sparse vectors in tensor powers `V^{⊗k}` and local maps acting on them.
//!
//! A [`LocalMap`] `V^{⊗l} → V^{⊗r}` is applied at a position `p` (1-based),
//! i.e. as `Id^{p−1} ⊗ φ ⊗ Id`. Basis tuples are flattened with the leftmost
//! factor slowest, matching [`RingMatrix::kron`].

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, RingMatrix};

/// A vector in `V^{⊗k}` keyed by basis tuples.
pub type TensorVec = BTreeMap<Vec<usize>, LaurentPoly>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalMap {
    dim: usize,
    arity_in: usize,
    arity_out: usize,
    matrix: RingMatrix,
    columns: Vec<Vec<(usize, LaurentPoly)>>,
}

impl LocalMap {
    /// `matrix` must be `d^{out} × d^{in}`.
    pub fn new(dim: usize, arity_in: usize, arity_out: usize, matrix: RingMatrix) -> Result<Self> {
        let (rows, cols) = (dim.pow(arity_out as u32), dim.pow(arity_in as u32));
        if matrix.rows() != rows || matrix.cols() != cols {
            return Err(Error::DimensionMismatch(format!(
                "local map {arity_in}->{arity_out} on dim {dim} must be {rows}x{cols}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let mut columns = vec![Vec::new(); cols];
        for (&(i, j), p) in matrix.entries() {
            columns[j].push((i, p.clone()));
        }
        Ok(Self {
            dim,
            arity_in,
            arity_out,
            matrix,
            columns,
        })
    }

    /// Linearization of a set map given on flattened indices.
    pub fn from_fn(
        dim: usize,
        arity_in: usize,
        arity_out: usize,
        f: impl Fn(usize) -> usize,
    ) -> Self {
        let cols = dim.pow(arity_in as u32);
        let mut m = RingMatrix::zeros(dim.pow(arity_out as u32), cols);
        for j in 0..cols {
            m.set(f(j), j, LaurentPoly::one());
        }
        Self::new(dim, arity_in, arity_out, m).expect("shape follows arities")
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(dim, 1, 1, RingMatrix::identity(dim)).expect("square")
    }

    pub fn flip(dim: usize) -> Self {
        Self::new(dim, 2, 2, RingMatrix::flip(dim)).expect("square")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity_in(&self) -> usize {
        self.arity_in
    }

    pub fn arity_out(&self) -> usize {
        self.arity_out
    }

    pub fn matrix(&self) -> &RingMatrix {
        &self.matrix
    }

    /// Applies `Id^{pos−1} ⊗ self ⊗ Id` to `v`.
    pub fn apply_at(&self, v: &TensorVec, pos: usize) -> TensorVec {
        let mut out = TensorVec::new();
        let start = pos - 1;
        for (key, coeff) in v {
            let idx = flatten(&key[start..start + self.arity_in], self.dim);
            for (o, c) in &self.columns[idx] {
                let mut k = Vec::with_capacity(key.len() + self.arity_out - self.arity_in);
                k.extend_from_slice(&key[..start]);
                k.extend(unflatten(*o, self.arity_out, self.dim));
                k.extend_from_slice(&key[start + self.arity_in..]);
                accumulate(&mut out, k, &(coeff * c));
            }
        }
        prune(out)
    }
}

fn accumulate(v: &mut TensorVec, key: Vec<usize>, c: &LaurentPoly) {
    let slot = v.entry(key).or_default();
    *slot = &*slot + c;
}

fn prune(mut v: TensorVec) -> TensorVec {
    v.retain(|_, c| !c.is_zero());
    v
}

pub fn flatten(digits: &[usize], dim: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * dim + x)
}

pub fn unflatten(mut index: usize, len: usize, dim: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % dim;
        index /= dim;
    }
    out
}

pub fn basis_vec(key: Vec<usize>) -> TensorVec {
    TensorVec::from([(key, LaurentPoly::one())])
}

/// One step of a composite: a local map at a position.
#[derive(Debug, Clone, Copy)]
pub struct Step<'a> {
    pub map: &'a LocalMap,
    pub pos: usize,
}

pub fn at(map: &LocalMap, pos: usize) -> Step<'_> {
    Step { map, pos }
}

/// Applies the steps in order (first step acts first).
pub fn run(v: &TensorVec, steps: &[Step<'_>]) -> TensorVec {
    let mut cur = v.clone();
    for s in steps {
        cur = s.map.apply_at(&cur, s.pos);
    }
    cur
}

/// Matrix of a composite `V^{⊗k_in} → V^{⊗k_out}`.
pub fn composite_matrix(dim: usize, k_in: usize, k_out: usize, steps: &[Step<'_>]) -> RingMatrix {
    let cols = dim.pow(k_in as u32);
    let mut m = RingMatrix::zeros(dim.pow(k_out as u32), cols);
    for j in 0..cols {
        for (key, c) in run(&basis_vec(unflatten(j, k_in, dim)), steps) {
            m.set(flatten(&key, dim), j, c);
        }
    }
    m
}

/// Whether two composites agree on every basis tuple of `V^{⊗k}`.
pub fn composites_agree(dim: usize, k: usize, lhs: &[Step<'_>], rhs: &[Step<'_>]) -> bool {
    (0..dim.pow(k as u32)).all(|j| {
        let v = basis_vec(unflatten(j, k, dim));
        run(&v, lhs) == run(&v, rhs)
    })
}

/// Adjacent transpositions `c_k` (in order of application) realizing the
/// permutation that moves factor `j` to position `dest[j]` (both 1-based).
pub fn transpositions_for(dest: &[usize]) -> Vec<usize> {
    // current[p] = original factor sitting at position p
    let m = dest.len();
    let mut target: Vec<usize> = vec![0; m];
    for (j, &d) in dest.iter().enumerate() {
        target[d - 1] = j;
    }
    let mut current: Vec<usize> = (0..m).collect();
    let mut out = Vec::new();
    for p in 0..m {
        let q = (p..m)
            .find(|&q| current[q] == target[p])
            .expect("permutation");
        for k in (p..q).rev() {
            current.swap(k, k + 1);
            out.push(k + 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_roundtrip() {
        for i in 0..27 {
            assert_eq!(flatten(&unflatten(i, 3, 3), 3), i);
        }
        assert_eq!(unflatten(5, 3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn flip_matches_matrix() {
        let f = LocalMap::flip(3);
        let m = composite_matrix(3, 3, 3, &[at(&f, 2)]);
        assert_eq!(m, RingMatrix::identity(3).kron(&RingMatrix::flip(3)));
    }

    #[test]
    fn permutation_by_transpositions() {
        let d = 2;
        let f = LocalMap::flip(d);
        let dest = [2, 4, 1, 3, 5];
        let swaps = transpositions_for(&dest);
        let steps: Vec<Step> = swaps.iter().map(|&k| at(&f, k)).collect();
        let v = basis_vec(vec![0, 1, 1, 0, 1]);
        let out = run(&v, &steps);
        let mut expect = vec![0; 5];
        for (j, &x) in [0, 1, 1, 0, 1].iter().enumerate() {
            expect[dest[j] - 1] = x;
        }
        assert_eq!(out, basis_vec(expect));
    }

    #[test]
    fn arity_changes() {
        let delta = LocalMap::from_fn(2, 1, 2, |x| x * 2 + x);
        let eps = LocalMap::new(2, 1, 0, RingMatrix::from_int_rows(&[vec![1, 1]])).unwrap();
        let v = basis_vec(vec![1, 0]);
        let out = run(&v, &[at(&delta, 1), at(&eps, 3)]);
        assert_eq!(out, basis_vec(vec![1, 1]));
    }
}
