//! Smith normal form over ℤ by pivoted Euclidean reduction.
//!
//! The pivot is always the entry of smallest nonzero absolute value in the
//! active submatrix, ties going to the lowest `(row, col)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::RingMatrix;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// Invariant factors `d₁ | d₂ | …`, padded with zeros to `min(rows, cols)`.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    /// The invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| **d > BigInt::one())
            .cloned()
            .collect()
    }
}

/// A full decomposition `P · A · Q = D` with unimodular `P`, `Q`.
#[derive(Debug, Clone)]
pub struct SnfDecomposition {
    pub result: SnfResult,
    pub p: Vec<Vec<BigInt>>,
    pub p_inv: Vec<Vec<BigInt>>,
    pub q: Vec<Vec<BigInt>>,
}

impl SnfDecomposition {
    /// Whether the integer vector `v` lies in the column span of the original matrix.
    pub fn column_span_contains(&self, v: &[BigInt]) -> bool {
        let pv = mat_vec(&self.p, v);
        pv.iter().enumerate().all(|(i, x)| {
            if x.is_zero() {
                return true;
            }
            match self.result.diagonal.get(i) {
                Some(d) if !d.is_zero() => x.is_multiple_of(d),
                _ => false,
            }
        })
    }
}

fn mat_vec(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect()
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

struct Reducer {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    track: bool,
    p: Vec<Vec<BigInt>>,
    p_inv: Vec<Vec<BigInt>>,
    q: Vec<Vec<BigInt>>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if self.track {
            self.p.swap(i, j);
            for row in &mut self.p_inv {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a {
            row.swap(i, j);
        }
        if self.track {
            for row in &mut self.q {
                row.swap(i, j);
            }
        }
    }

    /// row_dst -= k · row_src
    fn row_axpy(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            if !self.a[src][c].is_zero() {
                let d = k * &self.a[src][c];
                self.a[dst][c] -= d;
            }
        }
        if self.track {
            for c in 0..self.rows {
                if !self.p[src][c].is_zero() {
                    let d = k * &self.p[src][c];
                    self.p[dst][c] -= d;
                }
            }
            // The inverse of the row operation adds k · column dst to column src.
            for r in 0..self.rows {
                if !self.p_inv[r][dst].is_zero() {
                    let d = k * &self.p_inv[r][dst];
                    self.p_inv[r][src] += d;
                }
            }
        }
    }

    /// col_dst -= k · col_src
    fn col_axpy(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            if !self.a[r][src].is_zero() {
                let d = k * &self.a[r][src];
                self.a[r][dst] -= d;
            }
        }
        if self.track {
            for r in 0..self.cols {
                if !self.q[r][src].is_zero() {
                    let d = k * &self.q[r][src];
                    self.q[r][dst] -= d;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -std::mem::take(x);
        }
        if self.track {
            for x in &mut self.p[i] {
                *x = -std::mem::take(x);
            }
            for row in &mut self.p_inv {
                row[i] = -std::mem::take(&mut row[i]);
            }
        }
    }

    fn smallest_from(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for r in t..self.rows {
            for c in t..self.cols {
                let x = &self.a[r][c];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(b, _, _)| ax < *b) {
                    best = Some((ax, r, c));
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    fn run(&mut self) {
        let mut t = 0;
        while t < self.rows.min(self.cols) {
            let Some((r, c)) = self.smallest_from(t) else {
                break;
            };
            self.swap_rows(t, r);
            self.swap_cols(t, c);
            // Reduce the pivot row and column; a nonzero remainder is strictly
            // smaller than the pivot, so re-pivoting terminates.
            let mut dirty = false;
            for i in t + 1..self.rows {
                if self.a[i][t].is_zero() {
                    continue;
                }
                let q = self.a[i][t].div_floor(&self.a[t][t]);
                self.row_axpy(i, t, &q);
                if !self.a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..self.cols {
                if self.a[t][j].is_zero() {
                    continue;
                }
                let q = self.a[t][j].div_floor(&self.a[t][t]);
                self.col_axpy(j, t, &q);
                if !self.a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Pivot must divide the rest of the active block.
            let offender = (t + 1..self.rows).find_map(|i| {
                (t + 1..self.cols)
                    .find(|&j| !self.a[i][j].is_multiple_of(&self.a[t][t]))
                    .map(|_| i)
            });
            if let Some(i) = offender {
                self.row_axpy(t, i, &BigInt::from(-1));
                continue;
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
    }
}

fn reduce(a: Vec<Vec<BigInt>>, cols: usize, track: bool) -> Reducer {
    let rows = a.len();
    let mut red = Reducer {
        a,
        rows,
        cols,
        track,
        p: if track { identity(rows) } else { Vec::new() },
        p_inv: if track { identity(rows) } else { Vec::new() },
        q: if track { identity(cols) } else { Vec::new() },
    };
    red.run();
    red
}

fn result_of(red: &Reducer) -> SnfResult {
    let k = red.rows.min(red.cols);
    let diagonal: Vec<BigInt> = (0..k).map(|i| red.a[i][i].clone()).collect();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    SnfResult { diagonal, rank }
}

/// Invariant factors of an integer matrix.
pub fn smith_normal_form(m: &RingMatrix) -> Result<SnfResult> {
    let a = m.to_integer_rows()?;
    Ok(result_of(&reduce(a, m.cols(), false)))
}

pub fn smith_normal_form_dense(a: &[Vec<BigInt>], cols: usize) -> SnfResult {
    result_of(&reduce(a.to_vec(), cols, false))
}

/// Invariant factors together with the unimodular transforms.
pub fn smith_decomposition(m: &RingMatrix) -> Result<SnfDecomposition> {
    let a = m.to_integer_rows()?;
    let red = reduce(a, m.cols(), true);
    let result = result_of(&red);
    Ok(SnfDecomposition {
        result,
        p: red.p,
        p_inv: red.p_inv,
        q: red.q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let m = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                (0..m)
                    .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn diagonal_two_three() {
        let m = RingMatrix::from_int_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&m).unwrap();
        assert_eq!(snf.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(snf.rank, 2);
    }

    #[test]
    fn zero_and_identity() {
        assert_eq!(smith_normal_form(&RingMatrix::zeros(3, 2)).unwrap().rank, 0);
        let snf = smith_normal_form(&RingMatrix::identity(4)).unwrap();
        assert_eq!(snf.rank, 4);
        assert!(snf.diagonal.iter().all(|d| d.is_one()));
    }

    #[test]
    fn rejects_laurent_entries() {
        let mut m = RingMatrix::identity(2);
        m.set(0, 1, crate::ring::LaurentPoly::t());
        assert!(smith_normal_form(&m).is_err());
    }

    #[test]
    fn transforms_reconstruct_diagonal() {
        let rows = vec![
            vec![4, 6, 2],
            vec![-3, 9, 12],
            vec![8, 0, -4],
            vec![1, 1, 1],
        ];
        let m = RingMatrix::from_int_rows(&rows);
        let dec = smith_decomposition(&m).unwrap();
        let a = big(&rows);
        let pa = matmul(&dec.p, &a);
        let paq = matmul(&pa, &dec.q);
        for (i, row) in paq.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(*x, dec.result.diagonal[i]);
                } else {
                    assert!(x.is_zero());
                }
            }
        }
        let id = matmul(&dec.p, &dec.p_inv);
        assert_eq!(id, identity(4));
        for w in dec.result.diagonal.windows(2) {
            if !w[1].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn column_span_membership() {
        let m = RingMatrix::from_int_rows(&[vec![2, 0], vec![0, 2], vec![0, 0]]);
        let dec = smith_decomposition(&m).unwrap();
        let v = |x: &[i64]| x.iter().map(|&y| BigInt::from(y)).collect::<Vec<_>>();
        assert!(dec.column_span_contains(&v(&[4, -2, 0])));
        assert!(!dec.column_span_contains(&v(&[1, 0, 0])));
        assert!(!dec.column_span_contains(&v(&[0, 0, 2])));
    }
}
