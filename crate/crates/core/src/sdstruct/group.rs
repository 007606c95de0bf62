use super::table::FiniteRackTable;
use crate::error::{Error, Result};

/// A finite group given by its multiplication table on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if n == 0
            || mul
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(Error::Malformed(
                "group table must be square over 0..order".into(),
            ));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::AxiomFailure("group table is not associative".into()));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::AxiomFailure("group table has no identity".into()))?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mul[a][b] == identity && mul[b][a] == identity)
                    .ok_or_else(|| Error::AxiomFailure("group element without inverse".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            mul,
            identity,
            inverse,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        Self::from_table(
            (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
        )
        .expect("cyclic group table is valid")
    }

    pub fn klein_four() -> Self {
        Self::from_table((0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect())
            .expect("Klein table is valid")
    }

    /// Permutations of `{0,1,2}` in lexicographic order of their image lists.
    ///
    /// Index 0 is the identity; 1 = (2 3), 2 = (1 2), 3 = (1 2 3), 4 = (1 3 2),
    /// 5 = (1 3), in 1-based cycle notation.
    pub fn symmetric3() -> Self {
        let perms = Self::s3_permutations();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mul = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        Self::from_table(mul).expect("S3 table is valid")
    }

    /// Image lists of the elements of [`FiniteGroup::symmetric3`], in index order.
    pub fn s3_permutations() -> Vec<[usize; 3]> {
        vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ]
    }

    /// Every group of order at most 6, up to isomorphism.
    pub fn small_groups() -> Vec<(&'static str, Self)> {
        vec![
            ("Z1", Self::cyclic(1)),
            ("Z2", Self::cyclic(2)),
            ("Z3", Self::cyclic(3)),
            ("Z4", Self::cyclic(4)),
            ("V4", Self::klein_four()),
            ("Z5", Self::cyclic(5)),
            ("Z6", Self::cyclic(6)),
            ("S3", Self::symmetric3()),
        ]
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// `b⁻¹ a b`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// The conjugation quandle `a ◁ b = b⁻¹ab`, `a ◁̃ b = bab⁻¹`.
    pub fn conjugation_quandle(&self) -> FiniteRackTable {
        let n = self.order();
        let op = (0..n)
            .map(|a| (0..n).map(|b| self.conjugate(a, b)).collect())
            .collect();
        let inv = (0..n)
            .map(|a| (0..n).map(|b| self.conjugate(a, self.inv(b))).collect())
            .collect();
        FiniteRackTable::new(op)
            .and_then(|t| t.with_inverse(inv))
            .expect("conjugation is a quandle")
    }
}
