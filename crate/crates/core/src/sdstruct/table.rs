use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{Carrier, EqDecision};
use crate::error::{Error, Result};

/// An operation table on `0..size` with `op[a][b] = a ◁ b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteRackTable {
    size: usize,
    op: Vec<Vec<usize>>,
    inv: Option<Vec<Vec<usize>>>,
    f: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RackClass {
    NotShelf,
    Shelf,
    Rack,
    Quandle,
}

impl fmt::Display for RackClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RackClass::NotShelf => "NotShelf",
            RackClass::Shelf => "Shelf",
            RackClass::Rack => "Rack",
            RackClass::Quandle => "Quandle",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub class: RackClass,
    /// Shelf with `a ◁ a = a` for all `a`.
    pub spindle: bool,
    /// Whether a supplied `f` is a shelf automorphism; `None` without `f`.
    pub virtual_ok: Option<bool>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    size: usize,
    op: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inv: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    f: Option<Vec<usize>>,
}

fn check_square(size: usize, t: &[Vec<usize>], what: &str) -> Result<()> {
    if t.len() != size || t.iter().any(|row| row.len() != size) {
        return Err(Error::Malformed(format!("{what} must be {size}x{size}")));
    }
    if t.iter().flatten().any(|&x| x >= size) {
        return Err(Error::Malformed(format!(
            "{what} has an entry outside the carrier"
        )));
    }
    Ok(())
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

impl FiniteRackTable {
    /// Builds a table with no inverse or automorphism; any operation is accepted.
    pub fn new(op: Vec<Vec<usize>>) -> Result<Self> {
        let size = op.len();
        check_square(size, &op, "op")?;
        Ok(Self {
            size,
            op,
            inv: None,
            f: None,
        })
    }

    pub fn from_fn(size: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::new(
            (0..size)
                .map(|a| (0..size).map(|b| op(a, b)).collect())
                .collect(),
        )
    }

    /// Attaches an inverse table, which must satisfy `(a◁b)◁̃b = (a◁̃b)◁b = a`.
    pub fn with_inverse(mut self, inv: Vec<Vec<usize>>) -> Result<Self> {
        check_square(self.size, &inv, "inv")?;
        for a in 0..self.size {
            for b in 0..self.size {
                if inv[self.op[a][b]][b] != a || self.op[inv[a][b]][b] != a {
                    return Err(Error::AxiomFailure(format!(
                        "inverse table fails the rack identity at ({}, {})",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        self.inv = Some(inv);
        Ok(self)
    }

    /// Attaches a virtualizing bijection `f`, which must respect `◁`.
    pub fn with_automorphism(mut self, f: Vec<usize>) -> Result<Self> {
        if f.len() != self.size || !is_permutation(&f) {
            return Err(Error::Malformed(
                "f must be a permutation of the carrier".into(),
            ));
        }
        if !self.respects(&f) {
            return Err(Error::AxiomFailure("f is not a shelf automorphism".into()));
        }
        self.f = Some(f);
        Ok(self)
    }

    fn respects(&self, f: &[usize]) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| f[self.op[a][b]] == self.op[f[a]][f[b]]))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn op_at(&self, a: usize, b: usize) -> usize {
        self.op[a][b]
    }

    pub fn op_table(&self) -> &[Vec<usize>] {
        &self.op
    }

    pub fn automorphism(&self) -> Option<&[usize]> {
        self.f.as_deref()
    }

    /// The supplied inverse, or one derived column by column when each
    /// right translation is a bijection.
    pub fn inverse_table(&self) -> Option<Vec<Vec<usize>>> {
        if let Some(inv) = &self.inv {
            return Some(inv.clone());
        }
        let m = self.size;
        let mut inv = vec![vec![usize::MAX; m]; m];
        for b in 0..m {
            for a in 0..m {
                let c = self.op[a][b];
                if inv[c][b] != usize::MAX {
                    return None;
                }
                inv[c][b] = a;
            }
        }
        Some(inv)
    }

    pub fn is_self_distributive(&self) -> bool {
        let m = self.size;
        let op = &self.op;
        (0..m).all(|a| (0..m).all(|b| (0..m).all(|c| op[op[a][b]][c] == op[op[a][c]][op[b][c]])))
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.size).all(|a| self.op[a][a] == a)
    }

    pub fn classify(&self) -> Classification {
        let sd = self.is_self_distributive();
        let idem = self.is_idempotent();
        let class = if !sd {
            RackClass::NotShelf
        } else if self.inverse_table().is_none() {
            RackClass::Shelf
        } else if idem {
            RackClass::Quandle
        } else {
            RackClass::Rack
        };
        Classification {
            class,
            spindle: sd && idem,
            virtual_ok: self.f.as_ref().map(|f| self.respects(f)),
        }
    }

    /// The same operation with its inverse table attached, when it is a rack.
    pub fn completed(&self) -> Self {
        let mut out = self.clone();
        if out.inv.is_none() {
            out.inv = self.inverse_table();
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let shift = |t: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            t.iter()
                .map(|r| r.iter().map(|x| x + 1).collect())
                .collect()
        };
        let js = TableJson {
            size: self.size,
            op: shift(&self.op),
            inv: self.inv.as_ref().map(shift),
            f: self.f.as_ref().map(|f| f.iter().map(|x| x + 1).collect()),
        };
        serde_json::to_value(js).expect("table serializes")
    }

    /// Reads the 1-indexed JSON table format.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let js: TableJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::Malformed(format!("rack table: {e}")))?;
        let unshift = |t: Vec<Vec<usize>>| -> Result<Vec<Vec<usize>>> {
            t.into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|x| {
                            x.checked_sub(1)
                                .ok_or_else(|| Error::Malformed("entries are 1-indexed".into()))
                        })
                        .collect()
                })
                .collect()
        };
        let op = unshift(js.op)?;
        if op.len() != js.size {
            return Err(Error::Malformed("size does not match op".into()));
        }
        let mut t = Self::new(op)?;
        if let Some(inv) = js.inv {
            t = t.with_inverse(unshift(inv)?)?;
        }
        if let Some(f) = js.f {
            let f = f
                .into_iter()
                .map(|x| {
                    x.checked_sub(1)
                        .ok_or_else(|| Error::Malformed("f is 1-indexed".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            t = t.with_automorphism(f)?;
        }
        Ok(t)
    }
}

impl Carrier for FiniteRackTable {
    type Elem = usize;
    type Key = usize;

    fn name(&self) -> String {
        format!("table{}", self.size)
    }

    fn op(&self, a: &usize, b: &usize) -> usize {
        self.op[*a][*b]
    }

    fn op_inv(&self, a: &usize, b: &usize) -> Option<usize> {
        match &self.inv {
            Some(inv) => Some(inv[*a][*b]),
            None => (0..self.size).find(|&x| self.op[x][*b] == *a),
        }
    }

    fn has_inverse(&self) -> bool {
        self.inv.is_some() || self.inverse_table().is_some()
    }

    fn f(&self, a: &usize) -> Option<usize> {
        self.f.as_ref().map(|f| f[*a])
    }

    fn f_inv(&self, a: &usize) -> Option<usize> {
        self.f
            .as_ref()
            .and_then(|f| f.iter().position(|&x| x == *a))
    }

    fn is_virtual(&self) -> bool {
        self.f.is_some()
    }

    fn samples(&self) -> Vec<usize> {
        (0..self.size).collect()
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn decide_eq(&self, a: &usize, b: &usize) -> EqDecision {
        if a == b {
            EqDecision::Equal
        } else {
            EqDecision::NotEqual
        }
    }

    fn key(&self, a: &usize) -> usize {
        *a
    }

    fn format_elem(&self, a: &usize) -> String {
        (a + 1).to_string()
    }

    fn parse_elem(&self, text: &str) -> Result<usize> {
        let x: usize = text
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad element {text:?}")))?;
        if x == 0 || x > self.size {
            return Err(Error::Parse(format!(
                "element {x} outside 1..={}",
                self.size
            )));
        }
        Ok(x - 1)
    }
}

/// `a ◁ b = t·a + (1−t)·b mod m`, with its inverse table.
pub fn alexander_quandle(m: usize, t: i64) -> Result<FiniteRackTable> {
    if m == 0 {
        return Err(Error::Malformed("modulus must be positive".into()));
    }
    let mi = m as i64;
    let tm = t.mod_floor(&mi);
    let g = tm.extended_gcd(&mi);
    if g.gcd != 1 && m > 1 {
        return Err(Error::NonUnit {
            value: t,
            modulus: mi,
        });
    }
    let tinv = g.x.mod_floor(&mi);
    let lin = |k: i64, a: usize, b: usize| -> usize {
        (k * a as i64 + (1 - k) * b as i64).mod_floor(&mi) as usize
    };
    let op = (0..m)
        .map(|a| (0..m).map(|b| lin(tm, a, b)).collect())
        .collect();
    let inv = (0..m)
        .map(|a| (0..m).map(|b| lin(tinv, a, b)).collect())
        .collect();
    FiniteRackTable::new(op)?.with_inverse(inv)
}

/// The dihedral quandle `a ◁ b = 2b − a mod m`.
pub fn dihedral_quandle(m: usize) -> Result<FiniteRackTable> {
    if m == 0 {
        return Err(Error::Malformed("modulus must be positive".into()));
    }
    let mi = m as i64;
    let op: Vec<Vec<usize>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| (2 * b as i64 - a as i64).mod_floor(&mi) as usize)
                .collect()
        })
        .collect();
    let inv = op.clone();
    FiniteRackTable::new(op)?.with_inverse(inv)
}
