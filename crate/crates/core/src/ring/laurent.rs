//! Multivariate integer Laurent polynomials in the fixed variables `t, s, u, v`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Number of variables. Exponent vectors are ordered `[t, s, u, v]`.
pub const NVARS: usize = 4;

/// An exponent vector `[e_t, e_s, e_u, e_v]`.
pub type Exponent = [i32; NVARS];

const VAR_NAMES: [&str; NVARS] = ["t", "s", "u", "v"];

/// The four ring variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    T,
    S,
    U,
    V,
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::T => 0,
            Var::S => 1,
            Var::U => 2,
            Var::V => 3,
        }
    }
}

/// A Laurent polynomial with arbitrary-precision integer coefficients.
///
/// The term map never stores a zero coefficient, so structural equality is
/// ring equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, [0; NVARS])
    }

    pub fn monomial(c: impl Into<BigInt>, exp: Exponent) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The variable raised to `power` (negative powers allowed).
    pub fn var_pow(var: Var, power: i32) -> Self {
        let mut exp = [0; NVARS];
        exp[var.index()] = power;
        Self::monomial(1, exp)
    }

    pub fn var(var: Var) -> Self {
        Self::var_pow(var, 1)
    }

    pub fn t() -> Self {
        Self::var(Var::T)
    }
    pub fn s() -> Self {
        Self::var(Var::S)
    }
    pub fn u() -> Self {
        Self::var(Var::U)
    }
    pub fn v() -> Self {
        Self::var(Var::V)
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs, merging repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, Exponent)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (c, e) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, exp: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0; NVARS]).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when the polynomial is an integer constant (possibly zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0; NVARS])
    }

    /// The integer value of a constant polynomial.
    pub fn as_integer(&self) -> Option<BigInt> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.get(&[0; NVARS]).cloned().unwrap_or_default())
    }

    /// Multiplicative inverse, which exists exactly for the monomials `±x^e`.
    pub fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (exp, c) = self.terms.iter().next().unwrap();
        if !c.abs().is_one() {
            return None;
        }
        let mut inv = [0; NVARS];
        for k in 0..NVARS {
            inv[k] = -exp[k];
        }
        Some(Self::monomial(c.clone(), inv))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Integer power where negative exponents require a unit.
    pub fn pow_signed(&self, n: i32) -> Option<Self> {
        if n >= 0 {
            Some(self.pow(n as u32))
        } else {
            Some(self.inverse()?.pow(n.unsigned_abs()))
        }
    }

    /// Substitutes `value` for `var`. Negative powers of `var` need `value` to be a unit.
    pub fn substitute(&self, var: Var, value: &LaurentPoly) -> Option<Self> {
        let k = var.index();
        let mut out = Self::zero();
        for (exp, c) in &self.terms {
            let mut rest = *exp;
            rest[k] = 0;
            let factor = value.pow_signed(exp[k])?;
            let term = &Self::monomial(c.clone(), rest) * &factor;
            out = &out + &term;
        }
        Some(out)
    }

    /// Evaluates every variable at 1, giving the sum of coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Compact encoding `[[coeff, [et, es, eu, ev]], ...]` used by the JSON formats.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| {
                    let coeff = match c.to_i64() {
                        Some(small) => serde_json::Value::from(small),
                        None => serde_json::Value::from(c.to_string()),
                    };
                    serde_json::json!([coeff, e.to_vec()])
                })
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, String> {
        let arr = value
            .as_array()
            .ok_or("polynomial must be an array of terms")?;
        let mut out = Self::zero();
        for term in arr {
            let pair = term
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or("term must be [coeff, [et, es, eu, ev]]")?;
            let coeff = match &pair[0] {
                serde_json::Value::Number(n) => {
                    BigInt::from(n.as_i64().ok_or("coefficient must be an integer")?)
                }
                serde_json::Value::String(s) => s
                    .parse::<BigInt>()
                    .map_err(|e| format!("bad coefficient {s:?}: {e}"))?,
                _ => return Err("coefficient must be a number or decimal string".into()),
            };
            let exps = pair[1]
                .as_array()
                .filter(|e| e.len() == NVARS)
                .ok_or("exponent vector must have length 4")?;
            let mut exp = [0; NVARS];
            for (k, e) in exps.iter().enumerate() {
                exp[k] = e
                    .as_i64()
                    .and_then(|x| i32::try_from(x).ok())
                    .ok_or("exponent must be a 32-bit integer")?;
            }
            out.add_term(exp, coeff);
        }
        Ok(out)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = [0; NVARS];
                for k in 0..NVARS {
                    e[k] = ea[k] + eb[k];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut factors = Vec::new();
            for (k, &e) in exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(VAR_NAMES[k].to_string()),
                    _ => factors.push(format!("{}^{}", VAR_NAMES[k], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
