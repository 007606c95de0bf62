use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Carrier, EqDecision};
use crate::error::{Error, Result};

/// The cyclic rack `ℤ` with `n ◁ m = n + 1`, `n ◁̃ m = n − 1`.
///
/// An optional shift `f(k) = k + c` (with `c ≠ 0`) makes it virtual.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CyclicRack {
    shift: Option<BigInt>,
}

impl CyclicRack {
    pub fn new() -> Self {
        Self { shift: None }
    }

    pub fn with_shift(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        Self {
            shift: (!c.is_zero()).then_some(c),
        }
    }
}

impl Carrier for CyclicRack {
    type Elem = BigInt;
    type Key = BigInt;

    fn name(&self) -> String {
        "cyclic-rack".into()
    }

    fn op(&self, a: &BigInt, _b: &BigInt) -> BigInt {
        a + BigInt::one()
    }

    fn op_inv(&self, a: &BigInt, _b: &BigInt) -> Option<BigInt> {
        Some(a - BigInt::one())
    }

    fn has_inverse(&self) -> bool {
        true
    }

    fn f(&self, a: &BigInt) -> Option<BigInt> {
        self.shift.as_ref().map(|c| a + c)
    }

    fn f_inv(&self, a: &BigInt) -> Option<BigInt> {
        self.shift.as_ref().map(|c| a - c)
    }

    fn is_virtual(&self) -> bool {
        self.shift.is_some()
    }

    fn samples(&self) -> Vec<BigInt> {
        (-3..=3).map(BigInt::from).collect()
    }

    fn decide_eq(&self, a: &BigInt, b: &BigInt) -> EqDecision {
        if a == b {
            EqDecision::Equal
        } else {
            EqDecision::NotEqual
        }
    }

    fn key(&self, a: &BigInt) -> BigInt {
        a.clone()
    }

    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn parse_elem(&self, text: &str) -> Result<BigInt> {
        text.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {text:?}")))
    }
}

#[derive(Debug)]
enum Expr {
    X,
    Op(Box<Expr>, char, Box<Expr>),
}

struct ExprParser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl ExprParser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.chars.next() {
            Some('x') => Ok(Expr::X),
            Some('(') => {
                let e = self.expr()?;
                self.skip_ws();
                match self.chars.next() {
                    Some(')') => Ok(e),
                    _ => Err(Error::Parse("expected ')'".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.atom()?;
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some(&c) if c == '*' || c == '/' => {
                    self.chars.next();
                    let rhs = self.atom()?;
                    lhs = Expr::Op(Box::new(lhs), c, Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }
}

/// Maps a left comb `((x ◁ x) ◁ ⋯) ◁ x` to its number of operations, and a
/// `◁̃` comb to minus that number.
///
/// Grammar: `x`, `*` for `◁`, `/` for `◁̃`, parentheses, left associative.
/// Anything other than a pure comb is rejected.
pub fn fr1_iso_cr(text: &str) -> Result<BigInt> {
    let mut p = ExprParser {
        chars: text.chars().peekable(),
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.chars.next().is_some() {
        return Err(Error::Parse("trailing input".into()));
    }
    let mut count = 0i64;
    let mut kind = None;
    let mut cur = &e;
    while let Expr::Op(l, c, r) = cur {
        if !matches!(**r, Expr::X) {
            return Err(Error::Unsupported("not a left comb".into()));
        }
        if kind.is_some_and(|k| k != *c) {
            return Err(Error::Unsupported("mixed operations in a comb".into()));
        }
        kind = Some(*c);
        count += 1;
        cur = l;
    }
    Ok(BigInt::from(if kind == Some('/') { -count } else { count }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comb_values() {
        assert_eq!(fr1_iso_cr("(x*x)*x").unwrap(), BigInt::from(2));
        assert_eq!(fr1_iso_cr("x").unwrap(), BigInt::zero());
        assert_eq!(fr1_iso_cr("(x/x)").unwrap(), BigInt::from(-1));
        assert_eq!(fr1_iso_cr("x*x*x*x").unwrap(), BigInt::from(3));
        assert!(fr1_iso_cr("(x*x)/x").is_err());
        assert!(fr1_iso_cr("x*(x*x)").is_err());
        assert!(fr1_iso_cr("(x*x").is_err());
    }

    #[test]
    fn shifted_rack() {
        let cr = CyclicRack::with_shift(1);
        assert_eq!(cr.f(&BigInt::from(3)), Some(BigInt::from(4)));
        assert!(!CyclicRack::new().is_virtual());
        assert_eq!(cr.op(&BigInt::from(3), &BigInt::from(5)), BigInt::from(4));
    }
}
