use super::{Carrier, EqDecision};
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, Var};

/// The Alexander quandle on `ℤ[t^{±1}, s^{±1}]` with `a ◁ b = t·a + (1−t)·b`.
///
/// With `scaled` set, `f(a) = s·a` makes it a virtual quandle.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlexanderModule {
    scaled: bool,
}

impl AlexanderModule {
    pub fn new() -> Self {
        Self { scaled: false }
    }

    pub fn virtual_scaled() -> Self {
        Self { scaled: true }
    }
}

impl Carrier for AlexanderModule {
    type Elem = LaurentPoly;
    type Key = LaurentPoly;

    fn name(&self) -> String {
        if self.scaled {
            "alexander-virtual".into()
        } else {
            "alexander".into()
        }
    }

    fn op(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let t = LaurentPoly::t();
        &(&t * a) + &(&(&LaurentPoly::one() - &t) * b)
    }

    fn op_inv(&self, a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
        let ti = LaurentPoly::var_pow(Var::T, -1);
        Some(&(&ti * a) + &(&(&LaurentPoly::one() - &ti) * b))
    }

    fn has_inverse(&self) -> bool {
        true
    }

    fn f(&self, a: &LaurentPoly) -> Option<LaurentPoly> {
        self.scaled.then(|| &LaurentPoly::s() * a)
    }

    fn f_inv(&self, a: &LaurentPoly) -> Option<LaurentPoly> {
        self.scaled.then(|| &LaurentPoly::var_pow(Var::S, -1) * a)
    }

    fn is_virtual(&self) -> bool {
        self.scaled
    }

    fn samples(&self) -> Vec<LaurentPoly> {
        vec![
            LaurentPoly::zero(),
            LaurentPoly::one(),
            LaurentPoly::t(),
            LaurentPoly::s(),
            &LaurentPoly::constant(2) - &LaurentPoly::var_pow(Var::T, -1),
        ]
    }

    fn decide_eq(&self, a: &LaurentPoly, b: &LaurentPoly) -> EqDecision {
        if a == b {
            EqDecision::Equal
        } else {
            EqDecision::NotEqual
        }
    }

    fn key(&self, a: &LaurentPoly) -> LaurentPoly {
        a.clone()
    }

    fn format_elem(&self, a: &LaurentPoly) -> String {
        serde_json::to_string(&a.to_json()).expect("json")
    }

    fn parse_elem(&self, text: &str) -> Result<LaurentPoly> {
        let v: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        LaurentPoly::from_json(&v).map_err(Error::Parse)
    }
}
