use std::fmt;

use super::{Carrier, EqDecision};
use crate::braid::{GenKind, VirtualBraidWord};
use crate::error::{Error, Result};

/// A freely reduced word in generators `x_1, x_2, …`, stored as `(index, ±1)` letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeGroupWord {
    letters: Vec<(u32, i8)>,
}

impl FreeGroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(i: u32) -> Self {
        Self {
            letters: vec![(i, 1)],
        }
    }

    /// Reduces an arbitrary letter sequence.
    pub fn from_letters(letters: impl IntoIterator<Item = (u32, i8)>) -> Self {
        let mut out = Self::identity();
        for (g, e) in letters {
            assert!(e == 1 || e == -1, "exponents are ±1");
            out.push(g, e);
        }
        out
    }

    fn push(&mut self, g: u32, e: i8) {
        if self.letters.last() == Some(&(g, -e)) {
            self.letters.pop();
        } else {
            self.letters.push((g, e));
        }
    }

    pub fn letters(&self) -> &[(u32, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeGroupWord) -> FreeGroupWord {
        let mut out = self.clone();
        for &(g, e) in &other.letters {
            out.push(g, e);
        }
        out
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// Largest generator index used, 0 for the identity.
    pub fn max_generator(&self) -> u32 {
        self.letters.iter().map(|l| l.0).max().unwrap_or(0)
    }

    /// Applies the homomorphism determined by generator images.
    pub fn substitute(&self, image: impl Fn(u32) -> FreeGroupWord) -> FreeGroupWord {
        let mut out = FreeGroupWord::identity();
        for &(g, e) in &self.letters {
            let img = image(g);
            out = out.mul(&if e == 1 { img } else { img.inverse() });
        }
        out
    }

    /// If the word is `w⁻¹ x_i w` (freely reduced), returns `i`.
    pub fn conjugate_of_generator(&self) -> Option<u32> {
        let n = self.letters.len();
        if n.is_multiple_of(2) {
            return None;
        }
        let mid = n / 2;
        let (g, e) = self.letters[mid];
        if e != 1 {
            return None;
        }
        let ok = (0..mid).all(|k| {
            let (a, ea) = self.letters[k];
            let (b, eb) = self.letters[n - 1 - k];
            a == b && ea == -eb
        });
        ok.then_some(g)
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    format!("x{g}")
                } else {
                    format!("x{g}^-1")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl std::str::FromStr for FreeGroupWord {
    type Err = Error;

    /// Parses `1` or space-separated `x<i>` / `x<i>^-1` tokens.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "1" || text.is_empty() {
            return Ok(Self::identity());
        }
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let bad = || Error::Parse(format!("bad free group letter {tok:?}"));
            let body = tok.strip_prefix('x').ok_or_else(bad)?;
            let (idx, e) = match body.split_once('^') {
                Some((i, "-1")) => (i, -1),
                Some((i, "1")) => (i, 1),
                Some(_) => return Err(bad()),
                None => (body, 1),
            };
            let g: u32 = idx.parse().map_err(|_| bad())?;
            if g == 0 {
                return Err(bad());
            }
            letters.push((g, e));
        }
        Ok(Self::from_letters(letters))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjDirection {
    /// `a ◁ b = b⁻¹ a b`
    Fwd,
    /// `a ◁̃ b = b a b⁻¹`
    Inv,
}

pub fn conj_op(a: &FreeGroupWord, b: &FreeGroupWord, dir: ConjDirection) -> FreeGroupWord {
    match dir {
        ConjDirection::Fwd => b.inverse().mul(a).mul(b),
        ConjDirection::Inv => b.mul(a).mul(&b.inverse()),
    }
}

/// Image of the generator `x_j` under `σ_i` (`sign = 1`) or `σ_i⁻¹` (`sign = -1`).
pub fn artin_generator(j: u32, i: u32, sign: i8) -> FreeGroupWord {
    let x = FreeGroupWord::generator;
    if sign >= 0 {
        if j == i + 1 {
            x(i)
        } else if j == i {
            FreeGroupWord::from_letters([(i, 1), (i + 1, 1), (i, -1)])
        } else {
            x(j)
        }
    } else if j == i {
        x(i + 1)
    } else if j == i + 1 {
        FreeGroupWord::from_letters([(i + 1, -1), (i, 1), (i + 1, 1)])
    } else {
        x(j)
    }
}

/// The automorphism of `F_n` attached to a classical braid word, applied to `w`.
///
/// Words act on the left: the rightmost letter is applied first.
pub fn artin_apply(braid: &VirtualBraidWord, w: &FreeGroupWord) -> Result<FreeGroupWord> {
    let mut out = w.clone();
    for g in braid.letters().iter().rev() {
        let sign = match g.kind {
            GenKind::Sigma => 1,
            GenKind::SigmaInv => -1,
            GenKind::Zeta => {
                return Err(Error::Unsupported(
                    "the free group action is defined for classical braids".into(),
                ))
            }
        };
        let i = g.index as u32;
        out = out.substitute(|j| artin_generator(j, i, sign));
    }
    Ok(out)
}

/// The conjugation quandle of a free group, optionally virtualized by
/// conjugation with a distinguished generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjFree {
    rank: u32,
    virtual_gen: Option<u32>,
}

impl ConjFree {
    /// `Conj(F_n)`.
    pub fn new(rank: u32) -> Self {
        Self {
            rank,
            virtual_gen: None,
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn virtual_generator(&self) -> Option<u32> {
        self.virtual_gen
    }

    fn check(&self, w: &FreeGroupWord) -> Result<()> {
        if w.max_generator() > self.rank {
            return Err(Error::Parse(format!(
                "{w} uses a generator outside x1..x{}",
                self.rank
            )));
        }
        Ok(())
    }
}

/// The virtual quandle of conjugates of `x_1, …, x_n` inside `Conj(F_{n+1})`,
/// with `f(a) = x_{n+1}⁻¹ a x_{n+1}`.
pub fn vconj(n: u32) -> ConjFree {
    ConjFree {
        rank: n + 1,
        virtual_gen: Some(n + 1),
    }
}

impl Carrier for ConjFree {
    type Elem = FreeGroupWord;
    type Key = FreeGroupWord;

    fn name(&self) -> String {
        match self.virtual_gen {
            Some(_) => format!("vconj{}", self.rank - 1),
            None => format!("conj-free{}", self.rank),
        }
    }

    fn op(&self, a: &FreeGroupWord, b: &FreeGroupWord) -> FreeGroupWord {
        conj_op(a, b, ConjDirection::Fwd)
    }

    fn op_inv(&self, a: &FreeGroupWord, b: &FreeGroupWord) -> Option<FreeGroupWord> {
        Some(conj_op(a, b, ConjDirection::Inv))
    }

    fn has_inverse(&self) -> bool {
        true
    }

    fn f(&self, a: &FreeGroupWord) -> Option<FreeGroupWord> {
        self.virtual_gen
            .map(|g| conj_op(a, &FreeGroupWord::generator(g), ConjDirection::Fwd))
    }

    fn f_inv(&self, a: &FreeGroupWord) -> Option<FreeGroupWord> {
        self.virtual_gen
            .map(|g| conj_op(a, &FreeGroupWord::generator(g), ConjDirection::Inv))
    }

    fn is_virtual(&self) -> bool {
        self.virtual_gen.is_some()
    }

    fn samples(&self) -> Vec<FreeGroupWord> {
        let base = self.virtual_gen.map_or(self.rank, |g| g - 1);
        let gens: Vec<FreeGroupWord> = (1..=base).map(FreeGroupWord::generator).collect();
        let mut out = gens.clone();
        for a in &gens {
            for b in (1..=self.rank).map(FreeGroupWord::generator) {
                if a != &b {
                    out.push(conj_op(a, &b, ConjDirection::Fwd));
                    out.push(conj_op(a, &b, ConjDirection::Inv));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn decide_eq(&self, a: &FreeGroupWord, b: &FreeGroupWord) -> EqDecision {
        if a == b {
            EqDecision::Equal
        } else {
            EqDecision::NotEqual
        }
    }

    fn key(&self, a: &FreeGroupWord) -> FreeGroupWord {
        a.clone()
    }

    fn format_elem(&self, a: &FreeGroupWord) -> String {
        a.to_string()
    }

    fn parse_elem(&self, text: &str) -> Result<FreeGroupWord> {
        let w: FreeGroupWord = text.parse()?;
        self.check(&w)?;
        if self.virtual_gen.is_some() {
            match w.conjugate_of_generator() {
                Some(g) if Some(g) != self.virtual_gen => {}
                _ => {
                    return Err(Error::Parse(format!(
                        "{w} is not a conjugate of x1..x{}",
                        self.rank - 1
                    )))
                }
            }
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;

    fn x(i: u32) -> FreeGroupWord {
        FreeGroupWord::generator(i)
    }

    #[test]
    fn conjugation_examples() {
        let c = conj_op(&x(1), &x(2), ConjDirection::Fwd);
        assert_eq!(c.to_string(), "x2^-1 x1 x2");
        assert_eq!(conj_op(&x(1), &x(1), ConjDirection::Fwd), x(1));
        let back = conj_op(&c, &x(2), ConjDirection::Inv);
        assert_eq!(back, x(1));
    }

    #[test]
    fn artin_images() {
        assert_eq!(artin_generator(2, 1, 1), x(1));
        assert_eq!(artin_generator(1, 1, 1).to_string(), "x1 x2 x1^-1");
        assert_eq!(artin_generator(3, 1, 1), x(3));
        assert_eq!(artin_generator(1, 1, -1), x(2));
    }

    #[test]
    fn artin_inverse_cancels() {
        for n in 2..=5u32 {
            for i in 1..n {
                for j in 1..=n {
                    let w = artin_generator(j, i, 1).substitute(|k| artin_generator(k, i, -1));
                    assert_eq!(w, x(j), "n={n} i={i} j={j}");
                }
            }
        }
        let b = parse_word("s1 S2 s1", 3).unwrap();
        let w = x(1).mul(&x(3));
        let there = artin_apply(&b, &w).unwrap();
        assert_eq!(artin_apply(&b.inverse(), &there).unwrap(), w);
    }

    #[test]
    fn virtual_conjugates() {
        let v = vconj(2);
        let fx = v.f(&x(1)).unwrap();
        assert_eq!(fx.to_string(), "x3^-1 x1 x3");
        assert_eq!(v.f_inv(&fx).unwrap(), x(1));
        let c = v.op(&x(1), &x(2));
        assert_eq!(c.conjugate_of_generator(), Some(1));
        assert!(v.parse_elem("x3").is_err());
        assert!(v.parse_elem("x1 x2").is_err());
        assert_eq!(v.parse_elem("x2^-1 x1 x2").unwrap(), c);
    }

    #[test]
    fn parse_and_display() {
        let w: FreeGroupWord = "x1 x2^-1 x2 x3".parse().unwrap();
        assert_eq!(w.to_string(), "x1 x3");
        assert_eq!(
            "1".parse::<FreeGroupWord>().unwrap(),
            FreeGroupWord::identity()
        );
        assert!("y1".parse::<FreeGroupWord>().is_err());
    }
}
