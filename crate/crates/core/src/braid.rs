//! Words in virtual braid groups and their positive monoids.
//!
//! A word `g₁ g₂ … g_k` denotes the product `g₁·g₂·…·g_k`; acting on tuples or
//! vectors the rightmost letter acts first.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    Sigma,
    SigmaInv,
    Zeta,
}

/// A generator `σ_i`, `σ_i⁻¹` or `ζ_i`, with 1-based `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub fn sigma(index: usize) -> Self {
        Self {
            kind: GenKind::Sigma,
            index,
        }
    }
    pub fn sigma_inv(index: usize) -> Self {
        Self {
            kind: GenKind::SigmaInv,
            index,
        }
    }
    pub fn zeta(index: usize) -> Self {
        Self {
            kind: GenKind::Zeta,
            index,
        }
    }

    pub fn inverse(self) -> Self {
        let kind = match self.kind {
            GenKind::Sigma => GenKind::SigmaInv,
            GenKind::SigmaInv => GenKind::Sigma,
            GenKind::Zeta => GenKind::Zeta,
        };
        Self {
            kind,
            index: self.index,
        }
    }

    pub fn is_sigma_like(self) -> bool {
        self.kind != GenKind::Zeta
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            GenKind::Sigma => 's',
            GenKind::SigmaInv => 'S',
            GenKind::Zeta => 'z',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(tok: &str) -> Result<Self> {
        let mut chars = tok.chars();
        let kind = match chars.next() {
            Some('s') => GenKind::Sigma,
            Some('S') => GenKind::SigmaInv,
            Some('z') => GenKind::Zeta,
            _ => return Err(Error::Parse(format!("bad token {tok:?}"))),
        };
        let index: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad token {tok:?}")))?;
        if index == 0 {
            return Err(Error::Parse(format!("indices are 1-based in {tok:?}")));
        }
        Ok(Self { kind, index })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VirtualBraidWord {
    strands: usize,
    letters: Vec<Generator>,
}

impl VirtualBraidWord {
    pub fn new(strands: usize, letters: Vec<Generator>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Malformed("a braid needs at least one strand".into()));
        }
        if let Some(g) = letters.iter().find(|g| g.index == 0 || g.index >= strands) {
            return Err(Error::IndexOutOfRange {
                index: g.index,
                strands,
            });
        }
        Ok(Self { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        Self {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|g| g.kind != GenKind::SigmaInv)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &VirtualBraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::DimensionMismatch("strand counts differ".into()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }
}

impl fmt::Display for VirtualBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// Parses whitespace-separated `s<i>`, `S<i>`, `z<i>` tokens.
pub fn parse_word(text: &str, strands: usize) -> Result<VirtualBraidWord> {
    let letters = text
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<Vec<Generator>>>()?;
    VirtualBraidWord::new(strands, letters)
}

/// Cancels adjacent `σσ⁻¹`, `σ⁻¹σ` and `ζζ` until none remain.
pub fn free_reduce(w: &VirtualBraidWord) -> VirtualBraidWord {
    let mut stack: Vec<Generator> = Vec::with_capacity(w.letters.len());
    for &g in &w.letters {
        if stack.last() == Some(&g.inverse()) {
            stack.pop();
        } else {
            stack.push(g);
        }
    }
    VirtualBraidWord {
        strands: w.strands,
        letters: stack,
    }
}

/// A permutation of `1..=n`; `images[i-1]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Malformed(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Self { images })
    }

    /// The transposition of `i` and `i+1`.
    pub fn adjacent(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i + 1 == j)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The underlying permutation: every letter at index `i` swaps `i` and `i+1`.
///
/// `forgetful(w).apply(i)` is the final position of the strand starting at `i`.
pub fn forgetful(w: &VirtualBraidWord) -> Permutation {
    let n = w.strands;
    w.letters.iter().fold(Permutation::identity(n), |acc, g| {
        acc.compose(&Permutation::adjacent(n, g.index))
    })
}

/// Number of `σ_i^{±1}` letters.
pub fn sigma_count(w: &VirtualBraidWord) -> usize {
    w.letters.iter().filter(|g| g.is_sigma_like()).count()
}

/// Reduced ζ-word `ζ₁(ζ₂ζ₁)…(ζ_{n−1}…ζ₁)` for the order-reversing permutation.
pub fn garside_element(n: usize) -> VirtualBraidWord {
    let mut letters = Vec::new();
    for top in 1..n {
        for i in (1..=top).rev() {
            letters.push(Generator::zeta(i));
        }
    }
    VirtualBraidWord {
        strands: n.max(1),
        letters,
    }
}

/// The Garside twist applied letterwise: `σ_i^{±1} ↦ ζ_{n−i} σ_{n−i}^{±1} ζ_{n−i}`,
/// `ζ_i ↦ ζ_{n−i}`.
///
/// Equals `Δ·w·Δ` as a group element (see [`conjugate_by_garside`]) and is an
/// involution up to [`free_reduce`].
pub fn garside_twist(w: &VirtualBraidWord) -> VirtualBraidWord {
    let n = w.strands;
    let mut letters = Vec::with_capacity(3 * w.letters.len());
    for g in &w.letters {
        let j = n - g.index;
        match g.kind {
            GenKind::Zeta => letters.push(Generator::zeta(j)),
            kind => {
                letters.push(Generator::zeta(j));
                letters.push(Generator { kind, index: j });
                letters.push(Generator::zeta(j));
            }
        }
    }
    VirtualBraidWord {
        strands: n,
        letters,
    }
}

/// The literal word `Δ · w · Δ` with `Δ` from [`garside_element`].
pub fn conjugate_by_garside(w: &VirtualBraidWord) -> VirtualBraidWord {
    let d = garside_element(w.strands);
    let mut letters = d.letters.clone();
    letters.extend_from_slice(&w.letters);
    letters.extend_from_slice(&d.letters);
    VirtualBraidWord {
        strands: w.strands,
        letters,
    }
}

/// Shortest form `ζ^{ε_k} σ ζ^{ε_{k−1}} σ ⋯ σ ζ^{ε_0}` of a positive word on 2 strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vb2ShortestForm {
    /// `exponents[j] = ε_j ∈ {0, 1}`, length `k + 1`.
    pub exponents: Vec<u8>,
    pub k: usize,
}

impl Vb2ShortestForm {
    pub fn to_word(&self) -> VirtualBraidWord {
        let mut letters = Vec::new();
        for j in (0..=self.k).rev() {
            if self.exponents[j] == 1 {
                letters.push(Generator::zeta(1));
            }
            if j > 0 {
                letters.push(Generator::sigma(1));
            }
        }
        VirtualBraidWord {
            strands: 2,
            letters,
        }
    }
}

pub fn vb2_shortest_form(w: &VirtualBraidWord) -> Result<Vb2ShortestForm> {
    if w.strands != 2 {
        return Err(Error::Unsupported(format!(
            "shortest forms exist for 2 strands, got {}",
            w.strands
        )));
    }
    if !w.is_positive() {
        return Err(Error::NotPositive);
    }
    // Blocks of ζ's between σ's, read left to right: ε_k first.
    let mut blocks = vec![0u8];
    for g in &w.letters {
        match g.kind {
            GenKind::Zeta => *blocks.last_mut().unwrap() ^= 1,
            _ => blocks.push(0),
        }
    }
    blocks.reverse();
    let k = blocks.len() - 1;
    Ok(Vb2ShortestForm {
        exponents: blocks,
        k,
    })
}

/// The enumeration alphabet: `s1..s_{n−1}`, then `S1..` (unless positive), then `z1..`.
pub fn alphabet(n: usize, positive: bool) -> Vec<Generator> {
    let mut out: Vec<Generator> = (1..n).map(Generator::sigma).collect();
    if !positive {
        out.extend((1..n).map(Generator::sigma_inv));
    }
    out.extend((1..n).map(Generator::zeta));
    out
}

/// All words of length `≤ max_len` in length-lexicographic order.
pub fn enumerate_words(n: usize, max_len: usize, positive: bool) -> WordEnumerator {
    WordEnumerator {
        strands: n.max(1),
        alphabet: alphabet(n, positive),
        max_len,
        current: Some(Vec::new()),
    }
}

#[derive(Debug, Clone)]
pub struct WordEnumerator {
    strands: usize,
    alphabet: Vec<Generator>,
    max_len: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for WordEnumerator {
    type Item = VirtualBraidWord;

    fn next(&mut self) -> Option<VirtualBraidWord> {
        let digits = self.current.take()?;
        let word = VirtualBraidWord {
            strands: self.strands,
            letters: digits.iter().map(|&d| self.alphabet[d]).collect(),
        };
        let base = self.alphabet.len();
        let mut next = digits;
        let mut pos = next.len();
        loop {
            if pos == 0 {
                let len = next.len() + 1;
                if len <= self.max_len && base > 0 {
                    self.current = Some(vec![0; len]);
                }
                break;
            }
            pos -= 1;
            next[pos] += 1;
            if next[pos] < base {
                self.current = Some(next);
                break;
            }
            next[pos] = 0;
        }
        Some(word)
    }
}

/// One defining relation `lhs = rhs`, tagged by its family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: &'static str,
    pub lhs: VirtualBraidWord,
    pub rhs: VirtualBraidWord,
}

/// Every defining relation of the virtual braid monoid on `n` strands, plus the
/// inverse relations `σσ⁻¹ = σ⁻¹σ = 1` when `with_inverses`.
pub fn defining_relations(n: usize, with_inverses: bool) -> Vec<Relation> {
    let w = |letters: Vec<Generator>| VirtualBraidWord {
        strands: n.max(1),
        letters,
    };
    let (s, z) = (Generator::sigma, Generator::zeta);
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 2..n {
            out.push(Relation {
                family: "Br_C",
                lhs: w(vec![s(i), s(j)]),
                rhs: w(vec![s(j), s(i)]),
            });
            out.push(Relation {
                family: "Symm_C",
                lhs: w(vec![z(i), z(j)]),
                rhs: w(vec![z(j), z(i)]),
            });
        }
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                out.push(Relation {
                    family: "Br_C^m",
                    lhs: w(vec![s(i), z(j)]),
                    rhs: w(vec![z(j), s(i)]),
                });
            }
        }
        out.push(Relation {
            family: "Symm",
            lhs: w(vec![z(i), z(i)]),
            rhs: w(vec![]),
        });
        if i + 1 < n {
            out.push(Relation {
                family: "Br_YB",
                lhs: w(vec![s(i), s(i + 1), s(i)]),
                rhs: w(vec![s(i + 1), s(i), s(i + 1)]),
            });
            out.push(Relation {
                family: "Symm_YB",
                lhs: w(vec![z(i), z(i + 1), z(i)]),
                rhs: w(vec![z(i + 1), z(i), z(i + 1)]),
            });
            out.push(Relation {
                family: "Br_YB^m",
                lhs: w(vec![z(i), z(i + 1), s(i)]),
                rhs: w(vec![s(i + 1), z(i), z(i + 1)]),
            });
        }
        if with_inverses {
            let si = Generator::sigma_inv(i);
            out.push(Relation {
                family: "Inv",
                lhs: w(vec![s(i), si]),
                rhs: w(vec![]),
            });
            out.push(Relation {
                family: "Inv",
                lhs: w(vec![si, s(i)]),
                rhs: w(vec![]),
            });
        }
    }
    out
}

/// The forbidden pair `σ_i σ_{i+1} ζ_i` vs `ζ_{i+1} σ_i σ_{i+1}`, which is not a relation.
pub fn forbidden_pair(n: usize, i: usize) -> Result<(VirtualBraidWord, VirtualBraidWord)> {
    let (s, z) = (Generator::sigma, Generator::zeta);
    Ok((
        VirtualBraidWord::new(n, vec![s(i), s(i + 1), z(i)])?,
        VirtualBraidWord::new(n, vec![z(i + 1), s(i), s(i + 1)])?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> VirtualBraidWord {
        parse_word(text, n).unwrap()
    }

    #[test]
    fn parsing() {
        let word = w("s1 z2 S1", 3);
        assert_eq!(
            word.letters(),
            &[
                Generator::sigma(1),
                Generator::zeta(2),
                Generator::sigma_inv(1)
            ]
        );
        assert_eq!(w("z1 z1", 2).letters(), &[Generator::zeta(1); 2]);
        assert!(parse_word("s3", 3).is_err());
        assert!(parse_word("x1", 3).is_err());
        assert!(parse_word("s0", 3).is_err());
        assert_eq!(word.to_string(), "s1 z2 S1");
    }

    #[test]
    fn reduction() {
        assert!(free_reduce(&w("s1 S1", 2)).is_empty());
        assert_eq!(free_reduce(&w("z1 z1 z1", 2)), w("z1", 2));
        assert!(free_reduce(&w("s1 z2 z2 S1", 3)).is_empty());
        assert_eq!(free_reduce(&w("s1 s1", 2)), w("s1 s1", 2));
    }

    #[test]
    fn forgetful_images() {
        assert!(forgetful(&w("s1 s1", 2)).is_identity());
        assert!(forgetful(&VirtualBraidWord::empty(3)).is_identity());
        // 1 → 2, 2 → 3, 3 → 1.
        assert_eq!(forgetful(&w("z1 s2", 3)).images(), &[2, 3, 1]);
    }

    #[test]
    fn counting_sigmas() {
        assert_eq!(sigma_count(&w("s1 z1 s2", 3)), 2);
        assert_eq!(sigma_count(&w("z1 z2", 3)), 0);
        assert_eq!(sigma_count(&w("S1", 2)), 1);
    }

    #[test]
    fn twist_examples() {
        assert_eq!(garside_twist(&w("s1", 2)), w("z1 s1 z1", 2));
        assert_eq!(
            forgetful(&garside_twist(&w("z1", 2))),
            forgetful(&w("z1", 2))
        );
        assert!(garside_twist(&VirtualBraidWord::empty(3)).is_empty());
    }

    #[test]
    fn garside_square_reduces_for_small_n() {
        for n in 1..=3 {
            let d = garside_element(n);
            assert!(free_reduce(&d.concat(&d).unwrap()).is_empty(), "n = {n}");
        }
        let d4 = garside_element(4);
        assert_eq!(forgetful(&d4).images(), &[4, 3, 2, 1]);
        assert!(forgetful(&d4.concat(&d4).unwrap()).is_identity());
    }

    #[test]
    fn shortest_forms() {
        let f = vb2_shortest_form(&w("z1 z1 s1", 2)).unwrap();
        assert_eq!((f.k, f.exponents.clone()), (1, vec![0, 0]));
        let f = vb2_shortest_form(&w("z1 s1 z1 s1", 2)).unwrap();
        assert_eq!(f.k, 2);
        assert_eq!(f.exponents, vec![0, 1, 1]);
        assert_eq!(f.to_word(), w("z1 s1 z1 s1", 2));
        let f = vb2_shortest_form(&w("s1 s1", 2)).unwrap();
        assert_eq!((f.k, f.exponents), (2, vec![0, 0, 0]));
        assert!(vb2_shortest_form(&w("S1", 2)).is_err());
        assert!(vb2_shortest_form(&w("s1", 3)).is_err());
    }

    #[test]
    fn enumeration() {
        let words: Vec<String> = enumerate_words(2, 1, true).map(|x| x.to_string()).collect();
        assert_eq!(words, vec!["", "s1", "z1"]);
        assert_eq!(enumerate_words(2, 0, false).count(), 1);
        assert_eq!(enumerate_words(3, 1, false).count(), 7);
        assert_eq!(enumerate_words(2, 3, true).count(), 1 + 2 + 4 + 8);
    }

    #[test]
    fn relation_counts() {
        let rels = defining_relations(3, false);
        assert!(rels.iter().any(|r| r.family == "Br_YB^m"));
        assert!(rels
            .iter()
            .all(|r| r.lhs.is_positive() && r.rhs.is_positive()));
        assert!(defining_relations(4, true)
            .iter()
            .any(|r| r.family == "Br_C^m"));
    }
}
