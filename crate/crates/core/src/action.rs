//! Actions of virtual braid groups and monoids on tuples.
//!
//! `ζ_i` acts at positions `i, i+1` through `xi`, `σ_i^{±1}` through
//! `theta^{±1}`; the rightmost letter of a word acts first.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::braid::{
    enumerate_words, forgetful, free_reduce, GenKind, Permutation, VirtualBraidWord,
};
use crate::error::{Error, Result};
use crate::freeshelf::{term_invariants, FreeShelf, ShelfTerm};
use crate::sdstruct::{Carrier, EqDecision};

/// Maps on `X × X` defining an action of virtual braids on `Xⁿ`.
pub trait ActionPair {
    type Elem: Clone + Eq + Hash + Ord + Debug;
    type Key: Clone + Eq + Hash + Ord + Debug;

    fn xi(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    fn theta(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    fn theta_inv(&self, a: &Self::Elem, b: &Self::Elem) -> Option<(Self::Elem, Self::Elem)>;
    fn has_inverse(&self) -> bool;

    fn decide_eq(&self, a: &Self::Elem, b: &Self::Elem) -> EqDecision;
    fn key(&self, a: &Self::Elem) -> Self::Key;
    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, text: &str) -> Result<Self::Elem>;
    fn samples(&self) -> Vec<Self::Elem>;
    fn probe_tuples(&self, n: usize) -> Vec<Vec<Self::Elem>>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XiKind {
    /// `ζ(a, b) = (b, a)`
    Flip,
    /// `ζ(a, b) = (f⁻¹(b), f(a))`
    Virtual,
}

/// The pair `(xi, theta)` built from a (virtual) shelf or rack carrier,
/// with `theta(a, b) = (b, a ◁ b)` and `theta⁻¹(a, b) = (b ◁̃ a, a)`.
#[derive(Debug, Clone)]
pub struct CarrierPair<C: Carrier> {
    carrier: C,
    xi_kind: XiKind,
}

impl<C: Carrier> CarrierPair<C> {
    pub fn carrier(&self) -> &C {
        &self.carrier
    }

    pub fn xi_kind(&self) -> XiKind {
        self.xi_kind
    }

    /// Builds the pair without validation.
    pub fn unchecked(carrier: C, xi_kind: XiKind) -> Self {
        Self { carrier, xi_kind }
    }
}

impl<C: Carrier> ActionPair for CarrierPair<C> {
    type Elem = C::Elem;
    type Key = C::Key;

    fn xi(&self, a: &C::Elem, b: &C::Elem) -> (C::Elem, C::Elem) {
        match self.xi_kind {
            XiKind::Flip => (b.clone(), a.clone()),
            XiKind::Virtual => (
                self.carrier.f_inv(b).expect("virtual carrier has f⁻¹"),
                self.carrier.f(a).expect("virtual carrier has f"),
            ),
        }
    }

    fn theta(&self, a: &C::Elem, b: &C::Elem) -> (C::Elem, C::Elem) {
        (b.clone(), self.carrier.op(a, b))
    }

    fn theta_inv(&self, a: &C::Elem, b: &C::Elem) -> Option<(C::Elem, C::Elem)> {
        if !self.carrier.has_inverse() {
            return None;
        }
        Some((self.carrier.op_inv(b, a)?, a.clone()))
    }

    fn has_inverse(&self) -> bool {
        self.carrier.has_inverse()
    }

    fn decide_eq(&self, a: &C::Elem, b: &C::Elem) -> EqDecision {
        self.carrier.decide_eq(a, b)
    }

    fn key(&self, a: &C::Elem) -> C::Key {
        self.carrier.key(a)
    }

    fn format_elem(&self, a: &C::Elem) -> String {
        self.carrier.format_elem(a)
    }

    fn parse_elem(&self, text: &str) -> Result<C::Elem> {
        self.carrier.parse_elem(text)
    }

    fn samples(&self) -> Vec<C::Elem> {
        self.carrier.samples()
    }

    fn probe_tuples(&self, n: usize) -> Vec<Vec<C::Elem>> {
        self.carrier.probe_tuples(n)
    }
}

/// Which identities of an action pair hold on the checked elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub xi_involution: bool,
    pub xi_yang_baxter: bool,
    pub theta_yang_baxter: bool,
    pub mixed: bool,
    /// `None` when no inverse is available.
    pub theta_inverse: Option<bool>,
    pub undecided: usize,
    pub elements_checked: usize,
}

impl PairReport {
    pub fn passes(&self) -> bool {
        self.xi_involution
            && self.xi_yang_baxter
            && self.theta_yang_baxter
            && self.mixed
            && self.theta_inverse != Some(false)
            && self.undecided == 0
    }
}

const INFINITE_SAMPLE_CAP: usize = 8;

fn tuple_eq<P: ActionPair>(pair: &P, a: &[P::Elem], b: &[P::Elem]) -> EqDecision {
    let mut undecided = false;
    for (x, y) in a.iter().zip(b) {
        match pair.decide_eq(x, y) {
            EqDecision::NotEqual => return EqDecision::NotEqual,
            EqDecision::Undecided => undecided = true,
            EqDecision::Equal => {}
        }
    }
    if undecided {
        EqDecision::Undecided
    } else {
        EqDecision::Equal
    }
}

/// Checks the action-pair identities on every pair and triple of `elements`.
pub fn validate_pair_on<P: ActionPair>(pair: &P, elements: &[P::Elem]) -> Result<PairReport> {
    let mut report = PairReport {
        xi_involution: true,
        xi_yang_baxter: true,
        theta_yang_baxter: true,
        mixed: true,
        theta_inverse: pair.has_inverse().then_some(true),
        undecided: 0,
        elements_checked: elements.len(),
    };
    let w = |s: &str, n| crate::braid::parse_word(s, n).expect("fixed word parses");
    let zz = w("z1 z1", 2);
    let (zyb_l, zyb_r) = (w("z1 z2 z1", 3), w("z2 z1 z2", 3));
    let (syb_l, syb_r) = (w("s1 s2 s1", 3), w("s2 s1 s2", 3));
    let (mix_l, mix_r) = (w("z1 z2 s1", 3), w("s2 z1 z2", 3));
    let (inv_a, inv_b) = (w("s1 S1", 2), w("S1 s1", 2));
    let record = |flag: &mut bool, d: EqDecision, undecided: &mut usize| match d {
        EqDecision::Equal => {}
        EqDecision::NotEqual => *flag = false,
        EqDecision::Undecided => *undecided += 1,
    };
    for a in elements {
        for b in elements {
            let t = vec![a.clone(), b.clone()];
            let d = tuple_eq(pair, &apply_word(pair, &zz, &t)?, &t);
            record(&mut report.xi_involution, d, &mut report.undecided);
            if let Some(flag) = report.theta_inverse.as_mut() {
                for word in [&inv_a, &inv_b] {
                    let d = tuple_eq(pair, &apply_word(pair, word, &t)?, &t);
                    record(flag, d, &mut report.undecided);
                }
            }
            for c in elements {
                let t = vec![a.clone(), b.clone(), c.clone()];
                for (flag, l, r) in [
                    (&mut report.xi_yang_baxter, &zyb_l, &zyb_r),
                    (&mut report.theta_yang_baxter, &syb_l, &syb_r),
                    (&mut report.mixed, &mix_l, &mix_r),
                ] {
                    let d = tuple_eq(pair, &apply_word(pair, l, &t)?, &apply_word(pair, r, &t)?);
                    record(flag, d, &mut report.undecided);
                }
            }
        }
    }
    Ok(report)
}

fn validation_elements<C: Carrier>(carrier: &C) -> Vec<C::Elem> {
    let mut s = carrier.samples();
    if !carrier.is_finite() {
        s.truncate(INFINITE_SAMPLE_CAP);
    }
    s
}

/// The flip-based pair of a shelf or rack: positive-only without an inverse.
pub fn rack_pair<C: Carrier>(carrier: C) -> Result<CarrierPair<C>> {
    let pair = CarrierPair {
        carrier,
        xi_kind: XiKind::Flip,
    };
    let report = validate_pair_on(&pair, &validation_elements(&pair.carrier))?;
    if !report.passes() {
        return Err(Error::AxiomFailure(format!(
            "rack pair check failed: {report:?}"
        )));
    }
    Ok(pair)
}

/// The pair of a virtual shelf or rack, `xi(a, b) = (f⁻¹(b), f(a))`.
pub fn virtual_rack_pair<C: Carrier>(carrier: C) -> Result<CarrierPair<C>> {
    if !carrier.is_virtual() {
        return Err(Error::AxiomFailure(
            "carrier has no virtualizing automorphism".into(),
        ));
    }
    let elements = validation_elements(&carrier);
    for a in &elements {
        for b in &elements {
            let lhs = carrier.f(&carrier.op(a, b)).expect("virtual");
            let rhs = carrier.op(
                &carrier.f(a).expect("virtual"),
                &carrier.f(b).expect("virtual"),
            );
            if carrier.decide_eq(&lhs, &rhs) != EqDecision::Equal {
                return Err(Error::AxiomFailure("f is not a shelf automorphism".into()));
            }
        }
    }
    let pair = CarrierPair {
        carrier,
        xi_kind: XiKind::Virtual,
    };
    let report = validate_pair_on(&pair, &elements)?;
    if !report.passes() {
        return Err(Error::AxiomFailure(format!(
            "virtual pair check failed: {report:?}"
        )));
    }
    Ok(pair)
}

/// Applies the word to the tuple, rightmost letter first.
pub fn apply_word<P: ActionPair>(
    pair: &P,
    w: &VirtualBraidWord,
    tuple: &[P::Elem],
) -> Result<Vec<P::Elem>> {
    if tuple.len() != w.strands() {
        return Err(Error::DimensionMismatch(format!(
            "tuple of length {} for {} strands",
            tuple.len(),
            w.strands()
        )));
    }
    let mut t = tuple.to_vec();
    for g in w.letters().iter().rev() {
        let i = g.index - 1;
        let (a, b) = (&t[i], &t[i + 1]);
        let (x, y) = match g.kind {
            GenKind::Zeta => pair.xi(a, b),
            GenKind::Sigma => pair.theta(a, b),
            GenKind::SigmaInv => pair
                .theta_inv(a, b)
                .ok_or_else(|| Error::MissingInverse(format!("{g}")))?,
        };
        t[i] = x;
        t[i + 1] = y;
    }
    Ok(t)
}

/// Data read off from the action of a positive word on free virtual shelf tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecoveredInvariants {
    /// `forgetful.apply(i)` is the final position of strand `i`.
    #[serde(serialize_with = "ser_perm")]
    pub forgetful: Permutation,
    pub sigma_count: usize,
    /// `under[i-1]`: sorted multiset of strands passing under strand `i`.
    pub under: Vec<Vec<usize>>,
}

fn ser_perm<S: serde::Serializer>(p: &Permutation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.images())
}

fn length_of(t: &ShelfTerm) -> usize {
    term_invariants(t).length
}

/// Recovers the underlying permutation, the number of `σ`'s and the
/// under-strand multisets from the virtual action on the free virtual shelf.
pub fn recover_invariants(w: &VirtualBraidWord) -> Result<RecoveredInvariants> {
    if !w.is_positive() {
        return Err(Error::NotPositive);
    }
    let n = w.strands();
    let pair = CarrierPair::unchecked(FreeShelf::virtual_shelf(), XiKind::Virtual);
    let x = ShelfTerm::x(0);
    let base = apply_word(&pair, w, &vec![x.clone(); n])?;
    let base_len: Vec<usize> = base.iter().map(length_of).collect();

    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let mut probe = vec![x.clone(); n];
        probe[i] = x.op(&x);
        let out = apply_word(&pair, w, &probe)?;
        let grown: Vec<usize> = (0..n)
            .filter(|&j| length_of(&out[j]) == base_len[j] + 1)
            .collect();
        match grown.as_slice() {
            [j] => images.push(j + 1),
            _ => return Err(Error::AxiomFailure("ambiguous strand tracking".into())),
        }
    }
    let forgetful = Permutation::from_images(images)?;
    let m: usize = base_len.iter().sum();

    let overflow = || Error::Overflow("staircase subscripts".into());
    let big_n = (n as i64 - 1)
        .checked_mul(m as i64 + 1)
        .and_then(|v| v.checked_add(1))
        .ok_or_else(overflow)?;
    let step = big_n.checked_mul(2).ok_or_else(overflow)?;
    let probe: Vec<ShelfTerm> = (1..=n as i64)
        .map(|i| i.checked_mul(step).map(ShelfTerm::x).ok_or_else(overflow))
        .collect::<Result<_>>()?;
    let out = apply_word(&pair, w, &probe)?;
    let strand_of = |v: i64| -> usize { (v + big_n).div_euclid(step) as usize };
    let mut under = vec![Vec::new(); n];
    for y in &out {
        let inv = term_invariants(y);
        let owner = strand_of(inv.first.sub);
        if owner == 0 || owner > n {
            return Err(Error::AxiomFailure(
                "subscript drift exceeded the spacing".into(),
            ));
        }
        let mut ms: Vec<usize> = inv
            .first_multiset
            .iter()
            .map(|l| strand_of(l.sub))
            .collect();
        ms.sort_unstable();
        under[owner - 1] = ms;
    }
    Ok(RecoveredInvariants {
        forgetful,
        sigma_count: m,
        under,
    })
}

/// Options for [`collision_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    pub positive: bool,
    /// Skip words that are not freely reduced.
    pub reduced_only: bool,
    /// Also separate words by their underlying permutation.
    pub use_forgetful: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            positive: true,
            reduced_only: false,
            use_forgetful: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub words_scanned: usize,
    /// Word pairs acting identically on every probe, in enumeration order.
    pub collisions: Vec<(String, String)>,
    /// Pairs that could not be separated nor proved equal within budget.
    pub undecided: Vec<(String, String)>,
}

/// Compares the actions of two words on the probe tuples.
pub fn compare_on_probes<P: ActionPair>(
    pair: &P,
    w1: &VirtualBraidWord,
    w2: &VirtualBraidWord,
    probes: &[Vec<P::Elem>],
) -> Result<EqDecision> {
    let mut undecided = false;
    for p in probes {
        match tuple_eq(pair, &apply_word(pair, w1, p)?, &apply_word(pair, w2, p)?) {
            EqDecision::NotEqual => return Ok(EqDecision::NotEqual),
            EqDecision::Undecided => undecided = true,
            EqDecision::Equal => {}
        }
    }
    Ok(if undecided {
        EqDecision::Undecided
    } else {
        EqDecision::Equal
    })
}

/// All pairs of enumerated words whose actions agree on every probe tuple.
pub fn collision_scan<P: ActionPair>(
    pair: &P,
    n: usize,
    max_len: usize,
    probes: &[Vec<P::Elem>],
    opts: ScanOptions,
) -> Result<ScanReport> {
    type Outputs<E> = Vec<Vec<E>>;
    type GroupKey<K> = (Option<Permutation>, Vec<Vec<K>>);
    let mut words: Vec<(VirtualBraidWord, Outputs<P::Elem>)> = Vec::new();
    let mut groups: BTreeMap<GroupKey<P::Key>, Vec<usize>> = BTreeMap::new();
    for w in enumerate_words(n, max_len, opts.positive) {
        if opts.reduced_only && free_reduce(&w).len() != w.len() {
            continue;
        }
        let outs: Outputs<P::Elem> = probes
            .iter()
            .map(|p| apply_word(pair, &w, p))
            .collect::<Result<_>>()?;
        let keys = outs
            .iter()
            .map(|t| t.iter().map(|e| pair.key(e)).collect())
            .collect();
        let perm = opts.use_forgetful.then(|| forgetful(&w));
        groups.entry((perm, keys)).or_default().push(words.len());
        words.push((w, outs));
    }
    let mut collisions = Vec::new();
    let mut undecided = Vec::new();
    let mut bucket_lists: Vec<&Vec<usize>> = groups.values().filter(|v| v.len() > 1).collect();
    bucket_lists.sort();
    for members in bucket_lists {
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                let (wi, oi) = &words[i];
                let (wj, oj) = &words[j];
                let mut decision = EqDecision::Equal;
                for (a, b) in oi.iter().zip(oj) {
                    match tuple_eq(pair, a, b) {
                        EqDecision::NotEqual => {
                            decision = EqDecision::NotEqual;
                            break;
                        }
                        EqDecision::Undecided => decision = EqDecision::Undecided,
                        EqDecision::Equal => {}
                    }
                }
                let entry = (wi.to_string(), wj.to_string());
                match decision {
                    EqDecision::Equal => collisions.push(entry),
                    EqDecision::Undecided => undecided.push(entry),
                    EqDecision::NotEqual => {}
                }
            }
        }
    }
    Ok(ScanReport {
        words_scanned: words.len(),
        collisions,
        undecided,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{forbidden_pair, parse_word};
    use crate::sdstruct::{dihedral_quandle, CyclicRack, FiniteRackTable};
    use num_bigint::BigInt;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn cyclic_rack_theta() {
        let pair = rack_pair(CyclicRack::new()).unwrap();
        assert_eq!(pair.theta(&big(3), &big(5)), (big(5), big(4)));
        let w = parse_word("s1", 2).unwrap();
        assert_eq!(
            apply_word(&pair, &w, &[big(3), big(5)]).unwrap(),
            vec![big(5), big(4)]
        );
        let empty = VirtualBraidWord::empty(2);
        assert_eq!(
            apply_word(&pair, &empty, &[big(3), big(5)]).unwrap(),
            vec![big(3), big(5)]
        );
    }

    #[test]
    fn trivial_quandle_theta_is_flip() {
        let t = FiniteRackTable::new(vec![vec![0]]).unwrap();
        let pair = rack_pair(t).unwrap();
        assert_eq!(pair.theta(&0, &0), pair.xi(&0, &0));
    }

    #[test]
    fn dihedral_theta() {
        let pair = rack_pair(dihedral_quandle(3).unwrap()).unwrap();
        assert_eq!(pair.theta(&0, &1), (1, 2));
    }

    #[test]
    fn virtual_cyclic_xi() {
        let pair = virtual_rack_pair(CyclicRack::with_shift(1)).unwrap();
        assert_eq!(pair.xi(&big(3), &big(5)), (big(4), big(4)));
    }

    #[test]
    fn free_virtual_shelf_xi() {
        let pair = virtual_rack_pair(FreeShelf::virtual_shelf()).unwrap();
        let x0 = ShelfTerm::x(0);
        assert_eq!(pair.xi(&x0, &x0), (ShelfTerm::x(-1), ShelfTerm::x(1)));
        assert!(!pair.has_inverse());
    }

    #[test]
    fn forbidden_pair_on_racks() {
        let pair = rack_pair(dihedral_quandle(3).unwrap()).unwrap();
        let (l, r) = forbidden_pair(3, 1).unwrap();
        for t in pair.probe_tuples(3) {
            assert_eq!(
                apply_word(&pair, &l, &t).unwrap(),
                apply_word(&pair, &r, &t).unwrap()
            );
        }
    }

    #[test]
    fn missing_inverse_is_an_error() {
        let pair = rack_pair(FreeShelf::real()).unwrap();
        let w = parse_word("S1", 2).unwrap();
        let x = ShelfTerm::x(0);
        assert!(matches!(
            apply_word(&pair, &w, &[x.clone(), x]),
            Err(Error::MissingInverse(_))
        ));
    }

    #[test]
    fn recover_small_words() {
        let r = recover_invariants(&parse_word("s1", 2).unwrap()).unwrap();
        assert_eq!(r.forgetful.images(), &[2, 1]);
        assert_eq!(r.sigma_count, 1);
        assert_eq!(r.under, vec![vec![2], vec![]]);
        let r = recover_invariants(&parse_word("z1", 2).unwrap()).unwrap();
        assert_eq!((r.forgetful.images(), r.sigma_count), (&[2, 1][..], 0));
        assert!(r.under.iter().all(Vec::is_empty));
        let r = recover_invariants(&parse_word("z1 s1", 2).unwrap()).unwrap();
        assert!(r.forgetful.is_identity());
        assert_eq!(r.sigma_count, 1);
        assert!(recover_invariants(&parse_word("S1", 2).unwrap()).is_err());
    }

    #[test]
    fn rejects_non_shelf() {
        let t = FiniteRackTable::new(vec![vec![1, 0], vec![0, 0]]).unwrap();
        assert!(rack_pair(t).is_err());
    }
}
