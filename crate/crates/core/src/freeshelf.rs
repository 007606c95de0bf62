//! Terms of free (virtual) shelves and bounded decisions on them.
//!
//! A leaf `x_k` of a virtual shelf on one generator stands for `f^k(x)`; on
//! several generators the leaf `x_{i,k}` stands for `f^k(x_i)`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::sdstruct::{Carrier, EqDecision};

/// A leaf label: generator index (1-based) and virtual subscript.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub gen: u32,
    pub sub: i64,
}

impl Label {
    pub fn sub(sub: i64) -> Self {
        Self { gen: 1, sub }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gen == 1 {
            write!(f, "x{}", self.sub)
        } else {
            write!(f, "x{}_{}", self.gen, self.sub)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShelfTerm {
    Leaf(Label),
    Op(Arc<ShelfTerm>, Arc<ShelfTerm>),
}

impl ShelfTerm {
    /// The leaf `x_k`.
    pub fn x(k: i64) -> Self {
        ShelfTerm::Leaf(Label::sub(k))
    }

    pub fn leaf(label: Label) -> Self {
        ShelfTerm::Leaf(label)
    }

    /// `self ∗ rhs`.
    pub fn op(&self, rhs: &ShelfTerm) -> Self {
        ShelfTerm::Op(Arc::new(self.clone()), Arc::new(rhs.clone()))
    }

    /// `((x_k ∗ x_k) ∗ ⋯) ∗ x_k` with `ops` operations.
    pub fn comb(k: i64, ops: usize) -> Self {
        let x = Self::x(k);
        (0..ops).fold(x.clone(), |acc, _| acc.op(&x))
    }

    pub fn leaves(&self) -> usize {
        match self {
            ShelfTerm::Leaf(_) => 1,
            ShelfTerm::Op(a, b) => a.leaves() + b.leaves(),
        }
    }

    pub fn right_factor(&self) -> Option<&ShelfTerm> {
        match self {
            ShelfTerm::Op(_, b) => Some(b),
            ShelfTerm::Leaf(_) => None,
        }
    }

    /// Applies `g` to every leaf label.
    pub fn map_labels(&self, g: &impl Fn(Label) -> Label) -> ShelfTerm {
        match self {
            ShelfTerm::Leaf(l) => ShelfTerm::Leaf(g(*l)),
            ShelfTerm::Op(a, b) => {
                ShelfTerm::Op(Arc::new(a.map_labels(g)), Arc::new(b.map_labels(g)))
            }
        }
    }

    /// `f^k` applied to the term: every subscript shifted by `k`.
    pub fn shift(&self, k: i64) -> ShelfTerm {
        self.map_labels(&|l| Label {
            gen: l.gen,
            sub: l.sub.checked_add(k).expect("subscript overflow"),
        })
    }

    /// Evaluates the term in a right self-distributive operation.
    pub fn eval<T: Copy>(&self, val: &impl Fn(Label) -> T, op: &impl Fn(T, T) -> T) -> T {
        match self {
            ShelfTerm::Leaf(l) => val(*l),
            ShelfTerm::Op(a, b) => op(a.eval(val, op), b.eval(val, op)),
        }
    }
}

impl fmt::Display for ShelfTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShelfTerm::Leaf(l) => write!(f, "{l}"),
            ShelfTerm::Op(a, b) => write!(f, "({a}*{b})"),
        }
    }
}

impl fmt::Debug for ShelfTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct TermParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl TermParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn int(&mut self) -> Option<i64> {
        let start = self.pos;
        if self.pos < self.s.len() && self.s[self.pos] == b'-' {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let parsed = std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|x| x.parse().ok());
        if parsed.is_none() {
            self.pos = start;
        }
        parsed
    }

    fn atom(&mut self) -> Result<ShelfTerm> {
        self.skip_ws();
        match self.s.get(self.pos) {
            Some(b'x') => {
                self.pos += 1;
                let Some(first) = self.int() else {
                    return Ok(ShelfTerm::x(0));
                };
                if self.s.get(self.pos) == Some(&b'_') {
                    self.pos += 1;
                    let sub = self.int().ok_or_else(|| self.err("expected subscript"))?;
                    let gen = u32::try_from(first)
                        .ok()
                        .filter(|g| *g > 0)
                        .ok_or_else(|| self.err("generator index must be positive"))?;
                    Ok(ShelfTerm::Leaf(Label { gen, sub }))
                } else {
                    Ok(ShelfTerm::x(first))
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let t = self.term()?;
                self.skip_ws();
                if self.s.get(self.pos) != Some(&b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(t)
            }
            _ => Err(self.err("expected a term")),
        }
    }

    fn term(&mut self) -> Result<ShelfTerm> {
        let mut lhs = self.atom()?;
        loop {
            self.skip_ws();
            if self.s.get(self.pos) == Some(&b'*') {
                self.pos += 1;
                let rhs = self.atom()?;
                lhs = lhs.op(&rhs);
            } else {
                return Ok(lhs);
            }
        }
    }
}

impl std::str::FromStr for ShelfTerm {
    type Err = Error;

    /// Leaves `x<k>` (bare `x` is `x0`) or `x<i>_<k>`; `*` is left associative.
    fn from_str(text: &str) -> Result<Self> {
        let mut p = TermParser {
            s: text.as_bytes(),
            pos: 0,
        };
        let t = p.term()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(t)
    }
}

/// Length, first subscript and multiset of first subscripts of a term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermInvariants {
    pub length: usize,
    pub first: Label,
    /// Sorted.
    pub first_multiset: Vec<Label>,
}

fn first_label(t: &ShelfTerm) -> Label {
    let mut cur = t;
    loop {
        match cur {
            ShelfTerm::Leaf(l) => return *l,
            ShelfTerm::Op(a, _) => cur = a,
        }
    }
}

pub fn term_invariants(t: &ShelfTerm) -> TermInvariants {
    let mut length = 0;
    let mut multiset = Vec::new();
    let mut cur = t;
    let first = loop {
        match cur {
            ShelfTerm::Leaf(l) => break *l,
            ShelfTerm::Op(a, b) => {
                length += 1;
                multiset.push(first_label(b));
                cur = a;
            }
        }
    };
    multiset.sort();
    TermInvariants {
        length,
        first,
        first_multiset: multiset,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `(a∗b)∗c → (a∗c)∗(b∗c)`
    Expand,
    /// `(a∗c)∗(b∗c) → (a∗b)∗c`
    Contract,
}

fn root_rewrite(t: &ShelfTerm, dir: Direction) -> Option<ShelfTerm> {
    let ShelfTerm::Op(l, r) = t else { return None };
    match dir {
        Direction::Expand => {
            let ShelfTerm::Op(a, b) = &**l else {
                return None;
            };
            Some(ShelfTerm::Op(
                Arc::new(ShelfTerm::Op(a.clone(), r.clone())),
                Arc::new(ShelfTerm::Op(b.clone(), r.clone())),
            ))
        }
        Direction::Contract => {
            let (ShelfTerm::Op(a, c1), ShelfTerm::Op(b, c2)) = (&**l, &**r) else {
                return None;
            };
            (c1 == c2)
                .then(|| ShelfTerm::Op(Arc::new(ShelfTerm::Op(a.clone(), b.clone())), c1.clone()))
        }
    }
}

fn collect_neighbors(t: &ShelfTerm, dir: Direction, out: &mut Vec<ShelfTerm>) {
    if let Some(u) = root_rewrite(t, dir) {
        out.push(u);
    }
    if let ShelfTerm::Op(l, r) = t {
        let mut sub = Vec::new();
        collect_neighbors(l, dir, &mut sub);
        for l2 in sub.drain(..) {
            out.push(ShelfTerm::Op(Arc::new(l2), r.clone()));
        }
        collect_neighbors(r, dir, &mut sub);
        for r2 in sub {
            out.push(ShelfTerm::Op(l.clone(), Arc::new(r2)));
        }
    }
}

/// All terms one self-distributivity step away in the given direction.
pub fn ld_neighbors(t: &ShelfTerm, dir: Direction) -> BTreeSet<ShelfTerm> {
    let mut out = Vec::new();
    collect_neighbors(t, dir, &mut out);
    out.into_iter().collect()
}

fn all_neighbors(t: &ShelfTerm) -> Vec<ShelfTerm> {
    let mut out = Vec::new();
    collect_neighbors(t, Direction::Expand, &mut out);
    collect_neighbors(t, Direction::Contract, &mut out);
    out
}

/// Relabels every leaf to subscript 0.
pub fn devirtualize(t: &ShelfTerm) -> ShelfTerm {
    t.map_labels(&|l| Label { gen: l.gen, sub: 0 })
}

/// Search limits for the bounded decisions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximal number of rewrite steps along a connecting path.
    pub depth: usize,
    /// Maximal number of distinct terms visited.
    pub max_visited: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            depth: 8,
            max_visited: 100_000,
        }
    }
}

/// The Laver table `A_n` on `{1, …, 2^n}`, a left self-distributive operation.
#[derive(Debug, Clone)]
pub struct LaverTable {
    size: usize,
    table: Vec<Vec<u16>>,
}

impl LaverTable {
    pub fn new(n: u32) -> Self {
        assert!(n <= 12, "Laver tables beyond A_12 are not supported");
        let size = 1usize << n;
        let mut table = vec![vec![0u16; size + 1]; size + 1];
        for b in 1..=size {
            table[size][b] = b as u16;
        }
        for a in (1..size).rev() {
            table[a][1] = (a + 1) as u16;
            for b in 1..size {
                let ab = table[a][b] as usize;
                table[a][b + 1] = table[ab][a + 1];
            }
        }
        Self { size, table }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The left self-distributive product `a ⋆ b`.
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.table[a][b] as usize
    }

    /// The right self-distributive operation `a ◁ b := b ⋆ a`.
    pub fn triangle(&self, a: usize, b: usize) -> usize {
        self.star(b, a)
    }
}

const LAVER_LEVELS: [u32; 4] = [3, 4, 5, 7];
const LAVER_SEEDS: u64 = 6;

fn laver_tables() -> &'static [LaverTable] {
    static TABLES: OnceLock<Vec<LaverTable>> = OnceLock::new();
    TABLES.get_or_init(|| LAVER_LEVELS.iter().map(|&n| LaverTable::new(n)).collect())
}

fn valuation(l: Label, seed: u64, size: usize) -> usize {
    let mut h = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (l.gen as u64).wrapping_mul(0xC2B2_AE3D_27D4_EB4F)
        ^ (l.sub as u64).wrapping_mul(0x1656_67B1_9E37_79F9);
    h ^= h >> 29;
    h = h.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    h ^= h >> 32;
    if seed == 0 {
        // Every leaf at the generator 1: sees only the devirtualized term.
        return 1;
    }
    (h % size as u64) as usize + 1
}

/// Values of the term under fixed valuations into Laver tables.
///
/// Every valuation extends to a shelf morphism, so terms with different
/// fingerprints are different shelf elements.
pub fn laver_fingerprint(t: &ShelfTerm) -> Vec<u16> {
    let mut out = Vec::new();
    for table in laver_tables() {
        for seed in 0..LAVER_SEEDS {
            let v = t.eval(&|l| valuation(l, seed, table.size()), &|a, b| {
                table.triangle(a, b)
            });
            out.push(v as u16);
        }
    }
    out
}

/// A shelf-morphism-invariant key: equal elements have equal keys.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermKey {
    pub invariants: TermInvariants,
    pub laver: Vec<u16>,
}

pub fn term_key(t: &ShelfTerm) -> TermKey {
    TermKey {
        invariants: term_invariants(t),
        laver: laver_fingerprint(t),
    }
}

/// Sound certificate that the two terms are different shelf elements.
pub fn certify_distinct(t1: &ShelfTerm, t2: &ShelfTerm) -> bool {
    term_invariants(t1) != term_invariants(t2) || laver_fingerprint(t1) != laver_fingerprint(t2)
}

enum Connect {
    Found,
    Exhausted,
    CapHit,
}

fn connect(t1: &ShelfTerm, t2: &ShelfTerm, budget: SearchBudget) -> Connect {
    let mut seen = [HashMap::new(), HashMap::new()];
    let mut frontier = [vec![t1.clone()], vec![t2.clone()]];
    seen[0].insert(t1.clone(), 0usize);
    seen[1].insert(t2.clone(), 0usize);
    let mut levels = 0;
    while levels < budget.depth {
        let side = usize::from(frontier[1].len() < frontier[0].len());
        if frontier[side].is_empty() {
            return Connect::Exhausted;
        }
        let mut next = Vec::new();
        for t in std::mem::take(&mut frontier[side]) {
            for u in all_neighbors(&t) {
                if seen[1 - side].contains_key(&u) {
                    return Connect::Found;
                }
                if !seen[side].contains_key(&u) {
                    seen[side].insert(u.clone(), levels + 1);
                    next.push(u);
                    if seen[0].len() + seen[1].len() > budget.max_visited {
                        return Connect::CapHit;
                    }
                }
            }
        }
        frontier[side] = next;
        levels += 1;
    }
    Connect::Exhausted
}

/// Bounded decision of equality in the free (virtual) shelf.
///
/// `NotEqual` is certified by the term invariants or by Laver-table values;
/// `Equal` by a connecting chain of at most `budget.depth` rewrites.
pub fn equal_in_free_shelf(t1: &ShelfTerm, t2: &ShelfTerm, budget: SearchBudget) -> EqDecision {
    if t1 == t2 {
        return EqDecision::Equal;
    }
    if certify_distinct(t1, t2) {
        return EqDecision::NotEqual;
    }
    match connect(t1, t2, budget) {
        Connect::Found => EqDecision::Equal,
        Connect::Exhausted | Connect::CapHit => EqDecision::Undecided,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderDecision {
    Less,
    /// No witness within the depth budget, with the search space exhausted.
    NotComparableAtDepth,
    /// The visited-term cap was reached first.
    Undecided,
}

/// Bounded test of `t1 < t2` for the order generated by `b ≺ c ∗ b`.
///
/// Explores LD-equivalent forms of `t2`, takes their right factors, and
/// repeats on those factors, all within the depth budget.
pub fn dehornoy_less(t1: &ShelfTerm, t2: &ShelfTerm, budget: SearchBudget) -> OrderDecision {
    if t1 == t2 || term_invariants(t2).length == 0 {
        return OrderDecision::NotComparableAtDepth;
    }
    let target = term_key(t1);
    let inner = SearchBudget {
        depth: budget.depth / 2,
        max_visited: budget.max_visited / 10,
    };
    let mut visited: HashSet<ShelfTerm> = HashSet::new();
    let mut checked: HashSet<ShelfTerm> = HashSet::new();
    let mut queue: VecDeque<(ShelfTerm, usize)> = VecDeque::new();
    visited.insert(t2.clone());
    queue.push_back((t2.clone(), budget.depth));
    let mut undecided_match = false;
    while let Some((a, remaining)) = queue.pop_front() {
        if let Some(r) = a.right_factor() {
            if checked.insert(r.clone()) && term_key(r) == target {
                match equal_in_free_shelf(r, t1, inner) {
                    EqDecision::Equal => return OrderDecision::Less,
                    EqDecision::Undecided => undecided_match = true,
                    EqDecision::NotEqual => {}
                }
            }
            if remaining > 0 && visited.insert(r.clone()) {
                queue.push_back((r.clone(), remaining - 1));
            }
        }
        if remaining == 0 {
            continue;
        }
        for u in all_neighbors(&a) {
            if visited.insert(u.clone()) {
                queue.push_back((u, remaining - 1));
            }
        }
        if visited.len() > budget.max_visited {
            return OrderDecision::Undecided;
        }
    }
    if undecided_match {
        OrderDecision::Undecided
    } else {
        OrderDecision::NotComparableAtDepth
    }
}

/// All terms with between 1 and `max_leaves` leaves over the given labels.
pub fn enumerate_terms(max_leaves: usize, labels: &[Label]) -> Vec<ShelfTerm> {
    let mut by_size: Vec<Vec<ShelfTerm>> = vec![Vec::new(); max_leaves + 1];
    if max_leaves == 0 {
        return Vec::new();
    }
    by_size[1] = labels.iter().map(|&l| ShelfTerm::Leaf(l)).collect();
    for n in 2..=max_leaves {
        let mut cur = Vec::new();
        for k in 1..n {
            for a in &by_size[k] {
                for b in &by_size[n - k] {
                    cur.push(a.op(b));
                }
            }
        }
        by_size[n] = cur;
    }
    by_size.into_iter().flatten().collect()
}

/// The free shelf on one generator (`virtual_ = false`, leaves printed `x0`)
/// or the free virtual shelf `FS_ℤ` with `f` shifting subscripts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeShelf {
    virtual_: bool,
    budget: SearchBudget,
}

impl FreeShelf {
    pub fn real() -> Self {
        Self {
            virtual_: false,
            budget: SearchBudget::default(),
        }
    }

    pub fn virtual_shelf() -> Self {
        Self {
            virtual_: true,
            budget: SearchBudget::default(),
        }
    }

    pub fn with_budget(mut self, budget: SearchBudget) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> SearchBudget {
        self.budget
    }
}

impl Carrier for FreeShelf {
    type Elem = ShelfTerm;
    type Key = TermKey;

    fn name(&self) -> String {
        if self.virtual_ {
            "free-virtual-shelf".into()
        } else {
            "free-shelf".into()
        }
    }

    fn op(&self, a: &ShelfTerm, b: &ShelfTerm) -> ShelfTerm {
        a.op(b)
    }

    fn f(&self, a: &ShelfTerm) -> Option<ShelfTerm> {
        self.virtual_.then(|| a.shift(1))
    }

    fn f_inv(&self, a: &ShelfTerm) -> Option<ShelfTerm> {
        self.virtual_.then(|| a.shift(-1))
    }

    fn is_virtual(&self) -> bool {
        self.virtual_
    }

    fn samples(&self) -> Vec<ShelfTerm> {
        let labels: Vec<Label> = if self.virtual_ {
            vec![Label::sub(0), Label::sub(1)]
        } else {
            vec![Label::sub(0)]
        };
        enumerate_terms(3, &labels)
    }

    fn decide_eq(&self, a: &ShelfTerm, b: &ShelfTerm) -> EqDecision {
        equal_in_free_shelf(a, b, self.budget)
    }

    fn key(&self, a: &ShelfTerm) -> TermKey {
        term_key(a)
    }

    fn format_elem(&self, a: &ShelfTerm) -> String {
        a.to_string()
    }

    /// The constant tuple, a staircase `(x0, x1, …)` (virtual case only) and
    /// combs of pairwise different lengths `(x, (x∗x)∗x, …)`.
    fn probe_tuples(&self, n: usize) -> Vec<Vec<ShelfTerm>> {
        let mut out = vec![vec![ShelfTerm::x(0); n]];
        if self.virtual_ {
            out.push((0..n as i64).map(ShelfTerm::x).collect());
        }
        out.push((0..n).map(|k| ShelfTerm::comb(0, 2 * k)).collect());
        out
    }

    fn parse_elem(&self, text: &str) -> Result<ShelfTerm> {
        let t: ShelfTerm = text.parse()?;
        if !self.virtual_ && devirtualize(&t) != t {
            return Err(Error::Parse(format!(
                "{t}: the free shelf has only the leaf x0"
            )));
        }
        Ok(t)
    }
}
