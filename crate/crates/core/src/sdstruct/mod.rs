//! Self-distributive structures: finite tables and computable infinite carriers.

mod alexander;
mod cyclic;
mod freegroup;
mod group;
mod table;

use std::fmt::Debug;
use std::hash::Hash;

pub use alexander::AlexanderModule;
pub use cyclic::{fr1_iso_cr, CyclicRack};
pub use freegroup::{
    artin_apply, artin_generator, conj_op, vconj, ConjDirection, ConjFree, FreeGroupWord,
};
pub use group::FiniteGroup;
pub use table::{alexander_quandle, dihedral_quandle, Classification, FiniteRackTable, RackClass};

use crate::error::Result;

/// Outcome of an equality question that may be undecidable within a budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EqDecision {
    Equal,
    NotEqual,
    Undecided,
}

/// A set with a self-distributive operation, as consumed by the action engine.
///
/// `op_inv` is present exactly for racks, `f`/`f_inv` exactly for virtual structures.
pub trait Carrier {
    type Elem: Clone + Eq + Hash + Ord + Debug;
    /// Grouping key; equal elements must have equal keys.
    type Key: Clone + Eq + Hash + Ord + Debug;

    fn name(&self) -> String;

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn op_inv(&self, _a: &Self::Elem, _b: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    fn has_inverse(&self) -> bool {
        false
    }

    fn f(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    fn f_inv(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    fn is_virtual(&self) -> bool {
        false
    }

    /// Elements used for axiom checks: everything for finite carriers.
    fn samples(&self) -> Vec<Self::Elem>;

    /// True when `samples` is the whole carrier.
    fn is_finite(&self) -> bool {
        false
    }

    fn decide_eq(&self, a: &Self::Elem, b: &Self::Elem) -> EqDecision;

    fn key(&self, a: &Self::Elem) -> Self::Key;

    fn format_elem(&self, a: &Self::Elem) -> String;

    fn parse_elem(&self, text: &str) -> Result<Self::Elem>;

    /// Default probe tuples of length `n` for distinguishing braid actions:
    /// every tuple for small finite carriers, otherwise constant and staircase
    /// tuples over the samples.
    fn probe_tuples(&self, n: usize) -> Vec<Vec<Self::Elem>> {
        let s = self.samples();
        if s.is_empty() {
            return Vec::new();
        }
        if self.is_finite() && (s.len() as f64).powi(n as i32) <= 4096.0 {
            let mut out = vec![Vec::new()];
            for _ in 0..n {
                out = out
                    .into_iter()
                    .flat_map(|t| {
                        s.iter().map(move |x| {
                            let mut u = t.clone();
                            u.push(x.clone());
                            u
                        })
                    })
                    .collect();
            }
            return out;
        }
        let mut out = vec![vec![s[0].clone(); n]];
        for offset in 0..s.len().min(4) {
            out.push((0..n).map(|i| s[(i + offset) % s.len()].clone()).collect());
        }
        out.dedup();
        out
    }
}
