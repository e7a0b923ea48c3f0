//! Free operads on planar decorated trees.
//!
//! A tree's leaves carry labels `1..=n`; reading them left to right gives a
//! word `w`, and the tree stands for the operation
//! `(x_1,…,x_n) ↦ planar(x_{w_1},…,x_{w_n})`. Trees are signless: generator
//! degrees only matter when evaluating into an endomorphism operad.

mod enumerate;
mod eval;
mod presets;
pub mod random;
mod tree;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::exactq::{format_rational, one, Rational};

pub use enumerate::{assoc_move_closure, assoc_moves, catalan, planar_binary_trees};
pub use eval::{EndomorphismAssignment, EvalError};
pub use presets::{check_algebra, relations, AlgebraReport, Clause, Preset, Witness};
pub(crate) use presets::solve_unit;
pub use tree::{ParseTreeError, Tree};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OperadError {
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("expected {expected} inputs, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("{0:?} is not a permutation of 1..n")]
    NotAPermutation(Vec<usize>),
    #[error("tree leaves are not labelled 1..{0} bijectively")]
    BadLeaves(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub arity: usize,
    pub degree: i64,
}

/// Formal ℚ-combination of trees with a common number of leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperadElement {
    arity: usize,
    terms: BTreeMap<Tree, Rational>,
}

impl OperadElement {
    pub fn zero(arity: usize) -> Self {
        OperadElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_tree(t: Tree) -> Result<Self, OperadError> {
        Self::from_terms(t.arity(), [(t, one())])
    }

    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Tree, Rational)>,
    ) -> Result<Self, OperadError> {
        let mut e = Self::zero(arity);
        for (t, c) in terms {
            if !t.has_valid_leaves() || t.arity() != arity {
                return Err(OperadError::BadLeaves(arity));
            }
            e.accumulate(t, c);
        }
        Ok(e)
    }

    /// The tree with no vertices.
    pub fn identity() -> Self {
        Self::from_tree(Tree::Leaf(1)).expect("single leaf")
    }

    /// One vertex decorated by `op` with leaves `1..=n` in order.
    pub fn corolla(op: &str, n: usize) -> Self {
        Self::from_tree(Tree::corolla(op, n)).expect("corolla leaves are valid")
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Tree, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, t: Tree, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, OperadError> {
        if self.arity != other.arity {
            return Err(OperadError::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.accumulate(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, OperadError> {
        self.add(&other.scale(&-one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.arity);
        if !s.is_zero() {
            for (t, c) in &self.terms {
                out.terms.insert(t.clone(), c * s);
            }
        }
        out
    }

    /// `f ∘_i g`: graft `g` onto the leaf labelled `i`.
    pub fn compose_i(&self, i: usize, g: &Self) -> Result<Self, OperadError> {
        if i == 0 || i > self.arity {
            return Err(OperadError::SlotOutOfRange {
                slot: i,
                arity: self.arity,
            });
        }
        let mut out = Self::zero(self.arity + g.arity - 1);
        for (t1, c1) in &self.terms {
            for (t2, c2) in &g.terms {
                out.accumulate(t1.graft(i, t2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// `γ(f; g_1,…,g_n)`: graft every `g_j` simultaneously.
    pub fn gamma(&self, gs: &[Self]) -> Result<Self, OperadError> {
        if gs.len() != self.arity {
            return Err(OperadError::ArityMismatch {
                expected: self.arity,
                found: gs.len(),
            });
        }
        let mut offsets = Vec::with_capacity(gs.len());
        let mut total = 0;
        for g in gs {
            offsets.push(total);
            total += g.arity;
        }
        // expand the product of term lists
        let mut partial: Vec<(Vec<&Tree>, Rational)> = vec![(Vec::new(), one())];
        for g in gs {
            let mut next = Vec::new();
            for (ts, c) in &partial {
                for (t, d) in &g.terms {
                    let mut ts = ts.clone();
                    ts.push(t);
                    next.push((ts, c * d));
                }
            }
            partial = next;
        }
        let mut out = Self::zero(total);
        for (t, c) in &self.terms {
            for (ts, d) in &partial {
                let grafted = t.substitute(&|w| ts[w - 1].shift(offsets[w - 1]));
                out.accumulate(grafted, c * d);
            }
        }
        Ok(out)
    }

    /// Right action: the leaf labelled `w` is relabelled `p⁻¹(w)`, so that
    /// `(f·p)·q = f·(pq)` with `(pq)(x) = p(q(x))`. `p` is in one-line
    /// notation, `p[i-1] = p(i)`.
    pub fn sigma_action(&self, p: &[usize]) -> Result<Self, OperadError> {
        let inv = inverse_permutation(p, self.arity)?;
        let mut out = Self::zero(self.arity);
        for (t, c) in &self.terms {
            out.accumulate(t.relabel(&|w| inv[w - 1]), c.clone());
        }
        Ok(out)
    }

    /// Parses `"c*tree + c*tree - …"` or a bare tree.
    pub fn parse(s: &str) -> Result<Self, ParseTreeError> {
        tree::parse_element(s)
    }
}

/// Composition of permutations in one-line notation: `(pq)(x) = p(q(x))`.
pub fn compose_permutations(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x - 1]).collect()
}

pub fn inverse_permutation(p: &[usize], n: usize) -> Result<Vec<usize>, OperadError> {
    let bad = || OperadError::NotAPermutation(p.to_vec());
    if p.len() != n {
        return Err(bad());
    }
    let mut inv = vec![0; n];
    for (i, &x) in p.iter().enumerate() {
        if x == 0 || x > n || inv[x - 1] != 0 {
            return Err(bad());
        }
        inv[x - 1] = i + 1;
    }
    Ok(inv)
}

/// The permutation `P` with `γ(f·p; g_{p(1)},…,g_{p(n)}) = γ(f; g_1,…,g_n)·P`,
/// given the arities of `g_1,…,g_n`.
pub fn block_permutation(p: &[usize], arities: &[usize]) -> Vec<usize> {
    let offsets: Vec<usize> = arities
        .iter()
        .scan(0, |acc, &a| {
            let o = *acc;
            *acc += a;
            Some(o)
        })
        .collect();
    let total: usize = arities.iter().sum();
    let mut out = vec![0; total];
    let mut pos = 0;
    for &pj in p {
        for x in 1..=arities[pj - 1] {
            out[pos] = offsets[pj - 1] + x;
            pos += 1;
        }
    }
    out
}

impl fmt::Display for OperadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag == one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{}*{t}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}
