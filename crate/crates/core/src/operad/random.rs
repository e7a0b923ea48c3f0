//! Random decorated trees and elements for property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{OperadElement, Tree};
use crate::exactq::q;

/// Random planar tree with `n` leaves whose vertices use generators of arity
/// at least 2 from `gens`, with a uniformly random leaf labelling.
pub fn tree<R: Rng>(rng: &mut R, gens: &[(&str, usize)], n: usize) -> Tree {
    fn planar<R: Rng>(rng: &mut R, gens: &[(&str, usize)], n: usize) -> Tree {
        let usable: Vec<_> = gens.iter().filter(|(_, a)| *a >= 2 && *a <= n).collect();
        if n == 1 || usable.is_empty() {
            return Tree::Leaf(0);
        }
        let (op, k) = **usable.choose(rng).expect("nonempty");
        // random composition of n into k positive parts
        let mut cuts: Vec<usize> = (1..n).collect();
        cuts.shuffle(rng);
        let mut cuts: Vec<usize> = cuts[..k - 1].to_vec();
        cuts.sort_unstable();
        let mut parts = Vec::with_capacity(k);
        let mut prev = 0;
        for c in cuts.into_iter().chain(std::iter::once(n)) {
            parts.push(c - prev);
            prev = c;
        }
        Tree::node(op, parts.into_iter().map(|p| planar(rng, gens, p)).collect())
    }
    let t = planar(rng, gens, n);
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(rng);
    relabel_in_order(&t, &mut labels.into_iter())
}

fn relabel_in_order(t: &Tree, it: &mut impl Iterator<Item = usize>) -> Tree {
    match t {
        Tree::Leaf(_) => Tree::Leaf(it.next().expect("enough labels")),
        Tree::Node { op, children } => Tree::Node {
            op: op.clone(),
            children: children.iter().map(|c| relabel_in_order(c, it)).collect(),
        },
    }
}

/// Combination of up to `max_terms` random trees with coefficients in
/// `-3..=3`.
pub fn element<R: Rng>(rng: &mut R, gens: &[(&str, usize)], n: usize, max_terms: usize) -> OperadElement {
    let k = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<(Tree, _)> = (0..k)
        .map(|_| (tree(rng, gens, n), q(rng.gen_range(-3..=3))))
        .collect();
    OperadElement::from_terms(n, terms).expect("random trees have valid leaves")
}

/// Uniformly random permutation of `1..=n` in one-line notation.
pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    p.shuffle(rng);
    p
}
