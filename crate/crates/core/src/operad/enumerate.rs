use std::collections::{BTreeSet, VecDeque};

use super::Tree;

/// All planar binary trees with `n` leaves labelled `1..=n` left to right and
/// every vertex decorated by `op`.
pub fn planar_binary_trees(n: usize, op: &str) -> Vec<Tree> {
    fn build(lo: usize, hi: usize, op: &str) -> Vec<Tree> {
        if lo == hi {
            return vec![Tree::Leaf(lo)];
        }
        let mut out = Vec::new();
        for split in lo..hi {
            let left = build(lo, split, op);
            let right = build(split + 1, hi, op);
            for l in &left {
                for r in &right {
                    out.push(Tree::node(op, vec![l.clone(), r.clone()]));
                }
            }
        }
        out
    }
    if n == 0 {
        return Vec::new();
    }
    build(1, n, op)
}

/// `C(2k, k) / (k + 1)`.
pub fn catalan(k: u64) -> u128 {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Trees reachable by one application of `(a·b)·c ↔ a·(b·c)` at some vertex.
pub fn assoc_moves(t: &Tree) -> Vec<Tree> {
    let mut out = Vec::new();
    let Tree::Node { op, children } = t else {
        return out;
    };
    if children.len() == 2 {
        if let Tree::Node { op: inner, children: ab } = &children[0] {
            if inner == op && ab.len() == 2 {
                out.push(Tree::node(
                    op,
                    vec![ab[0].clone(), Tree::node(op, vec![ab[1].clone(), children[1].clone()])],
                ));
            }
        }
        if let Tree::Node { op: inner, children: bc } = &children[1] {
            if inner == op && bc.len() == 2 {
                out.push(Tree::node(
                    op,
                    vec![Tree::node(op, vec![children[0].clone(), bc[0].clone()]), bc[1].clone()],
                ));
            }
        }
    }
    for (k, c) in children.iter().enumerate() {
        for moved in assoc_moves(c) {
            let mut ch = children.clone();
            ch[k] = moved;
            out.push(Tree::Node {
                op: op.clone(),
                children: ch,
            });
        }
    }
    out
}

/// Breadth-first closure of `start` under [`assoc_moves`].
pub fn assoc_move_closure(start: &Tree) -> BTreeSet<Tree> {
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(t) = queue.pop_front() {
        for m in assoc_moves(&t) {
            if seen.insert(m.clone()) {
                queue.push_back(m);
            }
        }
    }
    seen
}
