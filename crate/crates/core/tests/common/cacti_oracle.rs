//! Independent descriptions of cactus traces and relabellings, used to
//! check the library's composition.

use loopforge::cacti::{Cactus, Point, TraceArc};
use loopforge::exactq::Rational;
use num_traits::Zero;

pub fn arcs(c: &Cactus) -> Vec<(usize, Rational, Rational)> {
    c.pinching_trace()
        .arcs
        .into_iter()
        .map(|a| (a.lobe, a.start, a.length))
        .collect()
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, k);
            out.push(v);
        }
    }
    out
}

pub fn same(a: &Cactus, b: &Cactus) -> bool {
    a.canonical_form() == b.canonical_form()
}

pub fn modulo(x: &Rational, c: &Rational) -> Rational {
    x - (x / c).floor() * c
}

/// Checks the trace against the nodes directly: lengths, full single
/// coverage of every lobe, and jumps following cyclic orders.
pub fn check_trace(c: &Cactus) {
    let t = c.pinching_trace();
    assert_eq!(t.total, c.total_circumference());
    let sum: Rational = t.arcs.iter().map(|a| &a.length).sum();
    assert_eq!(sum, t.total);
    assert!(t.arcs.iter().all(|a| a.length > Rational::zero()));
    assert_eq!(t.arcs[0].lobe, c.marked().lobe);
    assert_eq!(t.arcs[0].start, c.marked().param);

    for lobe in 1..=c.lobe_count() {
        let circ = c.circumference(lobe);
        let mut mine: Vec<&TraceArc> = t.arcs.iter().filter(|a| a.lobe == lobe).collect();
        mine.sort_by(|a, b| a.start.cmp(&b.start));
        let covered: Rational = mine.iter().map(|a| &a.length).sum();
        assert_eq!(&covered, circ);
        for w in mine.windows(2) {
            assert_eq!(&w[0].start + &w[0].length, w[1].start);
        }
    }

    let node_of = |p: &Point| c.nodes().iter().find(|n| n.points.contains(p));
    let n = t.arcs.len();
    for k in 0..n {
        let (a, b) = (&t.arcs[k], &t.arcs[(k + 1) % n]);
        let end = Point::new(a.lobe, modulo(&(&a.start + &a.length), c.circumference(a.lobe)));
        match node_of(&end) {
            Some(node) => {
                let j = node.points.iter().position(|p| *p == end).unwrap();
                let next = &node.points[(j + 1) % node.points.len()];
                assert_eq!((b.lobe, &b.start), (next.lobe, &next.param));
            }
            None => {
                assert_eq!(k, n - 1, "arcs only end off a node at the marked point");
                assert_eq!(&end, c.marked());
            }
        }
    }
}

/// `τ` with `relabel(c, σ) ∘_{σ(i)} relabel(g, ρ) = relabel(c ∘_i g, τ)`.
pub fn block_permutation(sigma: &[usize], i: usize, rho: &[usize]) -> Vec<usize> {
    let (k, l) = (sigma.len(), rho.len());
    let outer = |a: usize| {
        let s = sigma[a - 1];
        if s < sigma[i - 1] {
            s
        } else {
            s + l - 1
        }
    };
    (1..k + l)
        .map(|x| {
            if x < i {
                outer(x)
            } else if x < i + l {
                sigma[i - 1] + rho[x - i] - 1
            } else {
                outer(x - l + 1)
            }
        })
        .collect()
}

/// The trace of `c1` with each arc on lobe `i` replaced by the matching
/// stretch of the dilated trace of `c2`, cut at `c2`'s jumps and relabelled.
pub fn substituted_trace(c1: &Cactus, i: usize, c2: &Cactus) -> Vec<(usize, Rational, Rational)> {
    let l = c2.lobe_count();
    let s = c1.circumference(i) / c2.total_circumference();
    let inner: Vec<(usize, Rational, Rational)> = arcs(c2)
        .into_iter()
        .map(|(lobe, start, len)| (lobe, start * &s, len * &s))
        .collect();
    let inner_circ = |lobe: usize| c2.circumference(lobe) * &s;
    let period = c1.circumference(i).clone();
    let mut out: Vec<(usize, Rational, Rational)> = Vec::new();
    for (lobe, start, len) in arcs(c1) {
        if lobe != i {
            let label = if lobe < i { lobe } else { lobe + l - 1 };
            out.push((label, start, len));
            continue;
        }
        let mut pieces: Vec<(usize, Rational, Rational)> = Vec::new();
        let (mut t, end) = (start.clone(), &start + &len);
        while t < end {
            let u = modulo(&t, &period);
            let mut time = Rational::zero();
            for (b, bs, bl) in &inner {
                let stop = &time + bl;
                if u >= time && u < stop {
                    let take = std::cmp::min(&stop - &u, &end - &t);
                    let param = modulo(&(bs + &u - &time), &inner_circ(*b));
                    match pieces.last_mut() {
                        Some(last) if last.0 == b + i - 1 && modulo(&(&last.1 + &last.2), &inner_circ(*b)) == param => {
                            last.2 += &take;
                        }
                        _ => pieces.push((b + i - 1, param, take.clone())),
                    }
                    t += take;
                    break;
                }
                time = stop;
            }
        }
        out.extend(pieces);
    }
    out
}

