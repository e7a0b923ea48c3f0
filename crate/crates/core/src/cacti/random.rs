//! Random cacti with small rational circumferences and parameters.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Cactus, Node, Point};
use crate::exactq::{qr, Rational};

fn circumference<R: Rng>(rng: &mut R) -> Rational {
    qr(rng.gen_range(1..=4), rng.gen_range(1..=3))
}

fn param<R: Rng>(rng: &mut R, c: &Rational) -> Rational {
    let d = rng.gen_range(1..=4);
    c * qr(rng.gen_range(0..d), d)
}

/// A random cactus with `k ≥ 1` lobes. Each new lobe is attached at one
/// point of an earlier lobe, joining an existing node when the point is
/// already one; labels are then shuffled. The marked point sits on a node
/// about a third of the time when its lobe has one.
pub fn random_cactus<R: Rng>(rng: &mut R, k: usize) -> Cactus {
    assert!(k >= 1);
    let circumferences: Vec<Rational> = (0..k).map(|_| circumference(rng)).collect();
    let mut nodes: Vec<Node> = Vec::new();
    for lobe in 2..=k {
        let host = rng.gen_range(1..lobe);
        let at = Point::new(host, param(rng, &circumferences[host - 1]));
        let new = Point::new(lobe, param(rng, &circumferences[lobe - 1]));
        match nodes.iter_mut().find(|n| n.points.contains(&at)) {
            Some(n) => {
                let pos = rng.gen_range(0..=n.points.len());
                n.points.insert(pos, new);
            }
            None => nodes.push(Node { points: vec![at, new] }),
        }
    }
    let lobe = rng.gen_range(1..=k);
    let on_nodes: Vec<Point> = nodes
        .iter()
        .flat_map(|n| n.points.iter().filter(|p| p.lobe == lobe).cloned())
        .collect();
    let marked = match on_nodes.choose(rng) {
        Some(p) if rng.gen_bool(1.0 / 3.0) => p.clone(),
        _ => {
            let c = &circumferences[lobe - 1];
            let mut p = param(rng, c);
            while on_nodes.iter().any(|n| n.param == p) && rng.gen_bool(0.9) {
                p = param(rng, c);
            }
            Point::new(lobe, p)
        }
    };
    let c = Cactus::new(circumferences, nodes, marked).expect("attaching lobes one point at a time gives a tree");
    let mut sigma: Vec<usize> = (1..=k).collect();
    sigma.shuffle(rng);
    c.relabel(&sigma).expect("a permutation")
}
