//! Experimental: the metric ribbon graph underlying a cactus.
//!
//! Vertices are the nodes (a single lobe gets one vertex at parameter 0),
//! edges the arcs of lobes between consecutive nodes. At a node with lobes
//! `L1, …, Lr` in cyclic order the half-edges read
//! `out(L1), in(L1), …, out(Lr), in(Lr)`, so one boundary cycle follows the
//! pinching map along forward arcs and each lobe bounds a cycle of
//! backward arcs. Marked points are not transferred.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::{wrap, Cactus, Point};
use crate::exactq::Rational;
use crate::fatgraph::{FatGraph, FatGraphError};

pub fn to_fatgraph(c: &Cactus) -> Result<FatGraph, FatGraphError> {
    let mut stops = c.stops();
    let mut vertex_points: Vec<Vec<Point>> = c.nodes().iter().map(|n| n.points.clone()).collect();
    if vertex_points.is_empty() {
        stops[0].push(Rational::zero());
        vertex_points.push(vec![Point::new(1, Rational::zero())]);
    }
    let mut names = Vec::new();
    let mut edges = Vec::new();
    let mut edge_names = Vec::new();
    let mut lengths = BTreeMap::new();
    // (lobe, param) -> (outgoing half-edge, incoming half-edge)
    let mut at: HashMap<Point, (usize, Option<usize>)> = HashMap::new();
    for (j, ps) in stops.iter().enumerate() {
        let lobe = j + 1;
        let circ = c.circumference(lobe);
        for (a, p) in ps.iter().enumerate() {
            let next = &ps[(a + 1) % ps.len()];
            let mut len = wrap(&(next - p), circ);
            if len.is_zero() {
                len = circ.clone();
            }
            let (fwd, bwd) = (names.len(), names.len() + 1);
            names.push(format!("L{lobe}.{a}+"));
            names.push(format!("L{lobe}.{a}-"));
            lengths.insert(edges.len(), len);
            edges.push((fwd, bwd));
            edge_names.push(format!("L{lobe}.{a}"));
            at.entry(Point::new(lobe, p.clone())).or_insert((fwd, None)).0 = fwd;
            at.entry(Point::new(lobe, next.clone())).or_insert((usize::MAX, None)).1 = Some(bwd);
        }
    }
    let mut iota = vec![0; names.len()];
    for &(a, b) in &edges {
        iota[a] = b;
        iota[b] = a;
    }
    let vertices = vertex_points
        .iter()
        .map(|ps| {
            ps.iter()
                .flat_map(|p| {
                    let (out, inc) = at[p];
                    [out, inc.expect("every stop ends an arc")]
                })
                .collect()
        })
        .collect();
    FatGraph::from_parts(names, iota, vertices, edges, edge_names)?.with_lengths(lengths)
}
