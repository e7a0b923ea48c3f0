//! Random fat graphs and chord diagrams for property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{FatGraph, HalfEdge};

struct Builder {
    names: Vec<String>,
    iota: Vec<HalfEdge>,
    edges: Vec<(HalfEdge, HalfEdge)>,
    edge_names: Vec<String>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            names: Vec::new(),
            iota: Vec::new(),
            edges: Vec::new(),
            edge_names: Vec::new(),
        }
    }

    fn edge(&mut self, name: String) -> (HalfEdge, HalfEdge) {
        let a = self.names.len();
        self.names.push(format!("{name}+"));
        self.names.push(format!("{name}-"));
        self.iota.push(a + 1);
        self.iota.push(a);
        self.edges.push((a, a + 1));
        self.edge_names.push(name);
        (a, a + 1)
    }

    fn finish(self, vertices: Vec<Vec<HalfEdge>>) -> FatGraph {
        FatGraph::from_parts(self.names, self.iota, vertices, self.edges, self.edge_names)
            .expect("generator produces valid graphs")
    }
}

/// Connected graph with between 1 and `max_vertices` vertices, a random
/// spanning tree, up to `max_extra` further edges (loops allowed) and
/// uniformly random cyclic orders.
pub fn connected_fat_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_extra: usize) -> FatGraph {
    let nv = rng.gen_range(1..=max_vertices.max(1));
    let mut b = Builder::new();
    let mut at: Vec<Vec<HalfEdge>> = vec![Vec::new(); nv];
    for v in 1..nv {
        let u = rng.gen_range(0..v);
        let (x, y) = b.edge(format!("e{}", b.edges.len()));
        at[u].push(x);
        at[v].push(y);
    }
    let min_extra = usize::from(nv == 1);
    let extra = rng.gen_range(min_extra..=max_extra.max(min_extra));
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..nv), rng.gen_range(0..nv));
        let (x, y) = b.edge(format!("e{}", b.edges.len()));
        at[u].push(x);
        at[v].push(y);
    }
    for v in &mut at {
        v.shuffle(rng);
    }
    b.finish(at)
}

/// A random chord diagram: `1..=max_circles` circles joined into one
/// connected piece by ghost trees (single edges, paths through a bivalent
/// vertex, stars, or two joined stars), plus a few extra ghost trees.
/// Returns the graph and the indices of its incoming boundary cycles.
pub fn chord_diagram<R: Rng>(rng: &mut R, max_circles: usize) -> (FatGraph, Vec<usize>) {
    let p = rng.gen_range(1..=max_circles.max(1));
    // each ghost tree lists its terminal circles; terminals become fresh
    // vertices on those circles
    let mut trees: Vec<Vec<usize>> = Vec::new();
    for c in 1..p {
        let mut t = vec![c, rng.gen_range(0..c)];
        if rng.gen_bool(0.3) {
            t.push(rng.gen_range(0..p));
        }
        trees.push(t);
    }
    for _ in 0..rng.gen_range(0..=2) {
        let s = rng.gen_range(2..=4);
        trees.push((0..s).map(|_| rng.gen_range(0..p)).collect());
    }

    // points[c] = ordered points on circle c: None for the base point,
    // Some((tree, slot)) for a terminal
    let mut points: Vec<Vec<Option<(usize, usize)>>> = vec![vec![None]; p];
    for (t, term) in trees.iter().enumerate() {
        for (slot, &c) in term.iter().enumerate() {
            let pos = rng.gen_range(1..=points[c].len());
            points[c].insert(pos, Some((t, slot)));
        }
    }

    let mut b = Builder::new();
    let mut vertices: Vec<Vec<HalfEdge>> = Vec::new();
    let mut terminal_vertex: Vec<Vec<usize>> = trees.iter().map(|t| vec![0; t.len()]).collect();
    let mut circle_start = Vec::new();
    for (c, pts) in points.iter().enumerate() {
        let m = pts.len();
        let es: Vec<(HalfEdge, HalfEdge)> = (0..m).map(|j| b.edge(format!("c{c}_{j}"))).collect();
        circle_start.push(es[0].0);
        for (j, pt) in pts.iter().enumerate() {
            // edge j runs from point j to point j+1
            let incoming_edge = es[(j + m - 1) % m];
            let outgoing_edge = es[j];
            vertices.push(vec![incoming_edge.1, outgoing_edge.0]);
            if let Some((t, slot)) = pt {
                terminal_vertex[*t][*slot] = vertices.len() - 1;
            }
        }
    }

    for (t, term) in trees.iter().enumerate() {
        let tv = &terminal_vertex[t];
        let name = |b: &Builder| format!("g{}", b.edges.len());
        match term.len() {
            2 if rng.gen_bool(0.5) => {
                let (x, y) = b.edge(name(&b));
                vertices[tv[0]].push(x);
                vertices[tv[1]].push(y);
            }
            4 if rng.gen_bool(0.5) => {
                // two internal vertices joined by an edge, two terminals each
                let (u, w) = b.edge(name(&b));
                let mut hu = vec![u];
                let mut hw = vec![w];
                for (k, &v) in tv.iter().enumerate() {
                    let (x, y) = b.edge(name(&b));
                    vertices[v].push(y);
                    if k < 2 {
                        hu.push(x);
                    } else {
                        hw.push(x);
                    }
                }
                hu.shuffle(rng);
                hw.shuffle(rng);
                vertices.push(hu);
                vertices.push(hw);
            }
            _ => {
                let mut hub = Vec::new();
                for &v in tv {
                    let (x, y) = b.edge(name(&b));
                    vertices[v].push(y);
                    hub.push(x);
                }
                hub.shuffle(rng);
                vertices.push(hub);
            }
        }
    }
    let g = b.finish(vertices);
    let partition = g.boundary_cycles();
    let incoming = circle_start
        .iter()
        .map(|&h| partition.cycle_of(h).expect("every half-edge is on a cycle"))
        .collect();
    (g, incoming)
}

/// Uniformly random permutation of `0..n`.
pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
