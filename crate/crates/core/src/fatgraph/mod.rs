//! Ribbon (fat) graphs stored as half-edges with an involution and a cyclic
//! order at every vertex.
//!
//! An oriented edge is identified with its source half-edge. Following an
//! oriented edge to its target vertex and taking the next half-edge in the
//! cyclic order there gives the boundary successor, i.e. `σ(ι(h))`.

mod chord;
mod json;
pub mod random;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::exactq::Rational;

pub use chord::{ChordDiagram, ChordError};
pub use json::FatGraphJson;

pub type HalfEdge = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FatGraphError {
    #[error("duplicate half-edge name {0:?}")]
    DuplicateName(String),
    #[error("unknown half-edge {0:?}")]
    UnknownHalfEdge(String),
    #[error("half-edge {0:?} is paired more than once or with itself")]
    BadInvolution(String),
    #[error("half-edge {0:?} is not paired")]
    Unpaired(String),
    #[error("half-edge {0:?} appears at more than one vertex position")]
    RepeatedAtVertex(String),
    #[error("half-edge {0:?} is not attached to any vertex")]
    Unattached(String),
    #[error("vertex {0} has no half-edges")]
    EmptyVertex(usize),
    #[error("vertex {vertex} has valence {valence}; strict mode needs at least 3")]
    LowValence { vertex: usize, valence: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("2 - chi - n = {0} is not a nonnegative even integer")]
    NonIntegralGenus(i64),
    #[error("bad edge length for {edge:?}: {reason}")]
    BadLength { edge: String, reason: String },
    #[error("unknown edge label {0:?}")]
    UnknownEdge(String),
    #[error("malformed graph file: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValenceMode {
    /// Every vertex at least trivalent.
    Strict,
    /// Any positive valence.
    Relaxed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatGraph {
    names: Vec<String>,
    iota: Vec<HalfEdge>,
    vertices: Vec<Vec<HalfEdge>>,
    vertex_of: Vec<usize>,
    sigma: Vec<HalfEdge>,
    /// Edge `k` is oriented forwards by `edges[k].0`.
    edges: Vec<(HalfEdge, HalfEdge)>,
    edge_of: Vec<usize>,
    edge_names: Vec<String>,
    lengths: BTreeMap<usize, Rational>,
    markings: Vec<HalfEdge>,
}

/// Boundary cycles as lists of oriented edges. Each cycle starts at its
/// oriented edge of least edge index; cycles starting on a forward edge come
/// first, each group ordered by that edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryPartition {
    pub cycles: Vec<Vec<HalfEdge>>,
}

impl BoundaryPartition {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycle_of(&self, h: HalfEdge) -> Option<usize> {
        self.cycles.iter().position(|c| c.contains(&h))
    }
}

impl FatGraph {
    /// Builds a graph from named half-edges. `involution` lists each edge once
    /// as `(forward, backward)`; `vertices` lists half-edges in cyclic order.
    pub fn new(
        names: Vec<String>,
        involution: &[(String, String)],
        vertices: &[Vec<String>],
        edge_labels: &BTreeMap<String, String>,
    ) -> Result<Self, FatGraphError> {
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(FatGraphError::DuplicateName(n.clone()));
            }
        }
        let lookup = |n: &str| {
            index
                .get(n)
                .copied()
                .ok_or_else(|| FatGraphError::UnknownHalfEdge(n.to_string()))
        };
        let h = names.len();
        let mut iota = vec![usize::MAX; h];
        let mut edges = Vec::new();
        for (a, b) in involution {
            let (ia, ib) = (lookup(a)?, lookup(b)?);
            if ia == ib || iota[ia] != usize::MAX {
                return Err(FatGraphError::BadInvolution(a.clone()));
            }
            if iota[ib] != usize::MAX {
                return Err(FatGraphError::BadInvolution(b.clone()));
            }
            iota[ia] = ib;
            iota[ib] = ia;
            edges.push((ia, ib));
        }
        if let Some(i) = iota.iter().position(|&x| x == usize::MAX) {
            return Err(FatGraphError::Unpaired(names[i].clone()));
        }
        let mut vs = Vec::new();
        for v in vertices {
            vs.push(v.iter().map(|n| lookup(n)).collect::<Result<Vec<_>, _>>()?);
        }
        let edge_names = edges
            .iter()
            .map(|&(a, _)| {
                edge_labels
                    .get(&names[a])
                    .cloned()
                    .unwrap_or_else(|| names[a].clone())
            })
            .collect();
        for key in edge_labels.keys() {
            let i = lookup(key)?;
            if !edges.iter().any(|&(a, _)| a == i) {
                return Err(FatGraphError::UnknownEdge(key.clone()));
            }
        }
        Self::from_parts(names, iota, vs, edges, edge_names)
    }

    /// Index-level constructor used by generators and internal rewrites.
    pub fn from_parts(
        names: Vec<String>,
        iota: Vec<HalfEdge>,
        vertices: Vec<Vec<HalfEdge>>,
        edges: Vec<(HalfEdge, HalfEdge)>,
        edge_names: Vec<String>,
    ) -> Result<Self, FatGraphError> {
        let h = names.len();
        for (i, &j) in iota.iter().enumerate() {
            if j >= h || j == i || iota[j] != i {
                return Err(FatGraphError::BadInvolution(names[i].clone()));
            }
        }
        let mut vertex_of = vec![usize::MAX; h];
        let mut sigma = vec![usize::MAX; h];
        for (vi, v) in vertices.iter().enumerate() {
            if v.is_empty() {
                return Err(FatGraphError::EmptyVertex(vi));
            }
            for (k, &x) in v.iter().enumerate() {
                if vertex_of[x] != usize::MAX {
                    return Err(FatGraphError::RepeatedAtVertex(names[x].clone()));
                }
                vertex_of[x] = vi;
                sigma[x] = v[(k + 1) % v.len()];
            }
        }
        if let Some(i) = vertex_of.iter().position(|&x| x == usize::MAX) {
            return Err(FatGraphError::Unattached(names[i].clone()));
        }
        let mut edge_of = vec![0; h];
        for (k, &(a, b)) in edges.iter().enumerate() {
            edge_of[a] = k;
            edge_of[b] = k;
        }
        if h == 0 {
            return Err(FatGraphError::NoEdges);
        }
        let mut seen = std::collections::HashSet::new();
        for n in &edge_names {
            if !seen.insert(n) {
                return Err(FatGraphError::DuplicateName(n.clone()));
            }
        }
        Ok(FatGraph {
            names,
            iota,
            vertices,
            vertex_of,
            sigma,
            edges,
            edge_of,
            edge_names,
            lengths: BTreeMap::new(),
            markings: Vec::new(),
        })
    }

    pub fn validate(&self, mode: ValenceMode) -> Result<(), FatGraphError> {
        if mode == ValenceMode::Strict {
            for (i, v) in self.vertices.iter().enumerate() {
                if v.len() < 3 {
                    return Err(FatGraphError::LowValence {
                        vertex: i,
                        valence: v.len(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn with_lengths(mut self, lengths: BTreeMap<usize, Rational>) -> Result<Self, FatGraphError> {
        for (&e, l) in &lengths {
            let name = self
                .edge_names
                .get(e)
                .ok_or_else(|| FatGraphError::UnknownEdge(e.to_string()))?;
            if *l <= Rational::from_integer(0.into()) {
                return Err(FatGraphError::BadLength {
                    edge: name.clone(),
                    reason: "must be positive".into(),
                });
            }
        }
        self.lengths = lengths;
        Ok(self)
    }

    pub fn with_markings(mut self, markings: Vec<HalfEdge>) -> Self {
        self.markings = markings;
        self
    }

    pub fn half_edge_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vec<HalfEdge>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(HalfEdge, HalfEdge)] {
        &self.edges
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn edge_names(&self) -> &[String] {
        &self.edge_names
    }

    pub fn lengths(&self) -> &BTreeMap<usize, Rational> {
        &self.lengths
    }

    pub fn markings(&self) -> &[HalfEdge] {
        &self.markings
    }

    pub fn iota(&self, h: HalfEdge) -> HalfEdge {
        self.iota[h]
    }

    /// Next half-edge in the cyclic order at `h`'s vertex.
    pub fn sigma(&self, h: HalfEdge) -> HalfEdge {
        self.sigma[h]
    }

    pub fn vertex_of(&self, h: HalfEdge) -> usize {
        self.vertex_of[h]
    }

    pub fn edge_of(&self, h: HalfEdge) -> usize {
        self.edge_of[h]
    }

    pub fn source(&self, h: HalfEdge) -> usize {
        self.vertex_of[h]
    }

    pub fn target(&self, h: HalfEdge) -> usize {
        self.vertex_of[self.iota[h]]
    }

    pub fn is_forward(&self, h: HalfEdge) -> bool {
        self.edges[self.edge_of[h]].0 == h
    }

    pub fn half_edge_by_name(&self, name: &str) -> Option<HalfEdge> {
        self.names.iter().position(|n| n == name)
    }

    /// Looks up an oriented edge written as `A` or `Ā` (also accepts `~A`).
    pub fn oriented_by_label(&self, label: &str) -> Option<HalfEdge> {
        let (base, rev) = if let Some(b) = label.strip_suffix('\u{0304}') {
            (b, true)
        } else if let Some(b) = label.strip_prefix('~') {
            (b, true)
        } else {
            (label, false)
        };
        let e = self.edge_names.iter().position(|n| n == base)?;
        let (f, b) = self.edges[e];
        Some(if rev { b } else { f })
    }

    /// Boundary successor: `σ(ι(h))`.
    pub fn successor(&self, h: HalfEdge) -> HalfEdge {
        self.sigma[self.iota[h]]
    }

    pub fn oriented_label(&self, h: HalfEdge) -> String {
        let name = &self.edge_names[self.edge_of[h]];
        if self.is_forward(h) {
            name.clone()
        } else {
            format!("{name}\u{0304}")
        }
    }

    /// Ordering key for oriented edges: edge index, forward before reverse.
    fn oriented_key(&self, h: HalfEdge) -> (usize, bool) {
        (self.edge_of[h], !self.is_forward(h))
    }

    pub fn boundary_cycles(&self) -> BoundaryPartition {
        let n = self.half_edge_count();
        let mut seen = vec![false; n];
        let mut order: Vec<HalfEdge> = (0..n).collect();
        order.sort_by_key(|&h| self.oriented_key(h));
        let mut cycles = Vec::new();
        for &start in &order {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                c.push(h);
                h = self.successor(h);
            }
            cycles.push(c);
        }
        // forward-starting cycles first, then by edge
        cycles.sort_by_key(|c| {
            let (e, rev) = self.oriented_key(c[0]);
            (rev, e)
        });
        BoundaryPartition { cycles }
    }

    pub fn cycle_labels(&self, p: &BoundaryPartition) -> Vec<Vec<String>> {
        p.cycles
            .iter()
            .map(|c| c.iter().map(|&h| self.oriented_label(h)).collect())
            .collect()
    }

    pub fn format_cycles(&self, p: &BoundaryPartition) -> String {
        self.cycle_labels(p)
            .iter()
            .map(|c| format!("({})", c.join(", ")))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64
    }

    pub fn is_connected(&self) -> bool {
        let nv = self.vertex_count();
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (
                find(&mut parent, self.vertex_of[a]),
                find(&mut parent, self.vertex_of[b]),
            );
            parent[ra] = rb;
        }
        let r = find(&mut parent, 0);
        (0..nv).all(|v| find(&mut parent, v) == r)
    }

    /// `(genus, boundary components)` of the thickened surface.
    pub fn genus(&self) -> Result<(u64, usize), FatGraphError> {
        if !self.is_connected() {
            return Err(FatGraphError::Disconnected);
        }
        let n = self.boundary_cycles().len();
        let two_g = 2 - self.euler_characteristic() - n as i64;
        if two_g < 0 || two_g % 2 != 0 {
            return Err(FatGraphError::NonIntegralGenus(two_g));
        }
        Ok(((two_g / 2) as u64, n))
    }

    /// Renames half-edges through `f`, keeping edge labels.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Self {
        let mut g = self.clone();
        g.names = self.names.iter().map(|n| f(n)).collect();
        g
    }

    /// Same graph with half-edge indices permuted: old index `i` becomes
    /// `perm[i]`. Names travel with their half-edges.
    pub fn permute_half_edges(&self, perm: &[usize]) -> Self {
        let n = self.half_edge_count();
        let mut names = vec![String::new(); n];
        let mut iota = vec![0; n];
        for i in 0..n {
            names[perm[i]] = self.names[i].clone();
            iota[perm[i]] = perm[self.iota[i]];
        }
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|&h| perm[h]).collect())
            .collect();
        let edges = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let mut g = Self::from_parts(names, iota, vertices, edges, self.edge_names.clone())
            .expect("permutation preserves validity");
        g.lengths = self.lengths.clone();
        g.markings = self.markings.iter().map(|&h| perm[h]).collect();
        g
    }
}

impl fmt::Display for FatGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            let hs: Vec<&str> = v.iter().map(|&h| self.names[h].as_str()).collect();
            writeln!(f, "v{i}: ({})", hs.join(" "))?;
        }
        Ok(())
    }
}
