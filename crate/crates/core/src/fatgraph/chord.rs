use std::collections::{BTreeSet, HashSet};

use super::{BoundaryPartition, FatGraph, FatGraphError, HalfEdge};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChordError {
    #[error("boundary cycle index {0} out of range")]
    BadCycleIndex(usize),
    #[error("boundary cycle {0} listed twice")]
    DuplicateCycle(usize),
    #[error("no incoming cycles")]
    NoIncoming,
    #[error("every boundary cycle is incoming; at least one outgoing cycle is required")]
    NoOutgoing,
    #[error("incoming cycle {cycle} is not a simple circle: {reason}")]
    NotSimpleCircle { cycle: usize, reason: String },
    #[error("incoming circles share edge {0}")]
    CirclesIntersect(String),
    #[error("ghost edges contain a cycle through {0}")]
    GhostCycle(String),
    #[error("ghost tree has an endpoint at vertex {0}, which lies on no circle")]
    GhostLeafOffCircle(usize),
    #[error(transparent)]
    Graph(#[from] FatGraphError),
    #[error("reduction broke an invariant: {0}")]
    Reduction(String),
}

/// A validated Sullivan chord diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    graph: FatGraph,
    partition: BoundaryPartition,
    incoming: Vec<usize>,
    outgoing: Vec<usize>,
    circular: Vec<bool>,
    genus: u64,
}

/// Result of collapsing the ghost edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: FatGraph,
    /// Indices into `graph.boundary_cycles()` of the former incoming circles,
    /// in the diagram's incoming order.
    pub incoming: Vec<usize>,
}

impl ChordDiagram {
    /// Checks that the listed boundary cycles of `g` are disjoint embedded
    /// circles whose complement is a forest of ghost trees ending on them.
    ///
    /// Circles are required to be edge-disjoint and individually simple; two
    /// circles may touch at a vertex (the figure-8 with both loops incoming is
    /// a chord diagram).
    pub fn validate(g: &FatGraph, incoming: &[usize]) -> Result<Self, ChordError> {
        let partition = g.boundary_cycles();
        let n = partition.len();
        let mut seen = BTreeSet::new();
        for &i in incoming {
            if i >= n {
                return Err(ChordError::BadCycleIndex(i));
            }
            if !seen.insert(i) {
                return Err(ChordError::DuplicateCycle(i));
            }
        }
        if incoming.is_empty() {
            return Err(ChordError::NoIncoming);
        }
        if incoming.len() == n {
            return Err(ChordError::NoOutgoing);
        }
        let mut circular = vec![false; g.edge_count()];
        for &i in incoming {
            let cycle = &partition.cycles[i];
            let mut edges = HashSet::new();
            let mut verts = HashSet::new();
            for &h in cycle {
                if !edges.insert(g.edge_of(h)) {
                    return Err(ChordError::NotSimpleCircle {
                        cycle: i,
                        reason: format!("edge {} traversed twice", g.edge_names()[g.edge_of(h)]),
                    });
                }
                if !verts.insert(g.target(h)) {
                    return Err(ChordError::NotSimpleCircle {
                        cycle: i,
                        reason: format!("vertex {} visited twice", g.target(h)),
                    });
                }
            }
            for e in edges {
                if circular[e] {
                    return Err(ChordError::CirclesIntersect(g.edge_names()[e].clone()));
                }
                circular[e] = true;
            }
        }

        let nv = g.vertex_count();
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if circular[e] {
                continue;
            }
            let (ra, rb) = (find(&mut parent, g.vertex_of(a)), find(&mut parent, g.vertex_of(b)));
            if ra == rb {
                return Err(ChordError::GhostCycle(g.edge_names()[e].clone()));
            }
            parent[ra] = rb;
        }
        for (v, hs) in g.vertices().iter().enumerate() {
            let on_circle = hs.iter().any(|&h| circular[g.edge_of(h)]);
            if !on_circle && hs.len() == 1 {
                return Err(ChordError::GhostLeafOffCircle(v));
            }
        }
        let (genus, _) = g.genus()?;
        let outgoing = (0..n).filter(|i| !seen.contains(i)).collect();
        Ok(ChordDiagram {
            graph: g.clone(),
            partition,
            incoming: incoming.to_vec(),
            outgoing,
            circular,
            genus,
        })
    }

    pub fn graph(&self) -> &FatGraph {
        &self.graph
    }

    pub fn partition(&self) -> &BoundaryPartition {
        &self.partition
    }

    pub fn incoming(&self) -> &[usize] {
        &self.incoming
    }

    pub fn outgoing(&self) -> &[usize] {
        &self.outgoing
    }

    pub fn is_circular(&self, edge: usize) -> bool {
        self.circular[edge]
    }

    pub fn ghost_edge_count(&self) -> usize {
        self.circular.iter().filter(|&&c| !c).count()
    }

    /// `(g; p, q)`.
    pub fn diagram_type(&self) -> (u64, usize, usize) {
        (self.genus, self.incoming.len(), self.outgoing.len())
    }

    /// Collapses every ghost tree to a point.
    pub fn reduce(&self) -> Result<FatGraph, ChordError> {
        Ok(self.reduction()?.graph)
    }

    pub fn reduction(&self) -> Result<Reduction, ChordError> {
        let g = &self.graph;
        if self.ghost_edge_count() == 0 {
            return Ok(Reduction {
                graph: g.clone(),
                incoming: self.incoming.clone(),
            });
        }
        let mut vertices: Vec<Vec<HalfEdge>> = g.vertices().to_vec();
        let mut vertex_of: Vec<usize> = (0..g.half_edge_count()).map(|h| g.vertex_of(h)).collect();
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if self.circular[e] {
                continue;
            }
            let (u, v) = (vertex_of[a], vertex_of[b]);
            debug_assert_ne!(u, v, "ghost forest has no loops");
            let rot = |list: &[HalfEdge], h: HalfEdge| {
                let k = list.iter().position(|&x| x == h).unwrap();
                list[k + 1..].iter().chain(&list[..k]).copied().collect::<Vec<_>>()
            };
            let mut merged = rot(&vertices[u], a);
            merged.extend(rot(&vertices[v], b));
            for &h in &merged {
                vertex_of[h] = u;
            }
            vertices[u] = merged;
            vertices[v].clear();
        }

        let keep: Vec<HalfEdge> = (0..g.half_edge_count())
            .filter(|&h| self.circular[g.edge_of(h)])
            .collect();
        let mut new_index = vec![usize::MAX; g.half_edge_count()];
        for (i, &h) in keep.iter().enumerate() {
            new_index[h] = i;
        }
        let names = keep.iter().map(|&h| g.names()[h].clone()).collect();
        let iota = keep.iter().map(|&h| new_index[g.iota(h)]).collect();
        let new_vertices = vertices
            .into_iter()
            .filter(|v| !v.is_empty())
            .map(|v| v.into_iter().map(|h| new_index[h]).collect())
            .collect();
        let mut edges = Vec::new();
        let mut edge_names = Vec::new();
        let mut lengths = std::collections::BTreeMap::new();
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if self.circular[e] {
                if let Some(l) = g.lengths().get(&e) {
                    lengths.insert(edges.len(), l.clone());
                }
                edges.push((new_index[a], new_index[b]));
                edge_names.push(g.edge_names()[e].clone());
            }
        }
        let markings = g
            .markings()
            .iter()
            .filter(|&&h| new_index[h] != usize::MAX)
            .map(|&h| new_index[h])
            .collect();
        let reduced = FatGraph::from_parts(names, iota, new_vertices, edges, edge_names)?
            .with_lengths(lengths)?
            .with_markings(markings);

        let before = g.genus()?;
        let after = reduced.genus()?;
        if before != after {
            return Err(ChordError::Reduction(format!(
                "(genus, boundary) changed from {before:?} to {after:?}"
            )));
        }
        let reduced_cycles = reduced.boundary_cycles();
        let mut incoming = Vec::new();
        let mut on_incoming = vec![false; reduced.half_edge_count()];
        for &i in &self.incoming {
            let set: BTreeSet<HalfEdge> =
                self.partition.cycles[i].iter().map(|&h| new_index[h]).collect();
            let found = reduced_cycles
                .cycles
                .iter()
                .position(|c| c.iter().copied().collect::<BTreeSet<_>>() == set)
                .ok_or_else(|| {
                    ChordError::Reduction(format!("incoming cycle {i} is no longer a boundary cycle"))
                })?;
            for &h in &set {
                on_incoming[h] = true;
            }
            incoming.push(found);
        }
        for h in 0..reduced.half_edge_count() {
            if on_incoming[h] == on_incoming[reduced.iota(h)] {
                return Err(ChordError::Reduction(format!(
                    "{} lies on an incoming cycle iff its reverse does",
                    reduced.oriented_label(h)
                )));
            }
        }
        Ok(Reduction {
            graph: reduced,
            incoming,
        })
    }
}
