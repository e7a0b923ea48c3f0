//! Combinatorial 1-dimensional cacti: tree-like configurations of
//! parameterized circles (lobes) with a cyclic order at every intersection
//! point and a marked point, composed by gluing along pinching maps.
//!
//! Lobes are labelled `1..=k`. A lobe of circumference `c` is parameterized
//! by `[0, c)`. Intersection points are stored as [`Node`]s whose points are
//! listed in the cyclic order of the lobes meeting there.

mod json;
pub mod random;
mod ribbon;

use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exactq::{format_rational, Rational};

pub use json::CactusJson;
pub use random::random_cactus;
pub use ribbon::to_fatgraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CactusError {
    #[error("a cactus needs at least one lobe")]
    NoLobes,
    #[error("lobe {0} has non-positive circumference")]
    BadCircumference(usize),
    #[error("unknown lobe {0}")]
    UnknownLobe(usize),
    #[error("parameter {param} is outside [0, {circumference}) on lobe {lobe}")]
    ParamOutOfRange {
        lobe: usize,
        param: String,
        circumference: String,
    },
    #[error("node {0} has fewer than two lobes")]
    SmallNode(usize),
    #[error("lobe {lobe} appears twice at node {node}")]
    RepeatedLobe { node: usize, lobe: usize },
    #[error("two nodes share the point {param} of lobe {lobe}")]
    CoincidentNodes { lobe: usize, param: String },
    #[error("the dual graph is not a tree")]
    NotTree,
    #[error("lobe index {index} out of range 1..={lobes}")]
    IndexOutOfRange { index: usize, lobes: usize },
    #[error("not a permutation of 1..={0}")]
    BadPermutation(usize),
    #[error("malformed cactus: {0}")]
    Json(String),
}

/// A point on a lobe.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Point {
    pub lobe: usize,
    #[serde(with = "crate::exactq::serde_rational")]
    pub param: Rational,
}

impl Point {
    pub fn new(lobe: usize, param: Rational) -> Self {
        Point { lobe, param }
    }
}

/// An intersection point; `points` are listed in the cyclic order of lobes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub points: Vec<Point>,
}

impl Node {
    pub fn cyclic_order(&self) -> Vec<usize> {
        self.points.iter().map(|p| p.lobe).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cactus {
    circumferences: Vec<Rational>,
    nodes: Vec<Node>,
    marked: Point,
}

/// A piece of the pinching map: `length` along `lobe` starting at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceArc {
    pub lobe: usize,
    #[serde(with = "crate::exactq::serde_rational")]
    pub start: Rational,
    #[serde(with = "crate::exactq::serde_rational")]
    pub length: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinchingTrace {
    pub arcs: Vec<TraceArc>,
    #[serde(with = "crate::exactq::serde_rational")]
    pub total: Rational,
}

impl PinchingTrace {
    pub fn lobe_sequence(&self) -> Vec<usize> {
        self.arcs.iter().map(|a| a.lobe).collect()
    }

    /// Start times of the arcs along the trace.
    pub fn start_times(&self) -> Vec<Rational> {
        let mut t = Rational::zero();
        self.arcs
            .iter()
            .map(|a| {
                let s = t.clone();
                t += &a.length;
                s
            })
            .collect()
    }

    /// The point reached at time `t ∈ [0, total)`, on the lobe the trace
    /// leaves from at that time, and the index of its arc.
    pub fn point_at(&self, t: &Rational, circumferences: &[Rational]) -> (Point, usize) {
        let times = self.start_times();
        let k = times.iter().rposition(|s| s <= t).unwrap_or(0);
        let a = &self.arcs[k];
        let param = wrap(&(&a.start + t - &times[k]), &circumferences[a.lobe - 1]);
        (Point::new(a.lobe, param), k)
    }
}

fn wrap(x: &Rational, c: &Rational) -> Rational {
    let r = x - (x / c).floor() * c;
    if r.is_negative() {
        r + c
    } else {
        r
    }
}

impl Cactus {
    /// `circumferences[j]` belongs to lobe `j + 1`.
    pub fn new(circumferences: Vec<Rational>, nodes: Vec<Node>, marked: Point) -> Result<Self, CactusError> {
        let c = Cactus {
            circumferences,
            nodes,
            marked,
        };
        c.validate()?;
        Ok(c)
    }

    /// The unit: one lobe of circumference 1 marked at 0.
    pub fn identity() -> Self {
        Cactus {
            circumferences: vec![Rational::from_integer(1.into())],
            nodes: Vec::new(),
            marked: Point::new(1, Rational::zero()),
        }
    }

    fn check_point(&self, p: &Point) -> Result<(), CactusError> {
        let c = self.circumferences.get(p.lobe.wrapping_sub(1)).ok_or(CactusError::UnknownLobe(p.lobe))?;
        if p.param.is_negative() || p.param >= *c {
            return Err(CactusError::ParamOutOfRange {
                lobe: p.lobe,
                param: format_rational(&p.param),
                circumference: format_rational(c),
            });
        }
        Ok(())
    }

    fn validate(&self) -> Result<(), CactusError> {
        let k = self.circumferences.len();
        if k == 0 {
            return Err(CactusError::NoLobes);
        }
        if let Some(j) = self.circumferences.iter().position(|c| !c.is_positive()) {
            return Err(CactusError::BadCircumference(j + 1));
        }
        let mut seen = HashMap::new();
        for (n, node) in self.nodes.iter().enumerate() {
            if node.points.len() < 2 {
                return Err(CactusError::SmallNode(n));
            }
            let mut lobes = Vec::new();
            for p in &node.points {
                self.check_point(p)?;
                if lobes.contains(&p.lobe) {
                    return Err(CactusError::RepeatedLobe { node: n, lobe: p.lobe });
                }
                lobes.push(p.lobe);
                if seen.insert(p.clone(), n).is_some() {
                    return Err(CactusError::CoincidentNodes {
                        lobe: p.lobe,
                        param: format_rational(&p.param),
                    });
                }
            }
        }
        self.check_point(&self.marked)?;

        // dual graph: lobes 0..k, nodes k.., one edge per incidence
        let edges: usize = self.nodes.iter().map(|n| n.points.len()).sum();
        if edges + 1 != k + self.nodes.len() {
            return Err(CactusError::NotTree);
        }
        let mut parent: Vec<usize> = (0..k + self.nodes.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (n, node) in self.nodes.iter().enumerate() {
            for p in &node.points {
                let (a, b) = (find(&mut parent, p.lobe - 1), find(&mut parent, k + n));
                if a == b {
                    return Err(CactusError::NotTree);
                }
                parent[a] = b;
            }
        }
        Ok(())
    }

    pub fn lobe_count(&self) -> usize {
        self.circumferences.len()
    }

    pub fn circumference(&self, lobe: usize) -> &Rational {
        &self.circumferences[lobe - 1]
    }

    pub fn circumferences(&self) -> &[Rational] {
        &self.circumferences
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn marked(&self) -> &Point {
        &self.marked
    }

    pub fn total_circumference(&self) -> Rational {
        self.circumferences.iter().sum()
    }

    /// Node index and position in its cyclic order, for every node point.
    fn node_index(&self) -> HashMap<&Point, (usize, usize)> {
        let mut m = HashMap::new();
        for (n, node) in self.nodes.iter().enumerate() {
            for (j, p) in node.points.iter().enumerate() {
                m.insert(p, (n, j));
            }
        }
        m
    }

    /// Node parameters on each lobe, sorted.
    fn stops(&self) -> Vec<Vec<Rational>> {
        let mut s = vec![Vec::new(); self.lobe_count()];
        for node in &self.nodes {
            for p in &node.points {
                s[p.lobe - 1].push(p.param.clone());
            }
        }
        for v in &mut s {
            v.sort();
        }
        s
    }

    /// Traces the cactus from the marked point in the direction of increasing
    /// parameter, jumping at each node to the next lobe in its cyclic order,
    /// until the marked point is reached again on the marked lobe.
    pub fn pinching_trace(&self) -> PinchingTrace {
        let index = self.node_index();
        let stops = self.stops();
        let start = self.marked.clone();
        let mut cur = start.clone();
        let mut arcs = Vec::new();
        loop {
            let c = self.circumference(cur.lobe);
            let distance = |q: &Rational| {
                let d = wrap(&(q - &cur.param), c);
                if d.is_zero() {
                    c.clone()
                } else {
                    d
                }
            };
            let mut d = stops[cur.lobe - 1].iter().map(distance).min();
            if cur.lobe == start.lobe {
                let m = distance(&start.param);
                d = Some(d.map_or(m.clone(), |x| x.min(m)));
            }
            let d = d.unwrap_or_else(|| c.clone());
            let arrive = Point::new(cur.lobe, wrap(&(&cur.param + &d), c));
            arcs.push(TraceArc {
                lobe: cur.lobe,
                start: cur.param.clone(),
                length: d,
            });
            cur = match index.get(&arrive) {
                Some(&(n, j)) => {
                    let pts = &self.nodes[n].points;
                    pts[(j + 1) % pts.len()].clone()
                }
                None => arrive,
            };
            if cur == start {
                break;
            }
            debug_assert!(arcs.len() <= 2 * (self.lobe_count() + self.nodes.len()));
        }
        PinchingTrace {
            arcs,
            total: self.total_circumference(),
        }
    }

    /// Scales every circumference and parameter by `s > 0`.
    pub fn dilate(&self, s: &Rational) -> Cactus {
        let scale = |p: &Point| Point::new(p.lobe, &p.param * s);
        Cactus {
            circumferences: self.circumferences.iter().map(|c| c * s).collect(),
            nodes: self
                .nodes
                .iter()
                .map(|n| Node {
                    points: n.points.iter().map(scale).collect(),
                })
                .collect(),
            marked: scale(&self.marked),
        }
    }

    /// Relabels lobe `a` as `sigma[a - 1]`.
    pub fn relabel(&self, sigma: &[usize]) -> Result<Cactus, CactusError> {
        let k = self.lobe_count();
        let mut seen = vec![false; k];
        if sigma.len() != k || sigma.iter().any(|&s| s == 0 || s > k || std::mem::replace(&mut seen[s - 1], true)) {
            return Err(CactusError::BadPermutation(k));
        }
        let mut circumferences = vec![Rational::zero(); k];
        for (a, c) in self.circumferences.iter().enumerate() {
            circumferences[sigma[a] - 1] = c.clone();
        }
        let map = |p: &Point| Point::new(sigma[p.lobe - 1], p.param.clone());
        Ok(Cactus {
            circumferences,
            nodes: self
                .nodes
                .iter()
                .map(|n| Node {
                    points: n.points.iter().map(map).collect(),
                })
                .collect(),
            marked: map(&self.marked),
        })
    }

    /// Each node rotated to start at its least lobe, nodes sorted. Two cacti
    /// are equal as operad elements iff their canonical forms are equal.
    pub fn canonical_form(&self) -> Cactus {
        let mut nodes: Vec<Node> = self
            .nodes
            .iter()
            .map(|n| {
                let j = (0..n.points.len()).min_by_key(|&j| n.points[j].lobe).unwrap_or(0);
                let mut points = n.points.clone();
                points.rotate_left(j);
                Node { points }
            })
            .collect();
        nodes.sort();
        Cactus {
            circumferences: self.circumferences.clone(),
            nodes,
            marked: self.marked.clone(),
        }
    }

    /// `self ∘_i other`: `other` is dilated to the circumference of lobe `i`
    /// and glued along its pinching map, parameter `t` of lobe `i` going to
    /// time `t` of the trace. Points of lobe `i` land on the lobe the trace
    /// leaves from at that time. Lobes of `other` take labels `i..i+l`, later
    /// lobes of `self` shift up by `l - 1`.
    pub fn compose(&self, i: usize, other: &Cactus) -> Result<Cactus, CactusError> {
        let k = self.lobe_count();
        if i == 0 || i > k {
            return Err(CactusError::IndexOutOfRange { index: i, lobes: k });
        }
        let l = other.lobe_count();
        let s = self.circumference(i) / other.total_circumference();
        let inner = other.dilate(&s);
        let trace = inner.pinching_trace();
        let times = trace.start_times();
        let inner_index = inner.node_index();

        let outer_label = |a: usize| if a < i { a } else { a + l - 1 };
        let inner_label = |b: usize| b + i - 1;
        let outer_point = |p: &Point| Point::new(outer_label(p.lobe), p.param.clone());
        let inner_point = |p: &Point| Point::new(inner_label(p.lobe), p.param.clone());

        let mut circumferences = Vec::with_capacity(k + l - 1);
        circumferences.extend_from_slice(&self.circumferences[..i - 1]);
        circumferences.extend_from_slice(&inner.circumferences);
        circumferences.extend_from_slice(&self.circumferences[i..]);

        // outer points hung into the gap after position j of inner node n
        let mut fillings: BTreeMap<(usize, usize), Vec<Point>> = BTreeMap::new();
        let mut nodes = Vec::new();
        for node in &self.nodes {
            let Some(j) = node.points.iter().position(|p| p.lobe == i) else {
                nodes.push(Node {
                    points: node.points.iter().map(outer_point).collect(),
                });
                continue;
            };
            let m = node.points.len();
            let others: Vec<Point> = (1..m).map(|r| outer_point(&node.points[(j + r) % m])).collect();
            let t = &node.points[j].param;
            let (x, arc) = trace.point_at(t, &inner.circumferences);
            match inner_index.get(&x) {
                Some(&(n, pos)) => {
                    debug_assert!(times[arc] == *t);
                    let pts = &inner.nodes[n].points;
                    let gap = (pos + pts.len() - 1) % pts.len();
                    fillings.insert((n, gap), others);
                }
                None => {
                    let mut points = vec![inner_point(&x)];
                    points.extend(others);
                    nodes.push(Node { points });
                }
            }
        }
        for (n, node) in inner.nodes.iter().enumerate() {
            let mut points = Vec::new();
            for (j, p) in node.points.iter().enumerate() {
                points.push(inner_point(p));
                if let Some(f) = fillings.get(&(n, j)) {
                    points.extend(f.iter().cloned());
                }
            }
            nodes.push(Node { points });
        }
        let marked = if self.marked.lobe == i {
            inner_point(&trace.point_at(&self.marked.param, &inner.circumferences).0)
        } else {
            outer_point(&self.marked)
        };
        let c = Cactus {
            circumferences,
            nodes,
            marked,
        };
        debug_assert_eq!(c.validate(), Ok(()));
        Ok(c)
    }
}
