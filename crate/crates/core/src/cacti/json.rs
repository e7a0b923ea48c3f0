//! ```json
//! {
//!   "lobes": [{"label": 1, "circumference": "1"}, {"label": 2, "circumference": "1/2"}],
//!   "nodes": [{"incidences": [{"lobe": 1, "param": 0}, {"lobe": 2, "param": "1/4"}],
//!              "cyclic_order": [1, 2]}],
//!   "marked": {"lobe": 1, "param": 0}
//! }
//! ```

use serde::{Deserialize, Serialize};

use super::{Cactus, CactusError, Node, Point};
use crate::exactq::Rational;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLobe {
    label: usize,
    #[serde(with = "crate::exactq::serde_rational")]
    circumference: Rational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    lobe: usize,
    #[serde(with = "crate::exactq::serde_rational")]
    param: Rational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNode {
    incidences: Vec<RawPoint>,
    cyclic_order: Vec<usize>,
}

/// Serialized form of a [`Cactus`].
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CactusJson {
    lobes: Vec<RawLobe>,
    #[serde(default)]
    nodes: Vec<RawNode>,
    marked: RawPoint,
}

fn point(p: &RawPoint) -> Point {
    Point::new(p.lobe, p.param.clone())
}

fn raw_point(p: &Point) -> RawPoint {
    RawPoint {
        lobe: p.lobe,
        param: p.param.clone(),
    }
}

impl CactusJson {
    pub fn parse(text: &str) -> Result<Cactus, CactusError> {
        let raw: CactusJson = serde_json::from_str(text).map_err(|e| CactusError::Json(e.to_string()))?;
        raw.build()
    }

    pub fn build(&self) -> Result<Cactus, CactusError> {
        let k = self.lobes.len();
        let mut circumferences = vec![None; k];
        for l in &self.lobes {
            let slot = circumferences
                .get_mut(l.label.wrapping_sub(1))
                .ok_or(CactusError::Json(format!("labels must be 1..={k}, found {}", l.label)))?;
            if slot.replace(l.circumference.clone()).is_some() {
                return Err(CactusError::Json(format!("label {} repeated", l.label)));
            }
        }
        let circumferences = circumferences.into_iter().map(Option::unwrap).collect();
        let mut nodes = Vec::new();
        for (n, raw) in self.nodes.iter().enumerate() {
            let mut order = raw.cyclic_order.clone();
            let mut lobes: Vec<usize> = raw.incidences.iter().map(|p| p.lobe).collect();
            order.sort();
            lobes.sort();
            if order != lobes {
                return Err(CactusError::Json(format!(
                    "node {n}: cyclic order {:?} does not list the incident lobes",
                    raw.cyclic_order
                )));
            }
            let points = raw
                .cyclic_order
                .iter()
                .map(|&lobe| point(raw.incidences.iter().find(|p| p.lobe == lobe).unwrap()))
                .collect();
            nodes.push(Node { points });
        }
        Cactus::new(circumferences, nodes, point(&self.marked))
    }

    pub fn from_cactus(c: &Cactus) -> Self {
        CactusJson {
            lobes: c
                .circumferences()
                .iter()
                .enumerate()
                .map(|(j, x)| RawLobe {
                    label: j + 1,
                    circumference: x.clone(),
                })
                .collect(),
            nodes: c
                .nodes()
                .iter()
                .map(|n| RawNode {
                    incidences: n.points.iter().map(raw_point).collect(),
                    cyclic_order: n.cyclic_order(),
                })
                .collect(),
            marked: raw_point(c.marked()),
        }
    }
}

impl Cactus {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&CactusJson::from_cactus(self)).expect("serializable")
    }
}
