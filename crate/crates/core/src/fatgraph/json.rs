use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{FatGraph, FatGraphError};
use crate::exactq::{format_rational, parse_rational};

/// On-disk graph format. `edge_labels` maps the forward half-edge of an
/// edge to its display name; `lengths` and `markings` refer to edges and
/// oriented edges by display name (`Ā` or `~A` for a reversed edge).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FatGraphJson {
    pub half_edges: Vec<String>,
    pub involution: Vec<(String, String)>,
    pub vertices: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub edge_labels: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lengths: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub markings: Vec<String>,
}

impl FatGraphJson {
    pub fn parse(text: &str) -> Result<FatGraph, FatGraphError> {
        let raw: FatGraphJson =
            serde_json::from_str(text).map_err(|e| FatGraphError::Json(e.to_string()))?;
        raw.build()
    }

    pub fn build(&self) -> Result<FatGraph, FatGraphError> {
        let g = FatGraph::new(
            self.half_edges.clone(),
            &self.involution,
            &self.vertices,
            &self.edge_labels,
        )?;
        let mut lengths = BTreeMap::new();
        for (name, l) in &self.lengths {
            let e = g
                .edge_names()
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| FatGraphError::UnknownEdge(name.clone()))?;
            let l = parse_rational(l).map_err(|e| FatGraphError::BadLength {
                edge: name.clone(),
                reason: e.to_string(),
            })?;
            lengths.insert(e, l);
        }
        let mut markings = Vec::new();
        for m in &self.markings {
            markings.push(
                g.oriented_by_label(m)
                    .ok_or_else(|| FatGraphError::UnknownEdge(m.clone()))?,
            );
        }
        Ok(g.with_lengths(lengths)?.with_markings(markings))
    }

    pub fn from_graph(g: &FatGraph) -> Self {
        let names = g.names();
        let mut edge_labels = BTreeMap::new();
        for (k, &(a, _)) in g.edges().iter().enumerate() {
            if g.edge_names()[k] != names[a] {
                edge_labels.insert(names[a].clone(), g.edge_names()[k].clone());
            }
        }
        FatGraphJson {
            half_edges: names.to_vec(),
            involution: g
                .edges()
                .iter()
                .map(|&(a, b)| (names[a].clone(), names[b].clone()))
                .collect(),
            vertices: g
                .vertices()
                .iter()
                .map(|v| v.iter().map(|&h| names[h].clone()).collect())
                .collect(),
            edge_labels,
            lengths: g
                .lengths()
                .iter()
                .map(|(&e, l)| (g.edge_names()[e].clone(), format_rational(l)))
                .collect(),
            markings: g.markings().iter().map(|&h| g.oriented_label(h)).collect(),
        }
    }
}
