//! Structure-constant files shared by the algebraic modules.
//!
//! ```json
//! {
//!   "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 0}],
//!   "product": [[0, 0, ["1", "0"]], [0, 1, [0, 1]], [1, 0, [0, 1]]],
//!   "bracket": [[i, j, [...]]],
//!   "bracket_degree": 0,
//!   "unit": ["1", "0"],
//!   "trace": ["0", "1"],
//!   "differential": [[i, [...]]],
//!   "operators": {"Delta": {"degree": 1, "images": [[i, [...]]]}}
//! }
//! ```
//!
//! Indices are 0-based; omitted products and images are zero; coefficients
//! are `"p/q"` strings or integers.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exactq::{
    format_rational, zero, BasisElement, ExactError, GradedVectorSpace, MultilinearMap,
    Rational,
};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed structure constants: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{context}: {source}")]
    Exact {
        context: String,
        source: ExactError,
    },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOperator {
    degree: i64,
    images: Vec<(usize, Vec<Coeff>)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Str(String),
    Int(i64),
}

impl Coeff {
    fn value(&self) -> Result<Rational, ExactError> {
        match self {
            Coeff::Str(s) => crate::exactq::parse_rational(s),
            Coeff::Int(i) => Ok(crate::exactq::q(*i)),
        }
    }

    fn from(r: &Rational) -> Self {
        Coeff::Str(format_rational(r))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConstants {
    basis: Vec<BasisElement>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    product: Option<Vec<(usize, usize, Vec<Coeff>)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bracket: Option<Vec<(usize, usize, Vec<Coeff>)>>,
    #[serde(default)]
    bracket_degree: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    differential: Option<Vec<(usize, Vec<Coeff>)>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    operators: BTreeMap<String, RawOperator>,
}

/// A parsed structure-constant file.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub space: Arc<GradedVectorSpace>,
    pub product: Option<MultilinearMap>,
    pub bracket: Option<MultilinearMap>,
    pub unit: Option<Vec<Rational>>,
    pub trace: Option<Vec<Rational>>,
    /// Degree +1 linear map.
    pub differential: Option<MultilinearMap>,
    pub operators: BTreeMap<String, MultilinearMap>,
}

fn exact(context: &str) -> impl Fn(ExactError) -> LoadError + '_ {
    move |source| LoadError::Exact {
        context: context.to_string(),
        source,
    }
}

fn vector(dim: usize, raw: &[Coeff], context: &str) -> Result<Vec<Rational>, LoadError> {
    if raw.len() != dim {
        return Err(LoadError::Invalid(format!(
            "{context}: expected {dim} coefficients, found {}",
            raw.len()
        )));
    }
    raw.iter()
        .map(|c| c.value().map_err(exact(context)))
        .collect()
}

fn bilinear(
    space: &Arc<GradedVectorSpace>,
    degree: i64,
    raw: &[(usize, usize, Vec<Coeff>)],
    what: &str,
) -> Result<MultilinearMap, LoadError> {
    let mut entries = Vec::new();
    for (i, j, coeffs) in raw {
        let ctx = format!("{what}[{i}, {j}]");
        let v = vector(space.dim(), coeffs, &ctx)?;
        for (k, c) in v.into_iter().enumerate() {
            entries.push((vec![*i, *j], k, c));
        }
    }
    MultilinearMap::new(vec![space.clone(); 2], space.clone(), degree, entries).map_err(exact(what))
}

fn linear(
    space: &Arc<GradedVectorSpace>,
    degree: i64,
    raw: &[(usize, Vec<Coeff>)],
    what: &str,
) -> Result<MultilinearMap, LoadError> {
    let mut entries = Vec::new();
    for (i, coeffs) in raw {
        let ctx = format!("{what}[{i}]");
        let v = vector(space.dim(), coeffs, &ctx)?;
        for (k, c) in v.into_iter().enumerate() {
            entries.push((vec![*i], k, c));
        }
    }
    MultilinearMap::new(vec![space.clone()], space.clone(), degree, entries).map_err(exact(what))
}

impl StructureConstants {
    pub fn parse(text: &str) -> Result<Self, LoadError> {
        let raw: RawConstants = serde_json::from_str(text)?;
        let space = Arc::new(GradedVectorSpace::new(raw.basis).map_err(exact("basis"))?);
        let d = space.dim();
        let product = raw
            .product
            .as_deref()
            .map(|p| bilinear(&space, 0, p, "product"))
            .transpose()?;
        let bracket = raw
            .bracket
            .as_deref()
            .map(|p| bilinear(&space, raw.bracket_degree, p, "bracket"))
            .transpose()?;
        let unit = raw.unit.as_deref().map(|u| vector(d, u, "unit")).transpose()?;
        let trace = raw.trace.as_deref().map(|u| vector(d, u, "trace")).transpose()?;
        let differential = raw
            .differential
            .as_deref()
            .map(|p| linear(&space, 1, p, "differential"))
            .transpose()?;
        let mut operators = BTreeMap::new();
        for (name, op) in &raw.operators {
            operators.insert(name.clone(), linear(&space, op.degree, &op.images, name)?);
        }
        Ok(StructureConstants {
            space,
            product,
            bracket,
            unit,
            trace,
            differential,
            operators,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, LoadError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Bare space with nothing else attached.
    pub fn new(space: Arc<GradedVectorSpace>) -> Self {
        StructureConstants {
            space,
            product: None,
            bracket: None,
            unit: None,
            trace: None,
            differential: None,
            operators: BTreeMap::new(),
        }
    }

    pub fn require_product(&self) -> Result<&MultilinearMap, LoadError> {
        self.product
            .as_ref()
            .ok_or_else(|| LoadError::Invalid("no product table".into()))
    }

    pub fn to_json(&self) -> String {
        let d = self.space.dim();
        let vec_of = |v: &[Rational]| v.iter().map(Coeff::from).collect::<Vec<_>>();
        let bil = |m: &MultilinearMap| {
            let mut rows = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    let v = m.eval_basis(&[i, j]);
                    if v.iter().any(|x| *x != zero()) {
                        rows.push((i, j, vec_of(&v)));
                    }
                }
            }
            rows
        };
        let lin = |m: &MultilinearMap| {
            (0..d)
                .filter_map(|i| {
                    let v = m.eval_basis(&[i]);
                    v.iter().any(|x| *x != zero()).then(|| (i, vec_of(&v)))
                })
                .collect::<Vec<_>>()
        };
        let raw = RawConstants {
            basis: self.space.basis().to_vec(),
            product: self.product.as_ref().map(bil),
            bracket: self.bracket.as_ref().map(bil),
            bracket_degree: self.bracket.as_ref().map_or(0, |b| b.degree()),
            unit: self.unit.as_deref().map(vec_of),
            trace: self.trace.as_deref().map(vec_of),
            differential: self.differential.as_ref().map(lin),
            operators: self
                .operators
                .iter()
                .map(|(k, m)| {
                    (
                        k.clone(),
                        RawOperator {
                            degree: m.degree(),
                            images: lin(m),
                        },
                    )
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("serializable")
    }
}
