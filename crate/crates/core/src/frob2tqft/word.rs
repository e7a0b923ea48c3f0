use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::exactq::Matrix;

use super::FrobeniusAlgebra;

/// Generator surfaces, written `in → out`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Generator {
    /// 2 → 1
    Pants,
    /// 1 → 2
    Copants,
    /// 1 → 0
    CapTrace,
    /// 0 → 1
    CapUnit,
    /// 2 → 0
    Pairing,
    /// 0 → 2
    Copairing,
    /// 1 → 1
    Cylinder,
    /// 2 → 2
    Swap,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::Pants,
        Generator::Copants,
        Generator::CapTrace,
        Generator::CapUnit,
        Generator::Pairing,
        Generator::Copairing,
        Generator::Cylinder,
        Generator::Swap,
    ];

    pub fn inputs(self) -> usize {
        match self {
            Generator::Pants | Generator::Pairing | Generator::Swap => 2,
            Generator::Copants | Generator::CapTrace | Generator::Cylinder => 1,
            Generator::CapUnit | Generator::Copairing => 0,
        }
    }

    pub fn outputs(self) -> usize {
        match self {
            Generator::Copants | Generator::Copairing | Generator::Swap => 2,
            Generator::Pants | Generator::CapUnit | Generator::Cylinder => 1,
            Generator::CapTrace | Generator::Pairing => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Pants => "pants",
            Generator::Copants => "copants",
            Generator::CapTrace => "cap_trace",
            Generator::CapUnit => "cap_unit",
            Generator::Pairing => "pairing",
            Generator::Copairing => "copairing",
            Generator::Cylinder => "cylinder",
            Generator::Swap => "swap",
        }
    }
}

impl FromStr for Generator {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| WordError::UnknownGenerator(s.to_string()))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum WordError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("layer {layer} takes {found} wires but {expected} arrive")]
    Wiring {
        layer: usize,
        expected: usize,
        found: usize,
    },
    #[error("a word without layers needs an explicit input count")]
    NoInputs,
    #[error("malformed cobordism word: {0}")]
    Json(#[from] serde_json::Error),
}

/// Layers of generators placed side by side; layer 0 acts first and its
/// generators consume the incoming wires left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobordismWord {
    inputs: usize,
    layers: Vec<Vec<Generator>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WordJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inputs: Option<usize>,
    layers: Vec<Vec<Generator>>,
}

fn arity_in(layer: &[Generator]) -> usize {
    layer.iter().map(|g| g.inputs()).sum()
}

fn arity_out(layer: &[Generator]) -> usize {
    layer.iter().map(|g| g.outputs()).sum()
}

impl CobordismWord {
    pub fn new(inputs: usize, layers: Vec<Vec<Generator>>) -> Result<Self, WordError> {
        let mut wires = inputs;
        for (k, layer) in layers.iter().enumerate() {
            if arity_in(layer) != wires {
                return Err(WordError::Wiring {
                    layer: k,
                    expected: wires,
                    found: arity_in(layer),
                });
            }
            wires = arity_out(layer);
        }
        Ok(CobordismWord { inputs, layers })
    }

    /// Input count taken from the first layer.
    pub fn from_layers(layers: Vec<Vec<Generator>>) -> Result<Self, WordError> {
        let inputs = layers.first().map(|l| arity_in(l)).ok_or(WordError::NoInputs)?;
        Self::new(inputs, layers)
    }

    /// `&[&["cap_unit", "cylinder"], &["pants"]]`.
    pub fn parse_layers(layers: &[&[&str]]) -> Result<Self, WordError> {
        let layers = layers
            .iter()
            .map(|l| l.iter().map(|s| s.parse()).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_layers(layers)
    }

    /// `{"inputs": 1, "layers": [["cap_unit", "cylinder"], ["pants"]]}`;
    /// `inputs` may be omitted when there is a layer.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let raw: WordJson = serde_json::from_str(text)?;
        match raw.inputs {
            Some(n) => Self::new(n, raw.layers),
            None => Self::from_layers(raw.layers),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&WordJson {
            inputs: Some(self.inputs),
            layers: self.layers.clone(),
        })
        .expect("serializable")
    }

    pub fn identity(wires: usize) -> Self {
        CobordismWord {
            inputs: wires,
            layers: Vec::new(),
        }
    }

    /// `cap_trace ∘ (pants ∘ copants)^g ∘ cap_unit`.
    pub fn closed_surface(genus: usize) -> Self {
        let mut layers = vec![vec![Generator::CapUnit]];
        for _ in 0..genus {
            layers.push(vec![Generator::Copants]);
            layers.push(vec![Generator::Pants]);
        }
        layers.push(vec![Generator::CapTrace]);
        CobordismWord { inputs: 0, layers }
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.layers.last().map_or(self.inputs, |l| arity_out(l))
    }

    pub fn layers(&self) -> &[Vec<Generator>] {
        &self.layers
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CobordismWord) -> Result<Self, WordError> {
        if other.inputs != self.outputs() {
            return Err(WordError::Wiring {
                layer: self.layers.len(),
                expected: self.outputs(),
                found: other.inputs,
            });
        }
        let mut layers = self.layers.clone();
        layers.extend(other.layers.iter().cloned());
        Ok(CobordismWord {
            inputs: self.inputs,
            layers,
        })
    }

    /// Cuts before layer `k`: the result `(w1, w2)` satisfies `w = w2 ∘ w1`.
    pub fn split(&self, k: usize) -> (Self, Self) {
        let k = k.min(self.layers.len());
        let first = CobordismWord {
            inputs: self.inputs,
            layers: self.layers[..k].to_vec(),
        };
        let second = CobordismWord {
            inputs: first.outputs(),
            layers: self.layers[k..].to_vec(),
        };
        (first, second)
    }

    /// `d^outputs × d^inputs` matrix of the surface.
    pub fn eval(&self, f: &FrobeniusAlgebra) -> Matrix {
        let d = f.dim();
        let mut m = Matrix::identity(d.pow(self.inputs as u32));
        for layer in &self.layers {
            let op = layer
                .iter()
                .fold(Matrix::identity(1), |acc, g| acc.kron(&f.generator_matrix(*g)));
            m = &op * &m;
        }
        m
    }
}

impl fmt::Display for CobordismWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.layers.is_empty() {
            return write!(f, "id^{}", self.inputs);
        }
        let parts: Vec<String> = self
            .layers
            .iter()
            .map(|l| l.iter().map(|g| g.name()).collect::<Vec<_>>().join(" ⊗ "))
            .collect();
        f.write_str(&parts.join(" ; "))
    }
}

/// Random well-wired word with `layers` layers that never carries more than
/// `max_wires` wires.
pub fn random_word<R: Rng>(rng: &mut R, inputs: usize, layers: usize, max_wires: usize) -> CobordismWord {
    let mut wires = inputs.min(max_wires);
    let start = wires;
    let mut out = Vec::with_capacity(layers);
    for _ in 0..layers {
        loop {
            let mut layer = Vec::new();
            let mut remaining = wires;
            loop {
                let creators = rng.gen_bool(0.15);
                if remaining == 0 && !creators {
                    break;
                }
                let choices: Vec<Generator> = Generator::ALL
                    .into_iter()
                    .filter(|g| {
                        if creators {
                            g.inputs() == 0
                        } else {
                            g.inputs() >= 1 && g.inputs() <= remaining
                        }
                    })
                    .collect();
                let g = *choices.choose(rng).expect("nonempty");
                remaining -= g.inputs();
                layer.push(g);
                if layer.len() > 2 * max_wires + 2 {
                    break;
                }
            }
            if remaining == 0 && arity_out(&layer) <= max_wires {
                wires = arity_out(&layer);
                out.push(layer);
                break;
            }
        }
    }
    CobordismWord::new(start, out).expect("built well wired")
}
