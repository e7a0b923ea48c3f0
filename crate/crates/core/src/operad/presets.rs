use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::exactq::{one, zero, Matrix, MultilinearMap, Rational};

use super::eval::{EndomorphismAssignment, EvalError};
use super::OperadElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    Comm,
    Ass,
    Lie,
    Poisson,
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "comm" => Ok(Preset::Comm),
            "ass" => Ok(Preset::Ass),
            "lie" => Ok(Preset::Lie),
            "poisson" => Ok(Preset::Poisson),
            _ => Err(format!("unknown preset {s:?} (comm, ass, lie, poisson)")),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Preset::Comm => "comm",
            Preset::Ass => "ass",
            Preset::Lie => "lie",
            Preset::Poisson => "poisson",
        };
        f.write_str(s)
    }
}

fn el(s: &str) -> OperadElement {
    OperadElement::parse(s).expect("preset relations parse")
}

/// Defining relations of a preset as elements of the free operad on `dot`
/// and `bracket`.
pub fn relations(p: Preset) -> Vec<(&'static str, OperadElement)> {
    let comm = || ("commutativity", el("dot(leaf1, leaf2) - dot(leaf2, leaf1)"));
    let assoc = || {
        (
            "associativity",
            el("dot(dot(leaf1, leaf2), leaf3) - dot(leaf1, dot(leaf2, leaf3))"),
        )
    };
    let skew = || (
        "skew symmetry",
        el("bracket(leaf1, leaf2) + bracket(leaf2, leaf1)"),
    );
    let jacobi = || {
        (
            "jacobi",
            el("bracket(bracket(leaf1, leaf2), leaf3) + bracket(bracket(leaf2, leaf3), leaf1) \
                + bracket(bracket(leaf3, leaf1), leaf2)"),
        )
    };
    let leibniz = || {
        (
            "leibniz",
            el("bracket(leaf1, dot(leaf2, leaf3)) - dot(bracket(leaf1, leaf2), leaf3) \
                - dot(leaf2, bracket(leaf1, leaf3))"),
        )
    };
    match p {
        Preset::Comm => vec![comm(), assoc()],
        Preset::Ass => vec![assoc()],
        Preset::Lie => vec![skew(), jacobi()],
        Preset::Poisson => vec![comm(), assoc(), skew(), jacobi(), leibniz()],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub inputs: Vec<String>,
    #[serde(with = "crate::exactq::serde_rational_vec")]
    pub value: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub preset: Preset,
    pub clauses: Vec<Clause>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

fn witness_of(a: &EndomorphismAssignment, m: &MultilinearMap) -> Option<Witness> {
    m.first_nonzero_input().map(|(inputs, value)| Witness {
        inputs: inputs.iter().map(|&i| a.space().name(i).to_string()).collect(),
        value,
    })
}

fn zero_clause(name: &str, a: &EndomorphismAssignment, m: &MultilinearMap) -> Clause {
    Clause {
        name: name.to_string(),
        passed: m.is_zero(),
        witness: witness_of(a, m),
        note: None,
    }
}

/// Solves `dot(u, e_j) = e_j = dot(e_j, u)` for every basis vector.
pub(crate) fn solve_unit(dot: &MultilinearMap) -> Option<Vec<Rational>> {
    let d = dot.target().dim();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..d {
        for r in 0..d {
            let target = if j == r { one() } else { zero() };
            rows.push((0..d).map(|k| dot.coefficient(&[k, j], r)).collect());
            rhs.push(target.clone());
            rows.push((0..d).map(|k| dot.coefficient(&[j, k], r)).collect());
            rhs.push(target);
        }
    }
    let m = Matrix::from_rows(rows).ok()?;
    if d == 0 {
        return Some(Vec::new());
    }
    m.solve(&rhs)
}

fn unit_clause(a: &EndomorphismAssignment, dot: &MultilinearMap) -> Result<Clause, EvalError> {
    let (unit, note) = match a.unit() {
        Some(u) => (u.to_vec(), None),
        None => match solve_unit(dot) {
            Some(u) => (u, Some("unit solved from the product".to_string())),
            None => {
                return Ok(Clause {
                    name: "unit".into(),
                    passed: false,
                    witness: None,
                    note: Some("no two-sided unit exists".into()),
                })
            }
        },
    };
    let c = match MultilinearMap::constant(a.space().clone(), 0, &unit) {
        Ok(c) => c,
        Err(_) => {
            return Ok(Clause {
                name: "unit".into(),
                passed: false,
                witness: None,
                note: Some("unit is not homogeneous of degree 0".into()),
            })
        }
    };
    let id = MultilinearMap::identity(a.space().clone());
    let left = dot.compose(1, &c)?.sub(&id)?;
    let right = dot.compose(2, &c)?.sub(&id)?;
    let diff = if left.is_zero() { right } else { left };
    let mut clause = zero_clause("unit", a, &diff);
    clause.note = note;
    Ok(clause)
}

/// Evaluates every defining relation of `preset` and reports which vanish.
///
/// Lie uses the `bracket` map, falling back to `dot` when only a product is
/// assigned. Comm and Ass also check the unit; if no unit vector is
/// supplied one is solved for. Poisson checks a unit only when one is given.
pub fn check_algebra(preset: Preset, a: &EndomorphismAssignment) -> Result<AlgebraReport, EvalError> {
    let mut a = a.clone();
    if preset == Preset::Lie && !a.has("bracket") {
        let dot = a.get("dot").cloned().ok_or_else(|| EvalError::Unassigned("bracket".into()))?;
        a = a.with("bracket", dot)?;
    }
    let mut clauses = Vec::new();
    for (name, rel) in relations(preset) {
        let m = a.eval(&rel)?;
        clauses.push(zero_clause(name, &a, &m));
    }
    let wants_unit = match preset {
        Preset::Comm | Preset::Ass => true,
        Preset::Poisson => a.unit().is_some(),
        Preset::Lie => false,
    };
    if wants_unit {
        let dot = a.get("dot").ok_or_else(|| EvalError::Unassigned("dot".into()))?;
        clauses.push(unit_clause(&a, dot)?);
    }
    Ok(AlgebraReport { preset, clauses })
}
