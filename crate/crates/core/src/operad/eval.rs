use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exactq::{ExactError, GradedVectorSpace, MultilinearMap, Rational};
use crate::io::StructureConstants;

use super::{OperadElement, Tree};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("generator {0:?} has no assigned map")]
    Unassigned(String),
    #[error("generator {op:?} is used with {found} inputs but assigned a {expected}-ary map")]
    ArityMismatch {
        op: String,
        expected: usize,
        found: usize,
    },
    #[error("map for {0:?} is not an operation on the assignment's space")]
    WrongSpace(String),
    #[error("no unit vector")]
    MissingUnit,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A choice of multilinear map on `V` for each generator name, i.e. a map of
/// collections from the free operad to `End_V`.
#[derive(Clone, Debug)]
pub struct EndomorphismAssignment {
    space: Arc<GradedVectorSpace>,
    maps: BTreeMap<String, MultilinearMap>,
    unit: Option<Vec<Rational>>,
}

impl EndomorphismAssignment {
    pub fn new(space: Arc<GradedVectorSpace>) -> Self {
        EndomorphismAssignment {
            space,
            maps: BTreeMap::new(),
            unit: None,
        }
    }

    /// `product` becomes `dot` and `bracket` becomes `bracket`.
    pub fn from_constants(sc: &StructureConstants) -> Result<Self, EvalError> {
        let mut a = Self::new(sc.space.clone());
        if let Some(p) = &sc.product {
            a = a.with("dot", p.clone())?;
        }
        if let Some(b) = &sc.bracket {
            a = a.with("bracket", b.clone())?;
        }
        a.unit = sc.unit.clone();
        Ok(a)
    }

    pub fn with(mut self, name: &str, map: MultilinearMap) -> Result<Self, EvalError> {
        let on_space = map.target().as_ref() == self.space.as_ref()
            && map.sources().iter().all(|s| s.as_ref() == self.space.as_ref());
        if !on_space {
            return Err(EvalError::WrongSpace(name.to_string()));
        }
        self.maps.insert(name.to_string(), map);
        Ok(self)
    }

    pub fn with_unit(mut self, unit: Vec<Rational>) -> Self {
        self.unit = Some(unit);
        self
    }

    pub fn space(&self) -> &Arc<GradedVectorSpace> {
        &self.space
    }

    pub fn get(&self, name: &str) -> Option<&MultilinearMap> {
        self.maps.get(name)
    }

    pub fn unit(&self) -> Option<&[Rational]> {
        self.unit.as_deref()
    }

    pub fn has(&self, name: &str) -> bool {
        self.maps.contains_key(name)
    }

    /// Evaluation of the tree with inputs fed in planar order.
    fn planar_eval(&self, t: &Tree) -> Result<MultilinearMap, EvalError> {
        match t {
            Tree::Leaf(_) => Ok(MultilinearMap::identity(self.space.clone())),
            Tree::Node { op, children } => {
                let f = self
                    .maps
                    .get(op)
                    .ok_or_else(|| EvalError::Unassigned(op.clone()))?;
                if f.arity() != children.len() {
                    return Err(EvalError::ArityMismatch {
                        op: op.clone(),
                        expected: f.arity(),
                        found: children.len(),
                    });
                }
                let mut out = f.clone();
                for (k, c) in children.iter().enumerate().rev() {
                    out = out.compose(k + 1, &self.planar_eval(c)?)?;
                }
                Ok(out)
            }
        }
    }

    /// Image of a tree: `(x_1,…,x_n) ↦ ±planar(x_{w_1},…,x_{w_n})` for the
    /// tree's leaf word `w`.
    pub fn eval_tree(&self, t: &Tree) -> Result<MultilinearMap, EvalError> {
        Ok(self.planar_eval(t)?.reorder_inputs(&t.leaves())?)
    }

    pub fn eval(&self, e: &OperadElement) -> Result<MultilinearMap, EvalError> {
        let mut out = MultilinearMap::zero(
            vec![self.space.clone(); e.arity()],
            self.space.clone(),
            0,
        );
        let mut first = true;
        for (t, c) in e.terms() {
            let m = self.eval_tree(t)?.scale(c);
            if first {
                out = m;
                first = false;
            } else {
                out = out.add(&m)?;
            }
        }
        Ok(out)
    }
}
