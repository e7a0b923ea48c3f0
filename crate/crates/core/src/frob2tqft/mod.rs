//! Commutative Frobenius algebras as two-dimensional TQFTs.
//!
//! A [`FrobeniusAlgebra`] assigns a matrix to each of the eight generator
//! surfaces; a [`CobordismWord`] is evaluated by composing tensor products of
//! those matrices layer by layer. Closed surfaces give numbers, computed both
//! from the handle element and from an explicit word. [`group`] builds the
//! Dijkgraaf-Witten algebra of a finite group together with a bundle-counting
//! oracle for its closed-surface invariants.
//!
//! The evaluation includes the counit on every surface, so it computes more
//! than the positive-boundary theories that arise from loop spaces.

pub mod group;
mod word;

use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::exactq::{
    dot, one, zero, GradedVectorSpace, Matrix, MultilinearMap, Rational,
};
use crate::io::StructureConstants;

pub use group::{dw_center_algebra, dw_partition_brute, dw_partition_sequential, FiniteGroup, GroupError};
pub use word::{random_word, CobordismWord, Generator, WordError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    /// Basis names of the inputs on which the axiom fails.
    pub witness: Vec<String>,
    /// The nonzero defect, e.g. `ab - ba`.
    #[serde(with = "crate::exactq::serde_rational_vec")]
    pub value: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FrobeniusError {
    #[error("a Frobenius algebra here must be concentrated in degree 0")]
    NotDegreeZero,
    #[error("{what} has length {found}, expected {expected}")]
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("product is not a bilinear map on the space")]
    BadProduct,
    #[error("missing {0}")]
    Missing(&'static str),
    #[error("axioms fail: {}", .0.iter().map(|v| v.axiom.as_str()).collect::<Vec<_>>().join(", "))]
    Axioms(Vec<Violation>),
}

/// Commutative associative unital algebra with a trace whose pairing
/// `g_ij = tr(e_i e_j)` is nonsingular.
#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra {
    space: Arc<GradedVectorSpace>,
    product: MultilinearMap,
    unit: Vec<Rational>,
    trace: Vec<Rational>,
    pairing: Matrix,
    copairing: Matrix,
}

fn names(space: &GradedVectorSpace, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| space.name(i).to_string()).collect()
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Checks every axiom and returns the algebra or all violations found (at
/// most one witness per axiom).
pub fn validate_frobenius(
    space: Arc<GradedVectorSpace>,
    product: MultilinearMap,
    unit: Vec<Rational>,
    trace: Vec<Rational>,
) -> Result<FrobeniusAlgebra, FrobeniusError> {
    if !space.is_concentrated_in_degree_zero() {
        return Err(FrobeniusError::NotDegreeZero);
    }
    let d = space.dim();
    let on_space = product.arity() == 2
        && product.target().as_ref() == space.as_ref()
        && product.sources().iter().all(|s| s.as_ref() == space.as_ref());
    if !on_space {
        return Err(FrobeniusError::BadProduct);
    }
    for (what, v) in [("unit", &unit), ("trace", &trace)] {
        if v.len() != d {
            return Err(FrobeniusError::Dimension {
                what,
                expected: d,
                found: v.len(),
            });
        }
    }
    let mut violations = Vec::new();
    let mul = |a: &[Rational], b: &[Rational]| product.apply(&[a.to_vec(), b.to_vec()]);
    let basis = |i: usize| {
        let mut v = vec![zero(); d];
        v[i] = one();
        v
    };

    'comm: for i in 0..d {
        for j in i + 1..d {
            let diff = sub(&product.eval_basis(&[i, j]), &product.eval_basis(&[j, i]));
            if diff.iter().any(|x| *x != zero()) {
                violations.push(Violation {
                    axiom: "commutativity".into(),
                    witness: names(&space, &[i, j]),
                    value: diff,
                });
                break 'comm;
            }
        }
    }
    'assoc: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let l = mul(&product.eval_basis(&[i, j]), &basis(k));
                let r = mul(&basis(i), &product.eval_basis(&[j, k]));
                let diff = sub(&l, &r);
                if diff.iter().any(|x| *x != zero()) {
                    violations.push(Violation {
                        axiom: "associativity".into(),
                        witness: names(&space, &[i, j, k]),
                        value: diff,
                    });
                    break 'assoc;
                }
            }
        }
    }
    for j in 0..d {
        let e = basis(j);
        let l = sub(&mul(&unit, &e), &e);
        let r = sub(&mul(&e, &unit), &e);
        let diff = if l.iter().any(|x| *x != zero()) { l } else { r };
        if diff.iter().any(|x| *x != zero()) {
            violations.push(Violation {
                axiom: "unit".into(),
                witness: names(&space, &[j]),
                value: diff,
            });
            break;
        }
    }
    let pairing = Matrix::from_fn(d, d, |i, j| dot(&trace, &product.eval_basis(&[i, j])));
    let copairing = pairing.inverse();
    if copairing.is_none() {
        let kernel = pairing.kernel_basis();
        violations.push(Violation {
            axiom: "nondegenerate pairing".into(),
            witness: Vec::new(),
            value: kernel.into_iter().next().unwrap_or_default(),
        });
    }
    if !violations.is_empty() {
        return Err(FrobeniusError::Axioms(violations));
    }
    Ok(FrobeniusAlgebra {
        space,
        product,
        unit,
        trace,
        pairing,
        copairing: copairing.expect("checked above"),
    })
}

/// Comultiplication `V → V⊗V` and counit.
#[derive(Clone, Debug)]
pub struct Coalgebra {
    pub comultiplication: MultilinearMap,
    pub counit: Vec<Rational>,
}

impl FrobeniusAlgebra {
    /// Uses the `product`, `unit` and `trace` of a structure-constant file.
    /// A missing unit is solved for.
    pub fn from_constants(sc: &StructureConstants) -> Result<Self, FrobeniusError> {
        let product = sc.product.clone().ok_or(FrobeniusError::Missing("product"))?;
        let trace = sc.trace.clone().ok_or(FrobeniusError::Missing("trace"))?;
        let unit = match &sc.unit {
            Some(u) => u.clone(),
            None => crate::operad::solve_unit(&product).ok_or_else(|| {
                FrobeniusError::Axioms(vec![Violation {
                    axiom: "unit".into(),
                    witness: Vec::new(),
                    value: Vec::new(),
                }])
            })?,
        };
        validate_frobenius(sc.space.clone(), product, unit, trace)
    }

    pub fn to_constants(&self) -> StructureConstants {
        let mut sc = StructureConstants::new(self.space.clone());
        sc.product = Some(self.product.clone());
        sc.unit = Some(self.unit.clone());
        sc.trace = Some(self.trace.clone());
        sc
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Arc<GradedVectorSpace> {
        &self.space
    }

    pub fn product(&self) -> &MultilinearMap {
        &self.product
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn trace(&self) -> &[Rational] {
        &self.trace
    }

    /// `g_ij = tr(e_i e_j)`.
    pub fn pairing(&self) -> &Matrix {
        &self.pairing
    }

    /// `g^ij`, the inverse of the pairing.
    pub fn copairing(&self) -> &Matrix {
        &self.copairing
    }

    pub fn multiply(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        self.product.apply(&[a.to_vec(), b.to_vec()])
    }

    /// `Δ(a) = Σ g^ij (a e_i) ⊗ e_j`, counit the trace.
    pub fn coalgebra(&self) -> Coalgebra {
        let d = self.dim();
        let target = Arc::new(self.space.tensor(&self.space));
        let mut entries = Vec::new();
        for a in 0..d {
            for i in 0..d {
                for j in 0..d {
                    let g = self.copairing.get(i, j);
                    if g.is_zero() {
                        continue;
                    }
                    for (k, c) in self.product.eval_basis(&[a, i]).into_iter().enumerate() {
                        if c != zero() {
                            entries.push((vec![a], k * d + j, g * c));
                        }
                    }
                }
            }
        }
        let comultiplication = MultilinearMap::new(vec![self.space.clone()], target, 0, entries)
            .expect("degree-zero space");
        Coalgebra {
            comultiplication,
            counit: self.trace.clone(),
        }
    }

    /// Checks `(x⊗1)Δ(a) = Δ(xa) = Δ(a)(1⊗x)` on all basis pairs; returns the
    /// first failing `(x, a)`.
    pub fn check_bimodule(&self) -> Result<(), Violation> {
        let d = self.dim();
        let delta = self.comultiplication_matrix();
        let m = self.product_matrix();
        for x in 0..d {
            let lx = Matrix::from_fn(d, d, |r, c| m.get(r, x * d + c).clone());
            let rx = Matrix::from_fn(d, d, |r, c| m.get(r, c * d + x).clone());
            let id = Matrix::identity(d);
            let left = &lx.kron(&id) * &delta;
            let right = &id.kron(&rx) * &delta;
            let middle = &delta * &lx;
            for a in 0..d {
                for (what, other) in [("left", &left), ("right", &right)] {
                    let diff = sub(&other.column(a), &middle.column(a));
                    if diff.iter().any(|v| *v != zero()) {
                        return Err(Violation {
                            axiom: format!("{what} module map"),
                            witness: names(&self.space, &[x, a]),
                            value: diff,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `d × d²`.
    pub fn product_matrix(&self) -> Matrix {
        self.product.to_matrix()
    }

    /// `d² × d`.
    pub fn comultiplication_matrix(&self) -> Matrix {
        self.coalgebra().comultiplication.to_matrix()
    }

    /// The handle element `m(Δ(1))`.
    pub fn handle_element(&self) -> Vec<Rational> {
        self.product_matrix()
            .mul_vec(&self.comultiplication_matrix().mul_vec(&self.unit))
    }

    /// Matrix of the generator surface, shape `d^out × d^in`.
    pub fn generator_matrix(&self, g: Generator) -> Matrix {
        let d = self.dim();
        match g {
            Generator::Pants => self.product_matrix(),
            Generator::Copants => self.comultiplication_matrix(),
            Generator::CapTrace => Matrix::from_rows(vec![self.trace.clone()]).expect("row"),
            Generator::CapUnit => Matrix::from_columns(d, &[self.unit.clone()]),
            Generator::Pairing => Matrix::from_fn(1, d * d, |_, c| self.pairing.get(c / d, c % d).clone()),
            Generator::Copairing => {
                Matrix::from_fn(d * d, 1, |r, _| self.copairing.get(r / d, r % d).clone())
            }
            Generator::Cylinder => Matrix::identity(d),
            Generator::Swap => Matrix::from_fn(d * d, d * d, |r, c| {
                if r == (c % d) * d + c / d {
                    one()
                } else {
                    zero()
                }
            }),
        }
    }

    pub fn eval(&self, w: &CobordismWord) -> Matrix {
        w.eval(self)
    }

    /// Handle route: `tr(h^g)` with `h` the handle element.
    pub fn closed_surface_invariant(&self, genus: usize) -> Rational {
        let h = self.handle_element();
        let mut x = self.unit.clone();
        for _ in 0..genus {
            x = self.multiply(&h, &x);
        }
        dot(&self.trace, &x)
    }

    /// Word route: `cap_trace ∘ (pants ∘ copants)^g ∘ cap_unit`.
    pub fn closed_surface_invariant_by_word(&self, genus: usize) -> Rational {
        let m = self.eval(&CobordismWord::closed_surface(genus));
        m.get(0, 0).clone()
    }

    /// Both routes, which must agree.
    pub fn surface_invariant_checked(&self, genus: usize) -> Result<Rational, (Rational, Rational)> {
        let a = self.closed_surface_invariant(genus);
        let b = self.closed_surface_invariant_by_word(genus);
        if a == b {
            Ok(a)
        } else {
            Err((a, b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::q;

    pub(crate) fn truncated(trace: [i64; 2]) -> Result<FrobeniusAlgebra, FrobeniusError> {
        let space = Arc::new(GradedVectorSpace::from_pairs(&[("1", 0), ("x", 0)]));
        let product = MultilinearMap::new(
            vec![space.clone(); 2],
            space.clone(),
            0,
            vec![
                (vec![0, 0], 0, q(1)),
                (vec![0, 1], 1, q(1)),
                (vec![1, 0], 1, q(1)),
            ],
        )
        .unwrap();
        validate_frobenius(space, product, vec![q(1), q(0)], trace.iter().map(|&t| q(t)).collect())
    }

    #[test]
    fn dual_numbers() {
        let f = truncated([0, 1]).unwrap();
        assert_eq!(f.pairing().determinant(), Some(q(-1)));
        // Δ(1) = 1⊗x + x⊗1
        assert_eq!(
            f.comultiplication_matrix().column(0),
            vec![q(0), q(1), q(1), q(0)]
        );
        assert!(f.check_bimodule().is_ok());
        match truncated([1, 0]) {
            Err(FrobeniusError::Axioms(v)) => {
                assert_eq!(v.len(), 1);
                assert_eq!(v[0].axiom, "nondegenerate pairing");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn ground_field() {
        let space = Arc::new(GradedVectorSpace::ungraded(1));
        let m = MultilinearMap::new(vec![space.clone(); 2], space.clone(), 0, vec![(vec![0, 0], 0, q(1))]).unwrap();
        let f = validate_frobenius(space, m, vec![q(1)], vec![q(1)]).unwrap();
        assert_eq!(f.comultiplication_matrix(), Matrix::identity(1));
        for g in 0..4 {
            assert_eq!(f.closed_surface_invariant(g), q(1));
            assert_eq!(f.closed_surface_invariant_by_word(g), q(1));
        }
    }

    #[test]
    fn noncommutative_product_is_reported() {
        let space = Arc::new(GradedVectorSpace::ungraded(2));
        // e0 unit, e1 e1 = e0, plus a skew term e0 e1 = e1, e1 e0 = -e1
        let m = MultilinearMap::new(
            vec![space.clone(); 2],
            space.clone(),
            0,
            vec![
                (vec![0, 0], 0, q(1)),
                (vec![0, 1], 1, q(1)),
                (vec![1, 0], 1, q(-1)),
            ],
        )
        .unwrap();
        let Err(FrobeniusError::Axioms(v)) = validate_frobenius(space, m, vec![q(1), q(0)], vec![q(1), q(0)]) else {
            panic!()
        };
        assert_eq!(v[0].axiom, "commutativity");
        assert_eq!(v[0].witness, ["e0", "e1"]);
        assert_eq!(v[0].value, vec![q(0), q(2)]);
        assert!(v.iter().any(|x| x.axiom == "unit"));
    }
}
