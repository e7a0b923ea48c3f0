//! Hochschild chains and cochains of finite-dimensional DG algebras.
//!
//! Degrees are cohomological: the internal differential raises degree by
//! one. A chain `c ⊗ a_1 ⊗ … ⊗ a_n` sits in homological total degree
//! `n − |c| − Σ|a_i|` and a cochain `A^{⊗n} → M` of internal degree `p` in
//! cohomological total degree `n + p`, so the two totalizations are dual.
//! Complexes are materialized up to tensor length `N` and results carry a
//! flag saying whether they change when `N` grows by one.

mod chains;
mod cochains;

use std::sync::Arc;

use crate::exactq::{sign, ExactError, GradedVectorSpace, MultilinearMap, Rational};
use crate::io::StructureConstants;

pub use chains::{hochschild_homology, Chain, ChainComplex};
pub use cochains::{
    bracket, bracket_table, coboundary, cup, cup_table, hochschild_cohomology, hochschild_coboundary, pre_lie, Cochain,
    CochainComplex, ProductTable,
};

/// Default tensor length to which complexes are built.
pub const DEFAULT_TRUNCATION: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HochschildError {
    #[error("{axiom} fails on {witness:?}")]
    Axiom { axiom: String, witness: Vec<String> },
    #[error("missing {0}")]
    Missing(&'static str),
    #[error("truncation {truncation} is too small for degree {degree}; need at least {needed}")]
    TruncationTooSmall {
        truncation: usize,
        degree: i64,
        needed: usize,
    },
    #[error("empty degree window")]
    EmptyWindow,
    #[error("bimodule is over a different algebra")]
    ForeignBimodule,
    #[error("cup product and bracket need a cochain with values in the algebra")]
    NotAlgebraValued,
    #[error("the bracket is only implemented for algebras concentrated in degree 0")]
    Graded,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn axiom(name: &str, m: &MultilinearMap) -> Result<(), HochschildError> {
    match m.first_nonzero_input() {
        None => Ok(()),
        Some((inputs, _)) => Err(HochschildError::Axiom {
            axiom: name.to_string(),
            witness: inputs
                .iter()
                .zip(m.sources())
                .map(|(&i, s)| s.name(i).to_string())
                .collect(),
        }),
    }
}

/// `D f = d ∘ f − (−1)^{|f|} Σ_i f ∘_i d`, the commutator of `f` with the
/// differentials; it vanishes exactly when `f` is a chain map.
pub(crate) fn commutator_with_d(
    f: &MultilinearMap,
    d_target: &MultilinearMap,
    d_sources: &[&MultilinearMap],
) -> Result<MultilinearMap, ExactError> {
    let mut out = d_target.compose(1, f)?;
    for (i, d) in d_sources.iter().enumerate() {
        let term = f.compose(i + 1, d)?.scale(&-sign(f.degree()));
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Unital associative algebra with a degree `+1` square-zero derivation.
#[derive(Clone, Debug)]
pub struct DGAlgebra {
    space: Arc<GradedVectorSpace>,
    product: MultilinearMap,
    unit: Vec<Rational>,
    differential: MultilinearMap,
}

impl DGAlgebra {
    /// Validates associativity, the unit, `d² = 0` and the Leibniz rule on
    /// basis elements. A missing differential is zero.
    pub fn new(
        space: Arc<GradedVectorSpace>,
        product: MultilinearMap,
        unit: Vec<Rational>,
        differential: Option<MultilinearMap>,
    ) -> Result<Self, HochschildError> {
        let differential =
            differential.unwrap_or_else(|| MultilinearMap::zero(vec![space.clone()], space.clone(), 1));
        let assoc = product.compose(1, &product)?.sub(&product.compose(2, &product)?)?;
        axiom("associativity", &assoc)?;
        let u = MultilinearMap::constant(space.clone(), 0, &unit)?;
        let id = MultilinearMap::identity(space.clone());
        axiom("left unit", &product.compose(1, &u)?.sub(&id)?)?;
        axiom("right unit", &product.compose(2, &u)?.sub(&id)?)?;
        axiom("d² = 0", &differential.compose(1, &differential)?)?;
        axiom(
            "Leibniz rule",
            &commutator_with_d(&product, &differential, &[&differential, &differential])?,
        )?;
        Ok(DGAlgebra {
            space,
            product,
            unit,
            differential,
        })
    }

    pub fn from_constants(sc: &StructureConstants) -> Result<Self, HochschildError> {
        let product = sc.product.clone().ok_or(HochschildError::Missing("product"))?;
        let unit = match &sc.unit {
            Some(u) => u.clone(),
            None => crate::operad::solve_unit(&product).ok_or(HochschildError::Axiom {
                axiom: "unit".into(),
                witness: Vec::new(),
            })?,
        };
        Self::new(sc.space.clone(), product, unit, sc.differential.clone())
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

    pub fn differential(&self) -> &MultilinearMap {
        &self.differential
    }

    /// The unit as a 0-cochain with values in `A`.
    pub fn unit_cochain(&self) -> MultilinearMap {
        MultilinearMap::constant(self.space.clone(), 0, &self.unit).expect("unit has degree 0")
    }
}

/// DG bimodule over a [`DGAlgebra`].
#[derive(Clone, Debug)]
pub struct DGBimodule {
    algebra: DGAlgebra,
    space: Arc<GradedVectorSpace>,
    left: MultilinearMap,
    right: MultilinearMap,
    differential: MultilinearMap,
    is_algebra: bool,
}

impl DGBimodule {
    /// Checks both action laws, the middle associativity, unitality and
    /// compatibility with the differentials.
    pub fn new(
        algebra: DGAlgebra,
        space: Arc<GradedVectorSpace>,
        left: MultilinearMap,
        right: MultilinearMap,
        differential: MultilinearMap,
    ) -> Result<Self, HochschildError> {
        let m = &algebra.product;
        axiom("left action", &left.compose(1, m)?.sub(&left.compose(2, &left)?)?)?;
        axiom("right action", &right.compose(1, &right)?.sub(&right.compose(2, m)?)?)?;
        axiom("bimodule", &right.compose(1, &left)?.sub(&left.compose(2, &right)?)?)?;
        let u = algebra.unit_cochain();
        let id = MultilinearMap::identity(space.clone());
        axiom("left unit", &left.compose(1, &u)?.sub(&id)?)?;
        axiom("right unit", &right.compose(2, &u)?.sub(&id)?)?;
        axiom("d² = 0", &differential.compose(1, &differential)?)?;
        let da = &algebra.differential;
        axiom("left Leibniz", &commutator_with_d(&left, &differential, &[da, &differential])?)?;
        axiom("right Leibniz", &commutator_with_d(&right, &differential, &[&differential, da])?)?;
        Ok(DGBimodule {
            algebra,
            space,
            left,
            right,
            differential,
            is_algebra: false,
        })
    }

    /// `A` acting on itself.
    pub fn regular(a: &DGAlgebra) -> Self {
        DGBimodule {
            algebra: a.clone(),
            space: a.space.clone(),
            left: a.product.clone(),
            right: a.product.clone(),
            differential: a.differential.clone(),
            is_algebra: true,
        }
    }

    /// `A* = Hom(A, k)` with `(a·φ)(x) = (−1)^{|a|(|φ|+|x|)} φ(x a)`,
    /// `(φ·a)(x) = φ(a x)` and `(dφ)(x) = −(−1)^{|φ|} φ(dx)`.
    pub fn dual(a: &DGAlgebra) -> Result<Self, HochschildError> {
        let sp = &a.space;
        let dual = Arc::new(sp.dual());
        let d = sp.dim();
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..d {
            for x in 0..d {
                for (j, c) in a.product.eval_basis(&[x, i]).into_iter().enumerate() {
                    if c != crate::exactq::zero() {
                        let s = sign(sp.degree(i) * (dual.degree(j) + sp.degree(x)));
                        left.push((vec![i, j], x, s * c));
                    }
                }
                for (j, c) in a.product.eval_basis(&[i, x]).into_iter().enumerate() {
                    if c != crate::exactq::zero() {
                        right.push((vec![j, i], x, c));
                    }
                }
            }
        }
        let mut diff = Vec::new();
        for x in 0..d {
            for (j, c) in a.differential.eval_basis(&[x]).into_iter().enumerate() {
                if c != crate::exactq::zero() {
                    diff.push((vec![j], x, -sign(dual.degree(j)) * c));
                }
            }
        }
        let left = MultilinearMap::new(vec![sp.clone(), dual.clone()], dual.clone(), 0, left)?;
        let right = MultilinearMap::new(vec![dual.clone(), sp.clone()], dual.clone(), 0, right)?;
        let diff = MultilinearMap::new(vec![dual.clone()], dual.clone(), 1, diff)?;
        Self::new(a.clone(), dual, left, right, diff)
    }

    pub fn algebra(&self) -> &DGAlgebra {
        &self.algebra
    }

    pub fn space(&self) -> &Arc<GradedVectorSpace> {
        &self.space
    }

    pub fn left(&self) -> &MultilinearMap {
        &self.left
    }

    pub fn right(&self) -> &MultilinearMap {
        &self.right
    }

    pub fn differential(&self) -> &MultilinearMap {
        &self.differential
    }

    /// True for the regular bimodule, where cup product and bracket make
    /// sense.
    pub fn is_algebra(&self) -> bool {
        self.is_algebra
    }
}

/// Dimensions of (co)homology in a window of total degrees.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HomologyReport {
    pub truncation: usize,
    pub dims: std::collections::BTreeMap<i64, usize>,
    /// Whether the same dimensions come out at truncation `N + 1`.
    pub stable: bool,
}

impl HomologyReport {
    pub fn dims_in_order(&self) -> Vec<usize> {
        self.dims.values().copied().collect()
    }
}

/// Checks the window and that lengths up to `end + 1` are materialized.
pub(crate) fn check_window(
    truncation: usize,
    window: &std::ops::RangeInclusive<i64>,
) -> Result<(), HochschildError> {
    if window.is_empty() {
        return Err(HochschildError::EmptyWindow);
    }
    let needed = (*window.end() + 1).max(0) as usize;
    if truncation < needed {
        return Err(HochschildError::TruncationTooSmall {
            truncation,
            degree: *window.end(),
            needed,
        });
    }
    Ok(())
}
