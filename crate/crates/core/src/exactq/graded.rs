use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::rational::{format_rational, one, sign, zero, Rational};
use super::ExactError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisElement {
    pub name: String,
    pub degree: i64,
}

/// Finite-dimensional ℤ-graded vector space over ℚ with a chosen ordered basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<BasisElement>", into = "Vec<BasisElement>")]
pub struct GradedVectorSpace {
    basis: Vec<BasisElement>,
}

impl TryFrom<Vec<BasisElement>> for GradedVectorSpace {
    type Error = ExactError;

    fn try_from(v: Vec<BasisElement>) -> Result<Self, ExactError> {
        GradedVectorSpace::new(v)
    }
}

impl From<GradedVectorSpace> for Vec<BasisElement> {
    fn from(v: GradedVectorSpace) -> Self {
        v.basis
    }
}

impl GradedVectorSpace {
    pub fn new(basis: Vec<BasisElement>) -> Result<Self, ExactError> {
        let mut seen = std::collections::HashSet::new();
        for b in &basis {
            if !seen.insert((b.degree, b.name.as_str())) {
                return Err(ExactError::DuplicateBasis(b.name.clone()));
            }
        }
        Ok(GradedVectorSpace { basis })
    }

    /// Basis from `(name, degree)` pairs; panics on duplicates.
    pub fn from_pairs(pairs: &[(&str, i64)]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|&(n, d)| BasisElement {
                    name: n.to_string(),
                    degree: d,
                })
                .collect(),
        )
        .expect("duplicate basis label")
    }

    /// `dim` basis vectors `e0, e1, …`, all in degree 0.
    pub fn ungraded(dim: usize) -> Self {
        GradedVectorSpace {
            basis: (0..dim)
                .map(|i| BasisElement {
                    name: format!("e{i}"),
                    degree: 0,
                })
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.basis[i].degree
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Degree → (dimension, basis labels).
    pub fn components(&self) -> BTreeMap<i64, (usize, Vec<String>)> {
        let mut out: BTreeMap<i64, (usize, Vec<String>)> = BTreeMap::new();
        for b in &self.basis {
            let e = out.entry(b.degree).or_default();
            e.0 += 1;
            e.1.push(b.name.clone());
        }
        out
    }

    pub fn is_concentrated_in_degree_zero(&self) -> bool {
        self.basis.iter().all(|b| b.degree == 0)
    }

    /// Linear dual with the dual basis; degrees are negated.
    pub fn dual(&self) -> Self {
        GradedVectorSpace {
            basis: self
                .basis
                .iter()
                .map(|b| BasisElement {
                    name: format!("{}*", b.name),
                    degree: -b.degree,
                })
                .collect(),
        }
    }

    /// Tensor product; index `i * other.dim() + j` holds `e_i ⊗ f_j`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.basis {
            for b in &other.basis {
                basis.push(BasisElement {
                    name: format!("{}⊗{}", a.name, b.name),
                    degree: a.degree + b.degree,
                });
            }
        }
        GradedVectorSpace { basis }
    }
}

/// Homogeneous multilinear map `V_1 ⊗ … ⊗ V_n → W` of a fixed degree, stored
/// sparsely by (input multi-index, output index). Keys iterate
/// lexicographically, which fixes the serialized order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearMap {
    sources: Vec<Arc<GradedVectorSpace>>,
    target: Arc<GradedVectorSpace>,
    degree: i64,
    coeffs: BTreeMap<(Vec<usize>, usize), Rational>,
}

fn same_space(a: &Arc<GradedVectorSpace>, b: &Arc<GradedVectorSpace>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl MultilinearMap {
    pub fn zero(
        sources: Vec<Arc<GradedVectorSpace>>,
        target: Arc<GradedVectorSpace>,
        degree: i64,
    ) -> Self {
        MultilinearMap {
            sources,
            target,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a map from explicit entries, rejecting out-of-range indices and
    /// entries that break the declared degree. Repeated keys are summed.
    pub fn new(
        sources: Vec<Arc<GradedVectorSpace>>,
        target: Arc<GradedVectorSpace>,
        degree: i64,
        entries: impl IntoIterator<Item = (Vec<usize>, usize, Rational)>,
    ) -> Result<Self, ExactError> {
        let mut m = Self::zero(sources, target, degree);
        for (inputs, out, c) in entries {
            m.check_entry(&inputs, out)?;
            if !c.is_zero() && m.entry_degree(&inputs, out) != degree {
                return Err(ExactError::DegreeMismatch {
                    expected: degree,
                    found: m.entry_degree(&inputs, out),
                });
            }
            m.accumulate(inputs, out, c);
        }
        Ok(m)
    }

    /// Identity map on `v`.
    pub fn identity(v: Arc<GradedVectorSpace>) -> Self {
        let coeffs = (0..v.dim()).map(|i| ((vec![i], i), one())).collect();
        MultilinearMap {
            sources: vec![v.clone()],
            target: v,
            degree: 0,
            coeffs,
        }
    }

    /// Arity-0 map picking out a vector of `v` (all of whose nonzero entries must
    /// sit in degree `degree`).
    pub fn constant(
        v: Arc<GradedVectorSpace>,
        degree: i64,
        vector: &[Rational],
    ) -> Result<Self, ExactError> {
        let entries = vector
            .iter()
            .enumerate()
            .map(|(i, c)| (vec![], i, c.clone()))
            .collect::<Vec<_>>();
        Self::new(vec![], v, degree, entries)
    }

    /// Linear map from a matrix (rows index the target basis).
    pub fn from_linear(
        source: Arc<GradedVectorSpace>,
        target: Arc<GradedVectorSpace>,
        degree: i64,
        m: &Matrix,
    ) -> Result<Self, ExactError> {
        Self::from_matrix(vec![source], target, degree, m)
    }

    /// Inverse of [`MultilinearMap::to_matrix`].
    pub fn from_matrix(
        sources: Vec<Arc<GradedVectorSpace>>,
        target: Arc<GradedVectorSpace>,
        degree: i64,
        m: &Matrix,
    ) -> Result<Self, ExactError> {
        let cols: usize = sources.iter().map(|s| s.dim()).product();
        if m.rows() != target.dim() || m.cols() != cols {
            return Err(ExactError::Shape {
                left: (target.dim(), cols),
                right: (m.rows(), m.cols()),
            });
        }
        let dims: Vec<usize> = sources.iter().map(|s| s.dim()).collect();
        let mut entries = Vec::new();
        for c in 0..cols {
            let inputs = unflatten(c, &dims);
            for r in 0..m.rows() {
                let v = m.get(r, c);
                if !v.is_zero() {
                    entries.push((inputs.clone(), r, v.clone()));
                }
            }
        }
        Self::new(sources, target, degree, entries)
    }

    pub fn arity(&self) -> usize {
        self.sources.len()
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn sources(&self) -> &[Arc<GradedVectorSpace>] {
        &self.sources
    }

    pub fn target(&self) -> &Arc<GradedVectorSpace> {
        &self.target
    }

    /// Nonzero entries in lexicographic order of (inputs, output).
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], usize, &Rational)> {
        self.coeffs.iter().map(|((i, o), c)| (i.as_slice(), *o, c))
    }

    pub fn coefficient(&self, inputs: &[usize], out: usize) -> Rational {
        self.coeffs
            .get(&(inputs.to_vec(), out))
            .cloned()
            .unwrap_or_else(zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_entry(&self, inputs: &[usize], out: usize) -> Result<(), ExactError> {
        if inputs.len() != self.arity() {
            return Err(ExactError::ArityMismatch {
                expected: self.arity(),
                found: inputs.len(),
            });
        }
        for (k, (&i, s)) in inputs.iter().zip(&self.sources).enumerate() {
            if i >= s.dim() {
                return Err(ExactError::InvalidIndex { slot: k + 1, index: i });
            }
        }
        if out >= self.target.dim() {
            return Err(ExactError::InvalidIndex { slot: 0, index: out });
        }
        Ok(())
    }

    fn entry_degree(&self, inputs: &[usize], out: usize) -> i64 {
        let din: i64 = inputs
            .iter()
            .zip(&self.sources)
            .map(|(&i, s)| s.degree(i))
            .sum();
        self.target.degree(out) - din
    }

    fn input_degree(&self, slot: usize, index: usize) -> i64 {
        self.sources[slot].degree(index)
    }

    fn accumulate(&mut self, inputs: Vec<usize>, out: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry((inputs, out)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Value on a tuple of basis vectors, as a coordinate vector in the target.
    pub fn eval_basis(&self, inputs: &[usize]) -> Vec<Rational> {
        let mut out = vec![zero(); self.target.dim()];
        let key = inputs.to_vec();
        for ((_, o), c) in self.coeffs.range((key.clone(), 0)..=(key, usize::MAX)) {
            out[*o] = c.clone();
        }
        out
    }

    /// Value on arbitrary coordinate vectors (plain multilinear extension).
    pub fn apply(&self, args: &[Vec<Rational>]) -> Vec<Rational> {
        assert_eq!(args.len(), self.arity(), "wrong number of arguments");
        let mut out = vec![zero(); self.target.dim()];
        for ((inputs, o), c) in &self.coeffs {
            let mut w = c.clone();
            for (a, &i) in args.iter().zip(inputs) {
                if a[i].is_zero() {
                    w = zero();
                    break;
                }
                w *= &a[i];
            }
            if !w.is_zero() {
                out[*o] += w;
            }
        }
        out
    }

    /// Operadic composition `self ∘_slot inner` (slot is 1-based).
    ///
    /// `(f ∘_s g)(a_1,…,a_{s−1}, b_1,…,b_m, a_{s+1},…)` equals
    /// `(−1)^{|g|(|a_1|+…+|a_{s−1}|)} f(a_1,…, g(b_1,…,b_m), …)`.
    pub fn compose(&self, slot: usize, inner: &MultilinearMap) -> Result<Self, ExactError> {
        if slot == 0 || slot > self.arity() {
            return Err(ExactError::SlotOutOfRange {
                slot,
                arity: self.arity(),
            });
        }
        let s = slot - 1;
        if !same_space(&self.sources[s], &inner.target) {
            return Err(ExactError::SpaceMismatch(format!(
                "inner target does not match source {slot}"
            )));
        }
        let mut sources = self.sources[..s].to_vec();
        sources.extend(inner.sources.iter().cloned());
        sources.extend(self.sources[s + 1..].iter().cloned());
        let mut out = Self::zero(sources, self.target.clone(), self.degree + inner.degree);

        let mut by_slot: BTreeMap<usize, Vec<(&Vec<usize>, usize, &Rational)>> = BTreeMap::new();
        for ((inputs, o), c) in &self.coeffs {
            by_slot.entry(inputs[s]).or_default().push((inputs, *o, c));
        }
        for ((jin, k), c1) in &inner.coeffs {
            let Some(outer_terms) = by_slot.get(k) else {
                continue;
            };
            for (iin, o, c2) in outer_terms {
                let before: i64 = (0..s).map(|t| self.input_degree(t, iin[t])).sum();
                let mut inputs = iin[..s].to_vec();
                inputs.extend(jin.iter().copied());
                inputs.extend(iin[s + 1..].iter().copied());
                let c = sign(inner.degree * before) * c1 * *c2;
                out.accumulate(inputs, *o, c);
            }
        }
        Ok(out)
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), ExactError> {
        let ok = self.arity() == other.arity()
            && self.degree == other.degree
            && same_space(&self.target, &other.target)
            && self
                .sources
                .iter()
                .zip(&other.sources)
                .all(|(a, b)| same_space(a, b));
        if ok {
            Ok(())
        } else {
            Err(ExactError::SpaceMismatch(
                "maps have different signatures".into(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for ((i, o), c) in &other.coeffs {
            out.accumulate(i.clone(), *o, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.add(&other.scale(&-one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.sources.clone(), self.target.clone(), self.degree);
        if !s.is_zero() {
            for ((i, o), c) in &self.coeffs {
                out.coeffs.insert((i.clone(), *o), c * s);
            }
        }
        out
    }

    /// Lexicographically smallest input multi-index on which the map is nonzero,
    /// with the output there.
    pub fn first_nonzero_input(&self) -> Option<(Vec<usize>, Vec<Rational>)> {
        let ((inputs, _), _) = self.coeffs.iter().next()?;
        Some((inputs.clone(), self.eval_basis(inputs)))
    }

    /// `g(x_1,…,x_n) = ±f(x_{w_1},…,x_{w_n})` for a permutation word `w` of
    /// `1..=n`, with the Koszul sign of rearranging `(x_1,…,x_n)` into
    /// `(x_{w_1},…,x_{w_n})`.
    pub fn reorder_inputs(&self, w: &[usize]) -> Result<Self, ExactError> {
        let n = self.arity();
        check_permutation(w, n)?;
        // source m of the result is the source of f at position p with w_p = m
        let mut sources = vec![self.target.clone(); n];
        for (p, &m) in w.iter().enumerate() {
            sources[m - 1] = self.sources[p].clone();
        }
        let mut out = Self::zero(sources, self.target.clone(), self.degree);
        for ((iin, o), c) in &self.coeffs {
            let mut jin = vec![0; n];
            for (p, &m) in w.iter().enumerate() {
                jin[m - 1] = iin[p];
            }
            let mut e = 0;
            for p in 0..n {
                for q in p + 1..n {
                    if w[p] > w[q] {
                        e += self.input_degree(p, iin[p]) * self.input_degree(q, iin[q]);
                    }
                }
            }
            out.accumulate(jin, *o, sign(e) * c);
        }
        Ok(out)
    }

    /// Right action of a permutation `σ` (one-line notation, `σ[i-1] = σ(i)`):
    /// `(f·σ)(x_1,…,x_n) = ±f(x_{σ⁻¹(1)},…,x_{σ⁻¹(n)})`, so that
    /// `(f·σ)·τ = f·(στ)`.
    pub fn permute_inputs(&self, sigma: &[usize]) -> Result<Self, ExactError> {
        check_permutation(sigma, self.arity())?;
        let mut inv = vec![0; sigma.len()];
        for (i, &s) in sigma.iter().enumerate() {
            inv[s - 1] = i + 1;
        }
        self.reorder_inputs(&inv)
    }

    /// Matrix with `target.dim()` rows and one column per input multi-index,
    /// the first input being the most significant digit.
    pub fn to_matrix(&self) -> Matrix {
        let dims: Vec<usize> = self.sources.iter().map(|s| s.dim()).collect();
        let cols: usize = dims.iter().product();
        let mut m = Matrix::zeros(self.target.dim(), cols);
        for ((inputs, o), c) in &self.coeffs {
            m.set(*o, flatten(inputs, &dims), c.clone());
        }
        m
    }

    /// Entries as `(inputs, output, "p/q")` triples in canonical order.
    pub fn to_entry_strings(&self) -> Vec<(Vec<usize>, usize, String)> {
        self.coeffs
            .iter()
            .map(|((i, o), c)| (i.clone(), *o, format_rational(c)))
            .collect()
    }
}

fn check_permutation(w: &[usize], n: usize) -> Result<(), ExactError> {
    let mut seen = vec![false; n];
    if w.len() != n {
        return Err(ExactError::NotAPermutation(w.to_vec()));
    }
    for &x in w {
        if x == 0 || x > n || seen[x - 1] {
            return Err(ExactError::NotAPermutation(w.to_vec()));
        }
        seen[x - 1] = true;
    }
    Ok(())
}

/// Mixed-radix flattening, first digit most significant.
pub fn flatten(index: &[usize], dims: &[usize]) -> usize {
    index
        .iter()
        .zip(dims)
        .fold(0, |acc, (&i, &d)| acc * d + i)
}

pub fn unflatten(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = flat % dims[k];
        flat /= dims[k];
    }
    out
}

/// All multi-indices over `dims` in lexicographic order.
pub fn multi_indices(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    (0..total).map(move |f| unflatten(f, dims))
}
