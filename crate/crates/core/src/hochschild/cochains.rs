use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;
use std::ops::RangeInclusive;

use crate::exactq::{homology_dimension, one, sign, ExactError, Matrix, MultilinearMap, Rational};

use super::{check_window, commutator_with_d, DGAlgebra, DGBimodule, HochschildError, HomologyReport};

/// `(δf)(a_1, …, a_{n+1}) = ±a_1 f(a_2, …) + Σ (−1)^i f(…, a_i a_{i+1}, …)
/// + (−1)^{n+1} f(a_1, …, a_n) a_{n+1}`, the Koszul sign of the first term
/// coming from composition.
pub fn hochschild_coboundary(m: &DGBimodule, f: &MultilinearMap) -> Result<MultilinearMap, ExactError> {
    let n = f.arity();
    let prod = m.algebra().product();
    let mut out = m.left().compose(2, f)?;
    for i in 1..=n {
        out = out.add(&f.compose(i, prod)?.scale(&sign(i as i64)))?;
    }
    out.add(&m.right().compose(1, f)?.scale(&sign(n as i64 + 1)))
}

/// A cochain of one total degree: homogeneous multilinear maps of several
/// arities, keyed by arity. Zero components are dropped, so equality is
/// equality of cochains.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Cochain {
    parts: BTreeMap<usize, MultilinearMap>,
}

impl Cochain {
    pub fn zero() -> Self {
        Cochain::default()
    }

    pub fn parts(&self) -> impl Iterator<Item = &MultilinearMap> {
        self.parts.values()
    }

    pub fn part(&self, arity: usize) -> Option<&MultilinearMap> {
        self.parts.get(&arity)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain, ExactError> {
        let mut out = self.clone();
        for f in other.parts() {
            out.push(f.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain, ExactError> {
        self.add(&other.scale(&-one()))
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        let mut out = Cochain::zero();
        for f in self.parts() {
            out.push(f.scale(c)).expect("distinct arities");
        }
        out
    }

    fn push(&mut self, f: MultilinearMap) -> Result<(), ExactError> {
        let n = f.arity();
        let sum = match self.parts.remove(&n) {
            Some(g) => g.add(&f)?,
            None => f,
        };
        if !sum.is_zero() {
            self.parts.insert(n, sum);
        }
        Ok(())
    }
}

impl From<MultilinearMap> for Cochain {
    fn from(f: MultilinearMap) -> Self {
        let mut c = Cochain::zero();
        c.push(f).expect("single part");
        c
    }
}

impl From<&MultilinearMap> for Cochain {
    fn from(f: &MultilinearMap) -> Self {
        f.clone().into()
    }
}

impl From<&Cochain> for Cochain {
    fn from(f: &Cochain) -> Self {
        f.clone()
    }
}

/// Total coboundary `δ + (−1)^n D` on each component of arity `n`, with `D`
/// the commutator with the internal differentials.
pub fn coboundary(m: &DGBimodule, f: impl Into<Cochain>) -> Result<Cochain, ExactError> {
    let mut out = Cochain::zero();
    for f in f.into().parts() {
        let n = f.arity();
        let d_a = m.algebra().differential();
        let sources = vec![d_a; n];
        let internal = commutator_with_d(f, m.differential(), &sources)?;
        out.push(hochschild_coboundary(m, f)?)?;
        out.push(internal.scale(&sign(n as i64)))?;
    }
    Ok(out)
}

fn algebra_valued(a: &DGAlgebra, f: &MultilinearMap) -> Result<(), HochschildError> {
    let ok = f.target().as_ref() == a.space().as_ref()
        && f.sources().iter().all(|s| s.as_ref() == a.space().as_ref());
    if ok {
        Ok(())
    } else {
        Err(HochschildError::NotAlgebraValued)
    }
}

/// `(f ∪ g)(a_1, …, a_{p+q}) = (−1)^{|g|(|a_1|+…+|a_p|)} f(a_1, …, a_p) g(a_{p+1}, …)`
/// on components, extended bilinearly.
pub fn cup(a: &DGAlgebra, f: impl Into<Cochain>, g: impl Into<Cochain>) -> Result<Cochain, HochschildError> {
    let (f, g) = (f.into(), g.into());
    let mut out = Cochain::zero();
    for f in f.parts() {
        algebra_valued(a, f)?;
        for g in g.parts() {
            algebra_valued(a, g)?;
            let p = f.arity();
            out.push(a.product().compose(1, f)?.compose(p + 1, g)?)?;
        }
    }
    Ok(out)
}

/// `f ∘ g = Σ_i (−1)^{(q−1)(i−1)} f ∘_i g` with `q` the arity of `g`. The
/// signs only see arities, so the algebra must be concentrated in degree 0.
pub fn pre_lie(a: &DGAlgebra, f: &MultilinearMap, g: &MultilinearMap) -> Result<MultilinearMap, HochschildError> {
    algebra_valued(a, f)?;
    algebra_valued(a, g)?;
    if (0..a.space().dim()).any(|i| a.space().degree(i) != 0) {
        return Err(HochschildError::Graded);
    }
    let (p, q) = (f.arity() as i64, g.arity() as i64);
    let space = a.space().clone();
    let arity = (p + q - 1).max(0) as usize;
    let mut out = MultilinearMap::zero(vec![space.clone(); arity], space, f.degree() + g.degree());
    for i in 1..=p {
        out = out.add(&f.compose(i as usize, g)?.scale(&sign((q - 1) * (i - 1))))?;
    }
    Ok(out)
}

/// `[f, g] = f ∘ g − (−1)^{(p−1)(q−1)} g ∘ f`.
pub fn bracket(a: &DGAlgebra, f: &MultilinearMap, g: &MultilinearMap) -> Result<MultilinearMap, HochschildError> {
    let (p, q) = (f.arity() as i64, g.arity() as i64);
    let fg = pre_lie(a, f, g)?;
    let gf = pre_lie(a, g, f)?;
    if fg.arity() != gf.arity() {
        // both sides are empty sums when p = q = 0
        return Ok(fg);
    }
    Ok(fg.sub(&gf.scale(&sign((p - 1) * (q - 1))))?)
}

/// `Hom(A^{⊗n}, M)` for `n ≤ N`, materialized in a range of total degrees
/// `n + p`. Basis cochains are keyed `[j, i_1, …, i_n]`: the cochain sending
/// `e_{i_1} ⊗ … ⊗ e_{i_n}` to `m_j` and every other basis tensor to zero.
pub struct CochainComplex {
    module: DGBimodule,
    truncation: usize,
    bases: BTreeMap<i64, Vec<Vec<usize>>>,
    index: BTreeMap<i64, HashMap<Vec<usize>, usize>>,
    matrices: BTreeMap<i64, OnceLock<Matrix>>,
}

impl CochainComplex {
    pub fn new(m: &DGBimodule, truncation: usize, degrees: RangeInclusive<i64>) -> Self {
        let a_deg: Vec<i64> = (0..m.algebra().space().dim())
            .map(|i| m.algebra().space().degree(i))
            .collect();
        let amin = a_deg.iter().copied().min().unwrap_or(0);
        let amax = a_deg.iter().copied().max().unwrap_or(0);
        let mut bases: BTreeMap<i64, Vec<Vec<usize>>> = degrees.clone().map(|k| (k, Vec::new())).collect();
        for n in 0..=truncation {
            if a_deg.is_empty() && n > 0 {
                break;
            }
            for j in 0..m.space().dim() {
                // k = n + deg(j) − s
                let dj = m.space().degree(j);
                let (slo, shi) = (n as i64 + dj - degrees.end(), n as i64 + dj - degrees.start());
                let mut key = vec![j];
                dfs(&a_deg, n, 0, &mut key, (amin, amax), (slo, shi), &mut |key, s| {
                    bases
                        .get_mut(&(n as i64 + dj - s))
                        .expect("degree in range")
                        .push(key.to_vec());
                });
            }
        }
        let index = bases
            .iter()
            .map(|(k, b)| (*k, b.iter().cloned().zip(0..).collect()))
            .collect();
        let matrices = bases.keys().map(|k| (*k, OnceLock::new())).collect();
        CochainComplex {
            module: m.clone(),
            truncation,
            bases,
            index,
            matrices,
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn basis(&self, k: i64) -> &[Vec<usize>] {
        self.bases.get(&k).map_or(&[], |b| b.as_slice())
    }

    /// The basis cochain for `key`.
    pub fn basis_cochain(&self, key: &[usize]) -> MultilinearMap {
        let a = self.module.algebra().space().clone();
        let target = self.module.space().clone();
        let n = key.len() - 1;
        let s: i64 = key[1..].iter().map(|&i| a.degree(i)).sum();
        let degree = target.degree(key[0]) - s;
        MultilinearMap::new(vec![a; n], target, degree, [(key[1..].to_vec(), key[0], one())])
            .expect("basis cochain is homogeneous")
    }

    /// Coordinates of a cochain of total degree `k`.
    pub fn coordinates(&self, k: i64, f: impl Into<Cochain>) -> Option<Vec<Rational>> {
        let basis = self.bases.get(&k)?;
        let index = &self.index[&k];
        let mut v = vec![crate::exactq::zero(); basis.len()];
        let f = f.into();
        for (inputs, out, c) in f.parts().flat_map(|f| f.entries()) {
            let mut key = vec![out];
            key.extend_from_slice(inputs);
            v[*index.get(&key)?] = c.clone();
        }
        Some(v)
    }

    /// Matrix of `δ : C^k → C^{k+1}`.
    pub fn matrix(&self, k: i64) -> Option<Matrix> {
        let src = self.bases.get(&k)?;
        let tgt = self.bases.get(&(k + 1))?;
        Some(self.matrices[&k].get_or_init(|| self.build_matrix(k, src, tgt)).clone())
    }

    fn build_matrix(&self, k: i64, src: &[Vec<usize>], tgt: &[Vec<usize>]) -> Matrix {
        let index = &self.index[&(k + 1)];
        let mut m = Matrix::zeros(tgt.len(), src.len());
        for (j, key) in src.iter().enumerate() {
            let image = coboundary(&self.module, self.basis_cochain(key)).expect("shapes agree");
            for (inputs, out, c) in image.parts().flat_map(|f| f.entries()) {
                if inputs.len() > self.truncation {
                    continue;
                }
                let mut t = vec![out];
                t.extend_from_slice(inputs);
                m.add_at(index[&t], j, c);
            }
        }
        m
    }

    /// The cochain with coordinates `v` in degree `k`.
    pub fn cochain(&self, k: i64, v: &[Rational]) -> Cochain {
        let mut out = Cochain::zero();
        for (key, c) in self.basis(k).iter().zip(v) {
            if *c != crate::exactq::zero() {
                out.push(self.basis_cochain(key).scale(c)).expect("same total degree");
            }
        }
        out
    }

    /// Cocycles whose classes form a basis of `H^k`, as coordinate vectors.
    pub fn cohomology_basis(&self, k: i64) -> Vec<Vec<Rational>> {
        let image = self.matrix(k - 1).expect("degree k - 1 built");
        let mut cols: Vec<Vec<Rational>> = (0..image.cols()).map(|c| image.column(c)).collect();
        let rows = image.rows();
        let mut rank = Matrix::from_columns(rows, &cols).rank();
        let mut reps = Vec::new();
        for z in self.matrix(k).expect("degree k + 1 built").kernel_basis() {
            cols.push(z.clone());
            let r = Matrix::from_columns(rows, &cols).rank();
            if r > rank {
                rank = r;
                reps.push(z);
            } else {
                cols.pop();
            }
        }
        reps
    }

    /// Coordinates of the class of `f` in `basis`; `None` if `f` is not a
    /// cocycle of degree `k` or lies outside the materialized range.
    pub fn class_coordinates(&self, k: i64, basis: &[Vec<Rational>], f: impl Into<Cochain>) -> Option<Vec<Rational>> {
        let f = f.into();
        if !coboundary(&self.module, &f).ok()?.is_zero() {
            return None;
        }
        let v = self.coordinates(k, f)?;
        let image = self.matrix(k - 1)?;
        let mut cols = basis.to_vec();
        cols.extend((0..image.cols()).map(|c| image.column(c)));
        let x = Matrix::from_columns(v.len(), &cols).solve(&v)?;
        Some(x[..basis.len()].to_vec())
    }

    pub fn cohomology(&self, k: i64) -> Result<usize, HochschildError> {
        let d_in = self.matrix(k - 1).expect("degree k - 1 built");
        let d_out = self.matrix(k).expect("degree k + 1 built");
        Ok(homology_dimension(&d_in, &d_out)?)
    }
}

fn dfs(
    a_deg: &[i64],
    n: usize,
    s: i64,
    key: &mut Vec<usize>,
    (amin, amax): (i64, i64),
    (slo, shi): (i64, i64),
    emit: &mut impl FnMut(&[usize], i64),
) {
    let left = (n + 1 - key.len()) as i64;
    if s + left * amax < slo || s + left * amin > shi {
        return;
    }
    if left == 0 {
        emit(key, s);
        return;
    }
    for (i, &d) in a_deg.iter().enumerate() {
        key.push(i);
        dfs(a_deg, n, s + d, key, (amin, amax), (slo, shi), emit);
        key.pop();
    }
}

/// `HH^*(A, M)` in the window, built to tensor length `truncation` and
/// compared with `truncation + 1`.
pub fn hochschild_cohomology(
    a: &DGAlgebra,
    m: &DGBimodule,
    truncation: usize,
    window: RangeInclusive<i64>,
) -> Result<HomologyReport, HochschildError> {
    check_window(truncation, &window)?;
    if m.algebra().space() != a.space() || m.algebra().product() != a.product() {
        return Err(HochschildError::ForeignBimodule);
    }
    let range = window.start() - 1..=window.end() + 1;
    let dims_at = |n: usize| -> Result<BTreeMap<i64, usize>, HochschildError> {
        let cx = CochainComplex::new(m, n, range.clone());
        window.clone().map(|k| Ok((k, cx.cohomology(k)?))).collect()
    };
    let dims = dims_at(truncation)?;
    let stable = dims_at(truncation + 1)? == dims;
    Ok(HomologyReport {
        truncation,
        dims,
        stable,
    })
}

/// Structure constants of a product `H^p × H^q → H^r` in the bases chosen by
/// [`CochainComplex::cohomology_basis`]: `entries[i][j]` are the coordinates
/// of the product of the `i`-th and `j`-th classes.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductTable {
    pub degrees: (i64, i64, i64),
    pub entries: Vec<Vec<Vec<Rational>>>,
}

fn product_table(
    a: &DGAlgebra,
    truncation: usize,
    (p, q, r): (i64, i64, i64),
    op: impl Fn(&Cochain, &Cochain) -> Result<Cochain, HochschildError>,
) -> Result<ProductTable, HochschildError> {
    let (lo, hi) = (p.min(q).min(r), p.max(q).max(r));
    check_window(truncation, &(lo..=hi))?;
    let m = DGBimodule::regular(a);
    let cx = CochainComplex::new(&m, truncation, lo - 1..=hi + 1);
    let (bp, bq, br) = (cx.cohomology_basis(p), cx.cohomology_basis(q), cx.cohomology_basis(r));
    let mut entries = Vec::new();
    for x in &bp {
        let mut row = Vec::new();
        for y in &bq {
            let z = op(&cx.cochain(p, x), &cx.cochain(q, y))?;
            row.push(cx.class_coordinates(r, &br, z).ok_or(HochschildError::TruncationTooSmall {
                truncation,
                degree: r,
                needed: truncation + 1,
            })?);
        }
        entries.push(row);
    }
    Ok(ProductTable {
        degrees: (p, q, r),
        entries,
    })
}

/// Cup product `HH^p(A, A) × HH^q(A, A) → HH^{p+q}(A, A)`.
pub fn cup_table(a: &DGAlgebra, truncation: usize, p: i64, q: i64) -> Result<ProductTable, HochschildError> {
    product_table(a, truncation, (p, q, p + q), |f, g| cup(a, f, g))
}

/// Gerstenhaber bracket `HH^p(A, A) × HH^q(A, A) → HH^{p+q−1}(A, A)`.
pub fn bracket_table(a: &DGAlgebra, truncation: usize, p: i64, q: i64) -> Result<ProductTable, HochschildError> {
    product_table(a, truncation, (p, q, p + q - 1), |f, g| {
        let mut out = Cochain::zero();
        for f in f.parts() {
            for g in g.parts() {
                out.push(bracket(a, f, g)?)?;
            }
        }
        Ok(out)
    })
}
