//! Gerstenhaber, BV and BV_{n+1} structures on finite-dimensional graded
//! commutative algebras.
//!
//! Every check runs over all basis tuples, so a passing report is a proof
//! for that instance. Reports list clauses in a fixed order together with
//! the first failing basis tuple of each.

mod random;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::exactq::{is_zero_vec, sign, zero, ExactError, GradedVectorSpace, MultilinearMap, Rational};
use crate::io::StructureConstants;

pub use random::{random_instance, DeltaKind};

/// Name of the BV operator in structure-constant files.
pub const DELTA: &str = "Delta";

/// Clause names, in report order.
pub mod clause {
    pub const SKEW: &str = "skew symmetry";
    pub const JACOBI: &str = "Jacobi";
    pub const LEIBNIZ: &str = "Leibniz";
    pub const DELTA_SQUARED: &str = "Δ² = 0";
    pub const DELTA_UNIT: &str = "Δ(1) = 0";
    pub const SECOND_ORDER: &str = "second order";
    pub const SEVEN_TERM: &str = "seven-term relation";
    pub const DELTA_DERIVES_BRACKET: &str = "Δ derives the bracket";
    pub const AGREE: &str = "characterizations agree";

    pub fn squares_to_zero(op: &str) -> String {
        format!("{op}² = 0")
    }

    pub fn derives_product(op: &str) -> String {
        format!("{op} derives the product")
    }

    pub fn derives_bracket(op: &str) -> String {
        format!("{op} derives the bracket")
    }
}

/// Sign in `Δ(ab) − (Δa)b − (−1)^{|a|} aΔb = ε(a)[a, b]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `ε(a) = (−1)^{|a|−1}`.
    #[default]
    Gbv,
    /// `ε(a) = (−1)^{|a|}`.
    Sw,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Gbv, Convention::Sw];

    fn epsilon(self, deg: i64) -> Rational {
        match self {
            Convention::Gbv => sign(deg - 1),
            Convention::Sw => sign(deg),
        }
    }
}

impl std::str::FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gbv" => Ok(Convention::Gbv),
            "sw" => Ok(Convention::Sw),
            _ => Err(format!("unknown convention {s:?}; expected gbv or sw")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GbvError {
    #[error("{axiom} fails on {witness:?}")]
    Axiom { axiom: String, witness: Vec<String> },
    #[error("missing {0}")]
    Missing(String),
    #[error("operator {name} has degree {found}, expected {expected}")]
    Degree { name: String, expected: String, found: i64 },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    /// Basis names of the first tuple on which the clause fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub check: String,
    pub clauses: Vec<Clause>,
}

impl Report {
    fn new(check: &str) -> Self {
        Report {
            check: check.to_string(),
            clauses: Vec::new(),
        }
    }

    fn push(&mut self, name: &str, witness: Option<Vec<String>>) -> bool {
        let passed = witness.is_none();
        self.clauses.push(Clause {
            name: name.to_string(),
            passed,
            witness,
        });
        passed
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.passed)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.clauses
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }
}

/// Graded commutative associative unital algebra with named unary operators
/// and an optional bracket.
#[derive(Clone, Debug)]
pub struct GradedOperatorAlgebra {
    space: Arc<GradedVectorSpace>,
    product: MultilinearMap,
    unit: Vec<Rational>,
    operators: BTreeMap<String, MultilinearMap>,
    bracket: Option<MultilinearMap>,
}

fn basis_vector(d: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![zero(); d];
    v[i] = crate::exactq::one();
    v
}

fn add_into(acc: &mut [Rational], v: &[Rational], c: &Rational) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a += c * x;
    }
}

impl GradedOperatorAlgebra {
    /// Validates graded commutativity, associativity and the unit on basis
    /// elements. Operators must be unary maps on `space`.
    pub fn new(
        space: Arc<GradedVectorSpace>,
        product: MultilinearMap,
        unit: Vec<Rational>,
        operators: BTreeMap<String, MultilinearMap>,
        bracket: Option<MultilinearMap>,
    ) -> Result<Self, GbvError> {
        let a = GradedOperatorAlgebra {
            space,
            product,
            unit,
            operators,
            bracket,
        };
        let d = a.dim();
        let name = |i: usize| a.space.name(i).to_string();
        let fail = |axiom: &str, w: &[usize]| GbvError::Axiom {
            axiom: axiom.into(),
            witness: w.iter().map(|&i| name(i)).collect(),
        };
        for i in 0..d {
            let e = a.e(i);
            if a.mul(&a.unit, &e) != e || a.mul(&e, &a.unit) != e {
                return Err(fail("unit", &[i]));
            }
            for j in 0..d {
                let ij = a.mul(&e, &a.e(j));
                let ji = a.mul(&a.e(j), &e);
                let s = sign(a.deg(i) * a.deg(j));
                if ij.iter().zip(&ji).any(|(x, y)| *x != &s * y) {
                    return Err(fail("graded commutativity", &[i, j]));
                }
                for k in 0..d {
                    if a.mul(&ij, &a.e(k)) != a.mul(&e, &a.mul(&a.e(j), &a.e(k))) {
                        return Err(fail("associativity", &[i, j, k]));
                    }
                }
            }
        }
        Ok(a)
    }

    /// Reads `product`, `unit` (solved for if absent), `operators` and
    /// `bracket` from a structure-constant file.
    pub fn from_constants(sc: &StructureConstants) -> Result<Self, GbvError> {
        let product = sc.product.clone().ok_or(GbvError::Missing("product".into()))?;
        let unit = match &sc.unit {
            Some(u) => u.clone(),
            None => crate::operad::solve_unit(&product).ok_or(GbvError::Missing("unit".into()))?,
        };
        Self::new(sc.space.clone(), product, unit, sc.operators.clone(), sc.bracket.clone())
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

    pub fn operators(&self) -> &BTreeMap<String, MultilinearMap> {
        &self.operators
    }

    pub fn bracket(&self) -> Option<&MultilinearMap> {
        self.bracket.as_ref()
    }

    pub fn with_operator(mut self, name: &str, op: MultilinearMap) -> Self {
        self.operators.insert(name.to_string(), op);
        self
    }

    pub fn with_bracket(mut self, bracket: MultilinearMap) -> Self {
        self.bracket = Some(bracket);
        self
    }

    fn dim(&self) -> usize {
        self.space.dim()
    }

    fn deg(&self, i: usize) -> i64 {
        self.space.degree(i)
    }

    fn e(&self, i: usize) -> Vec<Rational> {
        basis_vector(self.dim(), i)
    }

    fn names(&self, w: &[usize]) -> Vec<String> {
        w.iter().map(|&i| self.space.name(i).to_string()).collect()
    }

    fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.product.apply(&[x.to_vec(), y.to_vec()])
    }

    fn operator(&self, name: &str) -> Result<&MultilinearMap, GbvError> {
        self.operators
            .get(name)
            .ok_or_else(|| GbvError::Missing(format!("operator {name}")))
    }

    /// `{a, b} = (−1)^{|a|}Δ(ab) − (−1)^{|a|}Δ(a)b − aΔ(b)`, of the degree of Δ.
    pub fn derive_bracket(&self, delta: &str) -> Result<MultilinearMap, GbvError> {
        let op = self.operator(delta)?;
        if op.degree().rem_euclid(2) != 1 {
            return Err(GbvError::Degree {
                name: delta.into(),
                expected: "odd".into(),
                found: op.degree(),
            });
        }
        let d = self.dim();
        let apply = |x: &[Rational]| op.apply(&[x.to_vec()]);
        let mut entries = Vec::new();
        for i in 0..d {
            let s = sign(self.deg(i));
            for j in 0..d {
                let (a, b) = (self.e(i), self.e(j));
                let mut v = vec![zero(); d];
                add_into(&mut v, &apply(&self.mul(&a, &b)), &s);
                add_into(&mut v, &self.mul(&apply(&a), &b), &-&s);
                add_into(&mut v, &self.mul(&a, &apply(&b)), &-crate::exactq::one());
                entries.extend(v.into_iter().enumerate().map(|(k, c)| (vec![i, j], k, c)));
            }
        }
        Ok(MultilinearMap::new(
            vec![self.space.clone(); 2],
            self.space.clone(),
            op.degree(),
            entries,
        )?)
    }

    /// The bracket determined by the seven-term relation, `[a, b] = κ{a, b}`
    /// with `κ = −1` for [`Convention::Gbv`] and `+1` for [`Convention::Sw`].
    pub fn seven_term_bracket(&self, delta: &str, convention: Convention) -> Result<MultilinearMap, GbvError> {
        let b = self.derive_bracket(delta)?;
        Ok(match convention {
            Convention::Gbv => b.scale(&-crate::exactq::one()),
            Convention::Sw => b,
        })
    }

    fn brk(b: &MultilinearMap, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        b.apply(&[x.to_vec(), y.to_vec()])
    }

    fn first_pair(&self, mut bad: impl FnMut(usize, usize) -> bool) -> Option<Vec<String>> {
        let d = self.dim();
        (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .find(|&(i, j)| bad(i, j))
            .map(|(i, j)| self.names(&[i, j]))
    }

    fn first_triple(&self, mut bad: impl FnMut(usize, usize, usize) -> bool) -> Option<Vec<String>> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if bad(i, j, k) {
                        return Some(self.names(&[i, j, k]));
                    }
                }
            }
        }
        None
    }

    fn first_single(&self, mut bad: impl FnMut(usize) -> bool) -> Option<Vec<String>> {
        (0..self.dim()).find(|&i| bad(i)).map(|i| self.names(&[i]))
    }

    fn skew(&self, b: &MultilinearMap, n: i64) -> Option<Vec<String>> {
        self.first_pair(|i, j| {
            let mut v = Self::brk(b, &self.e(i), &self.e(j));
            let s = sign((self.deg(i) + n) * (self.deg(j) + n));
            add_into(&mut v, &Self::brk(b, &self.e(j), &self.e(i)), &s);
            !is_zero_vec(&v)
        })
    }

    fn jacobi(&self, b: &MultilinearMap, n: i64) -> Option<Vec<String>> {
        self.first_triple(|i, j, k| {
            let (di, dj, dk) = (self.deg(i) + n, self.deg(j) + n, self.deg(k) + n);
            let term = |x: usize, y: usize, z: usize| Self::brk(b, &self.e(x), &Self::brk(b, &self.e(y), &self.e(z)));
            let mut v = vec![zero(); self.dim()];
            add_into(&mut v, &term(i, j, k), &sign(di * dk));
            add_into(&mut v, &term(j, k, i), &sign(dj * di));
            add_into(&mut v, &term(k, i, j), &sign(dk * dj));
            !is_zero_vec(&v)
        })
    }

    fn leibniz(&self, b: &MultilinearMap, n: i64) -> Option<Vec<String>> {
        self.first_triple(|i, j, k| {
            let (x, y, z) = (self.e(i), self.e(j), self.e(k));
            let mut v = Self::brk(b, &x, &self.mul(&y, &z));
            add_into(&mut v, &self.mul(&Self::brk(b, &x, &y), &z), &-crate::exactq::one());
            let s = sign((self.deg(i) + n) * self.deg(j));
            add_into(&mut v, &self.mul(&y, &Self::brk(b, &x, &z)), &-s);
            !is_zero_vec(&v)
        })
    }

    fn squares_to_zero(&self, op: &MultilinearMap) -> Option<Vec<String>> {
        self.first_single(|i| {
            let once = op.apply(&[self.e(i)]);
            !is_zero_vec(&op.apply(&[once]))
        })
    }

    /// `D(ab) = D(a)b + (−1)^{|D||a|} aD(b)`.
    fn derives_product(&self, op: &MultilinearMap) -> Option<Vec<String>> {
        let apply = |x: &[Rational]| op.apply(&[x.to_vec()]);
        self.first_pair(|i, j| {
            let (a, b) = (self.e(i), self.e(j));
            let mut v = apply(&self.mul(&a, &b));
            add_into(&mut v, &self.mul(&apply(&a), &b), &-crate::exactq::one());
            add_into(&mut v, &self.mul(&a, &apply(&b)), &-sign(op.degree() * self.deg(i)));
            !is_zero_vec(&v)
        })
    }

    /// `D[a, b] = [Da, b] + (−1)^{|D|(|a|+n)} [a, Db]`.
    fn derives_bracket(&self, op: &MultilinearMap, b: &MultilinearMap, n: i64) -> Option<Vec<String>> {
        let apply = |x: &[Rational]| op.apply(&[x.to_vec()]);
        self.first_pair(|i, j| {
            let (x, y) = (self.e(i), self.e(j));
            let mut v = apply(&Self::brk(b, &x, &y));
            add_into(&mut v, &Self::brk(b, &apply(&x), &y), &-crate::exactq::one());
            add_into(&mut v, &Self::brk(b, &x, &apply(&y)), &-sign(op.degree() * (self.deg(i) + n)));
            !is_zero_vec(&v)
        })
    }

    /// `Δ(ab) − Δ(a)b − (−1)^{|a|} aΔ(b) = ε(a)[a, b]`.
    fn seven_term(&self, op: &MultilinearMap, b: &MultilinearMap, convention: Convention) -> Option<Vec<String>> {
        let apply = |x: &[Rational]| op.apply(&[x.to_vec()]);
        self.first_pair(|i, j| {
            let (x, y) = (self.e(i), self.e(j));
            let mut v = apply(&self.mul(&x, &y));
            add_into(&mut v, &self.mul(&apply(&x), &y), &-crate::exactq::one());
            add_into(&mut v, &self.mul(&x, &apply(&y)), &-sign(self.deg(i)));
            add_into(&mut v, &Self::brk(b, &x, &y), &-convention.epsilon(self.deg(i)));
            !is_zero_vec(&v)
        })
    }

    /// `[[[Δ, L_a], L_b], L_c] = 0` with graded commutators.
    fn second_order(&self, op: &MultilinearMap) -> Result<Option<Vec<String>>, GbvError> {
        let left: Vec<MultilinearMap> = (0..self.dim())
            .map(|i| {
                let c = MultilinearMap::constant(self.space.clone(), self.deg(i), &self.e(i))?;
                self.product.compose(1, &c)
            })
            .collect::<Result<_, _>>()?;
        let comm = |x: &MultilinearMap, y: &MultilinearMap| -> Result<MultilinearMap, ExactError> {
            let xy = x.compose(1, y)?;
            let yx = y.compose(1, x)?;
            xy.sub(&yx.scale(&sign(x.degree() * y.degree())))
        };
        let d = self.dim();
        for i in 0..d {
            let t1 = comm(op, &left[i])?;
            for j in 0..d {
                let t2 = comm(&t1, &left[j])?;
                for k in 0..d {
                    if !comm(&t2, &left[k])?.is_zero() {
                        return Ok(Some(self.names(&[i, j, k])));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Skew symmetry and Jacobi on `V[n]` and the Leibniz rule
    /// `[a, bc] = [a, b]c + (−1)^{(|a|+n)|b|} b[a, c]`.
    pub fn check_gerstenhaber(&self, bracket: &MultilinearMap, n: i64) -> Result<Report, GbvError> {
        if bracket.degree() != n {
            return Err(GbvError::Degree {
                name: "bracket".into(),
                expected: n.to_string(),
                found: bracket.degree(),
            });
        }
        let mut r = Report::new("gerstenhaber");
        self.gerstenhaber_clauses(&mut r, bracket, n);
        Ok(r)
    }

    fn gerstenhaber_clauses(&self, r: &mut Report, b: &MultilinearMap, n: i64) -> bool {
        let s = r.push(clause::SKEW, self.skew(b, n));
        let j = r.push(clause::JACOBI, self.jacobi(b, n));
        let l = r.push(clause::LEIBNIZ, self.leibniz(b, n));
        s && j && l
    }

    /// Checks `Δ` against both characterizations of a BV operator: square
    /// zero, normalized and second order in the sense of Grothendieck; and
    /// square zero with the seven-term bracket a Gerstenhaber bracket that `Δ`
    /// derives. The last clause records whether the two verdicts agree.
    pub fn check_bv(&self, delta: &str, convention: Convention) -> Result<Report, GbvError> {
        let op = self.operator(delta)?;
        let bracket = self.seven_term_bracket(delta, convention)?;
        let n = op.degree();
        let mut r = Report::new("bv");
        let square = r.push(clause::DELTA_SQUARED, self.squares_to_zero(op));
        let unit = op.apply(&[self.unit.clone()]);
        let normalized = r.push(
            clause::DELTA_UNIT,
            (!is_zero_vec(&unit)).then(|| vec![self.unit_name()]),
        );
        let second = r.push(clause::SECOND_ORDER, self.second_order(op)?);
        let seven = r.push(clause::SEVEN_TERM, self.seven_term(op, &bracket, convention));
        let gerst = self.gerstenhaber_clauses(&mut r, &bracket, n);
        let derives = r.push(clause::DELTA_DERIVES_BRACKET, self.derives_bracket(op, &bracket, n));
        let grothendieck = square && normalized && second;
        let seven_term = square && seven && gerst && derives;
        r.push(
            clause::AGREE,
            (grothendieck != seven_term).then(|| vec![format!("grothendieck={grothendieck}, seven-term={seven_term}")]),
        );
        Ok(r)
    }

    fn unit_name(&self) -> String {
        match (0..self.dim()).filter(|&i| !self.unit[i].is_zero()).collect::<Vec<_>>()[..] {
            [i] if self.unit[i] == crate::exactq::one() => self.space.name(i).to_string(),
            _ => "1".to_string(),
        }
    }

    /// Identities of an algebra over the homology of the framed little
    /// `(n+1)`-disks: `B_i` of degree `4i − 1` for `i ≤ ⌊n/2⌋` (`⌊(n−1)/2⌋`
    /// for odd `n`), square zero and deriving product and bracket; for odd
    /// `n` also `Δ` of degree `n`. The bracket is the one in the instance,
    /// or for odd `n` the seven-term bracket of `Δ`.
    pub fn check_bv_nplus1(&self, n: u32, convention: Convention) -> Result<Report, GbvError> {
        let nn = n as i64;
        let odd = n % 2 == 1;
        let count = if odd { (n - 1) / 2 } else { n / 2 };
        let mut bs = Vec::new();
        for i in 1..=count {
            let name = format!("B{i}");
            let op = self.operator(&name)?;
            let expected = 4 * i as i64 - 1;
            if op.degree() != expected {
                return Err(GbvError::Degree {
                    name,
                    expected: expected.to_string(),
                    found: op.degree(),
                });
            }
            bs.push((name, op));
        }
        let delta = if odd {
            let op = self.operator(DELTA)?;
            if op.degree() != nn {
                return Err(GbvError::Degree {
                    name: DELTA.into(),
                    expected: nn.to_string(),
                    found: op.degree(),
                });
            }
            Some(op)
        } else {
            None
        };
        let bracket = match (&self.bracket, delta) {
            (Some(b), _) => {
                if b.degree() != nn {
                    return Err(GbvError::Degree {
                        name: "bracket".into(),
                        expected: nn.to_string(),
                        found: b.degree(),
                    });
                }
                b.clone()
            }
            (None, Some(_)) => self.seven_term_bracket(DELTA, convention)?,
            (None, None) => return Err(GbvError::Missing("bracket".into())),
        };
        let mut r = Report::new("bv_nplus1");
        self.gerstenhaber_clauses(&mut r, &bracket, nn);
        for (name, op) in &bs {
            r.push(&clause::squares_to_zero(name), self.squares_to_zero(op));
            r.push(&clause::derives_product(name), self.derives_product(op));
            r.push(&clause::derives_bracket(name), self.derives_bracket(op, &bracket, nn));
        }
        if let Some(op) = delta {
            r.push(clause::DELTA_SQUARED, self.squares_to_zero(op));
            r.push(clause::SEVEN_TERM, self.seven_term(op, &bracket, convention));
            r.push(clause::DELTA_DERIVES_BRACKET, self.derives_bracket(op, &bracket, nn));
        }
        Ok(r)
    }
}
