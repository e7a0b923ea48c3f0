//! Random graded commutative algebras `Λ(x_i) ⊗ ℚ[u_j]/(u_j^{h_j})` with an
//! operator `Delta` of degree 1.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;

use crate::exactq::{q, sign, zero, BasisElement, GradedVectorSpace, Matrix, MultilinearMap, Rational};

use super::{GradedOperatorAlgebra, DELTA};

/// How `Delta` was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeltaKind {
    /// `Σ c ∂_x + Σ c u∂_u ∂_x` over odd `x` of degree −1: a BV operator.
    SecondOrder,
    /// A second-order operator plus terms `u∂_u v∂_v ∂_x`.
    ThirdOrder,
    /// A second-order operator plus multiplication by an element of degree 1.
    Multiplication,
    /// A random homogeneous map of degree 1.
    Unstructured,
}

#[derive(Clone, Copy)]
struct Factor {
    degree: i64,
    /// 2 for exterior factors.
    height: usize,
}

impl Factor {
    fn odd(self) -> bool {
        self.degree.rem_euclid(2) == 1
    }
}

struct Monomials {
    factors: Vec<Factor>,
    basis: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

impl Monomials {
    fn new(factors: Vec<Factor>) -> Self {
        let heights: Vec<usize> = factors.iter().map(|f| f.height).collect();
        let basis: Vec<Vec<usize>> = crate::exactq::multi_indices(&heights).collect();
        let index = basis.iter().cloned().zip(0..).collect();
        Monomials { factors, basis, index }
    }

    fn degree(&self, m: &[usize]) -> i64 {
        m.iter().zip(&self.factors).map(|(&a, f)| a as i64 * f.degree).sum()
    }

    fn name(&self, m: &[usize]) -> String {
        let mut s = String::new();
        for (i, (&a, f)) in m.iter().zip(&self.factors).enumerate() {
            if a == 0 {
                continue;
            }
            s.push_str(&format!("{}{i}", if f.odd() { "x" } else { "u" }));
            if a > 1 {
                s.push_str(&format!("^{a}"));
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// `m · n` as (index, sign), or `None` if it vanishes.
    fn product(&self, m: &[usize], n: &[usize]) -> Option<(usize, i64)> {
        let mut out = Vec::with_capacity(m.len());
        for (i, f) in self.factors.iter().enumerate() {
            if m[i] + n[i] >= f.height {
                return None;
            }
            out.push(m[i] + n[i]);
        }
        // move each factor of n leftwards past the later factors of m
        let mut e = 0;
        for j in 0..self.factors.len() {
            for i in j + 1..self.factors.len() {
                e += (m[i] * n[j]) as i64 * self.factors[i].degree * self.factors[j].degree;
            }
        }
        Some((self.index[&out], e))
    }

    /// `∂/∂x_i` on an odd generator, acting from the left.
    fn odd_derivative(&self, i: usize, m: &[usize]) -> Option<(usize, i64)> {
        if m[i] == 0 {
            return None;
        }
        let before: i64 = (0..i).map(|j| m[j] as i64 * self.factors[j].degree).sum();
        let mut out = m.to_vec();
        out[i] = 0;
        Some((self.index[&out], before * self.factors[i].degree))
    }

    fn space(&self) -> GradedVectorSpace {
        GradedVectorSpace::new(
            self.basis
                .iter()
                .map(|m| BasisElement {
                    name: self.name(m),
                    degree: self.degree(m),
                })
                .collect(),
        )
        .expect("monomial names are distinct")
    }
}

fn random_factors<R: Rng>(rng: &mut R, max_dim: usize) -> Vec<Factor> {
    let mut factors = vec![Factor { degree: -1, height: 2 }];
    let mut dim = 2;
    while rng.gen_bool(0.7) {
        let f = if rng.gen_bool(0.5) {
            Factor {
                degree: [-1, 1, -3][rng.gen_range(0..3)],
                height: 2,
            }
        } else {
            Factor {
                degree: [0, 0, -2, 2][rng.gen_range(0..4)],
                height: rng.gen_range(2..=3),
            }
        };
        if dim * f.height > max_dim {
            break;
        }
        dim *= f.height;
        factors.push(f);
    }
    factors
}

/// A random instance of dimension at most `max_dim` (at least 2), with the
/// kind of `Delta` chosen uniformly when the algebra allows it.
pub fn random_instance<R: Rng>(rng: &mut R, max_dim: usize) -> (GradedOperatorAlgebra, DeltaKind) {
    assert!(max_dim >= 2);
    let mon = Monomials::new(random_factors(rng, max_dim));
    let d = mon.basis.len();
    let space = Arc::new(mon.space());

    let mut product = Vec::new();
    for (a, m) in mon.basis.iter().enumerate() {
        for (b, n) in mon.basis.iter().enumerate() {
            if let Some((k, e)) = mon.product(m, n) {
                product.push((vec![a, b], k, sign(e)));
            }
        }
    }
    let product = MultilinearMap::new(vec![space.clone(); 2], space.clone(), 0, product).expect("degree 0");
    let mut unit = vec![zero(); d];
    unit[0] = q(1);

    let odd: Vec<usize> = (0..mon.factors.len()).filter(|&i| mon.factors[i].degree == -1).collect();
    let even: Vec<usize> = (0..mon.factors.len()).filter(|&i| !mon.factors[i].odd()).collect();
    let mut delta = Matrix::zeros(d, d);
    let coefficient = |rng: &mut R| q(rng.gen_range(-2..=2));
    // u∂_u … v∂_v ∂_x on every monomial
    let add_term = |delta: &mut Matrix, x: usize, weights: &[usize], c: &Rational| {
        for (col, m) in mon.basis.iter().enumerate() {
            let w: usize = weights.iter().map(|&u| m[u]).product();
            if w == 0 {
                continue;
            }
            if let Some((row, e)) = mon.odd_derivative(x, m) {
                delta.add_at(row, col, &(c * sign(e) * q(w as i64)));
            }
        }
    };
    for &x in &odd {
        add_term(&mut delta, x, &[], &coefficient(rng));
        for &u in &even {
            add_term(&mut delta, x, &[u], &coefficient(rng));
        }
    }
    if delta.is_zero() {
        add_term(&mut delta, odd[0], &[], &q(1));
    }

    let degree_one: Vec<usize> = (0..d).filter(|&i| space.degree(i) == 1).collect();
    let mut kind = [
        DeltaKind::SecondOrder,
        DeltaKind::ThirdOrder,
        DeltaKind::Multiplication,
        DeltaKind::Unstructured,
    ][rng.gen_range(0..4)];
    if kind == DeltaKind::ThirdOrder && even.is_empty() || kind == DeltaKind::Multiplication && degree_one.is_empty() {
        kind = DeltaKind::SecondOrder;
    }
    match kind {
        DeltaKind::SecondOrder => {}
        DeltaKind::ThirdOrder => {
            let x = odd[rng.gen_range(0..odd.len())];
            let u = even[rng.gen_range(0..even.len())];
            let v = even[rng.gen_range(0..even.len())];
            add_term(&mut delta, x, &[u, v], &q(rng.gen_range(1..=2)));
        }
        DeltaKind::Multiplication => {
            let z = degree_one[rng.gen_range(0..degree_one.len())];
            for (col, n) in mon.basis.iter().enumerate() {
                if let Some((row, e)) = mon.product(&mon.basis[z], n) {
                    delta.add_at(row, col, &sign(e));
                }
            }
        }
        DeltaKind::Unstructured => {
            delta = Matrix::zeros(d, d);
            for col in 0..d {
                for row in 0..d {
                    if space.degree(row) == space.degree(col) + 1 && rng.gen_bool(0.5) {
                        delta.set(row, col, q(rng.gen_range(-1..=1)));
                    }
                }
            }
        }
    }
    let delta = MultilinearMap::from_linear(space.clone(), space.clone(), 1, &delta).expect("degree 1");
    let algebra = GradedOperatorAlgebra::new(space, product, unit, BTreeMap::new(), None)
        .expect("monomial algebras are graded commutative")
        .with_operator(DELTA, delta);
    (algebra, kind)
}
