use std::collections::{BTreeMap, HashMap};
use std::ops::RangeInclusive;

use crate::exactq::{homology_dimension, sign, zero, Matrix, MultilinearMap, Rational};

use super::{check_window, DGAlgebra, DGBimodule, HochschildError, HomologyReport};

/// Sparse chain keyed by `[c, a_1, …, a_n]` basis indices.
pub type Chain = BTreeMap<Vec<usize>, Rational>;

type Table = Vec<Vec<Vec<(usize, Rational)>>>;

fn table(m: &MultilinearMap, d1: usize, d2: usize) -> Table {
    (0..d1)
        .map(|i| {
            (0..d2)
                .map(|j| {
                    m.eval_basis(&[i, j])
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| *c != zero())
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn linear_table(d: &MultilinearMap, dim: usize) -> Vec<Vec<(usize, Rational)>> {
    (0..dim)
        .map(|i| {
            d.eval_basis(&[i])
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != zero())
                .collect()
        })
        .collect()
}

fn add_to(chain: &mut Chain, key: Vec<usize>, c: Rational) {
    use std::collections::btree_map::Entry;
    if c == zero() {
        return;
    }
    match chain.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if *e.get() == zero() {
                e.remove();
            }
        }
    }
}

/// `C ⊗ A^{⊗n}` for `n ≤ N`, materialized in a range of total degrees.
pub struct ChainComplex {
    a_deg: Vec<i64>,
    m_deg: Vec<i64>,
    product: Table,
    right: Table,
    left: Table,
    d_a: Vec<Vec<(usize, Rational)>>,
    d_m: Vec<Vec<(usize, Rational)>>,
    truncation: usize,
    bases: BTreeMap<i64, Vec<Vec<usize>>>,
    index: BTreeMap<i64, HashMap<Vec<usize>, usize>>,
}

impl ChainComplex {
    /// Builds the bases of every total degree in `degrees` from chains of
    /// length at most `truncation`.
    pub fn new(m: &DGBimodule, truncation: usize, degrees: RangeInclusive<i64>) -> Self {
        let a = m.algebra();
        let (da, dm) = (a.space().dim(), m.space().dim());
        let a_deg: Vec<i64> = (0..da).map(|i| a.space().degree(i)).collect();
        let m_deg: Vec<i64> = (0..dm).map(|i| m.space().degree(i)).collect();
        let mut cx = ChainComplex {
            product: table(a.product(), da, da),
            right: table(m.right(), dm, da),
            left: table(m.left(), da, dm),
            d_a: linear_table(a.differential(), da),
            d_m: linear_table(m.differential(), dm),
            a_deg,
            m_deg,
            truncation,
            bases: BTreeMap::new(),
            index: BTreeMap::new(),
        };
        for t in degrees.clone() {
            cx.bases.insert(t, Vec::new());
        }
        for n in 0..=truncation {
            cx.enumerate(n, &degrees);
        }
        for (t, basis) in &cx.bases {
            cx.index
                .insert(*t, basis.iter().cloned().zip(0..).collect());
        }
        cx
    }

    fn enumerate(&mut self, n: usize, degrees: &RangeInclusive<i64>) {
        let amin = self.a_deg.iter().copied().min().unwrap_or(0);
        let amax = self.a_deg.iter().copied().max().unwrap_or(0);
        if self.a_deg.is_empty() && n > 0 {
            return;
        }
        let mut key = Vec::with_capacity(n + 1);
        // t = n − s, so s must lie in [n − hi, n − lo]
        let (slo, shi) = (n as i64 - degrees.end(), n as i64 - degrees.start());
        for c in 0..self.m_deg.len() {
            key.clear();
            key.push(c);
            self.dfs(n, self.m_deg[c], &mut key, (amin, amax), (slo, shi));
        }
    }

    fn dfs(&mut self, n: usize, s: i64, key: &mut Vec<usize>, (amin, amax): (i64, i64), (slo, shi): (i64, i64)) {
        let left = (n + 1 - key.len()) as i64;
        if s + left * amax < slo || s + left * amin > shi {
            return;
        }
        if left == 0 {
            let t = n as i64 - s;
            self.bases.get_mut(&t).expect("degree in range").push(key.clone());
            return;
        }
        for i in 0..self.a_deg.len() {
            key.push(i);
            self.dfs(n, s + self.a_deg[i], key, (amin, amax), (slo, shi));
            key.pop();
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.bases.keys().copied()
    }

    pub fn basis(&self, t: i64) -> &[Vec<usize>] {
        self.bases.get(&t).map_or(&[], |b| b.as_slice())
    }

    /// `b(c ⊗ a_1 ⊗ … ⊗ a_n)`, with the Koszul sign
    /// `(−1)^{n + |a_n|(|c| + |a_1| + … + |a_{n−1}|)}` on the wrap-around term.
    pub fn hochschild_boundary_basis(&self, key: &[usize]) -> Chain {
        let mut out = Chain::new();
        let n = key.len() - 1;
        if n == 0 {
            return out;
        }
        for (k, c) in &self.right[key[0]][key[1]] {
            let mut t = vec![*k];
            t.extend_from_slice(&key[2..]);
            add_to(&mut out, t, c.clone());
        }
        for i in 1..n {
            for (k, c) in &self.product[key[i]][key[i + 1]] {
                let mut t = key[..i].to_vec();
                t.push(*k);
                t.extend_from_slice(&key[i + 2..]);
                add_to(&mut out, t, sign(i as i64) * c);
            }
        }
        let moved = self.m_deg[key[0]] + key[1..n].iter().map(|&i| self.a_deg[i]).sum::<i64>();
        let s = sign(n as i64 + self.a_deg[key[n]] * moved);
        for (k, c) in &self.left[key[n]][key[0]] {
            let mut t = vec![*k];
            t.extend_from_slice(&key[1..n]);
            add_to(&mut out, t, &s * c);
        }
        out
    }

    /// Internal differential with Koszul signs.
    pub fn internal_basis(&self, key: &[usize]) -> Chain {
        let mut out = Chain::new();
        let mut before = 0;
        for pos in 0..key.len() {
            let d = if pos == 0 { &self.d_m[key[0]] } else { &self.d_a[key[pos]] };
            for (k, c) in d {
                let mut t = key.to_vec();
                t[pos] = *k;
                add_to(&mut out, t, sign(before) * c);
            }
            before += if pos == 0 { self.m_deg[key[0]] } else { self.a_deg[key[pos]] };
        }
        out
    }

    /// `∂ = b + (−1)^n d` on a chain of length `n`.
    pub fn total_basis(&self, key: &[usize]) -> Chain {
        let mut out = self.hochschild_boundary_basis(key);
        let s = sign(key.len() as i64 - 1);
        for (k, c) in self.internal_basis(key) {
            add_to(&mut out, k, &s * c);
        }
        out
    }

    fn extend(&self, x: &Chain, f: impl Fn(&[usize]) -> Chain) -> Chain {
        let mut out = Chain::new();
        for (k, c) in x {
            for (k2, c2) in f(k) {
                add_to(&mut out, k2, c * c2);
            }
        }
        out
    }

    pub fn hochschild_boundary(&self, x: &Chain) -> Chain {
        self.extend(x, |k| self.hochschild_boundary_basis(k))
    }

    pub fn total_boundary(&self, x: &Chain) -> Chain {
        self.extend(x, |k| self.total_basis(k))
    }

    /// Matrix of `∂ : C_t → C_{t−1}` in the materialized bases; `None` if
    /// either degree is outside the built range.
    pub fn matrix(&self, t: i64) -> Option<Matrix> {
        let src = self.bases.get(&t)?;
        let tgt = self.bases.get(&(t - 1))?;
        let index = &self.index[&(t - 1)];
        let mut m = Matrix::zeros(tgt.len(), src.len());
        for (j, key) in src.iter().enumerate() {
            for (k, c) in self.total_basis(key) {
                let i = *index
                    .get(&k)
                    .expect("boundary of a materialized chain stays materialized");
                m.add_at(i, j, &c);
            }
        }
        Some(m)
    }

    /// Matrix of the Hochschild part `b` alone.
    pub fn hochschild_matrix(&self, t: i64) -> Option<Matrix> {
        let src = self.bases.get(&t)?;
        let tgt = self.bases.get(&(t - 1))?;
        let index = &self.index[&(t - 1)];
        let mut m = Matrix::zeros(tgt.len(), src.len());
        for (j, key) in src.iter().enumerate() {
            for (k, c) in self.hochschild_boundary_basis(key) {
                m.add_at(index[&k], j, &c);
            }
        }
        Some(m)
    }

    /// Homology in degree `t`; needs degrees `t − 1 ..= t + 1` built.
    pub fn homology(&self, t: i64) -> Result<usize, HochschildError> {
        let d_out = self.matrix(t).expect("degree t - 1 built");
        let d_in = self.matrix(t + 1).expect("degree t + 1 built");
        Ok(homology_dimension(&d_in, &d_out)?)
    }
}

/// `HH_*(A, M)` in the window, built to tensor length `truncation` and
/// compared with `truncation + 1`.
pub fn hochschild_homology(
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
        let cx = ChainComplex::new(m, n, range.clone());
        window.clone().map(|t| Ok((t, cx.homology(t)?))).collect()
    };
    let dims = dims_at(truncation)?;
    let stable = dims_at(truncation + 1)? == dims;
    Ok(HomologyReport {
        truncation,
        dims,
        stable,
    })
}
