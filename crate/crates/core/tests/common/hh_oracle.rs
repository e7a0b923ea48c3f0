//! Brute-force Hochschild homology of monomial algebras `ℚ[x]/(x^{top+1})`
//! with `x` in homological degree `weight`, written without the library:
//! chains are lists of exponents, the boundary is expanded term by term and
//! ranks come from a local rational elimination.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Rank by plain Gauss-Jordan elimination over ℚ.
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let v = &f * &rows[r][j];
                    rows[i][j] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Monomial `x^e` of `ℚ[x]/(x^{top+1})` in homological degree `e · weight`.
#[derive(Clone, Copy)]
pub struct Truncated {
    pub top: u32,
    pub weight: u32,
}

impl Truncated {
    fn degree(&self, e: u32) -> u32 {
        e * self.weight
    }
}

fn chains(alg: Truncated, total: u32) -> Vec<Vec<u32>> {
    // (e_0; e_1..e_n) with n + Σ deg = total
    let mut out = Vec::new();
    for n in 0..=total {
        let len = n as usize + 1;
        let mut idx = vec![0u32; len];
        loop {
            let deg: u32 = idx.iter().map(|&e| alg.degree(e)).sum();
            if n + deg == total {
                out.push(idx.clone());
            }
            let mut k = 0;
            while k < len {
                idx[k] += 1;
                if idx[k] <= alg.top {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == len {
                break;
            }
        }
    }
    out
}

fn boundary(alg: Truncated, c: &[u32]) -> Vec<(Vec<u32>, i64)> {
    let n = c.len() - 1;
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for i in 0..n {
        let e = c[i] + c[i + 1];
        if e > alg.top {
            continue;
        }
        let mut t = c[..i].to_vec();
        t.push(e);
        t.extend_from_slice(&c[i + 2..]);
        out.push((t, if i % 2 == 0 { 1 } else { -1 }));
    }
    let e = c[n] + c[0];
    if e <= alg.top {
        let moved: u32 = c[..n].iter().map(|&x| alg.degree(x)).sum();
        let odd = (n as u32 + alg.degree(c[n]) * moved) % 2 == 1;
        let mut t = vec![e];
        t.extend_from_slice(&c[1..n]);
        out.push((t, if odd { -1 } else { 1 }));
    }
    out
}

fn matrix(alg: Truncated, total: u32) -> Vec<Vec<BigRational>> {
    if total == 0 {
        return Vec::new();
    }
    let src = chains(alg, total);
    let tgt = chains(alg, total - 1);
    let index: HashMap<Vec<u32>, usize> = tgt.iter().cloned().zip(0..).collect();
    let mut rows = vec![vec![BigRational::zero(); src.len()]; tgt.len()];
    for (j, c) in src.iter().enumerate() {
        for (t, s) in boundary(alg, c) {
            rows[index[&t]][j] += BigRational::from_integer(BigInt::from(s));
        }
    }
    rows
}

pub fn homology(alg: Truncated, max: u32) -> Vec<usize> {
    (0..=max)
        .map(|t| {
            let dim = chains(alg, t).len();
            let out_rank = if t == 0 { 0 } else { rank(matrix(alg, t)) };
            let in_rank = rank(matrix(alg, t + 1));
            dim - out_rank - in_rank
        })
        .collect()
}

pub fn check_square_zero(alg: Truncated, max: u32) {
    for t in 2..=max {
        let a = matrix(alg, t - 1);
        let b = matrix(alg, t);
        for row in &a {
            for col in 0..b.first().map_or(0, |r| r.len()) {
                let s: BigRational = row.iter().zip(&b).map(|(x, r)| x * &r[col]).sum();
                assert!(s.is_zero());
            }
        }
    }
}

