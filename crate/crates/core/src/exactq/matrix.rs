use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, one, zero, Rational};
use super::ExactError;

/// Dense row-major matrix over ℚ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Integer row echelon form produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(ExactError::Ragged);
        }
        Ok(Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for integer literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        Self::from_rows(v).expect("ragged literal")
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, cols: &[Vec<Rational>]) -> Self {
        Self::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Rational) {
        self.data[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::Shape {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// Kronecker product; the left factor indexes the more significant digit.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * r2, self.cols * c2, |r, c| {
            let a = self.get(r / r2, c / c2);
            if a.is_zero() {
                zero()
            } else {
                a * other.get(r % r2, c % c2)
            }
        })
    }

    /// Rank via fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the null space. Every returned vector `v` satisfies `self * v = 0`
    /// exactly, and there are `cols - rank` of them.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let ech = self.echelon();
        let is_pivot = {
            let mut p = vec![false; self.cols];
            for &c in &ech.pivots {
                p[c] = true;
            }
            p
        };
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![zero(); self.cols];
            x[free] = one();
            for (k, &pc) in ech.pivots.iter().enumerate().rev() {
                let row = &ech.rows[k];
                let mut acc = zero();
                for j in pc + 1..self.cols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        acc += Rational::from_integer(row[j].clone()) * &x[j];
                    }
                }
                x[pc] = -acc / Rational::from_integer(row[pc].clone());
            }
            basis.push(x);
        }
        basis
    }

    /// Some solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let ech = aug.echelon();
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![zero(); self.cols];
        for (k, &pc) in ech.pivots.iter().enumerate().rev() {
            let row = &ech.rows[k];
            let mut acc = Rational::from_integer(row[self.cols].clone());
            for j in pc + 1..self.cols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    acc -= Rational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[pc] = acc / Rational::from_integer(row[pc].clone());
        }
        Some(x)
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![zero(); n];
            e[j] = one();
            cols.push(self.solve(&e)?);
        }
        Some(Matrix::from_columns(n, &cols))
    }

    /// Determinant of a square matrix via Bareiss elimination.
    pub fn determinant(&self) -> Option<Rational> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(one());
        }
        let (rows, denom) = self.integer_rows();
        let mut m = rows;
        let mut prev = BigInt::one();
        let mut neg = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
                return Some(zero());
            };
            if p != k {
                m.swap(p, k);
                neg = !neg;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = exact_div(v, &prev);
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det = Rational::new(m[n - 1][n - 1].clone(), denom);
        Some(if neg { -det } else { det })
    }

    /// Rows scaled to integers; returns them and the product of the scale
    /// factors (so that `det(original) = det(scaled) / factor`).
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut total = BigInt::one();
        let rows = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                total *= &l;
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect::<Vec<_>>()
            })
            .collect();
        (rows, total)
    }

    fn echelon(&self) -> Echelon {
        let (mut m, _) = self.integer_rows();
        let (nr, nc) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..nc {
            if r == nr {
                break;
            }
            let Some(p) = (r..nr).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            for i in r + 1..nr {
                for j in c + 1..nc {
                    let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    m[i][j] = exact_div(v, &prev);
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        Echelon { rows: m, pivots }
    }
}

fn exact_div(v: BigInt, d: &BigInt) -> BigInt {
    let (quot, rem) = v.div_rem(d);
    debug_assert!(rem.is_zero(), "Bareiss division not exact");
    quot
}

/// dim ker(d_out) − rank(d_in) for a composable pair `V --d_in--> W --d_out--> U`.
pub fn homology_dimension(d_in: &Matrix, d_out: &Matrix) -> Result<usize, ExactError> {
    if d_in.rows() != d_out.cols() {
        return Err(ExactError::Shape {
            left: (d_out.rows(), d_out.cols()),
            right: (d_in.rows(), d_in.cols()),
        });
    }
    if !d_out.checked_mul(d_in)?.is_zero() {
        return Err(ExactError::CompositionNotZero);
    }
    let kernel = d_out.cols() - d_out.rank();
    let image = d_in.rank();
    Ok(kernel - image)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

impl std::ops::Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl std::ops::Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl std::ops::Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(format_rational).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use super::rational::serde_rational::RationalRepr;
        let raw = Vec::<Vec<RationalRepr>>::deserialize(d)?;
        let rows = raw
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(RationalRepr::into_rational)
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rational::{q, qr};
    use proptest::prelude::*;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(Matrix::zeros(2, 3).rank(), 0);
        assert_eq!(Matrix::zeros(0, 4).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::zeros(2, 3).kernel_basis().len(), 3);
        assert!(Matrix::identity(4).kernel_basis().is_empty());
        let k = Matrix::from_i64(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(&k[0][0] + &k[0][1], q(0));
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn homology_examples() {
        // Q with zero maps in and out.
        let d_in = Matrix::zeros(1, 0);
        let d_out = Matrix::zeros(0, 1);
        assert_eq!(homology_dimension(&d_in, &d_out).unwrap(), 1);
        assert_eq!(
            homology_dimension(&Matrix::identity(1), &Matrix::zeros(0, 1)).unwrap(),
            0
        );
        let d_in = Matrix::from_i64(&[&[1], &[0]]);
        let d_out = Matrix::from_i64(&[&[0, 1]]);
        assert_eq!(homology_dimension(&d_in, &d_out).unwrap(), 0);
        let bad_out = Matrix::from_i64(&[&[1, 0]]);
        assert!(matches!(
            homology_dimension(&d_in, &bad_out),
            Err(ExactError::CompositionNotZero)
        ));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.determinant().unwrap(), q(-1));
        assert_eq!(m.inverse().unwrap(), m);
        let s = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert!(s.inverse().is_none());
        let h = Matrix::from_fn(3, 3, |r, c| qr(1, (r + c + 1) as i64));
        assert_eq!(h.determinant().unwrap(), qr(1, 2160));
        assert_eq!(&h * &h.inverse().unwrap(), Matrix::identity(3));
    }

    #[test]
    fn solve_inconsistent() {
        let m = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert!(m.solve(&[q(1), q(3)]).is_none());
        let x = m.solve(&[q(1), q(2)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(1), q(2)]);
    }

    #[test]
    fn serde_shape() {
        let m = Matrix::from_rows(vec![vec![qr(1, 2), q(3)]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/2","3"]]"#);
        let back: Matrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| qr(n, d))
    }

    fn matrix_strategy() -> impl Strategy<Value = Matrix> {
        (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(small_rational(), r * c)
                .prop_map(move |v| Matrix::from_fn(r, c, |i, j| v[i * c + j].clone()))
        })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in matrix_strategy()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(m in matrix_strategy()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.cols(), m.rank() + k.len());
            for v in &k {
                prop_assert!(is_zero_vec(&m.mul_vec(v)));
            }
        }

        #[test]
        fn row_space_reconstruction_is_exact(m in matrix_strategy()) {
            // Every row lies in the span of the independent rows found by
            // elimination on the transpose: solving is exact, never approximate.
            let t = m.transpose();
            for r in 0..m.rows() {
                let row = m.row(r).to_vec();
                let x = t.solve(&row).expect("row lies in row space");
                prop_assert_eq!(t.mul_vec(&x), row);
            }
        }
    }
}
