//! Dense integer matrices and rank-3 tensors.
//!
//! Everything in the adjacency basis of a scheme is exact integer
//! arithmetic; the float world (idempotents, Krein parameters) converts
//! through [`IntMatrix::to_f64`].

use nalgebra::DMatrix;
use std::fmt;
use std::ops::{Index, IndexMut};

/// Row-major dense matrix over `i64`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// All-ones matrix (the J of a scheme).
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![1; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_sum(&self, r: usize) -> i64 {
        self.row(r).iter().sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..r).all(|c| self[(r, c)] == self[(c, r)]))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Exact matrix product. Panics on dimension mismatch.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matmul");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let out_row = &mut out.data[r * other.cols..(r + 1) * other.cols];
                for (o, &b) in out_row.iter_mut().zip(orow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    /// Matrix-vector product with overflow detection; `None` on overflow.
    pub fn apply_checked(&self, v: &[i64]) -> Option<Vec<i64>> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0i64; self.rows];
        for r in 0..self.rows {
            let mut acc = 0i64;
            for (a, x) in self.row(r).iter().zip(v) {
                acc = acc.checked_add(a.checked_mul(*x)?)?;
            }
            out[r] = acc;
        }
        Some(out)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|&x| (x as f64) * (x as f64)).sum::<f64>().sqrt()
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)] as f64)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (r, c): (usize, usize)) -> &i64 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut i64 {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

/// Cubic tensor indexed `[k][i][j]`, the layout shared by intersection
/// numbers and Krein parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Clone + Default> Tensor3<T> {
    pub fn new(dim: usize) -> Self {
        Self { dim, data: vec![T::default(); dim * dim * dim] }
    }
}

impl<T> Tensor3<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for k in 0..dim {
            for i in 0..dim {
                for j in 0..dim {
                    data.push(f(k, i, j));
                }
            }
        }
        Self { dim, data }
    }

    pub fn iter_indexed(&self) -> impl Iterator<Item = ((usize, usize, usize), &T)> {
        let d = self.dim;
        self.data.iter().enumerate().map(move |(n, v)| {
            let k = n / (d * d);
            let i = (n / d) % d;
            let j = n % d;
            ((k, i, j), v)
        })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<T>>>
    where
        T: Clone,
    {
        (0..self.dim)
            .map(|k| {
                (0..self.dim)
                    .map(|i| (0..self.dim).map(|j| self[(k, i, j)].clone()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn from_nested(nested: Vec<Vec<Vec<T>>>) -> Option<Self> {
        let dim = nested.len();
        let mut data = Vec::with_capacity(dim * dim * dim);
        for plane in nested {
            if plane.len() != dim {
                return None;
            }
            for row in plane {
                if row.len() != dim {
                    return None;
                }
                data.extend(row);
            }
        }
        Some(Self { dim, data })
    }
}

impl<T> Index<(usize, usize, usize)> for Tensor3<T> {
    type Output = T;
    fn index(&self, (k, i, j): (usize, usize, usize)) -> &T {
        &self.data[(k * self.dim + i) * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize, usize)> for Tensor3<T> {
    fn index_mut(&mut self, (k, i, j): (usize, usize, usize)) -> &mut T {
        &mut self.data[(k * self.dim + i) * self.dim + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_identity() {
        let a = IntMatrix::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let i = IntMatrix::identity(2);
        assert_eq!(a.matmul(&i), a);
        assert_eq!(i.matmul(&a), a);
    }

    #[test]
    fn complete_graph_square() {
        // (J - I)^2 = (n-1)I + (n-2)(J - I) for n = 4
        let n = 4;
        let j = IntMatrix::ones(n, n);
        let a = IntMatrix::from_fn(n, n, |r, c| if r == c { 0 } else { 1 });
        let sq = a.matmul(&a);
        let expect = IntMatrix::from_fn(n, n, |r, c| {
            if r == c {
                (n - 1) as i64
            } else {
                (n - 2) as i64
            }
        });
        assert_eq!(sq, expect);
        assert_eq!(j.row_sum(0), n as i64);
    }

    #[test]
    fn apply_checked_overflow() {
        let m = IntMatrix::from_rows(vec![vec![i64::MAX, 1], vec![0, 1]]);
        assert!(m.apply_checked(&[2, 0]).is_none());
        assert_eq!(m.apply_checked(&[0, 3]), Some(vec![3, 3]));
    }

    #[test]
    fn tensor_roundtrip() {
        let t = Tensor3::from_fn(3, |k, i, j| (k * 100 + i * 10 + j) as i64);
        assert_eq!(t[(2, 1, 0)], 210);
        let nested = t.to_nested();
        assert_eq!(Tensor3::from_nested(nested).unwrap(), t);
    }
}
