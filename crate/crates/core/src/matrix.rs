//! Small dense matrices: integer ones for adjacency-style inputs and
//! rational ones for the determinant identities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(format!(
                "ragged rows: expected {c} columns, found {}",
                bad.len()
            )));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
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

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }

    /// Principal submatrix on the given (sorted) index set.
    pub fn principal(&self, idx: &[usize]) -> Self {
        let k = idx.len();
        let mut m = Self::zeros(k, k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[i64]>::to_vec).collect()
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            n_rows: self.rows,
            n_cols: self.cols,
            data: self
                .data
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        }
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    n_rows: usize,
    n_cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(RatMatrix {
            n_rows: r,
            n_cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.n_rows
    }

    pub fn cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n_cols + j]
    }

    /// `self + v v^T`.
    pub fn plus_outer(&self, v: &[BigRational]) -> Result<Self> {
        if !(self.n_rows == self.n_cols && v.len() == self.n_rows) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {}x{} matrix",
                v.len(),
                self.n_rows,
                self.n_cols
            )));
        }
        let mut out = self.clone();
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                out.data[i * self.n_cols + j] += &v[i] * &v[j];
            }
        }
        Ok(out)
    }

    /// Determinant by Gaussian elimination over the rationals.
    pub fn det(&self) -> Result<BigRational> {
        if self.n_rows != self.n_cols {
            return Err(Error::NotSquare {
                rows: self.n_rows,
                cols: self.n_cols,
            });
        }
        let n = self.n_rows;
        let mut a = self.data.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(BigRational::zero());
            };
            if piv != col {
                for k in 0..n {
                    a.swap(piv * n + k, col * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                let f = &a[r * n + col] / &p;
                if f.is_zero() {
                    continue;
                }
                for k in col..n {
                    let t = &f * &a[col * n + k];
                    a[r * n + k] -= t;
                }
            }
        }
        Ok(det)
    }

    /// Solve `self * x = b`.
    pub fn solve(&self, b: &[BigRational]) -> Result<Vec<BigRational>> {
        if self.n_rows != self.n_cols {
            return Err(Error::NotSquare {
                rows: self.n_rows,
                cols: self.n_cols,
            });
        }
        let n = self.n_rows;
        if b.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {n}x{n} system",
                b.len()
            )));
        }
        let w = n + 1;
        let mut a: Vec<BigRational> = Vec::with_capacity(n * w);
        for i in 0..n {
            a.extend(self.data[i * n..(i + 1) * n].iter().cloned());
            a.push(b[i].clone());
        }
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[r * w + col].is_zero())
                .ok_or(Error::Singular)?;
            if piv != col {
                for k in 0..w {
                    a.swap(piv * w + k, col * w + k);
                }
            }
            let p = a[col * w + col].clone();
            for k in col..w {
                a[col * w + k] /= &p;
            }
            for r in 0..n {
                if r == col || a[r * w + col].is_zero() {
                    continue;
                }
                let f = a[r * w + col].clone();
                for k in col..w {
                    let t = &f * &a[col * w + k];
                    a[r * w + k] -= t;
                }
            }
        }
        Ok((0..n).map(|i| a[i * w + n].clone()).collect())
    }
}

pub(crate) fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(IntMatrix::from_rows(vec![vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn rational_det_and_solve() {
        let m = RatMatrix::from_rows(vec![
            vec![q(2, 1), q(1, 1)],
            vec![q(1, 1), q(3, 1)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), q(5, 1));
        let x = m.solve(&[q(1, 1), q(0, 1)]).unwrap();
        assert_eq!(x, vec![q(3, 5), q(-1, 5)]);
        let sing = RatMatrix::from_rows(vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]]).unwrap();
        assert_eq!(sing.det().unwrap(), q(0, 1));
        assert_eq!(sing.solve(&[q(1, 1), q(1, 1)]), Err(Error::Singular));
    }

    #[test]
    fn principal_submatrix() {
        let m = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![2, 5, 6], vec![3, 6, 9]]).unwrap();
        assert_eq!(m.principal(&[0, 2]).to_rows(), vec![vec![1, 3], vec![3, 9]]);
        assert!(m.is_symmetric());
    }
}
