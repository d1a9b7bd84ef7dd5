//! Characteristic polynomials by the division-free Samuelson-Berkowitz
//! recurrence.
//!
//! A fixed-width pass over `i128` with checked arithmetic handles the usual
//! small adjacency matrices; on overflow the same recurrence is rerun over
//! `BigInt`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

trait Ring: Clone + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Coefficients of `det(xI - M)` in descending order, or `None` on overflow.
fn berkowitz<T: Ring>(m: &IntMatrix) -> Option<Vec<T>> {
    let n = m.rows();
    let a = |i: usize, j: usize| T::from_i64(m.get(i, j));
    // p holds the characteristic polynomial of the trailing block m[k.., k..]
    let mut p = vec![T::one()];
    for k in (0..n).rev() {
        let s = n - k - 1; // size of the trailing block below row k
        // t = [1, -a_kk, -R C, -R A1 C, ..., -R A1^(s-1) C]
        let mut t = Vec::with_capacity(s + 2);
        t.push(T::one());
        t.push(a(k, k).neg()?);
        // v = A1^j C, starting at C (column below the pivot)
        let mut v: Vec<T> = (k + 1..n).map(|i| a(i, k)).collect();
        for j in 0..s {
            let mut rc = T::zero();
            for (idx, col) in (k + 1..n).enumerate() {
                rc = rc.add(&a(k, col).mul(&v[idx])?)?;
            }
            t.push(rc.neg()?);
            if j + 1 < s {
                let mut next = vec![T::zero(); s];
                for (ri, row) in (k + 1..n).enumerate() {
                    let mut acc = T::zero();
                    for (ci, col) in (k + 1..n).enumerate() {
                        let e = m.get(row, col);
                        if e != 0 {
                            acc = acc.add(&T::from_i64(e).mul(&v[ci])?)?;
                        }
                    }
                    next[ri] = acc;
                }
                v = next;
            }
        }
        // p_new = Toeplitz(t) * p, a (s+2) x (s+1) lower-triangular product
        let mut np = Vec::with_capacity(s + 2);
        for i in 0..s + 2 {
            let mut acc = T::zero();
            for j in 0..=i.min(s) {
                acc = acc.add(&t[i - j].mul(&p[j])?)?;
            }
            np.push(acc);
        }
        p = np;
    }
    Some(p)
}

fn descending_to_poly<T: Into<BigInt>>(desc: Vec<T>) -> IntPoly {
    IntPoly::new(desc.into_iter().rev().map(Into::into).collect())
}

/// `det(xI - M)` as an exact integer polynomial.
pub fn char_poly(m: &IntMatrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if let Some(p) = berkowitz::<i128>(m) {
        return Ok(descending_to_poly(p));
    }
    Ok(char_poly_big(m)?)
}

/// Same as [`char_poly`] but always over `BigInt`.
pub fn char_poly_big(m: &IntMatrix) -> Result<IntPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let p = berkowitz::<BigInt>(m).expect("bigint arithmetic never overflows");
    Ok(descending_to_poly(p))
}
