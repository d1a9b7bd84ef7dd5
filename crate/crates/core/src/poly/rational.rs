use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPoly;

/// Polynomial with rational coefficients, ascending degree, trimmed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly::default()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_scaled(&mut self, p: &IntPoly, w: &BigRational) {
        if w.is_zero() {
            return;
        }
        if self.coeffs.len() < p.coeffs().len() {
            self.coeffs.resize(p.coeffs().len(), BigRational::zero());
        }
        for (c, a) in self.coeffs.iter_mut().zip(p.coeffs()) {
            *c += w * BigRational::from_integer(a.clone());
        }
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = RatPoly::new(trimmed);
    }

    /// Least common multiple of the denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Multiply by the (positive) common denominator. Roots are unchanged.
    pub fn clear_denominators(&self) -> IntPoly {
        let l = BigRational::from_integer(self.common_denominator());
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * &l).to_integer())
                .collect(),
        )
    }

    /// `p(x + c)`.
    pub fn taylor_shift(&self, c: &BigRational) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &a[j + 1] * c;
                a[j] += t;
            }
        }
        RatPoly::new(a)
    }

    pub fn from_int(p: &IntPoly) -> Self {
        RatPoly::new(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "RatPoly[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clearing_denominators_scales_positively() {
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new((-1).into(), 3.into());
        let p = RatPoly::new(vec![half, third, BigRational::one()]);
        assert_eq!(p.clear_denominators(), IntPoly::from_i64(&[3, -2, 6]));
    }

    #[test]
    fn shift() {
        let p = RatPoly::from_int(&IntPoly::from_roots(&[2]));
        let s = p.taylor_shift(&BigRational::from_integer(2.into()));
        assert_eq!(s.clear_denominators(), IntPoly::x());
    }
}
