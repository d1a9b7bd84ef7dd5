//! Exact univariate polynomials over the integers and the rationals.
//!
//! [`IntPoly`] is the workhorse: characteristic polynomials, matching
//! polynomials and conditional expectations all live here. Coefficients are
//! stored in ascending degree order and the vector is always trimmed so the
//! last entry is the (nonzero) leading coefficient.

mod charpoly;
mod interlace;
mod rational;
mod roots;
mod sturm;

pub use charpoly::{char_poly, char_poly_big};
pub use interlace::{common_interlacing, convex_combination_check, interlaces};
pub use rational::RatPoly;
pub use roots::{
    compare_largest_roots, default_precision, is_real_rooted, isolate_roots, largest_root,
    smallest_root, AlgebraicReal, IsolatedRoot, RootIsolation,
};
pub use sturm::SturmChain;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// Monic polynomial with the given integer roots (repeats give multiplicity).
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(Self::one(), |acc, &r| {
            &acc * &Self::from_i64(&[-r, 1])
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    /// Sign (-1, 0, 1) of the polynomial at a rational point.
    ///
    /// Uses the homogenised form `sum a_i p^i q^(d-i)` so no fraction is
    /// ever built.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let Some(d) = self.degree() else { return 0 };
        let (p, q) = (x.numer(), x.denom());
        debug_assert!(q.is_positive());
        let mut acc = self.coeffs[d].clone();
        let mut qpow = BigInt::one();
        for i in (0..d).rev() {
            qpow *= q;
            acc = acc * p + &self.coeffs[i] * &qpow;
        }
        sign_of(&acc)
    }

    pub fn sign_at_pos_infinity(&self) -> i8 {
        self.leading().map_or(0, sign_of)
    }

    pub fn sign_at_neg_infinity(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = sign_of(self.leading().unwrap());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `f(x + c)` by repeated synthetic division (Taylor shift).
    pub fn taylor_shift(&self, c: &BigInt) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &a[j + 1] * c;
                a[j] += t;
            }
        }
        Self::new(a)
    }

    /// Only even powers occur.
    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % 2 == 0 || c.is_zero())
    }

    /// Only odd powers occur.
    pub fn is_odd(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % 2 == 1 || c.is_zero())
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide out the content; the sign of the leading coefficient is kept.
    pub fn primitive(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Primitive part with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive();
        if p.leading().is_some_and(|c| c.is_negative()) {
            -p
        } else {
            p
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let Some(mut rd) = self.degree() else { return Self::zero() };
        if rd < dd {
            return self.clone();
        }
        let steps = rd - dd + 1;
        let mut done = 0usize;
        while r.len() > dd && !r.is_empty() {
            rd = r.len() - 1;
            let t = r[rd].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[rd - dd + i] -= &t * dc;
            }
            done += 1;
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        // remaining factors of lc keep the result equal to the textbook prem
        let mut out = Self::new(r);
        for _ in done..steps {
            out = out.scale(&lc);
        }
        out
    }

    /// Long division over the integers. Returns `None` if some quotient
    /// coefficient would not be integral.
    pub fn checked_div_rem(&self, d: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let dd = d.degree()?;
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        while r.len() > dd {
            let rd = r.len() - 1;
            let (t, rem) = r[rd].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[rd - dd + i] -= &t * dc;
            }
            q[rd - dd] = t;
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Some((Self::new(q), Self::new(r)))
    }

    /// Exact quotient if `d` divides `self` in `Z[x]`.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.checked_div_rem(d)?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &IntPoly) -> bool {
        other.exact_div(self).is_some()
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    /// Primitive remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.normalized()
    }

    /// Product of the distinct irreducible factors, primitive with positive
    /// leading coefficient.
    pub fn square_free_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.normalized();
        }
        let g = self.gcd(&self.derivative());
        self.normalized()
            .exact_div(&g)
            .expect("gcd divides its argument")
            .normalized()
    }

    /// Factors `f_k` (square-free, pairwise coprime, primitive) with
    /// multiplicities `k` such that `f = c * prod f_k^k`.
    pub fn square_free_factors(&self) -> Vec<(IntPoly, usize)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        // g_0 = f, g_k = gcd(g_{k-1}, g_{k-1}'), h_k = g_{k-1} / g_k holds
        // every factor of multiplicity >= k.
        let mut hs = Vec::new();
        let mut g = self.normalized();
        while g.degree().unwrap_or(0) > 0 {
            let next = g.gcd(&g.derivative());
            hs.push(g.exact_div(&next).expect("gcd divides").normalized());
            g = next;
        }
        let mut out = Vec::new();
        for k in 0..hs.len() {
            let f = if k + 1 < hs.len() {
                hs[k].exact_div(&hs[k + 1]).expect("nested square-free parts")
            } else {
                hs[k].clone()
            };
            if f.degree().unwrap_or(0) > 0 {
                out.push((f.normalized(), k + 1));
            }
        }
        out
    }

    /// Degree-ascending, space-separated coefficients.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parse the text format: optional `#` comment lines, then one line of
    /// degree-ascending integer coefficients.
    pub fn parse_text(text: &str) -> Result<IntPoly> {
        let mut found = None;
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            if found.is_some() {
                return Err(Error::Parse {
                    line: i + 1,
                    message: "unexpected extra line after coefficients".into(),
                });
            }
            let coeffs = t
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<BigInt>().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("bad integer coefficient {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            found = Some(IntPoly::new(coeffs));
        }
        found.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "no coefficient line".into(),
        })
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly[{}]", self.to_text())
    }
}

/// Human-readable form, highest degree first, e.g. `x^2 - 2*x + 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new(
            (0..n)
                .map(|i| self.coeff(i) + rhs.coeff(i))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new(
            (0..n)
                .map(|i| self.coeff(i) - rhs.coeff(i))
                .collect(),
        )
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -(self.clone())
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |acc, p| &acc + &p)
    }
}
