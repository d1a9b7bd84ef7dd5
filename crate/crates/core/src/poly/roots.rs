//! Real algebraic numbers as isolating intervals, exact root isolation and
//! exact comparisons.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::{IntPoly, SturmChain};
use crate::error::{Error, Result};

/// Isolation width used when callers do not ask for one: `2^-32`.
pub fn default_precision() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 32)
}

/// A real root of an integer polynomial, pinned by a rational interval.
///
/// Either `lo == hi` and the root is that rational, or `lo < hi`, the
/// polynomial is nonzero at both ends and changes sign exactly once
/// inside the open interval.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicReal {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
    sign_hi: i8,
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "root of {} in ({}, {})", self.poly, self.lo, self.hi)
        }
    }
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) * half()
}

impl AlgebraicReal {
    pub fn from_rational(poly: IntPoly, r: BigRational) -> Self {
        debug_assert_eq!(poly.sign_at(&r), 0);
        AlgebraicReal {
            poly,
            lo: r.clone(),
            hi: r,
            sign_hi: 0,
        }
    }

    /// Root of `poly` in `(lo, hi]`, the only one of `poly` there, with a sign
    /// change. Callers guarantee the precondition.
    pub(crate) fn from_half_open(poly: IntPoly, lo: BigRational, hi: BigRational) -> Self {
        let s_hi = poly.sign_at(&hi);
        if s_hi == 0 {
            return Self::from_rational(poly, hi);
        }
        let mut r = AlgebraicReal {
            poly,
            lo,
            hi,
            sign_hi: s_hi,
        };
        // the lower end may sit on a neighbouring root: shrink past it
        while !r.is_exact() && r.poly.sign_at(&r.lo) == 0 {
            r.bisect();
        }
        r
    }

    /// Validated constructor: `poly` must have exactly one distinct root in
    /// the closed interval `[lo, hi]`, of odd multiplicity.
    pub fn new(poly: IntPoly, lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidBound(format!("empty interval ({lo}, {hi})")));
        }
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sqf = poly.square_free_part();
        let chain = SturmChain::new(&sqf);
        let at_lo = usize::from(sqf.sign_at(&lo) == 0);
        let count = chain.count_in(&lo, &hi) + at_lo;
        if count != 1 {
            return Err(Error::InvalidBound(format!(
                "{} has {count} distinct roots in [{lo}, {hi}]",
                poly
            )));
        }
        if at_lo == 1 {
            return Ok(Self::from_rational(sqf, lo));
        }
        Ok(Self::from_half_open(sqf, lo, hi))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn exact_value(&self) -> Option<&BigRational> {
        self.is_exact().then_some(&self.lo)
    }

    /// Halve the interval (or land on the root exactly).
    pub fn bisect(&mut self) {
        if self.is_exact() {
            return;
        }
        let m = midpoint(&self.lo, &self.hi);
        match self.poly.sign_at(&m) {
            0 => {
                self.lo = m.clone();
                self.hi = m;
                self.sign_hi = 0;
            }
            s if s == self.sign_hi => self.hi = m,
            _ => self.lo = m,
        }
    }

    /// Refine until the width is at most `precision`.
    pub fn refine_to(&mut self, precision: &BigRational) {
        while self.width() > *precision {
            self.bisect();
        }
    }

    pub fn refined(mut self, precision: &BigRational) -> Self {
        self.refine_to(precision);
        self
    }

    /// The same number with the sign flipped; a root of `poly(-x)`.
    pub fn negated(&self) -> Self {
        AlgebraicReal {
            poly: self.poly.reflect(),
            lo: -&self.hi,
            hi: -&self.lo,
            // q(x) = p(-x), so q(-lo) = p(lo)
            sign_hi: if self.is_exact() { 0 } else { self.poly.sign_at(&self.lo) },
        }
    }

    pub fn to_f64(&self) -> f64 {
        midpoint(&self.lo, &self.hi).to_f64().unwrap_or(f64::NAN)
    }

    /// Compare with a rational number.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        if self.is_exact() {
            return self.lo.cmp(r);
        }
        if *r <= self.lo {
            return Ordering::Greater;
        }
        if *r >= self.hi {
            return Ordering::Less;
        }
        match self.poly.sign_at(r) {
            0 => Ordering::Equal,
            s if s == self.sign_hi => Ordering::Less,
            _ => Ordering::Greater,
        }
    }

    fn separated(&self, other: &Self) -> Option<Ordering> {
        if self.is_exact() && other.is_exact() {
            return Some(self.lo.cmp(&other.lo));
        }
        if self.hi < other.lo || (self.hi == other.lo) {
            return Some(Ordering::Less);
        }
        if other.hi < self.lo || (other.hi == self.lo) {
            return Some(Ordering::Greater);
        }
        None
    }

    /// Whether the two numbers coincide, decided through the gcd of their
    /// defining polynomials. Only called on overlapping open intervals.
    fn shares_root_with(&self, other: &Self) -> bool {
        let h = self.poly.gcd(&other.poly);
        if h.degree().unwrap_or(0) == 0 {
            return false;
        }
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        if lo >= hi {
            return false;
        }
        let h = h.square_free_part();
        let chain = SturmChain::new(&h);
        let open = chain.count_in(&lo, &hi) - usize::from(h.sign_at(&hi) == 0);
        open > 0
    }

    /// Exact total order on real algebraic numbers.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        if let Some(o) = self.separated(other) {
            return o;
        }
        if self.is_exact() {
            return other.cmp_rational(&self.lo).reverse();
        }
        if other.is_exact() {
            return self.cmp_rational(&other.lo);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        // cheap attempts first; most comparisons separate quickly
        for _ in 0..6 {
            a.bisect();
            b.bisect();
            if let Some(o) = a.separated(&b) {
                return o;
            }
            if a.is_exact() || b.is_exact() {
                return a.cmp_exact(&b);
            }
        }
        if a.shares_root_with(&b) {
            return Ordering::Equal;
        }
        loop {
            if a.width() >= b.width() {
                a.bisect();
            } else {
                b.bisect();
            }
            if let Some(o) = a.separated(&b) {
                return o;
            }
            if a.is_exact() {
                return b.cmp_rational(&a.lo).reverse();
            }
            if b.is_exact() {
                return a.cmp_rational(&b.lo);
            }
        }
    }
}

/// One distinct real root with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub root: AlgebraicReal,
    pub multiplicity: usize,
}

impl IsolatedRoot {
    pub fn lo(&self) -> &BigRational {
        self.root.lo()
    }
    pub fn hi(&self) -> &BigRational {
        self.root.hi()
    }
}

/// All distinct real roots of a polynomial, ascending, in disjoint intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootIsolation {
    pub roots: Vec<IsolatedRoot>,
}

impl RootIsolation {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn largest(&self) -> Option<&IsolatedRoot> {
        self.roots.last()
    }

    /// Roots repeated by multiplicity, ascending.
    pub fn with_multiplicity(&self) -> Vec<AlgebraicReal> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.root.clone(), r.multiplicity))
            .collect()
    }
}

/// Power of two strictly above the modulus of every complex root (Cauchy).
fn root_bound(f: &IntPoly) -> BigRational {
    let lc = f.leading().unwrap().abs();
    let max = f.coeffs()[..f.coeffs().len() - 1]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_default();
    let ratio = (max + &lc - BigInt::one()) / &lc + BigInt::one();
    let mut b = BigInt::one();
    while b <= ratio {
        b <<= 1;
    }
    BigRational::from_integer(b)
}

/// True iff every root is real (counted with multiplicity).
pub fn is_real_rooted(f: &IntPoly) -> Result<bool> {
    let Some(d) = f.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    let real: usize = f
        .square_free_factors()
        .iter()
        .map(|(g, k)| k * SturmChain::new(g).count_real())
        .sum();
    Ok(real == d)
}

fn isolate_in(
    chain: &SturmChain,
    lo: BigRational,
    hi: BigRational,
    v_lo: usize,
    v_hi: usize,
    out: &mut Vec<(BigRational, BigRational)>,
) {
    let n = v_lo.saturating_sub(v_hi);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push((lo, hi));
        return;
    }
    let mid = midpoint(&lo, &hi);
    let v_mid = chain.variations_at(&mid);
    isolate_in(chain, lo, mid.clone(), v_lo, v_mid, out);
    isolate_in(chain, mid, hi, v_mid, v_hi, out);
}

fn distinct_roots(sqf: &IntPoly) -> Vec<AlgebraicReal> {
    if sqf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = SturmChain::new(sqf);
    let b = root_bound(sqf);
    let lo = -b.clone();
    let (v_lo, v_hi) = (chain.variations_at(&lo), chain.variations_at(&b));
    let mut cells = Vec::new();
    isolate_in(&chain, lo, b, v_lo, v_hi, &mut cells);
    cells
        .into_iter()
        .map(|(l, h)| AlgebraicReal::from_half_open(sqf.clone(), l, h))
        .collect()
}

/// Isolate every real root of a real-rooted polynomial into an interval of
/// width at most `precision`, with multiplicities.
pub fn isolate_roots(f: &IntPoly, precision: &BigRational) -> Result<RootIsolation> {
    if !is_real_rooted(f)? {
        return Err(Error::NotRealRooted);
    }
    isolate_real_roots(f, precision)
}

/// Like [`isolate_roots`] but does not insist on real-rootedness; complex
/// roots are just ignored.
pub(crate) fn isolate_real_roots(f: &IntPoly, precision: &BigRational) -> Result<RootIsolation> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let factors = f.square_free_factors();
    let sqf = f.square_free_part();
    let chains: Vec<(SturmChain, &IntPoly, usize)> = factors
        .iter()
        .map(|(g, k)| (SturmChain::new(g), g, *k))
        .collect();
    let roots = distinct_roots(&sqf)
        .into_iter()
        .map(|r| {
            let multiplicity = chains
                .iter()
                .find(|(chain, g, _)| {
                    if let Some(v) = r.exact_value() {
                        g.sign_at(v) == 0
                    } else {
                        chain.count_in(r.lo(), r.hi()) > 0
                    }
                })
                .map(|(_, _, k)| *k)
                .expect("every root of the square-free part lies on some factor");
            IsolatedRoot {
                root: r.refined(precision),
                multiplicity,
            }
        })
        .collect();
    Ok(RootIsolation { roots })
}

/// Largest real root, if any.
pub fn largest_root(f: &IntPoly) -> Option<AlgebraicReal> {
    if f.degree().unwrap_or(0) == 0 {
        return None;
    }
    let sqf = f.square_free_part();
    let chain = SturmChain::new(&sqf);
    let b = root_bound(&sqf);
    let mut lo = -b.clone();
    let mut hi = b;
    let v_hi = chain.variations_at(&hi);
    let mut v_lo = chain.variations_at(&lo);
    if v_lo <= v_hi {
        return None;
    }
    while v_lo - v_hi > 1 {
        let mid = midpoint(&lo, &hi);
        let v_mid = chain.variations_at(&mid);
        if v_mid > v_hi {
            lo = mid;
            v_lo = v_mid;
        } else {
            hi = mid;
        }
    }
    Some(AlgebraicReal::from_half_open(sqf, lo, hi))
}

/// Smallest real root, if any.
pub fn smallest_root(f: &IntPoly) -> Option<AlgebraicReal> {
    largest_root(&f.reflect()).map(|r| r.negated())
}

fn require_real_rooted(f: &IntPoly) -> Result<()> {
    if is_real_rooted(f)? {
        Ok(())
    } else {
        Err(Error::NotRealRooted)
    }
}

/// Exact comparison of the largest roots of two real-rooted polynomials.
pub fn compare_largest_roots(f: &IntPoly, g: &IntPoly) -> Result<Ordering> {
    require_real_rooted(f)?;
    require_real_rooted(g)?;
    let a = largest_root(f).ok_or(Error::DegreeMismatch("constant polynomial has no roots".into()))?;
    let b = largest_root(g).ok_or(Error::DegreeMismatch("constant polynomial has no roots".into()))?;
    Ok(a.cmp_exact(&b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn real_rootedness() {
        assert!(is_real_rooted(&p(&[-1, 0, 1])).unwrap());
        // (x+1)(x+2) + (x-1)(x-2) = 2x^2 + 4
        let s = &IntPoly::from_roots(&[-1, -2]) + &IntPoly::from_roots(&[1, 2]);
        assert_eq!(s, p(&[4, 0, 2]));
        assert!(!is_real_rooted(&s).unwrap());
        let m = &IntPoly::from_roots(&[1, 1]) * &IntPoly::from_roots(&[-3]);
        assert!(is_real_rooted(&m).unwrap());
        assert_eq!(is_real_rooted(&IntPoly::zero()), Err(Error::ZeroPolynomial));
        assert!(is_real_rooted(&p(&[5])).unwrap());
    }

    #[test]
    fn sqrt_two() {
        let prec = q(1, 100);
        let iso = isolate_roots(&p(&[-2, 0, 1]), &prec).unwrap();
        assert_eq!(iso.roots.len(), 2);
        for r in &iso.roots {
            assert!(r.root.width() <= prec);
            assert_eq!(r.multiplicity, 1);
        }
        let top = &iso.roots[1];
        assert!(top.lo() < &q(14143, 10000) && top.hi() > &q(14142, 10000));
        assert!(iso.roots[0].hi() < &q(-14, 10));
    }

    #[test]
    fn multiplicities_and_exact_roots() {
        // (x-1)^2 (x+3) x^3
        let f = &(&IntPoly::from_roots(&[1, 1]) * &IntPoly::from_roots(&[-3]))
            * &IntPoly::monomial(1.into(), 3);
        let iso = isolate_roots(&f, &default_precision()).unwrap();
        let mults: Vec<usize> = iso.roots.iter().map(|r| r.multiplicity).collect();
        assert_eq!(mults, vec![1, 3, 2]);
        assert_eq!(iso.total_multiplicity(), 6);
        assert_eq!(iso.roots[1].root.cmp_rational(&q(0, 1)), Ordering::Equal);
    }

    #[test]
    fn the_sum_with_a_lower_largest_root() {
        // (x+5)(x-9)(x-10) + (x+6)(x-1)(x-8)
        let f = &IntPoly::from_roots(&[-5, 9, 10]) + &IntPoly::from_roots(&[-6, 1, 8]);
        assert_eq!(f, p(&[498, -51, -17, 2]));
        let iso = isolate_roots(&f, &q(1, 1000)).unwrap();
        let vals: Vec<f64> = iso.roots.iter().map(|r| r.root.to_f64()).collect();
        for (v, want) in vals.iter().zip([-5.3, 6.4, 7.4]) {
            assert!((v - want).abs() < 0.05, "{vals:?}");
        }
    }

    #[test]
    fn compare_largest() {
        assert_eq!(
            compare_largest_roots(&p(&[-1, 1]), &p(&[-2, 1])).unwrap(),
            Ordering::Less
        );
        let f = p(&[-2, 0, 1]);
        let g = &f * &p(&[10, 1]);
        assert_eq!(compare_largest_roots(&f, &g).unwrap(), Ordering::Equal);
        let mu = p(&[-6, 0, 18, 0, -9, 0, 1]);
        assert_eq!(
            compare_largest_roots(&mu, &p(&[-8, 0, 1])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare_largest_roots(&p(&[4, 0, 2]), &f),
            Err(Error::NotRealRooted)
        );
    }

    #[test]
    fn k33_matching_root_window() {
        let mu = p(&[-6, 0, 18, 0, -9, 0, 1]);
        let r = largest_root(&mu).unwrap().refined(&q(1, 1000));
        assert!(r.lo() > &q(250, 100) && r.hi() < &q(252, 100));
    }

    #[test]
    fn smallest_is_negated_largest_of_reflection() {
        let f = IntPoly::from_roots(&[-7, 2, 3]);
        let s = smallest_root(&f).unwrap();
        assert_eq!(s.cmp_rational(&q(-7, 1)), Ordering::Equal);
        let g = p(&[-3, 0, 1]) * IntPoly::from_roots(&[5]);
        let s = smallest_root(&g).unwrap().refined(&q(1, 1 << 20));
        assert!((s.to_f64() + 3f64.sqrt()).abs() < 1e-5);
        let mut t = s.clone();
        for _ in 0..5 {
            t.bisect();
        }
        assert_eq!(t.cmp_exact(&s), Ordering::Equal);
    }

    #[test]
    fn validated_constructor() {
        assert!(AlgebraicReal::new(p(&[-8, 0, 1]), q(28, 10), q(29, 10)).is_ok());
        assert!(AlgebraicReal::new(p(&[-8, 0, 1]), q(-3, 1), q(3, 1)).is_err());
        let z = AlgebraicReal::new(p(&[0, 0, 1]), q(-1, 1), q(1, 1)).unwrap();
        assert_eq!(z.cmp_rational(&q(0, 1)), Ordering::Equal);
        // the first bisection lands on the root
        assert_eq!(z.refined(&q(1, 4)).exact_value(), Some(&q(0, 1)));
    }

    #[test]
    fn equal_irrationals_from_different_polynomials() {
        // sqrt2 + sqrt3 from its quartic vs from (x^2 - 2x sqrt..): use the
        // quartic times an unrelated factor
        let quartic = p(&[1, 0, -10, 0, 1]);
        let a = largest_root(&quartic).unwrap();
        let b = largest_root(&(&quartic * &p(&[-3, 0, 1]))).unwrap();
        assert_eq!(a.cmp_exact(&b), Ordering::Equal);
        let c = largest_root(&p(&[-8, 0, 1])).unwrap();
        assert_eq!(c.cmp_exact(&a), Ordering::Less);
        assert!((a.refined(&q(1, 1 << 30)).to_f64() - (2f64.sqrt() + 3f64.sqrt())).abs() < 1e-8);
    }
}
