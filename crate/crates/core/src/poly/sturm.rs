use num_rational::BigRational;
use num_traits::Signed;

use super::IntPoly;

/// Canonical Sturm sequence of a square-free polynomial, kept over the
/// integers: each remainder is a positive multiple of the textbook one.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    /// `f` should be square-free; callers pass [`IntPoly::square_free_part`].
    pub fn new(f: &IntPoly) -> Self {
        let mut polys = Vec::new();
        if f.is_zero() {
            return SturmChain { polys };
        }
        polys.push(f.clone());
        let d = f.derivative();
        if d.is_zero() {
            return SturmChain { polys };
        }
        polys.push(d.primitive());
        loop {
            let n = polys.len();
            let (a, b) = (&polys[n - 2], &polys[n - 1]);
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let mut r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem = lc(b)^(delta+1) * rem; undo a negative scale factor
            if b.leading().unwrap().is_negative() && delta % 2 == 0 {
                r = -r;
            }
            polys.push((-r).primitive());
        }
        SturmChain { polys }
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Sign variations at `t`, zeros dropped.
    pub fn variations_at(&self, t: &BigRational) -> usize {
        Self::count_variations(self.polys.iter().map(|p| p.sign_at(t)))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::count_variations(self.polys.iter().map(IntPoly::sign_at_pos_infinity))
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        Self::count_variations(self.polys.iter().map(IntPoly::sign_at_neg_infinity))
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_in(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// Distinct real roots overall.
    pub fn count_real(&self) -> usize {
        self.variations_at_neg_infinity()
            .saturating_sub(self.variations_at_pos_infinity())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn counts_roots_of_cubic() {
        // roots 1, 2, 3
        let f = IntPoly::from_roots(&[1, 2, 3]);
        let s = SturmChain::new(&f);
        assert_eq!(s.count_real(), 3);
        assert_eq!(s.count_in(&q(0, 1), &q(5, 2)), 2);
        // half-open: root at 2 counted in (1, 2] not in (2, 5/2]
        assert_eq!(s.count_in(&q(1, 1), &q(2, 1)), 1);
        assert_eq!(s.count_in(&q(2, 1), &q(5, 2)), 0);
    }

    #[test]
    fn no_real_roots() {
        let f = IntPoly::from_i64(&[4, 0, 2]);
        assert_eq!(SturmChain::new(&f).count_real(), 0);
    }

    #[test]
    fn negative_leading_coefficient() {
        let f = -IntPoly::from_roots(&[-2, 0, 5, 7]);
        let s = SturmChain::new(&f);
        assert_eq!(s.count_real(), 4);
        assert_eq!(s.count_in(&q(-3, 1), &q(1, 1)), 2);
    }
}
