//! Algebraic thresholds that eigenvalues are certified against.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Side};
use crate::matching::matching_polynomial;
use crate::poly::{default_precision, is_real_rooted, largest_root, AlgebraicReal, IntPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `2 sqrt(d-1)`, the spectral radius of the infinite d-regular tree.
    Regular(usize),
    /// `sqrt(c-1) + sqrt(d-1)`, the (c,d)-biregular tree; stored with `c <= d`.
    Biregular(usize, usize),
    /// Largest root of a matching polynomial (or of a finite tree).
    MatchingRoot,
    Custom,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Regular(d) => write!(f, "regular({d})"),
            BoundKind::Biregular(c, d) => write!(f, "biregular({c},{d})"),
            BoundKind::MatchingRoot => write!(f, "matching-root"),
            BoundKind::Custom => write!(f, "custom"),
        }
    }
}

/// A real algebraic threshold: the unique root of `minimal_poly` inside the
/// isolating interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBound {
    kind: BoundKind,
    minimal_poly: IntPoly,
    root: AlgebraicReal,
    degenerate: bool,
}

/// Where the largest root of a polynomial sits relative to a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    AllBelow,
    Touches,
    Exceeds,
}

impl Verdict {
    pub fn from_ordering(o: Ordering) -> Verdict {
        match o {
            Ordering::Less => Verdict::AllBelow,
            Ordering::Equal => Verdict::Touches,
            Ordering::Greater => Verdict::Exceeds,
        }
    }

    /// `ALL_BELOW` and `TOUCHES` both satisfy an "at most" claim.
    pub fn is_within(self) -> bool {
        self != Verdict::Exceeds
    }

    /// The worse of two verdicts.
    pub fn worst(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Exceeds, _) | (_, Exceeds) => Exceeds,
            (Touches, _) | (_, Touches) => Touches,
            _ => AllBelow,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::AllBelow => "ALL_BELOW",
            Verdict::Touches => "TOUCHES",
            Verdict::Exceeds => "EXCEEDS",
        })
    }
}

impl RootBound {
    fn from_largest_root(kind: BoundKind, minimal_poly: IntPoly, degenerate: bool) -> Result<Self> {
        let root = largest_root(&minimal_poly)
            .ok_or_else(|| Error::InvalidBound(format!("{minimal_poly} has no real root")))?
            .refined(&default_precision());
        Ok(RootBound {
            kind,
            minimal_poly,
            root,
            degenerate,
        })
    }

    /// `2 sqrt(d-1)` as the largest root of `x^2 - 4(d-1)`.
    pub fn regular(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidBound("regular bound needs d >= 1".into()));
        }
        let c = BigInt::from(4) * BigInt::from(d - 1);
        let poly = IntPoly::new(vec![-c, 0.into(), 1.into()]);
        // for d = 1 the formula gives 0, not the radius of the (finite) cover
        Self::from_largest_root(BoundKind::Regular(d), poly, d <= 1)
    }

    /// `sqrt(c-1) + sqrt(d-1)` as the largest root of
    /// `x^4 - 2(c+d-2) x^2 + (c-d)^2`.
    pub fn biregular(c: usize, d: usize) -> Result<Self> {
        if c == 0 || d == 0 {
            return Err(Error::InvalidBound("biregular bound needs c, d >= 1".into()));
        }
        let (c, d) = (c.min(d), c.max(d));
        let s = BigInt::from(c + d - 2);
        let diff = BigInt::from(d - c);
        let poly = IntPoly::new(vec![
            &diff * &diff,
            0.into(),
            -(BigInt::from(2) * s),
            0.into(),
            1.into(),
        ]);
        Self::from_largest_root(BoundKind::Biregular(c, d), poly, c <= 1)
    }

    /// Largest root of `mu`, which must be real-rooted.
    pub fn largest_root_of(mu: &IntPoly) -> Result<Self> {
        if mu.degree().unwrap_or(0) == 0 {
            // no roots at all (empty graph): the threshold collapses to 0
            let x = IntPoly::x();
            let root = AlgebraicReal::from_rational(x.clone(), BigRational::from_integer(0.into()));
            return Ok(RootBound {
                kind: BoundKind::MatchingRoot,
                minimal_poly: x,
                root,
                degenerate: true,
            });
        }
        if !is_real_rooted(mu)? {
            return Err(Error::NotRealRooted);
        }
        Self::from_largest_root(BoundKind::MatchingRoot, mu.clone(), false)
    }

    /// The largest root of the matching polynomial of `g`.
    pub fn matching_root(g: &Graph) -> Result<Self> {
        Self::largest_root_of(&matching_polynomial(g))
    }

    /// User-supplied threshold: `poly` must have exactly one root in `[lo, hi]`.
    pub fn custom(poly: IntPoly, lo: BigRational, hi: BigRational) -> Result<Self> {
        let root = AlgebraicReal::new(poly.clone(), lo, hi)?;
        Ok(RootBound {
            kind: BoundKind::Custom,
            minimal_poly: poly,
            root,
            degenerate: false,
        })
    }

    /// Wrap an already isolated root.
    pub fn from_root(kind: BoundKind, minimal_poly: IntPoly, root: AlgebraicReal) -> Self {
        RootBound {
            kind,
            minimal_poly,
            root,
            degenerate: false,
        }
    }

    pub fn kind(&self) -> BoundKind {
        self.kind
    }

    pub fn minimal_poly(&self) -> &IntPoly {
        &self.minimal_poly
    }

    pub fn value(&self) -> &AlgebraicReal {
        &self.root
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (self.root.lo(), self.root.hi())
    }

    /// The closed form does not describe the universal cover (finite covers
    /// such as `K_2` or stars).
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn to_f64(&self) -> f64 {
        self.root.to_f64()
    }

    /// Where an algebraic number sits relative to this bound.
    pub fn verdict_for(&self, x: &AlgebraicReal) -> Verdict {
        Verdict::from_ordering(x.cmp_exact(&self.root))
    }
}

/// Exact classification of the largest root of `f` against `b`.
pub fn compare_root_to_bound(f: &IntPoly, b: &RootBound) -> Result<Verdict> {
    if !is_real_rooted(f)? {
        return Err(Error::NotRealRooted);
    }
    Ok(match largest_root(f) {
        None => Verdict::AllBelow,
        Some(r) => b.verdict_for(&r),
    })
}

/// `(c, d)` with `c <= d` if `g` is bipartite and, in every component, one
/// side has all degrees `c` and the other all degrees `d`.
pub fn biregular_degrees(g: &Graph) -> Option<(usize, usize)> {
    let part = g.bipartition()?;
    let (comp, count) = g.components();
    let deg = g.degrees();
    let mut pair = None;
    for c in 0..count {
        let mut left = None;
        let mut right = None;
        for v in (0..g.vertex_count()).filter(|&v| comp[v] == c) {
            let slot = match part.side[v] {
                Side::Left => &mut left,
                Side::Right => &mut right,
            };
            match *slot {
                None => *slot = Some(deg[v]),
                Some(x) if x != deg[v] => return None,
                Some(_) => {}
            }
        }
        let (l, r) = (left?, right?);
        let p = (l.min(r), l.max(r));
        if p.0 == 0 || pair.is_some_and(|q| q != p) {
            return None;
        }
        pair = Some(p);
    }
    pair
}

/// Spectral radius of the universal cover where a closed form is known
/// (regular or biregular bipartite graphs), else the largest matching root,
/// which never exceeds it.
pub fn cover_bound(g: &Graph) -> RootBound {
    let closed = match g.regular_degree() {
        Some(d) if d >= 1 => RootBound::regular(d).ok(),
        _ => biregular_degrees(g).and_then(|(c, d)| RootBound::biregular(c, d).ok()),
    };
    closed.unwrap_or_else(|| {
        RootBound::matching_root(g).expect("matching polynomials are real-rooted")
    })
}

pub(crate) fn fmt_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub(crate) fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}
