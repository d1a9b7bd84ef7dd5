//! Matching counts and the matching polynomial.

use num_bigint::{BigInt, BigUint};

use crate::bound::{compare_root_to_bound, RootBound, Verdict};
use crate::graph::Graph;
use crate::poly::IntPoly;

/// `m_i`, the number of matchings with `i` edges, for `i = 0..=n/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingCounts {
    pub counts: Vec<BigUint>,
}

impl MatchingCounts {
    /// `m_i`, zero past the end.
    pub fn get(&self, i: usize) -> BigUint {
        self.counts.get(i).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

/// Counts every matching once, as the increasing sequence of its edges:
/// matchings of `G` are those avoiding `e` plus those using `e`.
pub fn matching_counts(g: &Graph) -> MatchingCounts {
    let n = g.vertex_count();
    let mut acc = vec![0u128; n / 2 + 1];
    acc[0] = 1;
    let mut used = vec![false; n];
    extend(g.edges(), 0, 0, &mut used, &mut acc);
    MatchingCounts {
        counts: acc.into_iter().map(BigUint::from).collect(),
    }
}

fn extend(edges: &[(usize, usize)], start: usize, size: usize, used: &mut [bool], acc: &mut [u128]) {
    for (i, &(u, v)) in edges.iter().enumerate().skip(start) {
        if used[u] || used[v] {
            continue;
        }
        // enumeration visits each matching, so this cannot overflow in practice
        acc[size + 1] = acc[size + 1].checked_add(1).expect("matching count overflow");
        used[u] = true;
        used[v] = true;
        extend(edges, i + 1, size + 1, used, acc);
        used[u] = false;
        used[v] = false;
    }
}

/// `mu_G(x) = sum_i (-1)^i m_i x^(n-2i)`.
pub fn matching_polynomial(g: &Graph) -> IntPoly {
    polynomial_from_counts(g.vertex_count(), &matching_counts(g))
}

pub fn polynomial_from_counts(n: usize, m: &MatchingCounts) -> IntPoly {
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (i, c) in m.counts.iter().enumerate() {
        let c = BigInt::from(c.clone());
        coeffs[n - 2 * i] = if i % 2 == 0 { c } else { -c };
    }
    IntPoly::new(coeffs)
}

/// The largest root of `mu_G`.
pub fn matching_root_bound(g: &Graph) -> RootBound {
    RootBound::matching_root(g).expect("matching polynomials are real-rooted")
}

/// `mu_G` against `2 sqrt(d-1)` for the maximum degree `d`. `None` when
/// `d <= 1`, where the closed form is below the true root (`K_2` has roots
/// `+-1`).
pub fn heilmann_lieb_verdict(g: &Graph) -> Option<Verdict> {
    let d = g.max_degree();
    if d <= 1 {
        return None;
    }
    let b = RootBound::regular(d).ok()?;
    Some(compare_root_to_bound(&matching_polynomial(g), &b).expect("real-rooted"))
}
