//! Expected characteristic polynomials over random signings, and the
//! determinantal identities behind their real-rootedness.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, PartialSigning, Signing};
use crate::matrix::{dot, IntMatrix, RatMatrix};
use crate::poly::{char_poly, IntPoly, RatPoly};

/// Largest edge (or subset) count the enumeration routines accept.
pub const BRUTE_FORCE_MAX_EDGES: usize = 20;

/// Independent per-edge probabilities of the sign `+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeProbabilities {
    p: Vec<BigRational>,
}

impl EdgeProbabilities {
    pub fn new(p: Vec<BigRational>) -> Result<Self> {
        check_probabilities(&p)?;
        Ok(EdgeProbabilities { p })
    }

    pub fn uniform(m: usize) -> Self {
        EdgeProbabilities {
            p: vec![BigRational::new(1.into(), 2.into()); m],
        }
    }

    pub fn as_slice(&self) -> &[BigRational] {
        &self.p
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }
}

fn check_probabilities(p: &[BigRational]) -> Result<()> {
    let one = BigRational::one();
    match p.iter().find(|x| x.is_negative() || **x > one) {
        Some(bad) => Err(Error::InvalidWeights(format!("probability {bad} outside [0, 1]"))),
        None => Ok(()),
    }
}

fn enumeration_guard(m: usize, what: &str) -> Result<()> {
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::BudgetExceeded(format!(
            "{what}: {m} > {BRUTE_FORCE_MAX_EDGES} would need 2^{m} terms"
        )));
    }
    Ok(())
}

/// `sum_s (prod_{s_i=+1} p_i)(prod_{s_i=-1} (1-p_i)) det(xI - A_s)` by
/// enumerating all signings.
pub fn expected_charpoly_bruteforce(g: &Graph, p: &EdgeProbabilities) -> Result<RatPoly> {
    let m = g.edge_count();
    if p.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            actual: p.len(),
        });
    }
    enumeration_guard(m, "edges")?;
    let one = BigRational::one();
    let mut sum = RatPoly::zero();
    for mask in 0u64..(1u64 << m) {
        let s = Signing::from_mask(m, mask);
        let mut w = one.clone();
        for (sign, pi) in s.signs().iter().zip(p.as_slice()) {
            if *sign > 0 {
                w *= pi;
            } else {
                w *= &one - pi;
            }
        }
        if w.is_zero() {
            continue;
        }
        let f = char_poly(&g.signed_adjacency(&s)?)?;
        sum.add_scaled(&f, &w);
    }
    Ok(sum)
}

/// Plain sum of `det(xI - A_s)` over all completions `s` of `partial`, by
/// enumeration.
pub fn conditional_expectation_bruteforce(g: &Graph, partial: &PartialSigning) -> Result<IntPoly> {
    check_partial(g, partial)?;
    let free: Vec<usize> = (0..partial.len())
        .filter(|&e| partial.assignments()[e].is_none())
        .collect();
    enumeration_guard(free.len(), "unfixed edges")?;
    let mut sum = IntPoly::zero();
    for mask in 0u64..(1u64 << free.len()) {
        let mut signs: Vec<i8> = partial.assignments().iter().map(|a| a.unwrap_or(1)).collect();
        for (bit, &e) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                signs[e] = -1;
            }
        }
        let s = Signing::new(signs)?;
        sum = sum + char_poly(&g.signed_adjacency(&s)?)?;
    }
    Ok(sum)
}

fn check_partial(g: &Graph, partial: &PartialSigning) -> Result<()> {
    if partial.len() != g.edge_count() {
        return Err(Error::LengthMismatch {
            expected: g.edge_count(),
            actual: partial.len(),
        });
    }
    Ok(())
}

/// Plain sum of `det(xI - A_s)` over all completions of `partial`.
///
/// In the permutation expansion of the determinant an unfixed entry
/// averages out unless it is used twice, i.e. as a transposition. So the
/// sum is `2^|U| sum_M (-1)^|M| char(A_F[V \ V(M)])` over matchings `M`
/// of the unfixed edges `U`, where `A_F` keeps only the fixed entries.
pub fn conditional_expectation(g: &Graph, partial: &PartialSigning) -> Result<IntPoly> {
    check_partial(g, partial)?;
    let n = g.vertex_count();
    let mut fixed_adj = IntMatrix::zeros(n, n);
    let mut fixed_nbrs = vec![Vec::new(); n];
    let mut unfixed = Vec::new();
    for (&(u, v), a) in g.edges().iter().zip(partial.assignments()) {
        match a {
            Some(s) => {
                fixed_adj.set(u, v, i64::from(*s));
                fixed_adj.set(v, u, i64::from(*s));
                fixed_nbrs[u].push(v);
                fixed_nbrs[v].push(u);
            }
            None => unfixed.push((u, v)),
        }
    }
    // vertices carrying fixed edges get local bit positions
    let fv: Vec<usize> = (0..n).filter(|&v| !fixed_nbrs[v].is_empty()).collect();
    let mut local = vec![usize::MAX; n];
    for (i, &v) in fv.iter().enumerate() {
        local[v] = i;
    }

    let mut enumerator = Matchings {
        edges: &unfixed,
        local: &local,
        used: vec![false; n],
        covered: vec![0u64; fv.len().div_ceil(64).max(1)],
        acc: HashMap::new(),
        outside: 0,
    };
    enumerator.add_current(0);
    enumerator.extend(0, 0);
    let acc = enumerator.acc;

    let mut memo: HashMap<Vec<usize>, IntPoly> = HashMap::new();
    let mut total = IntPoly::zero();
    for (covered, by_outside) in acc {
        let rest: Vec<usize> = fv
            .iter()
            .enumerate()
            .filter(|(i, _)| covered[i / 64] >> (i % 64) & 1 == 0)
            .map(|(_, &v)| v)
            .collect();
        let core = fixed_char_poly(&fixed_adj, &fixed_nbrs, &rest, &mut memo)?;
        for (r, c) in by_outside.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let shift = n - fv.len() - r;
            total = total + core.scale(&BigInt::from(*c)).shift_up(shift);
        }
    }
    Ok(total.scale(&(BigInt::one() << unfixed.len())))
}

struct Matchings<'a> {
    edges: &'a [(usize, usize)],
    local: &'a [usize],
    used: Vec<bool>,
    // covered vertices among those with fixed edges
    covered: Vec<u64>,
    // signed matching counts keyed by covered set, indexed by the number of
    // covered vertices without fixed edges
    acc: HashMap<Vec<u64>, Vec<i64>>,
    outside: usize,
}

impl Matchings<'_> {
    fn add_current(&mut self, size: usize) {
        let slot = self.acc.entry(self.covered.clone()).or_default();
        if slot.len() <= self.outside {
            slot.resize(self.outside + 1, 0);
        }
        slot[self.outside] += if size % 2 == 0 { 1 } else { -1 };
    }

    fn toggle(&mut self, v: usize) {
        self.used[v] = !self.used[v];
        match self.local[v] {
            usize::MAX if self.used[v] => self.outside += 1,
            usize::MAX => self.outside -= 1,
            i => self.covered[i / 64] ^= 1 << (i % 64),
        }
    }

    fn extend(&mut self, start: usize, size: usize) {
        for i in start..self.edges.len() {
            let (u, v) = self.edges[i];
            if self.used[u] || self.used[v] {
                continue;
            }
            self.toggle(u);
            self.toggle(v);
            self.add_current(size + 1);
            self.extend(i + 1, size + 1);
            self.toggle(u);
            self.toggle(v);
        }
    }
}

/// `char(A_F[w])`, factored over the connected components of the fixed
/// edges inside `w`.
fn fixed_char_poly(
    adj: &IntMatrix,
    nbrs: &[Vec<usize>],
    w: &[usize],
    memo: &mut HashMap<Vec<usize>, IntPoly>,
) -> Result<IntPoly> {
    let mut inside = vec![false; adj.rows()];
    for &v in w {
        inside[v] = true;
    }
    let mut seen = vec![false; adj.rows()];
    let mut out = IntPoly::one();
    for &s in w {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &y in &nbrs[comp[i]] {
                if inside[y] && !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        let f = match memo.get(&comp) {
            Some(f) => f.clone(),
            None => {
                let f = char_poly(&adj.principal(&comp))?;
                memo.insert(comp, f.clone());
                f
            }
        };
        out = &out * &f;
    }
    Ok(out)
}

/// `sum_S (prod_{i in S} p_i)(prod_{i not in S} (1-p_i))
///  det(xI + D + sum_{i in S} a_i a_i^T + sum_{i not in S} b_i b_i^T)`
/// by subset enumeration.
pub fn mixed_charpoly(
    a: &[Vec<i64>],
    b: &[Vec<i64>],
    p: &[BigRational],
    d: &[i64],
) -> Result<RatPoly> {
    let m = a.len();
    if b.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            actual: b.len(),
        });
    }
    if p.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            actual: p.len(),
        });
    }
    let n = d.len();
    if let Some(v) = a.iter().chain(b).find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} with a {n}x{n} diagonal",
            v.len()
        )));
    }
    if d.iter().any(|&x| x < 0) {
        return Err(Error::InvalidWeights("negative diagonal entry".into()));
    }
    check_probabilities(p)?;
    enumeration_guard(m, "rank-one terms")?;

    let one = BigRational::one();
    let mut sum = RatPoly::zero();
    for mask in 0u64..(1u64 << m) {
        let mut w = one.clone();
        let mut mat = IntMatrix::zeros(n, n);
        for (i, &di) in d.iter().enumerate() {
            mat.set(i, i, di);
        }
        for i in 0..m {
            let (v, pi) = if mask >> i & 1 == 1 {
                (&a[i], p[i].clone())
            } else {
                (&b[i], &one - &p[i])
            };
            w *= pi;
            for r in 0..n {
                for c in 0..n {
                    mat.add_at(r, c, v[r] * v[c]);
                }
            }
        }
        if w.is_zero() {
            continue;
        }
        // det(xI + M) is the characteristic polynomial of -M
        sum.add_scaled(&char_poly(&mat.neg())?, &w);
    }
    Ok(sum)
}

/// Rank-one data for a graph: `a_uv = e_u - e_v`, `b_uv = e_u + e_v`,
/// `D = dI - diag(deg)` with `d` the maximum degree.
pub fn graph_mixed_instance(g: &Graph) -> (Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<i64>) {
    let n = g.vertex_count();
    let d = g.max_degree() as i64;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for &(u, v) in g.edges() {
        let mut x = vec![0; n];
        x[u] = 1;
        x[v] = -1;
        a.push(x);
        let mut y = vec![0; n];
        y[u] = 1;
        y[v] = 1;
        b.push(y);
    }
    let diag = g.degrees().iter().map(|&k| d - k as i64).collect();
    (a, b, diag)
}

/// Checks `det(A)(1 + p a^T A^-1 a + (1-p) b^T A^-1 b)
///        = p det(A + a a^T) + (1-p) det(A + b b^T)`.
pub fn det_operator_identity_check(
    a_mat: &RatMatrix,
    a: &[BigRational],
    b: &[BigRational],
    p: &BigRational,
) -> Result<bool> {
    let det = a_mat.det()?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let q = BigRational::one() - p;
    let ya = a_mat.solve(a)?;
    let yb = a_mat.solve(b)?;
    let lhs = &det * (BigRational::one() + p * dot(a, &ya) + &q * dot(b, &yb));
    let rhs = p * a_mat.plus_outer(a)?.det()? + &q * a_mat.plus_outer(b)?.det()?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::matching_polynomial;
    use crate::poly::{common_interlacing, is_real_rooted};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn k33() -> Graph {
        Graph::complete_bipartite(3, 3).unwrap()
    }

    #[test]
    fn godsil_gutman_on_k33() {
        let g = k33();
        let e = expected_charpoly_bruteforce(&g, &EdgeProbabilities::uniform(9)).unwrap();
        let mu = IntPoly::from_i64(&[-6, 0, 18, 0, -9, 0, 1]);
        assert_eq!(e, RatPoly::from_int(&mu));
        let plain = conditional_expectation(&g, &PartialSigning::unset(9)).unwrap();
        assert_eq!(plain, mu.scale(&BigInt::from(512)));
    }

    #[test]
    fn k2_cases() {
        let g = Graph::path(2);
        let e = expected_charpoly_bruteforce(&g, &EdgeProbabilities::uniform(1)).unwrap();
        assert_eq!(e.clear_denominators(), IntPoly::from_i64(&[-1, 0, 1]));
        let c = conditional_expectation(&g, &PartialSigning::unset(1)).unwrap();
        assert_eq!(c, IntPoly::from_i64(&[-2, 0, 2]));
    }

    #[test]
    fn fully_fixed_is_the_signing_itself() {
        let g = Graph::petersen();
        let s = Signing::from_mask(15, 0b101_1001_1100_0110);
        let partial = PartialSigning::from(&s);
        let f = char_poly(&g.signed_adjacency(&s).unwrap()).unwrap();
        assert_eq!(conditional_expectation(&g, &partial).unwrap(), f);
        // a degenerate distribution picks out the same signing
        let p = s
            .signs()
            .iter()
            .map(|&x| q(i64::from(x > 0), 1))
            .collect();
        let e = expected_charpoly_bruteforce(&g, &EdgeProbabilities::new(p).unwrap()).unwrap();
        assert_eq!(e, RatPoly::from_int(&f));
    }

    #[test]
    fn errors() {
        let g = k33();
        assert!(matches!(
            conditional_expectation(&g, &PartialSigning::unset(3)),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(EdgeProbabilities::new(vec![q(3, 2)]).is_err());
        let big = Graph::complete(7);
        assert!(matches!(
            expected_charpoly_bruteforce(&big, &EdgeProbabilities::uniform(21)),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            mixed_charpoly(&[vec![1, 0]], &[vec![1]], &[q(1, 2)], &[0, 0]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn mixed_examples() {
        let f = mixed_charpoly(&[], &[], &[], &[0, 0, 0]).unwrap();
        assert_eq!(f.clear_denominators(), IntPoly::monomial(1.into(), 3));
        // a single subset: det(xI + a a^T) with a = e1 - e2 is x^2 + 2x
        let f = mixed_charpoly(&[vec![1, -1]], &[vec![5, 5]], &[q(1, 1)], &[0, 0]).unwrap();
        assert_eq!(f, RatPoly::from_int(&IntPoly::from_i64(&[0, 2, 1])));
    }

    #[test]
    fn graph_instance_is_a_shift() {
        for g in [k33(), Graph::cycle(5).unwrap(), Graph::star(3)] {
            let (a, b, d) = graph_mixed_instance(&g);
            let m = g.edge_count();
            let p: Vec<BigRational> = (0..m).map(|i| q(1 + (i as i64 % 3), 4)).collect();
            let mixed = mixed_charpoly(&a, &b, &p, &d).unwrap();
            let shifted = mixed.taylor_shift(&q(-(g.max_degree() as i64), 1));
            let e = expected_charpoly_bruteforce(&g, &EdgeProbabilities::new(p).unwrap()).unwrap();
            assert_eq!(shifted, e);
        }
    }

    #[test]
    fn identity_examples() {
        let i2 = RatMatrix::from_rows(vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 1)]]).unwrap();
        assert!(det_operator_identity_check(&i2, &[q(1, 1), q(0, 1)], &[q(0, 1), q(1, 1)], &q(2, 7)).unwrap());
        let d23 = RatMatrix::from_rows(vec![vec![q(2, 1), q(0, 1)], vec![q(0, 1), q(3, 1)]]).unwrap();
        assert!(det_operator_identity_check(&d23, &[q(1, 1), q(1, 1)], &[q(1, 1), q(-1, 1)], &q(1, 3)).unwrap());
        let sing = RatMatrix::from_rows(vec![vec![q(1, 1), q(1, 1)], vec![q(1, 1), q(1, 1)]]).unwrap();
        assert_eq!(
            det_operator_identity_check(&sing, &[q(1, 1), q(0, 1)], &[q(0, 1), q(1, 1)], &q(1, 2)),
            Err(Error::Singular)
        );
    }

    fn graph_strategy(max_edges: usize) -> impl Strategy<Value = Graph> {
        (2usize..=6).prop_flat_map(move |n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let k = pairs.len();
            prop::collection::vec(any::<bool>(), k).prop_map(move |keep| {
                let edges: Vec<_> = pairs
                    .iter()
                    .zip(&keep)
                    .filter(|(_, &b)| b)
                    .map(|(&e, _)| e)
                    .take(max_edges)
                    .collect();
                Graph::new(n, edges).unwrap()
            })
        })
    }

    fn partial_for(g: &Graph, seed: &[u8]) -> PartialSigning {
        let a = (0..g.edge_count())
            .map(|i| match seed[i % seed.len()] % 3 {
                0 => None,
                1 => Some(1),
                _ => Some(-1),
            })
            .collect();
        PartialSigning::new(a).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn matching_sum_equals_enumeration(g in graph_strategy(12), seed in prop::collection::vec(any::<u8>(), 1..8)) {
            let partial = partial_for(&g, &seed);
            prop_assert_eq!(
                conditional_expectation(&g, &partial).unwrap(),
                conditional_expectation_bruteforce(&g, &partial).unwrap()
            );
        }

        #[test]
        fn empty_partial_is_scaled_matching_polynomial(g in graph_strategy(15)) {
            let m = g.edge_count();
            prop_assert_eq!(
                conditional_expectation(&g, &PartialSigning::unset(m)).unwrap(),
                matching_polynomial(&g).scale(&(BigInt::one() << m))
            );
        }

        #[test]
        fn sum_recursion_real_roots_and_interlacing(g in graph_strategy(12), seed in prop::collection::vec(any::<u8>(), 1..8)) {
            let partial = partial_for(&g, &seed);
            let f = conditional_expectation(&g, &partial).unwrap();
            prop_assert!(is_real_rooted(&f).unwrap());
            if let Some(e) = partial.assignments().iter().position(Option::is_none) {
                let plus = conditional_expectation(&g, &partial.with(e, 1)).unwrap();
                let minus = conditional_expectation(&g, &partial.with(e, -1)).unwrap();
                prop_assert_eq!(&plus + &minus, f);
                prop_assert!(common_interlacing(&[plus, minus]).unwrap());
            }
        }

        #[test]
        fn weighted_expectations_are_real_rooted(g in graph_strategy(8), ks in prop::collection::vec(0i64..=4, 8)) {
            let p: Vec<BigRational> = (0..g.edge_count()).map(|i| q(ks[i], 4)).collect();
            let e = expected_charpoly_bruteforce(&g, &EdgeProbabilities::new(p).unwrap()).unwrap();
            prop_assert!(is_real_rooted(&e.clear_denominators()).unwrap());
        }
    }
}
