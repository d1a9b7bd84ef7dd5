//! Greedy descent through the interlacing family of conditional
//! expectations, the exhaustive oracle, and Ramanujan certificates.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bound::{biregular_degrees, cover_bound, fmt_rational, BoundKind, RootBound, Verdict};
use crate::error::{Error, Result};
use crate::expectation::{conditional_expectation, conditional_expectation_bruteforce};
use crate::graph::{Graph, PartialSigning, Signing};
use crate::matching::matching_root_bound;
use crate::poly::{
    char_poly, common_interlacing, default_precision, isolate_roots, largest_root, AlgebraicReal,
    IntPoly,
};

/// Largest input the exhaustive oracle enumerates.
pub const EXHAUSTIVE_MAX_EDGES: usize = 16;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Process edges in an order shuffled by this seed.
    pub shuffle: Option<u64>,
    /// Compute conditional expectations by enumerating completions.
    pub oracle: bool,
    /// Also decide common interlacing of every sibling pair.
    pub check_interlacing: bool,
    /// Width of the intervals reported in certificates.
    pub precision: BigRational,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_vertices: 24,
            max_edges: 40,
            shuffle: None,
            oracle: false,
            check_interlacing: false,
            precision: default_precision(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Greedy,
    Exhaustive,
    /// Spectrum of the graph itself.
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub bipartite: bool,
    pub components: usize,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary {
            n: g.vertex_count(),
            m: g.edge_count(),
            degrees: g.degrees(),
            bipartite: g.is_bipartite(),
            components: g.component_count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub kind: String,
    /// Coefficients, constant term first.
    pub minimal_poly: Vec<String>,
    pub interval: [String; 2],
    pub degenerate: bool,
}

impl BoundRecord {
    pub fn of(b: &RootBound) -> Self {
        let (lo, hi) = b.interval();
        BoundRecord {
            kind: b.kind().to_string(),
            minimal_poly: coeff_strings(b.minimal_poly()),
            interval: [fmt_rational(lo), fmt_rational(hi)],
            degenerate: b.is_degenerate(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenRecord {
    pub lo: String,
    pub hi: String,
    pub multiplicity: usize,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrailStep {
    pub edge: usize,
    pub endpoints: [usize; 2],
    pub choice: i8,
    /// Largest root of the `+1` child against the `-1` child.
    pub comparison: String,
    /// Largest root of the chosen child against its parent.
    pub vs_parent: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interlacing: Option<bool>,
}

/// A machine-checkable record of a spectral claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph: GraphSummary,
    pub bound: BoundRecord,
    /// Coefficients of the certified characteristic polynomial.
    pub characteristic_polynomial: Vec<String>,
    pub eigenvalues: Vec<EigenRecord>,
    pub verdict: Verdict,
    pub method: Method,
    #[serde(default)]
    pub trail: Vec<TrailStep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signing: Option<Vec<i8>>,
    /// For signings: the largest new eigenvalue against the largest
    /// matching root.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching_bound: Option<BoundRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching_verdict: Option<Verdict>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }

    /// The verdict an "at most" claim rests on: the matching verdict for
    /// signings, the bound verdict otherwise.
    pub fn headline_verdict(&self) -> Verdict {
        self.matching_verdict.unwrap_or(self.verdict)
    }
}

fn coeff_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn ordering_name(o: Ordering) -> String {
    match o {
        Ordering::Less => "LESS",
        Ordering::Equal => "EQUAL",
        Ordering::Greater => "GREATER",
    }
    .to_string()
}

fn check_budget(g: &Graph, cfg: &SearchConfig) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidGraph("graph has no vertices".into()));
    }
    if g.vertex_count() > cfg.max_vertices || g.edge_count() > cfg.max_edges {
        return Err(Error::BudgetExceeded(format!(
            "descent limited to {} vertices and {} edges, graph has {} and {}",
            cfg.max_vertices,
            cfg.max_edges,
            g.vertex_count(),
            g.edge_count()
        )));
    }
    Ok(())
}

fn top_root(f: &IntPoly) -> AlgebraicReal {
    largest_root(f).expect("nonconstant real-rooted polynomial")
}

/// Greedy descent with the default configuration.
pub fn find_good_signing(g: &Graph) -> Result<(Signing, Certificate)> {
    find_good_signing_with(g, &SearchConfig::default())
}

/// Fix one edge at a time, keeping the child whose conditional expectation
/// has the smaller largest root (`+1` on ties). Every step is checked
/// against its parent; the result satisfies
/// `lambda_max(A_s) <= lambda_max(mu_G)`.
pub fn find_good_signing_with(g: &Graph, cfg: &SearchConfig) -> Result<(Signing, Certificate)> {
    check_budget(g, cfg)?;
    let m = g.edge_count();
    let mut order: Vec<usize> = (0..m).collect();
    if let Some(seed) = cfg.shuffle {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let expect = |p: &PartialSigning| {
        if cfg.oracle {
            conditional_expectation_bruteforce(g, p)
        } else {
            conditional_expectation(g, p)
        }
    };

    let mut partial = PartialSigning::unset(m);
    let mut parent_root = top_root(&expect(&partial)?);
    let mut trail = Vec::with_capacity(m);
    for &e in &order {
        let plus = partial.with(e, 1);
        let minus = partial.with(e, -1);
        let (fp, fm) = (expect(&plus)?, expect(&minus)?);
        let (rp, rm) = (top_root(&fp), top_root(&fm));
        let cmp = rp.cmp_exact(&rm);
        let (choice, next, root) = if cmp == Ordering::Greater {
            (-1, minus, rm)
        } else {
            (1, plus, rp)
        };
        let vs_parent = root.cmp_exact(&parent_root);
        if vs_parent == Ordering::Greater {
            return Err(Error::CertificationFailed(format!(
                "descent step on edge {e} increased the largest root"
            )));
        }
        let interlacing = if cfg.check_interlacing {
            Some(common_interlacing(&[fp, fm])?)
        } else {
            None
        };
        let (u, v) = g.edges()[e];
        trail.push(TrailStep {
            edge: e,
            endpoints: [u, v],
            choice,
            comparison: ordering_name(cmp),
            vs_parent: ordering_name(vs_parent),
            interlacing,
        });
        partial = next;
        parent_root = root;
    }
    let s = partial.to_signing().expect("every edge fixed");
    let cert = certify_signing(g, &s, Method::Greedy, trail, &cfg.precision)?;
    Ok((s, cert))
}

/// Enumerate all signings and keep one minimising the largest eigenvalue
/// (the first in mask order among equals).
pub fn exhaustive_best_signing(g: &Graph) -> Result<(Signing, Certificate)> {
    let m = g.edge_count();
    if g.vertex_count() == 0 {
        return Err(Error::InvalidGraph("graph has no vertices".into()));
    }
    if m > EXHAUSTIVE_MAX_EDGES {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive search limited to {EXHAUSTIVE_MAX_EDGES} edges, graph has {m}"
        )));
    }
    // many signings share a spectrum (switching), so compare each
    // distinct polynomial once
    let mut first: HashMap<IntPoly, u64> = HashMap::new();
    let mut distinct = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let s = Signing::from_mask(m, mask);
        let f = char_poly(&g.signed_adjacency(&s)?)?;
        if !first.contains_key(&f) {
            first.insert(f.clone(), mask);
            distinct.push(f);
        }
    }
    let mut best: Option<(AlgebraicReal, u64)> = None;
    for f in &distinct {
        let r = top_root(f);
        let mask = first[f];
        let better = match &best {
            None => true,
            Some((b, bm)) => match r.cmp_exact(b) {
                Ordering::Less => true,
                Ordering::Equal => mask < *bm,
                Ordering::Greater => false,
            },
        };
        if better {
            best = Some((r, mask));
        }
    }
    let (_, mask) = best.expect("at least one signing");
    let s = Signing::from_mask(m, mask);
    let cert = certify_signing(g, &s, Method::Exhaustive, Vec::new(), &default_precision())?;
    Ok((s, cert))
}

/// Certificate for the new eigenvalues `eig(A_s)` of the lift along `s`.
/// Only the largest is controlled, so verdicts compare `lambda_max(A_s)`
/// with the cover bound and with the largest matching root.
pub fn certify_signing(
    g: &Graph,
    s: &Signing,
    method: Method,
    trail: Vec<TrailStep>,
    precision: &BigRational,
) -> Result<Certificate> {
    let f = char_poly(&g.signed_adjacency(s)?)?;
    let bound = cover_bound(g);
    let mu_bound = matching_root_bound(g);
    let top = top_root(&f);
    let eigenvalues = isolate_roots(&f, precision)?
        .roots
        .into_iter()
        .map(|r| record(&r.root, r.multiplicity, false))
        .collect();
    Ok(Certificate {
        graph: GraphSummary::of(g),
        bound: BoundRecord::of(&bound),
        characteristic_polynomial: coeff_strings(&f),
        eigenvalues,
        verdict: bound.verdict_for(&top),
        method,
        trail,
        signing: Some(s.signs().to_vec()),
        matching_bound: Some(BoundRecord::of(&mu_bound)),
        matching_verdict: Some(mu_bound.verdict_for(&top)),
    })
}

fn record(r: &AlgebraicReal, multiplicity: usize, trivial: bool) -> EigenRecord {
    EigenRecord {
        lo: fmt_rational(r.lo()),
        hi: fmt_rational(r.hi()),
        multiplicity,
        trivial,
    }
}

/// Two-sided certificate for a regular graph, or a biregular bipartite one,
/// against the spectral radius of its universal cover.
pub fn certify_ramanujan(g: &Graph) -> Result<Certificate> {
    certify_ramanujan_with(g, &default_precision())
}

pub fn certify_ramanujan_with(g: &Graph, precision: &BigRational) -> Result<Certificate> {
    let bound = match g.regular_degree() {
        Some(d) if d >= 1 => RootBound::regular(d)?,
        _ => match biregular_degrees(g) {
            Some((c, d)) => RootBound::biregular(c, d)?,
            None => {
                return Err(Error::Unsupported(
                    "graph is neither regular nor biregular bipartite; supply a bound".into(),
                ))
            }
        },
    };
    certify_with_bound(g, &bound, precision)
}

/// Certify every non-trivial eigenvalue of `g` against `bound` in absolute
/// value. Trivial eigenvalues are the Perron root of each component, and its
/// negative for bipartite components; for regular and biregular graphs
/// these are checked to be `d`, `-d` and `+-sqrt(cd)`.
pub fn certify_with_bound(g: &Graph, bound: &RootBound, precision: &BigRational) -> Result<Certificate> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidGraph("graph has no vertices".into()));
    }
    let (comp, count) = g.components();
    let adj = g.adjacency();
    let bipartite = g.is_bipartite();
    let mut all: Vec<(AlgebraicReal, usize, bool)> = Vec::new();
    let mut verdict = Verdict::AllBelow;
    let mut full = IntPoly::one();
    for c in 0..count {
        let verts: Vec<usize> = (0..g.vertex_count()).filter(|&v| comp[v] == c).collect();
        let f = char_poly(&adj.principal(&verts))?;
        full = &full * &f;
        let comp_bipartite = g.induced_subgraph(&verts).is_bipartite();
        let trivial_factor = expected_trivial_factor(bound.kind(), comp_bipartite && verts.len() > 1);
        if let Some(t) = &trivial_factor {
            if !t.divides(&f) {
                return Err(Error::CertificationFailed(format!(
                    "component {c} lacks the trivial eigenvalues {t}"
                )));
            }
        }
        let symmetric = comp_bipartite && (f.is_even() || f.is_odd());
        if comp_bipartite && !symmetric {
            return Err(Error::CertificationFailed(format!(
                "bipartite component {c} has an asymmetric spectrum"
            )));
        }
        let roots = isolate_roots(&f, precision)?.roots;
        let k = roots.len();
        for (i, r) in roots.into_iter().enumerate() {
            let mut trivial = usize::from(i + 1 == k);
            if comp_bipartite && i == 0 && k > 1 {
                trivial += 1;
            }
            if trivial > 0 {
                all.push((r.root.clone(), trivial, true));
            }
            let rest = r.multiplicity - trivial;
            if rest == 0 {
                continue;
            }
            // a symmetric spectrum is settled by its non-negative half
            let v = if r.root.cmp_rational(&BigRational::zero()) != Ordering::Less {
                bound.verdict_for(&r.root)
            } else if symmetric {
                Verdict::AllBelow
            } else {
                bound.verdict_for(&r.root.negated())
            };
            verdict = verdict.worst(v);
            all.push((r.root, rest, false));
        }
    }
    let eigenvalues = disjoint_sorted(all)
        .into_iter()
        .map(|(r, k, t)| record(&r, k, t))
        .collect();
    Ok(Certificate {
        graph: GraphSummary {
            bipartite,
            ..GraphSummary::of(g)
        },
        bound: BoundRecord::of(bound),
        characteristic_polynomial: coeff_strings(&full.normalized()),
        eigenvalues,
        verdict,
        method: Method::Direct,
        trail: Vec::new(),
        signing: None,
        matching_bound: None,
        matching_verdict: None,
    })
}

fn expected_trivial_factor(kind: BoundKind, bipartite: bool) -> Option<IntPoly> {
    let lin = |c: i64| IntPoly::from_i64(&[c, 1]);
    match kind {
        BoundKind::Regular(d) => {
            let d = d as i64;
            Some(if bipartite { &lin(-d) * &lin(d) } else { lin(-d) })
        }
        BoundKind::Biregular(c, d) => Some(IntPoly::from_i64(&[-((c * d) as i64), 0, 1])),
        _ => None,
    }
}

/// Sort by value and shrink intervals until distinct values are separated.
fn disjoint_sorted(mut v: Vec<(AlgebraicReal, usize, bool)>) -> Vec<(AlgebraicReal, usize, bool)> {
    v.sort_by(|a, b| a.0.cmp_exact(&b.0).then(a.2.cmp(&b.2)));
    for i in 1..v.len() {
        let (left, right) = v.split_at_mut(i);
        let a = &mut left[i - 1].0;
        let b = &mut right[0].0;
        if a.cmp_exact(b) == Ordering::Equal {
            continue;
        }
        while a.hi() > b.lo() {
            if a.width() >= b.width() {
                a.bisect();
            } else {
                b.bisect();
            }
        }
    }
    v
}

/// Largest absolute value among the non-trivial eigenvalues of a
/// certificate, read back from its intervals (upper ends).
pub fn max_nontrivial_upper(cert: &Certificate) -> Option<BigRational> {
    cert.eigenvalues
        .iter()
        .filter(|e| !e.trivial)
        .filter_map(|e| {
            let lo = crate::bound::parse_rational(&e.lo)?;
            let hi = crate::bound::parse_rational(&e.hi)?;
            Some(lo.abs().max(hi.abs()))
        })
        .max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::parse_rational;
    use crate::matching::matching_polynomial;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn lambda_max(g: &Graph, s: &Signing) -> AlgebraicReal {
        top_root(&char_poly(&g.signed_adjacency(s).unwrap()).unwrap())
    }

    #[test]
    fn k2_touches() {
        let g = Graph::path(2);
        let (s, cert) = find_good_signing(&g).unwrap();
        assert_eq!(lambda_max(&g, &s).cmp_rational(&q(1, 1)), Ordering::Equal);
        assert_eq!(cert.matching_verdict, Some(Verdict::Touches));
        assert_eq!(cert.trail.len(), 1);
        assert_eq!(cert.trail[0].comparison, "EQUAL");
        assert_eq!(cert.trail[0].choice, 1);
    }

    #[test]
    fn k33_descent() {
        let g = Graph::complete_bipartite(3, 3).unwrap();
        let cfg = SearchConfig {
            check_interlacing: true,
            ..SearchConfig::default()
        };
        let (s, cert) = find_good_signing_with(&g, &cfg).unwrap();
        let mu = top_root(&matching_polynomial(&g));
        let top = lambda_max(&g, &s);
        assert_ne!(top.cmp_exact(&mu), Ordering::Greater);
        assert!(top.to_f64() < 2.52);
        assert_eq!(cert.verdict, Verdict::AllBelow);
        assert_eq!(cert.trail.len(), 9);
        assert!(cert.trail.iter().all(|t| t.interlacing == Some(true) && t.vs_parent != "GREATER"));
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn triangle_is_one_sided() {
        let g = Graph::cycle(3).unwrap();
        let (s, cert) = find_good_signing(&g).unwrap();
        let top = lambda_max(&g, &s);
        let sqrt3 = top_root(&IntPoly::from_i64(&[0, -3, 0, 1]));
        assert_ne!(top.cmp_exact(&sqrt3), Ordering::Greater);
        assert!(cert.headline_verdict().is_within());
    }

    #[test]
    fn oracle_and_shuffle_agree_on_guarantee() {
        let g = Graph::petersen().without_edge(0);
        let mu = top_root(&matching_polynomial(&g));
        for cfg in [
            SearchConfig { shuffle: Some(7), ..SearchConfig::default() },
            SearchConfig { oracle: true, max_edges: 20, ..SearchConfig::default() },
        ] {
            let (s, _) = find_good_signing_with(&g, &cfg).unwrap();
            assert_ne!(lambda_max(&g, &s).cmp_exact(&mu), Ordering::Greater);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = SearchConfig { max_edges: 5, ..SearchConfig::default() };
        assert!(matches!(
            find_good_signing_with(&Graph::petersen(), &cfg),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            exhaustive_best_signing(&Graph::petersen().disjoint_union(&Graph::cycle(3).unwrap())),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn exhaustive_examples() {
        let (s, _) = exhaustive_best_signing(&Graph::path(2)).unwrap();
        assert_eq!(lambda_max(&Graph::path(2), &s).cmp_rational(&q(1, 1)), Ordering::Equal);
        let c4 = Graph::cycle(4).unwrap();
        let (s, cert) = exhaustive_best_signing(&c4).unwrap();
        assert_eq!(s.signs().iter().filter(|&&x| x < 0).count() % 2, 1);
        assert_eq!(cert.characteristic_polynomial, vec!["4", "0", "-4", "0", "1"]);
        let sqrt2 = top_root(&IntPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(lambda_max(&c4, &s).cmp_exact(&sqrt2), Ordering::Equal);
        assert_eq!(cert.method, Method::Exhaustive);
    }

    #[test]
    fn ramanujan_examples() {
        let k33 = certify_ramanujan(&Graph::complete_bipartite(3, 3).unwrap()).unwrap();
        assert_eq!(k33.verdict, Verdict::AllBelow);
        let trivial: Vec<_> = k33.eigenvalues.iter().filter(|e| e.trivial).collect();
        assert_eq!(trivial.len(), 2);
        assert_eq!(trivial[0].lo, "-3/1");
        let nontrivial: Vec<_> = k33.eigenvalues.iter().filter(|e| !e.trivial).collect();
        assert_eq!(nontrivial.len(), 1);
        assert_eq!((nontrivial[0].lo.as_str(), nontrivial[0].multiplicity), ("0/1", 4));

        let k34 = certify_ramanujan(&Graph::complete_bipartite(3, 4).unwrap()).unwrap();
        assert_eq!(k34.bound.kind, "biregular(3,4)");
        assert_eq!(k34.verdict, Verdict::AllBelow);
        let t: Vec<_> = k34.eigenvalues.iter().filter(|e| e.trivial).collect();
        let hi = parse_rational(&t[1].hi).unwrap();
        let lo = parse_rational(&t[1].lo).unwrap();
        assert!(&lo * &lo <= q(12, 1) && &hi * &hi >= q(12, 1));

        let pet = certify_ramanujan(&Graph::petersen()).unwrap();
        assert_eq!(pet.verdict, Verdict::AllBelow);
        let summary: Vec<(String, usize, bool)> = pet
            .eigenvalues
            .iter()
            .map(|e| (e.lo.clone(), e.multiplicity, e.trivial))
            .collect();
        assert_eq!(
            summary,
            vec![
                ("-2/1".to_string(), 4, false),
                ("1/1".to_string(), 5, false),
                ("3/1".to_string(), 1, true)
            ]
        );
    }

    #[test]
    fn irregular_needs_a_bound() {
        assert!(matches!(certify_ramanujan(&Graph::path(4)), Err(Error::Unsupported(_))));
        let b = RootBound::custom(IntPoly::from_i64(&[-2, 0, 1]), q(1, 1), q(2, 1)).unwrap();
        let cert = certify_with_bound(&Graph::path(4), &b, &default_precision()).unwrap();
        // P_4 has eigenvalues +-1.618 (trivial) and +-0.618
        assert_eq!(cert.verdict, Verdict::AllBelow);
        let tight = RootBound::custom(IntPoly::from_i64(&[-1, 2]), q(0, 1), q(1, 1)).unwrap();
        let cert = certify_with_bound(&Graph::path(4), &tight, &default_precision()).unwrap();
        assert_eq!(cert.verdict, Verdict::Exceeds);
    }

    #[test]
    fn disconnected_graphs_count_trivial_eigenvalues_per_component() {
        let g = Graph::complete_bipartite(3, 3).unwrap().disjoint_union(&Graph::complete_bipartite(3, 3).unwrap());
        let cert = certify_ramanujan(&g).unwrap();
        assert_eq!(cert.graph.components, 2);
        let trivial: usize = cert.eigenvalues.iter().filter(|e| e.trivial).map(|e| e.multiplicity).sum();
        assert_eq!(trivial, 4);
        assert_eq!(cert.verdict, Verdict::AllBelow);
    }

    #[test]
    fn intervals_are_disjoint_and_ordered() {
        let cert = certify_ramanujan(&Graph::petersen()).unwrap();
        for w in cert.eigenvalues.windows(2) {
            assert!(parse_rational(&w[0].hi).unwrap() <= parse_rational(&w[1].lo).unwrap());
        }
    }
}
