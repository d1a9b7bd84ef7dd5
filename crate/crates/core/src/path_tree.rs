//! Godsil's path tree `P(G, u)`: one vertex per simple path from `u`,
//! adjacent when one path extends the other by a single vertex.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::bound::{BoundKind, RootBound};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::matching_polynomial;
use crate::poly::{default_precision, AlgebraicReal, IntPoly};

pub const DEFAULT_PATH_TREE_CAP: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathTree {
    pub tree: Graph,
    pub root: usize,
    pub path_labels: Vec<Vec<usize>>,
    // vertices are numbered in preorder, so parents precede children
    parent: Vec<Option<usize>>,
}

impl PathTree {
    pub fn len(&self) -> usize {
        self.path_labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path_labels.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.len()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                ch[*p].push(v);
            }
        }
        ch
    }

    /// One line per vertex: `vertex: v0,v1,...,vk`.
    pub fn label_map(&self) -> String {
        let mut out = String::new();
        for (i, l) in self.path_labels.iter().enumerate() {
            let parts: Vec<String> = l.iter().map(ToString::to_string).collect();
            out.push_str(&format!("{i}: {}\n", parts.join(",")));
        }
        out
    }

    /// Characteristic polynomial of the tree, which for a tree is its
    /// matching polynomial.
    pub fn char_poly(&self) -> IntPoly {
        self.tree_dp(|p| p)
    }

    /// The characteristic polynomial reduced modulo a monic `m`.
    pub fn char_poly_mod(&self, m: &IntPoly) -> IntPoly {
        assert!(m.is_monic(), "reduction needs a monic modulus");
        self.tree_dp(|p| p.checked_div_rem(m).expect("monic divisor").1)
    }

    // a[v]: polynomial of the subtree at v; b[v]: the same with v deleted.
    // a[v] = x b[v] - sum_c b[c] prod_{c' != c} a[c'], b[v] = prod_c a[c]
    fn tree_dp(&self, reduce: impl Fn(IntPoly) -> IntPoly) -> IntPoly {
        let n = self.len();
        if n == 0 {
            return IntPoly::one();
        }
        let children = self.children();
        let mut a = vec![IntPoly::zero(); n];
        let mut b = vec![IntPoly::zero(); n];
        for v in (0..n).rev() {
            let ch = &children[v];
            // prefix products of child a's, then sweep from the right
            let mut prefix = Vec::with_capacity(ch.len() + 1);
            prefix.push(IntPoly::one());
            for &c in ch {
                let next = reduce(prefix.last().unwrap() * &a[c]);
                prefix.push(next);
            }
            let mut suffix = IntPoly::one();
            let mut sum = IntPoly::zero();
            for (i, &c) in ch.iter().enumerate().rev() {
                let others = reduce(&prefix[i] * &suffix);
                sum = sum + reduce(&b[c] * &others);
                suffix = reduce(&suffix * &a[c]);
            }
            let bv = prefix.pop().unwrap();
            a[v] = reduce(&(&IntPoly::x() * &bv) - &sum);
            b[v] = bv;
        }
        std::mem::take(&mut a[0])
    }

    /// `(above, equal, below)`: eigenvalues of the tree compared with `t`.
    /// Counts the signs of a diagonal matrix congruent to `A - tI`, built
    /// leaf to root.
    pub fn eigenvalue_counts(&self, t: &BigRational) -> (usize, usize, usize) {
        let n = self.len();
        let children = self.children();
        let mut val = vec![-t.clone(); n];
        let mut detached = vec![false; n];
        for v in (0..n).rev() {
            let live: Vec<usize> = children[v].iter().copied().filter(|&c| !detached[c]).collect();
            match live.iter().find(|&&c| val[c].is_zero()) {
                None => {
                    for &c in &live {
                        let r = val[c].recip();
                        val[v] -= r;
                    }
                }
                Some(&c) => {
                    val[c] = BigRational::from_integer(2.into());
                    val[v] = BigRational::new((-1).into(), 2.into());
                    detached[v] = true;
                }
            }
        }
        let above = val.iter().filter(|x| x.is_positive()).count();
        let equal = val.iter().filter(|x| x.is_zero()).count();
        (above, equal, n - above - equal)
    }
}

/// Path tree of `g` rooted at `u`, under the default size cap.
pub fn build_path_tree(g: &Graph, u: usize) -> Result<PathTree> {
    build_path_tree_capped(g, u, DEFAULT_PATH_TREE_CAP)
}

/// Children extend a path by neighbours in ascending order.
pub fn build_path_tree_capped(g: &Graph, u: usize, cap: usize) -> Result<PathTree> {
    if u >= g.vertex_count() {
        return Err(Error::InvalidGraph(format!(
            "root {u} out of range for {} vertices",
            g.vertex_count()
        )));
    }
    let mut adj = g.adjacency_lists();
    for l in &mut adj {
        l.sort_unstable();
    }
    let mut labels = vec![vec![u]];
    let mut parent = vec![None];
    let mut on_path = vec![false; g.vertex_count()];
    on_path[u] = true;
    // explicit stack of (tree vertex, next neighbour index)
    let mut stack = vec![(0usize, 0usize)];
    while let Some(top) = stack.last_mut() {
        let (node, idx) = *top;
        let end = *labels[node].last().unwrap();
        match adj[end][idx..].iter().position(|&w| !on_path[w]) {
            None => {
                stack.pop();
                on_path[end] = false;
            }
            Some(off) => {
                let w = adj[end][idx + off];
                top.1 = idx + off + 1;
                if labels.len() >= cap {
                    return Err(Error::BudgetExceeded(format!(
                        "path tree from {u} has more than {cap} vertices"
                    )));
                }
                let mut l = labels[node].clone();
                l.push(w);
                labels.push(l);
                parent.push(Some(node));
                on_path[w] = true;
                stack.push((labels.len() - 1, 0));
            }
        }
    }
    let edges = parent
        .iter()
        .enumerate()
        .filter_map(|(v, p)| p.map(|p| (p, v)));
    let tree = Graph::new(labels.len(), edges)?;
    Ok(PathTree {
        tree,
        root: 0,
        path_labels: labels,
        parent,
    })
}

/// Does `mu_G` divide the characteristic polynomial of `P(G, u)`? Decided by
/// reducing the tree recurrence modulo the monic `mu_G`.
pub fn divisibility_check(g: &Graph, u: usize) -> Result<bool> {
    let t = build_path_tree(g, u)?;
    let mu = matching_polynomial(g);
    Ok(t.char_poly_mod(&mu).is_zero())
}

/// Largest eigenvalue of the tree, isolated by eigenvalue counting and
/// anchored to its characteristic polynomial.
pub fn tree_spectral_radius(t: &PathTree) -> RootBound {
    tree_spectral_radius_with(t, &default_precision())
}

pub fn tree_spectral_radius_with(t: &PathTree, precision: &BigRational) -> RootBound {
    let poly = t.char_poly();
    let zero = BigRational::zero();
    if t.len() <= 1 {
        let root = AlgebraicReal::from_rational(poly.clone(), zero);
        return RootBound::from_root(BoundKind::MatchingRoot, poly, root);
    }
    // lambda_max lies in (0, max degree]
    let mut lo = zero;
    let mut hi = BigRational::from_integer(BigInt::from(t.tree.max_degree()));
    loop {
        let (above, equal, _) = t.eigenvalue_counts(&hi);
        if above == 0 && equal > 0 {
            let root = AlgebraicReal::from_rational(poly.clone(), hi);
            return RootBound::from_root(BoundKind::MatchingRoot, poly, root);
        }
        if &hi - &lo <= *precision {
            break;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        match t.eigenvalue_counts(&mid).0.cmp(&0) {
            Ordering::Greater => lo = mid,
            _ => hi = mid,
        }
    }
    let root = AlgebraicReal::from_half_open(poly.clone(), lo, hi);
    RootBound::from_root(BoundKind::MatchingRoot, poly, root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::matching_root_bound;
    use crate::poly::{char_poly, largest_root};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn simple_paths(g: &Graph, u: usize) -> Vec<Vec<usize>> {
        fn go(adj: &[Vec<usize>], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(path.clone());
            let end = *path.last().unwrap();
            for &w in &adj[end] {
                if !path.contains(&w) {
                    path.push(w);
                    go(adj, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(&g.adjacency_lists(), &mut vec![u], &mut out);
        out.sort();
        out
    }

    fn k13() -> Graph {
        Graph::star(3)
    }

    #[test]
    fn small_trees() {
        let t = build_path_tree(&k13(), 0).unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.tree.degrees(), vec![3, 1, 1, 1]);

        let tri = Graph::cycle(3).unwrap();
        let t = build_path_tree(&tri, 1).unwrap();
        assert_eq!(t.len(), 5);
        assert_eq!(t.char_poly(), char_poly(&Graph::path(5).adjacency()).unwrap());
        let mut d = t.tree.degrees();
        d.sort();
        assert_eq!(d, vec![1, 1, 2, 2, 2]);

        let t = build_path_tree(&Graph::path(2), 1).unwrap();
        assert_eq!(t.path_labels, vec![vec![1], vec![1, 0]]);
    }

    #[test]
    fn labels_are_simple_paths() {
        for g in [Graph::petersen(), Graph::complete(5), Graph::cycle(6).unwrap()] {
            for u in 0..g.vertex_count() {
                let t = build_path_tree(&g, u).unwrap();
                assert_eq!(t.path_labels[t.root], vec![u]);
                for v in 1..t.len() {
                    let p = &t.path_labels[t.parent(v).unwrap()];
                    assert_eq!(&t.path_labels[v][..p.len()], &p[..]);
                    assert_eq!(t.path_labels[v].len(), p.len() + 1);
                }
                let mut labels = t.path_labels.clone();
                labels.sort();
                assert_eq!(labels, simple_paths(&g, u));
                assert!(t.tree.is_connected());
                assert_eq!(t.tree.edge_count(), t.len() - 1);
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            build_path_tree_capped(&Graph::complete(6), 0, 100),
            Err(Error::BudgetExceeded(_))
        ));
        assert_eq!(build_path_tree(&Graph::complete(6), 0).unwrap().len(), 326);
    }

    #[test]
    fn divisibility_examples() {
        let tri = Graph::cycle(3).unwrap();
        let t = build_path_tree(&tri, 0).unwrap();
        assert_eq!(t.char_poly(), IntPoly::from_i64(&[0, 3, 0, -4, 0, 1]));
        assert_eq!(
            t.char_poly().exact_div(&matching_polynomial(&tri)),
            Some(IntPoly::from_i64(&[-1, 0, 1]))
        );
        assert!(divisibility_check(&tri, 0).unwrap());
        assert!(divisibility_check(&k13(), 0).unwrap());
        assert!(divisibility_check(&Graph::path(2), 0).unwrap());
    }

    #[test]
    fn modular_check_agrees_with_division() {
        for g in [Graph::petersen(), Graph::complete(4), Graph::complete_bipartite(2, 3).unwrap()] {
            let mu = matching_polynomial(&g);
            for u in 0..g.vertex_count() {
                let t = build_path_tree(&g, u).unwrap();
                let full = t.char_poly();
                assert_eq!(full.checked_div_rem(&mu).unwrap().1, t.char_poly_mod(&mu));
                assert!(mu.divides(&full));
            }
        }
        // a non-divisor is detected
        let t = build_path_tree(&k13(), 0).unwrap();
        assert!(!t.char_poly_mod(&IntPoly::from_i64(&[-1, 0, 1])).is_zero());
    }

    #[test]
    fn eigenvalue_counts_match_char_poly() {
        let t = build_path_tree(&Graph::complete(4), 0).unwrap();
        let f = t.char_poly();
        for k in -8..=8 {
            let x = q(k, 3);
            let (above, equal, below) = t.eigenvalue_counts(&x);
            let mult = {
                let mut m = 0;
                let mut g = f.clone();
                let lin = IntPoly::new(vec![-BigInt::from(k), BigInt::from(3)]).primitive();
                while let Some(h) = g.exact_div(&lin) {
                    m += 1;
                    g = h;
                }
                m
            };
            assert_eq!(equal, mult, "at {x}");
            assert_eq!(above + equal + below, t.len());
        }
        let star = build_path_tree(&k13(), 0).unwrap();
        assert_eq!(star.eigenvalue_counts(&q(0, 1)), (1, 2, 1));
    }

    #[test]
    fn spectral_radii() {
        let star = tree_spectral_radius(&build_path_tree(&k13(), 0).unwrap());
        assert!((star.to_f64() - 3f64.sqrt()).abs() < 1e-9);
        let p5 = tree_spectral_radius(&build_path_tree(&Graph::cycle(3).unwrap(), 0).unwrap());
        assert!((p5.to_f64() - 3f64.sqrt()).abs() < 1e-9);
        let k2 = tree_spectral_radius(&build_path_tree(&Graph::path(2), 0).unwrap());
        assert_eq!(k2.value().exact_value(), Some(&q(1, 1)));
        let exact = largest_root(&IntPoly::from_i64(&[0, 0, -3, 0, 1])).unwrap();
        assert_eq!(star.value().cmp_exact(&exact), Ordering::Equal);
    }

    #[test]
    fn matching_root_below_tree_root() {
        for g in [Graph::petersen(), Graph::complete_bipartite(3, 3).unwrap(), Graph::cycle(5).unwrap()] {
            let mu = matching_root_bound(&g);
            let b = RootBound::regular(g.max_degree()).unwrap();
            for u in [0, 1] {
                let r = tree_spectral_radius(&build_path_tree(&g, u).unwrap());
                assert_ne!(mu.value().cmp_exact(r.value()), Ordering::Greater);
                assert!(b.verdict_for(r.value()).is_within());
            }
        }
    }
}
