//! Test corpora: small connected graphs up to isomorphism, standard named
//! graphs, and random cubic graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k % 2 == 0 {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}

/// Every connected graph on exactly `n` vertices, one per isomorphism
/// class, each labelled by its lexicographically least edge mask.
/// Practical for `n <= 6`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "enumeration over all labelled graphs is only feasible for tiny n");
    let ps = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in ps.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1u64 << ps.len()) {
        let canon = perms
            .iter()
            .map(|p| {
                ps.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u64, |acc, (_, &(u, v))| acc | 1 << index[p[u]][p[v]])
            })
            .min()
            .unwrap_or(0);
        if canon != mask {
            continue;
        }
        let g = mask_graph(n, &ps, mask);
        if g.is_connected() {
            seen.insert(mask);
        }
    }
    seen.into_iter().map(|m| mask_graph(n, &ps, m)).collect()
}

fn mask_graph(n: usize, ps: &[(usize, usize)], mask: u64) -> Graph {
    let edges = ps
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).expect("pairs are simple")
}

/// Named graph for reports.
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub graph: Graph,
}

/// All connected graphs on at most six vertices, then `K_{3,3}`, `C_4` and
/// the Petersen graph minus an edge.
pub fn standard_corpus() -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for (i, g) in connected_graphs(n).into_iter().enumerate() {
            out.push(Entry {
                name: format!("connected{n}#{i}"),
                graph: g,
            });
        }
    }
    out.push(Entry {
        name: "K3,3".into(),
        graph: Graph::complete_bipartite(3, 3).unwrap(),
    });
    out.push(Entry {
        name: "C4".into(),
        graph: Graph::cycle(4).unwrap(),
    });
    out.push(Entry {
        name: "Petersen-e".into(),
        graph: Graph::petersen().without_edge(0),
    });
    out
}

/// Uniform pairing model, retried until the result is simple. `n` must be
/// even and at least 4.
pub fn random_cubic<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 4 && n % 2 == 0, "cubic graphs need an even n >= 4");
    loop {
        let mut points: Vec<usize> = (0..3 * n).collect();
        points.shuffle(rng);
        let mut edges = BTreeSet::new();
        let ok = points.chunks(2).all(|p| {
            let (u, v) = (p[0] / 3, p[1] / 3);
            u != v && edges.insert((u.min(v), u.max(v)))
        });
        if ok {
            return Graph::new(n, edges).unwrap();
        }
    }
}
