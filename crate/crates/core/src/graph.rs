//! Simple undirected graphs, signings and 2-lifts.
//!
//! The edge list order of a [`Graph`] is the canonical edge order: signings,
//! partial signings and the descent all index edges by position in it.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Build a simple graph. Each pair is stored as `(min, max)`; order of the
    /// list is kept.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!("duplicate edge {e:?}")));
            }
            out.push(e);
        }
        Ok(Graph { n, edges: out })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        let first = *d.first()?;
        d.iter().all(|&x| x == first).then_some(first)
    }

    /// Neighbour lists, ascending.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Component index per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let adj = self.adjacency_lists();
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn component_count(&self) -> usize {
        self.components().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Two-colouring, if the graph is bipartite. Within each component the
    /// lowest-index vertex is put on the left.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let adj = self.adjacency_lists();
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(Side::Left);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(su.other());
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition {
            side: side.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn adjacency(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            m.set(u, v, 1);
            m.set(v, u, 1);
        }
        m
    }

    /// Adjacency matrix with each edge entry multiplied by its sign.
    pub fn signed_adjacency(&self, s: &Signing) -> Result<IntMatrix> {
        self.check_len(s.len())?;
        let mut m = IntMatrix::zeros(self.n, self.n);
        for (&(u, v), &sign) in self.edges.iter().zip(s.signs()) {
            m.set(u, v, i64::from(sign));
            m.set(v, u, i64::from(sign));
        }
        Ok(m)
    }

    /// The 2-lift selected by `s`: vertex `v` becomes the fibre `{v, v+n}`.
    /// A `+1` edge `(u,v)` becomes `(u,v), (u+n,v+n)`; a `-1` edge becomes
    /// `(u,v+n), (u+n,v)`.
    pub fn two_lift(&self, s: &Signing) -> Result<Graph> {
        self.check_len(s.len())?;
        let n = self.n;
        let mut edges = Vec::with_capacity(2 * self.edges.len());
        for (&(u, v), &sign) in self.edges.iter().zip(s.signs()) {
            if sign > 0 {
                edges.push((u, v));
                edges.push((u + n, v + n));
            } else {
                edges.push((u, v + n));
                edges.push((u + n, v));
            }
        }
        Graph::new(2 * n, edges)
    }

    /// Remove the given vertices, relabelling the rest in order.
    pub fn induced_without(&self, removed: &[bool]) -> Graph {
        let mut map = vec![usize::MAX; self.n];
        let mut k = 0;
        for v in 0..self.n {
            if !removed[v] {
                map[v] = k;
                k += 1;
            }
        }
        Graph {
            n: k,
            edges: self
                .edges
                .iter()
                .filter(|&&(u, v)| !removed[u] && !removed[v])
                .map(|&(u, v)| (map[u], map[v]))
                .collect(),
        }
    }

    /// The subgraph induced on `keep`, relabelled in vertex order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut removed = vec![true; self.n];
        for &v in keep {
            removed[v] = false;
        }
        self.induced_without(&removed)
    }

    /// Disjoint union; `other`'s vertices are shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n;
        Graph {
            n: n + other.n,
            edges: self
                .edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + n, v + n)))
                .collect(),
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.edges.len() {
            return Err(Error::LengthMismatch {
                expected: self.edges.len(),
                actual: len,
            });
        }
        Ok(())
    }

    /// Edge-list text: `n m`, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let parse_pair = |lineno: usize, line: &str| -> Result<(usize, usize)> {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected two integers, found {line:?}"),
                });
            }
            let num = |t: &str| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("bad integer {t:?}"),
                })
            };
            Ok((num(toks[0])?, num(toks[1])?))
        };
        let (i, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line \"n m\"".into(),
        })?;
        let (n, m) = parse_pair(i + 1, header)?;
        let mut edges = Vec::with_capacity(m);
        let mut seen = HashSet::new();
        let mut last_line = i + 1;
        for (i, line) in lines {
            last_line = i + 1;
            let (u, v) = parse_pair(i + 1, line)?;
            if edges.len() == m {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("more than the declared {m} edges"),
                });
            }
            if u == v || u >= n || v >= n {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("invalid edge ({u}, {v}) for {n} vertices"),
                });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("duplicate edge ({u}, {v})"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: last_line,
                message: format!("declared {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }

    // ---- generators ----

    /// Complete bipartite graph with sides of size `p` (vertices `0..p`) and
    /// `q` (vertices `p..p+q`). Left vertices have degree `q`, right ones `p`.
    pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidGraph("complete bipartite side of size zero".into()));
        }
        Graph::new(
            p + q,
            (0..p).flat_map(|i| (0..q).map(move |j| (i, p + j))),
        )
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            .expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("cycle needs 3 vertices, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Path with `n` vertices.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen is simple")
    }

    /// Copy with edge `idx` removed.
    pub fn without_edge(&self, idx: usize) -> Graph {
        let mut g = self.clone();
        g.edges.remove(idx);
        g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<Side>,
}

/// A `+1`/`-1` label per edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Signing {
    signs: Vec<i8>,
}

impl fmt::Debug for Signing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .signs
            .iter()
            .map(|&x| if x > 0 { '+' } else { '-' })
            .collect();
        write!(f, "Signing({s})")
    }
}

impl Signing {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidGraph(format!("sign {bad} is not +1 or -1")));
        }
        Ok(Signing { signs })
    }

    pub fn all_plus(m: usize) -> Self {
        Signing { signs: vec![1; m] }
    }

    pub fn all_minus(m: usize) -> Self {
        Signing { signs: vec![-1; m] }
    }

    /// Bit `i` of `mask` set means edge `i` is `-1`.
    pub fn from_mask(m: usize, mask: u64) -> Self {
        Signing {
            signs: (0..m)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect(),
        }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn to_text(&self) -> String {
        self.signs
            .iter()
            .map(|&s| if s > 0 { "+1\n" } else { "-1\n" })
            .collect()
    }

    pub fn parse_text(text: &str) -> Result<Signing> {
        let partial = PartialSigning::parse_text(text)?;
        let signs = partial
            .assignments()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                a.ok_or(Error::Parse {
                    line: i + 1,
                    message: "unset entry \"0\" in a full signing".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Signing { signs })
    }
}

/// Signs fixed on any subset of the edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialSigning {
    assignments: Vec<Option<i8>>,
}

impl PartialSigning {
    pub fn unset(m: usize) -> Self {
        PartialSigning {
            assignments: vec![None; m],
        }
    }

    pub fn new(assignments: Vec<Option<i8>>) -> Result<Self> {
        if let Some(bad) = assignments.iter().flatten().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidGraph(format!("sign {bad} is not +1 or -1")));
        }
        Ok(PartialSigning { assignments })
    }

    pub fn assignments(&self) -> &[Option<i8>] {
        &self.assignments
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn fixed_count(&self) -> usize {
        self.assignments.iter().flatten().count()
    }

    /// Copy with edge `e` fixed to `sign`.
    pub fn with(&self, e: usize, sign: i8) -> Self {
        let mut p = self.clone();
        p.assignments[e] = Some(sign);
        p
    }

    pub fn to_signing(&self) -> Option<Signing> {
        self.assignments
            .iter()
            .copied()
            .collect::<Option<Vec<_>>>()
            .map(|signs| Signing { signs })
    }

    pub fn to_text(&self) -> String {
        self.assignments
            .iter()
            .map(|a| match a {
                Some(1) => "+1\n",
                Some(_) => "-1\n",
                None => "0\n",
            })
            .collect()
    }

    /// One entry per non-blank line: `+1`, `1`, `-1`, or `0` for unset.
    pub fn parse_text(text: &str) -> Result<PartialSigning> {
        let mut assignments = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            assignments.push(match t {
                "+1" | "1" => Some(1),
                "-1" => Some(-1),
                "0" => None,
                other => {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("expected +1, -1 or 0, found {other:?}"),
                    })
                }
            });
        }
        Ok(PartialSigning { assignments })
    }
}

impl From<&Signing> for PartialSigning {
    fn from(s: &Signing) -> Self {
        PartialSigning {
            assignments: s.signs.iter().map(|&x| Some(x)).collect(),
        }
    }
}
