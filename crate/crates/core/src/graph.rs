//! Small simple undirected graphs with one bitset word per vertex.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;
use crate::vertex_set::VertexSet;
use crate::MAX_VERTICES;

/// A simple undirected graph on at most [`MAX_VERTICES`] vertices.
///
/// Rows past `order()` are always zero, so derived equality and ordering
/// compare labeled graphs exactly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub(crate) fn empty_unchecked(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn size(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub(crate) fn rows(&self) -> &[u32] {
        &self.adj[..self.order()]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & (1 << v) != 0
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.set_edge(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.clear_edge(u, v);
        Ok(())
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted(self.rows().iter().map(|r| r.count_ones()).collect())
    }

    /// `X` is complete: every two distinct members are adjacent.
    pub fn is_clique(&self, xs: VertexSet) -> bool {
        xs.iter()
            .all(|v| xs.without(v).is_subset(self.neighbors(v)))
    }

    /// `X` is anticomplete: no two members are adjacent.
    pub fn is_independent(&self, xs: VertexSet) -> bool {
        xs.iter()
            .all(|v| self.neighbors(v).intersection(xs).is_empty())
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        let mut out = *self;
        for v in 0..self.order() {
            out.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        out
    }

    /// Vertices of `self` keep their labels; vertices of `other` are shifted
    /// up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order() + other.order();
        let mut out = Graph::empty(n)?;
        out.adj[..self.order()].copy_from_slice(self.rows());
        let shift = self.order();
        for (v, &row) in other.rows().iter().enumerate() {
            out.adj[shift + v] = row << shift;
        }
        Ok(out)
    }

    /// `G[X]`, with the members of `xs` relabeled `0..|X|` in ascending order.
    pub fn induced_subgraph(&self, xs: VertexSet) -> Graph {
        let xs = xs.intersection(self.vertices());
        let verts = xs.to_vec();
        let mut out = Graph::empty_unchecked(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    out.set_edge(i, j);
                }
            }
        }
        out
    }

    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_subgraph(self.vertices().without(v)))
    }

    /// Appends a vertex adjacent to exactly `neighbors`.
    pub fn add_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        let n = self.order();
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(n + 1));
        }
        if !neighbors.is_subset(self.vertices()) {
            return Err(Error::VertexOutOfRange {
                vertex: neighbors.iter().last().unwrap_or(0),
                order: n,
            });
        }
        let mut out = *self;
        out.n += 1;
        for u in neighbors {
            out.set_edge(u, n);
        }
        Ok(out)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = VertexSet::EMPTY;
        if perm.len() != n {
            return Err(Error::InvalidPartition(format!(
                "permutation has length {} for {} vertices",
                perm.len(),
                n
            )));
        }
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::InvalidPartition(format!(
                    "{perm:?} is not a permutation"
                )));
            }
            seen.insert(p);
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Graph {
        let mut out = Graph::empty_unchecked(self.order());
        for (u, v) in self.edges() {
            out.set_edge(perm[u], perm[v]);
        }
        out
    }

    /// Merges `u` and `v` into one vertex adjacent to `N(u) ∪ N(v) − {u, v}`.
    ///
    /// The merged vertex takes the label `min(u, v)`; labels above `max(u, v)`
    /// shift down by one.
    pub fn contract_pair(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let mut merged = *self;
        let union = self
            .neighbors(keep)
            .union(self.neighbors(gone))
            .without(keep)
            .without(gone);
        for w in self.neighbors(gone) {
            merged.clear_edge(gone, w);
        }
        for w in union {
            merged.set_edge(keep, w);
        }
        merged.remove_vertex(gone)
    }

    /// Replaces the edge `uv` by a path `u t v` through a new last vertex `t`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut out = *self;
        out.clear_edge(u, v);
        out.add_vertex(VertexSet::singleton(u).with(v))
    }

    pub fn to_graph6(&self) -> String {
        crate::graph6::encode(self)
    }

    pub fn from_graph6(s: &str) -> Result<Graph> {
        crate::graph6::decode(s)
    }

    /// Undirected DOT, labeled with the graph6 string.
    pub fn to_dot(&self) -> String {
        let mut out = format!(
            "graph g {{\n  label=\"{}\";\n",
            self.to_graph6().replace('\\', "\\\\")
        );
        for v in 0..self.order() {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} ", self.to_graph6())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

/// The named graphs used throughout: `C_n`, `P_n`, `K_n`, `K_{a,b}`, `kK_2`, `E_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    Cycle(usize),
    /// `n` vertices and `n - 1` edges.
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `k` disjoint edges; `Matching(2)` is `M_2`.
    Matching(usize),
    Empty(usize),
}

impl GraphFamily {
    pub fn construct(self) -> Result<Graph> {
        use GraphFamily::*;
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        match self {
            Cycle(n) => {
                if n < 3 {
                    return bad("a cycle needs at least 3 vertices");
                }
                let mut g = Graph::empty(n)?;
                for i in 0..n {
                    g.set_edge(i, (i + 1) % n);
                }
                Ok(g)
            }
            Path(n) => {
                if n < 1 {
                    return bad("a path needs at least 1 vertex");
                }
                let mut g = Graph::empty(n)?;
                for i in 1..n {
                    g.set_edge(i - 1, i);
                }
                Ok(g)
            }
            Complete(n) => Ok(Graph::empty(n)?.complement()),
            CompleteBipartite(a, b) => {
                let mut g = Graph::empty(a.saturating_add(b))?;
                for u in 0..a {
                    for v in a..a + b {
                        g.set_edge(u, v);
                    }
                }
                Ok(g)
            }
            Matching(k) => {
                let mut g = Graph::empty(k.saturating_mul(2))?;
                for i in 0..k {
                    g.set_edge(2 * i, 2 * i + 1);
                }
                Ok(g)
            }
            Empty(n) => Graph::empty(n),
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::Cycle(n) => write!(f, "C{n}"),
            GraphFamily::Path(n) => write!(f, "P{n}"),
            GraphFamily::Complete(n) => write!(f, "K{n}"),
            GraphFamily::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            GraphFamily::Matching(k) => write!(f, "M{k}"),
            GraphFamily::Empty(n) => write!(f, "E{n}"),
        }
    }
}

/// Parses the short names printed by `Display`: `C5`, `P3`, `K4`, `K3,3`, `M2`, `E0`.
impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidFamily(format!("unrecognized family {s:?}"));
        let mut chars = s.chars();
        let tag = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let num = |t: &str| -> Result<usize> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<usize>().map_err(|_| bad())
        };
        match tag {
            'C' => Ok(GraphFamily::Cycle(num(rest)?)),
            'P' => Ok(GraphFamily::Path(num(rest)?)),
            'M' => Ok(GraphFamily::Matching(num(rest)?)),
            'E' => Ok(GraphFamily::Empty(num(rest)?)),
            'K' => match rest.split_once(',') {
                Some((a, b)) => Ok(GraphFamily::CompleteBipartite(num(a)?, num(b)?)),
                None => Ok(GraphFamily::Complete(num(rest)?)),
            },
            _ => Err(bad()),
        }
    }
}
