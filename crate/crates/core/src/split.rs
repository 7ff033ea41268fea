//! Split graphs, split partitions and the composition `(S, A, B) ∘ H`, which
//! joins `H` completely to `A` and anticompletely to `B`.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily};
use crate::induced::{for_each_induced_cycle, has_induced};
use crate::realize::RealizationSource;
use crate::sequence::DegreeSequence;
use crate::vertex_set::VertexSet;

/// `(A, B)` with `A` complete and `B` anticomplete, covering the host graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SplitPartition {
    #[serde(serialize_with = "ser_set")]
    a: VertexSet,
    #[serde(serialize_with = "ser_set")]
    b: VertexSet,
}

fn ser_set<S: serde::Serializer>(v: &VertexSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter())
}

impl SplitPartition {
    /// Validates `(a, V(g) - a)` as a split partition of `g`.
    pub fn new(g: &Graph, a: VertexSet) -> Result<Self> {
        if !a.is_subset(g.vertices()) {
            return Err(Error::InvalidPartition(format!(
                "complete side {{{a}}} is not within {} vertices",
                g.order()
            )));
        }
        let b = g.vertices().difference(a);
        if !g.is_clique(a) {
            return Err(Error::InvalidPartition(format!("{{{a}}} is not complete")));
        }
        if !g.is_independent(b) {
            return Err(Error::InvalidPartition(format!(
                "{{{b}}} is not anticomplete"
            )));
        }
        Ok(SplitPartition { a, b })
    }

    pub fn complete_side(&self) -> VertexSet {
        self.a
    }

    pub fn anticomplete_side(&self) -> VertexSet {
        self.b
    }
}

/// `m = max{i : d_i >= i - 1}` (1-based), the size of the clique side of
/// the threshold partition; 0 for the empty sequence.
fn threshold_index(terms: &[u32]) -> usize {
    terms
        .iter()
        .enumerate()
        .filter(|&(i, &d)| d as usize >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0)
}

/// Hammer–Simeone: `d` is the degree sequence of a split graph iff the
/// Erdős–Gallai inequality at `k = m` is an equality. Every realization of
/// such a sequence is split.
pub fn is_split_sequence(d: &DegreeSequence) -> Result<bool> {
    d.require_graphical()?;
    Ok(split_equality(d.terms()))
}

fn split_equality(t: &[u32]) -> bool {
    let m = threshold_index(t);
    let head: u64 = t[..m].iter().map(|&x| x as u64).sum();
    let tail: u64 = t[m..].iter().map(|&x| x as u64).sum();
    head == (m as u64) * (m as u64).saturating_sub(1) + tail
}

/// The `m` vertices of largest degree (ties to lower labels).
fn threshold_side(g: &Graph) -> VertexSet {
    let mut by_degree: Vec<usize> = (0..g.order()).collect();
    by_degree.sort_by(|&u, &v| g.degree(v).cmp(&g.degree(u)).then(u.cmp(&v)));
    let m = threshold_index(g.degree_sequence().terms());
    by_degree[..m].iter().copied().collect()
}

/// Whether the threshold partition (top `m` vertices by degree against the
/// rest) is a split partition, which happens exactly for split graphs.
pub fn is_split_graph(g: &Graph) -> bool {
    SplitPartition::new(g, threshold_side(g)).is_ok()
}

/// Forbidden induced subgraphs: split iff no induced `M_2`, `C_4` or `C_5`.
pub fn is_split_by_forbidden(g: &Graph) -> bool {
    [
        GraphFamily::Matching(2),
        GraphFamily::Cycle(4),
        GraphFamily::Cycle(5),
    ]
    .iter()
    .all(|f| !has_induced(g, &f.construct().expect("fixed family")))
}

/// A split partition, choosing the lexicographically least complete side
/// among complete sides of maximum size.
///
/// Any split partition differs from another one by moving at most one
/// vertex out of the clique side and at most one into it, so the candidates
/// are one-swap neighbors of the threshold partition.
pub fn find_split_partition(g: &Graph) -> Option<SplitPartition> {
    let a0 = threshold_side(g);
    SplitPartition::new(g, a0).ok()?;
    let b0 = g.vertices().difference(a0);
    let outs = std::iter::once(None).chain(a0.iter().map(Some));
    let mut best: Option<SplitPartition> = None;
    for out in outs {
        let base = out.map_or(a0, |a| a0.without(a));
        for inn in std::iter::once(None).chain(b0.iter().map(Some)) {
            let cand = inn.map_or(base, |b| base.with(b));
            let Ok(p) = SplitPartition::new(g, cand) else {
                continue;
            };
            let better = match &best {
                None => true,
                Some(cur) => {
                    let (x, y) = (cand.len(), cur.a.len());
                    x > y || (x == y && cand.to_vec() < cur.a.to_vec())
                }
            };
            if better {
                best = Some(p);
            }
        }
    }
    best
}

/// Every split partition of `g`, by pruned search over vertex assignments,
/// ordered by the bits of the complete side.
pub fn all_split_partitions(g: &Graph) -> Vec<SplitPartition> {
    let mut out = Vec::new();
    let _ = assign(g, 0, VertexSet::EMPTY, VertexSet::EMPTY, &mut |a, b| {
        out.push(SplitPartition { a, b });
        ControlFlow::Continue(())
    });
    out.sort_by_key(|p| p.a.bits());
    out
}

/// Whether a split partition exists, by the same search as
/// [`all_split_partitions`]; independent of degrees.
pub fn has_split_partition_by_search(g: &Graph) -> bool {
    assign(g, 0, VertexSet::EMPTY, VertexSet::EMPTY, &mut |_, _| {
        ControlFlow::Break(())
    })
    .is_break()
}

fn assign(
    g: &Graph,
    v: usize,
    a: VertexSet,
    b: VertexSet,
    f: &mut dyn FnMut(VertexSet, VertexSet) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if v == g.order() {
        return f(a, b);
    }
    let nb = g.neighbors(v);
    if a.is_subset(nb) {
        assign(g, v + 1, a.with(v), b, f)?;
    }
    if nb.intersection(b).is_empty() {
        assign(g, v + 1, a, b.with(v), f)?;
    }
    ControlFlow::Continue(())
}

/// A split graph `S` with a split partition, and a graph `H` to compose.
///
/// Serializes as its text form (see the `Display` impl).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionSpec {
    s: Graph,
    partition: SplitPartition,
    h: Graph,
}

impl Serialize for CompositionSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which side of the split partition `H` is joined to. Only
/// [`JoinSide::Complete`] is the composition; the other exists so the
/// verifier can be checked against a deliberately wrong construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum JoinSide {
    Complete,
    Anticomplete,
}

impl CompositionSpec {
    pub fn new(s: Graph, complete_side: VertexSet, h: Graph) -> Result<Self> {
        let partition = SplitPartition::new(&s, complete_side)?;
        if s.order() + h.order() > crate::MAX_VERTICES {
            return Err(Error::TooManyVertices(s.order() + h.order()));
        }
        Ok(CompositionSpec { s, partition, h })
    }

    pub fn split_graph(&self) -> &Graph {
        &self.s
    }

    pub fn partition(&self) -> SplitPartition {
        self.partition
    }

    pub fn attached(&self) -> &Graph {
        &self.h
    }

    /// `(S, A, B) ∘ H` on vertices `0..|S|` (from `S`) then `|S|..` (from `H`).
    pub fn compose(&self) -> Graph {
        self.compose_joining(JoinSide::Complete)
    }

    pub(crate) fn compose_joining(&self, side: JoinSide) -> Graph {
        let mut g = self
            .s
            .disjoint_union(&self.h)
            .expect("order checked on construction");
        let shift = self.s.order();
        let joined = match side {
            JoinSide::Complete => self.partition.a,
            JoinSide::Anticomplete => self.partition.b,
        };
        for u in joined {
            for v in 0..self.h.order() {
                g.set_edge(u, shift + v);
            }
        }
        g
    }

    /// The degree sequence of the composition from degrees alone:
    /// `deg_S + |H|` on `A`, `deg_S` on `B`, `deg_H + |A|` on `H`.
    pub fn predicted_degrees(&self) -> DegreeSequence {
        let (a, hn) = (self.partition.a, self.h.order() as u32);
        let mut terms: Vec<u32> = (0..self.s.order())
            .map(|v| self.s.degree(v) as u32 + if a.contains(v) { hn } else { 0 })
            .collect();
        terms.extend((0..self.h.order()).map(|v| (self.h.degree(v) + a.len()) as u32));
        DegreeSequence::from_unsorted(terms)
    }
}

/// `S-graph6;A indices;H`, where `H` is a family name (`C5`, `K3,3`, ...)
/// when it is exactly that family's graph, and graph6 otherwise.
impl fmt::Display for CompositionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};", self.s.to_graph6(), self.partition.a)?;
        match family_name(&self.h) {
            Some(name) => write!(f, "{name}"),
            None => write!(f, "{}", self.h.to_graph6()),
        }
    }
}

fn family_name(h: &Graph) -> Option<GraphFamily> {
    let n = h.order();
    let mut cands = vec![
        GraphFamily::Cycle(n),
        GraphFamily::Complete(n),
        GraphFamily::Path(n),
    ];
    for a in 1..n {
        cands.push(GraphFamily::CompleteBipartite(a, n - a));
    }
    cands
        .into_iter()
        .find(|f| f.construct().is_ok_and(|g| g == *h))
}

impl FromStr for CompositionSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.trim().split(';').collect();
        let [s, a, h] = parts[..] else {
            return Err(Error::CompositionParse(format!(
                "expected three ';'-separated fields, found {}",
                parts.len()
            )));
        };
        let s = Graph::from_graph6(s)?;
        let a = parse_indices(a)?;
        let h = match h.trim().parse::<GraphFamily>() {
            Ok(f) => f.construct()?,
            Err(_) => Graph::from_graph6(h)?,
        };
        CompositionSpec::new(s, a, h)
    }
}

/// Comma-separated vertex indices; empty means the empty set.
pub fn parse_indices(text: &str) -> Result<VertexSet> {
    let text = text.trim();
    let mut set = VertexSet::EMPTY;
    if text.is_empty() {
        return Ok(set);
    }
    for tok in text.split(',') {
        let tok = tok.trim();
        let v: usize = tok
            .parse()
            .ok()
            .filter(|_| tok.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(|| Error::CompositionParse(format!("{tok:?} is not a vertex index")))?;
        if v >= crate::MAX_VERTICES {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: crate::MAX_VERTICES,
            });
        }
        set.insert(v);
    }
    Ok(set)
}

/// A composition found inside a host graph: relabeling the host by `perm`
/// (exterior vertices ascending, then the cycle in cyclic order) yields
/// exactly `spec.compose()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub spec: CompositionSpec,
    pub perm: Vec<usize>,
}

/// Tries to write `g` as `(G[A ∪ B], A, B) ∘ C` around the induced cycle
/// `cycle` (in cyclic order), where `A` and `B` are the exterior vertices
/// complete and anticomplete to the cycle.
pub fn decompose_around_cycle(g: &Graph, cycle: &[usize]) -> Option<Decomposition> {
    let cset: VertexSet = cycle.iter().copied().collect();
    let outside = g.vertices().difference(cset);
    let mut a = VertexSet::EMPTY;
    for x in outside {
        let seen = g.neighbors(x).intersection(cset);
        if seen == cset {
            a.insert(x);
        } else if !seen.is_empty() {
            return None;
        }
    }
    if !g.is_clique(a) || !g.is_independent(outside.difference(a)) {
        return None;
    }
    let k = cycle.len();
    let h = GraphFamily::Cycle(k).construct().ok()?;
    let ext = outside.to_vec();
    let mut perm = vec![0; g.order()];
    for (i, &v) in ext.iter().enumerate() {
        perm[v] = i;
    }
    for (i, &v) in cycle.iter().enumerate() {
        perm[v] = ext.len() + i;
    }
    let s = g.induced_subgraph(outside);
    let a_local: VertexSet = ext
        .iter()
        .enumerate()
        .filter(|(_, v)| a.contains(**v))
        .map(|(i, _)| i)
        .collect();
    let spec = CompositionSpec::new(s, a_local, h).ok()?;
    Some(Decomposition { spec, perm })
}

/// Whether some `|A|` leaves at least `k` entries equal to `2 + |A|`, as
/// the cycle vertices of any `(S, A, B) ∘ C_k` require.
fn cycle_degrees_possible(d: &DegreeSequence, k: usize) -> bool {
    let n = d.len();
    n >= k && (0..=n - k).any(|a| d.terms().iter().filter(|&&t| t as usize == 2 + a).count() >= k)
}

/// A composition `(S, A, B) ∘ C_k` with degree sequence `d`, found by
/// scanning realizations for an induced `C_k` whose exterior splits into a
/// clique complete to it and an independent set anticomplete to it.
pub fn match_split_compose_cycle_in(
    src: &dyn RealizationSource,
    d: &DegreeSequence,
    k: usize,
) -> Result<Option<Decomposition>> {
    if k < 3 {
        return Err(Error::CycleLength { min: 3, got: k });
    }
    d.require_graphical()?;
    if !cycle_degrees_possible(d, k) {
        return Ok(None);
    }
    for g in src.realizations(d)?.iter() {
        let mut found = None;
        let _ = for_each_induced_cycle(g, k, k, |c| match decompose_around_cycle(g, c) {
            Some(dec) => {
                found = Some(dec);
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

pub fn match_split_compose_cycle(d: &DegreeSequence, k: usize) -> Result<Option<Decomposition>> {
    match_split_compose_cycle_in(&crate::realize::Backtracking::default(), d, k)
}
