//! The degree-preserving surgeries behind the half-join structure: contract
//! a cycle edge and subdivide an attachment edge, rewire four edges around
//! two nonadjacent vertices complete to a cycle, and trade `C_k ∐ P_2` for
//! `C_{k-1} ∐ P_3`.

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily};
use crate::sequence::DegreeSequence;
use crate::vertex_set::VertexSet;

fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}

/// Whether `xs` induces a cycle (connected, 2-regular) in `g`.
pub fn induces_cycle(g: &Graph, xs: VertexSet) -> bool {
    let k = xs.len();
    if k < 3 {
        return false;
    }
    if xs
        .iter()
        .any(|v| g.neighbors(v).intersection(xs).len() != 2)
    {
        return false;
    }
    // 2-regular and connected
    let start = xs.min().unwrap();
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(g.neighbors(v).intersection(xs));
        }
        frontier = next.difference(seen);
        seen = seen.union(next);
    }
    seen == xs
}

/// Whether `order` lists the vertices of an induced cycle in cyclic order.
pub fn is_induced_cycle_in_order(g: &Graph, order: &[usize]) -> bool {
    let k = order.len();
    let xs: VertexSet = order.iter().copied().collect();
    xs.len() == k
        && k >= 3
        && order.iter().all(|&v| v < g.order())
        && induces_cycle(g, xs)
        && (0..k).all(|i| g.has_edge(order[i], order[(i + 1) % k]))
}

/// `K` and `K'` from the contraction-subdivision step, with the positions
/// of `x` and the new vertex `t` in `K'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractSubdivide {
    pub k: Graph,
    pub k_prime: Graph,
    pub x: usize,
    pub t: usize,
}

impl ContractSubdivide {
    /// `K' - {x, t}`.
    pub fn reduced(&self) -> Graph {
        self.k_prime
            .induced_subgraph(self.k_prime.vertices().without(self.x).without(self.t))
    }

    /// `D(K) = D(K')` and `K' - {x, t} ≅ C_{k-1}`, where `K` has `k + 1`
    /// vertices.
    pub fn check(&self) -> std::result::Result<(), String> {
        if self.k.degree_sequence() != self.k_prime.degree_sequence() {
            return Err(format!(
                "D(K) = ({}) but D(K') = ({})",
                self.k.degree_sequence(),
                self.k_prime.degree_sequence()
            ));
        }
        let cycle_len = self.k.order() - 2;
        let want = GraphFamily::Cycle(cycle_len)
            .construct()
            .map_err(|e| e.to_string())?;
        if !is_isomorphic(&self.reduced(), &want) {
            return Err(format!(
                "K' - {{x, t}} = {} is not C{cycle_len}",
                self.reduced()
            ));
        }
        Ok(())
    }
}

/// `K = G[C ∪ {x}]` and `K'`, obtained from `K` by contracting `{v, z}` and
/// then subdividing `xy` with a new vertex `t`.
///
/// Requires: `cycle` induces `C_k` with `k >= 5`; `x` lies outside it and is
/// adjacent to `y` and not to `z` on it; `v` is a cycle neighbor of `z`
/// other than `y`.
pub fn gadget_contract_subdivide(
    g: &Graph,
    cycle: VertexSet,
    x: usize,
    y: usize,
    z: usize,
    v: usize,
) -> Result<ContractSubdivide> {
    let n = g.order();
    if [x, y, z, v].iter().any(|&w| w >= n) || !cycle.is_subset(g.vertices()) {
        return precondition("a named vertex lies outside the graph");
    }
    if !induces_cycle(g, cycle) {
        return precondition(format!("{{{cycle}}} does not induce a cycle"));
    }
    if cycle.len() < 5 {
        return precondition(format!(
            "cycle has {} vertices; at least 5 are needed",
            cycle.len()
        ));
    }
    if cycle.contains(x) {
        return precondition("x lies on the cycle");
    }
    if !cycle.contains(y) || !cycle.contains(z) || !cycle.contains(v) {
        return precondition("y, z and v must lie on the cycle");
    }
    if !g.has_edge(x, y) {
        return precondition("x is not adjacent to y");
    }
    if g.has_edge(x, z) {
        return precondition("x is adjacent to z");
    }
    if !g.has_edge(z, v) {
        return precondition("v is not a cycle neighbor of z");
    }
    if v == y {
        return precondition("v must differ from y");
    }
    let keep = cycle.with(x);
    let local = |w: usize| {
        keep.iter()
            .position(|u| u == w)
            .expect("member of kept set")
    };
    let k = g.induced_subgraph(keep);
    let (lx, ly, lz, lv) = (local(x), local(y), local(z), local(v));
    let contracted = k.contract_pair(lv, lz)?;
    let (lo, hi) = (lv.min(lz), lv.max(lz));
    let after = |w: usize| match w.cmp(&hi) {
        std::cmp::Ordering::Equal => lo,
        std::cmp::Ordering::Greater => w - 1,
        std::cmp::Ordering::Less => w,
    };
    let (cx, cy) = (after(lx), after(ly));
    let k_prime = contracted.subdivide_edge(cx, cy)?;
    Ok(ContractSubdivide {
        k,
        t: k_prime.order() - 1,
        k_prime,
        x: cx,
    })
}

/// `G' = G + c1c3 - c3x + xy - yc1`.
///
/// Requires `c1c3` and `xy` to be non-edges and `c3x`, `yc1` to be edges,
/// with four distinct vertices. Each endpoint gains one edge and loses one,
/// so degrees are unchanged.
pub fn gadget_rewire(g: &Graph, c1: usize, c3: usize, x: usize, y: usize) -> Result<Graph> {
    let vs = [c1, c3, x, y];
    if vs.iter().any(|&w| w >= g.order()) {
        return precondition("a named vertex lies outside the graph");
    }
    if vs.iter().collect::<std::collections::BTreeSet<_>>().len() != 4 {
        return precondition("c1, c3, x and y must be distinct");
    }
    if g.has_edge(c1, c3) {
        return precondition("c1c3 is already an edge");
    }
    if !g.has_edge(c3, x) {
        return precondition("c3x is not an edge");
    }
    if g.has_edge(x, y) {
        return precondition("xy is already an edge");
    }
    if !g.has_edge(y, c1) {
        return precondition("yc1 is not an edge");
    }
    let mut out = *g;
    out.set_edge(c1, c3);
    out.clear_edge(c3, x);
    out.set_edge(x, y);
    out.clear_edge(y, c1);
    Ok(out)
}

/// `(D(C_k ∐ P_2), D(C_{k-1} ∐ P_3))`, equal for every `k >= 5`.
pub fn gadget_matching_pair(k: usize) -> Result<(DegreeSequence, DegreeSequence)> {
    if k < 5 {
        return Err(Error::CycleLength { min: 5, got: k });
    }
    let left = GraphFamily::Cycle(k)
        .construct()?
        .disjoint_union(&GraphFamily::Path(2).construct()?)?;
    let right = GraphFamily::Cycle(k - 1)
        .construct()?
        .disjoint_union(&GraphFamily::Path(3).construct()?)?;
    Ok((left.degree_sequence(), right.degree_sequence()))
}

/// `(D(C_{n+k}), D(C_n ∐ C_k))`.
pub fn cycle_split_pair(n: usize, k: usize) -> Result<(DegreeSequence, DegreeSequence)> {
    let whole = GraphFamily::Cycle(n + k).construct()?;
    let parts = GraphFamily::Cycle(n)
        .construct()?
        .disjoint_union(&GraphFamily::Cycle(k).construct()?)?;
    Ok((whole.degree_sequence(), parts.degree_sequence()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[u32]) -> DegreeSequence {
        DegreeSequence::from(v.to_vec())
    }

    /// `C_k` on `0..k` plus `x = k` adjacent to `attach`.
    fn cycle_with_x(k: usize, attach: &[usize]) -> Graph {
        let c = GraphFamily::Cycle(k).construct().unwrap();
        c.add_vertex(attach.iter().copied().collect()).unwrap()
    }

    #[test]
    fn contract_subdivide_on_pentagon() {
        // c1..c5 = 0..4, x adjacent only to c1; y = c1, z = c3, v = c4
        let g = cycle_with_x(5, &[0]);
        let out = gadget_contract_subdivide(&g, VertexSet::full(5), 5, 0, 2, 3).unwrap();
        assert_eq!(out.k.degree_sequence(), ds(&[3, 2, 2, 2, 2, 1]));
        assert_eq!(out.k_prime.degree_sequence(), ds(&[3, 2, 2, 2, 2, 1]));
        assert!(is_isomorphic(
            &out.reduced(),
            &GraphFamily::Cycle(4).construct().unwrap()
        ));
        out.check().unwrap();
    }

    #[test]
    fn contract_subdivide_on_hexagon() {
        let g = cycle_with_x(6, &[0, 1, 4]);
        let out = gadget_contract_subdivide(&g, VertexSet::full(6), 6, 1, 3, 2).unwrap();
        assert!(is_isomorphic(
            &out.reduced(),
            &GraphFamily::Cycle(5).construct().unwrap()
        ));
        out.check().unwrap();
    }

    #[test]
    fn contract_subdivide_preconditions() {
        let full = cycle_with_x(5, &[0, 1, 2, 3, 4]);
        assert!(matches!(
            gadget_contract_subdivide(&full, VertexSet::full(5), 5, 0, 2, 3),
            Err(Error::Precondition(m)) if m.contains("adjacent to z")
        ));
        let g = cycle_with_x(5, &[0]);
        let c5 = VertexSet::full(5);
        let cases = [
            (VertexSet::full(4), 5, 0, 2, 3, "induce a cycle"),
            (c5, 0, 1, 2, 3, "x lies on the cycle"),
            (c5, 5, 1, 2, 3, "not adjacent to y"),
            (c5, 5, 0, 2, 4, "cycle neighbor"),
            (c5, 5, 0, 1, 0, "v must differ"),
            (c5, 9, 0, 2, 3, "outside the graph"),
        ];
        for (cyc, x, y, z, v, msg) in cases {
            match gadget_contract_subdivide(&g, cyc, x, y, z, v) {
                Err(Error::Precondition(m)) => assert!(m.contains(msg), "{m} vs {msg}"),
                other => panic!("expected precondition error {msg}, got {other:?}"),
            }
        }
        let c4x = cycle_with_x(4, &[0]);
        assert!(gadget_contract_subdivide(&c4x, VertexSet::full(4), 4, 0, 2, 3).is_err());
    }

    /// `C_k` on `0..k`, then nonadjacent `x = k`, `y = k + 1` complete to it.
    fn cycle_with_two_hubs(k: usize) -> Graph {
        let all: VertexSet = VertexSet::full(k);
        GraphFamily::Cycle(k)
            .construct()
            .unwrap()
            .add_vertex(all)
            .unwrap()
            .add_vertex(all)
            .unwrap()
    }

    #[test]
    fn rewire_examples() {
        for k in [5, 6] {
            let g = cycle_with_two_hubs(k);
            let (x, y) = (k, k + 1);
            let g2 = gadget_rewire(&g, 0, 2, x, y).unwrap();
            assert_eq!(g.degree_sequence(), g2.degree_sequence());
            let order: Vec<usize> = std::iter::once(0).chain(2..k).collect();
            assert!(is_induced_cycle_in_order(&g2, &order));
            assert!(crate::induced::has_induced(
                &g2,
                &GraphFamily::Cycle(k - 1).construct().unwrap()
            ));
        }
    }

    #[test]
    fn rewire_preconditions() {
        let g = cycle_with_two_hubs(5);
        let cases = [
            (0, 1, 5, 6, "c1c3 is already an edge"),
            (0, 2, 5, 5, "distinct"),
            (0, 2, 5, 9, "outside"),
        ];
        for (c1, c3, x, y, msg) in cases {
            match gadget_rewire(&g, c1, c3, x, y) {
                Err(Error::Precondition(m)) => assert!(m.contains(msg), "{m}"),
                other => panic!("{other:?}"),
            }
        }
        let mut h = g;
        h.clear_edge(2, 5);
        assert!(
            matches!(gadget_rewire(&h, 0, 2, 5, 6), Err(Error::Precondition(m)) if m.contains("c3x"))
        );
        let mut h = g;
        h.set_edge(5, 6);
        assert!(
            matches!(gadget_rewire(&h, 0, 2, 5, 6), Err(Error::Precondition(m)) if m.contains("xy"))
        );
        let mut h = g;
        h.clear_edge(6, 0);
        assert!(
            matches!(gadget_rewire(&h, 0, 2, 5, 6), Err(Error::Precondition(m)) if m.contains("yc1"))
        );
    }

    #[test]
    fn matching_pair_examples() {
        let (a, b) = gadget_matching_pair(5).unwrap();
        assert_eq!(a, ds(&[2, 2, 2, 2, 2, 1, 1]));
        assert_eq!(a, b);
        let (a, b) = gadget_matching_pair(6).unwrap();
        assert_eq!(a, ds(&[2, 2, 2, 2, 2, 2, 1, 1]));
        assert_eq!(a, b);
        assert!(gadget_matching_pair(4).is_err());
    }

    #[test]
    fn cycle_detection() {
        let g = GraphFamily::Cycle(5).construct().unwrap();
        assert!(induces_cycle(&g, VertexSet::full(5)));
        assert!(!induces_cycle(&g, VertexSet::full(4)));
        let two = GraphFamily::Cycle(3).construct().unwrap();
        let two = two.disjoint_union(&two).unwrap();
        assert!(!induces_cycle(&two, VertexSet::full(6)));
        assert!(is_induced_cycle_in_order(&g, &[0, 1, 2, 3, 4]));
        assert!(!is_induced_cycle_in_order(&g, &[0, 2, 1, 3, 4]));
    }
}
