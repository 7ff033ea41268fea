//! Induced-subgraph containment, induced cycles, holes and chordality.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Finds an induced copy of `h` in `g`.
///
/// Returns the embedding `map` with `map[u]` the image of `h`-vertex `u`:
/// injective, and `uv ∈ E(h) ⇔ map[u]map[v] ∈ E(g)`.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let (gn, hn) = (g.order(), h.order());
    if hn > gn || h.size() > g.size() {
        return None;
    }
    // candidates by degree
    let base: Vec<u32> = (0..hn)
        .map(|u| {
            let du = h.degree(u);
            (0..gn)
                .filter(|&v| g.degree(v) >= du && gn - 1 - g.degree(v) >= hn - 1 - du)
                .fold(0u32, |acc, v| acc | 1 << v)
        })
        .collect();
    let mut map = vec![usize::MAX; hn];
    if embed(g, h, &base, &mut map, 0, 0) {
        Some(map)
    } else {
        None
    }
}

fn embed(g: &Graph, h: &Graph, base: &[u32], map: &mut [usize], mapped: u32, used: u32) -> bool {
    let hn = h.order();
    if mapped.count_ones() as usize == hn {
        return true;
    }
    // smallest domain first
    let mut pick = None;
    let mut pick_dom = 0u32;
    for u in 0..hn {
        if mapped & 1 << u != 0 {
            continue;
        }
        let mut dom = base[u] & !used;
        let mut m = mapped;
        while m != 0 && dom != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            let image = g.neighbors(map[w]).bits();
            if h.has_edge(u, w) {
                dom &= image;
            } else {
                dom &= !image;
            }
        }
        if dom == 0 {
            return false;
        }
        if pick.is_none() || dom.count_ones() < pick_dom.count_ones() {
            pick = Some(u);
            pick_dom = dom;
        }
    }
    let u = pick.expect("unmapped vertex");
    let mut dom = pick_dom;
    while dom != 0 {
        let v = dom.trailing_zeros() as usize;
        dom &= dom - 1;
        map[u] = v;
        if embed(g, h, base, map, mapped | 1 << u, used | 1 << v) {
            return true;
        }
    }
    map[u] = usize::MAX;
    false
}

/// `h ⊑ g`: some vertex subset of `g` induces a copy of `h`.
pub fn has_induced(g: &Graph, h: &Graph) -> bool {
    find_induced(g, h).is_some()
}

/// Calls `f` once per induced cycle of `g` whose length lies in
/// `min_len..=max_len`, with the cycle's vertices in cyclic order starting
/// from its smallest vertex. Stops early when `f` breaks.
pub fn for_each_induced_cycle<F>(
    g: &Graph,
    min_len: usize,
    max_len: usize,
    mut f: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let max_len = max_len.min(g.order());
    if max_len < 3 || min_len > max_len {
        return ControlFlow::Continue(());
    }
    let mut path = Vec::with_capacity(max_len);
    for s in 0..g.order() {
        path.clear();
        path.push(s);
        extend(
            g,
            &mut path,
            VertexSet::singleton(s),
            min_len,
            max_len,
            &mut f,
        )?;
    }
    ControlFlow::Continue(())
}

fn extend<F>(
    g: &Graph,
    path: &mut Vec<usize>,
    on_path: VertexSet,
    min_len: usize,
    max_len: usize,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let s = path[0];
    let last = *path.last().unwrap();
    let interior = on_path.without(s).without(last);
    for w in g.neighbors(last) {
        if w <= s || on_path.contains(w) {
            continue;
        }
        if !g.neighbors(w).intersection(interior).is_empty() {
            continue;
        }
        if path.len() >= 2 && g.has_edge(w, s) {
            let len = path.len() + 1;
            if path[1] < w && len >= min_len {
                path.push(w);
                let r = f(path);
                path.pop();
                r?;
            }
            continue;
        }
        if path.len() + 1 < max_len {
            path.push(w);
            let r = extend(g, path, on_path.with(w), min_len, max_len, f);
            path.pop();
            r?;
        }
    }
    ControlFlow::Continue(())
}

/// All induced cycles with length in range, as vertex lists in cyclic order.
pub fn induced_cycles(g: &Graph, min_len: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = for_each_induced_cycle(g, min_len, max_len, |c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Bit `k` is set iff `g` has an induced cycle of length `k`.
pub fn induced_cycle_lengths(g: &Graph) -> u64 {
    let mut mask = 0u64;
    let _ = for_each_induced_cycle(g, 3, g.order(), |c| {
        mask |= 1 << c.len();
        ControlFlow::Continue(())
    });
    mask
}

/// Whether `g` has a hole (induced cycle) on at least `min_len` vertices.
pub fn has_hole_geq(g: &Graph, min_len: usize) -> Result<bool> {
    if min_len < 4 {
        return Err(Error::CycleLength {
            min: 4,
            got: min_len,
        });
    }
    Ok(for_each_induced_cycle(g, min_len, g.order(), |_| ControlFlow::Break(())).is_break())
}

/// A perfect elimination ordering, if `g` is chordal.
///
/// Maximum cardinality search visits vertices so that its reverse is a
/// perfect elimination ordering exactly when the graph is chordal; the
/// candidate ordering is then checked directly.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        visit.push(v);
        visited.insert(v);
        for u in g.neighbors(v) {
            weight[u] += 1;
        }
    }
    // neighbors of v visited before v must be a clique
    let mut before = VertexSet::EMPTY;
    for &v in &visit {
        if !g.is_clique(g.neighbors(v).intersection(before)) {
            return None;
        }
        before.insert(v);
    }
    visit.reverse();
    Some(visit)
}

/// Every induced cycle is a triangle.
pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}
