//! Canonical forms for small graphs.
//!
//! Vertices are first colored by iterated degree refinement, which is
//! invariant under relabeling. The canonical form is the relabeling, among
//! those that place color classes in color order, whose adjacency rows are
//! lexicographically largest, where row `p` records the adjacencies of
//! position `p` to positions `0..p`. The search only follows candidates that
//! maximize the current row and tries one vertex per twin class.

use std::cmp::Ordering;

use crate::graph::Graph;

/// Stable colors: the coarsest equitable refinement of the degree partition,
/// numbered by sorted signature so that the numbering is label-independent.
pub(crate) fn refined_colors(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut colors: Vec<u32> = {
        let degs = g.degrees();
        let mut uniq = degs.clone();
        uniq.sort_unstable();
        uniq.dedup();
        degs.iter()
            .map(|d| uniq.binary_search(d).unwrap() as u32)
            .collect()
    };
    let mut classes = distinct(&colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut uniq: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| uniq.binary_search(&s).unwrap() as u32)
            .collect();
        let next_classes = uniq.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<u32>,
    /// color required at each position
    slot_color: Vec<u32>,
    order: Vec<usize>,
    pos_of: Vec<usize>,
    used: u32,
    rows: Vec<u32>,
    best_rows: Vec<u32>,
    best_order: Vec<usize>,
    generation: u64,
}

impl Search<'_> {
    fn row_for(&self, v: usize) -> u32 {
        let mut row = 0u32;
        let mut placed = self.g.neighbors(v).bits() & self.used;
        while placed != 0 {
            let u = placed.trailing_zeros() as usize;
            placed &= placed - 1;
            row |= 1 << self.pos_of[u];
        }
        row
    }

    fn is_twin(&self, u: usize, v: usize) -> bool {
        let nu = self.g.neighbors(u).without(v);
        let nv = self.g.neighbors(v).without(u);
        nu == nv
    }

    /// `state` compares the placed prefix with the incumbent's prefix; it is
    /// never `Less` on entry.
    fn go(&mut self, p: usize, mut state: Ordering) {
        let n = self.g.order();
        if p == n {
            if state == Ordering::Greater {
                self.best_rows.clone_from(&self.rows);
                self.best_order.clone_from(&self.order);
                self.generation += 1;
            }
            return;
        }
        let want = self.slot_color[p];
        let mut cands: Vec<(usize, u32)> = (0..n)
            .filter(|&v| self.used & (1 << v) == 0 && self.colors[v] == want)
            .map(|v| (v, self.row_for(v)))
            .collect();
        let top = cands
            .iter()
            .map(|c| c.1)
            .max()
            .expect("slot without candidates");
        cands.retain(|c| c.1 == top);

        if state == Ordering::Equal {
            match top.cmp(&self.best_rows[p]) {
                Ordering::Less => return,
                Ordering::Greater => state = Ordering::Greater,
                Ordering::Equal => {}
            }
        }

        let mut tried: Vec<usize> = Vec::with_capacity(cands.len());
        for (v, row) in cands {
            if tried.iter().any(|&u| self.is_twin(u, v)) {
                continue;
            }
            tried.push(v);
            self.used |= 1 << v;
            self.pos_of[v] = p;
            self.order[p] = v;
            self.rows[p] = row;
            let before = self.generation;
            self.go(p + 1, state);
            self.used &= !(1 << v);
            // a new incumbent found below shares this prefix
            if self.generation != before {
                state = Ordering::Equal;
            }
        }
    }
}

/// Returns the canonical form and the labeling: `labeling[v]` is the
/// position of original vertex `v` in the canonical form.
pub fn canonical_labeling(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (*g, Vec::new());
    }
    let colors = refined_colors(g);
    let mut slot_color = colors.clone();
    slot_color.sort_unstable();
    let mut s = Search {
        g,
        colors,
        slot_color,
        order: vec![0; n],
        pos_of: vec![0; n],
        used: 0,
        rows: vec![0; n],
        best_rows: vec![0; n],
        best_order: vec![0; n],
        generation: 0,
    };
    s.go(0, Ordering::Greater);
    let mut labeling = vec![0; n];
    for (p, &v) in s.best_order.iter().enumerate() {
        labeling[v] = p;
    }
    (g.relabel_unchecked(&labeling), labeling)
}

pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).0
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;
    use std::collections::HashSet;

    fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let mut g = Graph::empty(n).unwrap();
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.set_edge(i, j);
                }
            }
            g
        })
    }

    #[test]
    fn unlabeled_counts_from_labeled_graphs() {
        // OEIS A000088: 1, 1, 2, 4, 11, 34, 156
        for (n, want) in [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            let forms: HashSet<Graph> = all_labeled(n).map(|g| canonical_form(&g)).collect();
            assert_eq!(forms.len(), want, "n = {n}");
        }
    }

    #[test]
    fn relabeled_cycle() {
        let c5 = GraphFamily::Cycle(5).construct().unwrap();
        let r = c5.relabel(&[3, 0, 4, 1, 2]).unwrap();
        assert_ne!(r, c5);
        assert_eq!(canonical_form(&r), canonical_form(&c5));
    }

    #[test]
    fn c6_vs_two_triangles() {
        let c6 = GraphFamily::Cycle(6).construct().unwrap();
        let c3 = GraphFamily::Cycle(3).construct().unwrap();
        let two = c3.disjoint_union(&c3).unwrap();
        assert_eq!(c6.size(), two.size());
        assert_ne!(canonical_form(&c6), canonical_form(&two));
        assert!(!is_isomorphic(&c6, &two));
    }

    #[test]
    fn canonical_form_is_idempotent_and_labeling_consistent() {
        for g in all_labeled(5).step_by(7) {
            let (c, lab) = canonical_labeling(&g);
            assert_eq!(canonical_form(&c), c);
            assert_eq!(g.relabel(&lab).unwrap(), c);
        }
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        for n in [0, 1, 9, 20, 32] {
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_form(&e), e);
            let k = GraphFamily::Complete(n).construct().unwrap();
            assert_eq!(canonical_form(&k), k);
        }
        let k = GraphFamily::CompleteBipartite(10, 12).construct().unwrap();
        assert_eq!(canonical_form(&k).size(), 120);
    }
}
