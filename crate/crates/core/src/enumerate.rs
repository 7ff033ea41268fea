//! Isomorph-free universes: all graphs and all graphical sequences of a
//! given order.

use std::borrow::Cow;
use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_labeling};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::realize::RealizationSource;
use crate::sequence::DegreeSequence;
use crate::vertex_set::VertexSet;

/// Default largest order for [`all_graphs`].
pub const DEFAULT_GRAPH_ORDER_BOUND: usize = 9;
/// Default largest length for [`all_graphical_sequences`].
pub const DEFAULT_SEQUENCE_LENGTH_BOUND: usize = 10;

/// One canonical graph per isomorphism class on `n` vertices, sorted.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    all_graphs_bounded(n, DEFAULT_GRAPH_ORDER_BOUND)
}

pub fn all_graphs_bounded(n: usize, bound: usize) -> Result<Vec<Graph>> {
    Ok(graphs_up_to(n, bound)?.pop().expect("order n present"))
}

/// `out[k]` holds all graphs on `k` vertices, for `k` in `0..=n`.
pub fn graphs_up_to(n: usize, bound: usize) -> Result<Vec<Vec<Graph>>> {
    if n > bound || n > crate::MAX_VERTICES {
        return Err(Error::EnumerationBound { n, bound });
    }
    let mut levels = vec![vec![Graph::empty_unchecked(0)]];
    for _ in 0..n {
        let next = augment(levels.last().unwrap());
        levels.push(next);
    }
    Ok(levels)
}

/// Canonical augmentation: a child of canonical parent `P` (one new vertex
/// over every neighborhood mask) is kept iff deleting the last vertex of
/// the child's canonical form gives back `P`. Each class then has exactly
/// one parent; duplicates within a parent are removed by canonical form.
fn augment(parents: &[Graph]) -> Vec<Graph> {
    let mut out: Vec<Graph> = parents
        .par_iter()
        .flat_map_iter(|p| {
            let n = p.order();
            let mut kids = BTreeSet::new();
            for mask in 0u32..(1u32 << n) {
                let child = p
                    .add_vertex(VertexSet::from_bits(mask))
                    .expect("order within bound");
                let (canon, _) = canonical_labeling(&child);
                if kids.contains(&canon) {
                    continue;
                }
                let parent = canonical_form(&canon.induced_subgraph(canon.vertices().without(n)));
                if parent == *p {
                    kids.insert(canon);
                }
            }
            kids.into_iter()
        })
        .collect();
    out.sort_unstable();
    out
}

/// Every graphical sequence of length `n` (entries in `0..n`), each once,
/// in lexicographically descending order.
pub fn all_graphical_sequences(n: usize) -> Result<Vec<DegreeSequence>> {
    all_graphical_sequences_bounded(n, DEFAULT_SEQUENCE_LENGTH_BOUND)
}

pub fn all_graphical_sequences_bounded(n: usize, bound: usize) -> Result<Vec<DegreeSequence>> {
    if n > bound {
        return Err(Error::EnumerationBound { n, bound });
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let top = n.saturating_sub(1) as u32;
    nonincreasing(n, top, &mut cur, &mut |terms| {
        let d = DegreeSequence::from_nonincreasing(terms.to_vec()).expect("built nonincreasing");
        if d.is_graphical() {
            out.push(d);
        }
    });
    Ok(out)
}

fn nonincreasing(n: usize, cap: u32, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if cur.len() == n {
        f(cur);
        return;
    }
    for v in (0..=cap).rev() {
        cur.push(v);
        nonincreasing(n, v, cur, f);
        cur.pop();
    }
}

/// Realizations looked up from a complete graph universe, grouped by degree
/// sequence.
#[derive(Clone, Debug, Default)]
pub struct RealizationIndex {
    max_len: usize,
    by_sequence: HashMap<DegreeSequence, Vec<Graph>>,
}

impl RealizationIndex {
    /// Indexes every graph on at most `max_len` vertices.
    pub fn build(max_len: usize) -> Result<Self> {
        let levels = graphs_up_to(max_len, max_len.max(DEFAULT_GRAPH_ORDER_BOUND))?;
        Self::from_levels(&levels)
    }

    /// `levels[k]` must contain every graph on `k` vertices up to
    /// isomorphism; each graphical sequence must end up with a realization.
    pub fn from_levels(levels: &[Vec<Graph>]) -> Result<Self> {
        let mut by_sequence: HashMap<DegreeSequence, Vec<Graph>> = HashMap::new();
        for (k, level) in levels.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for g in level {
                if g.order() != k {
                    return Err(Error::IncompleteUniverse(format!(
                        "graph {g} has {} vertices but is listed under order {k}",
                        g.order()
                    )));
                }
                let c = canonical_form(g);
                if seen.insert(c) {
                    by_sequence.entry(c.degree_sequence()).or_default().push(c);
                }
            }
        }
        for list in by_sequence.values_mut() {
            list.sort_unstable();
        }
        let max_len = levels.len().saturating_sub(1);
        for k in 0..levels.len() {
            for d in all_graphical_sequences_bounded(k, usize::MAX)? {
                if !by_sequence.contains_key(&d) {
                    return Err(Error::IncompleteUniverse(format!(
                        "graphical sequence ({d}) has no realization among the supplied graphs"
                    )));
                }
            }
        }
        Ok(RealizationIndex {
            max_len,
            by_sequence,
        })
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }
}

impl RealizationSource for RealizationIndex {
    fn realizations(&self, d: &DegreeSequence) -> Result<Cow<'_, [Graph]>> {
        if d.len() > self.max_len {
            return Err(Error::LengthBound {
                len: d.len(),
                bound: self.max_len,
            });
        }
        d.require_graphical()?;
        let list = self
            .by_sequence
            .get(d)
            .ok_or_else(|| Error::IncompleteUniverse(format!("no realization of ({d})")))?;
        Ok(Cow::Borrowed(list))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[u32]) -> DegreeSequence {
        DegreeSequence::from(v.to_vec())
    }

    #[test]
    fn small_graph_counts() {
        assert_eq!(all_graphs(0).unwrap().len(), 1);
        assert_eq!(all_graphs(3).unwrap().len(), 4);
        assert_eq!(all_graphs(4).unwrap().len(), 11);
        assert!(matches!(
            all_graphs(10),
            Err(Error::EnumerationBound { n: 10, bound: 9 })
        ));
    }

    #[test]
    fn graphs_are_canonical() {
        for g in all_graphs(6).unwrap() {
            assert_eq!(canonical_form(&g), g);
        }
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(all_graphical_sequences(0).unwrap(), vec![ds(&[])]);
        assert_eq!(
            all_graphical_sequences(2).unwrap(),
            vec![ds(&[1, 1]), ds(&[0, 0])]
        );
        assert_eq!(
            all_graphical_sequences(3).unwrap(),
            vec![
                ds(&[2, 2, 2]),
                ds(&[2, 1, 1]),
                ds(&[1, 1, 0]),
                ds(&[0, 0, 0])
            ]
        );
        assert_eq!(all_graphical_sequences(4).unwrap().len(), 11);
        assert!(all_graphical_sequences(11).is_err());
    }

    #[test]
    fn index_rejects_incomplete_universes() {
        let mut levels = graphs_up_to(4, 9).unwrap();
        levels[4].retain(|g| g.size() != 2);
        assert!(matches!(
            RealizationIndex::from_levels(&levels),
            Err(Error::IncompleteUniverse(_))
        ));
        let idx = RealizationIndex::build(4).unwrap();
        assert_eq!(idx.realizations(&ds(&[2; 4])).unwrap().len(), 1);
        assert!(matches!(
            idx.realizations(&ds(&[0; 5])),
            Err(Error::LengthBound { .. })
        ));
    }
}
