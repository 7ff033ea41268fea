//! The exclusion preorder on all graphical sequences up to a length bound,
//! with its Hasse diagram.

use std::collections::HashMap;
use std::fmt::Write;

use rayon::prelude::*;

use super::Universe;
use crate::error::{Error, Result};
use crate::realize::RealizationSource;
use crate::sequence::DegreeSequence;

/// Largest sequence length for [`build_exclusion_poset`].
pub const POSET_BOUND: usize = 7;

/// Fixed-width bitset over node indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn and_count(&self, other: &Bits) -> u32 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |b| bits >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

/// Nodes are graphical sequences; `covers` lists the Hasse edges
/// `(smaller, larger)` as node indices, sorted.
#[derive(Clone, Debug)]
pub struct ExclusionPoset {
    nodes: Vec<DegreeSequence>,
    /// `below[j]`: every `i` with `nodes[i] ⪯ nodes[j]`
    below: Vec<Bits>,
    covers: Vec<(usize, usize)>,
}

/// Computes `⪯` on every graphical sequence of length at most
/// `max_vertices`, checks that it is reflexive, transitive and
/// antisymmetric, and reduces it to its covering relation.
///
/// `D1 ⪯ D2` is read off by taking every vertex subset of every realization
/// of `D2` and recording the degree sequence it induces.
pub fn build_exclusion_poset(universe: &Universe, max_vertices: usize) -> Result<ExclusionPoset> {
    if max_vertices > POSET_BOUND {
        return Err(Error::EnumerationBound {
            n: max_vertices,
            bound: POSET_BOUND,
        });
    }
    universe.require(max_vertices)?;
    let nodes: Vec<DegreeSequence> = universe
        .sequences_up_to(max_vertices)
        .into_iter()
        .cloned()
        .collect();
    let position: HashMap<&DegreeSequence, usize> =
        nodes.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let n = nodes.len();
    let index = universe.index();
    let below: Vec<Bits> = nodes
        .par_iter()
        .map(|d| -> Result<Bits> {
            let mut row = Bits::new(n);
            for g in index.realizations(d)?.iter() {
                let order = g.order();
                for mask in 0u32..(1u32 << order) {
                    let mut degs: Vec<u32> = (0..order)
                        .filter(|&v| mask >> v & 1 == 1)
                        .map(|v| (g.neighbors(v).bits() & mask).count_ones())
                        .collect();
                    degs.sort_unstable_by(|a, b| b.cmp(a));
                    let sub = DegreeSequence::from(degs);
                    row.set(position[&sub]);
                }
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    let poset = ExclusionPoset::from_relation(nodes, below)?;
    Ok(poset)
}

impl ExclusionPoset {
    fn from_relation(nodes: Vec<DegreeSequence>, below: Vec<Bits>) -> Result<Self> {
        let n = nodes.len();
        let mut above = vec![Bits::new(n); n];
        for (j, row) in below.iter().enumerate() {
            for i in row.ones() {
                above[i].set(j);
            }
        }
        for j in 0..n {
            if !below[j].get(j) {
                return Err(Error::Invariant(format!(
                    "({}) does not precede itself",
                    nodes[j]
                )));
            }
            for i in below[j].ones() {
                if !below[i].is_subset(&below[j]) {
                    return Err(Error::Invariant(format!(
                        "relation not transitive through ({}) <= ({})",
                        nodes[i], nodes[j]
                    )));
                }
                if i != j && below[i].get(j) {
                    return Err(Error::Invariant(format!(
                        "({}) and ({}) precede each other",
                        nodes[i], nodes[j]
                    )));
                }
            }
        }
        let mut covers = Vec::new();
        for j in 0..n {
            for i in below[j].ones() {
                if i != j && above[i].and_count(&below[j]) == 2 {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();
        Ok(ExclusionPoset {
            nodes,
            below,
            covers,
        })
    }

    /// Nodes by increasing length, lexicographically descending within a
    /// length.
    pub fn nodes(&self) -> &[DegreeSequence] {
        &self.nodes
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, d: &DegreeSequence) -> Option<usize> {
        self.nodes.iter().position(|x| x == d)
    }

    /// `nodes[i] ⪯ nodes[j]`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.below[j].get(i)
    }

    /// Number of related pairs, including `D ⪯ D`.
    pub fn relation_size(&self) -> usize {
        self.below.iter().map(|r| r.ones().count()).sum()
    }

    /// Hasse diagram as a DOT digraph, edges pointing from the smaller
    /// sequence to the larger one.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph exclusion {\n  rankdir=BT;\n");
        for (i, d) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"({d})\"];");
        }
        for (i, j) in &self.covers {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }

    /// Hasse edges as CSV with a `smaller,larger` header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("smaller,larger\n");
        for (i, j) in &self.covers {
            let _ = writeln!(out, "\"({})\",\"({})\"", self.nodes[*i], self.nodes[*j]);
        }
        out
    }
}
