//! The exclusion preorder on degree sequences and forcible properties.

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::realize::{Backtracking, RealizationSource};
use crate::sequence::DegreeSequence;
use crate::vertex_set::{subsets_of_size, VertexSet};

/// Certificate that `D1 ⪯ D2`: `smaller` realizes `D1`, `larger` realizes
/// `D2`, and `embedding[i]` is the image of vertex `i` of `smaller` in an
/// induced copy inside `larger`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrecedesWitness {
    #[serde(serialize_with = "crate::report::ser_graph6")]
    pub smaller: Graph,
    #[serde(serialize_with = "crate::report::ser_graph6")]
    pub larger: Graph,
    pub embedding: Vec<usize>,
}

impl PrecedesWitness {
    /// Re-checks the certificate from scratch.
    pub fn verify(&self, d1: &DegreeSequence, d2: &DegreeSequence) -> bool {
        let (a, b) = (&self.smaller, &self.larger);
        if a.degree_sequence() != *d1 || b.degree_sequence() != *d2 {
            return false;
        }
        if self.embedding.len() != a.order() {
            return false;
        }
        let image: VertexSet = self.embedding.iter().copied().collect();
        if image.len() != a.order() || self.embedding.iter().any(|&v| v >= b.order()) {
            return false;
        }
        (0..a.order()).all(|u| {
            (0..a.order())
                .filter(|&v| v != u)
                .all(|v| a.has_edge(u, v) == b.has_edge(self.embedding[u], self.embedding[v]))
        })
    }
}

/// Searches the realizations of `larger` for a vertex subset inducing the
/// degree sequence `smaller`.
pub fn precedes_witness_in(
    src: &dyn RealizationSource,
    smaller: &DegreeSequence,
    larger: &DegreeSequence,
) -> Result<Option<PrecedesWitness>> {
    smaller.require_graphical()?;
    let reals = src.realizations(larger)?;
    let k = smaller.len();
    if k > larger.len() {
        return Ok(None);
    }
    let target = smaller.terms();
    let mut degs = Vec::with_capacity(k);
    for g in reals.iter() {
        for sub in subsets_of_size(g.order(), k) {
            degs.clear();
            degs.extend(
                sub.iter()
                    .map(|v| g.neighbors(v).intersection(sub).len() as u32),
            );
            degs.sort_unstable_by(|a, b| b.cmp(a));
            if degs == target {
                return Ok(Some(PrecedesWitness {
                    smaller: g.induced_subgraph(sub),
                    larger: *g,
                    embedding: sub.to_vec(),
                }));
            }
        }
    }
    Ok(None)
}

pub fn precedes_in(
    src: &dyn RealizationSource,
    smaller: &DegreeSequence,
    larger: &DegreeSequence,
) -> Result<bool> {
    Ok(precedes_witness_in(src, smaller, larger)?.is_some())
}

/// `D1 ⪯ D2`, enumerating realizations by backtracking.
pub fn precedes(smaller: &DegreeSequence, larger: &DegreeSequence) -> Result<bool> {
    precedes_in(&Backtracking::default(), smaller, larger)
}

pub fn precedes_witness(
    smaller: &DegreeSequence,
    larger: &DegreeSequence,
) -> Result<Option<PrecedesWitness>> {
    precedes_witness_in(&Backtracking::default(), smaller, larger)
}

/// `D` excludes `H`: `D(H) ⋠ D`.
pub fn excludes_graph_in(
    src: &dyn RealizationSource,
    d: &DegreeSequence,
    h: &Graph,
) -> Result<bool> {
    Ok(!precedes_in(src, &h.degree_sequence(), d)?)
}

pub fn excludes_graph(d: &DegreeSequence, h: &Graph) -> Result<bool> {
    excludes_graph_in(&Backtracking::default(), d, h)
}

/// Outcome of checking a property on every realization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Forcibly {
    pub holds: bool,
    /// realizations examined before stopping
    pub checked: usize,
    #[serde(serialize_with = "crate::report::ser_opt_graph6")]
    pub counterexample: Option<Graph>,
}

/// Whether every realization of `d` satisfies `prop`; stops at the first
/// realization that does not.
pub fn forcibly_holds_in<P>(
    src: &dyn RealizationSource,
    d: &DegreeSequence,
    prop: P,
) -> Result<Forcibly>
where
    P: Fn(&Graph) -> bool,
{
    let reals = src.realizations(d)?;
    for (i, g) in reals.iter().enumerate() {
        if !prop(g) {
            return Ok(Forcibly {
                holds: false,
                checked: i + 1,
                counterexample: Some(*g),
            });
        }
    }
    Ok(Forcibly {
        holds: true,
        checked: reals.len(),
        counterexample: None,
    })
}

pub fn forcibly_holds<P>(d: &DegreeSequence, prop: P) -> Result<Forcibly>
where
    P: Fn(&Graph) -> bool,
{
    forcibly_holds_in(&Backtracking::default(), d, prop)
}
