//! Realization spaces of degree sequences.

use std::borrow::Cow;
use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequence::DegreeSequence;

/// Default longest sequence whose realizations are enumerated.
pub const DEFAULT_LENGTH_BOUND: usize = 10;

/// Supplies every realization of a degree sequence up to isomorphism.
pub trait RealizationSource: Sync {
    /// One canonical representative per isomorphism class, sorted; empty
    /// only for non-graphical input, which is reported as an error.
    fn realizations(&self, d: &DegreeSequence) -> Result<Cow<'_, [Graph]>>;
}

/// Enumerates realizations directly by backtracking over adjacency rows.
///
/// Rows are filled in vertex order, largest target degree first. Vertices
/// that are so far indistinguishable (same residual demand, same neighbors
/// among the finished rows) are chosen in index order only, and every
/// partial state must leave a graphical residual sequence, so no branch
/// dead-ends. Results are deduplicated by canonical form.
#[derive(Clone, Copy, Debug)]
pub struct Backtracking {
    pub max_len: usize,
}

impl Default for Backtracking {
    fn default() -> Self {
        Backtracking {
            max_len: DEFAULT_LENGTH_BOUND,
        }
    }
}

impl RealizationSource for Backtracking {
    fn realizations(&self, d: &DegreeSequence) -> Result<Cow<'_, [Graph]>> {
        if d.len() > self.max_len {
            return Err(Error::LengthBound {
                len: d.len(),
                bound: self.max_len,
            });
        }
        d.require_graphical()?;
        Ok(Cow::Owned(backtrack_realizations(d)))
    }
}

/// Every realization of `d` up to isomorphism, using [`Backtracking`] with
/// the default length bound.
pub fn enumerate_realizations(d: &DegreeSequence) -> Result<Vec<Graph>> {
    Ok(Backtracking::default().realizations(d)?.into_owned())
}

#[derive(Clone)]
struct State {
    g: Graph,
    residual: Vec<u32>,
}

fn backtrack_realizations(d: &DegreeSequence) -> Vec<Graph> {
    let n = d.len();
    let root = State {
        g: Graph::empty_unchecked(n),
        residual: d.terms().to_vec(),
    };
    if n == 0 {
        return vec![root.g];
    }
    let mut first = Vec::new();
    expand(&root, 0, &mut |s| first.push(s));
    let found: Vec<BTreeSet<Graph>> = first
        .into_par_iter()
        .map(|s| {
            let mut out = BTreeSet::new();
            descend(s, 1, &mut out);
            out
        })
        .collect();
    let mut all = BTreeSet::new();
    for part in found {
        all.extend(part);
    }
    all.into_iter().collect()
}

fn descend(s: State, i: usize, out: &mut BTreeSet<Graph>) {
    if i == s.residual.len() {
        out.insert(canonical_form(&s.g));
        return;
    }
    expand(&s, i, &mut |next| descend(next, i + 1, out));
}

/// Every way of completing row `i` of `s`, up to the symmetry described on
/// [`Backtracking`], that keeps the remaining demands graphical.
fn expand(s: &State, i: usize, emit: &mut dyn FnMut(State)) {
    let n = s.residual.len();
    let need = s.residual[i] as usize;
    // classes of interchangeable later vertices, keyed by (demand, adjacency)
    let mut classes: Vec<((u32, u32), Vec<usize>)> = Vec::new();
    for j in i + 1..n {
        if s.residual[j] == 0 {
            continue;
        }
        let key = (s.residual[j], s.g.neighbors(j).bits());
        match classes.iter_mut().find(|c| c.0 == key) {
            Some(c) => c.1.push(j),
            None => classes.push((key, vec![j])),
        }
    }
    let mut counts = vec![0usize; classes.len()];
    distribute(s, i, &classes, 0, need, &mut counts, emit);
}

fn distribute(
    s: &State,
    i: usize,
    classes: &[((u32, u32), Vec<usize>)],
    c: usize,
    left: usize,
    counts: &mut Vec<usize>,
    emit: &mut dyn FnMut(State),
) {
    if c == classes.len() {
        if left != 0 {
            return;
        }
        let mut next = s.clone();
        next.residual[i] = 0;
        for (class, &k) in classes.iter().zip(counts.iter()) {
            for &j in &class.1[..k] {
                next.g.set_edge(i, j);
                next.residual[j] -= 1;
            }
        }
        let rest = DegreeSequence::from_unsorted(next.residual[i + 1..].to_vec());
        if rest.is_graphical() {
            emit(next);
        }
        return;
    }
    let room: usize = classes[c..].iter().map(|cl| cl.1.len()).sum();
    if room < left {
        return;
    }
    for k in (0..=left.min(classes[c].1.len())).rev() {
        counts[c] = k;
        distribute(s, i, classes, c + 1, left - k, counts, emit);
    }
    counts[c] = 0;
}
