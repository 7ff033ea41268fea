//! Exhaustive replay of the structure theorems over enumerated universes.
//!
//! Every sweep walks a complete [`Universe`] (all graphs and all graphical
//! sequences up to a vertex bound), checks one claim per instance, and
//! returns a [`VerificationReport`] listing every counterexample in full.
//! Deliberately broken variants ([`Mutant`]) exist so the sweeps can be
//! shown to fail when the code they check is wrong.

pub mod claims;
pub mod gadgets;
pub mod poset;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;

use crate::enumerate::{all_graphical_sequences_bounded, graphs_up_to, RealizationIndex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequence::DegreeSequence;

pub use claims::{Claim, Verifier};

/// Unlabeled graph counts on `0..=9` vertices.
pub const UNLABELED_GRAPH_COUNTS: [usize; 10] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668];

/// Largest vertex count a universe may be generated for.
pub const UNIVERSE_BOUND: usize = 9;

/// A single failed instance, with enough data to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Counterexample {
    /// the degree sequence under test, when the instance has one
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sequence: Option<DegreeSequence>,
    /// graphs involved, graph6
    pub graphs: Vec<String>,
    /// named vertices or parameters, e.g. `"cycle=0,1,2,3,4"`
    pub labels: Vec<String>,
    pub detail: String,
}

impl Counterexample {
    pub fn new(detail: impl Into<String>) -> Self {
        Counterexample {
            sequence: None,
            graphs: Vec::new(),
            labels: Vec::new(),
            detail: detail.into(),
        }
    }

    pub fn sequence(mut self, d: &DegreeSequence) -> Self {
        self.sequence = Some(d.clone());
        self
    }

    pub fn graph(mut self, g: &Graph) -> Self {
        self.graphs.push(g.to_graph6());
        self
    }

    pub fn label(mut self, l: impl Into<String>) -> Self {
        self.labels.push(l.into());
        self
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.detail)?;
        if let Some(d) = &self.sequence {
            write!(f, "; sequence ({d})")?;
        }
        if !self.graphs.is_empty() {
            write!(f, "; graphs {}", self.graphs.join(" "))?;
        }
        if !self.labels.is_empty() {
            write!(f, "; {}", self.labels.join(" "))?;
        }
        Ok(())
    }
}

/// Outcome of one claim sweep. `elapsed` is left out of the structured
/// form so that reports are byte-identical across runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub universe: String,
    pub instances: u64,
    pub counterexamples: Vec<Counterexample>,
    /// skipped or vacuous parameter ranges and per-parameter counts
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>, universe: impl Into<String>) -> Self {
        VerificationReport {
            claim: claim.into(),
            universe: universe.into(),
            instances: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Adds counts and concatenates counterexamples; the result is sorted,
    /// so merge order does not matter.
    pub fn absorb(&mut self, instances: u64, mut found: Vec<Counterexample>) {
        self.instances += instances;
        self.counterexamples.append(&mut found);
        self.counterexamples.sort();
    }

    /// One summary line, then the notes and at most `max_listed`
    /// counterexamples.
    pub fn text_lines(&self, max_listed: usize) -> Vec<String> {
        let mut out = vec![format!(
            "[{}] {}: {} instances, {} counterexamples ({})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.claim,
            self.instances,
            self.counterexamples.len(),
            self.universe
        )];
        out.extend(self.notes.iter().map(|n| format!("  note: {n}")));
        out.extend(
            self.counterexamples
                .iter()
                .take(max_listed)
                .map(|c| format!("  counterexample: {c}")),
        );
        if self.counterexamples.len() > max_listed {
            out.push(format!(
                "  ... {} more",
                self.counterexamples.len() - max_listed
            ));
        }
        out
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Every graph and graphical sequence on at most `max_vertices` vertices,
/// with realizations indexed by sequence.
#[derive(Clone, Debug)]
pub struct Universe {
    max_vertices: usize,
    source: String,
    /// `graphs[k]`: canonical graphs on `k` vertices, sorted
    graphs: Vec<Vec<Graph>>,
    /// `sequences[k]`: graphical sequences of length `k`, lex descending
    sequences: Vec<Vec<DegreeSequence>>,
    index: RealizationIndex,
}

impl Universe {
    /// Generates the universe by canonical augmentation.
    pub fn generate(max_vertices: usize) -> Result<Self> {
        let graphs = graphs_up_to(max_vertices, UNIVERSE_BOUND)?;
        Self::assemble(max_vertices, "generated".into(), graphs)
    }

    /// Builds the universe from externally supplied graphs (e.g. a graph6
    /// file). Graphs above `max_vertices` are ignored; duplicates up to
    /// isomorphism are merged. Fails unless every order up to
    /// `max_vertices` is complete.
    pub fn from_graphs(max_vertices: usize, graphs: &[Graph], source: &str) -> Result<Self> {
        if max_vertices > UNIVERSE_BOUND {
            return Err(Error::EnumerationBound {
                n: max_vertices,
                bound: UNIVERSE_BOUND,
            });
        }
        let mut levels: Vec<std::collections::BTreeSet<Graph>> =
            vec![Default::default(); max_vertices + 1];
        for g in graphs {
            if g.order() <= max_vertices {
                levels[g.order()].insert(crate::canon::canonical_form(g));
            }
        }
        for (k, level) in levels.iter().enumerate() {
            if level.len() != UNLABELED_GRAPH_COUNTS[k] {
                return Err(Error::IncompleteUniverse(format!(
                    "{} graph(s) on {k} vertices supplied, {} exist",
                    level.len(),
                    UNLABELED_GRAPH_COUNTS[k]
                )));
            }
        }
        let levels = levels
            .into_iter()
            .map(|l| l.into_iter().collect())
            .collect();
        Self::assemble(max_vertices, format!("graphs from {source}"), levels)
    }

    fn assemble(max_vertices: usize, source: String, graphs: Vec<Vec<Graph>>) -> Result<Self> {
        let index = RealizationIndex::from_levels(&graphs)?;
        let sequences = (0..=max_vertices)
            .map(|k| all_graphical_sequences_bounded(k, usize::MAX))
            .collect::<Result<_>>()?;
        Ok(Universe {
            max_vertices,
            source,
            graphs,
            sequences,
            index,
        })
    }

    pub fn max_vertices(&self) -> usize {
        self.max_vertices
    }

    /// Graphs on exactly `k` vertices.
    pub fn graphs(&self, k: usize) -> &[Graph] {
        self.graphs.get(k).map_or(&[], |v| v.as_slice())
    }

    /// Graphical sequences of length exactly `k`.
    pub fn sequences(&self, k: usize) -> &[DegreeSequence] {
        self.sequences.get(k).map_or(&[], |v| v.as_slice())
    }

    /// Graphs on at most `k` vertices, by increasing order.
    pub fn graphs_up_to(&self, k: usize) -> impl Iterator<Item = &Graph> {
        self.graphs.iter().take(k + 1).flatten()
    }

    /// Graphical sequences of length at most `k`, by increasing length.
    pub fn sequences_up_to(&self, k: usize) -> Vec<&DegreeSequence> {
        self.sequences.iter().take(k + 1).flatten().collect()
    }

    pub fn index(&self) -> &RealizationIndex {
        &self.index
    }

    /// `"<source>, n <= <bound>"`.
    pub fn describe(&self, bound: usize) -> String {
        format!("{}, n <= {bound}", self.source)
    }

    pub(crate) fn require(&self, bound: usize) -> Result<()> {
        if bound > self.max_vertices {
            return Err(Error::EnumerationBound {
                n: bound,
                bound: self.max_vertices,
            });
        }
        Ok(())
    }
}

/// Deliberately broken variants of the checked code. Each one must make
/// `verify --claim all --max-vertices 7` report a counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutant {
    /// compositions join `H` to the independent side `B` instead of `A`
    ComposeWrongSide,
    /// the `C_n` classifier forgets the `SPLIT ∘ C_{n+2}` class
    DropNPlus2Class,
    /// the half-join sweep ignores its "excludes `C_{k-1}`" hypothesis
    SkipHypothesis,
    /// the split test also accepts the pentagon and its degree sequence
    BrokenSplitTest,
}

impl Mutant {
    pub const ALL: [Mutant; 4] = [
        Mutant::ComposeWrongSide,
        Mutant::DropNPlus2Class,
        Mutant::SkipHypothesis,
        Mutant::BrokenSplitTest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutant::ComposeWrongSide => "compose-wrong-side",
            Mutant::DropNPlus2Class => "drop-n-plus-2",
            Mutant::SkipHypothesis => "skip-hypothesis",
            Mutant::BrokenSplitTest => "broken-split-test",
        }
    }
}

impl fmt::Display for Mutant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mutant::ALL
            .into_iter()
            .find(|m| m.name() == s.trim())
            .ok_or_else(|| {
                let names: Vec<_> = Mutant::ALL.iter().map(|m| m.name()).collect();
                Error::UnknownName(format!(
                    "mutant {s:?} (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mutant_names_round_trip() {
        for m in Mutant::ALL {
            assert_eq!(m.name().parse::<Mutant>().unwrap(), m);
        }
        assert!("nope".parse::<Mutant>().is_err());
    }

    #[test]
    fn universe_from_generated_graphs() {
        let gen = Universe::generate(5).unwrap();
        let all: Vec<Graph> = gen.graphs_up_to(5).copied().collect();
        let again = Universe::from_graphs(5, &all, "test").unwrap();
        for k in 0..=5 {
            assert_eq!(gen.graphs(k), again.graphs(k));
            assert_eq!(gen.graphs(k).len(), UNLABELED_GRAPH_COUNTS[k]);
        }
        let missing = &all[..all.len() - 1];
        assert!(matches!(
            Universe::from_graphs(5, missing, "test"),
            Err(Error::IncompleteUniverse(_))
        ));
    }

    #[test]
    fn report_merge_sorts() {
        let mut r = VerificationReport::new("x", "u");
        r.absorb(2, vec![Counterexample::new("b")]);
        r.absorb(3, vec![Counterexample::new("a")]);
        assert_eq!(r.instances, 5);
        assert_eq!(r.counterexamples[0].detail, "a");
        assert!(!r.passed());
        assert!(!r.to_json_line().contains("elapsed"));
        let lines = r.text_lines(1);
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[2], "  ... 1 more");
    }
}
