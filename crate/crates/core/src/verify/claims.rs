//! The claim sweeps.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::gadgets::{
    cycle_split_pair, gadget_contract_subdivide, gadget_matching_pair, gadget_rewire,
    induces_cycle, is_induced_cycle_in_order,
};
use super::{Counterexample, Mutant, Universe, VerificationReport};
use crate::classify::{
    classify_c4_c5_in, classify_exclusion_in, classify_m2_c4_in, classify_matching_in,
    graph_m2_c4_structure_with, ExclusionClassification, M2C4Structure, StructureClass,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily};
use crate::induced::{
    for_each_induced_cycle, has_hole_geq, has_induced, induced_cycle_lengths, is_chordal,
};
use crate::preorder::{forcibly_holds_in, precedes_in};
use crate::realize::RealizationSource;
use crate::sequence::DegreeSequence;
use crate::split::{
    all_split_partitions, decompose_around_cycle, find_split_partition,
    has_split_partition_by_search, is_split_by_forbidden, is_split_graph, is_split_sequence,
    CompositionSpec, JoinSide, SplitPartition,
};
use crate::vertex_set::VertexSet;

/// Largest order for the split-graph and graph-level `{M_2, C_4}` sweeps.
pub const GRAPH_SWEEP_BOUND: usize = 8;
/// Largest sequence length for the half-join sweep.
pub const HALF_JOIN_BOUND: usize = 9;
/// Largest sequence length for classification sweeps without `long`.
pub const CLASSIFY_BOUND: usize = 8;
/// Largest order of `S` and of `H` in the composition-cycle sweep.
pub const COMPOSITION_S_BOUND: usize = 4;
pub const COMPOSITION_H_BOUND: usize = 5;
/// Randomized configurations per gadget.
pub const GADGET_TRIALS: usize = 1000;
pub const GADGET_SEED: u64 = 0x5eed_cafe;

/// A claim the harness can replay.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    /// split ⇔ no `M_2` and no hole ⇔ no `M_2`, `C_4`, `C_5`; and the
    /// sequence version
    SplitCharacterization,
    /// a composition `(S, A, B) ∘ H` has an induced `C_n` iff `S` or `H` does
    CompositionCycles,
    /// excluding `C_{k-1}` forces the half-join structure around any `C_k`
    HalfJoin,
    /// excluding `C_n` ⇔ forcibly no hole `>= n`, `SPLIT ∘ C_{n+1}` or
    /// `SPLIT ∘ C_{n+2}` (for `n = 4` also cross-checked against chordality)
    ExcludeCycle(usize),
    ExcludeMatching,
    ExcludeSquarePentagon,
    ExcludeMatchingSquare,
    /// graph level: no `M_2`, no `C_4` ⇔ split or `(S, A, B) ∘ C_5`
    GraphMatchingSquare,
    Gadgets,
    All,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::SplitCharacterization => f.write_str("prop1"),
            Claim::CompositionCycles => f.write_str("lemma3"),
            Claim::HalfJoin => f.write_str("lemma4"),
            Claim::ExcludeCycle(n) => write!(f, "thm-n:{n}"),
            Claim::ExcludeMatching => f.write_str("thm6"),
            Claim::ExcludeSquarePentagon => f.write_str("cor7"),
            Claim::ExcludeMatchingSquare => f.write_str("cor8"),
            Claim::GraphMatchingSquare => f.write_str("prop9"),
            Claim::Gadgets => f.write_str("gadgets"),
            Claim::All => f.write_str("all"),
        }
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let claim = match s {
            "prop1" => Claim::SplitCharacterization,
            "lemma3" => Claim::CompositionCycles,
            "lemma4" => Claim::HalfJoin,
            "thm6" => Claim::ExcludeMatching,
            "cor7" => Claim::ExcludeSquarePentagon,
            "cor8" => Claim::ExcludeMatchingSquare,
            "prop9" => Claim::GraphMatchingSquare,
            "gadgets" => Claim::Gadgets,
            "all" => Claim::All,
            other => {
                let n = other
                    .strip_prefix("thm-n:")
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| {
                        Error::UnknownName(format!(
                            "claim {other:?} (expected prop1, lemma3, lemma4, thm-n:<n>, \
                             thm6, cor7, cor8, prop9, gadgets or all)"
                        ))
                    })?;
                if n < 4 {
                    return Err(Error::CycleLength { min: 4, got: n });
                }
                Claim::ExcludeCycle(n)
            }
        };
        Ok(claim)
    }
}

/// Per-shard accumulator; merging adds counts and concatenates findings.
#[derive(Default)]
struct Tally {
    instances: u64,
    per_param: BTreeMap<usize, u64>,
    found: Vec<Counterexample>,
}

impl Tally {
    fn merge(mut self, mut other: Tally) -> Tally {
        self.instances += other.instances;
        for (k, c) in other.per_param {
            *self.per_param.entry(k).or_default() += c;
        }
        self.found.append(&mut other.found);
        self
    }

    fn fail(&mut self, c: Counterexample) {
        self.found.push(c);
    }
}

fn sweep<T: Sync>(items: &[T], check: impl Fn(&T) -> Result<Tally> + Sync + Send) -> Result<Tally> {
    items
        .par_iter()
        .map(check)
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

fn cycle_seq(k: usize) -> DegreeSequence {
    DegreeSequence::uniform(2, k)
}

/// Runs claims against one universe, optionally with a mutant switched on.
#[derive(Clone, Copy, Debug)]
pub struct Verifier<'u> {
    universe: &'u Universe,
    mutant: Option<Mutant>,
    long: bool,
}

impl<'u> Verifier<'u> {
    pub fn new(universe: &'u Universe) -> Self {
        Verifier {
            universe,
            mutant: None,
            long: false,
        }
    }

    pub fn with_mutant(mut self, mutant: Option<Mutant>) -> Self {
        self.mutant = mutant;
        self
    }

    /// Lifts the classification bound from 8 to 9.
    pub fn allow_long(mut self, long: bool) -> Self {
        self.long = long;
        self
    }

    fn is(&self, m: Mutant) -> bool {
        self.mutant == Some(m)
    }

    fn compose(&self, spec: &CompositionSpec) -> Graph {
        if self.is(Mutant::ComposeWrongSide) {
            spec.compose_joining(JoinSide::Anticomplete)
        } else {
            spec.compose_joining(JoinSide::Complete)
        }
    }

    fn is_split(&self, g: &Graph) -> bool {
        is_split_graph(g)
            || (self.is(Mutant::BrokenSplitTest)
                && g.order() == 5
                && induces_cycle(g, g.vertices()))
    }

    fn is_split_seq(&self, d: &DegreeSequence) -> Result<bool> {
        Ok(is_split_sequence(d)? || (self.is(Mutant::BrokenSplitTest) && *d == cycle_seq(5)))
    }

    fn check_bound(&self, n: usize, bound: usize) -> Result<()> {
        if n > bound {
            return Err(Error::EnumerationBound { n, bound });
        }
        self.universe.require(n)
    }

    fn classify_bound(&self) -> usize {
        if self.long {
            CLASSIFY_BOUND + 1
        } else {
            CLASSIFY_BOUND
        }
    }

    fn report(
        &self,
        claim: Claim,
        bound: usize,
        start: Instant,
        tally: Tally,
    ) -> VerificationReport {
        let mut r = VerificationReport::new(claim.to_string(), self.universe.describe(bound));
        if let Some(m) = self.mutant {
            r.notes.push(format!("mutant {m} enabled"));
        }
        r.absorb(tally.instances, tally.found);
        r.elapsed = start.elapsed();
        r
    }

    /// Replays `claim`; `All` yields one report per claim.
    pub fn run(&self, claim: Claim, max_vertices: usize) -> Result<Vec<VerificationReport>> {
        let m = max_vertices;
        Ok(match claim {
            Claim::SplitCharacterization => vec![self.split_characterization(m)?],
            Claim::CompositionCycles => {
                vec![self
                    .composition_cycles(m.min(COMPOSITION_S_BOUND), m.min(COMPOSITION_H_BOUND))?]
            }
            Claim::HalfJoin => vec![self.half_join(m)?],
            Claim::ExcludeCycle(n) => vec![self.exclude_cycle(n, m)?],
            Claim::ExcludeMatching => vec![self.exclude_matching(m)?],
            Claim::ExcludeSquarePentagon => vec![self.exclude_square_pentagon(m)?],
            Claim::ExcludeMatchingSquare => vec![self.exclude_matching_square(m)?],
            Claim::GraphMatchingSquare => vec![self.graph_matching_square(m)?],
            Claim::Gadgets => vec![self.gadgets(GADGET_TRIALS, GADGET_SEED)?],
            Claim::All => {
                let g = m.min(GRAPH_SWEEP_BOUND);
                let c = m.min(self.classify_bound());
                vec![
                    self.split_characterization(g)?,
                    self.composition_cycles(
                        m.min(COMPOSITION_S_BOUND),
                        m.min(COMPOSITION_H_BOUND),
                    )?,
                    self.half_join(m.min(HALF_JOIN_BOUND))?,
                    self.exclude_cycle(4, c)?,
                    self.exclude_cycle(5, c)?,
                    self.exclude_matching(c)?,
                    self.exclude_square_pentagon(c)?,
                    self.exclude_matching_square(c)?,
                    self.graph_matching_square(g)?,
                    self.gadgets(GADGET_TRIALS, GADGET_SEED)?,
                ]
            }
        })
    }

    /// Five split tests on every graph, then sequence-level split ⇔
    /// excludes `M_2`, `C_4` and `C_5` ⇔ every realization is split.
    pub fn split_characterization(&self, max_n: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        self.check_bound(max_n, GRAPH_SWEEP_BOUND)?;
        let m2 = GraphFamily::Matching(2).construct()?;
        let graphs: Vec<&Graph> = self.universe.graphs_up_to(max_n).collect();
        let by_graph = sweep(&graphs, |g| {
            let mut t = Tally {
                instances: 1,
                ..Tally::default()
            };
            let degree_test = self.is_split(g);
            let search = has_split_partition_by_search(g);
            let forbidden = is_split_by_forbidden(g);
            let holes = !has_induced(g, &m2) && !has_hole_geq(g, 4)?;
            let found = find_split_partition(g)
                .is_some_and(|p| SplitPartition::new(g, p.complete_side()).is_ok());
            let answers = [degree_test, search, forbidden, holes, found];
            if answers.iter().any(|&a| a != degree_test) {
                t.fail(
                    Counterexample::new(format!(
                        "split tests disagree: degree={degree_test} search={search} \
                         no-M2-C4-C5={forbidden} no-M2-no-hole={holes} partition={found}"
                    ))
                    .graph(g),
                );
            }
            Ok(t)
        })?;
        let seqs = self.universe.sequences_up_to(max_n);
        let forbidden: Vec<DegreeSequence> =
            vec![DegreeSequence::uniform(1, 4), cycle_seq(4), cycle_seq(5)];
        let index = self.universe.index();
        let by_seq = sweep(&seqs, |d| {
            let mut t = Tally {
                instances: 1,
                ..Tally::default()
            };
            let split = self.is_split_seq(d)?;
            let mut excl = true;
            for f in &forbidden {
                if precedes_in(index, f, d)? {
                    excl = false;
                    break;
                }
            }
            let forcibly = forcibly_holds_in(index, d, is_split_graph)?;
            if split != excl || split != forcibly.holds {
                let mut c = Counterexample::new(format!(
                    "split sequence={split} but excludes M2,C4,C5={excl}, forcibly split={}",
                    forcibly.holds
                ))
                .sequence(d);
                if let Some(g) = &forcibly.counterexample {
                    c = c.graph(g);
                }
                t.fail(c);
            }
            Ok(t)
        })?;
        Ok(self.report(
            Claim::SplitCharacterization,
            max_n,
            start,
            by_graph.merge(by_seq),
        ))
    }

    /// Every split `S` on at most `s_bound` vertices, each of its split
    /// partitions, every `H` on at most `h_bound` vertices, every
    /// `4 <= n <= |S| + |H|`.
    pub fn composition_cycles(&self, s_bound: usize, h_bound: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        self.check_bound(s_bound, COMPOSITION_S_BOUND)?;
        self.check_bound(h_bound, COMPOSITION_H_BOUND)?;
        let mut setups = Vec::new();
        for s in self
            .universe
            .graphs_up_to(s_bound)
            .filter(|s| is_split_graph(s))
        {
            for p in all_split_partitions(s) {
                setups.push((*s, p.complete_side()));
            }
        }
        let hs: Vec<&Graph> = self.universe.graphs_up_to(h_bound).collect();
        let tally = sweep(&setups, |&(s, a)| {
            let mut t = Tally::default();
            let s_len = induced_cycle_lengths(&s);
            for h in &hs {
                let spec = CompositionSpec::new(s, a, **h)?;
                let g = self.compose(&spec);
                let (g_len, h_len) = (induced_cycle_lengths(&g), induced_cycle_lengths(h));
                for n in 4..=s.order() + h.order() {
                    t.instances += 1;
                    let in_g = g_len >> n & 1 == 1;
                    let in_parts = (s_len | h_len) >> n & 1 == 1;
                    if in_g != in_parts {
                        t.fail(
                            Counterexample::new(format!(
                                "C{n} induced in composition: {in_g}; in S or H: {in_parts}"
                            ))
                            .graph(&g)
                            .graph(&s)
                            .graph(h)
                            .label(format!("A={{{a}}}"))
                            .label(format!("n={n}")),
                        );
                    }
                }
            }
            Ok(t)
        })?;
        let bound = s_bound.max(h_bound);
        let mut r = self.report(Claim::CompositionCycles, bound, start, tally);
        r.universe = format!("{}, |S| <= {s_bound}, |H| <= {h_bound}", r.universe);
        Ok(r)
    }

    /// For every graphical `d` and every `k >= 5` such that `d` excludes
    /// `C_{k-1}`: every induced `C_k` in every realization has exterior
    /// vertices complete or anticomplete to it, a clique complete side, an
    /// independent anticomplete side, and rebuilds the realization exactly.
    pub fn half_join(&self, max_n: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        self.check_bound(max_n, HALF_JOIN_BOUND)?;
        let index = self.universe.index();
        let seqs = self.universe.sequences_up_to(max_n);
        let skip = self.is(Mutant::SkipHypothesis);
        let tally = sweep(&seqs, |d| {
            let mut t = Tally::default();
            for k in 5..=d.len() {
                if !skip && precedes_in(index, &cycle_seq(k - 1), d)? {
                    continue;
                }
                for g in index.realizations(d)?.iter() {
                    let _ = for_each_induced_cycle(g, k, k, |c| {
                        t.instances += 1;
                        *t.per_param.entry(k).or_default() += 1;
                        if let Some(why) = self.half_join_failure(g, c) {
                            t.fail(
                                Counterexample::new(why)
                                    .sequence(d)
                                    .graph(g)
                                    .label(format!("cycle={}", join(c)))
                                    .label(format!("k={k}")),
                            );
                        }
                        ControlFlow::Continue(())
                    });
                }
            }
            Ok(t)
        })?;
        let mut notes = Vec::new();
        if skip {
            notes.push("hypothesis check disabled".to_string());
        }
        for k in 5..=max_n {
            match tally.per_param.get(&k) {
                Some(c) => notes.push(format!("k={k}: {c} instances")),
                None => notes.push(format!(
                    "k={k}: no qualifying (sequence, realization, cycle) within n <= {max_n}; skipped, not counted"
                )),
            }
        }
        let mut r = self.report(Claim::HalfJoin, max_n, start, tally);
        r.notes.extend(notes);
        Ok(r)
    }

    fn half_join_failure(&self, g: &Graph, cycle: &[usize]) -> Option<String> {
        let cset: VertexSet = cycle.iter().copied().collect();
        let outside = g.vertices().difference(cset);
        let mut a = VertexSet::EMPTY;
        let mut b = VertexSet::EMPTY;
        for x in outside {
            let seen = g.neighbors(x).intersection(cset);
            if seen == cset {
                a.insert(x);
            } else if seen.is_empty() {
                b.insert(x);
            } else {
                return Some(format!("vertex {x} sees {{{seen}}} of the cycle"));
            }
        }
        if a.union(b).union(cset) != g.vertices() {
            return Some("complete and anticomplete sides do not cover the exterior".into());
        }
        if !g.is_clique(a) {
            return Some(format!("complete side {{{a}}} is not a clique"));
        }
        if !g.is_independent(b) {
            return Some(format!("anticomplete side {{{b}}} is not independent"));
        }
        let Some(dec) = decompose_around_cycle(g, cycle) else {
            return Some("no decomposition around the cycle".into());
        };
        match g.relabel(&dec.perm) {
            Ok(h) if h == self.compose(&dec.spec) => None,
            _ => Some(format!(
                "rebuilt composition {} differs from the realization",
                dec.spec
            )),
        }
    }

    fn classification_sweep(
        &self,
        claim: Claim,
        max_vertices: usize,
        classify: impl Fn(&DegreeSequence) -> Result<(ExclusionClassification, Option<String>)> + Sync,
    ) -> Result<VerificationReport> {
        let start = Instant::now();
        self.check_bound(max_vertices, self.classify_bound())?;
        let seqs = self.universe.sequences_up_to(max_vertices);
        let tally = sweep(&seqs, |d| {
            let mut t = Tally {
                instances: 1,
                ..Tally::default()
            };
            let (c, extra) = classify(d)?;
            let classes: Vec<String> = c.classes.iter().map(|c| c.to_string()).collect();
            let mut problems = Vec::new();
            if !c.consistent() {
                problems.push(format!(
                    "excludes {}={} but classes [{}]{}",
                    c.target,
                    c.excludes,
                    classes.join(", "),
                    c.dual_excludes
                        .map_or(String::new(), |x| format!(", excludes via complement={x}"))
                ));
            }
            if let Err(why) = c.revalidate_with(|s| self.compose(s)) {
                problems.push(why);
            }
            problems.extend(extra);
            if !problems.is_empty() {
                let mut ce = Counterexample::new(problems.join("; ")).sequence(d);
                if let Some(w) = &c.contained {
                    ce = ce.graph(&w.larger);
                }
                for (class, spec) in &c.compositions {
                    ce = ce.label(format!("{class}={spec}"));
                }
                t.fail(ce);
            }
            Ok(t)
        })?;
        Ok(self.report(claim, max_vertices, start, tally))
    }

    /// Brute-force "excludes `C_n`" against the three structural classes.
    pub fn exclude_cycle(&self, n: usize, max_vertices: usize) -> Result<VerificationReport> {
        if n < 4 {
            return Err(Error::CycleLength { min: 4, got: n });
        }
        let index = self.universe.index();
        self.classification_sweep(Claim::ExcludeCycle(n), max_vertices, |d| {
            let mut c = classify_exclusion_in(index, d, n)?;
            let mut extra = None;
            if n == 4 {
                let chordal = forcibly_holds_in(index, d, is_chordal)?.holds;
                if chordal != c.classes.contains(&StructureClass::ForciblyNoHoleGeq(4)) {
                    extra = Some(format!(
                        "forcibly chordal={chordal} disagrees with the hole scan"
                    ));
                }
            }
            if self.is(Mutant::DropNPlus2Class) {
                let dropped = StructureClass::SplitComposeCycle(n + 2);
                c.classes.remove(&dropped);
                c.compositions.remove(&dropped);
            }
            Ok((c, extra))
        })
    }

    pub fn exclude_matching(&self, max_vertices: usize) -> Result<VerificationReport> {
        let index = self.universe.index();
        self.classification_sweep(Claim::ExcludeMatching, max_vertices, |d| {
            Ok((classify_matching_in(index, d)?, None))
        })
    }

    pub fn exclude_square_pentagon(&self, max_vertices: usize) -> Result<VerificationReport> {
        let index = self.universe.index();
        self.classification_sweep(Claim::ExcludeSquarePentagon, max_vertices, |d| {
            Ok((classify_c4_c5_in(index, d)?, None))
        })
    }

    pub fn exclude_matching_square(&self, max_vertices: usize) -> Result<VerificationReport> {
        let index = self.universe.index();
        self.classification_sweep(Claim::ExcludeMatchingSquare, max_vertices, |d| {
            Ok((classify_m2_c4_in(index, d)?, None))
        })
    }

    /// Graph level: containing neither `M_2` nor `C_4` ⇔ split or
    /// `(S, A, B) ∘ C_5`, with each witness rechecked.
    pub fn graph_matching_square(&self, max_n: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        self.check_bound(max_n, GRAPH_SWEEP_BOUND)?;
        let m2 = GraphFamily::Matching(2).construct()?;
        let c4 = GraphFamily::Cycle(4).construct()?;
        let graphs: Vec<&Graph> = self.universe.graphs_up_to(max_n).collect();
        let tally = sweep(&graphs, |g| {
            let mut t = Tally {
                instances: 1,
                ..Tally::default()
            };
            let free = !has_induced(g, &m2) && !has_induced(g, &c4);
            let structure = graph_m2_c4_structure_with(g, find_split_partition);
            let problem = match &structure {
                M2C4Structure::Neither if free => {
                    Some("M2- and C4-free but neither split nor SPLIT∘C5".to_string())
                }
                M2C4Structure::Neither => None,
                _ if !free => Some("contains M2 or C4 yet has a structure witness".to_string()),
                M2C4Structure::Split(p) => SplitPartition::new(g, p.complete_side())
                    .err()
                    .map(|e| format!("split witness invalid: {e}")),
                M2C4Structure::SplitComposeC5(dec) => match g.relabel(&dec.perm) {
                    Ok(h) if h == self.compose(&dec.spec) => None,
                    _ => Some(format!(
                        "SPLIT∘C5 witness {} does not rebuild the graph",
                        dec.spec
                    )),
                },
            };
            if let Some(why) = problem {
                t.fail(Counterexample::new(why).graph(g));
            }
            Ok(t)
        })?;
        Ok(self.report(Claim::GraphMatchingSquare, max_n, start, tally))
    }

    /// Worked examples plus `trials` seeded random configurations per
    /// surgery, the matching-pair identity for `5 <= k <= 10` and
    /// `D(C_{n+k}) = D(C_n ∐ C_k)` for `n >= 4`, `k >= 3`, `n + k <= 10`.
    pub fn gadgets(&self, trials: usize, seed: u64) -> Result<VerificationReport> {
        let start = Instant::now();
        let mut t = Tally::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut contract = Vec::with_capacity(trials + 2);
        contract.push(pentagon_pendant_config());
        contract.push(hexagon_config());
        for _ in 0..trials {
            contract.push(random_contract_config(&mut rng));
        }
        for cfg in &contract {
            t.instances += 1;
            let outcome = gadget_contract_subdivide(&cfg.g, cfg.cycle, cfg.x, cfg.y, cfg.z, cfg.v)
                .map_err(|e| e.to_string())
                .and_then(|out| out.check());
            if let Err(why) = outcome {
                t.fail(
                    Counterexample::new(format!("contract-subdivide: {why}"))
                        .graph(&cfg.g)
                        .label(format!("cycle={}", cfg.cycle))
                        .label(format!("x={} y={} z={} v={}", cfg.x, cfg.y, cfg.z, cfg.v)),
                );
            }
        }
        let mut rewire = Vec::with_capacity(trials + 2);
        rewire.push(two_hub_config(5));
        rewire.push(two_hub_config(6));
        for _ in 0..trials {
            rewire.push(random_rewire_config(&mut rng));
        }
        for cfg in &rewire {
            t.instances += 1;
            let (c1, c3) = (cfg.order[0], cfg.order[2]);
            let rest: Vec<usize> = std::iter::once(c1)
                .chain(cfg.order[2..].iter().copied())
                .collect();
            let why = match gadget_rewire(&cfg.g, c1, c3, cfg.x, cfg.y) {
                Err(e) => Some(e.to_string()),
                Ok(h) if h.degree_sequence() != cfg.g.degree_sequence() => Some(format!(
                    "degree sequence changed to ({})",
                    h.degree_sequence()
                )),
                Ok(h) if !is_induced_cycle_in_order(&h, &rest) => {
                    Some("c1, c3, ..., ck is not an induced cycle after rewiring".into())
                }
                Ok(_) => None,
            };
            if let Some(why) = why {
                t.fail(
                    Counterexample::new(format!("rewire: {why}"))
                        .graph(&cfg.g)
                        .label(format!("cycle={}", join(&cfg.order)))
                        .label(format!("x={} y={}", cfg.x, cfg.y)),
                );
            }
        }
        for k in 5..=10 {
            t.instances += 1;
            let (a, b) = gadget_matching_pair(k)?;
            if a != b {
                t.fail(Counterexample::new(format!(
                    "D(C{k} + P2) = ({a}) but D(C{} + P3) = ({b})",
                    k - 1
                )));
            }
        }
        for n in 4..=7 {
            for k in 3..=10 - n {
                t.instances += 1;
                let (a, b) = cycle_split_pair(n, k)?;
                if a != b {
                    t.fail(Counterexample::new(format!(
                        "D(C{}) = ({a}) but D(C{n} + C{k}) = ({b})",
                        n + k
                    )));
                }
            }
        }
        let mut r = self.report(Claim::Gadgets, 10, start, t);
        r.universe = format!("{trials} seeded random configurations per surgery, seed {seed:#x}");
        Ok(r)
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

struct ContractConfig {
    g: Graph,
    cycle: VertexSet,
    x: usize,
    y: usize,
    z: usize,
    v: usize,
}

struct RewireConfig {
    g: Graph,
    /// the cycle in cyclic order, `c1` first
    order: Vec<usize>,
    x: usize,
    y: usize,
}

fn pentagon_pendant_config() -> ContractConfig {
    let g = GraphFamily::Cycle(5)
        .construct()
        .and_then(|c| c.add_vertex(VertexSet::singleton(0)))
        .expect("small fixed graph");
    ContractConfig {
        g,
        cycle: VertexSet::full(5),
        x: 5,
        y: 0,
        z: 2,
        v: 3,
    }
}

fn hexagon_config() -> ContractConfig {
    let g = GraphFamily::Cycle(6)
        .construct()
        .and_then(|c| c.add_vertex([0, 1, 4].into_iter().collect()))
        .expect("small fixed graph");
    ContractConfig {
        g,
        cycle: VertexSet::full(6),
        x: 6,
        y: 1,
        z: 3,
        v: 2,
    }
}

fn two_hub_config(k: usize) -> RewireConfig {
    let all = VertexSet::full(k);
    let g = GraphFamily::Cycle(k)
        .construct()
        .and_then(|c| c.add_vertex(all))
        .and_then(|c| c.add_vertex(all))
        .expect("small fixed graph");
    RewireConfig {
        g,
        order: (0..k).collect(),
        x: k,
        y: k + 1,
    }
}

/// Appends `extra` vertices with random neighborhoods.
fn add_random_vertices(rng: &mut ChaCha8Rng, mut g: Graph, extra: usize) -> Graph {
    for _ in 0..extra {
        let mask = rng.gen_range(0..1u32 << g.order());
        g = g
            .add_vertex(VertexSet::from_bits(mask))
            .expect("within bound");
    }
    g
}

/// Applies a uniformly random relabeling; returns the new graph and the
/// map old -> new.
fn shuffle(rng: &mut ChaCha8Rng, g: &Graph) -> (Graph, Vec<usize>) {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    (g.relabel(&perm).expect("permutation"), perm)
}

fn random_contract_config(rng: &mut ChaCha8Rng) -> ContractConfig {
    let k = rng.gen_range(5..=8);
    // x sees some but not all of the cycle
    let full = (1u32 << k) - 1;
    let seen = VertexSet::from_bits(rng.gen_range(1..full));
    let g = GraphFamily::Cycle(k)
        .construct()
        .and_then(|c| c.add_vertex(seen))
        .expect("within bound");
    let extra = rng.gen_range(0..=3);
    let g = add_random_vertices(rng, g, extra);
    let x = k;
    let ys = seen.to_vec();
    let zs = VertexSet::full(k).difference(seen).to_vec();
    let y = *ys.choose(rng).expect("x sees some cycle vertex");
    let z = *zs.choose(rng).expect("x misses some cycle vertex");
    let vs: Vec<usize> = [(z + 1) % k, (z + k - 1) % k]
        .into_iter()
        .filter(|&v| v != y)
        .collect();
    let v = *vs.choose(rng).expect("z has two cycle neighbors");
    let (g, p) = shuffle(rng, &g);
    ContractConfig {
        g,
        cycle: (0..k).map(|c| p[c]).collect(),
        x: p[x],
        y: p[y],
        z: p[z],
        v: p[v],
    }
}

fn random_rewire_config(rng: &mut ChaCha8Rng) -> RewireConfig {
    let k = rng.gen_range(5..=8);
    let cfg = two_hub_config(k);
    let extra = rng.gen_range(0..=2);
    let g = add_random_vertices(rng, cfg.g, extra);
    let shift = rng.gen_range(0..k);
    let mut order: Vec<usize> = (0..k).map(|i| (i + shift) % k).collect();
    if rng.gen_bool(0.5) {
        order[1..].reverse();
    }
    let (x, y) = if rng.gen_bool(0.5) {
        (k, k + 1)
    } else {
        (k + 1, k)
    };
    let (g, p) = shuffle(rng, &g);
    RewireConfig {
        g,
        order: order.iter().map(|&c| p[c]).collect(),
        x: p[x],
        y: p[y],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe(n: usize) -> Universe {
        Universe::generate(n).unwrap()
    }

    #[test]
    fn claim_ids_round_trip() {
        for s in [
            "prop1", "lemma3", "lemma4", "thm-n:4", "thm-n:7", "thm6", "cor7", "cor8", "prop9",
            "gadgets", "all",
        ] {
            assert_eq!(s.parse::<Claim>().unwrap().to_string(), s);
        }
        assert!("thm-n:3".parse::<Claim>().is_err());
        assert!("thm".parse::<Claim>().is_err());
    }

    #[test]
    fn split_sweep_small() {
        let u = universe(5);
        let v = Verifier::new(&u);
        for n in 0..=2 {
            assert!(v.split_characterization(n).unwrap().passed());
        }
        let r = v.split_characterization(5).unwrap();
        assert!(r.passed(), "{:?}", r.counterexamples);
        let graphs: u64 = (0..=5).map(|k| u.graphs(k).len() as u64).sum();
        let seqs: u64 = (0..=5).map(|k| u.sequences(k).len() as u64).sum();
        assert_eq!(r.instances, graphs + seqs);
        assert!(v.split_characterization(6).is_err());
    }

    #[test]
    fn broken_split_test_caught_at_five() {
        let u = universe(5);
        let v = Verifier::new(&u).with_mutant(Some(Mutant::BrokenSplitTest));
        assert!(v.split_characterization(4).unwrap().passed());
        let r = v.split_characterization(5).unwrap();
        assert!(!r.passed());
        assert!(r.counterexamples.iter().any(|c| c.graphs == ["Dhc"]));
    }

    #[test]
    fn composition_cycles_and_wrong_side() {
        let u = universe(5);
        let r = Verifier::new(&u).composition_cycles(3, 5).unwrap();
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert!(r.instances > 0);
        let bad = Verifier::new(&u)
            .with_mutant(Some(Mutant::ComposeWrongSide))
            .composition_cycles(3, 5)
            .unwrap();
        assert!(!bad.passed());
        assert!(Verifier::new(&u).composition_cycles(5, 5).is_err());
    }

    #[test]
    fn half_join_small_and_without_hypothesis() {
        let u = universe(6);
        let r = Verifier::new(&u).half_join(6).unwrap();
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert!(r.notes.iter().any(|n| n.starts_with("k=5: ")));
        let bad = Verifier::new(&u)
            .with_mutant(Some(Mutant::SkipHypothesis))
            .half_join(6)
            .unwrap();
        let pendant = DegreeSequence::from(vec![3, 2, 2, 2, 2, 1]);
        assert!(bad
            .counterexamples
            .iter()
            .any(|c| c.sequence.as_ref() == Some(&pendant)));
    }

    #[test]
    fn theorem_and_dropped_class() {
        let u = universe(6);
        let v = Verifier::new(&u);
        for n in 4..=7 {
            let r = v.exclude_cycle(n, 6).unwrap();
            assert!(r.passed(), "n={n}: {:?}", r.counterexamples);
        }
        let bad = v
            .with_mutant(Some(Mutant::DropNPlus2Class))
            .exclude_cycle(4, 6)
            .unwrap();
        let hexagon = DegreeSequence::uniform(2, 6);
        assert!(bad
            .counterexamples
            .iter()
            .any(|c| c.sequence.as_ref() == Some(&hexagon)));
    }

    #[test]
    fn variants_small() {
        let u = universe(6);
        let v = Verifier::new(&u);
        for r in [
            v.exclude_matching(6).unwrap(),
            v.exclude_square_pentagon(6).unwrap(),
            v.exclude_matching_square(6).unwrap(),
            v.graph_matching_square(6).unwrap(),
        ] {
            assert!(r.passed(), "{}: {:?}", r.claim, r.counterexamples);
        }
    }

    #[test]
    fn gadgets_pass_and_are_seeded() {
        let u = universe(0);
        let v = Verifier::new(&u);
        let a = v.gadgets(200, 7).unwrap();
        assert!(a.passed(), "{:?}", a.counterexamples);
        assert_eq!(a.instances, 2 * 202 + 6 + 10);
        assert_eq!(a.to_json_line(), v.gadgets(200, 7).unwrap().to_json_line());
    }

    #[test]
    fn random_configs_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let c = random_contract_config(&mut rng);
            assert!(induces_cycle(&c.g, c.cycle));
            let r = random_rewire_config(&mut rng);
            assert!(is_induced_cycle_in_order(&r.g, &r.order));
            assert!(!r.g.has_edge(r.x, r.y));
            let cyc: VertexSet = r.order.iter().copied().collect();
            assert!(cyc.is_subset(r.g.neighbors(r.x)) && cyc.is_subset(r.g.neighbors(r.y)));
        }
    }
}
