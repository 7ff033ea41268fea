//! Structural classification of degree sequences that exclude `C_n`, `C_4`,
//! `M_2`, `{C_4, C_5}` or `{M_2, C_4}`.
//!
//! Every classification carries the brute-force answer to "does `d`
//! exclude the target?" next to the structural classes it falls into, so a
//! classification is self-checking: the structure theorems say `excludes`
//! holds exactly when `classes` is nonempty.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily};
use crate::induced::{for_each_induced_cycle, has_hole_geq};
use crate::preorder::{forcibly_holds_in, precedes_witness_in, Forcibly, PrecedesWitness};
use crate::realize::{Backtracking, RealizationSource};
use crate::sequence::DegreeSequence;
use crate::split::{
    decompose_around_cycle, find_split_partition, is_split_sequence, match_split_compose_cycle_in,
    CompositionSpec, Decomposition, SplitPartition,
};

/// One of the structural classes the theorems enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StructureClass {
    /// every realization has no induced cycle on at least `n` vertices
    ForciblyNoHoleGeq(usize),
    ForciblyChordal,
    /// every realization has a chordal complement
    ForciblyAntichordal,
    /// `d = D((S, A, B) ∘ C_k)` for some split `S`
    SplitComposeCycle(usize),
    /// `d = D((S, A, B) ∘ K_{3,3})` for some split `S`
    SplitComposeK33,
    /// `d` is the degree sequence of a split graph
    Split,
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureClass::ForciblyNoHoleGeq(n) => write!(f, "FORCIBLY_NO_HOLE_GEQ_{n}"),
            StructureClass::ForciblyChordal => f.write_str("FORCIBLY_CHORDAL"),
            StructureClass::ForciblyAntichordal => f.write_str("FORCIBLY_ANTICHORDAL"),
            StructureClass::SplitComposeCycle(k) => write!(f, "SPLIT∘C{k}"),
            StructureClass::SplitComposeK33 => f.write_str("SPLIT∘K3,3"),
            StructureClass::Split => f.write_str("SPLIT"),
        }
    }
}

impl Serialize for StructureClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// What is being excluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExclusionTarget {
    Cycle(usize),
    Square,
    Matching,
    SquareAndPentagon,
    MatchingAndSquare,
}

impl ExclusionTarget {
    /// The graphs whose degree sequences must all be excluded.
    pub fn forbidden(&self) -> Vec<Graph> {
        use GraphFamily::*;
        let fams: Vec<GraphFamily> = match *self {
            ExclusionTarget::Cycle(n) => vec![Cycle(n)],
            ExclusionTarget::Square => vec![Cycle(4)],
            ExclusionTarget::Matching => vec![Matching(2)],
            ExclusionTarget::SquareAndPentagon => vec![Cycle(4), Cycle(5)],
            ExclusionTarget::MatchingAndSquare => vec![Matching(2), Cycle(4)],
        };
        fams.into_iter()
            .map(|f| f.construct().expect("fixed families are valid"))
            .collect()
    }
}

impl fmt::Display for ExclusionTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExclusionTarget::Cycle(n) => write!(f, "Cn:{n}"),
            ExclusionTarget::Square => f.write_str("C4"),
            ExclusionTarget::Matching => f.write_str("M2"),
            ExclusionTarget::SquareAndPentagon => f.write_str("C4C5"),
            ExclusionTarget::MatchingAndSquare => f.write_str("M2C4"),
        }
    }
}

/// `C4`, `M2`, `Cn:<n>`, `C4C5` or `M2C4`.
impl FromStr for ExclusionTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "C4" => Ok(ExclusionTarget::Square),
            "M2" => Ok(ExclusionTarget::Matching),
            "C4C5" => Ok(ExclusionTarget::SquareAndPentagon),
            "M2C4" => Ok(ExclusionTarget::MatchingAndSquare),
            other => {
                let n = other
                    .strip_prefix("Cn:")
                    .filter(|t| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()))
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| {
                        Error::UnknownName(format!(
                            "exclusion target {other:?} (expected C4, M2, Cn:<n>, C4C5 or M2C4)"
                        ))
                    })?;
                if n < 4 {
                    return Err(Error::CycleLength { min: 4, got: n });
                }
                Ok(ExclusionTarget::Cycle(n))
            }
        }
    }
}

impl Serialize for ExclusionTarget {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Brute-force exclusion answer plus the structural classes, each with a
/// witness that can be rechecked on its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExclusionClassification {
    pub sequence: DegreeSequence,
    pub target: ExclusionTarget,
    pub excludes: bool,
    pub classes: BTreeSet<StructureClass>,
    /// a composition reproducing `sequence` for every `SPLIT∘…` class
    pub compositions: BTreeMap<StructureClass, CompositionSpec>,
    /// the forcible-property scan behind the `FORCIBLY_…` class, whether or
    /// not it succeeded
    pub forcibly: Option<Forcibly>,
    /// when `excludes` is false: a realization containing a forbidden sequence
    pub contained: Option<PrecedesWitness>,
    /// for `M2`: the exclusion answer obtained through complements
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_excludes: Option<bool>,
}

impl ExclusionClassification {
    /// `excludes` holds exactly when some structural class applies.
    pub fn consistent(&self) -> bool {
        self.excludes != self.classes.is_empty()
            && self.dual_excludes.is_none_or(|x| x == self.excludes)
    }

    /// Rechecks every witness; returns a description of the first failure.
    pub fn revalidate(&self) -> std::result::Result<(), String> {
        self.revalidate_with(|spec| spec.compose())
    }

    pub(crate) fn revalidate_with(
        &self,
        compose: impl Fn(&CompositionSpec) -> Graph,
    ) -> std::result::Result<(), String> {
        for (class, spec) in &self.compositions {
            if !self.classes.contains(class) {
                return Err(format!("witness for unlisted class {class}"));
            }
            let got = compose(spec).degree_sequence();
            if got != self.sequence {
                return Err(format!("{class} witness {spec} composes to ({got})"));
            }
        }
        for class in &self.classes {
            let needs_spec = matches!(
                class,
                StructureClass::SplitComposeCycle(_) | StructureClass::SplitComposeK33
            );
            if needs_spec && !self.compositions.contains_key(class) {
                return Err(format!("class {class} has no composition witness"));
            }
        }
        if let Some(w) = &self.contained {
            let small = w.smaller.degree_sequence();
            let listed = self
                .target
                .forbidden()
                .iter()
                .any(|h| h.degree_sequence() == small);
            if !listed || !w.verify(&small, &self.sequence) {
                return Err("containment witness does not verify".into());
            }
        }
        if self.excludes == self.contained.is_some() {
            return Err("containment witness disagrees with the exclusion flag".into());
        }
        Ok(())
    }

    /// Human-readable multi-line report.
    pub fn report_lines(&self) -> Vec<String> {
        let mut out = vec![
            format!("sequence: ({})", self.sequence),
            format!("target: {}", self.target),
            format!("excludes: {}", self.excludes),
        ];
        let classes: Vec<String> = self.classes.iter().map(|c| c.to_string()).collect();
        out.push(format!(
            "classes: {}",
            if classes.is_empty() {
                "none".to_string()
            } else {
                classes.join(", ")
            }
        ));
        for (class, spec) in &self.compositions {
            out.push(format!("witness {class}: {spec}"));
        }
        if let Some(f) = &self.forcibly {
            match &f.counterexample {
                None => out.push(format!(
                    "forcibly: holds on all {} realization(s)",
                    f.checked
                )),
                Some(g) => out.push(format!(
                    "forcibly: fails on realization {} (after {} checked)",
                    g, f.checked
                )),
            }
        }
        if let Some(w) = &self.contained {
            out.push(format!(
                "contained: {} induced in realization {} at vertices {:?}",
                w.smaller, w.larger, w.embedding
            ));
        }
        if let Some(dual) = self.dual_excludes {
            out.push(format!("excludes via complement: {dual}"));
        }
        out.push(format!("consistent: {}", self.consistent()));
        out
    }
}

/// Theorem for general `n >= 4`: `d` excludes `C_n` iff it is forcibly free
/// of holes on at least `n` vertices, or `D(SPLIT ∘ C_{n+1})`, or
/// `D(SPLIT ∘ C_{n+2})`.
pub fn classify_exclusion_in(
    src: &dyn RealizationSource,
    d: &DegreeSequence,
    n: usize,
) -> Result<ExclusionClassification> {
    if n < 4 {
        return Err(Error::CycleLength { min: 4, got: n });
    }
    d.require_graphical()?;
    let cn = DegreeSequence::uniform(2, n);
    let contained = precedes_witness_in(src, &cn, d)?;
    let forcibly = forcibly_holds_in(src, d, |g| !has_hole_geq(g, n).expect("n >= 4 checked"))?;
    let mut classes = BTreeSet::new();
    let mut compositions = BTreeMap::new();
    if forcibly.holds {
        classes.insert(StructureClass::ForciblyNoHoleGeq(n));
    }
    for k in [n + 1, n + 2] {
        if let Some(dec) = match_split_compose_cycle_in(src, d, k)? {
            classes.insert(StructureClass::SplitComposeCycle(k));
            compositions.insert(StructureClass::SplitComposeCycle(k), dec.spec);
        }
    }
    Ok(ExclusionClassification {
        sequence: d.clone(),
        target: ExclusionTarget::Cycle(n),
        excludes: contained.is_none(),
        classes,
        compositions,
        forcibly: Some(forcibly),
        contained,
        dual_excludes: None,
    })
}

/// `C_4`: forcibly chordal, `D(SPLIT ∘ C_5)` or `D(SPLIT ∘ C_6)`.
pub fn classify_square_in(
    src: &dyn RealizationSource,
    d: &DegreeSequence,
) -> Result<ExclusionClassification> {
    let mut c = classify_exclusion_in(src, d, 4)?;
    c.target = ExclusionTarget::Square;
    if c.classes.remove(&StructureClass::ForciblyNoHoleGeq(4)) {
        c.classes.insert(StructureClass::ForciblyChordal);
    }
    Ok(c)
}

/// `M_2`, through complements: forcibly antichordal, `D(SPLIT ∘ C_5)` or
/// `D(SPLIT ∘ K_{3,3})`. The complement of `(S, A, B) ∘ H` is
/// `(co-S, B, A) ∘ co-H`; the pentagon is self-complementary and the
/// complement of the hexagon has the degree sequence of `K_{3,3}`.
pub fn classify_matching_in(
    src: &dyn RealizationSource,
    d: &DegreeSequence,
) -> Result<ExclusionClassification> {
    let dual = classify_square_in(src, &d.complement()?)?;
    let m2 = DegreeSequence::uniform(1, 4);
    let contained = precedes_witness_in(src, &m2, d)?;
    let mut classes = BTreeSet::new();
    let mut compositions = BTreeMap::new();
    for class in &dual.classes {
        let (mapped, h) = match class {
            StructureClass::ForciblyChordal => (StructureClass::ForciblyAntichordal, None),
            StructureClass::SplitComposeCycle(5) => (*class, Some(GraphFamily::Cycle(5))),
            StructureClass::SplitComposeCycle(6) => (
                StructureClass::SplitComposeK33,
                Some(GraphFamily::CompleteBipartite(3, 3)),
            ),
            other => unreachable!("square classification produced {other}"),
        };
        classes.insert(mapped);
        if let Some(fam) = h {
            let spec = &dual.compositions[class];
            let s = spec.split_graph().complement();
            let a = spec.partition().anticomplete_side();
            let h = fam.construct().expect("fixed family");
            compositions.insert(mapped, CompositionSpec::new(s, a, h)?);
        }
    }
    let forcibly = dual.forcibly.map(|f| Forcibly {
        counterexample: f.counterexample.map(|g| g.complement()),
        ..f
    });
    Ok(ExclusionClassification {
        sequence: d.clone(),
        target: ExclusionTarget::Matching,
        excludes: contained.is_none(),
        classes,
        compositions,
        forcibly,
        contained,
        dual_excludes: Some(dual.excludes),
    })
}

/// `{C_4, C_5}`: forcibly chordal or `D(SPLIT ∘ C_6)`.
pub fn classify_c4_c5_in(
    src: &dyn RealizationSource,
    d: &DegreeSequence,
) -> Result<ExclusionClassification> {
    let sq = classify_square_in(src, d)?;
    let c5 = precedes_witness_in(src, &DegreeSequence::uniform(2, 5), d)?;
    let keep = [
        StructureClass::ForciblyChordal,
        StructureClass::SplitComposeCycle(6),
    ];
    let classes: BTreeSet<_> = sq
        .classes
        .iter()
        .copied()
        .filter(|c| keep.contains(c))
        .collect();
    let compositions = sq
        .compositions
        .into_iter()
        .filter(|(c, _)| classes.contains(c))
        .collect();
    let contained = sq.contained.or(c5);
    Ok(ExclusionClassification {
        sequence: d.clone(),
        target: ExclusionTarget::SquareAndPentagon,
        excludes: contained.is_none(),
        classes,
        compositions,
        forcibly: sq.forcibly,
        contained,
        dual_excludes: None,
    })
}

/// `{M_2, C_4}`: `D(SPLIT ∘ C_5)` or `D(SPLIT)`.
pub fn classify_m2_c4_in(
    src: &dyn RealizationSource,
    d: &DegreeSequence,
) -> Result<ExclusionClassification> {
    let sq = classify_square_in(src, d)?;
    let m2 = precedes_witness_in(src, &DegreeSequence::uniform(1, 4), d)?;
    let mut classes = BTreeSet::new();
    let mut compositions = BTreeMap::new();
    if is_split_sequence(d)? {
        classes.insert(StructureClass::Split);
    }
    let c5 = StructureClass::SplitComposeCycle(5);
    if let Some(spec) = sq.compositions.get(&c5) {
        classes.insert(c5);
        compositions.insert(c5, spec.clone());
    }
    let contained = m2.or(sq.contained);
    Ok(ExclusionClassification {
        sequence: d.clone(),
        target: ExclusionTarget::MatchingAndSquare,
        excludes: contained.is_none(),
        classes,
        compositions,
        forcibly: None,
        contained,
        dual_excludes: None,
    })
}

/// Dispatches on the target.
pub fn classify_in(
    src: &dyn RealizationSource,
    d: &DegreeSequence,
    target: ExclusionTarget,
) -> Result<ExclusionClassification> {
    match target {
        ExclusionTarget::Cycle(n) => classify_exclusion_in(src, d, n),
        ExclusionTarget::Square => classify_square_in(src, d),
        ExclusionTarget::Matching => classify_matching_in(src, d),
        ExclusionTarget::SquareAndPentagon => classify_c4_c5_in(src, d),
        ExclusionTarget::MatchingAndSquare => classify_m2_c4_in(src, d),
    }
}

pub fn classify(d: &DegreeSequence, target: ExclusionTarget) -> Result<ExclusionClassification> {
    classify_in(&Backtracking::default(), d, target)
}

pub fn classify_exclusion(d: &DegreeSequence, n: usize) -> Result<ExclusionClassification> {
    classify_exclusion_in(&Backtracking::default(), d, n)
}

pub fn classify_square(d: &DegreeSequence) -> Result<ExclusionClassification> {
    classify_square_in(&Backtracking::default(), d)
}

pub fn classify_matching(d: &DegreeSequence) -> Result<ExclusionClassification> {
    classify_matching_in(&Backtracking::default(), d)
}

pub fn classify_c4_c5(d: &DegreeSequence) -> Result<ExclusionClassification> {
    classify_c4_c5_in(&Backtracking::default(), d)
}

pub fn classify_m2_c4(d: &DegreeSequence) -> Result<ExclusionClassification> {
    classify_m2_c4_in(&Backtracking::default(), d)
}

/// Graph-level structure for graphs without induced `M_2` and `C_4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum M2C4Structure {
    Split(SplitPartition),
    /// `perm` relabels the graph into `spec.compose()` exactly
    SplitComposeC5(Decomposition),
    Neither,
}

/// Looks for a split partition, then for an induced `C_5` whose exterior is
/// a clique complete to it plus an independent set anticomplete to it.
/// This does not test for `M_2` or `C_4`; `Neither` should coincide with
/// containing one of them.
pub fn graph_m2_c4_structure(g: &Graph) -> M2C4Structure {
    graph_m2_c4_structure_with(g, find_split_partition)
}

pub(crate) fn graph_m2_c4_structure_with(
    g: &Graph,
    split: impl Fn(&Graph) -> Option<SplitPartition>,
) -> M2C4Structure {
    if let Some(p) = split(g) {
        return M2C4Structure::Split(p);
    }
    let mut found = None;
    let _ = for_each_induced_cycle(g, 5, 5, |c| match decompose_around_cycle(g, c) {
        Some(dec) => {
            found = Some(dec);
            std::ops::ControlFlow::Break(())
        }
        None => std::ops::ControlFlow::Continue(()),
    });
    found.map_or(M2C4Structure::Neither, M2C4Structure::SplitComposeC5)
}

#[cfg(test)]
mod tests {
    use super::StructureClass::*;
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::split::CompositionSpec;
    use crate::vertex_set::VertexSet;

    fn ds(v: &[u32]) -> DegreeSequence {
        DegreeSequence::from(v.to_vec())
    }

    #[test]
    fn general_n_examples() {
        let c = classify_exclusion(&ds(&[2; 5]), 4).unwrap();
        assert!(c.excludes && c.classes.contains(&SplitComposeCycle(5)));
        assert_eq!(
            c.compositions[&SplitComposeCycle(5)].split_graph().order(),
            0
        );
        c.revalidate().unwrap();

        let c = classify_exclusion(&ds(&[2; 4]), 4).unwrap();
        assert!(!c.excludes && c.classes.is_empty());
        let w = c.contained.as_ref().unwrap();
        assert!(is_isomorphic(
            &w.smaller,
            &GraphFamily::Cycle(4).construct().unwrap()
        ));
        c.revalidate().unwrap();

        let c = classify_exclusion(&ds(&[2; 6]), 4).unwrap();
        assert!(c.excludes && c.classes.contains(&SplitComposeCycle(6)));
        assert!(!c.classes.contains(&ForciblyNoHoleGeq(4)));
        assert!(c.consistent());

        assert!(classify_exclusion(&ds(&[2; 5]), 3).is_err());
        assert!(classify_exclusion(&ds(&[1, 1, 1]), 4).is_err());
    }

    #[test]
    fn square_examples() {
        assert_eq!(
            classify_square(&ds(&[1, 1])).unwrap().classes,
            [ForciblyChordal].into()
        );
        assert_eq!(
            classify_square(&ds(&[3; 4])).unwrap().classes,
            [ForciblyChordal].into()
        );
        let wheel = classify_square(&ds(&[5, 3, 3, 3, 3, 3])).unwrap();
        assert!(wheel.excludes);
        assert!(wheel.classes.contains(&SplitComposeCycle(5)));
        let spec = &wheel.compositions[&SplitComposeCycle(5)];
        assert_eq!(spec.split_graph().order(), 1);
        assert_eq!(spec.partition().complete_side(), VertexSet::singleton(0));
    }

    #[test]
    fn matching_examples() {
        let c = classify_matching(&ds(&[1; 4])).unwrap();
        assert!(!c.excludes);
        let c = classify_matching(&ds(&[2; 5])).unwrap();
        assert!(c.excludes && c.classes.contains(&SplitComposeCycle(5)));
        c.revalidate().unwrap();
        let c = classify_matching(&ds(&[3; 6])).unwrap();
        assert!(c.excludes);
        assert!(c.classes.contains(&SplitComposeK33));
        assert!(!c.classes.contains(&ForciblyAntichordal));
        assert!(c.consistent());
        c.revalidate().unwrap();
    }

    #[test]
    fn corollary_examples() {
        let c = classify_c4_c5(&ds(&[2; 5])).unwrap();
        assert!(!c.excludes && c.classes.is_empty());
        let c = classify_c4_c5(&ds(&[2; 6])).unwrap();
        assert!(c.excludes && c.classes == [SplitComposeCycle(6)].into());
        let c = classify_c4_c5(&ds(&[2; 3])).unwrap();
        assert!(c.excludes && c.classes == [ForciblyChordal].into());

        let c = classify_m2_c4(&ds(&[2; 3])).unwrap();
        assert!(c.excludes && c.classes == [Split].into());
        let c = classify_m2_c4(&ds(&[2; 5])).unwrap();
        assert!(c.excludes && c.classes == [SplitComposeCycle(5)].into());
        let c = classify_m2_c4(&ds(&[1; 4])).unwrap();
        assert!(!c.excludes && c.consistent());
    }

    #[test]
    fn graph_structure_examples() {
        let k5 = GraphFamily::Complete(5).construct().unwrap();
        assert!(matches!(
            graph_m2_c4_structure(&k5),
            M2C4Structure::Split(_)
        ));
        let wheel = CompositionSpec::new(
            GraphFamily::Complete(1).construct().unwrap(),
            VertexSet::singleton(0),
            GraphFamily::Cycle(5).construct().unwrap(),
        )
        .unwrap()
        .compose();
        match graph_m2_c4_structure(&wheel) {
            M2C4Structure::SplitComposeC5(dec) => {
                assert_eq!(dec.spec.split_graph().order(), 1);
                assert_eq!(wheel.relabel(&dec.perm).unwrap(), dec.spec.compose());
            }
            other => panic!("{other:?}"),
        }
        let c4 = GraphFamily::Cycle(4).construct().unwrap();
        assert_eq!(graph_m2_c4_structure(&c4), M2C4Structure::Neither);
    }

    #[test]
    fn target_names() {
        for t in ["C4", "M2", "C4C5", "M2C4", "Cn:5"] {
            assert_eq!(t.parse::<ExclusionTarget>().unwrap().to_string(), t);
        }
        assert!("Cn:3".parse::<ExclusionTarget>().is_err());
        assert!("C5".parse::<ExclusionTarget>().is_err());
        assert!("Cn:".parse::<ExclusionTarget>().is_err());
    }

    #[test]
    fn record_serializes() {
        let c = classify_square(&ds(&[2; 5])).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains("\"classes\":[\"SPLIT∘C5\"]"), "{json}");
        assert!(json.contains("\"?;;C5\""), "{json}");
        assert!(c.report_lines().iter().any(|l| l == "excludes: true"));
    }
}
