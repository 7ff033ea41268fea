//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use degexclude::classify::{classify_matching, StructureClass};
use degexclude::realize::{Backtracking, RealizationSource};
use degexclude::verify::{
    Claim, Mutant, Universe, VerificationReport, Verifier, UNLABELED_GRAPH_COUNTS,
};
use degexclude::DegreeSequence;

const SEED: u64 = 0x5eed_cafe;

type Criterion = (&'static str, fn(&Universe) -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn summary(r: &VerificationReport) -> String {
    let mut s = format!(
        "{} instances, {} counterexamples, {:.2?}",
        r.instances,
        r.counterexamples.len(),
        r.elapsed
    );
    if let Some(c) = r.counterexamples.first() {
        s.push_str(&format!("; first: {c}"));
    }
    s
}

/// Havel–Hakimi on a plain vector.
fn oracle_graphical(d: &[u32]) -> bool {
    let mut v: Vec<u32> = d.to_vec();
    loop {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let Some(&top) = v.first() else { return true };
        if top == 0 {
            return true;
        }
        let top = top as usize;
        if top >= v.len() {
            return false;
        }
        v.remove(0);
        for x in v.iter_mut().take(top) {
            if *x == 0 {
                return false;
            }
            *x -= 1;
        }
    }
}

/// Number of graphical sequences of each length `0..=max`, by listing all
/// nonincreasing sequences.
fn oracle_sequence_counts(max: usize) -> Vec<usize> {
    fn rec(len: usize, cap: u32, cur: &mut Vec<u32>, count: &mut usize) {
        if cur.len() == len {
            *count += usize::from(oracle_graphical(cur));
            return;
        }
        for v in 0..=cap {
            cur.push(v);
            rec(len, v, cur, count);
            cur.pop();
        }
    }
    (0..=max)
        .map(|n| {
            let mut count = 0;
            rec(n, n.saturating_sub(1) as u32, &mut Vec::new(), &mut count);
            count
        })
        .collect()
}

/// Whether some realization of `d` has `k` vertices inducing a 2-regular
/// subgraph, by scanning every `k`-subset of every realization.
fn oracle_contains_two_regular(d: &DegreeSequence, k: usize) -> bool {
    let src = Backtracking::default();
    let reals = src.realizations(d).unwrap();
    reals.iter().any(|g| {
        let n = g.order();
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .any(|mask| {
                (0..n)
                    .filter(|&v| mask >> v & 1 == 1)
                    .all(|v| (g.neighbors(v).bits() & mask).count_ones() == 2)
            })
    })
}

fn criterion_square(u: &Universe) -> Outcome {
    let v = Verifier::new(u);
    let small = v.exclude_cycle(4, 7).unwrap();
    let full = v.exclude_cycle(4, 8).unwrap();
    let counts = oracle_sequence_counts(8);
    let expected: u64 = counts.iter().map(|&c| c as u64).sum();
    // independent brute force at length <= 7
    let mut disagreements = 0;
    for d in u.sequences_up_to(7) {
        let c = degexclude::classify::classify_square_in(u.index(), d).unwrap();
        if c.excludes == oracle_contains_two_regular(d, 4) {
            disagreements += 1;
        }
    }
    let ok = small.passed()
        && full.passed()
        && full.instances == expected
        && disagreements == 0
        && small.elapsed < Duration::from_secs(30)
        && full.elapsed < Duration::from_secs(600);
    outcome(
        ok,
        format!(
            "length <= 8: {}; expected {expected} sequences; oracle disagreements at <= 7: {disagreements}; <= 7 took {:.2?}",
            summary(&full),
            small.elapsed
        ),
    )
}

fn criterion_pentagon_general(u: &Universe) -> Outcome {
    let r = Verifier::new(u).exclude_cycle(5, 8).unwrap();
    let mut disagreements = 0;
    for d in u.sequences_up_to(7) {
        let c = degexclude::classify::classify_exclusion_in(u.index(), d, 5).unwrap();
        if c.excludes == oracle_contains_two_regular(d, 5) {
            disagreements += 1;
        }
    }
    outcome(
        r.passed() && disagreements == 0,
        format!(
            "{}; oracle disagreements at <= 7: {disagreements}",
            summary(&r)
        ),
    )
}

fn criterion_split(u: &Universe) -> Outcome {
    let r = Verifier::new(u).split_characterization(8).unwrap();
    let counts: Vec<usize> = (0..=8).map(|k| u.graphs(k).len()).collect();
    let pinned = &UNLABELED_GRAPH_COUNTS[..=8];
    let published = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
    let ok = r.passed() && counts == published && pinned == published;
    outcome(ok, format!("{}; graph counts {counts:?}", summary(&r)))
}

fn criterion_composition(u: &Universe) -> Outcome {
    let r = Verifier::new(u).composition_cycles(4, 5).unwrap();
    outcome(r.passed() && r.instances > 0, summary(&r))
}

fn criterion_half_join(u: &Universe) -> Outcome {
    let v = Verifier::new(u);
    let r7 = v.half_join(7).unwrap();
    let r8 = v.half_join(8).unwrap();
    let has = |r: &VerificationReport, k: usize| {
        r.notes
            .iter()
            .any(|n| n.starts_with(&format!("k={k}: ")) && n.ends_with(" instances"))
    };
    let ok = r7.passed() && r8.passed() && has(&r7, 5) && has(&r8, 5) && has(&r8, 6);
    outcome(
        ok,
        format!(
            "<= 7: {}; <= 8: {}; {}",
            summary(&r7),
            summary(&r8),
            r8.notes.join(", ")
        ),
    )
}

fn criterion_gadgets(u: &Universe) -> Outcome {
    let r = Verifier::new(u).gadgets(1000, SEED).unwrap();
    let identity_pairs = (4..=7).map(|n| 10 - n - 2).sum::<u64>();
    let expected = 2 * (1000 + 2) + 6 + identity_pairs;
    outcome(r.passed() && r.instances == expected, summary(&r))
}

fn criterion_matching(u: &Universe) -> Outcome {
    let r = Verifier::new(u).exclude_matching(7).unwrap();
    let mut problems = Vec::new();
    let worked = [
        (
            DegreeSequence::uniform(2, 5),
            StructureClass::SplitComposeCycle(5),
        ),
        (
            DegreeSequence::uniform(3, 6),
            StructureClass::SplitComposeK33,
        ),
    ];
    for (d, class) in &worked {
        let c = classify_matching(d).unwrap();
        let spec_ok = c
            .compositions
            .get(class)
            .is_some_and(|s| s.compose().degree_sequence() == *d);
        if !(c.excludes && c.classes.contains(class) && spec_ok && c.revalidate().is_ok()) {
            problems.push(format!("({d}) not classified {class}"));
        }
    }
    let ok = r.passed() && problems.is_empty();
    outcome(
        ok,
        format!(
            "{}; worked examples: {}",
            summary(&r),
            if problems.is_empty() {
                "ok".into()
            } else {
                problems.join(", ")
            }
        ),
    )
}

fn criterion_graph_level(u: &Universe) -> Outcome {
    let r = Verifier::new(u).graph_matching_square(8).unwrap();
    let graphs: u64 = (0..=8).map(|k| u.graphs(k).len() as u64).sum();
    outcome(r.passed() && r.instances == graphs, summary(&r))
}

fn criterion_mutants(u: &Universe) -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for m in Mutant::ALL {
        let reports = Verifier::new(u)
            .with_mutant(Some(m))
            .run(Claim::All, 7)
            .unwrap();
        let caught: Vec<&VerificationReport> = reports.iter().filter(|r| !r.passed()).collect();
        let serialized = caught.first().is_some_and(|r| {
            let line = r.to_json_line();
            let c = &r.counterexamples[0];
            line.contains("\"counterexamples\":[{")
                && (c.sequence.is_some() || !c.graphs.is_empty())
        });
        ok &= serialized;
        let claims: Vec<&str> = caught.iter().map(|r| r.claim.as_str()).collect();
        parts.push(format!("{m} -> [{}]", claims.join(" ")));
    }
    outcome(ok, parts.join("; "))
}

fn criterion_determinism(u: &Universe) -> Outcome {
    let run_with = |threads: usize| -> String {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            let v = Verifier::new(u);
            let mut lines: Vec<String> = v
                .run(Claim::All, 7)
                .unwrap()
                .iter()
                .map(|r| r.to_json_line())
                .collect();
            for m in Mutant::ALL {
                let bad = v.with_mutant(Some(m)).run(Claim::All, 7).unwrap();
                lines.extend(bad.iter().map(|r| r.to_json_line()));
            }
            lines.join("\n")
        })
    };
    let a = run_with(1);
    let b = run_with(4);
    outcome(
        a == b,
        format!("{} bytes of JSON lines, 1 vs 4 threads", a.len()),
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let u = Universe::generate(8).expect("universe on 8 vertices");
    println!(
        "universe: all graphs on <= 8 vertices, built in {:.2?}",
        start.elapsed()
    );
    let criteria: [Criterion; 10] = [
        (
            "excludes C4 <=> forcibly chordal or SPLIT∘C5 or SPLIT∘C6",
            criterion_square,
        ),
        (
            "excludes C5 <=> forcibly no hole >= 5 or SPLIT∘C6 or SPLIT∘C7",
            criterion_pentagon_general,
        ),
        (
            "split graphs: partition search = forbidden {M2,C4,C5} = degree equality",
            criterion_split,
        ),
        (
            "composition has induced Cn iff S or H does",
            criterion_composition,
        ),
        (
            "half-join structure around Ck when C(k-1) is excluded",
            criterion_half_join,
        ),
        ("gadget identities", criterion_gadgets),
        ("excludes M2 via complements", criterion_matching),
        (
            "graph level: no M2, no C4 <=> split or (S,A,B)∘C5",
            criterion_graph_level,
        ),
        (
            "every mutant caught by all claims at <= 7",
            criterion_mutants,
        ),
        (
            "reports identical across thread counts",
            criterion_determinism,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check(&u);
        failed += usize::from(!o.ok);
        println!(
            "criterion {:>2} {}: {name}: {}",
            i + 1,
            if o.ok { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "{} of {} criteria passed in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
