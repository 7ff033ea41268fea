//! `degexclude`: command-line front end.
//!
//! Exit status: 0 on success, 1 when `verify` finds a counterexample, 2 on
//! usage errors and invalid input.

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use degexclude::classify::{classify, ExclusionTarget};
use degexclude::graph6;
use degexclude::preorder::precedes_witness;
use degexclude::realize::enumerate_realizations;
use degexclude::split::{parse_indices, CompositionSpec};
use degexclude::verify::poset::build_exclusion_poset;
use degexclude::verify::{Claim, Mutant, Universe, Verifier};
use degexclude::{DegreeSequence, Graph, GraphFamily};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "degexclude",
    version,
    about = "Degree sequences that exclude cycles"
)]
struct Cli {
    /// Emit one JSON record per result instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a sequence is graphical.
    Check { sequence: DegreeSequence },
    /// Print one realization (graph6).
    Realize { sequence: DegreeSequence },
    /// Print every realization up to isomorphism (graph6, sorted).
    Realizations { sequence: DegreeSequence },
    /// Decide whether SMALLER ⪯ LARGER and print a witness.
    Precedes {
        smaller: DegreeSequence,
        larger: DegreeSequence,
    },
    /// Classify a sequence by what it excludes.
    Classify {
        /// C4, M2, Cn:<n>, C4C5 or M2C4
        #[arg(long)]
        exclude: ExclusionTarget,
        sequence: DegreeSequence,
    },
    /// Build (S, A, B) ∘ C_k.
    Compose {
        /// the split graph S, graph6
        #[arg(long)]
        split: String,
        /// indices of the clique side A, comma-separated
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        cycle: usize,
    },
    /// Degree sequence of a graph6 graph.
    Degrees { graph6: String },
    /// Replay a claim over every graph and graphical sequence up to a bound.
    Verify {
        /// prop1, lemma3, lemma4, thm-n:<n>, thm6, cor7, cor8, prop9, gadgets or all
        #[arg(long)]
        claim: Claim,
        #[arg(long, default_value_t = 7)]
        max_vertices: usize,
        /// compose-wrong-side, drop-n-plus-2, skip-hypothesis or broken-split-test
        #[arg(long)]
        mutant: Option<Mutant>,
        /// read the graph universe from a graph6 file instead of generating it
        #[arg(long)]
        graphs_from: Option<PathBuf>,
        /// allow classification sweeps at 9 vertices
        #[arg(long)]
        long: bool,
        /// counterexamples listed per claim in text output
        #[arg(long, default_value_t = 20)]
        list: usize,
    },
    /// Hasse diagram of ⪯ on all graphical sequences up to a length.
    Poset {
        #[arg(long)]
        max_vertices: usize,
        /// write DOT here ("-" for stdout)
        #[arg(long)]
        dot: Option<PathBuf>,
        /// write the covering pairs as CSV here
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write every graph up to a vertex count as graph6 lines.
    Universe {
        #[arg(long)]
        max_vertices: usize,
        /// output file (default stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type Res<T> = Result<T, Box<dyn std::error::Error>>;

fn run(cli: &Cli, out: &mut impl Write) -> Res<u8> {
    let json = cli.json;
    match &cli.command {
        Command::Check { sequence } => {
            let ok = sequence.is_graphical();
            if json {
                writeln!(out, "{}", json!({"sequence": sequence, "graphical": ok}))?;
            } else {
                writeln!(out, "{}", if ok { "graphical" } else { "not graphical" })?;
            }
        }
        Command::Realize { sequence } => {
            let g = sequence.realize_one()?;
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({"sequence": sequence, "graph6": g.to_graph6()})
                )?;
            } else {
                writeln!(out, "{g}")?;
            }
        }
        Command::Realizations { sequence } => {
            let all = enumerate_realizations(sequence)?;
            if json {
                let g6: Vec<String> = all.iter().map(Graph::to_graph6).collect();
                writeln!(
                    out,
                    "{}",
                    json!({"sequence": sequence, "count": all.len(), "graph6": g6})
                )?;
            } else {
                for g in &all {
                    writeln!(out, "{g}")?;
                }
                writeln!(out, "# {} realization(s)", all.len())?;
            }
        }
        Command::Precedes { smaller, larger } => {
            let w = precedes_witness(smaller, larger)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({"smaller": smaller, "larger": larger, "precedes": w.is_some(), "witness": w})
                )?;
            } else {
                writeln!(out, "{}", w.is_some())?;
                if let Some(w) = w {
                    writeln!(
                        out,
                        "witness: {} induced in {} at vertices {:?}",
                        w.smaller, w.larger, w.embedding
                    )?;
                }
            }
        }
        Command::Classify { exclude, sequence } => {
            let c = classify(sequence, *exclude)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&c)?)?;
            } else {
                for line in c.report_lines() {
                    writeln!(out, "{line}")?;
                }
            }
        }
        Command::Compose { split, a, cycle } => {
            let s = Graph::from_graph6(split)?;
            let a = parse_indices(a)?;
            if *cycle < 3 {
                return Err(degexclude::Error::CycleLength {
                    min: 3,
                    got: *cycle,
                }
                .into());
            }
            let spec = CompositionSpec::new(s, a, GraphFamily::Cycle(*cycle).construct()?)?;
            let g = spec.compose();
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({"spec": spec, "graph6": g.to_graph6(), "sequence": g.degree_sequence()})
                )?;
            } else {
                writeln!(out, "{g}")?;
                writeln!(out, "degrees: ({})", g.degree_sequence())?;
            }
        }
        Command::Degrees { graph6 } => {
            let g = Graph::from_graph6(graph6)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({"graph6": g.to_graph6(), "sequence": g.degree_sequence()})
                )?;
            } else {
                writeln!(out, "{}", g.degree_sequence())?;
            }
        }
        Command::Verify {
            claim,
            max_vertices,
            mutant,
            graphs_from,
            long,
            list,
        } => {
            let universe = match graphs_from {
                Some(path) => {
                    let file =
                        fs::File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
                    let graphs = graph6::read_lines(BufReader::new(file))?;
                    Universe::from_graphs(*max_vertices, &graphs, &path.display().to_string())?
                }
                None => Universe::generate(*max_vertices)?,
            };
            let verifier = Verifier::new(&universe)
                .with_mutant(*mutant)
                .allow_long(*long);
            let reports = verifier.run(*claim, *max_vertices)?;
            let mut failed = false;
            for r in &reports {
                failed |= !r.passed();
                eprintln!("{}: {:.2?}", r.claim, r.elapsed);
                if json {
                    writeln!(out, "{}", r.to_json_line())?;
                } else {
                    for line in r.text_lines(*list) {
                        writeln!(out, "{line}")?;
                    }
                }
            }
            return Ok(u8::from(failed));
        }
        Command::Poset {
            max_vertices,
            dot,
            csv,
        } => {
            let universe = Universe::generate(*max_vertices)?;
            let poset = build_exclusion_poset(&universe, *max_vertices)?;
            let summary = json!({
                "max_vertices": max_vertices,
                "nodes": poset.nodes().len(),
                "related_pairs": poset.relation_size(),
                "covers": poset.covers().len(),
            });
            if let Some(path) = dot {
                write_or_stdout(path, &poset.to_dot(), out)?;
            }
            if let Some(path) = csv {
                write_or_stdout(path, &poset.to_csv(), out)?;
            }
            if json {
                writeln!(out, "{summary}")?;
            } else {
                writeln!(
                    out,
                    "{} sequences, {} related pairs, {} covering pairs",
                    summary["nodes"], summary["related_pairs"], summary["covers"]
                )?;
            }
        }
        Command::Universe {
            max_vertices,
            out: path,
        } => {
            let universe = Universe::generate(*max_vertices)?;
            let graphs: Vec<Graph> = universe.graphs_up_to(*max_vertices).copied().collect();
            match path {
                Some(p) => {
                    let mut f = io::BufWriter::new(fs::File::create(p)?);
                    graph6::write_lines(&mut f, &graphs)?;
                    f.flush()?;
                }
                None => graph6::write_lines(&mut *out, &graphs)?,
            }
        }
    }
    Ok(0)
}

fn write_or_stdout(path: &PathBuf, text: &str, out: &mut impl Write) -> Res<()> {
    if path.as_os_str() == "-" {
        out.write_all(text.as_bytes())?;
    } else {
        fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}
