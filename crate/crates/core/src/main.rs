use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bouquet::genuspoly::{partial_dual_euler_polynomial_with, partial_dual_orientable_polynomial_with};
use bouquet::intersection::{classify_one_term, interlace_sequences, predict_constant_term, signed_intersection_graph};
use bouquet::ipoly::intersection_polynomial_with;
use bouquet::mutation::mutation_orbit;
use bouquet::surface::surface_summary;
use bouquet::toolkit::census::{census_records, write_csv, write_jsonl};
use bouquet::toolkit::enumerate::{all_bouquets_with, Dedup};
use bouquet::toolkit::verify::{verify_with, Theorem, VerifyOptions};
use bouquet::{Bouquet, Error, Limits, SignedGraph};

#[derive(Parser)]
#[command(name = "bouquet", version, about = "Partial-dual genus polynomials of bouquets")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Largest bouquet for the 2^n subset enumeration.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT.max_edges)]
    max_edges: usize,
    /// Largest signed graph for the realization search.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT.max_realize)]
    max_realize: usize,
    /// Largest mutation orbit explored.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT.orbit_cap)]
    orbit_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    /// Graphviz, `igraph` only.
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    #[value(name = "main1")]
    Main1,
    #[value(name = "mutantEquiv")]
    MutantEquiv,
    #[value(name = "constantTerm")]
    ConstantTerm,
    #[value(name = "oneTerm")]
    OneTerm,
    #[value(name = "btForm")]
    BtForm,
    #[value(name = "joinLaw")]
    JoinLaw,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Main1 => Theorem::Main1,
            TheoremArg::MutantEquiv => Theorem::MutantEquiv,
            TheoremArg::ConstantTerm => Theorem::ConstantTerm,
            TheoremArg::OneTerm => Theorem::OneTerm,
            TheoremArg::BtForm => Theorem::BtForm,
            TheoremArg::JoinLaw => Theorem::JoinLaw,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Partial-dual genus polynomial of a signed rotation.
    Poly {
        rotation: String,
        /// Orientable genus instead of Euler genus.
        #[arg(long)]
        orientable: bool,
    },
    /// Signed intersection graph of a signed rotation.
    Igraph { rotation: String },
    /// Surface data, interlace sequences and structural flags.
    Classify { rotation: String },
    /// Intersection polynomial of a signed graph given as JSON (`-` for stdin).
    Ip { graph: PathBuf },
    /// Mutation orbit of a signed rotation, labels kept.
    Mutants { rotation: String },
    /// All bouquets with n edges.
    Enumerate {
        #[arg(short)]
        n: usize,
        /// Keep labels 1..n fixed instead of identifying relabelings.
        #[arg(long, conflicts_with = "raw")]
        fixed_labels: bool,
        /// Every chord diagram and twist pattern, no deduplication.
        #[arg(long)]
        raw: bool,
        /// Largest n accepted.
        #[arg(long, default_value_t = Limits::DEFAULT.max_enumerate)]
        max_n: usize,
    },
    /// Catalog of all bouquets with n edges, up to equivalence.
    Census {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        output: PathBuf,
        #[arg(long, default_value_t = Limits::DEFAULT.max_enumerate)]
        max_n: usize,
    },
    /// Exhaustive check of one theorem; exits 1 on a counterexample.
    Verify {
        #[arg(value_enum)]
        theorem: TheoremArg,
        #[arg(short)]
        n: usize,
        /// Raise the per-theorem size cap.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
    },
}

enum Outcome {
    Ok,
    Counterexample,
}

fn parse_bouquet(text: &str) -> Result<Bouquet, Error> {
    Ok(text.parse::<Bouquet>()?)
}

fn write_json<W: Write, T: serde::Serialize + ?Sized>(out: &mut W, value: &T) -> Result<(), Error> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let limits = Limits {
        max_edges: cli.max_edges,
        max_realize: cli.max_realize,
        orbit_cap: cli.orbit_cap,
        ..Limits::DEFAULT
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let format = cli.format;
    if format == Format::Dot && !matches!(cli.command, Command::Igraph { .. }) {
        return Err(Error::InvalidArgument("--format dot applies to igraph only".into()));
    }
    match cli.command {
        Command::Poly { rotation, orientable } => {
            let b = parse_bouquet(&rotation)?;
            let p = if orientable {
                partial_dual_orientable_polynomial_with(&b, &limits)?
            } else {
                partial_dual_euler_polynomial_with(&b, &limits)?
            };
            match format {
                Format::Json => write_json(&mut out, &p)?,
                Format::Csv => {
                    writeln!(out, "word,polynomial")?;
                    writeln!(out, "\"{b}\",{p}")?;
                }
                _ => writeln!(out, "{p}")?,
            }
        }
        Command::Igraph { rotation } => {
            let sg = signed_intersection_graph(&parse_bouquet(&rotation)?);
            match format {
                Format::Json => write_json(&mut out, &sg)?,
                Format::Dot => write!(out, "{}", sg.to_dot())?,
                Format::Csv => {
                    writeln!(out, "u,v")?;
                    for (u, v) in sg.edge_list() {
                        writeln!(out, "{u},{v}")?;
                    }
                }
                Format::Text => {
                    let vs: Vec<String> = sg.vertices().map(|(l, s)| format!("{l}{}", s.as_char())).collect();
                    writeln!(out, "vertices: {}", vs.join(" "))?;
                    let es: Vec<String> = sg.edge_list().into_iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    writeln!(out, "edges: {}", es.join(" "))?;
                }
            }
        }
        Command::Classify { rotation } => {
            let b = parse_bouquet(&rotation)?;
            let surface = surface_summary(&b);
            let sg = signed_intersection_graph(&b);
            let seq = interlace_sequences(&b);
            let one = classify_one_term(&sg);
            let prime = !b.is_empty() && sg.is_connected();
            match format {
                Format::Json | Format::Csv => write_json(
                    &mut out,
                    &json!({
                        "word": b.to_string(),
                        "surface": surface,
                        "sequences": seq,
                        "positive": sg.is_positive(),
                        "bipartite": sg.is_bipartite(),
                        "prime": prime,
                        "constant_term": predict_constant_term(&sg),
                        "one_term": one,
                    }),
                )?,
                _ => {
                    writeln!(out, "word: {b}")?;
                    writeln!(
                        out,
                        "edges: {}  boundary components: {}  euler genus: {}  orientable: {}",
                        surface.edge_count, surface.boundary_count, surface.euler_genus, surface.orientable
                    )?;
                    writeln!(out, "signed interlace sequence: {:?}", seq.signed)?;
                    writeln!(out, "cyclic interlace sequence: {:?}", seq.cyclic)?;
                    writeln!(
                        out,
                        "positive: {}  bipartite: {}  prime: {}",
                        sg.is_positive(),
                        sg.is_bipartite(),
                        prime
                    )?;
                    writeln!(out, "nonzero constant term: {}", predict_constant_term(&sg))?;
                    if one.is_one_term {
                        writeln!(out, "one-term: yes (k = {}, k2 = {}, b = {})", one.k, one.k2, one.b)?;
                    } else {
                        writeln!(out, "one-term: no")?;
                    }
                }
            }
        }
        Command::Ip { graph } => {
            let text = if graph.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                fs::read_to_string(&graph)?
            };
            let sg: SignedGraph = serde_json::from_str(&text)?;
            let p = intersection_polynomial_with(&sg, &limits)?;
            match format {
                Format::Json => write_json(&mut out, &p)?,
                _ => writeln!(out, "{p}")?,
            }
        }
        Command::Mutants { rotation } => {
            let b = parse_bouquet(&rotation)?;
            let orbit = mutation_orbit(&b, limits.orbit_cap).map_err(|(e, _)| e)?;
            match format {
                Format::Json => write_json(&mut out, &orbit)?,
                _ => {
                    for w in orbit {
                        writeln!(out, "{w}")?;
                    }
                }
            }
        }
        Command::Enumerate { n, fixed_labels, raw, max_n } => {
            let dedup = if raw {
                Dedup::Raw
            } else if fixed_labels {
                Dedup::FixedLabels
            } else {
                Dedup::Relabeled
            };
            let limits = Limits {
                max_enumerate: max_n,
                ..limits
            };
            let words = all_bouquets_with(n, dedup, &limits)?;
            match format {
                Format::Json => {
                    for w in words {
                        write_json(&mut out, &w)?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "word")?;
                    for w in words {
                        writeln!(out, "\"{w}\"")?;
                    }
                }
                _ => {
                    for w in words {
                        writeln!(out, "{w}")?;
                    }
                }
            }
        }
        Command::Census { n, output, max_n } => {
            let limits = Limits {
                max_enumerate: max_n,
                ..limits
            };
            let records = census_records(n, &limits)?;
            let file = BufWriter::new(fs::File::create(&output)?);
            match format {
                Format::Csv => write_csv(&records, file)?,
                _ => write_jsonl(&records, file)?,
            }
            writeln!(out, "{}", records.len())?;
        }
        Command::Verify { theorem, n, cap, seed } => {
            let opts = VerifyOptions {
                limits,
                cap,
                seed,
                ..VerifyOptions::default()
            };
            let report = verify_with(theorem.into(), n, &opts)?;
            match format {
                Format::Json | Format::Csv => write_json(&mut out, &report)?,
                _ => {
                    let status = if report.passed() { "PASS" } else { "FAIL" };
                    writeln!(
                        out,
                        "{status} {} n={} instances={} counterexamples={} elapsed={}ms",
                        report.theorem,
                        report.n,
                        report.instances,
                        report.counterexamples.len(),
                        report.elapsed_ms
                    )?;
                    for c in &report.counterexamples {
                        writeln!(out, "  {}: expected {}, got {}", c.words.join(" / "), c.expected, c.actual)?;
                    }
                }
            }
            out.flush()?;
            if !report.passed() {
                return Ok(Outcome::Counterexample);
            }
        }
    }
    out.flush()?;
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Counterexample) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
