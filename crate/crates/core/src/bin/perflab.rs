use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use perflab::classes::{classify, classify_all, Classification};
use perflab::enumeration::{census_csv, enumerate, EnumSpec, Filter, Source};
use perflab::format::{parse_edge_list, parse_graph6, write_graph6, Graph6Lines};
use perflab::verifier::{
    run_suite_with, search_extremal, ExtremalQuery, RunOptions, SuiteId, SuiteSpec,
};
use perflab::{Certificate, Class, ClassVerdict, Error, Graph, VertexSet};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_SIZE: u8 = 3;
const EXIT_ARGUMENT: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

#[derive(Parser)]
#[command(
    name = "perflab",
    version,
    about = "Perfect graphs and their generalizations: checking, enumeration and exhaustive verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide class membership for one or more graphs, with certificates.
    Check {
        /// Input file (graph6 lines, or an edge list with --format edgelist).
        #[arg(conflicts_with = "graph6", required_unless_present = "graph6")]
        file: Option<PathBuf>,
        /// Inline graph6 string.
        #[arg(long)]
        graph6: Option<String>,
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
        /// "all", or a comma-separated list such as "perfect,nice".
        #[arg(long, default_value = "all")]
        classes: String,
        #[arg(long, value_enum, default_value_t = Output::Human)]
        output: Output,
    },
    /// Run an exhaustive verification suite and print its JSON report.
    Verify {
        suite: String,
        #[arg(long)]
        n_max: Option<usize>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Read the universe from a graph6 file instead of enumerating.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stream non-isomorphic graphs as graph6, or print a census.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        filter: String,
        /// Filter an existing graph6 file instead of generating.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Print counts for every order up to n as CSV.
        #[arg(long)]
        census: bool,
    },
    /// Find minimal obstructions, e.g. "minimal-imperfect" or
    /// "minimal-non-nice-triangle-free".
    Search {
        predicate: String,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Output::Human)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_ARGUMENT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("perflab: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::InvalidEdge { .. } | Error::SelfLoop(_) => EXIT_PARSE,
        Error::SizeLimit { .. } | Error::TooManyVertices { .. } => EXIT_SIZE,
        Error::InvalidArgument(_) | Error::Io(_) => EXIT_ARGUMENT,
        Error::Internal(_) => EXIT_INTERNAL,
    }
}

fn run(cli: Cli) -> perflab::Result<u8> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match cli.command {
        Command::Check {
            file,
            graph6,
            format,
            classes,
            output,
        } => {
            let classes = parse_classes(&classes)?;
            let graphs = read_input(file, graph6, format)?;
            for g in &graphs {
                let report = if classes.len() == Class::ALL.len() {
                    classify_all(g)?
                } else {
                    Classification {
                        graph6: write_graph6(g),
                        n: g.order(),
                        triangle_free: g.is_triangle_free(),
                        bipartite: g.is_bipartite().is_some(),
                        verdicts: classify(g, &classes)?,
                    }
                };
                match output {
                    Output::Json => writeln!(out, "{}", to_json(&report)?)?,
                    Output::Human => render_check(&mut out, g, &report)?,
                }
            }
            0
        }
        Command::Verify {
            suite,
            n_max,
            threads,
            file,
            out: path,
        } => {
            let suite: SuiteId = suite.parse()?;
            if threads == Some(0) {
                return Err(Error::InvalidArgument(
                    "--threads must be at least 1".into(),
                ));
            }
            let spec = SuiteSpec {
                suite,
                n_max: n_max.unwrap_or(suite.default_n_max()),
                source: file.map(Source::File),
            };
            let result = run_suite_with(
                &spec,
                &RunOptions {
                    threads,
                    keep_verdicts: false,
                },
            )?;
            let json = serde_json::to_string_pretty(&result)
                .map_err(|e| Error::Internal(e.to_string()))?;
            match path {
                Some(p) => std::fs::write(p, json + "\n")?,
                None => writeln!(out, "{json}")?,
            }
            if result.passed() {
                0
            } else {
                EXIT_COUNTEREXAMPLE
            }
        }
        Command::Enumerate {
            n,
            filter,
            file,
            census,
        } => {
            let filter: Filter = filter.parse()?;
            if census {
                if file.is_some() {
                    return Err(Error::InvalidArgument(
                        "--census works on the built-in enumeration only".into(),
                    ));
                }
                write!(out, "{}", census_csv(n, &[filter])?)?;
            } else {
                let spec = EnumSpec {
                    n,
                    filter,
                    source: file.map(Source::File).unwrap_or(Source::Builtin),
                };
                for g in enumerate(&spec)? {
                    writeln!(out, "{}", write_graph6(&g?))?;
                }
            }
            0
        }
        Command::Search {
            predicate,
            n_max,
            output,
        } => {
            let query: ExtremalQuery = predicate.parse()?;
            let found: Vec<String> = search_extremal(query, n_max)?
                .iter()
                .map(write_graph6)
                .collect();
            match output {
                Output::Json => {
                    let doc = serde_json::json!({
                        "predicate": predicate,
                        "n_max": n_max,
                        "graphs": found,
                    });
                    writeln!(out, "{doc}")?
                }
                Output::Human => {
                    for g6 in found {
                        writeln!(out, "{g6}")?;
                    }
                }
            }
            0
        }
    };
    out.flush()?;
    Ok(code)
}

fn parse_classes(spec: &str) -> perflab::Result<Vec<Class>> {
    if spec.trim().eq_ignore_ascii_case("all") {
        return Ok(Class::ALL.to_vec());
    }
    let mut classes: Vec<Class> = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let c: Class = part.parse()?;
        if !classes.contains(&c) {
            classes.push(c);
        }
    }
    if classes.is_empty() {
        return Err(Error::InvalidArgument("no classes requested".into()));
    }
    Ok(classes)
}

fn read_input(
    file: Option<PathBuf>,
    graph6: Option<String>,
    format: InputFormat,
) -> perflab::Result<Vec<Graph>> {
    if let Some(s) = graph6 {
        return Ok(vec![parse_graph6(s.trim())?]);
    }
    let path = file.ok_or_else(|| Error::InvalidArgument("no input given".into()))?;
    match format {
        InputFormat::Edgelist => Ok(vec![parse_edge_list(&std::fs::read_to_string(path)?)?]),
        InputFormat::Graph6 => {
            let graphs = Graph6Lines::new(BufReader::new(File::open(path)?))
                .collect::<perflab::Result<Vec<_>>>()?;
            if graphs.is_empty() {
                return Err(Error::Parse {
                    line: None,
                    message: "input contains no graphs".into(),
                });
            }
            Ok(graphs)
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> perflab::Result<String> {
    serde_json::to_string(value).map_err(|e| Error::Internal(e.to_string()))
}

fn render_check(out: &mut impl Write, g: &Graph, report: &Classification) -> io::Result<()> {
    writeln!(
        out,
        "graph {} ({} vertices, {} edges{}{})",
        report.graph6,
        g.order(),
        g.edge_count(),
        if report.triangle_free {
            ", triangle-free"
        } else {
            ""
        },
        if report.bipartite { ", bipartite" } else { "" },
    )?;
    for v in &report.verdicts {
        writeln!(
            out,
            "  {:<20} {:<4} {}",
            v.class.name(),
            if v.holds { "yes" } else { "no" },
            describe(v)
        )?;
    }
    Ok(())
}

fn list(s: VertexSet) -> String {
    format!("{{{}}}", join(&s.to_vec()))
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn describe(v: &ClassVerdict) -> String {
    match &v.certificate {
        Certificate::Coloring(colors) => {
            let k = colors.iter().max().map_or(0, |c| c + 1);
            let classes: Vec<String> = (0..k)
                .map(|c| {
                    let members: Vec<usize> =
                        (0..colors.len()).filter(|&u| colors[u] == c).collect();
                    format!("{{{}}}", join(&members))
                })
                .collect();
            format!("coloring {}", classes.join(" "))
        }
        Certificate::Bipartition { a, b } => format!("bipartition {} {}", list(*a), list(*b)),
        Certificate::Partition2 { a, b } => format!("partition {} {}", list(*a), list(*b)),
        Certificate::StableSet(s) => format!("stable set {}", list(*s)),
        Certificate::OddHole(c) => format!("odd hole [{}]", join(c)),
        Certificate::OddAntihole(c) => format!("odd antihole [{}]", join(c)),
        Certificate::CliqueWitness(s) => format!("clique {}", list(*s)),
        Certificate::Obstruction {
            vertices,
            chi,
            omega,
        } => match chi {
            Some(chi) => format!("fails on {} (chi {chi}, omega {omega})", list(*vertices)),
            None => format!("fails on {} (omega {omega})", list(*vertices)),
        },
        Certificate::NoOddHoleOrAntihole => "no odd hole or odd antihole".into(),
        Certificate::NotColorable { k } => format!("not {k}-colorable"),
        Certificate::Exhausted => "search exhausted".into(),
        Certificate::Vacuous => "vacuous".into(),
    }
}
