//! `flagbetti` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails
//! (a bound violation, a wrong golden value), 2 for usage, parse and
//! resource errors. Errors go to stderr as one JSON object.

use std::io::{BufReader, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use flagbetti::complexes::{dominance_complex, neighbourhood_complex, parse_facet_file, write_facet_file};
use flagbetti::constructions::{build, golden_corpus, table_rows, GoldenObject};
use flagbetti::graphs::{encode_graph6, parse_graph6};
use flagbetti::homology::betti_capped;
use flagbetti::invariants::{check_bounds, hochster_beta_capped, solve_constants};
use flagbetti::search::{
    conjecture_checks, maximize, read_checkpoint, stream_graph6, ClassFilter, SearchMetric, SearchOptions, Source,
};
use flagbetti::{Complex, Error, FieldSpec, Graph, Limits};

#[derive(Parser, Debug)]
#[command(name = "flagbetti", version, about = "Total Betti numbers of flag, independence and related complexes")]
struct Cli {
    /// Coefficient field: gf2, gf<p> or rational.
    #[arg(long, global = true, default_value = "gf2", env = "FLAGBETTI_FIELD")]
    field: FieldSpec,

    /// Maximum number of faces enumerated per complex.
    #[arg(long, global = true, env = "FLAGBETTI_FACE_CAP", value_parser = positive)]
    face_cap: Option<usize>,

    /// Maximum graph order for the Hochster sum.
    #[arg(long, global = true, env = "FLAGBETTI_HOCHSTER_CAP", value_parser = positive)]
    hochster_cap: Option<usize>,

    /// Largest order for internal generation of all graphs.
    #[arg(long, global = true, env = "FLAGBETTI_GENERATE_CAP", value_parser = positive)]
    generate_cap: Option<usize>,

    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0, env = "FLAGBETTI_WORKERS")]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Betti numbers of Ind(G) or of a complex.
    Betti {
        #[arg(long, conflicts_with = "facets", required_unless_present = "facets")]
        graph6: Option<String>,
        /// Facet file, or `-` for stdin.
        #[arg(long)]
        facets: Option<PathBuf>,
    },
    /// The Hochster sum of a graph.
    Beta {
        #[arg(long)]
        graph6: String,
    },
    /// All growth bounds for a graph.
    Bounds {
        #[arg(long)]
        graph6: String,
    },
    /// Alexander dual, as a facet file.
    Dual {
        #[arg(long)]
        facets: PathBuf,
    },
    /// Bip(K), as graph6.
    Bip {
        #[arg(long)]
        facets: PathBuf,
    },
    /// Neighbourhood complex, as a facet file.
    Neigh {
        #[arg(long)]
        graph6: String,
    },
    /// Dominance complex, as a facet file.
    Dom {
        #[arg(long)]
        graph6: String,
    },
    /// Build a named extremal construction.
    Build {
        name: String,
        params: Vec<usize>,
    },
    /// Recompute golden values and the bounds table.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Maximize a metric over generated or streamed graphs.
    Search {
        #[arg(long, default_value = "b")]
        metric: SearchMetric,
        #[arg(long, default_value = "all")]
        class: ClassFilter,
        #[arg(long, conflicts_with = "stdin", required_unless_present = "stdin")]
        n: Option<usize>,
        /// Read graph6 lines from stdin.
        #[arg(long)]
        stdin: bool,
        /// Abort on the first malformed line.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long)]
        resume: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Growth-rate constants with residuals.
    Constants {
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..=400))]
        dmax: u32,
    },
    /// Triangle-free maximizers and missing-face checks.
    Conjectures {
        #[arg(long)]
        n: usize,
        /// Extra complexes to check.
        #[arg(long)]
        facets: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Table1,
    Lemmas,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

/// What a command produced and whether its checks held.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn json(v: Value, ok: bool) -> Self {
        Outcome { text: serde_json::to_string_pretty(&v).expect("json values serialize") + "\n", ok }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            emit_error("usage", msg.lines().next().unwrap_or_default());
            return ExitCode::from(2);
        }
    };
    if cli.workers > 0 {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build_global();
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let kind = match &e {
                Error::Graph6 { .. } | Error::FacetFile { .. } | Error::AtLine { .. } => "parse",
                Error::CapExceeded { .. } => "cap",
                Error::ArithmeticOverflow => "overflow",
                Error::Io(_) => "io",
                Error::Domain(_) | Error::Unsupported(_) => "domain",
            };
            emit_error(kind, &e.to_string());
            ExitCode::from(2)
        }
    }
}

fn emit_error(kind: &str, message: &str) {
    eprintln!("{}", json!({ "error": kind, "message": message }));
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if let Some(v) = cli.face_cap {
        l.face_cap = v;
    }
    if let Some(v) = cli.hochster_cap {
        l.hochster_cap = v;
    }
    if let Some(v) = cli.generate_cap {
        l.generate_all_cap = v;
        l.generate_restricted_cap = l.generate_restricted_cap.max(v);
    }
    l
}

fn read_text(path: &Path) -> Result<String, Error> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

fn read_complex(path: &Path) -> Result<Complex, Error> {
    parse_facet_file(&read_text(path)?)
}

fn graph(g6: &str) -> Result<Graph, Error> {
    parse_graph6(g6.trim())
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let field = cli.field;
    let limits = limits(cli);
    match &cli.command {
        Command::Betti { graph6, facets } => {
            let k = match (graph6, facets) {
                (Some(g), _) => flagbetti::complexes::independence_complex(&graph(g)?),
                (None, Some(f)) => read_complex(f)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            Ok(Outcome::json(to_value(&betti_capped(&k, field, limits.face_cap)?), true))
        }
        Command::Beta { graph6 } => {
            let r = hochster_beta_capped(&graph(graph6)?, field, &limits)?;
            Ok(Outcome::json(to_value(&r), true))
        }
        Command::Bounds { graph6 } => {
            let r = check_bounds(&graph(graph6)?, field, &limits)?;
            let ok = !r.any_violation();
            Ok(Outcome::json(to_value(&r), ok))
        }
        Command::Dual { facets } => Ok(Outcome { text: write_facet_file(&read_complex(facets)?.alexander_dual()?), ok: true }),
        Command::Bip { facets } => {
            let g = read_complex(facets)?.bip_graph()?;
            Ok(Outcome { text: encode_graph6(&g)? + "\n", ok: true })
        }
        Command::Neigh { graph6 } => Ok(Outcome { text: write_facet_file(&neighbourhood_complex(&graph(graph6)?)), ok: true }),
        Command::Dom { graph6 } => {
            let k = dominance_complex(&graph(graph6)?, limits.dominance_cap)?;
            Ok(Outcome { text: write_facet_file(&k), ok: true })
        }
        Command::Build { name, params } => {
            let case = build(name, params)?;
            let format = match case.object {
                GoldenObject::Graph(_) => "graph6",
                GoldenObject::Complex(_) => "facets",
            };
            let v = json!({
                "format": format,
                "object": case.object.serialize_text()?,
                "record": to_value(&case.record()),
            });
            Ok(Outcome::json(v, true))
        }
        Command::Verify { suite } => verify(*suite, field, &limits),
        Command::Search { metric, class, n, stdin, strict, checkpoint, resume, format, timing } => {
            let opts = SearchOptions {
                field,
                limits: limits.clone(),
                strict: *strict,
                checkpoint_path: checkpoint.clone(),
                resume: resume.as_deref().map(read_checkpoint).transpose()?,
                ..SearchOptions::default()
            };
            let start = Instant::now();
            let source = match (n, stdin) {
                (Some(n), false) => Source::Generated(*n),
                _ => Source::Stream(Box::new(stream_graph6(BufReader::new(std::io::stdin())))),
            };
            let mut report = maximize(*metric, *class, source, &opts)?;
            if *timing {
                report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
            }
            let ok = report.all_within_bound;
            Ok(match format {
                Format::Json => Outcome::json(to_value(&report), ok),
                Format::Tsv => Outcome { text: report.to_tsv(), ok },
            })
        }
        Command::Constants { dmax } => {
            let c = solve_constants(*dmax);
            let ok = c.maximality.theta_4_is_max && c.maximality.gamma_3_is_max;
            Ok(Outcome::json(to_value(&c), ok))
        }
        Command::Conjectures { n, facets } => {
            let mut complexes = Vec::new();
            for (n, d) in [(5, 2), (7, 3)] {
                if let GoldenObject::Complex(k) = flagbetti::constructions::missing_face_complex(n, d)?.object {
                    complexes.push((format!("missing_face_complex(n={n},d={d})"), k));
                }
            }
            for f in facets {
                complexes.push((f.display().to_string(), read_complex(f)?));
            }
            let opts = SearchOptions { field, limits: limits.clone(), ..SearchOptions::default() };
            let r = conjecture_checks(*n, &complexes, &opts)?;
            let ok = !r.theorem_violation;
            Ok(Outcome::json(to_value(&r), ok))
        }
    }
}

fn verify(suite: Suite, field: FieldSpec, limits: &Limits) -> Result<Outcome, Error> {
    let mut out = serde_json::Map::new();
    let mut ok = true;
    if matches!(suite, Suite::Table1 | Suite::All) {
        let rows = table_rows(field, limits)?;
        let pass = rows.iter().all(|r| r.pass());
        ok &= pass;
        out.insert("table1".into(), json!({ "rows": to_value(&rows), "pass": pass }));
    }
    if matches!(suite, Suite::Lemmas | Suite::All) {
        let mut outcomes = Vec::new();
        for case in golden_corpus() {
            outcomes.extend(case.verify(field, limits)?);
        }
        let pass = outcomes.iter().all(|o| o.pass);
        ok &= pass;
        out.insert("lemmas".into(), json!({ "cases": to_value(&outcomes), "pass": pass }));
    }
    out.insert("pass".into(), Value::Bool(ok));
    Ok(Outcome::json(Value::Object(out), ok))
}
