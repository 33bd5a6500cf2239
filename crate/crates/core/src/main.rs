use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use collage::diagram::{normalize, SlicedDiagram};
use collage::oracle;
use collage::presentations::{elaborate_collage, present, Presented};
use collage::render::{render, Format};
use collage::rewrite::{bounded_eq, trace_to_json, SearchConfig, Verdict, Witness, DEFAULT_DEPTH};
use collage::semantics::{evaluate, interpretations_of, model_witness, EvalError, Interpretation};
use collage::sig::{parse_document, validate_signature, Document, Signature, Theory};

const OK: u8 = 0;
const FAILURE: u8 = 1;
const USAGE: u8 = 2;
const UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "collage", version, about = "String diagrams for bimodular categories, functor boxes and internal diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse, validate and typecheck every declaration.
    Check { files: Vec<PathBuf> },
    /// Print the exchange normal form of a diagram as JSON.
    Normalize {
        file: PathBuf,
        diagram: String,
        #[arg(long)]
        theory: Option<String>,
    },
    /// Search for a rewrite proof that two diagrams are equal.
    Eq {
        file: PathBuf,
        lhs: String,
        rhs: String,
        #[arg(long)]
        theory: Option<String>,
        /// Rewrite steps explored (default 32, or COLLAGE_DEPTH).
        #[arg(long)]
        depth: Option<usize>,
        /// Exchange moves explored when matching a rule.
        #[arg(long, default_value_t = collage::rewrite::DEFAULT_SEARCH_BOUND)]
        search_bound: usize,
        /// Where the trace goes when the diagrams are equal.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Evaluate a diagram in the file's interpretations.
    Eval {
        file: PathBuf,
        diagram: String,
        #[arg(long)]
        theory: Option<String>,
        #[arg(long)]
        interpretation: Option<String>,
        /// Only interpretations into this model.
        #[arg(long)]
        model: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Draw a diagram.
    Render {
        file: PathBuf,
        diagram: String,
        #[arg(long)]
        theory: Option<String>,
        #[arg(long, value_enum, default_value_t = RenderFormat::Svg)]
        format: RenderFormat,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run a brute-force oracle against the fast path.
    Oracle {
        #[command(subcommand)]
        task: OracleTask,
    },
    /// List the example corpus.
    Examples {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OracleTask {
    /// Normal forms against exchange-move reachability.
    ExchangeBfs {
        #[arg(long, default_value_t = 4)]
        max_layers: usize,
    },
    /// Union-find coend classes against the relation closure.
    CoendClosure {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Hom-set enumeration against all written diagrams.
    HomCount {
        #[arg(long, default_value_t = 3)]
        max_layers: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Svg,
    Dot,
    Tikz,
}

struct Fail(u8, String);

impl Fail {
    fn usage(msg: impl ToString) -> Self {
        Fail(USAGE, msg.to_string())
    }
}

type Run = Result<u8, Fail>;

fn load(path: &Path) -> Result<Document, Fail> {
    let src = std::fs::read_to_string(path).map_err(|e| Fail::usage(format!("{}: {e}", path.display())))?;
    parse_document(&src).map_err(|e| Fail::usage(format!("{}:{e}", path.display())))
}

fn find_theory<'a>(doc: &'a Document, diagram: &str, theory: Option<&str>) -> Result<&'a Theory, Fail> {
    let t = match theory {
        Some(name) => doc.theory(name).ok_or_else(|| Fail::usage(format!("no theory `{name}`")))?,
        None => doc
            .find_diagram(diagram)
            .map(|(t, _)| t)
            .ok_or_else(|| Fail::usage(format!("no diagram `{diagram}`")))?,
    };
    if t.diagram(diagram).is_none() {
        return Err(Fail::usage(format!("no diagram `{diagram}` in `{}`", t.name)));
    }
    Ok(t)
}

fn presented(t: &Theory) -> Result<Presented, Fail> {
    present(t).map_err(|e| Fail::usage(format!("{}: {e}", t.name)))
}

/// Elaborates a named diagram; bimodular theories are typechecked around
/// their central wires as well.
fn diagram(t: &Theory, pres: &Presented, name: &str) -> Result<SlicedDiagram, String> {
    let expr = t.diagram(name).ok_or_else(|| format!("no diagram `{name}`"))?;
    match &t.signature {
        Signature::Bimodular(g) => elaborate_collage(g, expr, &t.diagrams)
            .map(|(d, _)| d)
            .map_err(|e| format!("{name}: {e}")),
        _ => pres.elaborate(t, expr).map_err(|e| format!("{name}: {e}")),
    }
}

fn check_document(doc: &Document) -> Vec<String> {
    let mut out = Vec::new();
    for t in &doc.theories {
        out.extend(validate_signature(&t.signature).iter().map(|d| format!("{}: {d}", t.name)));
        let pres = match present(t) {
            Ok(p) => p,
            Err(e) => {
                out.push(format!("{}: {e}", t.name));
                continue;
            }
        };
        for nd in &t.diagrams {
            if let Err(e) = diagram(t, &pres, &nd.name) {
                out.push(format!("{}: {e}", t.name));
            }
        }
    }
    for decl in &doc.interpretations {
        let i = match Interpretation::from_decl(doc, decl) {
            Ok(i) => i,
            Err(e) => {
                out.push(format!("{}: {e}", decl.name));
                continue;
            }
        };
        let t = doc.theory(&decl.theory).expect("resolved by from_decl");
        let gaps = i.missing(t);
        if !gaps.is_empty() {
            out.push(format!("{}: no interpretation for {}", decl.name, gaps.join(", ")));
            continue;
        }
        out.extend(i.check_boundaries(t).iter().map(|e| format!("{}: {e}", decl.name)));
        let Ok(pres) = present(t) else { continue };
        for eq in &t.equations.equations {
            let sides = pres.elaborate(t, &eq.lhs).and_then(|l| Ok((l, pres.elaborate(t, &eq.rhs)?)));
            let Ok((l, r)) = sides else { continue };
            match (evaluate(t, &i, &l), evaluate(t, &i, &r)) {
                (Ok(a), Ok(b)) if a != b => out.push(format!(
                    "{}: equation `{}` fails: {} but {}",
                    decl.name,
                    eq.name,
                    a.describe(&i),
                    b.describe(&i)
                )),
                (Err(e), _) | (_, Err(e)) => out.push(format!("{}: equation `{}`: {e}", decl.name, eq.name)),
                _ => {}
            }
        }
    }
    out
}

fn run_check(files: &[PathBuf]) -> Run {
    if files.is_empty() {
        return Err(Fail::usage("no input files"));
    }
    let results: Vec<Result<Vec<String>, Fail>> = std::thread::scope(|s| {
        let hs: Vec<_> = files
            .iter()
            .map(|f| s.spawn(move || load(f).map(|d| check_document(&d))))
            .collect();
        hs.into_iter().map(|h| h.join().expect("check does not panic")).collect()
    });
    let mut code = OK;
    for (f, r) in files.iter().zip(results) {
        match r {
            Ok(diags) if diags.is_empty() => println!("{}: ok", f.display()),
            Ok(diags) => {
                for d in diags {
                    println!("{}: {d}", f.display());
                }
                code = code.max(FAILURE);
            }
            Err(Fail(c, msg)) => {
                eprintln!("{msg}");
                code = code.max(c);
            }
        }
    }
    Ok(code)
}

fn run_normalize(file: &Path, name: &str, theory: Option<&str>) -> Run {
    let doc = load(file)?;
    let t = find_theory(&doc, name, theory)?;
    let pres = presented(t)?;
    let d = diagram(t, &pres, name).map_err(|e| Fail(FAILURE, e))?;
    println!("{}", normalize(&pres.graph, &d).to_json());
    Ok(OK)
}

fn default_depth() -> Result<usize, Fail> {
    match std::env::var("COLLAGE_DEPTH") {
        Ok(v) => v
            .parse()
            .map_err(|_| Fail::usage(format!("COLLAGE_DEPTH must be a number, not `{v}`"))),
        Err(_) => Ok(DEFAULT_DEPTH),
    }
}

fn run_eq(
    file: &Path,
    lhs: &str,
    rhs: &str,
    theory: Option<&str>,
    depth: Option<usize>,
    search_bound: usize,
    out: Option<&Path>,
) -> Run {
    let doc = load(file)?;
    let t = find_theory(&doc, lhs, theory)?;
    if t.diagram(rhs).is_none() {
        return Err(Fail::usage(format!("no diagram `{rhs}` in `{}`", t.name)));
    }
    let pres = presented(t)?;
    let d1 = diagram(t, &pres, lhs).map_err(Fail::usage)?;
    let d2 = diagram(t, &pres, rhs).map_err(Fail::usage)?;
    let interps = interpretations_of(&doc, t).map_err(Fail::usage)?;
    let cfg = SearchConfig {
        depth: depth.map_or_else(default_depth, Ok)?,
        search_bound,
        ..SearchConfig::default()
    };
    let w = model_witness(t, &interps);
    let verdict = bounded_eq(&pres.graph, &d1, &d2, &pres.rules, &cfg, Some(&w as Witness))
        .map_err(Fail::usage)?;
    match verdict {
        Verdict::Equal(steps) => {
            println!("equal in {} steps", steps.len());
            for s in &steps {
                println!("  {s}");
            }
            let path = out.map_or_else(|| PathBuf::from(format!("{lhs}-{rhs}.trace.json")), Path::to_path_buf);
            std::fs::write(&path, trace_to_json(&steps) + "\n")
                .map_err(|e| Fail::usage(format!("{}: {e}", path.display())))?;
            println!("trace written to {}", path.display());
            Ok(OK)
        }
        Verdict::Distinct(reason) => {
            println!("distinct: {reason}");
            Ok(FAILURE)
        }
        Verdict::Unknown => {
            println!("unknown within {} steps", cfg.depth);
            Ok(UNKNOWN)
        }
    }
}

fn run_eval(
    file: &Path,
    name: &str,
    theory: Option<&str>,
    interpretation: Option<&str>,
    model: Option<&str>,
    json: bool,
) -> Run {
    let doc = load(file)?;
    let t = find_theory(&doc, name, theory)?;
    let pres = presented(t)?;
    let d = diagram(t, &pres, name).map_err(Fail::usage)?;
    let decls: Vec<_> = doc
        .interpretations
        .iter()
        .filter(|i| i.theory == t.name)
        .filter(|i| interpretation.is_none_or(|n| i.name == n))
        .filter(|i| model.is_none_or(|m| i.model == m))
        .collect();
    if decls.is_empty() {
        return Err(Fail::usage(format!("no matching interpretation of `{}`", t.name)));
    }
    let mut results = Vec::new();
    let mut code = OK;
    for decl in decls {
        let i = Interpretation::from_decl(&doc, decl).map_err(|e| Fail::usage(format!("{}: {e}", decl.name)))?;
        let gaps = i.missing(t);
        if !gaps.is_empty() {
            return Err(Fail::usage(format!("{}: no interpretation for {}", decl.name, gaps.join(", "))));
        }
        match evaluate(t, &i, &d) {
            Ok(v) => {
                if json {
                    results.push(serde_json::json!({
                        "interpretation": i.name,
                        "model": decl.model,
                        "value": v.to_json(&i),
                    }));
                } else {
                    println!("{}: {}", i.name, v.describe(&i));
                }
            }
            Err(e @ (EvalError::Missing(_) | EvalError::UnknownEntry { .. })) => {
                return Err(Fail::usage(format!("{}: {e}", i.name)))
            }
            Err(e) => {
                if json {
                    results.push(serde_json::json!({ "interpretation": i.name, "error": e.to_string() }));
                } else {
                    println!("{}: error: {e}", i.name);
                }
                code = FAILURE;
            }
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&results).expect("plain data"));
    }
    Ok(code)
}

fn run_render(file: &Path, name: &str, theory: Option<&str>, format: RenderFormat, out: Option<&Path>) -> Run {
    let doc = load(file)?;
    let t = find_theory(&doc, name, theory)?;
    let pres = presented(t)?;
    let d = diagram(t, &pres, name).map_err(|e| Fail(FAILURE, e))?;
    let format = match format {
        RenderFormat::Svg => Format::Svg,
        RenderFormat::Dot => Format::Dot,
        RenderFormat::Tikz => Format::Tikz,
    };
    let text = render(&pres.graph, &d, format).map_err(|e| Fail(FAILURE, e.to_string()))?;
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Fail::usage(format!("{}: {e}", p.display())))?,
        None => print!("{text}"),
    }
    Ok(OK)
}

fn run_oracle(task: &OracleTask) -> Run {
    let report = match task {
        OracleTask::ExchangeBfs { max_layers } => oracle::exchange_suite(*max_layers),
        OracleTask::CoendClosure { seed, count } => oracle::coend_suite(*seed, *count),
        OracleTask::HomCount { max_layers } => oracle::hom_count_suite(*max_layers),
    };
    println!("{report}");
    Ok(if report.agree() { OK } else { FAILURE })
}

fn corpus_dir(dir: Option<&Path>) -> PathBuf {
    dir.map(Path::to_path_buf)
        .or_else(|| std::env::var_os("COLLAGE_CORPUS").map(PathBuf::from))
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus"))
}

fn sorted_entries(dir: &Path, ext: &str) -> Result<Vec<PathBuf>, Fail> {
    let rd = std::fs::read_dir(dir).map_err(|e| Fail::usage(format!("{}: {e}", dir.display())))?;
    let mut v: Vec<PathBuf> = rd
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == ext))
        .collect();
    v.sort();
    Ok(v)
}

fn run_examples(dir: Option<&Path>) -> Run {
    let dir = corpus_dir(dir);
    for f in sorted_entries(&dir, "collage")? {
        let doc = load(&f)?;
        println!("{}", f.file_name().expect("a file").to_string_lossy());
        for t in &doc.theories {
            let names: Vec<&str> = t.diagrams.iter().map(|d| d.name.as_str()).collect();
            println!("  {} theory {}: {}", t.signature.kind(), t.name, names.join(", "));
        }
        for i in &doc.interpretations {
            let via = i.functor.as_ref().map(|f| format!(" via {f}")).unwrap_or_default();
            println!("  interpretation {} of {} in {}{via}", i.name, i.theory, i.model);
        }
    }
    let traces = dir.join("traces");
    if traces.is_dir() {
        println!("traces");
        for f in sorted_entries(&traces, "json")? {
            println!("  {}", f.file_name().expect("a file").to_string_lossy());
        }
    }
    Ok(OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match &cli.command {
        Command::Check { files } => run_check(files),
        Command::Normalize { file, diagram, theory } => run_normalize(file, diagram, theory.as_deref()),
        Command::Eq {
            file,
            lhs,
            rhs,
            theory,
            depth,
            search_bound,
            out,
        } => run_eq(file, lhs, rhs, theory.as_deref(), *depth, *search_bound, out.as_deref()),
        Command::Eval {
            file,
            diagram,
            theory,
            interpretation,
            model,
            json,
        } => run_eval(
            file,
            diagram,
            theory.as_deref(),
            interpretation.as_deref(),
            model.as_deref(),
            *json,
        ),
        Command::Render {
            file,
            diagram,
            theory,
            format,
            out,
        } => run_render(file, diagram, theory.as_deref(), *format, out.as_deref()),
        Command::Oracle { task } => run_oracle(task),
        Command::Examples { dir } => run_examples(dir.as_deref()),
    };
    match r {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
