use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::Path;

use serde_json::{json, Value};
use sigchrom::book::{
    build_book, chromatic_number_formula, closed_chi, closed_chi_factored,
    enumerate_switching_classes, BookSpec, Family, SigSelector,
};
use sigchrom::coloring::{chromatic_number, count_colorings, ChromaticNumber};
use sigchrom::engine::{chromatic_poly_with, EngineConfig};
use sigchrom::graph::parse_graph;
use sigchrom::verify::{oracle_polynomial, verify_matrix, Routes};
use sigchrom::{EngineMode, Polynomial, SignedMultigraph};

use crate::output::{CliError, CommandResult};
use crate::{BookArgs, Cli, Command, EvalArgs, Method, ModeArgs};

type Outcome = Result<CommandResult, CliError>;

pub fn run(cli: &Cli) -> Outcome {
    let budget = cli.budget;
    match &cli.command {
        Command::Poly { file, mode, eval } => poly(file, mode.into(), *eval, budget),
        Command::Count { file, k, mode } => count(file, *k, mode.into(), budget),
        Command::ChromaticNumber { file, book, spec } => {
            chromatic(file.as_deref(), *book, spec, budget)
        }
        Command::Book {
            spec,
            mode,
            method,
            all,
            factored,
            emit,
            eval,
        } => {
            let book = book_spec(spec)?;
            if *emit {
                let g = build_book(&book)?;
                let text = g.to_text();
                return Ok(CommandResult::ok(
                    "book",
                    text.clone(),
                    json!({ "book": book.to_string(), "graph": text }),
                ));
            }
            let mode = mode.into();
            if *all {
                book_all(book, mode, *eval, budget)
            } else {
                book_one(book, mode, *method, *factored, *eval, budget)
            }
        }
        Command::Classes { m, n, edge_limit } => classes(*m, *n, *edge_limit),
        Command::Verify { m, n, no_oracle } => verify(m, n, !no_oracle, budget),
    }
}

impl From<&ModeArgs> for EngineMode {
    fn from(args: &ModeArgs) -> Self {
        if args.zero_free {
            EngineMode::ZeroFree
        } else {
            EngineMode::Chromatic
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn read_graph(path: &Path) -> Result<SignedMultigraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    Ok(parse_graph(&text)?)
}

fn book_spec(args: &BookArgs) -> Result<BookSpec, CliError> {
    let m = args.m.ok_or_else(|| usage("-m is required"))?;
    let n = args.n.ok_or_else(|| usage("-n is required"))?;
    let sig = match (&args.l, &args.sig) {
        (Some(l), None) => SigSelector::Level(*l),
        (None, Some(s)) => s.parse()?,
        (None, None) => return Err(usage("choose a signature with -l <L> or --sig <L|uv>")),
        (Some(_), Some(_)) => unreachable!("clap rejects -l together with --sig"),
    };
    Ok(BookSpec::new(m, n, sig)?)
}

fn engine(g: &SignedMultigraph, mode: EngineMode, budget: u64) -> sigchrom::Result<Polynomial> {
    let config = EngineConfig {
        budget,
        ..EngineConfig::default()
    };
    chromatic_poly_with(g, mode, config)
}

/// Evaluates when asked. Arguments of the wrong parity have no counting
/// meaning, so they are refused unless `--eval-any` is given.
fn evaluate(p: &Polynomial, mode: EngineMode, eval: EvalArgs) -> Result<Option<Value>, CliError> {
    let Some(x) = eval.eval else {
        return Ok(None);
    };
    if !mode.counts_at(x) {
        let want = match mode {
            EngineMode::Chromatic => "odd",
            EngineMode::ZeroFree => "even",
        };
        if !eval.eval_any {
            return Err(usage(format!(
                "refusing to evaluate at {x}: {mode} values count colorings only at {want} arguments (use --eval-any to override)"
            )));
        }
        eprintln!("warning: {x} is not {want}, the value has no counting meaning in {mode} mode");
    }
    Ok(Some(big(&p.eval_i64(x))))
}

/// Exact integer as a JSON number of any size.
fn big(v: &num_bigint::BigInt) -> Value {
    serde_json::from_str(&v.to_string()).expect("integers are valid JSON numbers")
}

fn poly_payload(p: &Polynomial) -> Value {
    json!({ "coefficients": p.to_json(), "text": p.to_string() })
}

fn poly(file: &Path, mode: EngineMode, eval: EvalArgs, budget: u64) -> Outcome {
    let g = read_graph(file)?;
    let p = engine(&g, mode, budget)?;
    let value = evaluate(&p, mode, eval)?;
    let text = match &value {
        Some(v) => v.to_string(),
        None => p.to_string(),
    };
    let mut payload = poly_payload(&p);
    payload["mode"] = json!(mode);
    payload["vertices"] = json!(g.vertex_count());
    payload["edges"] = json!(g.edge_count());
    if let Some(v) = value {
        payload["eval"] = json!({ "x": eval.eval, "value": v });
    }
    Ok(CommandResult::ok("poly", text, payload))
}

fn count(file: &Path, k: u32, mode: EngineMode, budget: u64) -> Outcome {
    let g = read_graph(file)?;
    let total = count_colorings(&g, k, mode, budget)?;
    Ok(CommandResult::ok(
        "count",
        total.to_string(),
        json!({ "k": k, "mode": mode, "lambda": mode.lambda_for(k), "count": total }),
    ))
}

fn render_number(c: ChromaticNumber) -> String {
    match c {
        ChromaticNumber::Colorable(x) => x.to_string(),
        ChromaticNumber::Uncolorable => "uncolorable".to_string(),
    }
}

fn chromatic(file: Option<&Path>, book: bool, spec: &BookArgs, budget: u64) -> Outcome {
    match (file, book) {
        (Some(path), false) => {
            let g = read_graph(path)?;
            let c = chromatic_number(&g, budget)?;
            Ok(CommandResult::ok(
                "chromatic-number",
                render_number(c),
                json!({ "chromatic_number": c, "source": "oracle" }),
            ))
        }
        (None, true) => chromatic_book(book_spec(spec)?, budget),
        (Some(_), true) => Err(usage("give either a graph file or --book, not both")),
        (None, false) => Err(usage("give a graph file or --book -m M -n N -l L")),
    }
}

fn chromatic_book(book: BookSpec, budget: u64) -> Outcome {
    let g = build_book(&book)?;
    let oracle = chromatic_number(&g, budget)?;
    // B^uv(m,n) is switching equivalent to B_n(m,n).
    let level = match book.sig {
        SigSelector::Level(l) => l,
        SigSelector::Uv => book.n,
    };
    let mut payload = json!({ "book": book.to_string(), "chromatic_number": oracle });
    if book.n < 2 {
        payload["source"] = json!("oracle");
        payload["note"] =
            json!("single-page books are not classified; their chromatic number is at most 3");
        return Ok(CommandResult::ok(
            "chromatic-number",
            render_number(oracle),
            payload,
        ));
    }
    let formula = chromatic_number_formula(book.m, book.n, level)?;
    payload["source"] = json!("formula");
    payload["formula"] = json!(formula);
    let mut res = CommandResult::ok("chromatic-number", formula.to_string(), payload);
    if oracle != ChromaticNumber::Colorable(formula) {
        res.mismatch = Some(format!(
            "{book}: classification gives {formula}, counting gives {}",
            render_number(oracle)
        ));
    }
    Ok(res)
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Closed => "closed",
        Method::Engine => "engine",
        Method::OracleInterpolate => "oracle-interpolate",
    }
}

fn by_method(
    book: BookSpec,
    mode: EngineMode,
    method: Method,
    budget: u64,
) -> sigchrom::Result<Polynomial> {
    match method {
        Method::Closed => closed_chi(&Family::Book(book), mode),
        Method::Engine => engine(&build_book(&book)?, mode, budget),
        Method::OracleInterpolate => oracle_polynomial(&build_book(&book)?, mode, budget),
    }
}

fn book_one(
    book: BookSpec,
    mode: EngineMode,
    method: Method,
    factored: bool,
    eval: EvalArgs,
    budget: u64,
) -> Outcome {
    let p = by_method(book, mode, method, budget)?;
    let value = evaluate(&p, mode, eval)?;
    let shape = if factored {
        closed_chi_factored(&Family::Book(book), mode)?
    } else {
        None
    };
    if factored && shape.is_none() {
        eprintln!("note: no factored form for {book}; printing the expanded polynomial");
    }
    let text = match (&value, &shape) {
        (Some(v), _) => v.to_string(),
        (None, Some(f)) => f.to_string(),
        (None, None) => p.to_string(),
    };
    let mut payload = poly_payload(&p);
    payload["book"] = json!(book.to_string());
    payload["mode"] = json!(mode);
    payload["method"] = json!(method_name(method));
    if let Some(f) = shape {
        payload["factored"] = json!(f.to_string());
    }
    if let Some(v) = value {
        payload["eval"] = json!({ "x": eval.eval, "value": v });
    }
    Ok(CommandResult::ok("book", text, payload))
}

fn book_all(book: BookSpec, mode: EngineMode, eval: EvalArgs, budget: u64) -> Outcome {
    let methods = [Method::Closed, Method::Engine, Method::OracleInterpolate];
    let polys = methods
        .iter()
        .map(|&m| by_method(book, mode, m, budget))
        .collect::<sigchrom::Result<Vec<_>>>()?;
    let equal = polys.windows(2).all(|w| w[0] == w[1]);
    let verdict = if equal { "equal" } else { "differ" };

    let mut text = String::new();
    let mut results = serde_json::Map::new();
    for (method, p) in methods.iter().zip(&polys) {
        let name = method_name(*method);
        let _ = writeln!(text, "{name:<19} {p}");
        results.insert(name.to_string(), poly_payload(p));
    }
    let _ = writeln!(text, "verdict: {verdict}");
    let mut payload = json!({
        "book": book.to_string(),
        "mode": mode,
        "results": results,
        "verdict": verdict,
    });
    if equal {
        if let Some(v) = evaluate(&polys[0], mode, eval)? {
            let _ = writeln!(text, "value: {v}");
            payload["eval"] = json!({ "x": eval.eval, "value": v });
        }
    }
    let mut res = CommandResult::ok("book", text, payload);
    if !equal {
        res.mismatch = Some(format!("{book} {mode}: methods disagree"));
    }
    Ok(res)
}

/// Renders a signature on a book as named edges such as `uu_1^2`.
fn edge_names(g: &SignedMultigraph, sig: &sigchrom::Signature) -> String {
    let names: Vec<String> = sig
        .iter()
        .map(|e| {
            let edge = g.edge(e).expect("signature edges exist");
            format!("{}{}", g.vertex_name(edge.u), g.vertex_name(edge.v))
        })
        .collect();
    format!("{{{}}}", names.join(", "))
}

fn classes(m: usize, n: usize, edge_limit: usize) -> Outcome {
    let base = build_book(&BookSpec::level(m, n, 0)?)?;
    let found = enumerate_switching_classes(m, n, edge_limit)?;
    let total: u64 = found.iter().map(|c| c.size).sum();

    let mut text = format!(
        "{:<6} {:<10} {:<15} representative\n",
        "level", "size", "negative_pages"
    );
    let mut rows = Vec::new();
    for c in &found {
        let level = c.level.map_or("-".to_string(), |l| l.to_string());
        let rep = edge_names(&base, &c.representative);
        let _ = writeln!(
            text,
            "{level:<6} {:<10} {:<15} {rep}",
            c.size, c.negative_page_count
        );
        rows.push(json!({
            "level": c.level,
            "size": c.size,
            "negative_page_count": c.negative_page_count,
            "representative": c.representative.iter().collect::<Vec<_>>(),
            "representative_edges": rep,
        }));
    }
    let _ = writeln!(text, "{} classes, {} signatures", found.len(), total);
    Ok(CommandResult::ok(
        "classes",
        text,
        json!({ "m": m, "n": n, "classes": rows, "total": total }),
    ))
}

fn parse_range(flag: &str, s: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || {
        usage(format!(
            "{flag}: expected a number or a range like 3-5, got `{s}`"
        ))
    };
    let (lo, hi) = match s.split_once('-') {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let x = s.trim().parse().map_err(|_| bad())?;
            (x, x)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn verify(m: &str, n: &str, oracle: bool, budget: u64) -> Outcome {
    let ms = parse_range("-m", m)?;
    let ns = parse_range("-n", n)?;
    let routes = Routes {
        oracle,
        ..Routes::ALL
    };
    let report = verify_matrix(ms, ns, routes, budget)?;

    let mut text = String::new();
    for cell in &report.cells {
        let tag = if cell.pass { "PASS" } else { "FAIL" };
        let _ = write!(text, "{tag} {}", cell.label());
        if let Some(e) = &cell.error {
            let _ = write!(text, " ({e})");
        }
        text.push('\n');
    }
    let passed = report.cells.iter().filter(|c| c.pass).count();
    let _ = writeln!(text, "{passed}/{} cells pass", report.cells.len());

    let failing: Vec<String> = report.failures().map(|c| c.label()).collect();
    let payload = json!({
        "cells": report.cells,
        "passed": passed,
        "total": report.cells.len(),
        "failures": failing,
    });
    let mut res = CommandResult::ok("verify", text, payload);
    if !failing.is_empty() {
        res.mismatch = Some(format!("failing cells: {}", failing.join("; ")));
    }
    Ok(res)
}
