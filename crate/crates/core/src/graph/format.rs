//! Plain-text signed graph format.
//!
//! ```text
//! # optional comments
//! p signed <vertex_count> <edge_count>
//! e <u> <v> <+|->
//! ```

use super::{Sign, SignedMultigraph};
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<SignedMultigraph> {
    let mut graph: Option<(SignedMultigraph, usize)> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match (&mut graph, tokens[0]) {
            (None, "p") => {
                if tokens.len() != 4 || tokens[1] != "signed" {
                    return Err(Error::parse(
                        line_no,
                        "header must be `p signed <vertex_count> <edge_count>`",
                    ));
                }
                let n = parse_count(tokens[2], line_no, "vertex count")?;
                let m = parse_count(tokens[3], line_no, "edge count")?;
                graph = Some((SignedMultigraph::new(n), m));
            }
            (None, _) => {
                return Err(Error::parse(line_no, "expected `p signed` header"));
            }
            (Some(_), "p") => return Err(Error::parse(line_no, "duplicate header")),
            (Some((g, expected)), "e") => {
                if g.edge_count() == *expected {
                    return Err(Error::parse(
                        line_no,
                        format!("more edge lines than the declared {expected}"),
                    ));
                }
                if tokens.len() != 4 {
                    return Err(Error::parse(line_no, "edge line must be `e <u> <v> <+|->`"));
                }
                let u = parse_vertex(tokens[1], g.vertex_count(), line_no)?;
                let v = parse_vertex(tokens[2], g.vertex_count(), line_no)?;
                let sign = match tokens[3] {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => {
                        return Err(Error::parse(
                            line_no,
                            format!("bad sign token `{other}`, expected `+` or `-`"),
                        ))
                    }
                };
                g.add_edge(u, v, sign)?;
            }
            (Some(_), other) => {
                return Err(Error::parse(line_no, format!("unknown record `{other}`")));
            }
        }
    }

    match graph {
        None => Err(Error::parse(last_line.max(1), "missing `p signed` header")),
        Some((g, expected)) if g.edge_count() != expected => Err(Error::parse(
            last_line.max(1),
            format!("declared {expected} edges but found {}", g.edge_count()),
        )),
        Some((g, _)) => Ok(g),
    }
}

fn parse_count(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("bad {what} `{token}`")))
}

fn parse_vertex(token: &str, n: usize, line: usize) -> Result<usize> {
    let v: usize = token
        .parse()
        .map_err(|_| Error::parse(line, format!("bad vertex id `{token}`")))?;
    if v >= n {
        return Err(Error::parse(
            line,
            format!("vertex {v} out of range for {n} vertices"),
        ));
    }
    Ok(v)
}

pub(super) fn serialize(g: &SignedMultigraph) -> String {
    let mut out = format!("p signed {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("e {} {} {}\n", e.u, e.v, e.sign.token()));
    }
    out
}
