//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! <n> <m>
//! <u> <v>      (m lines, 0-based endpoints)
//! ```
//!
//! Anything after a `#` is ignored and blank lines are skipped.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Graph::empty(0);
    let mut seen = 0usize;
    let mut last_line = 0;

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let nums = parse_pair(content, lineno)?;
        match header {
            None => {
                header = Some(nums);
                graph = Graph::empty(nums.0);
            }
            Some((_, m)) => {
                if seen == m {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("more than the declared {m} edges"),
                    });
                }
                graph
                    .add_edge(nums.0, nums.1)
                    .map_err(|e| Error::Parse { line: lineno, msg: e.to_string() })?;
                seen += 1;
            }
        }
    }

    match header {
        None => Err(Error::Parse { line: last_line.max(1), msg: "missing `<n> <m>` header".into() }),
        Some((_, m)) if seen != m => {
            Err(Error::Parse { line: last_line, msg: format!("expected {m} edges, found {seen}") })
        }
        Some(_) => Ok(graph),
    }
}

fn parse_pair(content: &str, line: usize) -> Result<(usize, usize)> {
    let toks: Vec<&str> = content.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Parse {
            line,
            msg: format!("expected two integers, found {} tokens", toks.len()),
        });
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse { line, msg: format!("`{s}` is not a non-negative integer") })
    };
    Ok((num(toks[0])?, num(toks[1])?))
}

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "{} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}
