//! Text format for signed graphs.
//!
//! ```text
//! sg <n> <m>
//! <u> <v> <+|->     (m lines, 0-indexed endpoints, u == v is a loop)
//! ```
//!
//! Line order defines edge ids. Lines starting with `#` and blank lines are
//! skipped; the writer emits the canonical form used for instance hashing.

use crate::graph::{Sign, SignedGraph};
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SgParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

fn malformed(line: usize, msg: impl Into<String>) -> SgParseError {
    SgParseError::Malformed { line, msg: msg.into() }
}

pub fn parse_sg(input: &str) -> Result<SignedGraph, SgParseError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (lno, header) = lines.next().ok_or_else(|| malformed(0, "empty input"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("sg") {
        return Err(malformed(lno, "header must start with `sg`"));
    }
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| malformed(lno, "bad vertex count"))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| malformed(lno, "bad edge count"))?;
    if parts.next().is_some() {
        return Err(malformed(lno, "trailing tokens after header"));
    }

    let mut g = SignedGraph::new(n);
    let mut found = 0;
    for (lno, line) in lines {
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| malformed(lno, "bad endpoint"))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| malformed(lno, "bad endpoint"))?;
        let sign = match parts.next() {
            Some("+") => Sign::Plus,
            Some("-") => Sign::Minus,
            _ => return Err(malformed(lno, "sign must be `+` or `-`")),
        };
        if parts.next().is_some() {
            return Err(malformed(lno, "trailing tokens after edge"));
        }
        g.add_edge(u, v, sign)
            .map_err(|e| malformed(lno, e.to_string()))?;
        found += 1;
        if found > m {
            return Err(SgParseError::EdgeCountMismatch { expected: m, found });
        }
    }
    if found != m {
        return Err(SgParseError::EdgeCountMismatch { expected: m, found });
    }
    Ok(g)
}

/// Canonical text form: exactly the header plus one line per edge in id order.
pub fn write_sg(g: &SignedGraph) -> String {
    let mut out = format!("sg {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.u, e.v, e.sign.as_char()));
    }
    out
}

/// SHA-256 of the canonical text form plus a context tag, hex encoded. The tag
/// binds a certificate to the bound (and its parameters) it was issued for.
pub fn instance_hash(g: &SignedGraph, tag: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(write_sg(g).as_bytes());
    hasher.update(b"\n");
    hasher.update(tag.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}
