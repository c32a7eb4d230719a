//! graph6 and plain edge-list text formats.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// Parses one graph6 record. Trailing whitespace/newline is ignored; an
/// optional `>>graph6<<` header is accepted. Non-zero padding bits are
/// rejected so that every accepted string is canonical.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let first = *bytes
        .first()
        .ok_or_else(|| Error::parse("empty graph6 string"))?;
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(format!(
            "byte 0x{bad:02x} outside the graph6 range 63..=126"
        )));
    }
    let (n, body) = if first == 126 {
        // Long length forms are well-formed graph6 but far beyond our cap.
        let n = decode_long_length(&bytes[1..])?;
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    } else {
        ((first - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse(format!(
            "graph6 body for n={n} must be {expected} bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse("non-zero padding bits in graph6 body"));
        }
    }
    Ok(g)
}

fn decode_long_length(rest: &[u8]) -> Result<usize> {
    let digits = match rest {
        [126, a, b, c, d, e, f, ..] => vec![*a, *b, *c, *d, *e, *f],
        [126, ..] => return Err(Error::parse("truncated graph6 length field")),
        [a, b, c, ..] => vec![*a, *b, *c],
        _ => return Err(Error::parse("truncated graph6 length field")),
    };
    Ok(digits
        .iter()
        .fold(0usize, |acc, &d| (acc << 6) | (d - 63) as usize))
}

/// Encodes a graph as graph6 (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n).div_ceil(12));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Reads one graph6 record per non-empty line. Errors carry the 1-based line.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    Graph6Lines::new(reader).collect()
}

/// Streaming reader over graph6 lines.
pub struct Graph6Lines<R> {
    lines: std::io::Lines<R>,
    line_no: usize,
}

impl<R: BufRead> Graph6Lines<R> {
    pub fn new(reader: R) -> Self {
        Graph6Lines {
            lines: reader.lines(),
            line_no: 0,
        }
    }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        loop {
            let line = match self.lines.next()? {
                Ok(l) => l,
                Err(e) => return Some(Err(e.into())),
            };
            self.line_no += 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            return Some(parse_graph6(trimmed).map_err(|e| e.at_line(self.line_no)));
        }
    }
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v` (0-indexed). Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse("missing 'n m' header"))?;
    let [n, m] = parse_pair(header).map_err(|e| e.at_line(hline))?;
    let mut g = Graph::empty(n).map_err(|e| match e {
        Error::TooManyVertices { .. } => e,
        other => other.at_line(hline),
    })?;
    let mut seen = 0;
    for (line_no, line) in lines {
        if seen == m {
            return Err(Error::parse(format!("more than the declared {m} edges")).at_line(line_no));
        }
        let [u, v] = parse_pair(line).map_err(|e| e.at_line(line_no))?;
        g.add_edge(u, v)
            .map_err(|e| Error::parse(e.to_string()).at_line(line_no))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(format!(
            "header declares {m} edges but {seen} were given"
        )));
    }
    Ok(g)
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::parse(format!("expected a non-negative integer, found '{t}'")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok([a?, b?]),
        _ => Err(Error::parse(format!(
            "expected two integers, found '{line}'"
        ))),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
