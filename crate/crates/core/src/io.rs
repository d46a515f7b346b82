//! Text formats.
//!
//! MGF is line based: `mgf <n>` first, then one `e <u> <v>` line per edge
//! with 0-based endpoints and `u < v`. Parallel edges are repeated lines and
//! edge ids follow file order. Lines starting with `#` are comments.
//! graph6 is accepted for simple graphs on input only.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub fn write_mgf(g: &Multigraph) -> String {
    let mut out = format!("mgf {}\n", g.n());
    for (_, u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn parse_mgf(text: &str) -> Result<Multigraph> {
    let mut n = None;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
        let mut fields = line.split_whitespace();
        match (n, fields.next()) {
            (None, Some("mgf")) => {
                let v = fields.next().ok_or_else(|| err("missing order"))?;
                n = Some(v.parse::<usize>().map_err(|_| err("bad order"))?);
            }
            (None, _) => return Err(err("expected `mgf <n>` header")),
            (Some(_), Some("e")) => {
                let mut end = || -> Result<usize> {
                    fields
                        .next()
                        .ok_or_else(|| err("missing endpoint"))?
                        .parse::<usize>()
                        .map_err(|_| err("bad endpoint"))
                };
                let u = end()?;
                let v = end()?;
                pairs.push((line_no, u, v));
            }
            (Some(_), _) => return Err(err("expected `e <u> <v>`")),
        }
        if fields.next().is_some() {
            return Err(err("trailing fields"));
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "empty input".into() })?;
    for &(line, u, v) in &pairs {
        if u >= n || v >= n {
            return Err(Error::Parse { line, msg: format!("endpoint out of range 0..{n}") });
        }
        if u == v {
            return Err(Error::Parse { line, msg: "loop".into() });
        }
    }
    Multigraph::from_edges(n, pairs.into_iter().map(|(_, u, v)| (u, v)))
}

/// Reads one graph6 string (optionally with the `>>graph6<<` header).
/// Edges are numbered in column order of the upper triangle.
pub fn parse_graph6(text: &str) -> Result<Multigraph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes: Vec<u8> = s.bytes().collect();
    let err = |msg: &str| Error::Parse { line: 1, msg: msg.to_string() };
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(err("byte outside graph6 range"));
    }
    let (n, rest) = match bytes.as_slice() {
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err("truncated order"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated order"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((*b - 63) as usize, rest),
        [] => return Err(err("empty input")),
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != needed {
        return Err(err("wrong data length"));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut pairs = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                pairs.push((u, v));
            }
            k += 1;
        }
    }
    Multigraph::from_edges(n, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::petersen;

    #[test]
    fn mgf_is_bit_exact() {
        let g = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let text = write_mgf(&g);
        assert_eq!(text, "mgf 3\ne 0 1\ne 0 1\ne 1 2\n");
        assert_eq!(parse_mgf(&text).unwrap(), g);
    }

    #[test]
    fn mgf_comments_and_errors() {
        let g = parse_mgf("# theta\nmgf 2\n# three parallels\ne 0 1\ne 0 1\ne 0 1\n").unwrap();
        assert_eq!(g.multiplicity(0, 1), 3);
        assert!(parse_mgf("e 0 1\n").is_err());
        assert!(parse_mgf("mgf 2\ne 0 0\n").is_err());
        assert!(parse_mgf("mgf 2\ne 0 2\n").is_err());
        assert!(parse_mgf("mgf 2\nx 0 1\n").is_err());
        assert!(parse_mgf("").is_err());
    }

    #[test]
    fn graph6_petersen() {
        // the usual graph6 encoding of the Petersen graph
        let g = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.m(), 15);
        assert!(g.is_regular(3));
        assert!(crate::iso::are_isomorphic(&g, &petersen()).unwrap());
        let k4 = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        assert!(parse_graph6("C~~").is_err());
    }
}
