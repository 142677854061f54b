//! Text formats for subspace tuples and graphs.
//!
//! A tuple file starts with a header line
//!
//! ```text
//! tuple v1 field=real d=3 n=2 ranks=1,2
//! ```
//!
//! followed by `n` blocks of `d` rows each. Row `p` of block `i` holds the
//! `r_i` entries of row `p` of the basis matrix, as `re im` pairs for complex
//! tuples. Blank lines and lines starting with `#` are ignored everywhere.
//! Entries are written with 17 significant digits so a round trip is exact.
//!
//! A graph file starts with `graph v=<n> e=<m>` followed by `m` lines `i j`
//! with `1 <= i < j <= n`.

use std::fmt::Write as _;

use subiso_core::harness::graph::SimpleGraph;
use subiso_core::{Field, Matrix, SubspaceTuple, C64};

use crate::error::{CliError, CliResult};

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// `key=value` fields after a fixed prefix, each key required exactly once.
fn header_fields<'a>(line: usize, tokens: &[&'a str], keys: &[&str]) -> CliResult<Vec<&'a str>> {
    let mut values = vec![None; keys.len()];
    for tok in tokens {
        let (k, v) =
            tok.split_once('=').ok_or_else(|| CliError::parse(line, format!("expected key=value, found `{tok}`")))?;
        let slot = keys
            .iter()
            .position(|&key| key == k)
            .ok_or_else(|| CliError::parse(line, format!("unknown header key `{k}`")))?;
        if values[slot].replace(v).is_some() {
            return Err(CliError::parse(line, format!("duplicate header key `{k}`")));
        }
    }
    keys.iter()
        .zip(values)
        .map(|(k, v)| v.ok_or_else(|| CliError::parse(line, format!("missing header key `{k}`"))))
        .collect()
}

fn parse_usize(line: usize, what: &str, s: &str) -> CliResult<usize> {
    s.parse().map_err(|_| CliError::parse(line, format!("{what}: `{s}` is not a nonnegative integer")))
}

fn parse_f64(line: usize, s: &str) -> CliResult<f64> {
    let x: f64 = s.parse().map_err(|_| CliError::parse(line, format!("`{s}` is not a number")))?;
    if !x.is_finite() {
        return Err(CliError::parse(line, format!("`{s}` is not finite")));
    }
    Ok(x)
}

pub fn parse_field(s: &str) -> Option<Field> {
    match s {
        "real" => Some(Field::Real),
        "complex" => Some(Field::Complex),
        _ => None,
    }
}

pub fn parse_tuple(text: &str) -> CliResult<SubspaceTuple> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| CliError::parse(1, "empty tuple file"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() < 2 || tokens[0] != "tuple" {
        return Err(CliError::parse(hline, "expected header `tuple v1 ...`"));
    }
    if tokens[1] != "v1" {
        return Err(CliError::parse(hline, format!("unsupported tuple format version `{}`", tokens[1])));
    }
    let f = header_fields(hline, &tokens[2..], &["field", "d", "n", "ranks"])?;
    let field = parse_field(f[0]).ok_or_else(|| CliError::parse(hline, format!("unknown field `{}`", f[0])))?;
    let d = parse_usize(hline, "d", f[1])?;
    let n = parse_usize(hline, "n", f[2])?;
    let ranks = f[3].split(',').map(|r| parse_usize(hline, "ranks", r)).collect::<CliResult<Vec<usize>>>()?;
    if ranks.len() != n {
        return Err(CliError::parse(hline, format!("n={n} but {} ranks given", ranks.len())));
    }
    if d == 0 || ranks.iter().any(|&r| r == 0 || r > d) {
        return Err(CliError::parse(hline, "need d >= 1 and 1 <= r_i <= d"));
    }
    let per_entry = if field == Field::Complex { 2 } else { 1 };

    let mut bases = Vec::with_capacity(n);
    let mut last_line = hline;
    for (i, &r) in ranks.iter().enumerate() {
        let mut m = Matrix::zeros(d, r);
        for p in 0..d {
            let (ln, row) = lines
                .next()
                .ok_or_else(|| CliError::parse(last_line, format!("subspace {} ends after {p} of {d} rows", i + 1)))?;
            last_line = ln;
            let toks: Vec<&str> = row.split_whitespace().collect();
            if toks.len() != r * per_entry {
                return Err(CliError::parse(
                    ln,
                    format!("subspace {}: expected {} values in a row, found {}", i + 1, r * per_entry, toks.len()),
                ));
            }
            for c in 0..r {
                let re = parse_f64(ln, toks[c * per_entry])?;
                let im = if per_entry == 2 { parse_f64(ln, toks[c * per_entry + 1])? } else { 0.0 };
                m[(p, c)] = C64::new(re, im);
            }
        }
        bases.push(m);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(CliError::parse(ln, "trailing data after the last subspace"));
    }
    Ok(SubspaceTuple::new(field, d, bases)?)
}

pub fn write_tuple(t: &SubspaceTuple) -> String {
    let ranks: Vec<String> = t.ranks().iter().map(|r| r.to_string()).collect();
    let mut s = format!("tuple v1 field={} d={} n={} ranks={}\n", t.field().name(), t.dim(), t.len(), ranks.join(","));
    for (i, b) in t.bases().iter().enumerate() {
        let _ = writeln!(s, "# subspace {}", i + 1);
        for p in 0..b.rows() {
            let mut entries = Vec::with_capacity(2 * b.cols());
            for c in 0..b.cols() {
                let z = b[(p, c)];
                entries.push(format!("{:.16e}", z.re));
                if t.field() == Field::Complex {
                    entries.push(format!("{:.16e}", z.im));
                }
            }
            let _ = writeln!(s, "{}", entries.join(" "));
        }
    }
    s
}

pub fn parse_graph(text: &str) -> CliResult<SimpleGraph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| CliError::parse(1, "empty graph file"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.first() != Some(&"graph") {
        return Err(CliError::parse(hline, "expected header `graph v=<n> e=<m>`"));
    }
    let f = header_fields(hline, &tokens[1..], &["v", "e"])?;
    let v = parse_usize(hline, "v", f[0])?;
    let e = parse_usize(hline, "e", f[1])?;
    let mut edges = Vec::with_capacity(e);
    for (ln, row) in lines {
        let toks: Vec<&str> = row.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(CliError::parse(ln, "expected an edge `i j`"));
        }
        let (i, j) = (parse_usize(ln, "vertex", toks[0])?, parse_usize(ln, "vertex", toks[1])?);
        if !(1 <= i && i < j && j <= v) {
            return Err(CliError::parse(ln, format!("edge must satisfy 1 <= i < j <= {v}")));
        }
        edges.push((i - 1, j - 1));
    }
    if edges.len() != e {
        return Err(CliError::parse(hline, format!("header says e={e} but {} edges follow", edges.len())));
    }
    Ok(SimpleGraph::new(v, &edges)?)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut s = format!("graph v={} e={}\n", g.vertex_count(), g.edges().len());
    for &(i, j) in g.edges() {
        let _ = writeln!(s, "{} {}", i + 1, j + 1);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use subiso_core::harness::generators::random_tuple;

    #[test]
    fn round_trip_is_exact() {
        for field in [Field::Real, Field::Complex] {
            let t = random_tuple(5, &[1, 3, 2], field, 9).unwrap();
            let back = parse_tuple(&write_tuple(&t)).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a line in R^2\n\ntuple v1 field=real n=1 d=2 ranks=1\n1 # not allowed here\n";
        assert!(parse_tuple(text).is_err());
        let text = "# a line in R^2\n\ntuple v1 field=real n=1 d=2 ranks=1\n\n1\n# gap\n0\n";
        let t = parse_tuple(text).unwrap();
        assert_eq!((t.dim(), t.len()), (2, 1));
    }

    #[test]
    fn header_errors() {
        let cases = [
            ("", "empty"),
            ("tuple v2 field=real d=1 n=1 ranks=1\n1\n", "version"),
            ("tuple v1 field=quaternion d=1 n=1 ranks=1\n1\n", "unknown field"),
            ("tuple v1 field=real d=2 n=2 ranks=1\n1\n0\n", "ranks given"),
            ("tuple v1 field=real d=2 n=1 ranks=3\n", "r_i <= d"),
            ("tuple v1 field=real d=2 n=1\n", "missing header key `ranks`"),
            ("tuple v1 field=real d=2 d=2 n=1 ranks=1\n", "duplicate"),
            ("tuple v1 field=real d=2 n=1 ranks=1\n1\n", "ends after 1 of 2 rows"),
            ("tuple v1 field=real d=1 n=1 ranks=1\n1 2\n", "expected 1 values"),
            ("tuple v1 field=real d=1 n=1 ranks=1\nnan\n", "not finite"),
            ("tuple v1 field=real d=1 n=1 ranks=1\n1\n2\n", "trailing"),
        ];
        for (text, needle) in cases {
            let msg = parse_tuple(text).unwrap_err().to_string();
            assert!(msg.contains(needle), "{msg:?} should mention {needle:?}");
        }
    }

    #[test]
    fn complex_entries_are_pairs() {
        let t = parse_tuple("tuple v1 field=complex d=2 n=1 ranks=1\n1 0\n0 -1\n").unwrap();
        assert_eq!(t.bases()[0][(1, 0)], C64::new(0.0, -1.0));
    }

    #[test]
    fn graph_round_trip_and_errors() {
        let g = SimpleGraph::cycle(5).unwrap();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        assert!(parse_graph("graph v=3 e=1\n2 1\n").is_err());
        assert!(parse_graph("graph v=3 e=2\n1 2\n").is_err());
        assert!(parse_graph("graph v=3 e=1\n1 4\n").is_err());
    }
}
