//! Text formats: graph6 for simple graphs, `.mg` for multigraphs, DOT export.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Multigraph};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes a simple graph as one graph6 line (no trailing newline).
pub fn to_graph6(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple("graph6 encoding"));
    }
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(Error::InvalidArgument(format!("graph6 order {n} too large")));
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for k in 0..6 {
            byte <<= 1;
            if chunk.get(k).copied().unwrap_or(false) {
                byte |= 1;
            }
        }
        out.push(byte + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decodes one graph6 line; `line` is used in error messages.
pub fn from_graph6_line(text: &str, line: usize) -> Result<Multigraph> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(line, "empty graph6 string"));
    }
    if let Some(b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(line, format!("invalid graph6 byte {b:#04x}")));
    }
    let (n, rest) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::parse(line, "unsupported graph6 order prefix"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        (n, &bytes[4..])
    } else {
        (usize::from(bytes[0] - 63), &bytes[1..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if rest.len() != need {
        return Err(Error::parse(
            line,
            format!("graph6 body has {} bytes, expected {need} for order {n}", rest.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push(Edge::new(i, j));
            }
            k += 1;
        }
    }
    Multigraph::new(n, edges)
}

/// Parses every non-empty line as graph6.
pub fn parse_graph6(text: &str) -> Result<Vec<Multigraph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| from_graph6_line(l, i + 1))
        .collect()
}

/// `.mg` text: a line `n m`, then `m` lines `u v`, edges in sorted order.
pub fn to_mg(g: &Multigraph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        let _ = writeln!(s, "{} {}", e.u, e.v);
    }
    s
}

/// Parses exactly one `.mg` graph.
pub fn parse_mg(text: &str) -> Result<Multigraph> {
    let mut gs = parse_mg_stream(text)?;
    match gs.len() {
        0 => Err(Error::parse(1, "missing header line")),
        1 => Ok(gs.remove(0)),
        _ => Err(Error::parse(1, format!("expected one graph, found {}", gs.len()))),
    }
}

/// Parses concatenated `.mg` graphs; each header says how many edge lines
/// follow it.
pub fn parse_mg_stream(text: &str) -> Result<Vec<Multigraph>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut out = Vec::new();
    while let Some((hline, header)) = lines.next() {
        let [n, m] = two_numbers(header, hline)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (ln, l) = lines.next().ok_or_else(|| {
                Error::parse(hline, format!("header declares {m} edges but {} were given", edges.len()))
            })?;
            let [u, v] = two_numbers(l, ln)?;
            if u >= n || v >= n {
                return Err(Error::parse(ln, format!("endpoint out of range for order {n}")));
            }
            edges.push(Edge::new(u, v));
        }
        out.push(Multigraph::new(n, edges)?);
    }
    Ok(out)
}

fn two_numbers(l: &str, line: usize) -> Result<[usize; 2]> {
    let parts: Vec<&str> = l.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(Error::parse(line, format!("expected two integers, found {l:?}")));
    }
    let mut out = [0; 2];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p
            .parse()
            .map_err(|_| Error::parse(line, format!("not a non-negative integer: {p:?}")))?;
    }
    Ok(out)
}

/// Undirected DOT; loops and parallel edges are written one per copy.
pub fn to_dot(g: &Multigraph, name: &str) -> String {
    let mut s = format!("graph \"{}\" {{\n", name.replace('"', "\\\""));
    for v in 0..g.order() {
        let _ = writeln!(s, "  {v} [label=\"{}\"];", g.label(v).replace('"', "\\\""));
    }
    for e in g.edges() {
        let _ = writeln!(s, "  {} -- {};", e.u, e.v);
    }
    s.push_str("}\n");
    s
}

/// Reads graphs from a file body: `.mg` when `mg` is set, graph6 lines otherwise.
pub fn parse_graphs(text: &str, mg: bool) -> Result<Vec<Multigraph>> {
    if mg {
        parse_mg_stream(text)
    } else {
        parse_graph6(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        let k4 = Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(to_graph6(&k4).unwrap(), "C~");
        let p3 = Multigraph::from_pairs(3, &[(0, 1), (1, 2)]);
        assert_eq!(to_graph6(&p3).unwrap(), "Bg");
        assert_eq!(from_graph6_line(">>graph6<<C~", 1).unwrap(), k4);
        assert_eq!(to_graph6(&Multigraph::empty(0)).unwrap(), "?");
    }

    #[test]
    fn graph6_large_order_prefix() {
        let g = Multigraph::from_pairs(70, &[(0, 69), (3, 4)]);
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6_line(&s, 1).unwrap(), g);
    }

    #[test]
    fn graph6_errors_carry_line_numbers() {
        let err = parse_graph6("C~\nC\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn mg_round_trip() {
        let g = Multigraph::from_pairs(3, &[(2, 1), (0, 0), (0, 1), (0, 1)]);
        let text = to_mg(&g);
        assert_eq!(text, "3 4\n0 0\n0 1\n0 1\n1 2\n");
        assert_eq!(parse_mg(&text).unwrap(), g);
        assert_eq!(to_mg(&parse_mg(&text).unwrap()), text);
    }

    #[test]
    fn mg_errors() {
        assert!(matches!(parse_mg("2 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_mg("2 2\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_mg("2 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn mg_stream_splits_on_headers() {
        let a = Multigraph::from_pairs(2, &[(0, 1), (0, 1)]);
        let b = Multigraph::from_pairs(3, &[(0, 2)]);
        let text = format!("{}{}", to_mg(&a), to_mg(&b));
        assert_eq!(parse_mg_stream(&text).unwrap(), vec![a, b]);
        assert!(parse_mg(&text).is_err());
    }

    #[test]
    fn dot_lists_every_copy() {
        let g = Multigraph::from_pairs(2, &[(0, 1), (0, 1), (1, 1)]);
        let dot = to_dot(&g, "g");
        assert_eq!(dot.matches("0 -- 1").count(), 2);
        assert_eq!(dot.matches("1 -- 1").count(), 1);
    }
}
