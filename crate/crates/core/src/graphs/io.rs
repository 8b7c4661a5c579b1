//! Edge-list and graph6 readers/writers.
//!
//! Edge-list layout: a header line `n m` or `n m directed`, then `m` lines
//! `u v` with 1-based vertices. Lines starting with `#` and blank lines are
//! ignored.

use crate::error::{Error, Result};

use super::model::{AnyGraph, Digraph, Graph, MAX_VERTICES};

/// graph6 inputs above this order are refused by the front ends.
pub const GRAPH6_PRACTICAL_LIMIT: usize = 10;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<AnyGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let directed = match fields.as_slice() {
        [_, _] => false,
        [_, _, flag] if flag.eq_ignore_ascii_case("directed") => true,
        [_, _, flag] if flag.eq_ignore_ascii_case("undirected") => false,
        _ => return Err(parse_err(hline, format!("malformed header {header:?}"))),
    };
    let n: usize = fields[0]
        .parse()
        .map_err(|_| parse_err(hline, format!("bad vertex count {:?}", fields[0])))?;
    let m: usize = fields[1]
        .parse()
        .map_err(|_| parse_err(hline, format!("bad edge count {:?}", fields[1])))?;
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "vertex count",
            got: n,
            limit: MAX_VERTICES,
        });
    }

    let mut g = Graph::empty(n)?;
    let mut d = Digraph::empty(n)?;
    let mut count = 0;
    for (lno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = toks.as_slice() else {
            return Err(parse_err(lno, format!("expected `u v`, got {line:?}")));
        };
        let vertex = |t: &str| -> Result<usize> {
            let x: usize = t
                .parse()
                .map_err(|_| parse_err(lno, format!("bad vertex {t:?}")))?;
            if x == 0 || x > n {
                return Err(parse_err(lno, format!("vertex {x} out of range 1..={n}")));
            }
            Ok(x - 1)
        };
        let (u, v) = (vertex(a)?, vertex(b)?);
        let res = if directed {
            d.insert_arc(u, v)
        } else {
            g.insert_edge(u, v)
        };
        res.map_err(|e| parse_err(lno, e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(if directed {
        AnyGraph::Directed(d)
    } else {
        AnyGraph::Undirected(g)
    })
}

pub fn write_edge_list(g: &AnyGraph) -> String {
    let (n, pairs, directed) = match g {
        AnyGraph::Undirected(g) => (g.order(), g.edges(), false),
        AnyGraph::Directed(d) => (d.order(), d.arcs(), true),
    };
    let mut s = format!(
        "{n} {}{}\n",
        pairs.len(),
        if directed { " directed" } else { "" }
    );
    for (u, v) in pairs {
        s.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    s
}

/// Decodes a graph6 string (an optional `>>graph6<<` prefix is skipped).
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: &str| parse_err(1, format!("graph6: {msg}"));
    let (&first, rest) = bytes.split_first().ok_or_else(|| bad("empty string"))?;
    if !(63..=126).contains(&first) {
        return Err(bad("invalid size byte"));
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(bad("only orders up to 62 are supported"));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if rest.len() != need {
        return Err(bad(&format!(
            "expected {need} data bytes for {n} vertices, got {}",
            rest.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(bad("invalid data byte"));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = vec![(n as u8) + 63];
    let mut cur = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                cur |= 1 << (5 - k % 6);
            }
            k += 1;
            if k % 6 == 0 {
                out.push(cur + 63);
                cur = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(cur + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_p3() {
        let g = parse_graph("3 2\n1 2\n2 3").unwrap();
        let AnyGraph::Undirected(g) = g else {
            panic!("expected undirected")
        };
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(g.is_bipartite());
    }

    #[test]
    fn directed_header() {
        let g = parse_graph("# a comment\n2 1 directed\n\n1 2\n").unwrap();
        let AnyGraph::Directed(d) = g else {
            panic!("expected directed")
        };
        assert_eq!(d.arcs(), vec![(0, 1)]);
    }

    #[test]
    fn malformed_inputs() {
        let line = |text: &str| match parse_graph(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line(""), 0);
        assert_eq!(line("3"), 1);
        assert_eq!(line("3 1 sideways\n1 2"), 1);
        assert_eq!(line("3 1\n1 4"), 2);
        assert_eq!(line("3 1\n0 1"), 2);
        assert_eq!(line("3 2\n1 2\n2 1"), 3);
        assert_eq!(line("3 1\n2 2"), 2);
        assert_eq!(line("3 2\n1 2"), 1);
        assert_eq!(line("3 1\n1 2 3"), 2);
    }

    #[test]
    fn graph6_known_strings() {
        // P3 upper-triangle bits (0,1),(0,2),(1,2) = 101 -> 101000 -> 'g'
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let p3 = parse_graph6("Bg").unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.size(), 6);
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap(), k2);
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C~~").is_err());
    }

    #[test]
    fn graph6_round_trip_small() {
        let g = Graph::from_edges(7, &[(0, 6), (2, 3), (4, 5), (1, 6)]).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        let e = Graph::empty(0).unwrap();
        assert_eq!(to_graph6(&e), "?");
        assert_eq!(parse_graph6("?").unwrap(), e);
    }

    #[test]
    fn edge_list_round_trip() {
        let d: AnyGraph = Digraph::from_arcs(3, &[(0, 1), (1, 0), (2, 1)])
            .unwrap()
            .into();
        assert_eq!(parse_graph(&write_edge_list(&d)).unwrap(), d);
    }
}
