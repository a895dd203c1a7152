//! Plain-text graph and list-assignment formats.
//!
//! Graph files hold either a single `parts:` line (complete multipartite) or
//! a `vertices:` line followed by `edge:` lines. Assignment files hold one
//! `list <vertex>: <color> ...` line per vertex. Blank lines and `#` comments
//! are ignored everywhere. Color names are bare tokens; `0` is an ordinary
//! color. Dumping and re-parsing reproduces an identical instance, palette
//! order included.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::list::ListAssignment;
use crate::params::{Certificate, CertifiedBounds};

pub fn format_graph(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(sizes) = g.part_sizes() {
        out.push_str("parts:");
        for s in sizes {
            out.push_str(&format!(" {s}"));
        }
        out.push('\n');
    } else {
        out.push_str(&format!("vertices: {}\n", g.vertex_count()));
        for u in 0..g.vertex_count() {
            for v in (u + 1)..g.vertex_count() {
                if g.has_edge(u, v) {
                    out.push_str(&format!("edge: {u} {v}\n"));
                }
            }
        }
    }
    out
}

pub fn format_lists(l: &ListAssignment) -> String {
    let g = l.graph();
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        out.push_str(&format!("list {}:", g.label(v)));
        for name in l.list_names(v) {
            out.push_str(&format!(" {name}"));
        }
        out.push('\n');
    }
    out
}

/// Certificate headers plus, where one exists, the witness assignment in the
/// standard graph and list formats.
pub fn format_certificate(bounds: &CertifiedBounds, side: &str) -> String {
    let (value, cert) = match side {
        "lower" => (bounds.lower, &bounds.lower_cert),
        _ => (bounds.upper, &bounds.upper_cert),
    };
    let mut out = String::new();
    out.push_str(&format!(
        "certificate: {} {side}-bound {value}\n",
        bounds.parameter
    ));
    out.push_str(&format!("basis: {}\n", cert.summary()));
    match cert {
        Certificate::HallWitness { cert, floor } => {
            out.push_str(&format!("exhaustion: min list size {floor}\n"));
            out.push_str(&format_graph(cert.assignment.graph()));
            out.push_str(&format_lists(&cert.assignment));
        }
        Certificate::BadAssignment { cert, list_size } => {
            out.push_str(&format!("exhaustion: all lists of size {list_size}\n"));
            out.push_str(&format_graph(cert.assignment.graph()));
            out.push_str(&format_lists(&cert.assignment));
        }
        _ => {}
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(src: &'a str) -> Self {
        Lines {
            inner: src.lines().enumerate(),
        }
    }

    /// Next meaningful line as (1-based number, trimmed content).
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (idx, raw) in self.inner.by_ref() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((idx + 1, line));
        }
        None
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn strip_keyword<'a>(line: &'a str, keyword: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(keyword)?;
    if rest.is_empty() {
        Some(rest)
    } else if rest.starts_with(' ') || rest.starts_with('\t') {
        Some(rest.trim_start())
    } else {
        None
    }
}

pub fn parse_graph(src: &str) -> Result<Graph> {
    let mut lines = Lines::new(src);
    let (first_no, first) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty graph file"))?;

    if let Some(rest) = first.strip_prefix("parts:") {
        let sizes: Vec<usize> = rest
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| parse_err(first_no, format!("bad part size `{tok}`")))
            })
            .collect::<Result<_>>()?;
        if sizes.is_empty() {
            return Err(parse_err(first_no, "parts: needs at least one size"));
        }
        if let Some((no, line)) = lines.next() {
            return Err(parse_err(
                no,
                format!("unexpected line after parts: `{line}`"),
            ));
        }
        return Graph::complete_multipartite(&sizes);
    }

    if let Some(rest) = first.strip_prefix("vertices:") {
        let n: usize = rest
            .trim()
            .parse()
            .map_err(|_| parse_err(first_no, format!("bad vertex count `{}`", rest.trim())))?;
        let mut edges = Vec::new();
        while let Some((no, line)) = lines.next() {
            let rest = strip_keyword(line, "edge:")
                .ok_or_else(|| parse_err(no, format!("expected `edge: i j`, got `{line}`")))?;
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(parse_err(no, "edge: needs exactly two endpoints"));
            }
            let u: usize = toks[0]
                .parse()
                .map_err(|_| parse_err(no, format!("bad vertex `{}`", toks[0])))?;
            let v: usize = toks[1]
                .parse()
                .map_err(|_| parse_err(no, format!("bad vertex `{}`", toks[1])))?;
            if u >= n || v >= n {
                return Err(parse_err(no, format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(parse_err(no, format!("loop at vertex {u}")));
            }
            edges.push((u, v));
        }
        return Graph::from_edges(n, &edges);
    }

    Err(parse_err(
        first_no,
        format!("expected `parts:` or `vertices:`, got `{first}`"),
    ))
}

pub fn parse_lists(src: &str, g: &Graph) -> Result<ListAssignment> {
    let n = g.vertex_count();
    let mut lists: Vec<Option<Vec<String>>> = vec![None; n];
    let mut lines = Lines::new(src);
    while let Some((no, line)) = lines.next() {
        let rest = strip_keyword(line, "list")
            .ok_or_else(|| parse_err(no, format!("expected `list <vertex>: ...`, got `{line}`")))?;
        let (vertex_tok, colors) = rest
            .split_once(':')
            .ok_or_else(|| parse_err(no, "missing `:` after the vertex name"))?;
        let vertex_tok = vertex_tok.trim();
        let v = g
            .vertex_by_name(vertex_tok)
            .ok_or_else(|| parse_err(no, format!("unknown vertex `{vertex_tok}`")))?;
        if lists[v].is_some() {
            return Err(parse_err(no, format!("duplicate list for `{vertex_tok}`")));
        }
        lists[v] = Some(colors.split_whitespace().map(String::from).collect());
    }
    for (v, slot) in lists.iter().enumerate() {
        if slot.is_none() {
            return Err(parse_err(
                0,
                format!("no list line for vertex `{}`", g.label(v)),
            ));
        }
    }
    let lists: Vec<Vec<String>> = lists.into_iter().map(|s| s.unwrap()).collect();
    ListAssignment::new(g.clone(), &lists)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn graph_round_trip_multipartite() {
        let g = Graph::complete_multipartite(&[4, 2, 2]).unwrap();
        let text = format_graph(&g);
        assert_eq!(text, "parts: 4 2 2\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn graph_round_trip_general() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        let text = format_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn lists_round_trip_keeps_palette_order() {
        let (_, l) = constructions::figure1().unwrap();
        let text = format_lists(&l);
        let parsed = parse_lists(&text, l.graph()).unwrap();
        assert_eq!(parsed, l);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_graph("vertices: 3\nedge: 0 9\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        let err = parse_graph("nonsense\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));

        let g = Graph::complete_multipartite(&[2, 2]).unwrap();
        let err = parse_lists("list u1: a\n", &g).unwrap_err();
        assert!(matches!(err, Error::Parse { .. })); // v1, u2, v2 missing

        let err = parse_lists("list zz: a\n", &g).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let g = parse_graph("# a comment\n\nparts: 2 2\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        let l = parse_lists(
            "# lists\nlist u1: a\nlist v1: a\n\nlist u2: b\nlist v2: b\n",
            &g,
        )
        .unwrap();
        assert_eq!(l.palette().names(), &["a", "b"]);
    }

    #[test]
    fn empty_list_lines_parse() {
        let g = Graph::complete_multipartite(&[2, 2]).unwrap();
        let l = parse_lists("list u1: a\nlist v1:\nlist u2: a\nlist v2: a\n", &g).unwrap();
        assert_eq!(l.list_size(1), 0);
    }
}
