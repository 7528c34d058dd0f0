//! Graph serialization: graph6 (short form, n <= 62) and a plain
//! edge-list format ("n m" header, then one "u v" line per edge,
//! 0-based). Both round-trip losslessly; emission is canonical (sorted
//! edges, zero padding bits).

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_MAX_N: usize = 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl Format {
    pub fn from_flag(flag: &str) -> Result<Format> {
        match flag {
            "g6" => Ok(Format::Graph6),
            "edges" => Ok(Format::EdgeList),
            _ => Err(Error::input(format!("unknown format {flag:?}, expected g6 or edges"))),
        }
    }

    /// g6 for a .g6 extension, edge list for everything else.
    pub fn infer(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    }
}

/// Column-major upper-triangle pair order used by graph6: (0,1), (0,2),
/// (1,2), (0,3), (1,3), (2,3), ...
fn graph6_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Error::at_byte(0, "empty graph6 string"));
    }
    if bytes[0] == b'~' {
        return Err(Error::capacity(format!(
            "long-form graph6 header; only the short form (n <= {GRAPH6_MAX_N}) is supported"
        )));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(Error::at_byte(0, format!("invalid header byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    if bytes.len() < 1 + data_len {
        return Err(Error::at_byte(
            bytes.len(),
            format!("truncated: need {} data bytes for n = {n}", data_len),
        ));
    }
    if bytes.len() > 1 + data_len {
        return Err(Error::at_byte(1 + data_len, "trailing bytes after graph data"));
    }
    let mut vals = Vec::with_capacity(data_len);
    for (off, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(Error::at_byte(off, format!("invalid data byte {b}")));
        }
        vals.push(b - 63);
    }
    let bit_at = |k: usize| vals[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    for (k, (i, j)) in graph6_pairs(n).enumerate() {
        if bit_at(k) {
            g.add_edge(i, j).unwrap();
        }
    }
    for k in bits..data_len * 6 {
        if bit_at(k) {
            return Err(Error::at_byte(1 + k / 6, "nonzero padding bit"));
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::capacity(format!(
            "graph6 short form encodes at most {GRAPH6_MAX_N} vertices, got {n}"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut vals = vec![0u8; bits.div_ceil(6)];
    for (k, (i, j)) in graph6_pairs(n).enumerate() {
        if g.has_edge(i, j) {
            vals[k / 6] |= 1 << (5 - k % 6);
        }
    }
    let mut out = String::with_capacity(1 + vals.len());
    out.push((n as u8 + 63) as char);
    out.extend(vals.iter().map(|&v| (v + 63) as char));
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::at_line(1, "empty document, expected \"n m\" header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(Error::at_line(1, format!("expected \"n m\" header, got {header:?}")));
    };
    let n: usize = n
        .parse()
        .map_err(|_| Error::at_line(1, format!("vertex count {n:?} is not a number")))?;
    let m: usize = m
        .parse()
        .map_err(|_| Error::at_line(1, format!("edge count {m:?} is not a number")))?;
    let mut g = Graph::empty(n);
    let mut read = 0;
    for (idx, line) in lines {
        let lineno = idx + 1;
        if read == m {
            return Err(Error::at_line(lineno, format!("trailing content after {m} edges")));
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(Error::at_line(lineno, format!("expected \"u v\", got {line:?}")));
        };
        let parse_endpoint = |t: &str| -> Result<usize> {
            let x: usize = t
                .parse()
                .map_err(|_| Error::at_line(lineno, format!("endpoint {t:?} is not a number")))?;
            if x >= n {
                return Err(Error::at_line(
                    lineno,
                    format!("endpoint {x} out of range for {n} vertices"),
                ));
            }
            Ok(x)
        };
        let u = parse_endpoint(u)?;
        let v = parse_endpoint(v)?;
        if u == v {
            return Err(Error::at_line(lineno, format!("loop at vertex {u}")));
        }
        g.add_edge(u, v).unwrap();
        read += 1;
    }
    if read < m {
        return Err(Error::at_line(
            read + 2,
            format!("header promised {m} edges, found only {read}"),
        ));
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn emit(g: &Graph, format: Format) -> Result<String> {
    match format {
        Format::Graph6 => emit_graph6(g).map(|mut s| {
            s.push('\n');
            s
        }),
        Format::EdgeList => Ok(emit_edge_list(g)),
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

#[derive(Clone, Debug)]
pub enum DocSource {
    File(PathBuf),
    Generator(String),
    Inline,
}

/// A graph plus where it came from, for labeling CLI output.
#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub graph: Graph,
    pub label: String,
    pub source: DocSource,
}

pub fn read_graph_document(path: &Path, format: Option<Format>) -> Result<GraphDocument> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    let graph = parse(&text, format.unwrap_or_else(|| Format::infer(path)))?;
    let label = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("graph")
        .to_string();
    Ok(GraphDocument { graph, label, source: DocSource::File(path.to_path_buf()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, Graph};

    #[test]
    fn star_decodes_from_the_classic_string() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(emit_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn graph6_round_trips() {
        for g in [
            cycle_graph(5),
            complete_graph(7),
            Graph::empty(0),
            Graph::empty(1),
            Graph::empty(26),
            crate::families::petersen().graph,
        ] {
            let enc = emit_graph6(&g).unwrap();
            let back = parse_graph6(&enc).unwrap();
            assert_eq!(back.n(), g.n());
            assert_eq!(back.edges(), g.edges());
        }
    }

    #[test]
    fn graph6_rejects_malformed_input() {
        assert!(matches!(parse_graph6("~??"), Err(Error::Capacity(_))));
        let err = parse_graph6("D?").unwrap_err();
        assert_eq!(err.to_string(), "parse error at byte 2: truncated: need 2 data bytes for n = 5");
        assert!(parse_graph6("D?{{").unwrap_err().to_string().contains("byte 3"));
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?\x20").unwrap_err().to_string().contains("byte 2"));
        // n = 3 with a padding bit set
        assert!(parse_graph6("BC").unwrap_err().to_string().contains("padding"));
        // emit refuses n > 62
        assert!(matches!(emit_graph6(&Graph::empty(63)), Err(Error::Capacity(_))));
    }

    #[test]
    fn edge_list_round_trips_and_canonicalizes() {
        let g = parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        // unsorted, reversed endpoints come out canonical
        let g = parse_edge_list("4 2\n3 1\n1 0\n").unwrap();
        assert_eq!(emit_edge_list(&g), "4 2\n0 1\n1 3\n");
        // canonical emission is a fixed point of parse . emit
        let again = parse_edge_list(&emit_edge_list(&g)).unwrap();
        assert_eq!(emit_edge_list(&again), "4 2\n0 1\n1 3\n");
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("2 1\n0 2").unwrap_err().to_string(),
            "parse error at line 2: endpoint 2 out of range for 2 vertices"
        );
        assert!(parse_edge_list("").unwrap_err().to_string().contains("line 1"));
        assert!(parse_edge_list("3").unwrap_err().to_string().contains("line 1"));
        assert!(parse_edge_list("3 2\n0 1").unwrap_err().to_string().contains("line 3"));
        assert!(parse_edge_list("3 1\n0 1\n1 2").unwrap_err().to_string().contains("line 3"));
        assert!(parse_edge_list("3 1\n1 1").unwrap_err().to_string().contains("loop"));
        assert!(parse_edge_list("3 1\nx y").unwrap_err().to_string().contains("not a number"));
    }

    #[test]
    fn format_inference() {
        assert_eq!(Format::infer(Path::new("a/b/c.g6")), Format::Graph6);
        assert_eq!(Format::infer(Path::new("graph.txt")), Format::EdgeList);
        assert_eq!(Format::infer(Path::new("noext")), Format::EdgeList);
        assert!(Format::from_flag("dot").is_err());
    }
}
