//! graph6 (short form) and the plain edge-list text format.

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_MAX_ORDER: usize = 62;

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::MalformedGraph6("empty line".into()));
    };
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")));
    }
    if first == 126 {
        return Err(Error::UnsupportedOrder(GRAPH6_MAX_ORDER + 1));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::MalformedGraph6("order 0".into()));
    }
    let pairs = n * (n - 1) / 2;
    let expected = 1 + pairs.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "order {n} needs {expected} bytes, got {}",
            bytes.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` in graph6 short form (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::UnsupportedOrder(n));
    }
    let mut out = Vec::with_capacity(1 + (n * n).div_ceil(12));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    let [n, m] = parse_pair(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        let [u, v] = parse_pair(ln, l)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hl,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    let g = Graph::new(n, &edges)?;
    if g.size() != m {
        return Err(Error::Parse {
            line: hl,
            message: "duplicate edges in list".into(),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(Error::Parse {
            line,
            message: format!("expected two integers, got {text:?}"),
        }),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
