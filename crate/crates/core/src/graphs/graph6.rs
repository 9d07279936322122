//! The graph6 interchange format, restricted to orders `n <= 62`.
//!
//! A word is one size byte `n + 63` followed by the upper triangle of the
//! adjacency matrix, column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte, each byte offset by 63. Trailing padding bits
//! are zero.

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

const MAX_G6_ORDER: usize = 62;
const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Parse one graph6 word. A trailing newline and the optional `>>graph6<<`
/// header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let (skip, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };

    let Some(&size) = body.first() else {
        return Err(err(skip, "empty input"));
    };
    if !(63..=126).contains(&size) {
        return Err(err(skip, format!("size byte {size:#04x} outside 63..=126")));
    }
    if size == 126 {
        return Err(Error::Unsupported(format!(
            "graph6 words with n > {MAX_G6_ORDER} are not supported"
        )));
    }
    let n = (size - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    let data = &body[1..];

    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(skip + 1 + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    if data.len() < want {
        return Err(err(
            skip + 1 + data.len(),
            format!("truncated: n={n} needs {want} data bytes, found {}", data.len()),
        ));
    }
    if data.len() > want {
        return Err(err(skip + 1 + want, "trailing bytes after graph6 word"));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = data[want - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(skip + want, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Encode a graph of order at most 62.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_G6_ORDER {
        return Err(Error::Unsupported(format!(
            "graph6 encoding supports n <= {MAX_G6_ORDER}, got {n}"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, Graph};

    #[test]
    fn known_words() {
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3).unwrap());
        assert_eq!(parse_graph6("?").unwrap(), Graph::null());
        assert_eq!(encode_graph6(&complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(encode_graph6(&Graph::empty(2).unwrap()).unwrap(), "A?");
        assert_eq!(encode_graph6(&Graph::null()).unwrap(), "?");
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), complete(3).unwrap());
        assert_eq!(parse_graph6("Bw\r\n").unwrap(), complete(3).unwrap());
    }

    #[test]
    fn malformed_words_report_offsets() {
        match parse_graph6("") {
            Err(Error::Graph6 { offset: 0, .. }) => {}
            other => panic!("{other:?}"),
        }
        // n = 3 needs one data byte
        match parse_graph6("B") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("BwX") {
            Err(Error::Graph6 { offset: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_graph6("B w") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        // padding bit set: n = 3 uses 3 of 6 bits
        match parse_graph6("Bx") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_graph6("~?"), Err(Error::Unsupported(_))));
    }

    #[test]
    fn encode_rejects_large() {
        let g = Graph::empty(63).unwrap();
        assert!(matches!(encode_graph6(&g), Err(Error::Unsupported(_))));
    }
}
