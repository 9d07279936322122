//! Lazy graph6 line streams.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graphs::{parse_graph6, Graph};

/// One non-blank line of a graph6 stream, tagged with its 1-based line
/// number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph6Line {
    pub line: usize,
    pub graph: Result<Graph>,
}

/// Iterator over the graphs of a graph6 source. Blank lines and `>>graph6<<`
/// header-only lines are skipped; read errors end the stream with an
/// `Io` item.
pub struct Graph6Stream<R> {
    reader: R,
    line: usize,
    buf: String,
    done: bool,
}

pub fn stream_graph6<R: BufRead>(reader: R) -> Graph6Stream<R> {
    Graph6Stream { reader, line: 0, buf: String::new(), done: false }
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Graph6Line;

    fn next(&mut self) -> Option<Graph6Line> {
        while !self.done {
            self.buf.clear();
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => self.done = true,
                Ok(_) => {
                    self.line += 1;
                    let t = self.buf.trim_end_matches(['\n', '\r']);
                    if t.trim().is_empty() || t == ">>graph6<<" {
                        continue;
                    }
                    let graph = parse_graph6(t).map_err(|e| Error::AtLine { line: self.line, source: Box::new(e) });
                    return Some(Graph6Line { line: self.line, graph });
                }
                Err(e) => {
                    self.done = true;
                    self.line += 1;
                    return Some(Graph6Line { line: self.line, graph: Err(e.into()) });
                }
            }
        }
        None
    }
}

/// Apply the strictness policy: with `strict`, the first malformed line
/// becomes an error; otherwise malformed lines are counted and dropped.
pub fn collect_strict<I: Iterator<Item = Graph6Line>>(it: I, strict: bool) -> Result<(Vec<(usize, Graph)>, usize)> {
    let mut out = Vec::new();
    let mut skipped = 0;
    for item in it {
        match item.graph {
            Ok(g) => out.push((item.line, g)),
            Err(e) if strict => return Err(e),
            Err(_) => skipped += 1,
        }
    }
    Ok((out, skipped))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::complete;

    #[test]
    fn three_cliques_in_order() {
        let text = "A_\nBw\nC~\n";
        let gs: Vec<Graph> = stream_graph6(text.as_bytes()).map(|l| l.graph.unwrap()).collect();
        assert_eq!(gs, vec![complete(2).unwrap(), complete(3).unwrap(), complete(4).unwrap()]);
    }

    #[test]
    fn empty_source() {
        assert_eq!(stream_graph6("".as_bytes()).count(), 0);
        assert_eq!(stream_graph6("\n\n".as_bytes()).count(), 0);
    }

    #[test]
    fn malformed_line_cites_its_number() {
        let text = "A_\nB!\nBw\n";
        let err = collect_strict(stream_graph6(text.as_bytes()), true).unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 2, .. }), "{err:?}");
        let (ok, skipped) = collect_strict(stream_graph6(text.as_bytes()), false).unwrap();
        assert_eq!((ok.len(), skipped), (2, 1));
        assert_eq!(ok[1].0, 3);
    }

    #[test]
    fn crlf_and_header() {
        let text = ">>graph6<<A_\r\nBw\r\n";
        let v: Vec<_> = stream_graph6(text.as_bytes()).map(|l| l.graph.unwrap().order()).collect();
        assert_eq!(v, [2, 3]);
    }
}
