//! Plain-text facet files.
//!
//! ```text
//! n 3
//! 0 1
//! 1 2
//! ```
//!
//! The first line gives the ground-set size. Every further line is one facet
//! as space-separated 0-based vertex indices. The literal line `empty` is the
//! empty face (so a file whose only facet line is `empty` describes `{∅}`),
//! and `void` describes the void complex. Blank lines and lines starting with
//! `#` are skipped.

use super::Complex;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::FacetFile {
        line,
        message: message.into(),
    }
}

pub fn parse_facet_file(text: &str) -> Result<Complex> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header line `n <count>`"))?;
    let n: usize = header
        .strip_prefix("n ")
        .and_then(|rest| rest.trim().parse().ok())
        .ok_or_else(|| err(hline, format!("expected `n <count>`, found `{header}`")))?;

    let mut facets = Vec::new();
    let mut void = false;
    let mut any = false;
    for (no, line) in lines {
        any = true;
        match line {
            "void" => void = true,
            "empty" => facets.push(VertexSet::EMPTY),
            _ => {
                let mut f = VertexSet::EMPTY;
                for tok in line.split_whitespace() {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| err(no, format!("not a vertex index: `{tok}`")))?;
                    if v >= n {
                        return Err(err(no, format!("vertex {v} out of range for n={n}")));
                    }
                    f.insert(v);
                }
                facets.push(f);
            }
        }
    }
    if !any {
        return Err(err(hline, "no facet lines; write `void` or `empty` explicitly"));
    }
    if void {
        if !facets.is_empty() {
            return Err(err(hline, "`void` cannot be combined with facets"));
        }
        return Ok(Complex::void(n));
    }
    Complex::from_facets(n, facets)
}

pub fn write_facet_file(k: &Complex) -> String {
    let mut out = format!("n {}\n", k.ground_size());
    if k.is_void() {
        out.push_str("void\n");
        return out;
    }
    for f in k.facets() {
        if f.is_empty() {
            out.push_str("empty\n");
        } else {
            let items: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            out.push_str(&items.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_cases() {
        for k in [
            Complex::void(3),
            Complex::empty(0),
            Complex::empty(2),
            Complex::sphere0(),
            Complex::from_lists(4, &[&[0, 1, 2], &[2, 3]]).unwrap(),
        ] {
            assert_eq!(parse_facet_file(&write_facet_file(&k)).unwrap(), k);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_facet_file(""), Err(Error::FacetFile { .. })));
        assert!(matches!(parse_facet_file("n x\n0\n"), Err(Error::FacetFile { line: 1, .. })));
        assert!(matches!(parse_facet_file("n 2\n0 5\n"), Err(Error::FacetFile { line: 2, .. })));
        assert!(matches!(parse_facet_file("n 2\n0 a\n"), Err(Error::FacetFile { line: 2, .. })));
        assert!(parse_facet_file("n 2\n").is_err());
        assert!(parse_facet_file("n 2\nvoid\n0\n").is_err());
    }

    #[test]
    fn generators_are_maximalised() {
        let k = parse_facet_file("n 3\n# comment\n0\n0 1\n\n1 2\n").unwrap();
        assert_eq!(k.facets().len(), 2);
    }
}
