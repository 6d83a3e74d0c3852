//! Plain-text instance formats.
//!
//! ```text
//! p edge <n> <m>        p matrix <n>          p euc2d <n>
//! e <u> <v> <cost>      <n decimals> x n      <x> <y> x n
//! ```
//!
//! Lines starting with `c` are comments; blank lines are skipped. Vertex ids
//! are 0-based. Matrix and coordinate instances become complete graphs with
//! edges listed in `(0,1), (0,2), ..., (n-2,n-1)` order.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{check_record, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Edge,
    Matrix,
    Euc2d,
}

impl Format {
    fn keyword(self) -> &'static str {
        match self {
            Format::Edge => "edge",
            Format::Matrix => "matrix",
            Format::Euc2d => "euc2d",
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge" => Ok(Format::Edge),
            "matrix" => Ok(Format::Matrix),
            "euc2d" => Ok(Format::Euc2d),
            _ => Err(Error::InvalidParameter(format!("unknown format {s:?}"))),
        }
    }
}

fn ingest(line: usize, reason: impl Into<String>) -> Error {
    Error::Ingest { line, reason: reason.into() }
}

fn parse_num<T: FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| ingest(line, format!("cannot parse {what} {tok:?}")))
}

fn parse_real(line: usize, tok: &str, what: &str) -> Result<f64> {
    let v: f64 = parse_num(line, tok, what)?;
    if !v.is_finite() {
        return Err(ingest(line, format!("{what} {tok:?} is not finite")));
    }
    Ok(v)
}

/// Non-comment lines with their 1-based numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first() {
            None => None,
            Some(t) if t.starts_with('c') => None,
            Some(_) => Some((i + 1, toks)),
        }
    })
}

/// Parses an instance. When `expect` is given the header must match it.
pub fn parse_instance(text: &str, expect: Option<Format>) -> Result<Graph> {
    let mut recs = records(text);
    let (hline, header) = recs.next().ok_or_else(|| ingest(1, "missing `p` header"))?;
    if header[0] != "p" || header.len() < 3 {
        return Err(ingest(hline, "expected header `p <format> <n> ...`"));
    }
    let format: Format = header[1]
        .parse()
        .map_err(|_| ingest(hline, format!("unknown format {:?}", header[1])))?;
    if let Some(want) = expect {
        if want != format {
            return Err(ingest(
                hline,
                format!("expected `p {}` header, found `p {}`", want.keyword(), format.keyword()),
            ));
        }
    }
    let n: usize = parse_num(hline, header[2], "vertex count")?;
    match format {
        Format::Edge => {
            if header.len() != 4 {
                return Err(ingest(hline, "expected `p edge <n> <m>`"));
            }
            let m: usize = parse_num(hline, header[3], "edge count")?;
            parse_edges(recs, hline, n, m)
        }
        Format::Matrix | Format::Euc2d if header.len() != 3 => {
            Err(ingest(hline, format!("expected `p {} <n>`", format.keyword())))
        }
        Format::Matrix => parse_matrix(recs, hline, n),
        Format::Euc2d => parse_coords(recs, hline, n),
    }
}

fn parse_edges<'a>(
    recs: impl Iterator<Item = (usize, Vec<&'a str>)>,
    hline: usize,
    n: usize,
    m: usize,
) -> Result<Graph> {
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (line, toks) in recs {
        last = line;
        if toks[0] != "e" || toks.len() != 4 {
            return Err(ingest(line, "expected `e <u> <v> <cost>`"));
        }
        if edges.len() == m {
            return Err(ingest(line, format!("more than the declared {m} edges")));
        }
        let u: usize = parse_num(line, toks[1], "vertex")?;
        let v: usize = parse_num(line, toks[2], "vertex")?;
        let cost: f64 = parse_num(line, toks[3], "cost")?;
        check_record(n, u, v, cost).map_err(|r| ingest(line, r))?;
        edges.push((u, v, cost));
    }
    if edges.len() != m {
        return Err(ingest(last, format!("declared {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

fn parse_matrix<'a>(
    recs: impl Iterator<Item = (usize, Vec<&'a str>)>,
    hline: usize,
    n: usize,
) -> Result<Graph> {
    let mut rows: Vec<(usize, Vec<f64>)> = Vec::with_capacity(n);
    let mut last = hline;
    for (line, toks) in recs {
        last = line;
        if rows.len() == n {
            return Err(ingest(line, format!("more than the declared {n} rows")));
        }
        if toks.len() != n {
            return Err(ingest(line, format!("expected {n} entries, found {}", toks.len())));
        }
        let row = toks
            .iter()
            .map(|t| parse_real(line, t, "entry"))
            .collect::<Result<Vec<f64>>>()?;
        rows.push((line, row));
    }
    if rows.len() != n {
        return Err(ingest(last, format!("declared {n} rows, found {}", rows.len())));
    }
    for (i, (line, row)) in rows.iter().enumerate() {
        if row[i] != 0.0 {
            return Err(ingest(*line, format!("diagonal entry {i} is {}, expected 0", row[i])));
        }
        for j in 0..i {
            if row[j] != rows[j].1[i] {
                return Err(ingest(
                    *line,
                    format!("matrix is not symmetric at ({i}, {j}): {} vs {}", row[j], rows[j].1[i]),
                ));
            }
            if row[j] < 0.0 {
                return Err(ingest(*line, format!("negative cost {} at ({i}, {j})", row[j])));
            }
        }
    }
    Graph::new(n, complete_pairs(n).map(|(i, j)| (i, j, rows[i].1[j])))
}

fn parse_coords<'a>(
    recs: impl Iterator<Item = (usize, Vec<&'a str>)>,
    hline: usize,
    n: usize,
) -> Result<Graph> {
    let mut pts = Vec::with_capacity(n);
    let mut last = hline;
    for (line, toks) in recs {
        last = line;
        if pts.len() == n {
            return Err(ingest(line, format!("more than the declared {n} points")));
        }
        if toks.len() != 2 {
            return Err(ingest(line, "expected `<x> <y>`"));
        }
        pts.push((parse_real(line, toks[0], "coordinate")?, parse_real(line, toks[1], "coordinate")?));
    }
    if pts.len() != n {
        return Err(ingest(last, format!("declared {n} points, found {}", pts.len())));
    }
    Ok(euclidean_graph(&pts))
}

fn complete_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Euclidean distance rounded to the nearest 1e-9.
pub fn rounded_distance(a: (f64, f64), b: (f64, f64)) -> f64 {
    ((a.0 - b.0).hypot(a.1 - b.1) * 1e9).round() / 1e9
}

/// Complete graph on points with rounded Euclidean costs.
pub fn euclidean_graph(pts: &[(f64, f64)]) -> Graph {
    Graph::new(
        pts.len(),
        complete_pairs(pts.len()).map(|(i, j)| (i, j, rounded_distance(pts[i], pts[j]))),
    )
    .expect("finite coordinates give valid edges")
}

pub fn read_instance(path: &Path, expect: Option<Format>) -> Result<Graph> {
    parse_instance(&std::fs::read_to_string(path)?, expect)
}

/// Edge-list text that round-trips through [`parse_instance`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for e in g.edges() {
        // `{}` on f64 is the shortest representation that parses back exactly
        let _ = writeln!(s, "e {} {} {}", e.u, e.v, e.cost);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_format() {
        let g = parse_instance("c triangle\np edge 3 3\ne 0 1 1.5\n\ne 1 2 2\ne 2 0 3\n", None).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(g.cost(0), 1.5);
        let back = parse_instance(&write_edge_list(&g), Some(Format::Edge)).unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = [
            ("p edge 3 1\ne 0 0 1\n", 2),
            ("p edge 3 1\ne 0 1 -1\n", 2),
            ("p edge 3 1\ne 0 1 NaN\n", 2),
            ("p edge 3 1\ne 0 5 1\n", 2),
            ("p edge 3 2\ne 0 1 1\n", 2),
            ("c x\np edge 3 1\ne 0 1 1\ne 1 2 1\n", 4),
            ("p edge 3 1\nx 0 1 1\n", 2),
            ("p matrix 2\n0 1\n2 0\n", 3),
            ("p matrix 2\n1 1\n1 0\n", 2),
            ("p euc2d 2\n0 0\n", 2),
            ("p graph 2\n", 1),
            ("", 1),
        ];
        for (text, line) in bad {
            match parse_instance(text, None) {
                Err(Error::Ingest { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn matrix_and_coordinates() {
        let g = parse_instance("p matrix 3\n0 1 2\n1 0 3\n2 3 0\n", Some(Format::Matrix)).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.edges().iter().map(|e| e.cost).collect::<Vec<_>>(), vec![1.0, 2.0, 3.0]);

        let g = parse_instance("p euc2d 3\n0 0\n3 4\n1 1\n", None).unwrap();
        assert_eq!(g.cost(0), 5.0);
        assert_eq!(g.cost(1).to_string(), "1.414213562");
        assert!(parse_instance("p euc2d 1\n0 0\n", Some(Format::Edge)).is_err());
    }
}
