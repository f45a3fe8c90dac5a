//! Text formats and CLI spec strings.
//!
//! Graph files: first line `n m`, then `m` lines `i j` with 0-based vertex
//! ids. Complex files: first line `n`, then one facet per line as
//! space-separated vertex ids, a single `-` for the empty-face complex; an
//! empty file is the void complex. Generator specs look like `grid:3,4`,
//! `prism:5`, `wn:9`, `cycle:8`, `kmn:2,3`, `path:6`, `complete:4`,
//! `edgeless:5`.

use std::path::Path;

use crate::complex::{from_facets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{family, make_graph, Family, Graph};
use crate::vset::VertexSet;

/// Parses a family spec string such as `grid:3,4` or `wn:9`.
pub fn parse_family_spec(s: &str) -> Result<Graph> {
    let (name, args) = match s.split_once(':') {
        Some((n, a)) => (n.trim(), a.trim()),
        None => return Err(Error::Parse(format!("not a family spec: `{s}`"))),
    };
    let nums: Vec<usize> = args
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad number `{p}` in spec `{s}`")))
        })
        .collect::<Result<_>>()?;
    let one = || -> Result<usize> {
        if nums.len() == 1 {
            Ok(nums[0])
        } else {
            Err(Error::Parse(format!("spec `{s}` wants one parameter")))
        }
    };
    let two = || -> Result<(usize, usize)> {
        if nums.len() == 2 {
            Ok((nums[0], nums[1]))
        } else {
            Err(Error::Parse(format!("spec `{s}` wants two parameters")))
        }
    };
    match name.to_ascii_lowercase().as_str() {
        "path" => family(Family::Path(one()?)),
        "cycle" => family(Family::Cycle(one()?)),
        "complete" | "kn" => family(Family::Complete(one()?)),
        "edgeless" => family(Family::Edgeless(one()?)),
        "kmn" => {
            let (m, n) = two()?;
            family(Family::CompleteBipartite(m, n))
        }
        "prism" => family(Family::Prism(one()?)),
        "grid" => {
            let (m, n) = two()?;
            family(Family::Grid(m, n))
        }
        "wn" | "squared_cycle" => family(Family::SquaredCycle(one()?)),
        other => Err(Error::Parse(format!("unknown family `{other}`"))),
    }
}

/// A graph from either a family spec or a graph file path.
pub fn graph_from_spec_or_file(s: &str) -> Result<Graph> {
    if s.contains(':') {
        parse_family_spec(s)
    } else if Path::new(s).exists() {
        read_graph(Path::new(s))
    } else {
        Err(Error::Parse(format!(
            "`{s}` is neither a family spec (name:params) nor an existing file"
        )))
    }
}

pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("graph header wants `n m`".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("graph header wants `n m`".into()))?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse("fewer edge lines than the header promised".into()))?;
        let mut it = line.split_whitespace();
        let i: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))?;
        let j: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))?;
        edges.push((i, j));
    }
    make_graph(n, &edges)
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph_text(&std::fs::read_to_string(path)?)
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<()> {
    Ok(std::fs::write(path, graph_to_text(g))?)
}

pub fn complex_to_text(c: &SimplicialComplex) -> String {
    if c.is_void() {
        return String::new();
    }
    let mut out = format!("{}\n", c.ground());
    for f in c.facets() {
        if f.is_empty() {
            out.push_str("-\n");
        } else {
            let ids: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            out.push_str(&ids.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_complex_text(text: &str) -> Result<SimplicialComplex> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let Some(header) = lines.next() else {
        return from_facets(0, Vec::new());
    };
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Parse("complex header wants the ground size `n`".into()))?;
    let mut facets = Vec::new();
    for line in lines {
        let line = line.trim();
        if line == "-" {
            facets.push(VertexSet::EMPTY);
            continue;
        }
        let mut f = VertexSet::EMPTY;
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex `{tok}` in facet line")))?;
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            f = f.with(v);
        }
        facets.push(f);
    }
    from_facets(n, facets)
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    parse_complex_text(&std::fs::read_to_string(path)?)
}

pub fn write_complex(path: &Path, c: &SimplicialComplex) -> Result<()> {
    Ok(std::fs::write(path, complex_to_text(c))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Kind;
    use crate::testutil::vs;

    #[test]
    fn family_specs_round_trip() {
        assert_eq!(parse_family_spec("grid:3,4").unwrap().n(), 12);
        assert_eq!(parse_family_spec("prism:5").unwrap().n(), 10);
        assert_eq!(parse_family_spec("wn:9").unwrap().edge_count(), 18);
        assert_eq!(parse_family_spec("cycle:8").unwrap().edge_count(), 8);
        assert_eq!(parse_family_spec("kmn:2,3").unwrap().edge_count(), 6);
        assert!(parse_family_spec("blob:3").is_err());
        assert!(parse_family_spec("grid:3").is_err());
        assert!(parse_family_spec("grid").is_err());
    }

    #[test]
    fn graph_text_round_trip() {
        let g = crate::testutil::example_graph();
        let text = graph_to_text(&g);
        assert!(text.starts_with("6 6\n"));
        let h = parse_graph_text(&text).unwrap();
        assert_eq!(g, h);
        assert!(parse_graph_text("").is_err());
        assert!(parse_graph_text("2 1\n").is_err());
    }

    #[test]
    fn complex_text_round_trip() {
        let c = from_facets(5, vec![vs([0, 2, 4]), vs([1, 3])]).unwrap();
        let text = complex_to_text(&c);
        assert_eq!(parse_complex_text(&text).unwrap(), c);
        // void complex: empty file
        let void = from_facets(0, vec![]).unwrap();
        assert_eq!(complex_to_text(&void), "");
        assert_eq!(parse_complex_text("").unwrap().kind(), Kind::Void);
        // empty-face complex: a lone dash
        let empty = from_facets(3, vec![VertexSet::EMPTY]).unwrap();
        let text = complex_to_text(&empty);
        assert_eq!(text, "3\n-\n");
        assert_eq!(parse_complex_text(&text).unwrap().kind(), Kind::EmptyFace);
        assert!(parse_complex_text("2\n0 5\n").is_err());
    }
}
