//! The `.sdraw` exchange format: UTF-8, line-oriented, `#` comments.
//!
//! ```text
//! classes: r=2 b=3                  # class name = size; vertices r1..r2, b1..b3
//! rot r1: b1 b2 b3                  # clockwise rotation, one line per vertex
//! edge r1-b2: x r2-b1 [r1 b1 b2 r2] # crossings in order from the first-written endpoint
//! edge r1-b1:                       # uncrossed edge; every edge must appear
//! ```
//!
//! The serializer writes every edge from its canonical source (the endpoint
//! of the earlier-declared class). The parser also accepts edge lines
//! written from the other endpoint and reverses the entry list.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::model::{
    CrossingEntry, CrossingRotation, Drawing, Edge, PartitionedGraph, Rotation, StructureError,
    Vertex,
};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {0}: syntax error: {1}")]
    SyntaxError(usize, String),
    #[error("line {0}: unknown vertex {1:?}")]
    UnknownVertex(usize, String),
    #[error("line {0}: edge {1:?} has both endpoints in one class")]
    SameClassEdge(usize, String),
    #[error("line {0}: edge pair listed twice along one edge")]
    DuplicateCrossingPair(usize),
    #[error("line {0}: crossing rotation does not alternate between the two edges")]
    NonAntipodalCrossing(usize),
    #[error("the two entries of a crossing disagree ({0})")]
    ReciprocityViolation(String),
    #[error("line {0}: adjacent edges may not cross")]
    AdjacentEdgesCross(usize),
    #[error("a drawing needs at least two partition classes")]
    SingleClassGraph,
    #[error("{0}")]
    Structure(StructureError),
}

/// Parses `.sdraw` text into a structurally validated drawing.
/// Planarizability is not checked here; see [`crate::map::validate`].
pub fn parse_drawing(text: &str) -> Result<Drawing, ParseError> {
    let mut graph: Option<PartitionedGraph> = None;
    let mut rotations: BTreeMap<Vertex, Rotation> = BTreeMap::new();
    let mut rotation_lines: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut crossings: BTreeMap<Edge, Vec<CrossingEntry>> = BTreeMap::new();
    let mut edge_lines: BTreeMap<Edge, usize> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let lno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }

        if let Some(rest) = line.strip_prefix("classes:") {
            if graph.is_some() {
                return Err(ParseError::SyntaxError(lno, "duplicate classes line".into()));
            }
            graph = Some(parse_classes(rest, lno)?);
            continue;
        }
        let g = graph
            .as_ref()
            .ok_or_else(|| ParseError::SyntaxError(lno, "expected classes line first".into()))?;

        if let Some(rest) = line.strip_prefix("rot ") {
            let (head, tail) = split_colon(rest, lno)?;
            let v = resolve_vertex(g, head.trim(), lno)?;
            let mut seq = Vec::new();
            for tok in tail.split_whitespace() {
                seq.push(resolve_vertex(g, tok, lno)?);
            }
            if rotation_lines.insert(v, lno).is_some() {
                return Err(ParseError::SyntaxError(lno, format!("duplicate rot line for {head}")));
            }
            rotations.insert(v, Rotation::new(seq));
        } else if let Some(rest) = line.strip_prefix("edge ") {
            let (head, tail) = split_colon(rest, lno)?;
            let (u, w) = resolve_edge_name(g, head.trim(), lno)?;
            let edge = Edge::new(u, w)
                .map_err(|_| ParseError::SameClassEdge(lno, head.trim().to_string()))?;
            let written_from_source = edge.source() == u;
            let mut entries = parse_entries(g, tail, lno)?;
            for (partner, _) in &entries {
                if edge.shares_endpoint(partner) {
                    return Err(ParseError::AdjacentEdgesCross(lno));
                }
            }
            if !written_from_source {
                entries.reverse();
            }
            if edge_lines.insert(edge, lno).is_some() {
                return Err(ParseError::SyntaxError(lno, format!("duplicate edge line for {head}")));
            }
            crossings.insert(edge, entries);
        } else {
            return Err(ParseError::SyntaxError(lno, format!("unrecognized line {line:?}")));
        }
    }

    let graph = graph.ok_or(ParseError::SyntaxError(0, "missing classes line".into()))?;
    Drawing::from_parts(graph, rotations, crossings).map_err(|err| match err {
        StructureError::DuplicateCrossingPair(e, f) => {
            ParseError::DuplicateCrossingPair(edge_lines.get(&e).copied().unwrap_or_else(|| {
                let _ = f;
                0
            }))
        }
        StructureError::NonAntipodalCrossing(e, _) => {
            ParseError::NonAntipodalCrossing(edge_lines.get(&e).copied().unwrap_or(0))
        }
        StructureError::AdjacentEdgesCross(e, _) => {
            ParseError::AdjacentEdgesCross(edge_lines.get(&e).copied().unwrap_or(0))
        }
        StructureError::ReciprocityViolation(e, f) => {
            ParseError::ReciprocityViolation(format!("edges at lines {:?} and {:?}",
                edge_lines.get(&e).copied().unwrap_or(0),
                edge_lines.get(&f).copied().unwrap_or(0)))
        }
        other => ParseError::Structure(other),
    })
}

fn parse_classes(rest: &str, lno: usize) -> Result<PartitionedGraph, ParseError> {
    let mut classes = Vec::new();
    for tok in rest.split_whitespace() {
        let (name, size) = tok
            .split_once('=')
            .ok_or_else(|| ParseError::SyntaxError(lno, format!("bad class token {tok:?}")))?;
        let n: u16 = size
            .parse()
            .map_err(|_| ParseError::SyntaxError(lno, format!("bad class size {size:?}")))?;
        if n == 0 {
            return Err(ParseError::SyntaxError(lno, format!("class {name:?} is empty")));
        }
        classes.push((name.to_string(), (1..=n).collect::<Vec<u16>>()));
    }
    if classes.len() == 1 {
        return Err(ParseError::SingleClassGraph);
    }
    PartitionedGraph::new(classes)
        .map_err(|e| ParseError::SyntaxError(lno, e.to_string()))
}

fn split_colon(rest: &str, lno: usize) -> Result<(&str, &str), ParseError> {
    rest.split_once(':')
        .ok_or_else(|| ParseError::SyntaxError(lno, "expected ':'".into()))
}

fn resolve_vertex(g: &PartitionedGraph, tok: &str, lno: usize) -> Result<Vertex, ParseError> {
    let split = tok.find(|c: char| c.is_ascii_digit());
    let (name, digits) = match split {
        Some(p) if p > 0 => tok.split_at(p),
        _ => return Err(ParseError::SyntaxError(lno, format!("bad vertex token {tok:?}"))),
    };
    let class = g
        .class_by_name(name)
        .ok_or_else(|| ParseError::UnknownVertex(lno, tok.to_string()))?;
    let index: u16 = digits
        .parse()
        .map_err(|_| ParseError::SyntaxError(lno, format!("bad vertex token {tok:?}")))?;
    let v = Vertex::new(class, index);
    if !g.contains(v) {
        return Err(ParseError::UnknownVertex(lno, tok.to_string()));
    }
    Ok(v)
}

fn resolve_edge_name(
    g: &PartitionedGraph,
    tok: &str,
    lno: usize,
) -> Result<(Vertex, Vertex), ParseError> {
    let (a, b) = tok
        .split_once('-')
        .ok_or_else(|| ParseError::SyntaxError(lno, format!("bad edge token {tok:?}")))?;
    Ok((resolve_vertex(g, a, lno)?, resolve_vertex(g, b, lno)?))
}

fn parse_entries(
    g: &PartitionedGraph,
    tail: &str,
    lno: usize,
) -> Result<Vec<CrossingEntry>, ParseError> {
    let mut entries = Vec::new();
    let mut toks = tail.split_whitespace().peekable();
    while let Some(tok) = toks.next() {
        if tok != "x" {
            return Err(ParseError::SyntaxError(lno, format!("expected 'x', found {tok:?}")));
        }
        let name = toks
            .next()
            .ok_or_else(|| ParseError::SyntaxError(lno, "missing partner edge".into()))?;
        let (u, w) = resolve_edge_name(g, name, lno)?;
        let partner =
            Edge::new(u, w).map_err(|_| ParseError::SameClassEdge(lno, name.to_string()))?;
        let open = toks
            .next()
            .ok_or_else(|| ParseError::SyntaxError(lno, "missing crossing rotation".into()))?;
        let mut labels = Vec::new();
        if let Some(stripped) = open.strip_prefix('[') {
            if !stripped.is_empty() {
                labels.push(stripped.to_string());
            }
        } else {
            return Err(ParseError::SyntaxError(lno, "expected '['".into()));
        }
        let mut closed = labels.last().map(|s| s.ends_with(']')).unwrap_or(false);
        while !closed {
            let tok = toks
                .next()
                .ok_or_else(|| ParseError::SyntaxError(lno, "unterminated '['".into()))?;
            labels.push(tok.to_string());
            closed = tok.ends_with(']');
        }
        if let Some(last) = labels.last_mut() {
            *last = last.trim_end_matches(']').to_string();
            if last.is_empty() {
                labels.pop();
            }
        }
        if labels.len() != 4 {
            return Err(ParseError::SyntaxError(lno, "crossing rotation needs 4 vertices".into()));
        }
        let mut seq = [Vertex::new(0, 0); 4];
        for (slot, name) in seq.iter_mut().zip(&labels) {
            *slot = resolve_vertex(g, name, lno)?;
        }
        entries.push((partner, CrossingRotation::new(seq)));
    }
    Ok(entries)
}

/// Parses a crossing-pair file: a `classes:` line followed by
/// `x u-v w-z` lines naming independent edge pairs.
pub fn parse_ce_file(
    text: &str,
) -> Result<(PartitionedGraph, std::collections::BTreeSet<crate::model::EdgePair>), ParseError> {
    let mut graph: Option<PartitionedGraph> = None;
    let mut ce = std::collections::BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let lno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("classes:") {
            if graph.is_some() {
                return Err(ParseError::SyntaxError(lno, "duplicate classes line".into()));
            }
            graph = Some(parse_classes(rest, lno)?);
            continue;
        }
        let g = graph
            .as_ref()
            .ok_or_else(|| ParseError::SyntaxError(lno, "expected classes line first".into()))?;
        let rest = line
            .strip_prefix("x ")
            .ok_or_else(|| ParseError::SyntaxError(lno, format!("unrecognized line {line:?}")))?;
        let names: Vec<&str> = rest.split_whitespace().collect();
        if names.len() != 2 {
            return Err(ParseError::SyntaxError(lno, "expected two edges".into()));
        }
        let mut edges = Vec::new();
        for name in names {
            let (u, w) = resolve_edge_name(g, name, lno)?;
            edges.push(
                Edge::new(u, w).map_err(|_| ParseError::SameClassEdge(lno, name.to_string()))?,
            );
        }
        if edges[0].shares_endpoint(&edges[1]) {
            return Err(ParseError::AdjacentEdgesCross(lno));
        }
        ce.insert(crate::model::EdgePair::new(edges[0], edges[1]));
    }
    let graph = graph.ok_or(ParseError::SyntaxError(0, "missing classes line".into()))?;
    Ok((graph, ce))
}

/// Serializes a drawing to canonical `.sdraw` text. The output is stable:
/// `parse_drawing(serialize(d)) == d`, and serializing a parsed canonical
/// file reproduces it byte for byte.
///
/// Drawings whose labels are not contiguous (e.g. induced subdrawings) are
/// written with compacted labels.
pub fn serialize(d: &Drawing) -> String {
    let g = d.graph();
    let compact = !g.is_contiguous();
    let name_of = |v: Vertex| -> String {
        if compact {
            let pos = g
                .class_indices(v.class)
                .iter()
                .position(|&i| i == v.index)
                .expect("vertex in graph");
            format!("{}{}", g.class_name(v.class), pos + 1)
        } else {
            g.vertex_name(v)
        }
    };
    let edge_of = |e: Edge| format!("{}-{}", name_of(e.source()), name_of(e.target()));

    let mut out = String::new();
    out.push_str("classes:");
    for c in 0..g.class_count() as u16 {
        out.push_str(&format!(" {}={}", g.class_name(c), g.class_size(c)));
    }
    out.push('\n');

    for v in g.vertices() {
        out.push_str(&format!("rot {}:", name_of(v)));
        for &u in d.rotation(v).as_slice() {
            out.push_str(&format!(" {}", name_of(u)));
        }
        out.push('\n');
    }

    for e in g.edges() {
        out.push_str(&format!("edge {}:", edge_of(e)));
        for (f, rot) in d.crossing_list(e) {
            out.push_str(&format!(" x {} [", edge_of(*f)));
            let arr = rot.as_array();
            for (k, &v) in arr.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                out.push_str(&name_of(v));
            }
            out.push(']');
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two-crossing drawing on classes r=2, b=3: rotations r1=(b1 b2 b3),
    /// r2=(b1 b3 b2); edge r2-b1 crosses r1-b3 and then r1-b2.
    pub const TWO_CROSSING_K23: &str = "\
classes: r=2 b=3
rot r1: b1 b2 b3
rot r2: b1 b3 b2
rot b1: r1 r2
rot b2: r1 r2
rot b3: r1 r2
edge r1-b1:
edge r1-b2: x r2-b1 [r1 b1 b2 r2]
edge r1-b3: x r2-b1 [r1 b1 b3 r2]
edge r2-b1: x r1-b3 [r1 b1 b3 r2] x r1-b2 [r1 b1 b2 r2]
edge r2-b2:
edge r2-b3:
";

    #[test]
    fn parses_two_crossing_drawing() {
        let d = parse_drawing(TWO_CROSSING_K23).unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.graph().vertex_count(), 5);
    }

    #[test]
    fn parses_plane_star() {
        let text = "\
classes: c=1 leaf=3
rot c1: leaf1 leaf2 leaf3
rot leaf1: c1
rot leaf2: c1
rot leaf3: c1
edge c1-leaf1:
edge c1-leaf2:
edge c1-leaf3:
";
        let d = parse_drawing(text).unwrap();
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn rejects_adjacent_crossing() {
        let text = "\
classes: r=1 b=3
rot r1: b1 b2 b3
rot b1: r1
rot b2: r1
rot b3: r1
edge r1-b1:
edge r1-b2: x r1-b3 [r1 b2 r1 b3]
edge r1-b3: x r1-b2 [r1 b2 r1 b3]
";
        match parse_drawing(text) {
            Err(ParseError::AdjacentEdgesCross(line)) => assert_eq!(line, 7),
            other => panic!("expected AdjacentEdgesCross, got {other:?}"),
        }
    }

    #[test]
    fn rejects_single_class() {
        assert_eq!(parse_drawing("classes: a=4\n"), Err(ParseError::SingleClassGraph));
    }

    #[test]
    fn rejects_reciprocity_violation() {
        let text = "\
classes: r=2 b=2
rot r1: b1 b2
rot r2: b1 b2
rot b1: r1 r2
rot b2: r1 r2
edge r1-b1:
edge r1-b2: x r2-b1 [r1 b1 b2 r2]
edge r2-b1:
edge r2-b2:
";
        assert!(matches!(parse_drawing(text), Err(ParseError::ReciprocityViolation(_))));
    }

    #[test]
    fn rejects_non_antipodal_rotation() {
        let text = "\
classes: r=2 b=2
rot r1: b1 b2
rot r2: b1 b2
rot b1: r1 r2
rot b2: r1 r2
edge r1-b1:
edge r1-b2: x r2-b1 [r1 b2 b1 r2]
edge r2-b1: x r1-b2 [r1 b2 b1 r2]
edge r2-b2:
";
        assert!(matches!(parse_drawing(text), Err(ParseError::NonAntipodalCrossing(_))));
    }

    #[test]
    fn round_trip_is_identity() {
        let d = parse_drawing(TWO_CROSSING_K23).unwrap();
        let text = serialize(&d);
        assert_eq!(text, TWO_CROSSING_K23);
        assert_eq!(parse_drawing(&text).unwrap(), d);
    }

    #[test]
    fn accepts_reversed_edge_header() {
        let text = TWO_CROSSING_K23.replace(
            "edge r2-b1: x r1-b3 [r1 b1 b3 r2] x r1-b2 [r1 b1 b2 r2]",
            "edge b1-r2: x r1-b2 [r1 b1 b2 r2] x r1-b3 [r1 b1 b3 r2]",
        );
        let d = parse_drawing(&text).unwrap();
        assert_eq!(d, parse_drawing(TWO_CROSSING_K23).unwrap());
    }
}
