//! Instance and coloring file formats.
//!
//! Text instances are line oriented: a header `n m`, then `m` lines `u v`
//! with 0-based vertex ids, then optionally `crossings k` followed by `k`
//! lines `i j` of edge indices. `#` starts a comment. The JSON mirror is
//! `{"vertex_count": n, "edges": [[u,v],...], "crossings": [[i,j],...]}`
//! with the same meaning; the `crossings` key is present exactly when the
//! instance carries a drawing. Emission is canonical, so emit∘parse is the
//! identity on canonical text modulo comments.
//!
//! Coloring files are lines `edge_id color`, one per edge.

use matchlift_core::{Drawing, Error as CoreError, Graph};
use thiserror::Error;

/// Parse failures, split into shape problems and meaning problems.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: syntax: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {message}")]
    Semantic { line: usize, message: String },
    #[error("invalid JSON instance: {message}")]
    Json { message: String },
}

impl ParseError {
    fn syntax(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            message: message.into(),
        }
    }

    fn semantic(line: usize, message: impl Into<String>) -> Self {
        ParseError::Semantic {
            line,
            message: message.into(),
        }
    }
}

/// Numbered non-comment lines; the payload has comments and blanks removed.
fn data_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((i + 1, line))
        })
        .collect()
}

fn parse_two(line_no: usize, line: &str, what: &str) -> Result<(usize, usize), ParseError> {
    let mut it = line.split_whitespace();
    let a = it
        .next()
        .ok_or_else(|| ParseError::syntax(line_no, format!("expected {what}")))?;
    let b = it
        .next()
        .ok_or_else(|| ParseError::syntax(line_no, format!("expected two values for {what}")))?;
    if it.next().is_some() {
        return Err(ParseError::syntax(
            line_no,
            format!("trailing tokens after {what}"),
        ));
    }
    let a = a
        .parse()
        .map_err(|_| ParseError::syntax(line_no, format!("bad integer `{a}`")))?;
    let b = b
        .parse()
        .map_err(|_| ParseError::syntax(line_no, format!("bad integer `{b}`")))?;
    Ok((a, b))
}

/// Parses a text or JSON instance, sniffing JSON by a leading `{`.
pub fn parse_instance(text: &str) -> Result<(Graph, Option<Drawing>), ParseError> {
    if text.trim_start().starts_with('{') {
        parse_instance_json(text)
    } else {
        parse_instance_text(text)
    }
}

pub fn parse_instance_text(text: &str) -> Result<(Graph, Option<Drawing>), ParseError> {
    let lines = data_lines(text);
    let mut pos = 0;
    let next = |pos: &mut usize| -> Option<(usize, &str)> {
        let item = lines.get(*pos).copied();
        *pos += 1;
        item
    };
    let (header_no, header) =
        next(&mut pos).ok_or_else(|| ParseError::syntax(1, "empty instance"))?;
    let (n, m) = parse_two(header_no, header, "header `n m`")?;
    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = next(&mut pos)
            .ok_or_else(|| ParseError::syntax(header_no, format!("expected {m} edge lines")))?;
        let (u, v) = parse_two(line_no, line, "edge `u v`")?;
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::semantic(
                    line_no,
                    format!("vertex {w} out of range for {n} vertices"),
                ));
            }
        }
        if u == v {
            return Err(ParseError::semantic(line_no, format!("loop at vertex {u}")));
        }
        let key = (u.min(v), u.max(v));
        if edges.contains(&key) {
            return Err(ParseError::semantic(
                line_no,
                format!("duplicate edge {u} {v}"),
            ));
        }
        edges.push(key);
        edge_lines.push(line_no);
    }
    let graph = Graph::new(n, &edges).expect("edges validated above");
    let drawing = match next(&mut pos) {
        None => None,
        Some((line_no, line)) => {
            let mut it = line.split_whitespace();
            if it.next() != Some("crossings") {
                return Err(ParseError::syntax(
                    line_no,
                    "expected `crossings k` or end of file",
                ));
            }
            let k: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| ParseError::syntax(line_no, "bad crossing count"))?;
            let mut pairs = Vec::with_capacity(k);
            let mut pair_lines = Vec::with_capacity(k);
            for _ in 0..k {
                let (pl, pline) = next(&mut pos).ok_or_else(|| {
                    ParseError::syntax(line_no, format!("expected {k} crossing lines"))
                })?;
                let (i, j) = parse_two(pl, pline, "crossing `i j`")?;
                for e in [i, j] {
                    if e >= m {
                        return Err(ParseError::semantic(
                            pl,
                            format!("edge index {e} out of range for {m} edges"),
                        ));
                    }
                }
                pairs.push((i, j));
                pair_lines.push(pl);
            }
            Some(build_drawing(&graph, pairs, &pair_lines)?)
        }
    };
    if let Some((line_no, _)) = next(&mut pos) {
        return Err(ParseError::syntax(line_no, "trailing content"));
    }
    Ok((graph, drawing))
}

fn build_drawing(
    graph: &Graph,
    pairs: Vec<(usize, usize)>,
    pair_lines: &[usize],
) -> Result<Drawing, ParseError> {
    Drawing::new(graph, pairs.iter().copied()).map_err(|err| {
        let culprit = |e: usize, f: usize| {
            pairs
                .iter()
                .position(|&(a, b)| (a.min(b), a.max(b)) == (e.min(f), e.max(f)))
                .map(|i| pair_lines[i])
                .unwrap_or(pair_lines[0])
        };
        let line = match &err {
            CoreError::CrossingSharesEndpoint { e, f, .. } => culprit(*e, *f),
            CoreError::NotDistinctEdges { .. } | CoreError::CrossingEdgeReused { .. } => {
                pair_lines.last().copied().unwrap_or(1)
            }
            _ => pair_lines.first().copied().unwrap_or(1),
        };
        ParseError::semantic(line, err.to_string())
    })
}

pub fn parse_instance_json(text: &str) -> Result<(Graph, Option<Drawing>), ParseError> {
    let json_err = |message: String| ParseError::Json { message };
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| json_err(e.to_string()))?;
    let n = value
        .get("vertex_count")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| json_err("missing integer `vertex_count`".into()))? as usize;
    let pair_list = |key: &str| -> Result<Option<Vec<(usize, usize)>>, ParseError> {
        match value.get(key) {
            None => Ok(None),
            Some(list) => {
                let arr = list
                    .as_array()
                    .ok_or_else(|| json_err(format!("`{key}` must be an array")))?;
                let mut out = Vec::with_capacity(arr.len());
                for item in arr {
                    let pair = item
                        .as_array()
                        .filter(|p| p.len() == 2)
                        .and_then(|p| Some((p[0].as_u64()?, p[1].as_u64()?)))
                        .ok_or_else(|| json_err(format!("`{key}` entries are pairs")))?;
                    out.push((pair.0 as usize, pair.1 as usize));
                }
                Ok(Some(out))
            }
        }
    };
    let edges = pair_list("edges")?.ok_or_else(|| json_err("missing `edges`".into()))?;
    let graph =
        Graph::new(n, &edges).map_err(|e| ParseError::semantic(1, e.to_string()))?;
    let drawing = match pair_list("crossings")? {
        None => None,
        Some(pairs) => Some(
            Drawing::new(&graph, pairs)
                .map_err(|e| ParseError::semantic(1, e.to_string()))?,
        ),
    };
    Ok((graph, drawing))
}

/// Canonical text emission: endpoints ascending within each line, edges in
/// id order, the crossings section present exactly when a drawing is.
pub fn emit_instance_text(graph: &Graph, drawing: Option<&Drawing>) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", graph.vertex_count(), graph.edge_count()));
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    if let Some(d) = drawing {
        out.push_str(&format!("crossings {}\n", d.pairs().len()));
        for &(e, f) in d.pairs() {
            out.push_str(&format!("{e} {f}\n"));
        }
    }
    out
}

pub fn emit_instance_json(graph: &Graph, drawing: Option<&Drawing>) -> String {
    let edges: Vec<serde_json::Value> = graph
        .edges()
        .iter()
        .map(|&(u, v)| serde_json::json!([u, v]))
        .collect();
    let mut obj = serde_json::Map::new();
    obj.insert("vertex_count".into(), graph.vertex_count().into());
    obj.insert("edges".into(), edges.into());
    if let Some(d) = drawing {
        let pairs: Vec<serde_json::Value> = d
            .pairs()
            .iter()
            .map(|&(e, f)| serde_json::json!([e, f]))
            .collect();
        obj.insert("crossings".into(), pairs.into());
    }
    let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(obj))
        .expect("instance serializes");
    text.push('\n');
    text
}

/// Parses a coloring file (`edge_id color` lines) into a possibly partial
/// assignment over `edge_count` edges.
pub fn parse_coloring(text: &str, edge_count: usize) -> Result<Vec<Option<usize>>, ParseError> {
    let mut assignment = vec![None; edge_count];
    for (line_no, line) in data_lines(text) {
        let (e, c) = parse_two(line_no, line, "coloring `edge color`")?;
        if e >= edge_count {
            return Err(ParseError::semantic(
                line_no,
                format!("edge {e} out of range for {edge_count} edges"),
            ));
        }
        if assignment[e].is_some() {
            return Err(ParseError::semantic(
                line_no,
                format!("edge {e} colored twice"),
            ));
        }
        assignment[e] = Some(c);
    }
    Ok(assignment)
}

pub fn emit_coloring(colors: &[usize]) -> String {
    let mut out = String::new();
    for (e, c) in colors.iter().enumerate() {
        out.push_str(&format!("{e} {c}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_triangle() {
        let (g, d) = parse_instance("3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(d.is_none());
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# a triangle\n\n3 3\n0 1 # first\n1 2\n2 0\n";
        let (g, _) = parse_instance(text).unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn crossings_section_round_trips() {
        let text = "4 4\n0 1\n1 2\n2 3\n0 3\nconsumed";
        assert!(parse_instance(text).is_err());
        let text = "4 4\n0 1\n1 2\n2 3\n0 3\ncrossings 1\n0 2\n";
        let (g, d) = parse_instance(text).unwrap();
        let emitted = emit_instance_text(&g, d.as_ref());
        assert_eq!(emitted, text);
        let again = parse_instance(&emitted).unwrap();
        assert_eq!(again.0, g);
        assert_eq!(again.1, d);
    }

    #[test]
    fn syntax_and_semantics_are_distinguished() {
        assert!(matches!(
            parse_instance("2 1\n0 x\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_instance("2 1\n0 5\n"),
            Err(ParseError::Semantic { line: 2, .. })
        ));
        assert!(matches!(
            parse_instance("3 2\n0 1\n0 1\n"),
            Err(ParseError::Semantic { line: 3, .. })
        ));
        // Crossing pair sharing an endpoint is a semantic error.
        assert!(matches!(
            parse_instance("3 2\n0 1\n1 2\ncrossings 1\n0 1\n"),
            Err(ParseError::Semantic { line: 5, .. })
        ));
    }

    #[test]
    fn json_mirror_round_trips() {
        let (g, d) =
            parse_instance("4 4\n0 1\n1 2\n2 3\n0 3\ncrossings 1\n0 2\n").unwrap();
        let json = emit_instance_json(&g, d.as_ref());
        let (g2, d2) = parse_instance(&json).unwrap();
        assert_eq!(g, g2);
        assert_eq!(d, d2);
    }

    #[test]
    fn coloring_files_parse() {
        let a = parse_coloring("0 4\n2 1\n", 3).unwrap();
        assert_eq!(a, vec![Some(4), None, Some(1)]);
        assert!(parse_coloring("7 0\n", 3).is_err());
        assert!(parse_coloring("0 1\n0 2\n", 3).is_err());
    }
}
