//! File formats: graph JSON and DOT, coloring lines, and table rows.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use twotorus_core::cobordism::{legend, TableReport, TableRow};
use twotorus_core::dks::DksReport;
use twotorus_core::polytope::PrismStep;
use twotorus_core::{BitVec, ColoredGraph, Edge, PolytopeColoring, SimplexProduct};

use crate::parse::bitstring;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error(transparent)]
    Core(#[from] twotorus_core::Error),
}

fn line_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Line { line, message: message.into() }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GraphDoc {
    pub n: usize,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VertexDoc {
    pub id: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct EdgeDoc {
    pub u: usize,
    pub v: usize,
    pub color: String,
}

pub fn graph_to_json(g: &ColoredGraph) -> String {
    let n = g.dim();
    let doc = GraphDoc {
        n,
        vertices: (0..g.vertex_count()).map(|id| VertexDoc { id }).collect(),
        edges: g.edges().map(|e| EdgeDoc { u: e.u, v: e.v, color: bitstring(e.color, n) }).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph documents serialize")
}

/// Read a graph document. Vertex ids must be `0..len` in any order.
pub fn graph_from_json(text: &str) -> Result<ColoredGraph, FormatError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let count = doc.vertices.len();
    let mut seen = vec![false; count];
    for v in &doc.vertices {
        if v.id >= count || std::mem::replace(&mut seen[v.id], true) {
            return Err(twotorus_core::Error::MalformedGraph(format!("vertex ids must be 0..{count}")).into());
        }
    }
    let edges = doc
        .edges
        .iter()
        .map(|e| {
            let color = BitVec::parse(&e.color)?;
            if color.dim() != doc.n {
                return Err(twotorus_core::Error::DimensionMismatch { expected: doc.n, found: color.dim() });
            }
            Ok(Edge { u: e.u, v: e.v, color: color.bits() })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ColoredGraph::from_edges(doc.n, count, &edges)?)
}

/// Undirected DOT with monomial vertex labels and bit-string edge labels.
pub fn graph_to_dot(g: &ColoredGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let mut label = String::new();
        twotorus_core::algebra::write_monomial(&mut label, twotorus_core::Side::Character, &g.vertex_monomial(v))
            .expect("writing to a string");
        writeln!(out, "  {v} [label=\"{label}\"];").unwrap();
    }
    for e in g.edges() {
        writeln!(out, "  {} -- {} [label=\"{}\"];", e.u, e.v, bitstring(e.color, g.dim())).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Parse one coloring line:
/// `parts=2,2; (0,0)=#1000; (0,1)=#0100; ...`.
/// Every facet must be colored exactly once; `line` is used in errors.
pub fn parse_coloring_line(text: &str, line: usize) -> Result<(SimplexProduct, PolytopeColoring), FormatError> {
    let mut fields = text.split(';').map(str::trim).filter(|f| !f.is_empty());
    let head = fields.next().ok_or_else(|| line_error(line, "empty coloring"))?;
    let parts = head
        .strip_prefix("parts=")
        .ok_or_else(|| line_error(line, "expected parts=..."))?
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| line_error(line, format!("bad part {p:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let polytope = SimplexProduct::new(parts)?;
    let mut colors: Vec<Option<u16>> = vec![None; polytope.facet_count()];
    let mut n = None;
    for field in fields {
        let (key, value) = field.split_once('=').ok_or_else(|| line_error(line, format!("expected key=value in {field:?}")))?;
        let key = key.trim();
        let inner = key
            .strip_prefix('(')
            .and_then(|k| k.strip_suffix(')'))
            .ok_or_else(|| line_error(line, format!("bad facet key {key:?}")))?;
        let (i, f) = inner.split_once(',').ok_or_else(|| line_error(line, format!("bad facet key {key:?}")))?;
        let (i, f) = match (i.trim().parse::<usize>(), f.trim().parse::<usize>()) {
            (Ok(i), Ok(f)) => (i, f),
            _ => return Err(line_error(line, format!("bad facet key {key:?}"))),
        };
        let idx = polytope.facet_index(i, f).ok_or_else(|| line_error(line, format!("no facet {key}")))?;
        let bits = value.trim().strip_prefix('#').ok_or_else(|| line_error(line, "colors are written #bits"))?;
        let color = BitVec::parse(bits).map_err(|e| line_error(line, e.to_string()))?;
        if *n.get_or_insert(color.dim()) != color.dim() {
            return Err(line_error(line, "colors have different lengths"));
        }
        if colors[idx].replace(color.bits()).is_some() {
            return Err(line_error(line, format!("facet {key} colored twice")));
        }
    }
    let colors = colors
        .into_iter()
        .enumerate()
        .map(|(k, c)| c.ok_or_else(|| line_error(line, format!("facet {:?} is not colored", polytope.facets()[k]))))
        .collect::<Result<Vec<_>, _>>()?;
    let n = n.ok_or_else(|| line_error(line, "no colors given"))?;
    Ok((polytope, PolytopeColoring::new(n, colors)?))
}

/// Parse every non-blank, non-comment line of a coloring file.
pub fn parse_colorings(text: &str) -> Result<Vec<(SimplexProduct, PolytopeColoring)>, FormatError> {
    content_lines(text).map(|(line, body)| parse_coloring_line(body, line)).collect()
}

pub fn write_coloring_line(p: &SimplexProduct, lambda: &PolytopeColoring) -> String {
    let parts: Vec<String> = p.parts().iter().map(|k| k.to_string()).collect();
    let mut out = format!("parts={}", parts.join(","));
    for (k, (i, f)) in p.facets().into_iter().enumerate() {
        write!(out, "; ({i},{f})=#{}", bitstring(lambda.color(k), lambda.dim())).unwrap();
    }
    out
}

/// Table rows such as `(1; 6; 7; 2; 5)`. Separators may be `;`, `,` or
/// whitespace; parentheses are optional; lines starting with `#` are skipped.
/// Each row must hold `n + 2` legend indices in `1..2^n`.
pub fn parse_table(text: &str, n: usize) -> Result<Vec<TableRow>, FormatError> {
    content_lines(text)
        .map(|(line, body)| {
            let body = body.trim();
            let body = body.strip_prefix('(').unwrap_or(body);
            let body = body.strip_suffix(')').unwrap_or(body);
            let indices = body
                .split(|c: char| c == ';' || c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| line_error(line, format!("bad index {t:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if indices.len() != n + 2 {
                return Err(line_error(line, format!("expected {} indices, found {}", n + 2, indices.len())));
            }
            if let Some(k) = indices.iter().find(|&&k| legend(n, k).is_none()) {
                return Err(line_error(line, format!("x{k} is outside the legend for n = {n}")));
            }
            Ok(TableRow::new(indices))
        })
        .collect()
}

/// Non-blank lines not starting with `#`, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn table_report_json(r: &TableReport) -> Value {
    json!({
        "count": r.count,
        "independent": r.independent,
        "span_dim": r.span_dim,
        "matches_dim_Vn": r.matches_dim_vn,
        "first_dependency": r.first_dependency,
        "all_cycles": r.all_cycles,
        "all_faithful": r.all_faithful,
    })
}

pub fn dks_report_json(r: &DksReport) -> Value {
    json!({
        "degree_checked": r.degree_checked,
        "results": r.results.iter().map(|d| json!({"mu": d.mu, "polynomial": d.polynomial})).collect::<Vec<_>>(),
        "certified_nonmember": r.certified_nonmember,
    })
}

pub fn prism_path_json(steps: &[PrismStep]) -> Value {
    let side = twotorus_core::Side::Cocharacter;
    let mono = |m: &twotorus_core::Monomial| {
        let mut s = String::new();
        twotorus_core::algebra::write_monomial(&mut s, side, m).expect("writing to a string");
        s
    };
    Value::Array(
        steps
            .iter()
            .map(|s| {
                json!({
                    "coloring": write_coloring_line(&s.polytope, &s.coloring),
                    "from": mono(&s.from),
                    "to": mono(&s.to),
                    "turn": mono(&s.turn),
                    "from_vertex": s.from_vertex,
                    "to_vertex": s.to_vertex,
                    "turn_vertex": s.turn_vertex,
                })
            })
            .collect(),
    )
}
