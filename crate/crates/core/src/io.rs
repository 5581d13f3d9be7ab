//! JSON file formats.
//!
//! ```text
//! points: {"points": [[x, y], ...]}
//! grid:   {"xs": [...], "ys": [...]}
//! graph:  {"vertices": [[x, y], ...], "edges": [[i, j], ...], "steiner": [bool, ...]}
//! ```
//!
//! Numbers are written as the shortest decimal that parses back to the same
//! double, so a parse/serialize round trip is bit-exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Point, PointSet};
use crate::graph::GeometricGraph;
use crate::grid::Grid;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsDoc {
    points: Vec<[f64; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridDoc {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<[f64; 2]>,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    steiner: Option<Vec<bool>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum AnyDoc {
    Points(PointsDoc),
    Grid(GridDoc),
    Graph(GraphDoc),
}

/// Any of the three document kinds.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Points(PointSet),
    Grid(Grid),
    Graph(GeometricGraph),
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn to_points(raw: Vec<[f64; 2]>) -> Result<PointSet> {
    PointSet::new(raw.into_iter().map(|[x, y]| Point::new(x, y)).collect())
}

fn from_points(set: &PointSet) -> Vec<[f64; 2]> {
    set.points().iter().map(|p| [p.x, p.y]).collect()
}

pub fn parse_points(text: &str) -> Result<PointSet> {
    let doc: PointsDoc = serde_json::from_str(text).map_err(parse_err)?;
    to_points(doc.points)
}

pub fn parse_grid(text: &str) -> Result<Grid> {
    let doc: GridDoc = serde_json::from_str(text).map_err(parse_err)?;
    Grid::new(doc.xs, doc.ys)
}

fn graph_from_doc(doc: GraphDoc) -> Result<GeometricGraph> {
    let g = GeometricGraph::new(to_points(doc.vertices)?, doc.edges.into_iter().map(|[u, v]| (u, v)))?;
    match doc.steiner {
        Some(mask) => g.with_steiner(mask),
        None => Ok(g),
    }
}

pub fn parse_graph(text: &str) -> Result<GeometricGraph> {
    graph_from_doc(serde_json::from_str(text).map_err(parse_err)?)
}

/// Parses whichever document kind `text` holds.
pub fn parse_document(text: &str) -> Result<Document> {
    match serde_json::from_str(text).map_err(parse_err)? {
        AnyDoc::Points(d) => to_points(d.points).map(Document::Points),
        AnyDoc::Grid(d) => Grid::new(d.xs, d.ys).map(Document::Grid),
        AnyDoc::Graph(d) => graph_from_doc(d).map(Document::Graph),
    }
}

pub fn points_to_json(set: &PointSet) -> String {
    serde_json::to_string(&PointsDoc { points: from_points(set) }).expect("finite coordinates")
}

pub fn grid_to_json(grid: &Grid) -> String {
    serde_json::to_string(&GridDoc { xs: grid.xs().to_vec(), ys: grid.ys().to_vec() }).expect("finite coordinates")
}

pub fn graph_to_json(g: &GeometricGraph) -> String {
    let doc = GraphDoc {
        vertices: from_points(g.points()),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        steiner: g.steiner_mask().map(<[bool]>::to_vec),
    };
    serde_json::to_string(&doc).expect("finite coordinates")
}

pub fn document_to_json(doc: &Document) -> String {
    match doc {
        Document::Points(p) => points_to_json(p),
        Document::Grid(g) => grid_to_json(g),
        Document::Graph(g) => graph_to_json(g),
    }
}
