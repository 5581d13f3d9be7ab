use crate::error::{Error, Result};
use crate::geom::{Point, PointSet, Segment};

/// Vertices with coordinates and an undirected straight-line edge set.
///
/// Edges are stored as `(min, max)` pairs, sorted and free of duplicates.
/// `steiner` marks auxiliary vertices; `None` means every vertex is an
/// original point.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricGraph {
    points: PointSet,
    edges: Vec<(usize, usize)>,
    steiner: Option<Vec<bool>>,
}

impl GeometricGraph {
    pub fn new(points: PointSet, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = points.len();
        let mut out = Vec::new();
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(GeometricGraph { points, edges: out, steiner: None })
    }

    /// Graph without edges.
    pub fn empty(points: PointSet) -> Self {
        GeometricGraph { points, edges: Vec::new(), steiner: None }
    }

    pub fn with_steiner(mut self, mask: Vec<bool>) -> Result<Self> {
        if mask.len() != self.points.len() {
            return Err(Error::Parse(format!(
                "steiner mask has {} entries for {} vertices",
                mask.len(),
                self.points.len()
            )));
        }
        self.steiner = Some(mask);
        Ok(self)
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn num_vertices(&self) -> usize {
        self.points.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn steiner_mask(&self) -> Option<&[bool]> {
        self.steiner.as_deref()
    }

    pub fn is_steiner(&self, i: usize) -> bool {
        self.steiner.as_ref().is_some_and(|m| m[i])
    }

    /// Indices of the non-Steiner vertices.
    pub fn original_vertices(&self) -> Vec<usize> {
        (0..self.num_vertices()).filter(|&i| !self.is_steiner(i)).collect()
    }

    pub fn segment(&self, e: usize) -> Segment {
        let (u, v) = self.edges[e];
        Segment::new(self.points[u], self.points[v])
    }

    pub fn edge_length(&self, e: usize) -> f64 {
        let (u, v) = self.edges[e];
        self.points[u].dist(self.points[v])
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Weighted adjacency lists, neighbours in increasing index order.
    pub fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.num_vertices()];
        for &(u, v) in &self.edges {
            let w = self.points[u].dist(self.points[v]);
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        for list in &mut adj {
            list.sort_by_key(|&(v, _)| v);
        }
        adj
    }

    /// The same vertices with `other` edges added.
    pub fn with_edges(&self, extra: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = GeometricGraph::new(
            self.points.clone(),
            self.edges.iter().copied().chain(extra),
        )?;
        g.steiner = self.steiner.clone();
        Ok(g)
    }
}
