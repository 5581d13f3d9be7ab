//! Degree-3 plane spanner for a non-uniform rectangular grid.
//!
//! Internal grid edges are split into red and blue staircases. All red
//! edges are dropped, which leaves every internal vertex with degree 2;
//! red edges are then re-inserted slab by slab, narrowest slab first,
//! whenever both endpoints still have degree 2.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geom::{Point, PointSet};
use crate::graph::GeometricGraph;
use crate::verify::shortest_paths;

/// `rows()` horizontal lines at `ys` and `cols()` vertical lines at `xs`.
/// Vertex `(r, c)` (0-based row from the bottom, column from the left) sits
/// at `(xs[c], ys[r])` and has index `r * cols() + c`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    xs: Vec<f64>,
    ys: Vec<f64>,
}

impl Grid {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        let ok = |v: &[f64]| {
            !v.is_empty() && v.iter().all(|x| x.is_finite()) && v.windows(2).all(|w| w[0] < w[1])
        };
        if !ok(&xs) || !ok(&ys) {
            return Err(Error::GridNotMonotone);
        }
        Ok(Grid { xs, ys })
    }

    /// Grid with unit spacing.
    pub fn uniform(rows: usize, cols: usize) -> Result<Self> {
        Grid::new((0..cols).map(|c| c as f64).collect(), (0..rows).map(|r| r as f64).collect())
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn rows(&self) -> usize {
        self.ys.len()
    }

    pub fn cols(&self) -> usize {
        self.xs.len()
    }

    pub fn index(&self, row: usize, col: usize) -> usize {
        row * self.cols() + col
    }

    pub fn position(&self, v: usize) -> (usize, usize) {
        (v / self.cols(), v % self.cols())
    }

    pub fn point(&self, row: usize, col: usize) -> Point {
        Point::new(self.xs[col], self.ys[row])
    }

    pub fn is_boundary(&self, row: usize, col: usize) -> bool {
        row == 0 || col == 0 || row + 1 == self.rows() || col + 1 == self.cols()
    }

    pub fn point_set(&self) -> PointSet {
        let pts = (0..self.rows())
            .flat_map(|r| (0..self.cols()).map(move |c| (r, c)))
            .map(|(r, c)| self.point(r, c))
            .collect();
        PointSet::new(pts).expect("grid points are distinct")
    }

    /// Every edge of the full grid, each `(lower/left, upper/right)`.
    pub fn lattice_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                if c + 1 < self.cols() {
                    edges.push((self.index(r, c), self.index(r, c + 1)));
                }
                if r + 1 < self.rows() {
                    edges.push((self.index(r, c), self.index(r + 1, c)));
                }
            }
        }
        edges
    }

    /// The full grid graph (maximum degree 4, stretch at most sqrt 2).
    pub fn lattice(&self) -> GeometricGraph {
        GeometricGraph::new(self.point_set(), self.lattice_edges()).expect("valid lattice")
    }

    /// Horizontal slabs first, then vertical ones.
    pub fn slabs(&self) -> Vec<Slab> {
        let h = self.ys.windows(2).enumerate().map(|(i, w)| Slab {
            kind: SlabKind::Horizontal,
            index: i,
            width: w[1] - w[0],
        });
        let v = self.xs.windows(2).enumerate().map(|(j, w)| Slab {
            kind: SlabKind::Vertical,
            index: j,
            width: w[1] - w[0],
        });
        h.chain(v).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SlabKind {
    Horizontal,
    Vertical,
}

/// The strip between two consecutive parallel grid lines. A horizontal
/// slab `index` lies between rows `index` and `index + 1` and contains the
/// vertical edges spanning it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slab {
    pub kind: SlabKind,
    pub index: usize,
    pub width: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeColor {
    Red,
    Blue,
    Boundary,
}

/// Red/blue/boundary colouring of every lattice edge.
///
/// An internal edge is red iff its lower (or left) endpoint has row and
/// column of equal parity; each internal vertex then meets exactly two red
/// and two blue edges.
pub fn classify_edges(grid: &Grid) -> Result<HashMap<(usize, usize), EdgeColor>> {
    if grid.rows() < 3 || grid.cols() < 3 {
        return Err(Error::GridTooSmall { rows: grid.rows(), cols: grid.cols() });
    }
    let mut colors = HashMap::new();
    for (u, v) in grid.lattice_edges() {
        let (r, c) = grid.position(u);
        let (r2, c2) = grid.position(v);
        let color = if grid.is_boundary(r, c) && grid.is_boundary(r2, c2) {
            EdgeColor::Boundary
        } else if r % 2 == c % 2 {
            EdgeColor::Red
        } else {
            EdgeColor::Blue
        };
        colors.insert((u, v), color);
    }
    Ok(colors)
}

/// Orders the red edges are visited in: slabs by (width, horizontal before
/// vertical, index); left to right inside a horizontal slab, bottom-up
/// inside a vertical one. `reverse_within` flips the in-slab order.
fn sweep_order(grid: &Grid, colors: &HashMap<(usize, usize), EdgeColor>, reverse_within: bool) -> Vec<(usize, usize)> {
    let mut slabs = grid.slabs();
    slabs.sort_by(|a, b| {
        a.width
            .total_cmp(&b.width)
            .then(a.kind.cmp(&b.kind))
            .then(a.index.cmp(&b.index))
    });
    let mut order = Vec::new();
    for slab in slabs {
        let mut in_slab: Vec<(usize, usize)> = match slab.kind {
            SlabKind::Horizontal => (0..grid.cols())
                .map(|c| (grid.index(slab.index, c), grid.index(slab.index + 1, c)))
                .collect(),
            SlabKind::Vertical => (0..grid.rows())
                .map(|r| (grid.index(r, slab.index), grid.index(r, slab.index + 1)))
                .collect(),
        };
        in_slab.retain(|e| colors.get(e) == Some(&EdgeColor::Red));
        if reverse_within {
            in_slab.reverse();
        }
        order.extend(in_slab);
    }
    order
}

/// Grid spanner of maximum degree 3. Grids with at most two rows or columns
/// are returned unchanged.
pub fn build_grid_spanner(grid: &Grid) -> GeometricGraph {
    build_grid_spanner_with_order(grid, false)
}

/// As [`build_grid_spanner`], optionally scanning each slab's red edges in
/// reverse.
pub fn build_grid_spanner_with_order(grid: &Grid, reverse_within: bool) -> GeometricGraph {
    let Ok(colors) = classify_edges(grid) else {
        return grid.lattice();
    };
    let mut kept: Vec<(usize, usize)> = grid
        .lattice_edges()
        .into_iter()
        .filter(|e| colors[e] != EdgeColor::Red)
        .collect();
    let mut degree = vec![0usize; grid.rows() * grid.cols()];
    for &(u, v) in &kept {
        degree[u] += 1;
        degree[v] += 1;
    }
    for (u, v) in sweep_order(grid, &colors, reverse_within) {
        if degree[u] == 2 && degree[v] == 2 {
            kept.push((u, v));
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    GeometricGraph::new(grid.point_set(), kept).expect("lattice edges are valid")
}

/// Red edges absent from `spanner`, each with its shortest-path distance in
/// `spanner` divided by its length.
pub fn missing_edge_detours(grid: &Grid, spanner: &GeometricGraph) -> Result<Vec<((usize, usize), f64)>> {
    let colors = classify_edges(grid)?;
    let mut missing: Vec<(usize, usize)> = colors
        .iter()
        .filter(|&(&(u, v), &c)| c == EdgeColor::Red && !spanner.has_edge(u, v))
        .map(|(&e, _)| e)
        .collect();
    missing.sort_unstable();
    let adj = spanner.adjacency();
    Ok(missing
        .into_iter()
        .map(|(u, v)| {
            let d = shortest_paths(&adj, u)[v];
            ((u, v), d / spanner.point(u).dist(spanner.point(v)))
        })
        .collect())
}
