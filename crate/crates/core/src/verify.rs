//! Brute-force oracles: degree, planarity, stretch factor.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::segments_properly_intersect;
use crate::graph::GeometricGraph;

/// Summary of a graph's spanner properties.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpannerReport {
    pub max_degree: usize,
    pub is_plane: bool,
    /// First crossing edge pair, as vertex pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossing: Option<[[usize; 2]; 2]>,
    /// Stretch over the measured pairs; `None` if disconnected.
    pub stretch: Option<f64>,
    /// Pair attaining the stretch, or a disconnected pair.
    pub witness: Option<[usize; 2]>,
    pub connected: bool,
}

pub fn max_degree(g: &GeometricGraph) -> usize {
    g.degrees().into_iter().max().unwrap_or(0)
}

/// Returns `None` if the graph is plane, otherwise the lexicographically
/// smallest pair of edge indices whose segments intersect improperly.
pub fn find_crossing(g: &GeometricGraph) -> Option<(usize, usize)> {
    let m = g.edges().len();
    let segs: Vec<_> = (0..m).map(|e| g.segment(e)).collect();
    // Only pairs with overlapping x-extents can intersect.
    let mut by_xmin: Vec<usize> = (0..m).collect();
    let xmin = |e: usize| segs[e].a.x.min(segs[e].b.x);
    let xmax = |e: usize| segs[e].a.x.max(segs[e].b.x);
    by_xmin.sort_by(|&a, &b| xmin(a).total_cmp(&xmin(b)));
    let found: Option<(usize, usize)> = (0..m)
        .into_par_iter()
        .filter_map(|k| {
            let e = by_xmin[k];
            let hi = xmax(e);
            let mut best: Option<(usize, usize)> = None;
            for &f in &by_xmin[k + 1..] {
                if xmin(f) > hi {
                    break;
                }
                if segments_properly_intersect(&segs[e], &segs[f]) {
                    let pair = (e.min(f), e.max(f));
                    best = Some(best.map_or(pair, |b| b.min(pair)));
                }
            }
            best
        })
        .min();
    found
}

pub fn verify_planarity(g: &GeometricGraph) -> (bool, Option<(usize, usize)>) {
    match find_crossing(g) {
        None => (true, None),
        Some(pair) => (false, Some(pair)),
    }
}

#[derive(Clone, Copy, PartialEq)]
struct Dist(f64);

impl Eq for Dist {}

impl PartialOrd for Dist {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dist {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Single-source shortest-path distances; unreachable vertices get infinity.
pub fn shortest_paths(adj: &[Vec<(usize, f64)>], source: usize) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; adj.len()];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(Reverse((Dist(0.0), source)));
    while let Some(Reverse((Dist(d), u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &(v, w) in &adj[u] {
            let nd = d + w;
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Reverse((Dist(nd), v)));
            }
        }
    }
    dist
}

/// Shortest-path distance between two vertices.
pub fn graph_distance(g: &GeometricGraph, u: usize, v: usize) -> f64 {
    shortest_paths(&g.adjacency(), u)[v]
}

/// Maximum over pairs of `restrict_to` (all vertices by default) of graph
/// distance over Euclidean distance, with the lexicographically smallest
/// pair attaining it. Fewer than two measured vertices give stretch 1 and
/// no witness.
pub fn stretch_factor(
    g: &GeometricGraph,
    restrict_to: Option<&[usize]>,
) -> Result<(f64, Option<(usize, usize)>)> {
    let all: Vec<usize>;
    let mut targets: &[usize] = match restrict_to {
        Some(r) => r,
        None => {
            all = (0..g.num_vertices()).collect();
            &all
        }
    };
    let sorted: Vec<usize>;
    if targets.windows(2).any(|w| w[0] >= w[1]) {
        let mut s = targets.to_vec();
        s.sort_unstable();
        s.dedup();
        sorted = s;
        targets = &sorted;
    }
    let adj = g.adjacency();
    let pts = g.points();

    // Per source: the best (ratio, pair), or Err(disconnected pair).
    type Best = Option<(f64, (usize, usize))>;
    let per_source: Vec<std::result::Result<Best, (usize, usize)>> = targets
        .par_iter()
        .enumerate()
        .map(|(k, &u)| {
            if k + 1 == targets.len() {
                return Ok(None);
            }
            let dist = shortest_paths(&adj, u);
            let mut best: Option<(f64, (usize, usize))> = None;
            for &v in &targets[k + 1..] {
                if dist[v].is_infinite() {
                    return Err((u, v));
                }
                let ratio = dist[v] / pts[u].dist(pts[v]);
                if best.is_none_or(|(r, _)| ratio > r) {
                    best = Some((ratio, (u, v)));
                }
            }
            Ok(best)
        })
        .collect();

    let mut best: Option<(f64, (usize, usize))> = None;
    for r in per_source {
        match r {
            Err((u, v)) => return Err(Error::Disconnected(u, v)),
            Ok(Some((ratio, pair))) => {
                if best.is_none_or(|(b, _)| ratio > b) {
                    best = Some((ratio, pair));
                }
            }
            Ok(None) => {}
        }
    }
    Ok(match best {
        Some((r, pair)) => (r, Some(pair)),
        None => (1.0, None),
    })
}

/// Degree, planarity and stretch in one report. With `original_only`,
/// stretch is measured over non-Steiner vertices.
pub fn report(g: &GeometricGraph, original_only: bool) -> SpannerReport {
    let (is_plane, crossing) = verify_planarity(g);
    let crossing = crossing.map(|(e, f)| {
        let (a, b) = g.edges()[e];
        let (c, d) = g.edges()[f];
        [[a, b], [c, d]]
    });
    let restrict = original_only.then(|| g.original_vertices());
    let (stretch, witness, connected) = match stretch_factor(g, restrict.as_deref()) {
        Ok((s, w)) => (Some(s), w.map(|(u, v)| [u, v]), true),
        Err(Error::Disconnected(u, v)) => (None, Some([u, v]), false),
        Err(e) => unreachable!("stretch_factor only fails with Disconnected: {e}"),
    };
    SpannerReport { max_degree: max_degree(g), is_plane, crossing, stretch, witness, connected }
}
