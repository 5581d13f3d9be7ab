//! Degree reduction with Steiner points.
//!
//! Every original vertex `p` is surrounded by a small circle. Each incident
//! edge is cut where it crosses the circle, the crossings plus one extra
//! point `p'` are joined into a ring of chords, and `p` itself keeps a
//! single spoke to `p'`. Distances between original vertices grow by at
//! most `epsilon * CP` in total, where CP is the closest-pair distance.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::geom::{closest_pair, Point, PointSet};
use crate::graph::GeometricGraph;
use crate::verify::find_crossing;

/// Minimum spacing between two Steiner points on one circle.
const MIN_SEPARATION: f64 = 1e-12;
/// Radius halvings tried before giving up.
const MAX_HALVINGS: u32 = 40;
/// Ring chords spanning an angle this close to pi or more are dropped:
/// they would pass through (or numerically next to) the centre.
const MAX_CHORD_ANGLE: f64 = PI - 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteinerConfig {
    pub epsilon: f64,
    /// Closest-pair distance of the original points.
    pub cp: f64,
    /// `epsilon * cp`.
    pub eps_prime: f64,
    /// Circle radius actually used; `eps_prime / (pi n)` unless halved.
    pub radius: f64,
}

impl SteinerConfig {
    pub fn new(epsilon: f64, cp: f64, n: usize) -> Self {
        let eps_prime = epsilon * cp;
        SteinerConfig { epsilon, cp, eps_prime, radius: eps_prime / (PI * n as f64) }
    }
}

/// Number of Steiner points for `n` vertices of total degree
/// `total_degree`, checked against `7n - 12`.
pub fn count_bound(n: usize, total_degree: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::TooFew { needed: 3, got: n });
    }
    if total_degree > 6 * n - 12 {
        return Err(Error::DegreeBoundViolated { n, total_degree });
    }
    let count = total_degree + n;
    debug_assert!(count <= 7 * n - 12);
    Ok(count)
}

pub fn augment_to_degree3(g: &GeometricGraph, epsilon: f64) -> Result<GeometricGraph> {
    augment_to_degree3_with_config(g, epsilon).map(|(out, _)| out)
}

/// Output vertices `0..n` are the input vertices; Steiner points follow and
/// are flagged in the steiner mask.
pub fn augment_to_degree3_with_config(
    g: &GeometricGraph,
    epsilon: f64,
) -> Result<(GeometricGraph, SteinerConfig)> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::Spec(format!("epsilon must be positive, got {epsilon}")));
    }
    if let Some((e, f)) = find_crossing(g) {
        return Err(Error::NotPlane(e, f));
    }
    let n = g.num_vertices();
    let (_, _, cp) = closest_pair(g.points())?;
    let mut config = SteinerConfig::new(epsilon, cp, n);
    let clearance = edge_clearance(g);

    let mut radius = config.radius.min(cp / 3.0 * (1.0 - 1e-9));
    for _ in 0..=MAX_HALVINGS {
        if clearance.iter().all(|&c| c > 2.0 * radius) {
            if let Some(out) = try_build(g, radius) {
                config.radius = radius;
                return Ok((out, config));
            }
        }
        radius *= 0.5;
    }
    // Report the first vertex whose circle is still crowded.
    let vertex = (0..n)
        .find(|&p| ring_points(g, p, radius).is_none() || clearance[p] <= 2.0 * radius)
        .unwrap_or(0);
    Err(Error::RadiusCollision { vertex })
}

/// For every vertex, its distance to the nearest edge not incident on it.
fn edge_clearance(g: &GeometricGraph) -> Vec<f64> {
    (0..g.num_vertices())
        .map(|p| {
            let pt = g.point(p);
            g.edges()
                .iter()
                .filter(|&&(u, v)| u != p && v != p)
                .map(|&(u, v)| point_segment_dist(pt, g.point(u), g.point(v)))
                .fold(f64::INFINITY, f64::min)
        })
        .collect()
}

fn point_segment_dist(p: Point, a: Point, b: Point) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0);
    p.dist(Point::new(a.x + t * dx, a.y + t * dy))
}

/// A point on the circle around an original vertex.
#[derive(Debug, Clone, Copy)]
struct RingPoint {
    angle: f64,
    pos: Point,
    /// Neighbour whose edge crosses here; `None` for `p'`.
    towards: Option<usize>,
}

/// The circle points around `p` sorted by angle, or `None` if two of them
/// are closer than [`MIN_SEPARATION`].
fn ring_points(g: &GeometricGraph, p: usize, radius: f64) -> Option<Vec<RingPoint>> {
    let c = g.point(p);
    let mut ring: Vec<RingPoint> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| match (u == p, v == p) {
            (true, _) => Some(v),
            (_, true) => Some(u),
            _ => None,
        })
        .map(|q| {
            let d = g.point(q);
            let len = c.dist(d);
            let pos = Point::new(c.x + radius * (d.x - c.x) / len, c.y + radius * (d.y - c.y) / len);
            let angle = (d.y - c.y).atan2(d.x - c.x).rem_euclid(TAU);
            RingPoint { angle, pos, towards: Some(q) }
        })
        .collect();
    ring.sort_by(|a, b| a.angle.total_cmp(&b.angle));

    let extra_angle = match ring.len() {
        0 => 0.0,
        1 => ring[0].angle + PI / 2.0,
        k => {
            // midpoint of the largest angular gap, first one on ties
            let mut best = (f64::NEG_INFINITY, 0.0);
            for i in 0..k {
                let a = ring[i].angle;
                let b = if i + 1 < k { ring[i + 1].angle } else { ring[0].angle + TAU };
                if b - a > best.0 {
                    best = (b - a, a + (b - a) / 2.0);
                }
            }
            best.1
        }
    }
    .rem_euclid(TAU);
    ring.push(RingPoint {
        angle: extra_angle,
        pos: Point::new(c.x + radius * extra_angle.cos(), c.y + radius * extra_angle.sin()),
        towards: None,
    });
    ring.sort_by(|a, b| a.angle.total_cmp(&b.angle));

    let k = ring.len();
    if k > 1 {
        for i in 0..k {
            let (a, b) = (ring[i].pos, ring[(i + 1) % k].pos);
            if a.dist(b) < MIN_SEPARATION || a == c {
                return None;
            }
        }
    }
    Some(ring)
}

fn try_build(g: &GeometricGraph, radius: f64) -> Option<GeometricGraph> {
    let n = g.num_vertices();
    let mut points: Vec<Point> = g.points().points().to_vec();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // crossing[(p, q)] = Steiner vertex on p's circle for edge pq
    let mut crossing = std::collections::HashMap::new();

    for p in 0..n {
        let ring = ring_points(g, p, radius)?;
        let base = points.len();
        points.extend(ring.iter().map(|r| r.pos));
        let k = ring.len();
        for (i, r) in ring.iter().enumerate() {
            match r.towards {
                Some(q) => {
                    crossing.insert((p, q), base + i);
                }
                None => edges.push((p, base + i)),
            }
        }
        if k > 1 {
            for i in 0..k {
                let j = (i + 1) % k;
                let span = if j == 0 { ring[0].angle + TAU - ring[i].angle } else { ring[j].angle - ring[i].angle };
                if span < MAX_CHORD_ANGLE {
                    edges.push((base + i, base + j));
                }
            }
        }
    }
    for &(u, v) in g.edges() {
        edges.push((crossing[&(u, v)], crossing[&(v, u)]));
    }
    let mut mask = vec![false; n];
    mask.resize(points.len(), true);
    let set = PointSet::new(points).ok()?;
    GeometricGraph::new(set, edges).ok()?.with_steiner(mask).ok()
}
