//! Degree-3 plane spanners for points in convex position.
//!
//! The hull is cut at a diametral pair into two chains, and the chains are
//! joined by a recursive closest-pair matching. Every vertex gets at most
//! one matching edge, so degrees stay at most 3 and the diametral endpoints
//! keep degree 2.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geom::{cmp_dist, convex_hull, diametral_pair, orientation, Orientation, PointSet};
use crate::graph::GeometricGraph;

/// An ordered polyline given by vertex indices into a [`PointSet`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Chain {
    pub vertices: Vec<usize>,
}

impl Chain {
    pub fn new(vertices: Vec<usize>) -> Self {
        Chain { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Upper bounds on chain stretch and graph stretch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StretchBound {
    pub tau: f64,
    pub t: f64,
}

impl StretchBound {
    /// The bound `2 tau + 1` guaranteed for two chains of stretch `tau`
    /// joined by [`matching`].
    pub fn double_chain(tau: f64) -> Self {
        assert!(tau >= 1.0, "chain stretch is at least 1");
        StretchBound { tau, t: 2.0 * tau + 1.0 }
    }
}

/// Checks that the chains are disjoint, their union is in convex position,
/// each chain is a contiguous arc of the union's hull traversed in order,
/// and the two arcs do not interleave.
fn validate_double_chain(c1: &Chain, c2: &Chain, set: &PointSet) -> Result<()> {
    let union: Vec<usize> = c1.vertices.iter().chain(&c2.vertices).copied().collect();
    if let Some(&bad) = union.iter().find(|&&v| v >= set.len()) {
        return Err(Error::InvalidChain(format!("vertex {bad} out of range")));
    }
    let sub = PointSet::new(union.iter().map(|&v| set[v]).collect())
        .map_err(|_| Error::InvalidChain("repeated vertex".into()))?;
    let hull = convex_hull(&sub);
    if hull.len() != sub.len() {
        return Err(Error::NotConvex);
    }
    let n = hull.len();
    let mut pos = vec![0; n];
    for (k, &local) in hull.iter().enumerate() {
        pos[local] = k;
    }
    let changes = (0..n)
        .filter(|&k| (hull[k] < c1.len()) != (hull[(k + 1) % n] < c1.len()))
        .count();
    if changes > 2 {
        return Err(Error::NotSeparated);
    }
    let mut offset = 0;
    for chain in [c1, c2] {
        if chain.len() >= 3 || (chain.len() == 2 && n > 2) {
            let steps: Vec<usize> = (offset..offset + chain.len() - 1)
                .map(|k| (pos[k + 1] + n - pos[k]) % n)
                .collect();
            if !(steps.iter().all(|&s| s == 1) || steps.iter().all(|&s| s == n - 1)) {
                return Err(Error::InvalidChain("vertices are not in convex order".into()));
            }
        }
        offset += chain.len();
    }
    Ok(())
}

/// Recursive closest-pair matching between two linearly separated chains
/// whose union is in convex position. Returned pairs are `(a, b)` with `a`
/// from `c1` and `b` from `c2`.
pub fn matching(c1: &Chain, c2: &Chain, set: &PointSet) -> Result<Vec<(usize, usize)>> {
    if c1.is_empty() || c2.is_empty() {
        return Ok(Vec::new());
    }
    validate_double_chain(c1, c2, set)?;
    let mut out = Vec::new();
    let mut stack = vec![(c1.vertices.clone(), c2.vertices.clone())];
    while let Some((top, bottom)) = stack.pop() {
        if top.is_empty() || bottom.is_empty() {
            continue;
        }
        let (a, b) = closest_between(&top, &bottom, set);
        out.push((a, b));
        let (pa, pb) = (set[a], set[b]);
        for side in [Orientation::CounterClockwise, Orientation::Clockwise] {
            let pick = |chain: &[usize], skip: usize| -> Vec<usize> {
                chain
                    .iter()
                    .copied()
                    .filter(|&v| v != skip && orientation(pa, pb, set[v]) == side)
                    .collect()
            };
            stack.push((pick(&top, a), pick(&bottom, b)));
        }
    }
    Ok(out)
}

/// Closest pair across the two lists; ties go to the smallest `(a, b)`.
fn closest_between(top: &[usize], bottom: &[usize], set: &PointSet) -> (usize, usize) {
    let mut best = (top[0], bottom[0]);
    for &a in top {
        for &b in bottom {
            let ord = cmp_dist(set[a], set[b], set[best.0], set[best.1]);
            if ord == Ordering::Less || (ord == Ordering::Equal && (a, b) < best) {
                best = (a, b);
            }
        }
    }
    best
}

/// The two chains joined by their matching.
pub fn double_chain_spanner(
    c1: &Chain,
    c2: &Chain,
    set: &PointSet,
) -> Result<(GeometricGraph, Vec<(usize, usize)>)> {
    let m = matching(c1, c2, set)?;
    let edges = c1.edges().chain(c2.edges()).chain(m.iter().copied());
    Ok((GeometricGraph::new(set.clone(), edges)?, m))
}

/// Hull edges plus the matching between the two chains left after removing
/// a diametral pair. Also returns that pair; one or two points give the
/// trivial graph and no pair for a single point.
pub fn build_convex_spanner(set: &PointSet) -> Result<(GeometricGraph, Option<(usize, usize)>)> {
    match set.len() {
        0 => return Err(Error::TooFew { needed: 1, got: 0 }),
        1 => return Ok((GeometricGraph::empty(set.clone()), None)),
        2 => return Ok((GeometricGraph::new(set.clone(), [(0, 1)])?, Some((0, 1)))),
        _ => {}
    }
    let hull = convex_hull(set);
    if hull.len() != set.len() {
        return Err(Error::NotConvex);
    }
    let (p, q) = diametral_pair(set)?;
    let n = hull.len();
    let at = |v: usize| hull.iter().position(|&h| h == v).expect("hull vertex");
    let (ip, iq) = (at(p), at(q));
    let arc = |from: usize, to: usize| -> Chain {
        let mut v = Vec::new();
        let mut k = (from + 1) % n;
        while k != to {
            v.push(hull[k]);
            k = (k + 1) % n;
        }
        Chain::new(v)
    };
    let c1 = arc(ip, iq);
    let c2 = arc(iq, ip);
    let m = matching(&c1, &c2, set)?;
    let hull_edges = (0..n).map(|k| (hull[k], hull[(k + 1) % n]));
    let g = GeometricGraph::new(set.clone(), hull_edges.chain(m))?;
    Ok((g, Some((p, q))))
}

/// Maximum over vertex pairs of along-chain distance over Euclidean
/// distance, with the first pair attaining it.
pub fn chain_stretch(chain: &Chain, set: &PointSet) -> Result<(f64, (usize, usize))> {
    let v = &chain.vertices;
    if v.len() < 2 {
        return Err(Error::TooFew { needed: 2, got: v.len() });
    }
    let mut prefix = Vec::with_capacity(v.len());
    prefix.push(0.0);
    for w in v.windows(2) {
        prefix.push(prefix.last().unwrap() + set[w[0]].dist(set[w[1]]));
    }
    let mut best = (f64::NEG_INFINITY, (v[0], v[1]));
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            let r = (prefix[j] - prefix[i]) / set[v[i]].dist(set[v[j]]);
            if r > best.0 {
                best = (r, (v[i], v[j]));
            }
        }
    }
    Ok(best)
}
