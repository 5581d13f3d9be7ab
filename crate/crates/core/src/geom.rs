//! Planar primitives.
//!
//! Every predicate that decides a sign (orientation, distance comparison,
//! disk membership) runs a floating-point filter first and falls back to
//! exact rational arithmetic on the input doubles when the filter cannot
//! certify the sign.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn dist2(self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

/// A finite set of pairwise distinct points with finite coordinates.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut seen: HashMap<(u64, u64), usize> = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFinite { index: i });
            }
            // +0.0 normalizes -0.0 so both zeros collide
            let key = ((p.x + 0.0).to_bits(), (p.y + 0.0).to_bits());
            if let Some(&first) = seen.get(&key) {
                return Err(Error::Coincident { first, second: i });
            }
            seen.insert(key, i);
        }
        Ok(PointSet { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn into_inner(self) -> Vec<Point> {
        self.points
    }
}

impl std::ops::Index<usize> for PointSet {
    type Output = Point;

    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        debug_assert!(a != b, "degenerate segment");
        Segment { a, b }
    }
}

/// Intersection of the two closed disks of radius |pq| centred at p and q.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lune {
    pub p: Point,
    pub q: Point,
}

/// Closed disk with diameter pq.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub p: Point,
    pub q: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
            Ordering::Greater => Orientation::CounterClockwise,
        }
    }
}

const EPS: f64 = f64::EPSILON * 0.5;
// Shewchuk's ccwerrboundA.
const CCW_ERR_BOUND: f64 = (3.0 + 16.0 * EPS) * EPS;
// Relative error of dx*dx + dy*dy including the rounded differences is
// below 4 eps; 16 eps leaves room for the subtraction of the two sums.
const DIST_ERR_BOUND: f64 = 16.0 * EPS;

fn rat(v: f64) -> BigRational {
    BigRational::from_float(v).expect("finite coordinate")
}

fn sign_of(r: &BigRational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if *r.numer() > BigInt::zero() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Sign of (b - a) x (c - a).
pub fn orientation(a: Point, b: Point, c: Point) -> Orientation {
    let left = (b.x - a.x) * (c.y - a.y);
    let right = (b.y - a.y) * (c.x - a.x);
    let det = left - right;
    let bound = CCW_ERR_BOUND * (left.abs() + right.abs());
    if det > bound {
        return Orientation::CounterClockwise;
    }
    if -det > bound {
        return Orientation::Clockwise;
    }
    Orientation::from_ordering(exact_orientation(a, b, c))
}

fn exact_orientation(a: Point, b: Point, c: Point) -> Ordering {
    let (ax, ay) = (rat(a.x), rat(a.y));
    let det = (rat(b.x) - &ax) * (rat(c.y) - &ay) - (rat(b.y) - &ay) * (rat(c.x) - &ax);
    sign_of(&det)
}

fn exact_dist2(a: Point, b: Point) -> BigRational {
    let dx = rat(a.x) - rat(b.x);
    let dy = rat(a.y) - rat(b.y);
    &dx * &dx + &dy * &dy
}

/// Exact comparison of |ab|^2 with |cd|^2.
pub fn cmp_dist(a: Point, b: Point, c: Point, d: Point) -> Ordering {
    let l = a.dist2(b);
    let r = c.dist2(d);
    let bound = DIST_ERR_BOUND * (l + r);
    if l - r > bound {
        return Ordering::Greater;
    }
    if r - l > bound {
        return Ordering::Less;
    }
    exact_dist2(a, b).cmp(&exact_dist2(c, d))
}

/// Exact sign of the dot product (u - o) . (v - o).
fn dot_sign(o: Point, u: Point, v: Point) -> Ordering {
    let l = (u.x - o.x) * (v.x - o.x);
    let r = (u.y - o.y) * (v.y - o.y);
    let s = l + r;
    let bound = CCW_ERR_BOUND * (l.abs() + r.abs());
    if s > bound {
        return Ordering::Greater;
    }
    if -s > bound {
        return Ordering::Less;
    }
    let (ox, oy) = (rat(o.x), rat(o.y));
    let dot = (rat(u.x) - &ox) * (rat(v.x) - &ox) + (rat(u.y) - &oy) * (rat(v.y) - &oy);
    sign_of(&dot)
}

fn lex_cmp(a: Point, b: Point) -> Ordering {
    a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y))
}

/// Indices of the hull vertices in counterclockwise order, starting from
/// the lexicographically smallest point. Points interior to hull edges are
/// not reported.
pub fn convex_hull(set: &PointSet) -> Vec<usize> {
    let pts = set.points();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&i, &j| lex_cmp(pts[i], pts[j]));
    if order.len() <= 2 {
        return order;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
    // lower hull, then upper hull
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2 {
                let a = pts[hull[hull.len() - 2]];
                let b = pts[hull[hull.len() - 1]];
                if orientation(a, b, pts[i]) == Orientation::CounterClockwise {
                    break;
                }
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

/// True iff every point is a vertex of the hull (strict convexity).
pub fn is_convex_position(set: &PointSet) -> bool {
    convex_hull(set).len() == set.len()
}

/// A pair realizing the diameter; ties go to the lexicographically smallest
/// `(i, j)` with `i < j`.
pub fn diametral_pair(set: &PointSet) -> Result<(usize, usize)> {
    extreme_pair(set, Ordering::Greater)
}

/// The closest pair `(i, j)` with `i < j` and its distance; ties go to the
/// lexicographically smallest pair.
pub fn closest_pair(set: &PointSet) -> Result<(usize, usize, f64)> {
    let (i, j) = extreme_pair(set, Ordering::Less)?;
    Ok((i, j, set[i].dist(set[j])))
}

fn extreme_pair(set: &PointSet, better: Ordering) -> Result<(usize, usize)> {
    let pts = set.points();
    if pts.len() < 2 {
        return Err(Error::TooFew { needed: 2, got: pts.len() });
    }
    let mut best = (0, 1);
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            if (i, j) == (0, 1) {
                continue;
            }
            if cmp_dist(pts[i], pts[j], pts[best.0], pts[best.1]) == better {
                best = (i, j);
            }
        }
    }
    Ok(best)
}

impl Lune {
    pub fn new(p: Point, q: Point) -> Self {
        debug_assert!(p != q);
        Lune { p, q }
    }

    pub fn contains(&self, c: Point) -> bool {
        lune_contains(self, c)
    }
}

impl Disk {
    pub fn new(p: Point, q: Point) -> Self {
        debug_assert!(p != q);
        Disk { p, q }
    }

    pub fn contains(&self, c: Point) -> bool {
        disk_contains(self, c)
    }
}

pub fn lune_contains(lune: &Lune, c: Point) -> bool {
    let (p, q) = (lune.p, lune.q);
    cmp_dist(c, p, p, q) != Ordering::Greater && cmp_dist(c, q, p, q) != Ordering::Greater
}

/// c lies in the closed disk with diameter pq iff the angle pcq is at least
/// a right angle, i.e. (p - c) . (q - c) <= 0.
pub fn disk_contains(disk: &Disk, c: Point) -> bool {
    dot_sign(c, disk.p, disk.q) != Ordering::Greater
}

fn on_closed_segment(a: Point, b: Point, c: Point) -> bool {
    // c is collinear with ab; check the bounding box.
    c.x >= a.x.min(b.x) && c.x <= a.x.max(b.x) && c.y >= a.y.min(b.y) && c.y <= a.y.max(b.y)
}

/// True iff the segments share any point other than a single common
/// endpoint.
pub fn segments_properly_intersect(s1: &Segment, s2: &Segment) -> bool {
    let (a, b, c, d) = (s1.a, s1.b, s2.a, s2.b);
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        return collinear_overlap(a, b, c, d);
    }
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    let shared = a == c || a == d || b == c || b == d;
    if shared {
        // not all collinear, so the only common point is the shared endpoint
        return false;
    }
    if o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear
        && o3 != Orientation::Collinear && o4 != Orientation::Collinear
    {
        return true;
    }
    (o1 == Orientation::Collinear && on_closed_segment(a, b, c))
        || (o2 == Orientation::Collinear && on_closed_segment(a, b, d))
        || (o3 == Orientation::Collinear && on_closed_segment(c, d, a))
        || (o4 == Orientation::Collinear && on_closed_segment(c, d, b))
}

fn collinear_overlap(a: Point, b: Point, c: Point, d: Point) -> bool {
    // Sort each segment's endpoints along the common line.
    let (a, b) = if lex_cmp(a, b) == Ordering::Greater { (b, a) } else { (a, b) };
    let (c, d) = if lex_cmp(c, d) == Ordering::Greater { (d, c) } else { (c, d) };
    let lo = if lex_cmp(a, c) == Ordering::Greater { a } else { c };
    let hi = if lex_cmp(b, d) == Ordering::Less { b } else { d };
    match lex_cmp(lo, hi) {
        Ordering::Greater => false,
        Ordering::Less => true,
        // touching in a single point: allowed only as a common endpoint
        Ordering::Equal => !((lo == a || lo == b) && (lo == c || lo == d)),
    }
}

/// True iff, relative to the centroid, every point has a partner within
/// `tol` of its reflection.
pub fn is_centrally_symmetric(set: &PointSet, tol: f64) -> bool {
    let pts = set.points();
    if pts.is_empty() {
        return true;
    }
    let n = pts.len() as f64;
    let cx = pts.iter().map(|p| p.x).sum::<f64>() / n;
    let cy = pts.iter().map(|p| p.y).sum::<f64>() / n;
    let centred: Vec<Point> = pts.iter().map(|p| Point::new(p.x - cx, p.y - cy)).collect();
    let tol2 = tol * tol;
    centred.iter().all(|p| {
        centred
            .iter()
            .any(|q| Point::new(-p.x, -p.y).dist2(*q) <= tol2)
    })
}

/// Symmetry test with the default tolerance of 1e-9 times the diameter.
pub fn is_centrally_symmetric_default(set: &PointSet) -> bool {
    let tol = match diametral_pair(set) {
        Ok((i, j)) => 1e-9 * set[i].dist(set[j]),
        Err(_) => 0.0,
    };
    is_centrally_symmetric(set, tol)
}

/// The angle at `b` in the triangle abc, in [0, pi].
pub fn angle(a: Point, b: Point, c: Point) -> f64 {
    let (ux, uy) = (a.x - b.x, a.y - b.y);
    let (vx, vy) = (c.x - b.x, c.y - b.y);
    (ux * vy - uy * vx).abs().atan2(ux * vx + uy * vy)
}
